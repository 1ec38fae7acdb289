"""Tensor products of seed representations: coproduct actions, isotypic
decomposition into fixed-subalgebra components, projectors and the classical
parity oracle.

Basis convention: index p = i * dim2 + j for v_i (x) w_j; the weight of a
product vector is the sum of the factor weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .liealg import inner, is_dominant, wadd
from .qrep import Representation
from .scalars import QSample

Q = Fraction


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True)
class TensorModule:
    rep1: Representation
    rep2: Representation
    dim: int
    weights: tuple

    @classmethod
    def of(cls, rep1, rep2):
        if rep1.spec is not rep2.spec and rep1.spec != rep2.spec:
            raise ValueError("tensor factors must share a family spec")
        weights = tuple(wadd(w1, w2) for w1 in rep1.weights for w2 in rep2.weights)
        return cls(rep1, rep2, rep1.dim * rep2.dim, weights)

    @property
    def spec(self):
        return self.rep1.spec

    def weight_blocks(self):
        blocks = {}
        for p, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(p)
        return blocks


def _kron(a, b):
    da, db = len(a), len(b)
    out = linalg.zeros(da * db, da * db) if da == len(a[0]) else None
    n1, n2 = len(a), len(b)
    out = linalg.zeros(n1 * n2, len(a[0]) * len(b[0]))
    for i in range(n1):
        for k in range(len(a[0])):
            c = a[i][k]
            if not c:
                continue
            for j in range(n2):
                for t in range(len(b[0])):
                    if b[j][t]:
                        out[i * n2 + j][k * n2 + t] = c * b[j][t]
    return out


def _diag_kron(d1, d2):
    """Kronecker product of two diagonals, as a diagonal list."""
    return [a * b for a in d1 for b in d2]


def _mul_diag_left(d, m):
    return [[d[i] * x for x in row] for i, row in enumerate(m)]


def _mul_diag_right(m, d):
    return [[x * d[j] for j, x in enumerate(row)] for row in m]


def coproduct_action(T: TensorModule, kind: str, i: int, qs: QSample,
                     u=None, transpose=False):
    """Matrix of Delta^u (or the opposite coproduct Delta^{T,u}) on the
    product basis.

    kind is one of "e", "f", "qh+", "qh-".  The spectral parameter u enters
    only for i == 0 (factor u on e0, 1/u on f0, acting on the first leg).
    """
    r1, r2 = T.rep1, T.rep2
    if kind in ("qh+", "qh-"):
        sign = 1 if kind == "qh+" else -1
        diag = _diag_kron(r1.qh_half_diag(i, qs, sign), r2.qh_half_diag(i, qs, sign))
        m = linalg.zeros(T.dim, T.dim)
        for p in range(T.dim):
            m[p][p] = diag[p]
        return m
    x1 = r1.e[i] if kind == "e" else r1.f[i]
    x2 = r2.e[i] if kind == "e" else r2.f[i]
    scale = Q(1)
    if i == 0 and u is not None:
        scale = u if kind == "e" else 1 / u
    d1p = r1.qh_half_diag(i, qs, +1)
    d1m = r1.qh_half_diag(i, qs, -1)
    d2p = r2.qh_half_diag(i, qs, +1)
    d2m = r2.qh_half_diag(i, qs, -1)
    id1 = linalg.identity(r1.dim)
    id2 = linalg.identity(r2.dim)

    def diag_mat(d):
        m = linalg.zeros(len(d), len(d))
        for p in range(len(d)):
            m[p][p] = d[p]
        return m

    if not transpose:
        # Delta(x) = q^{-h/2} (x) x + x (x) q^{h/2}, first-leg term scaled by u
        t1 = _kron(linalg.mat_scale(x1, scale), diag_mat(d2p))
        t2 = _kron(diag_mat(d1m), x2)
    else:
        # Delta^T(x) = x (x) q^{-h/2} + q^{h/2} (x) x
        t1 = _kron(linalg.mat_scale(x1, scale), diag_mat(d2m))
        t2 = _kron(diag_mat(d1p), x2)
    return linalg.mat_add(t1, t2)


def classical_coproduct(T: TensorModule, kind: str, i: int):
    """x (x) 1 + 1 (x) x with the classical (= undeformed) generator matrices."""
    r1, r2 = T.rep1, T.rep2
    x1 = r1.e[i] if kind == "e" else r1.f[i]
    x2 = r2.e[i] if kind == "e" else r2.f[i]
    return linalg.mat_add(_kron(x1, linalg.identity(r2.dim)),
                          _kron(linalg.identity(r1.dim), x2))


def permutation_operator(T: TensorModule):
    if T.rep1.dim != T.rep2.dim:
        raise ValueError("swap needs equal factor dimensions")
    d = T.rep1.dim
    m = linalg.zeros(T.dim, T.dim)
    for i in range(d):
        for j in range(d):
            m[i * d + j][j * d + i] = Q(1)
    return m


@dataclass
class IsotypicComponent:
    nu: tuple
    basis: list          # list of coordinate vectors spanning V0(nu)
    projector: list | None = None

    @property
    def dim(self):
        return len(self.basis)


@dataclass
class IsotypicDecomposition:
    module: TensorModule
    components: list     # IsotypicComponent, sorted by (casimir, weight) desc

    def component(self, nu):
        for c in self.components:
            if c.nu == nu:
                return c
        raise KeyError(nu)

    def projectors(self):
        return {c.nu: c.projector for c in self.components}


def _decompose_with(T: TensorModule, raising, lowering):
    """Shared decomposition engine given the l raising/lowering actions."""
    spec = T.spec
    l = spec.l
    blocks = T.weight_blocks()
    components = []
    for eta, idxs in sorted(blocks.items(), reverse=True):
        # rows of the stacked raising maps restricted to this weight space
        rows = []
        for m in raising:
            cols = {}
            for p in idxs:
                for r in range(T.dim):
                    if m[r][p]:
                        cols.setdefault(r, {})[p] = m[r][p]
            for r, entries in sorted(cols.items()):
                rows.append([entries.get(p, Q(0)) for p in idxs])
        kern = linalg.kernel_basis(rows or [[Q(0)] * len(idxs)], ncols=len(idxs))
        for vec in kern:
            if not is_dominant(spec.l0type, eta):
                raise DecompositionError(
                    f"highest weight vector at non-dominant weight {eta}")
            full = [Q(0)] * T.dim
            for p, c in zip(idxs, vec):
                full[p] = c
            components.append(IsotypicComponent(eta, [full]))
    seen = {}
    for c in components:
        if c.nu in seen:
            raise DecompositionError(f"multiplicity >= 2 at component {c.nu}")
        seen[c.nu] = c
    # generate each component by lowering from its highest weight vector
    total = 0
    for c in components:
        space = linalg.RowSpace(T.dim)
        space.add(c.basis[0])
        frontier = [c.basis[0]]
        vectors = [c.basis[0]]
        while frontier:
            nxt = []
            for v in frontier:
                for m in lowering:
                    w = linalg.mat_vec(m, v)
                    if any(w) and space.add(w):
                        nxt.append(w)
                        vectors.append(w)
            frontier = nxt
        c.basis = vectors
        total += len(vectors)
    if total != T.dim:
        raise DecompositionError(
            f"component dimensions sum to {total}, expected {T.dim}")
    # projectors from the adapted basis
    cols = []
    spans = []
    for c in components:
        start = len(cols)
        cols.extend(c.basis)
        spans.append((c, start, len(cols)))
    B = linalg.transpose(cols)
    Binv = linalg.invert(B)
    for c, start, stop in spans:
        proj = linalg.zeros(T.dim, T.dim)
        for i in range(T.dim):
            for j in range(T.dim):
                proj[i][j] = sum(B[i][t] * Binv[t][j] for t in range(start, stop))
        c.projector = proj
    return IsotypicDecomposition(T, components)


def decompose(T: TensorModule, qs: QSample) -> IsotypicDecomposition:
    """Isotypic decomposition under the quantum fixed subalgebra at sample w."""
    l = T.spec.l
    raising = [coproduct_action(T, "e", i, qs) for i in range(1, l + 1)]
    lowering = [coproduct_action(T, "f", i, qs) for i in range(1, l + 1)]
    return _decompose_with(T, raising, lowering)


def decompose_classical(T: TensorModule) -> IsotypicDecomposition:
    l = T.spec.l
    raising = [classical_coproduct(T, "e", i) for i in range(1, l + 1)]
    lowering = [classical_coproduct(T, "f", i) for i in range(1, l + 1)]
    return _decompose_with(T, raising, lowering)


def classical_parity_signs(T: TensorModule):
    """Parity (symmetric / antisymmetric square membership) of each component
    for lambda = mu, read off from the permutation operator at q = 1."""
    if T.rep1.lam != T.rep2.lam:
        raise ValueError("parity oracle needs lambda = mu")
    dec = decompose_classical(T)
    P = permutation_operator(T)
    signs = {}
    for c in dec.components:
        eig = None
        for v in c.basis:
            pv = linalg.mat_vec(P, v)
            for s in (1, -1):
                if all(x == s * y for x, y in zip(pv, v)):
                    break
            else:
                raise DecompositionError(
                    f"component {c.nu} mixes symmetry classes")
            if eig is None:
                eig = s
            elif eig != s:
                raise DecompositionError(
                    f"component {c.nu} mixes symmetry classes")
        signs[c.nu] = eig
    return signs
