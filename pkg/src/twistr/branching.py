"""Closed-form tensor decompositions, L-parent bookkeeping and the
theta0-tensor containment test.

The closed forms follow the family-by-family branching rules; every table can
be cross-checked against an independent brute-force oracle built from weight
multisets (Freudenthal recursion + character convolution + highest-weight
stripping).

L-parent identifiers group the fixed-subalgebra components that sit inside one
irreducible module of the big algebra L; relative parities on the tensor
product graph are constant on parent classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import (FamilySpec, eps, fundamental_weight, inner, is_dominant,
                     positive_roots, wadd, weyl_dim, weyl_vector, wscale, wsub)

Q = Fraction


class BranchingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Weight multisets (Freudenthal) and the brute-force tensor oracle
# ---------------------------------------------------------------------------

def simple_roots(l0type, l):
    out = [wsub(eps(i, l), eps(i + 1, l)) for i in range(1, l)]
    out.append(eps(l, l) if l0type == "B" else wscale(eps(l, l), Q(2)))
    return out


def weight_multiset(l0type, l, nu):
    """{weight: multiplicity} for the irreducible module V0(nu)."""
    if not is_dominant(l0type, nu):
        raise BranchingError(f"{nu} not dominant")
    rho = weyl_vector(l0type, l)
    pos = positive_roots(l0type, l)
    simple = simple_roots(l0type, l)
    top_c = inner(wadd(nu, rho), wadd(nu, rho))
    mult = {nu: 1}
    frontier = [nu]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in simple:
                cand = wsub(mu, alpha)
                if cand in mult:
                    continue
                shifted = wadd(cand, rho)
                denom = top_c - inner(shifted, shifted)
                if denom <= 0:
                    continue
                acc = Q(0)
                for beta in pos:
                    k = 1
                    while True:
                        up = wadd(cand, wscale(beta, Q(k)))
                        m = mult.get(up, 0)
                        if m == 0 and inner(wadd(up, rho), wadd(up, rho)) > top_c:
                            break
                        if m:
                            acc += m * inner(up, beta)
                        k += 1
                m = 2 * acc / denom
                assert m.denominator == 1
                m = int(m)
                if m > 0:
                    mult[cand] = m
                    nxt.append(cand)
        frontier = nxt
    return mult


def brute_force_tensor(l0type, l, lam, mu):
    """{nu: multiplicity} of V0(lam) (x) V0(mu) by character convolution and
    repeated stripping of maximal dominant weights."""
    wl = weight_multiset(l0type, l, lam)
    wm = weight_multiset(l0type, l, mu)
    prod = {}
    for a, ma in wl.items():
        for b, mb in wm.items():
            w = wadd(a, b)
            prod[w] = prod.get(w, 0) + ma * mb
    rho = weyl_vector(l0type, l)
    out = {}
    while True:
        best = None
        for w, m in prod.items():
            if m == 0:
                continue
            key = (inner(w, rho), w)
            if best is None or key > best[0]:
                best = (key, w, m)
        if best is None:
            return out
        _, top, m = best
        if not is_dominant(l0type, top) or m < 0:
            raise BranchingError(f"stripping failed at {top} (mult {m})")
        out[top] = m
        for w, mw in weight_multiset(l0type, l, top).items():
            prod[w] = prod.get(w, 0) - m * mw


# ---------------------------------------------------------------------------
# theta0-module weights and Klimyk containment
# ---------------------------------------------------------------------------

def theta0_weights(spec: FamilySpec):
    """Weight multiset of V0(theta0), built from the vector module:
    Sym^2(vector) - singlet for B_l / 2*lambda1, Alt^2(vector) - singlet for
    C_l / lambda2, and the vector itself for the d2 family."""
    l = spec.l
    if spec.family == "d2":
        wts = {eps(i, l): 1 for i in range(1, l + 1)}
        for i in range(1, l + 1):
            wts[wscale(eps(i, l), Q(-1))] = 1
        wts[tuple([Q(0)] * l)] = 1
        return wts
    vec = [eps(i, l) for i in range(1, l + 1)]
    vec += [wscale(v, Q(-1)) for v in vec]
    if spec.family == "a2even":
        vec.append(tuple([Q(0)] * l))
        pairs = [(i, j) for i in range(len(vec)) for j in range(i, len(vec))]
    else:
        pairs = [(i, j) for i in range(len(vec)) for j in range(i + 1, len(vec))]
    wts = {}
    for i, j in pairs:
        w = wadd(vec[i], vec[j])
        wts[w] = wts.get(w, 0) + 1
    zero = tuple([Q(0)] * l)
    wts[zero] -= 1
    if not wts[zero]:
        del wts[zero]
    return wts


def _dominant_reflection(x):
    """Reflect x into the dominant chamber of the signed-permutation Weyl
    group; returns (dominant, det) or None if x is on a wall."""
    vals = []
    sign = 1
    for c in x:
        if c == 0:
            return None
        if c < 0:
            sign = -sign
            c = -c
        vals.append(c)
    if len(set(vals)) != len(vals):
        return None
    order = sorted(range(len(vals)), key=lambda i: vals[i], reverse=True)
    # parity of the sorting permutation
    perm = list(order)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return tuple(vals[i] for i in order), sign


def klimyk_tensor_with(l0type, l, weights, nu):
    """Signed Klimyk accumulation: multiplicities of components of
    M (x) V0(nu) where M has the given weight multiset."""
    rho = weyl_vector(l0type, l)
    out = {}
    for phi, m in weights.items():
        x = wadd(wadd(nu, phi), rho)
        ref = _dominant_reflection(x)
        if ref is None:
            continue
        dom, det = ref
        cand = wsub(dom, rho)
        out[cand] = out.get(cand, 0) + det * m
    return {w: m for w, m in out.items() if m}


def contains_in_theta_tensor(spec: FamilySpec, nu, nup) -> bool:
    """True iff V0(nup) occurs in V0(theta0) (x) V0(nu)."""
    mults = klimyk_tensor_with(spec.l0type, spec.l, theta0_weights(spec), nu)
    m = mults.get(tuple(nup), 0)
    if m < 0:
        raise BranchingError("negative Klimyk multiplicity")
    return m > 0


# ---------------------------------------------------------------------------
# Closed-form decompositions with L-parents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    nu: tuple
    parent: tuple      # hashable L-parent identifier
    dim: int


@dataclass(frozen=True)
class BranchingTable:
    family: str
    l: int
    params: tuple      # (k, r) or (a, b)
    components: tuple  # Component, deterministic order

    def parent_classes(self):
        classes = {}
        for c in self.components:
            classes.setdefault(c.parent, []).append(c.nu)
        return classes

    def nus(self):
        return [c.nu for c in self.components]


def _lam_cd(l, c, d):
    """lambda_c + lambda_d as an eps tuple (c <= d <= l), gl-style lambdas."""
    return tuple(Q(2) if i < c else (Q(1) if i < d else Q(0)) for i in range(l))


def decompose_tensor_closed_form(spec: FamilySpec, params) -> BranchingTable:
    if not spec.admissible(params):
        raise BranchingError(f"inadmissible weights {params} for {spec.family}")
    k, r = params
    if k > r:
        raise BranchingError("parameters must satisfy k <= r (a <= b)")
    l, n = spec.l, spec.n
    comps = []
    if spec.family == "a2even":
        for a in range(k + 1):
            b = k + r - a
            parent = ("L", a, b)
            for c in range(a + 1):
                m = k + r - 2 * a + c
                d = min(m, n - m)
                nu = _lam_cd(l, c, d)
                comps.append(Component(nu, parent, weyl_dim("B", l, nu)))
    elif spec.family == "a2odd":
        for a in range(k + 1):
            b = k + r - 2 * a
            parent = ("L", b, a)
            for c in range(a + 1):
                nu = tuple(Q(b + c) if i == 0 else (Q(c) if i == 1 else Q(0))
                           for i in range(l))
                comps.append(Component(nu, parent, weyl_dim("C", l, nu)))
    else:
        a, b = k, r
        shift = Q(b - a, 2)
        for Lam in _ladders(l, a):
            nu = tuple(Q(x) + shift for x in Lam)
            comps.append(Component(nu, _d2_parent(l, a, Lam), weyl_dim("B", l, nu)))
    seen = set()
    for c in comps:
        if c.nu in seen:
            raise BranchingError(f"multiplicity >= 2 at {c.nu}")
        seen.add(c.nu)
    comps.sort(key=lambda c: c.nu, reverse=True)
    table = BranchingTable(spec.family, l, tuple(params), tuple(comps))
    d1, d2 = _factor_dims(spec, params)
    if sum(c.dim for c in comps) != d1 * d2:
        raise BranchingError("dimension sum mismatch")
    return table


def _ladders(l, a):
    out = []

    def rec(prefix, hi):
        if len(prefix) == l:
            out.append(tuple(prefix))
            return
        for v in range(hi, -1, -1):
            rec(prefix + [v], v)
    rec([], a)
    return out


def _d2_parent(l, a, Lam):
    """The so(2l+2) parent weight by the interleave rule (Lam_0 = a)."""
    padded = (a,) + tuple(Lam)
    hat = []
    for i in range(1, l + 2):
        hat.append(padded[i - 1] if (i + l) % 2 == 1 else padded[min(i, l)])
    return ("L",) + tuple(hat)


def _factor_dims(spec, params):
    k, r = params
    l = spec.l
    if spec.family == "a2even":
        return (weyl_dim("B", l, _lam_cd(l, 0, k)),
                weyl_dim("B", l, _lam_cd(l, 0, r)))
    if spec.family == "a2odd":
        return (weyl_dim("C", l, tuple(Q(k if i == 0 else 0) for i in range(l))),
                weyl_dim("C", l, tuple(Q(r if i == 0 else 0) for i in range(l))))
    spinor = fundamental_weight("B", l, l)
    return (weyl_dim("B", l, wscale(spinor, Q(k))),
            weyl_dim("B", l, wscale(spinor, Q(r))))


def l_parent_of(spec: FamilySpec, params, nu):
    table = decompose_tensor_closed_form(spec, params)
    for c in table.components:
        if c.nu == tuple(nu):
            return c.parent
    raise BranchingError(f"{nu} not in the decomposition")


def input_weight(spec: FamilySpec, p):
    """The eps-tuple of one tensor factor's highest weight for parameter p."""
    l = spec.l
    if spec.family == "a2even":
        return _lam_cd(l, 0, p)
    if spec.family == "a2odd":
        return tuple(Q(p if i == 0 else 0) for i in range(l))
    return wscale(fundamental_weight("B", l, l), Q(p))


def top_weight(spec: FamilySpec, params):
    return wadd(input_weight(spec, params[0]), input_weight(spec, params[1]))
