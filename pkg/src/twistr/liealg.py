"""Classical data for the three twisted families.

Families (tags used throughout):

* ``a2even``: L = sl(2l+1), fixed subalgebra B_l = so(2l+1), theta0 = 2*eps1
* ``a2odd`` : L = sl(2l),   fixed subalgebra C_l = sp(2l),   theta0 = eps1+eps2
* ``d2``    : L = so(2l+2), fixed subalgebra B_l = so(2l+1), theta0 = eps1

Weights are tuples of Fractions in the eps-basis (length l for weights of the
fixed subalgebra, length n for gl-level objects).  The bilinear form is
(eps_i, eps_j) = delta_ij throughout, which normalizes Casimir eigenvalues to
C(nu) = (nu, nu + 2*rho0).

The sqrt(2) factors in the Kac generator lists are removed by a reciprocal
rescaling of each (E, F) pair; this preserves [E, F] = H and the trace pairing
(E_i, F_j) = delta_ij, and the intertwiner solve is invariant under it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import commutator, is_zero, mat_scale, mat_sub, zeros

Q = Fraction

FAMILIES = ("a2even", "a2odd", "d2")
_MIN_RANK = {"a2even": 1, "a2odd": 3, "d2": 2}


class FamilyError(ValueError):
    pass


def inner(v, w):
    return sum(a * b for a, b in zip(v, w))


def wadd(v, w):
    return tuple(a + b for a, b in zip(v, w))


def wsub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def wscale(v, c):
    return tuple(a * c for a in v)


def eps(i, l):
    """Basis vector eps_i (1-based) of length l."""
    return tuple(Q(1) if j == i - 1 else Q(0) for j in range(l))


def is_dominant(l0type, nu):
    if any(a < b for a, b in zip(nu, nu[1:])):
        return False
    if nu[-1] < 0:
        return False
    if l0type == "C":
        return all(a.denominator == 1 for a in nu)
    # B_l: all integer or all half-odd-integer
    doubled = [2 * a for a in nu]
    if any(d.denominator != 1 for d in doubled):
        return False
    return len({int(d) % 2 for d in doubled}) == 1


@dataclass(frozen=True)
class FamilySpec:
    family: str
    l: int
    n: int
    l0type: str               # "B" or "C"
    theta0: tuple
    alpha: tuple              # simple roots alpha_0..alpha_l, eps-basis length l
    rho0: tuple

    def cartan(self, i, j):
        return 2 * inner(self.alpha[i], self.alpha[j]) / inner(self.alpha[i], self.alpha[i])

    def admissible(self, params):
        """Table-2 admissibility of a tensor-factor parameter pair."""
        k, r = params
        if self.family == "a2even":
            return 1 <= k <= self.l and 1 <= r <= self.l
        return k >= 1 and r >= 1

    def seed_params(self):
        return (1, 1)


def family_spec(family: str, l: int) -> FamilySpec:
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}")
    if l < _MIN_RANK[family]:
        raise FamilyError(f"family {family} requires l >= {_MIN_RANK[family]}")
    simple = [wsub(eps(i, l), eps(i + 1, l)) for i in range(1, l)]
    if family == "a2even":
        n = 2 * l + 1
        l0type = "B"
        simple.append(eps(l, l))
        alpha0 = wscale(eps(1, l), Q(-2))
        theta0 = wscale(eps(1, l), Q(2))
    elif family == "a2odd":
        n = 2 * l
        l0type = "C"
        simple.append(wscale(eps(l, l), Q(2)))
        alpha0 = wscale(wadd(eps(1, l), eps(2, l)), Q(-1))
        theta0 = wadd(eps(1, l), eps(2, l))
    else:
        n = 2 * l + 2
        l0type = "B"
        simple.append(eps(l, l))
        alpha0 = wscale(eps(1, l), Q(-1))
        theta0 = eps(1, l)
    rho0 = weyl_vector(l0type, l)
    return FamilySpec(family, l, n, l0type, theta0, (alpha0, *simple), rho0)


def weyl_vector(l0type, l):
    if l0type == "B":
        return tuple(Q(2 * (l - i) - 1, 2) for i in range(l))
    return tuple(Q(l - i) for i in range(l))


def positive_roots(l0type, l):
    roots = []
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            roots.append(wsub(eps(i, l), eps(j, l)))
            roots.append(wadd(eps(i, l), eps(j, l)))
    for i in range(1, l + 1):
        roots.append(eps(i, l) if l0type == "B" else wscale(eps(i, l), Q(2)))
    return roots


def fundamental_weight(l0type, l, k):
    """lambda_k in the eps basis (B_l: lambda_l is the spinor weight)."""
    if l0type == "B" and k == l:
        return tuple(Q(1, 2) for _ in range(l))
    return tuple(Q(1) if i < k else Q(0) for i in range(l))


def casimir_eigenvalue(spec: FamilySpec, nu) -> Fraction:
    if not is_dominant(spec.l0type, nu):
        raise ValueError(f"{nu} is not dominant for {spec.l0type}_{spec.l}")
    return inner(nu, wadd(nu, wscale(spec.rho0, 2)))


def weyl_dim(l0type, l, nu) -> int:
    rho = weyl_vector(l0type, l)
    shifted = wadd(nu, rho)
    num = den = Q(1)
    for alpha in positive_roots(l0type, l):
        num *= inner(shifted, alpha)
        den *= inner(rho, alpha)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


# ---------------------------------------------------------------------------
# Kac generators inside gl(n)
# ---------------------------------------------------------------------------

def _e(n, i, j):
    m = zeros(n, n)
    m[i - 1][j - 1] = Q(1)
    return m


def _a(n, i, j, bar_n=None):
    """a_ij = e_ij - (-1)^(i+j) e_{jbar, ibar} with ibar = bar_n + 1 - i."""
    if bar_n is None:
        bar_n = n
    ib, jb = bar_n + 1 - i, bar_n + 1 - j
    m = _e(n, i, j)
    s = (-1) ** (i + j)
    m[jb - 1][ib - 1] -= Q(s)
    return m


def kac_generators(spec: FamilySpec):
    """The (rationally rescaled) generators {E_i, F_i, H_i : 0 <= i <= l}.

    Returns a dict with keys "E", "F", "H", each a list indexed 0..l of n x n
    matrices over Q.
    """
    l, n = spec.l, spec.n
    E = [None] * (l + 1)
    F = [None] * (l + 1)
    H = [None] * (l + 1)
    if spec.family in ("a2even", "a2odd"):
        for i in range(1, l):
            E[i] = _a(n, i, i + 1)
            F[i] = _a(n, i + 1, i)
            H[i] = mat_sub(_a(n, i, i), _a(n, i + 1, i + 1))
        if spec.family == "a2even":
            E[l] = _a(n, l, l + 1)
            F[l] = _a(n, l + 1, l)
            H[l] = _a(n, l, l)
            # E0 = sqrt(2) e_{n,1}, F0 = sqrt(2) e_{1,n}, rescaled to (2, 1)
            E[0] = mat_scale(_e(n, n, 1), Q(2))
            F[0] = _e(n, 1, n)
            H[0] = mat_scale(_a(n, 1, 1), Q(-2))
        else:
            # E_l = a_{l,l+1}/sqrt2, F_l = a_{l+1,l}/sqrt2, rescaled to (1, 1/2)
            E[l] = _a(n, l, l + 1)
            F[l] = mat_scale(_a(n, l + 1, l), Q(1, 2))
            H[l] = mat_scale(_a(n, l, l), Q(2))
            # b_{2l-1,1} = e_{2l-1,1} + e_{2l,2}
            E[0] = linalg.mat_add(_e(n, 2 * l - 1, 1), _e(n, 2 * l, 2))
            F[0] = linalg.mat_add(_e(n, 1, 2 * l - 1), _e(n, 2, 2 * l))
            H[0] = mat_scale(linalg.mat_add(_a(n, 1, 1), _a(n, 2, 2)), Q(-1))
    else:
        # d2: the bar for the a_ij block runs over 1..2l+1 (ibar = 2l+2-i),
        # leaving the extra index 2l+2 outside the bar involution
        bar_n = 2 * l + 1
        for i in range(1, l):
            E[i] = _a(n, i, i + 1, bar_n)
            F[i] = _a(n, i + 1, i, bar_n)
            H[i] = mat_sub(_a(n, i, i, bar_n), _a(n, i + 1, i + 1, bar_n))
        E[l] = _a(n, l, l + 1, bar_n)
        F[l] = _a(n, l + 1, l, bar_n)
        H[l] = _a(n, l, l, bar_n)
        # affine pair built from e_{2l+1,2l+2} + e_{2l+2,1}
        E[0] = linalg.mat_add(_e(n, 2 * l + 1, 2 * l + 2), _e(n, 2 * l + 2, 1))
        F[0] = linalg.mat_add(_e(n, 2 * l + 2, 2 * l + 1), _e(n, 1, 2 * l + 2))
        H[0] = mat_scale(_a(n, 1, 1, bar_n), Q(-1))
    return {"E": E, "F": F, "H": H}


def trace_pairing(x, y):
    """(X, Y) = tr(XY)/2, the gl(n) invariant form used throughout."""
    n = len(x)
    return sum(x[i][j] * y[j][i] for i in range(n) for j in range(n)) / 2


def check_classical_relations(gens, spec: FamilySpec):
    """Verify every defining relation of the classical generator set.

    Returns a list of report entries {"relation": str, "ok": bool, "residual"}.
    """
    E, F, H = gens["E"], gens["F"], gens["H"]
    l = spec.l
    report = []

    def record(name, residual):
        report.append({
            "relation": name,
            "ok": is_zero(residual),
            "residual": None if is_zero(residual) else residual,
        })

    for i in range(l + 1):
        for j in range(l + 1):
            aij = inner(spec.alpha[i], spec.alpha[j])
            record(f"[H{i},E{j}]=(a{i},a{j})E{j}",
                   mat_sub(commutator(H[i], E[j]), mat_scale(E[j], aij)))
            record(f"[H{i},F{j}]=-(a{i},a{j})F{j}",
                   mat_sub(commutator(H[i], F[j]), mat_scale(F[j], -aij)))
            target = H[i] if i == j else zeros(spec.n, spec.n)
            record(f"[E{i},F{j}]=delta*H{i}",
                   mat_sub(commutator(E[i], F[j]), target))
    for i in range(l + 1):
        for j in range(l + 1):
            if i == j:
                continue
            m = 1 - int(spec.cartan(i, j))
            x = E[j]
            for _ in range(m):
                x = commutator(E[i], x)
            record(f"(ad E{i})^{m} E{j}=0", x)
            y = F[j]
            for _ in range(m):
                y = commutator(F[i], y)
            record(f"(ad F{i})^{m} F{j}=0", y)
    return report


# ---------------------------------------------------------------------------
# Family Casimir closed forms (regression targets for casimir_eigenvalue)
# ---------------------------------------------------------------------------

def casimir_a2even_cd(l, c, d):
    """C on V0(lambda_c + lambda_d) for B_l inside sl(2l+1)."""
    return Q((c + d) * (2 * l + 2 - c) - (d + 1) * (d - c))


def casimir_a2odd_cd(l, c, d):
    """C on V0(c*lambda1 + d*lambda2) for C_l inside sl(2l)."""
    n = 2 * l
    return Q((c + d) * (n + c + d) + (n - 2 + d) * d)


def casimir_d2_ladder(l, Lam, b_minus_a):
    """C on V0(Lam + (b-a)*lambda_l) for B_l inside so(2l+2); n = 2l+1."""
    n = 2 * l + 1
    s = sum(L * (L + b_minus_a + n - 2 * (i + 1)) for i, L in enumerate(Lam))
    return Q(s) + Q(l * b_minus_a * (b_minus_a + n - 1), 4)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def dim_a2even_L(n, a, b):
    """dim V(lambda_a + lambda_b) of sl(n)."""
    return Q((b - a + 1) * binomial(n + 1, a) * binomial(n + 1, b + 1), n + 1)


def dim_a2even_L0(n, c, d):
    """dim V0(lambda_c + lambda_d) of so(n), n odd."""
    return Q((1 + d - c) * (n + 1 - c - d) * binomial(n + 2, c) * binomial(n + 2, d + 1),
             (n + 1) * (n + 2))


def dim_a2odd_L(n, b, a):
    """dim V(b*lambda1 + a*lambda2) of sl(n)."""
    return Q((b + 1) * binomial(a + b + n - 1, n - 2) * binomial(a + n - 2, n - 2),
             n - 1)


def dim_a2odd_L0(n, d, c):
    """dim V0(d*lambda1 + c*lambda2) of sp(n)."""
    return Q((1 + d) * (2 * c + d + n - 1)
             * binomial(c + d + n - 2, n - 3) * binomial(c + n - 3, n - 3),
             (n - 1) * (n - 2))
