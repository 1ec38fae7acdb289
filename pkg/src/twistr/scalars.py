"""Exact scalar arithmetic: rationals, the rational-function field Q(u), q-integers
and the elementary bracket factor.

Everything downstream works over one of two scalar modes:

* numeric mode: plain ``fractions.Fraction`` values, with the deformation
  parameter sampled as q = w**4 for a rational w, and the spectral parameter u
  a rational number as well;
* u-symbolic mode: elements of Q(u) (``RatFun``) with w still a fixed rational.

The w**4 convention keeps every fractional power of q that shows up on short
roots and spinor weight spaces (q**(1/2), q**(1/4)) inside Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Q = Fraction


class DegenerateParameterError(ValueError):
    """q (or w) hit one of the values 0, 1, -1 where q-arithmetic degenerates."""


class PoleError(ZeroDivisionError):
    """A bracket was evaluated at a pole u = -(sign) * q**a."""

    def __init__(self, a, sign):
        self.a = a
        self.sign = sign
        super().__init__(f"bracket <{a}>_{'+' if sign > 0 else '-'} has a pole here")


@dataclass(frozen=True)
class QSample:
    """A rational sample point for the deformation parameter, q = w**4."""

    w: Fraction

    def __post_init__(self):
        w = Fraction(self.w)
        object.__setattr__(self, "w", w)
        if w in (0, 1, -1):
            raise DegenerateParameterError(f"w = {w} is degenerate")

    @property
    def q(self) -> Fraction:
        return self.w**4

    def q_pow(self, a) -> Fraction:
        """q**a for half/quarter-integer a (any a with 4a integral)."""
        e = Fraction(a) * 4
        if e.denominator != 1:
            raise ValueError(f"q**{a} is not an integer power of w")
        return self.w ** int(e)


def qint(k: int, q):
    """The q-integer [k]_q = (q**k - q**-k) / (q - q**-1)."""
    if q in (0, 1, -1):
        raise DegenerateParameterError(f"q = {q}")
    return (q**k - q**-k) / (q - q**-1)


def qfactorial(k: int, q):
    out = q**0
    for n in range(1, k + 1):
        out *= qint(n, q)
    return out


def bracket(a, sign: int, u, qs: QSample):
    """The elementary factor <a>_sign = (1 + sign*u*q**a) / (u + sign*q**a).

    ``a`` may be any half-integer (or quarter-integer), ``u`` either a rational
    or a RatFun; the result lives in the same scalar mode as ``u``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    qa = qs.q_pow(a)
    den = u + sign * qa
    if not den:
        raise PoleError(a, sign)
    return (1 + sign * u * qa) / den


# ---------------------------------------------------------------------------
# Polynomials over Q, low-to-high coefficient tuples, and the field Q(u).
# ---------------------------------------------------------------------------

def _trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def poly_add(p, q):
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n))


def poly_neg(p):
    return tuple(-c for c in p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_scale(p, c):
    if not c:
        return ()
    return tuple(a * c for a in p)


def poly_divmod(p, q):
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Q(0)] * max(len(p) - len(q) + 1, 0)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and any(rem):
        if not rem[-1]:
            rem.pop()
            continue
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        rem.pop()
    return _trim(quo), _trim(rem)


def poly_gcd(p, q):
    """Monic Euclidean gcd; () only if both inputs are zero."""
    a, b = p, q
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        a = poly_scale(a, 1 / a[-1])
    return a


def poly_eval(p, x):
    out = 0 * x if not isinstance(x, (int, Fraction)) else Q(0)
    for c in reversed(p):
        out = out * x + c
    return out


def _poly_str(p, var="u"):
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


class RatFun:
    """An element of the field Q(u), stored reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Q(1),)):
        num = _trim(Q(c) for c in num)
        den = _trim(Q(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(u)")
        if num:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num, _ = poly_divmod(num, g)
                den, _ = poly_divmod(den, g)
        else:
            den = (Q(1),)
        lead = den[-1]
        if lead != 1:
            num = poly_scale(num, 1 / lead)
            den = poly_scale(den, 1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        return cls((Q(c),))

    @classmethod
    def var(cls):
        """The generator u of Q(u)."""
        return cls((Q(0), Q(1)))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFun.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(poly_add(poly_mul(self.num, other.den),
                               poly_mul(other.num, self.den)),
                      poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(poly_neg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(poly_mul(self.num, other.num),
                      poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(u)")
        return RatFun(poly_mul(self.num, other.den),
                      poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return (RatFun.const(1) / self) ** (-k)
        out = RatFun.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def subs(self, x):
        """Evaluate at a rational point."""
        return poly_eval(self.num, x) / poly_eval(self.den, x)

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return format_scalar(self)


def format_scalar(x) -> str:
    """Serialize a scalar as a decimal-free string.

    Rationals render as "p/q" (or "p"); Q(u) elements as
    "num(u)/den(u)" with integer coefficients.
    """
    if isinstance(x, RatFun):
        den_lcm = 1
        for c in x.num + x.den:
            den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
        num = poly_scale(x.num, den_lcm)
        den = poly_scale(x.den, den_lcm)
        num_s = _poly_str(num)
        if den == (Q(1),):
            return num_s
        return f"({num_s})/({_poly_str(den)})"
    return str(Fraction(x))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
