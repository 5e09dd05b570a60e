"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A Scalar holds rational coordinates in the power basis 1, z, ..., z^(phi(n)-1)
of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial, at the smallest
conductor containing the value.  Conductors congruent to 2 mod 4 are never
stored (Q(zeta_{2m}) = Q(zeta_m) for odd m), so the representation is unique
and equality is a plain tuple comparison.  order = 1 encodes a rational.

Serialization: "p/q" for rationals, "c0 + c1*z + c2*z^2 + ...@n" for
cyclotomic values (zero terms omitted).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _int_poly_div_exact(num, den):
    # den is monic; the quotient is exact for cyclotomic factor chains
    num = list(num)
    deg_d = len(den) - 1
    q = [0] * (len(num) - deg_d)
    for k in range(len(num) - 1, deg_d - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q[k - deg_d] = c
        for i, dc in enumerate(den):
            num[k - deg_d + i] -= c * dc
    if any(num[:deg_d]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Monic integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _int_poly_div_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce_mod_phi(coeffs, n):
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            c[k] = _ZERO
            for i in range(deg):
                c[k - deg + i] -= top * phi[i]
    c = c[:deg]
    c.extend([_ZERO] * (deg - len(c)))
    return c


@lru_cache(maxsize=None)
def _zeta_power(n, k):
    """Coordinates of z^k in the reduced power basis at conductor n."""
    k %= n
    return tuple(_reduce_mod_phi([_ZERO] * k + [_ONE], n))


@lru_cache(maxsize=None)
def _lift_columns(m, n):
    """Coordinates at conductor n of the power basis of Q(zeta_m), for m | n."""
    step = n // m
    return tuple(_zeta_power(n, step * j) for j in range(euler_phi(m)))


def _solve_lift(m, n, target):
    """Express target (coords at conductor n) in Q(zeta_m), or return None."""
    cols = _lift_columns(m, n)
    h, w = euler_phi(n), euler_phi(m)
    aug = [[cols[j][i] for j in range(w)] + [target[i]] for i in range(h)]
    pivots = []
    r = 0
    for c in range(w):
        sel = next((i for i in range(r, h) if aug[i][c] != 0), None)
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(h):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    # rows past the last pivot are zero on the left, so they decide consistency
    if any(row[w] != 0 for row in aug[r:]):
        return None
    # lift columns are linearly independent, so a consistent system pins every unknown
    sol = [_ZERO] * w
    for i, c in enumerate(pivots):
        sol[c] = aug[i][w]
    return sol


class Scalar:
    """Immutable exact element of some Q(zeta_n)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.order = value.order
            self.coeffs = value.coeffs
        else:
            self.order = 1
            self.coeffs = (Fraction(value),)

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    # -- canonical construction ------------------------------------------------

    @classmethod
    def _canonical(cls, n, coeffs):
        coeffs = _reduce_mod_phi(coeffs, n)
        if n == 1:
            return cls._raw(1, (coeffs[0],))
        if not any(coeffs[1:]):
            return cls._raw(1, (coeffs[0],))
        for m in _divisors(n)[1:-1]:
            if m % 4 == 2:
                continue
            sol = _solve_lift(m, n, coeffs)
            if sol is not None:
                return cls._raw(m, tuple(sol))
        return cls._raw(n, tuple(coeffs))

    def _at(self, n):
        """Coordinates of self lifted to conductor n (order must divide n)."""
        if self.order == n:
            return list(self.coeffs)
        cols = _lift_columns(self.order, n)
        out = [_ZERO] * euler_phi(n)
        for j, c in enumerate(self.coeffs):
            if c:
                col = cols[j]
                for i in range(len(out)):
                    out[i] += c * col[i]
        return out

    # -- predicates ------------------------------------------------------------

    @property
    def is_zero(self):
        return self.order == 1 and self.coeffs[0] == 0

    @property
    def is_one(self):
        return self.order == 1 and self.coeffs[0] == 1

    @property
    def is_rational(self):
        return self.order == 1

    def as_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic --------------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order == 1 and o.order == 1:
            return Scalar._raw(1, (self.coeffs[0] + o.coeffs[0],))
        n = math.lcm(self.order, o.order)
        return Scalar._canonical(n, [a + b for a, b in zip(self._at(n), o._at(n))])

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.order == 1 and o.order == 1:
            return Scalar._raw(1, (self.coeffs[0] * o.coeffs[0],))
        if self.order == 1 or o.order == 1:
            rat, cyc = (self, o) if self.order == 1 else (o, self)
            f = rat.coeffs[0]
            if f == 0:
                return Scalar._raw(1, (_ZERO,))
            # scaling by a nonzero rational keeps the conductor minimal
            return Scalar._raw(cyc.order, tuple(f * c for c in cyc.coeffs))
        n = math.lcm(self.order, o.order)
        a, b = self._at(n), o._at(n)
        prod = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar._canonical(n, prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.order == 1:
            if self.coeffs[0] == 0:
                raise DivisionByZero("division by zero")
            return Scalar._raw(1, (1 / self.coeffs[0],))
        # extended Euclid against the cyclotomic polynomial; Q(x) = Q(1/x),
        # so the result lives at the same (already minimal) conductor
        phi = [Fraction(c) for c in cyclotomic_poly(self.order)]
        u = _poly_invmod(list(self.coeffs), phi)
        return Scalar._raw(self.order, tuple(_reduce_mod_phi(u, self.order)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar._raw(1, (_ONE,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- text form ---------------------------------------------------------------

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = str(abs(c))
            body = mag if j == 0 else f"{mag}*z" if j == 1 else f"{mag}*z^{j}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts) + f"@{self.order}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        s = str(text).strip().replace("−", "-").replace("–", "-")
        if not s:
            raise ParseError("empty scalar")
        if "@" not in s:
            try:
                return cls._raw(1, (Fraction(s),))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational {text!r}: {exc}") from None
        lhs, _, tail = s.rpartition("@")
        try:
            n = int(tail)
        except ValueError:
            raise ParseError(f"bad conductor in {text!r}") from None
        if n < 1:
            raise ParseError(f"conductor must be positive in {text!r}")
        powers = _parse_terms(lhs, text)
        if n % 4 == 2:
            # legal on input; rebuilt through zeta(n) so it lands at the odd conductor
            total = Scalar(0)
            z = zeta(n)
            for k, c in powers.items():
                total = total + Scalar(c) * z ** k
            return total
        coeffs = [_ZERO] * (max(powers) + 1 if powers else 1)
        for k, c in powers.items():
            coeffs[k] += c
        return cls._canonical(n, coeffs)


_TERM_RE = re.compile(r"^(?:(?P<coef>-?\d+(?:/\d+)?)(?:\*(?P<gen1>z(?:\^\d+)?))?|(?P<sign>-?)(?P<gen2>z(?:\^\d+)?))$")


def _parse_terms(lhs, original):
    body = lhs.replace(" ", "")
    if not body:
        raise ParseError(f"empty cyclotomic body in {original!r}")
    body = body.replace("-", "+-")
    parts = [p for p in body.split("+") if p]
    powers = {}
    for part in parts:
        m = _TERM_RE.match(part)
        if not m:
            raise ParseError(f"bad term {part!r} in {original!r}")
        if m.group("coef") is not None:
            coeff = Fraction(m.group("coef"))
            gen = m.group("gen1")
        else:
            coeff = Fraction(-1 if m.group("sign") else 1)
            gen = m.group("gen2")
        k = 0 if gen is None else 1 if gen == "z" else int(gen[2:])
        powers[k] = powers.get(k, _ZERO) + coeff
    return powers


def _poly_divmod(a, b):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    q = [_ZERO] * max(len(a) - db, 0)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv_lead
        if c:
            q[k - db] = c
            for i in range(db + 1):
                a[k - db + i] -= c * b[i]
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_invmod(a, mod):
    """u with u*a = 1 modulo mod; mod is irreducible, a nonzero mod mod."""
    r0, r1 = list(mod), list(a)
    t0, t1 = [_ZERO], [_ONE]
    while True:
        while r1 and r1[-1] == 0:
            r1.pop()
        if len(r1) <= 1:
            break
        q, r2 = _poly_divmod(r0, r1)
        t2 = _poly_sub(t0, _poly_mul(q, t1))
        r0, r1, t0, t1 = r1, r2, t1, t2
    if not r1 or r1[0] == 0:
        raise DivisionByZero("division by zero")
    c = 1 / r1[0]
    return [x * c for x in t1]


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


ZERO = Scalar(0)
ONE = Scalar(1)


def zeta(n: int) -> Scalar:
    """The primitive n-th root of unity generating Q(zeta_n)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n == 1:
        return ONE
    if n == 2:
        return Scalar(-1)
    if n % 4 == 2:
        m = n // 2  # odd; zeta_{2m} = -zeta_m^{(m+1)/2}
        return -(zeta(m) ** ((m + 1) // 2))
    return Scalar._raw(n, _zeta_power(n, 1))


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings (Scalar grammar) and Scalars."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    if isinstance(x, str):
        return Scalar.parse(x)
    raise TypeError(f"cannot interpret {x!r} as a Scalar")


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """String-dispatched field arithmetic: add, sub, mul, div."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")
