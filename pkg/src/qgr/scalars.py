"""Exact coefficients in the rational function field Q(u, v).

The quantum group parameters are r = u**2 and s = v**2.  Keeping the square
roots u, v as the field generators lets (r/s)**(k/2) stay inside the field.

A :class:`Scalar` is stored as ``u**eu * v**ev * num / den`` with ``num`` and
``den`` integer polynomials (python-flint ``fmpz_mpoly``) that are coprime,
free of monomial factors, and with ``den`` having a positive leading
coefficient in descending graded-lex order on ``(a + b, a)``.  This makes
equality a field-by-field comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

import flint

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "U",
    "V",
    "R",
    "S",
    "as_scalar",
    "int_power",
    "half_power",
    "specialize",
    "rs_monomial",
]

_CTX = flint.fmpz_mpoly_ctx.get(("u", "v"), "deglex")
_PU, _PV = _CTX.gens()
_P0 = _CTX.from_dict({})
_P1 = _CTX.from_dict({(0, 0): 1})


def _poly_const(c: int):
    return _CTX.from_dict({(0, 0): c}) if c else _P0


def _monomial_content(p):
    """Smallest u- and v-exponents occurring in a nonzero polynomial."""
    monoms = p.monoms()
    return int(min(m[0] for m in monoms)), int(min(m[1] for m in monoms))


def _shift_down(p, a: int, b: int):
    if a == 0 and b == 0:
        return p
    return _CTX.from_dict({(m[0] - a, m[1] - b): c for m, c in p.terms()})


def _shift_up(p, a: int, b: int):
    if a == 0 and b == 0:
        return p
    return _CTX.from_dict({(m[0] + a, m[1] + b): c for m, c in p.terms()})


class Scalar:
    """Immutable element of Q(u, v) in canonical form."""

    __slots__ = ("num", "den", "eu", "ev", "_hash")

    def __init__(self, num, den, eu: int = 0, ev: int = 0, _canonical: bool = False):
        if not _canonical:
            num, den, eu, ev = _normalize(num, den, eu, ev)
        self.num = num
        self.den = den
        self.eu = eu
        self.ev = ev
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, c: int) -> "Scalar":
        if c == 0:
            return ZERO
        return cls(_poly_const(c), _P1, 0, 0, _canonical=True)

    @classmethod
    def from_fraction(cls, q) -> "Scalar":
        q = Fraction(q)
        if q.denominator == 1:
            return cls.from_int(q.numerator)
        return cls(_poly_const(q.numerator), _poly_const(q.denominator), 0, 0, _canonical=True)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "Scalar":
        """c * u**a * v**b."""
        if c == 0:
            return ZERO
        return cls(_poly_const(c), _P1, a, b, _canonical=True)

    @classmethod
    def from_terms(cls, terms: dict, den_terms: dict | None = None) -> "Scalar":
        """Build from ``{(a, b): coeff}`` Laurent term maps (integer coefficients)."""
        num = _laurent_to_parts(terms)
        den = _laurent_to_parts(den_terms) if den_terms else (_P1, 0, 0)
        if den[0].is_zero():
            raise ZeroDivisionError("zero divisor")
        return cls(num[0], den[0], num[1] - den[1], num[2] - den[2])

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.eu == 0 and self.ev == 0 and self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_monomial(self) -> bool:
        return self.den.is_one() and len(self.num) == 1

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        ma, mb = min(self.eu, other.eu), min(self.ev, other.ev)
        n1 = _shift_up(self.num, self.eu - ma, self.ev - mb)
        n2 = _shift_up(other.num, other.eu - ma, other.ev - mb)
        if self.den.is_one() and other.den.is_one():
            num = n1 + n2
            if num.is_zero():
                return ZERO
            a, b = _monomial_content(num)
            return Scalar(_shift_down(num, a, b), _P1, ma + a, mb + b, _canonical=True)
        if self.den == other.den:
            return Scalar(n1 + n2, self.den, ma, mb)
        return Scalar(n1 * other.den + n2 * self.den, self.den * other.den, ma, mb)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return Scalar(-self.num, self.den, self.eu, self.ev, _canonical=True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        eu, ev = self.eu + other.eu, self.ev + other.ev
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, _P1, eu, ev, _canonical=True)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        g = n1.gcd(d2)
        if not g.is_one():
            n1, d2 = n1 // g, d2 // g
        g = n2.gcd(d1)
        if not g.is_one():
            n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar(num, den, eu, ev, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("zero divisor")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar(num, den, -self.eu, -self.ev, _canonical=True)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        return int_power(self, k)

    # -- comparison / hashing ---------------------------------------------

    def _key(self):
        return (
            tuple(self.num.terms()),
            tuple(self.den.terms()),
            self.eu,
            self.ev,
        )

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = as_scalar(other)
            if other is NotImplemented:
                return False
        return (
            self.eu == other.eu
            and self.ev == other.ev
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- text -------------------------------------------------------------

    def laurent_terms(self, part: str = "num") -> list[tuple[tuple[int, int], int]]:
        """Terms of numerator (with the monomial shift) or denominator, canonical order."""
        if part == "num":
            items = [((int(m[0]) + self.eu, int(m[1]) + self.ev), int(c)) for m, c in self.num.terms()]
        else:
            items = [((int(m[0]), int(m[1])), int(c)) for m, c in self.den.terms()]
        items.sort(key=lambda t: (t[0][0] + t[0][1], t[0][0]), reverse=True)
        return items

    def __str__(self):
        num = _render_terms(self.laurent_terms("num")) if not self.is_zero() else "0"
        if self.den.is_one():
            return f"({num})"
        return f"({num})/({_render_terms(self.laurent_terms('den'))})"

    def __repr__(self):
        return f"Scalar{self}"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of ``str``."""
        m = re.fullmatch(r"\((.*?)\)(?:/\((.*)\))?", text.strip())
        if not m:
            raise ValueError(f"not a canonical scalar: {text!r}")
        num = _parse_terms(m.group(1))
        den = _parse_terms(m.group(2)) if m.group(2) else {(0, 0): 1}
        if not num:
            return ZERO
        return cls.from_terms(num, den)


def _laurent_to_parts(terms: dict):
    terms = {k: int(c) for k, c in terms.items() if c}
    if not terms:
        return _P0, 0, 0
    ma = min(k[0] for k in terms)
    mb = min(k[1] for k in terms)
    return _CTX.from_dict({(a - ma, b - mb): c for (a, b), c in terms.items()}), ma, mb


def _normalize(num, den, eu, ev):
    if den.is_zero():
        raise ZeroDivisionError("zero divisor")
    if num.is_zero():
        return _P0, _P1, 0, 0
    g = num.gcd(den)
    if not g.is_one():
        num, den = num // g, den // g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    a, b = _monomial_content(num)
    if a or b:
        num = _shift_down(num, a, b)
        eu, ev = eu + a, ev + b
    a, b = _monomial_content(den)
    if a or b:
        den = _shift_down(den, a, b)
        eu, ev = eu - a, ev - b
    return num, den, eu, ev


def _render_terms(items) -> str:
    out = []
    for i, ((a, b), c) in enumerate(items):
        body = str(c)
        if a:
            body += f"*u^{a}"
        if b:
            body += f"*v^{b}"
        if i and c > 0:
            body = "+" + body
        out.append(body)
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?\d+)((?:\*[uv]\^-?\d+)*)")


def _parse_terms(text: str) -> dict:
    text = text.strip()
    if text == "0":
        return {}
    terms: dict = {}
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad term list: {text!r}")
        a = b = 0
        for var, exp in re.findall(r"\*([uv])\^(-?\d+)", m.group(2)):
            if var == "u":
                a = int(exp)
            else:
                b = int(exp)
        terms[(a, b)] = terms.get((a, b), 0) + int(m.group(1))
        pos = m.end()
    return terms


def as_scalar(x):
    """Coerce ints / Fractions; returns NotImplemented for foreign types."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented


ZERO = Scalar(_P0, _P1, 0, 0, _canonical=True)
ONE = Scalar(_P1, _P1, 0, 0, _canonical=True)
U = Scalar.monomial(1, 0)
V = Scalar.monomial(0, 1)
R = Scalar.monomial(2, 0)
S = Scalar.monomial(0, 2)


def int_power(a: Scalar, k: int) -> Scalar:
    a = as_scalar(a)
    if k < 0:
        if a.is_zero():
            raise ZeroDivisionError("zero divisor")
        return int_power(a.inverse(), -k)
    if k == 0:
        return ONE
    if a.is_monomial():
        c = int(a.num.coeffs()[0])
        return Scalar.monomial(a.eu * k, a.ev * k, c**k)
    result = ONE
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def half_power(twice_exponent: int) -> Scalar:
    """(r s^-1)^(twice_exponent / 2) = (u / v)^twice_exponent."""
    return Scalar.monomial(twice_exponent, -twice_exponent)


_RS_CACHE: dict = {}


def rs_monomial(a: int, b: int) -> Scalar:
    """r**a * s**b for the symbolic parameters."""
    key = (a, b)
    val = _RS_CACHE.get(key)
    if val is None:
        val = _RS_CACHE[key] = Scalar.monomial(2 * a, 2 * b)
    return val


def _eval_poly(p, x: Fraction, y: Fraction) -> Fraction:
    total = Fraction(0)
    for (a, b), c in p.terms():
        total += int(c) * x ** int(a) * y ** int(b)
    return total


def specialize(a: Scalar, u0, v0) -> Fraction:
    """Evaluate at u = u0, v = v0 (so r = u0**2, s = v0**2)."""
    u0, v0 = Fraction(u0), Fraction(v0)
    if u0 == 0 or v0 == 0:
        raise ValueError("specialization point must have nonzero u0, v0")
    if u0 * u0 == v0 * v0:
        raise ZeroDivisionError("zero divisor at specialization: r = s is excluded")
    a = as_scalar(a)
    den = _eval_poly(a.den, u0, v0)
    if den == 0:
        raise ZeroDivisionError(
            f"zero divisor at specialization: denominator ({_render_terms(a.laurent_terms('den'))}) vanishes"
        )
    return _eval_poly(a.num, u0, v0) * u0**a.eu * v0**a.ev / den
