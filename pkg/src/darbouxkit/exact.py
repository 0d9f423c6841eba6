"""Exact scalar and polynomial arithmetic.

Real scalars are :class:`fractions.Fraction`. :class:`ComplexRational` is a
separate Gaussian-rational type used only by the imaginary-shift routines.
:class:`Polynomial` works over either coefficient type.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NonzeroRemainder

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Floats are rejected: they silently carry binary rounding error.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError(f"refusing float {text!r}; pass a rational string")
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(x: Fraction) -> str:
    # str(Fraction) already gives "p/q", or "p" when q == 1, sign on p
    return str(Fraction(x))


class ComplexRational:
    """Exact complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexRational is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRational(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("complex division by zero")
        return ComplexRational((self.re * o.re + self.im * o.im) / norm,
                               (self.im * o.re - self.re * o.im) / norm)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = ComplexRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return ComplexRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"ComplexRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        sign = "-" if self.im < 0 else "+"
        mag = abs(self.im)
        im = "i" if mag == 1 else f"{format_rational(mag)}i"
        if self.re == 0:
            return im if sign == "+" else "-" + im
        return f"{format_rational(self.re)}{sign}{im}"


I = ComplexRational(0, 1)

Coefficient = Union[Fraction, ComplexRational]


def _coerce(c) -> Coefficient:
    if isinstance(c, ComplexRational):
        return c
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return Fraction(c)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Coefficient:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> Coefficient:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_real(self) -> bool:
        return all(not isinstance(c, ComplexRational) or c.im == 0 for c in self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, ComplexRational)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Polynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return poly_div_exact(self, other)
        if isinstance(other, (int, Fraction, ComplexRational)):
            return Polynomial(c / other for c in self.coeffs)
        return NotImplemented

    def divmod(self, d: "Polynomial"):
        """Euclidean division over the coefficient field: ``(q, r)`` with deg r < deg d."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        lead = d.leading
        if len(rem) <= dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            quot[k - dd] = q
            if q == 0:
                continue
            for i, c in enumerate(d.coeffs):
                rem[k - dd + i] = rem[k - dd + i] - q * c
        return Polynomial(quot), Polynomial(rem[:dd])

    def compose_square(self) -> "Polynomial":
        out = []
        for c in self.coeffs:
            out.extend((c, 0))
        return Polynomial(out)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if isinstance(c, ComplexRational) and c.im != 0:
                cs = f"({c})"
            else:
                cs = str(c)
            if mono and cs in ("1", "(1)"):
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x):
    """Horner evaluation; exact for rational or complex-rational ``x``."""
    return p(x)


def poly_div_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient ``q`` with ``q * d == p``.

    Raises
    ------
    NonzeroRemainder
        If ``d`` does not divide ``p``; callers use this to surface a broken
        divisibility invariant rather than silently dropping a remainder.
    """
    q, r = p.divmod(d)
    if not r.is_zero():
        raise NonzeroRemainder(f"({p}) / ({d}) leaves remainder {r}")
    return q


def poly_compose_square(p: Polynomial) -> Polynomial:
    """Return ``p(x**2)``."""
    return p.compose_square()


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None if irrational."""
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def interleave(evens: Sequence, odds: Sequence) -> list:
    """``(e0, o0, e1, o1, ...)``; ``evens`` may be one longer than ``odds``."""
    out = []
    for k, e in enumerate(evens):
        out.append(e)
        if k < len(odds):
            out.append(odds[k])
    return out
