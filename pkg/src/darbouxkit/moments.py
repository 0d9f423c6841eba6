"""Moment sequences, measure specifications and moment functionals."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import (
    InsufficientMoments,
    InvalidShift,
    InvalidSpec,
    IrrationalSupport,
    NonpositiveSupport,
    UnsupportedSpec,
)
from .exact import Polynomial, _coerce, rational_sqrt
from .linalg import det


@dataclass(frozen=True)
class MomentSequence:
    """Finite prefix ``s_0, ..., s_m`` of a moment sequence.

    The mass ``s_0`` is never renormalized; Darboux outputs are naturally
    non-normalized measures.
    """

    values: Tuple = ()

    def __post_init__(self):
        vals = tuple(_coerce(v) for v in self.values)
        if not vals:
            raise InvalidSpec("moment sequence must be nonempty")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return MomentSequence(self.values[k])
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    @property
    def mass(self):
        return self.values[0]

    def shifted(self, sigma=0) -> "MomentSequence":
        """Moments ``s_{k+1} - sigma*s_k`` of the measure ``(t - sigma) dmu``."""
        v = self.values
        return MomentSequence(tuple(v[k + 1] - sigma * v[k] for k in range(len(v) - 1)))


# -- measure specifications ---------------------------------------------------

@dataclass(frozen=True)
class Discrete:
    """Finite positive combination of point masses ``sum w_i delta_{t_i}``."""

    atoms: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        atoms = tuple((Fraction(t), Fraction(w)) for t, w in self.atoms)
        if not atoms:
            raise InvalidSpec("discrete measure needs at least one atom")
        if any(w <= 0 for _, w in atoms):
            raise InvalidSpec("atom weights must be positive")
        points = [t for t, _ in atoms]
        if len(set(points)) != len(points):
            raise InvalidSpec("atom points must be pairwise distinct")
        object.__setattr__(self, "atoms", atoms)

    @property
    def points(self):
        return tuple(t for t, _ in self.atoms)

    @property
    def weights(self):
        return tuple(w for _, w in self.atoms)


@dataclass(frozen=True)
class NamedLaguerre:
    """Normalized Laguerre weight ``t^alpha e^{-t} / Gamma(alpha+1)`` on ``[0, inf)``."""

    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        if a <= -1:
            raise InvalidSpec("Laguerre parameter must exceed -1")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class RawMoments:
    values: MomentSequence

    def __post_init__(self):
        if not isinstance(self.values, MomentSequence):
            object.__setattr__(self, "values", MomentSequence(tuple(self.values)))


MeasureSpec = Union[Discrete, NamedLaguerre, RawMoments]


def measure_moments(spec: MeasureSpec, count: int) -> MomentSequence:
    """First ``count`` moments of ``spec``, exactly.

    For :class:`NamedLaguerre` these are the rising factorials ``(alpha+1)_j``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if isinstance(spec, Discrete):
        vals = []
        powers = list(spec.weights)
        for _ in range(count):
            vals.append(sum(powers, Fraction(0)))
            powers = [p * t for p, t in zip(powers, spec.points)]
        return MomentSequence(tuple(vals))
    if isinstance(spec, NamedLaguerre):
        vals = [Fraction(1)]
        for j in range(1, count):
            vals.append(vals[-1] * (spec.alpha + j))
        return MomentSequence(tuple(vals))
    if isinstance(spec, RawMoments):
        if len(spec.values) < count:
            raise InsufficientMoments(count, len(spec.values))
        return spec.values[:count]
    raise UnsupportedSpec(f"no closed-form moments for {type(spec).__name__}")


# -- Hankel data ----------------------------------------------------------------

def hankel_matrix(s: Sequence, j: int, offset: int = 0):
    return [[s[offset + i + k] for k in range(j + 1)] for i in range(j + 1)]


def hankel_det(s: MomentSequence, j: int, offset: int = 0):
    """``D_j = det(s_{offset+i+k})_{i,k=0..j}``, with ``D_{-1} = 1``."""
    if j < 0:
        return Fraction(1)
    needed = offset + 2 * j + 1
    if len(s) < needed:
        raise InsufficientMoments(needed, len(s))
    return det(hankel_matrix(s, j, offset))


class Kind(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    STIELTJES = "Stieltjes"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    rank: Optional[int] = None  # first failing Hankel order, Degenerate only
    # first failing shifted order, for PositiveDefinite results
    shifted_failure: Optional[int] = None

    def __str__(self):
        if self.kind is Kind.DEGENERATE:
            return f"Degenerate({self.rank})"
        return self.kind.value


def classify(s: MomentSequence) -> Classification:
    """Classify moment data by the signs of its Hankel determinants.

    With ``n = len(s) // 2`` the orders examined are ``j < n``: exactly the
    ones a depth-``n`` Jacobi recursion consumes. ``D_j > 0`` for those
    orders gives PositiveDefinite; if also ``det(s_{1+i+k})_{i,k<=j} > 0``
    throughout, the data is Stieltjes.
    """
    n = len(s) // 2
    for j in range(n):
        if hankel_det(s, j) <= 0:
            return Classification(Kind.DEGENERATE, rank=j)
    for j in range(n):
        if hankel_det(s, j, offset=1) <= 0:
            return Classification(Kind.POSITIVE_DEFINITE, shifted_failure=j)
    return Classification(Kind.STIELTJES)


def unwrap_moments(s: MomentSequence) -> MomentSequence:
    """Moments of ``S(lambda^2)``: zeros at even indices, ``s_j`` at index ``2j+1``."""
    out = []
    for v in s:
        out.extend((Fraction(0), v))
    return MomentSequence(tuple(out))


# -- functionals ------------------------------------------------------------------

@dataclass(frozen=True)
class Functional:
    """Linear functional ``f -> S(multiplier * f)`` with ``S(x^k) = moments[k]``."""

    moments: MomentSequence
    multiplier: Optional[Polynomial] = None

    @classmethod
    def shifted(cls, moments: MomentSequence, alpha=None) -> "Functional":
        """``f -> S(x f)``, or ``f -> S((x - alpha) f)`` when ``alpha`` is given."""
        if alpha is None:
            return cls(moments, Polynomial.x())
        return cls(moments, Polynomial((-alpha, 1)))

    def max_degree(self) -> int:
        extra = self.multiplier.degree if self.multiplier is not None else 0
        return len(self.moments) - 1 - extra

    def induced_moments(self, count: Optional[int] = None) -> MomentSequence:
        """Moments ``f(x^k)`` of this functional."""
        top = self.max_degree()
        if count is None:
            count = top + 1
        if count > top + 1:
            extra = len(self.moments) - 1 - top
            raise InsufficientMoments(count + extra, len(self.moments))
        return MomentSequence(tuple(functional_apply(self, Polynomial.monomial(k))
                                    for k in range(count)))

    def __call__(self, p: Polynomial):
        return functional_apply(self, p)


def functional_apply(f: Functional, p: Polynomial):
    q = p if f.multiplier is None else f.multiplier * p
    if q.degree >= len(f.moments):
        raise InsufficientMoments(q.degree + 1, len(f.moments))
    acc = Fraction(0)
    for c, m in zip(q.coeffs, f.moments.values):
        if c != 0:
            acc = acc + c * m
    return acc


# -- measure-level unwrapping -------------------------------------------------------

def _signed_roots(spec: Discrete):
    roots = []
    for t, w in spec.atoms:
        if t <= 0:
            raise NonpositiveSupport(t)
        r = rational_sqrt(t)
        if r is None:
            raise IrrationalSupport(t)
        roots.append((r, w))
    return roots


def unwrap_measure(spec: Discrete) -> Discrete:
    """Symmetrize: each atom ``(t, w)`` becomes ``(+sqrt t, w/2)`` and ``(-sqrt t, w/2)``."""
    out = []
    for r, w in _signed_roots(spec):
        out.append((r, w / 2))
        out.append((-r, w / 2))
    return Discrete(tuple(out))


def chihara_measure(spec: Discrete, alpha) -> Discrete:
    """Discrete measure behind ``(lambda - alpha) S(lambda^2)``.

    The atom at ``x = +-sqrt(t)`` carries ``w * (x - alpha) / (2x)``; these are
    all positive exactly when ``alpha^2 < min t``.
    """
    alpha = Fraction(alpha)
    roots = _signed_roots(spec)
    if alpha == 0:
        return unwrap_measure(spec)
    if not alpha * alpha < min(t for t, _ in spec.atoms):
        raise InvalidShift(f"alpha^2 = {alpha * alpha} does not lie below the support")
    out = []
    for r, w in roots:
        for x in (r, -r):
            out.append((x, w * (x - alpha) / (2 * x)))
    return Discrete(tuple(out))
