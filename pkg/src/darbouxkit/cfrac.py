"""J-, S- and P-fraction coefficients, convergents and Laurent matching."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DegenerateMoments, DepthExceeded, NotStieltjes, SingularPivot
from .exact import Polynomial, _coerce, interleave
from .jacobi import MonicJacobi, jacobi_from_moments
from .moments import MomentSequence


class FractionKind(str, enum.Enum):
    J = "J"
    S = "S"
    P = "P"


@dataclass(frozen=True)
class ContinuedFraction:
    """Finite continued-fraction prefix.

    J: ``-s0/(x - b0 - c0/(x - b1 - ...))``; P: the same in ``x^2``;
    S: ``-s0/(x - d1/(1 - d2/(x - d3/(1 - ...))))``.
    """

    kind: FractionKind
    b: Tuple = ()
    c: Tuple = ()
    d: Tuple = ()
    mass: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "kind", FractionKind(self.kind))
        for name in ("b", "c", "d"):
            object.__setattr__(self, name, tuple(_coerce(v) for v in getattr(self, name)))
        object.__setattr__(self, "mass", _coerce(self.mass))

    @property
    def levels(self) -> int:
        """Number of partial denominators the prefix determines."""
        if self.kind is FractionKind.S:
            return len(self.d) + 1
        return len(self.b)


@dataclass(frozen=True)
class RationalApproximant:
    numerator: Polynomial
    denominator: Polynomial


def _default_depth(s: MomentSequence, depth: Optional[int]) -> int:
    return len(s) // 2 if depth is None else depth


def jfraction(s: MomentSequence, depth: Optional[int] = None) -> ContinuedFraction:
    J = jacobi_from_moments(s, _default_depth(s, depth))
    return ContinuedFraction(FractionKind.J, J.b, J.c, mass=s.mass)


def pfraction(s: MomentSequence, depth: Optional[int] = None) -> ContinuedFraction:
    """P-fraction of ``F(x^2)``; it reuses the J-fraction coefficients verbatim."""
    J = jacobi_from_moments(s, _default_depth(s, depth))
    return ContinuedFraction(FractionKind.P, J.b, J.c, mass=s.mass)


def _rank_limited_jacobi(s: MomentSequence, n: int) -> MonicJacobi:
    try:
        return jacobi_from_moments(s, n)
    except DegenerateMoments as exc:
        if exc.rank == 0:
            raise
        # finite-rank data: the fraction terminates at the rank
        return jacobi_from_moments(s, exc.rank)


def sfraction(s: MomentSequence, depth: Optional[int] = None) -> ContinuedFraction:
    """S-fraction chain ``d = (u_0, l_1, u_1, l_2, ...)`` from ``J = L U``.

    The chain is positive exactly for Stieltjes data. A measure of rank ``r``
    with an atom at the origin has ``P_r(0) = 0``: the fraction terminates
    there and the trailing zero pivot is dropped (``delta_0`` gives ``d = ()``).

    Raises
    ------
    NotStieltjes
        Some chain element is negative.
    SingularPivot
        ``P_j(0) == 0`` strictly inside the available depth.
    """
    J = _rank_limited_jacobi(s, _default_depth(s, depth))
    n = J.order
    vals = J.values_at(Fraction(0))
    u, l = [], []
    for j in range(n):
        if vals[j + 1] == 0:
            if j + 1 < n:
                raise SingularPivot(j + 1)
            break
        if (-1) ** (j + 1) * vals[j + 1] < 0:
            raise NotStieltjes(2 * j + 1, "sign condition fails")
        u.append(-vals[j + 1] / vals[j])
        if j < n - 1:
            if J.c[j] <= 0:
                raise NotStieltjes(2 * j + 2, "nonpositive recurrence coefficient")
            l.append(J.c[j] / u[-1])
    d = interleave(u, l)
    return ContinuedFraction(FractionKind.S, d=tuple(d), mass=s.mass)


def even_contraction(cf: ContinuedFraction) -> ContinuedFraction:
    """J-fraction from an S-chain: ``b_j = d_{2j} + d_{2j+1}``, ``c_j = d_{2j+1} d_{2j+2}`` (``d_0 = 0``)."""
    if cf.kind is not FractionKind.S:
        raise ValueError("even contraction needs an S-fraction")
    d = (Fraction(0),) + cf.d
    nb = (len(d)) // 2
    b = tuple(d[2 * j] + d[2 * j + 1] for j in range(nb))
    c = tuple(d[2 * j + 1] * d[2 * j + 2] for j in range(nb - 1))
    return ContinuedFraction(FractionKind.J, b, c, mass=cf.mass)


def _partials(cf: ContinuedFraction, k: int):
    x = Polynomial.x()
    if cf.kind is FractionKind.S:
        nums = [-cf.mass] + [-v for v in cf.d[: k - 1]]
        dens = [x if i % 2 == 0 else Polynomial((1,)) for i in range(k)]
        return nums, dens
    var = x if cf.kind is FractionKind.J else x * x
    nums = [-cf.mass] + [-v for v in cf.c[: k - 1]]
    dens = [var - cf.b[i] for i in range(k)]
    return nums, dens


def approximant(cf: ContinuedFraction, k: int) -> RationalApproximant:
    """``k``-th convergent via ``A_j = beta_j A_{j-1} + alpha_j A_{j-2}`` (same for ``B``)."""
    if k < 0 or k > cf.levels:
        raise DepthExceeded(k, cf.levels)
    nums, dens = _partials(cf, k)
    a_prev, a = Polynomial((1,)), Polynomial()
    b_prev, b = Polynomial(), Polynomial((1,))
    for alpha, beta in zip(nums, dens):
        a_prev, a = a, beta * a + alpha * a_prev
        b_prev, b = b, beta * b + alpha * b_prev
    return RationalApproximant(a, b)


def laurent_coefficients(appr: RationalApproximant, count: int) -> list:
    """``e_0 .. e_{count-1}`` with ``N/D = sum_j e_j x^{-(j+1)}`` at infinity."""
    N, D = appr.numerator, appr.denominator
    if N.is_zero():
        return [Fraction(0)] * count
    if N.degree >= D.degree:
        raise ValueError("approximant must be strictly proper")
    d = D.degree
    lead = D.leading
    e = []
    for k in range(count):
        acc = N.coeff(d - 1 - k)
        for i in range(d):
            idx = i - d + k
            if idx >= 0:
                acc = acc - D.coeffs[i] * e[idx]
        e.append(acc / lead)
    return e


def laurent_match(appr: RationalApproximant, s: MomentSequence) -> int:
    """Largest ``m`` with ``N/D = -sum_{j<m} s_j x^{-(j+1)} + O(x^{-(m+1)})``.

    Capped at ``len(s)``.
    """
    e = laurent_coefficients(appr, len(s))
    m = 0
    for ej, sj in zip(e, s):
        if ej != -sj:
            break
        m += 1
    return m
