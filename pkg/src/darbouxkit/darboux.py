"""Triangular factorizations of Jacobi matrices and the Darboux-type
transformations built on them: classical (UL), extended (unwrapping) and
shifted (Chihara, real or imaginary shift)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import InvalidShift, SignConditionViolated, SingularPivot
from .exact import ComplexRational, Polynomial, interleave, poly_div_exact
from .jacobi import MonicJacobi
from .linalg import Matrix
from .opoly import ortho_polys


@dataclass(frozen=True)
class NoShift:
    @property
    def sigma(self):
        return Fraction(0)

    @property
    def point(self):
        """Where the generalized matrix is shifted (``a`` in ``J - a I``)."""
        return Fraction(0)

    def __str__(self):
        return "none"


@dataclass(frozen=True)
class RealShift:
    """Shift by ``alpha`` of the generalized matrix; ``J`` is shifted by ``alpha^2``."""

    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        if a == 0:
            raise InvalidShift("a zero shift is the plain extended Darboux transform")
        object.__setattr__(self, "alpha", a)

    @property
    def sigma(self):
        return self.alpha * self.alpha

    @property
    def point(self):
        return self.alpha

    def __str__(self):
        return str(self.alpha)


@dataclass(frozen=True)
class ImaginaryShift:
    """Shift by ``i*alpha``; ``J`` is shifted by ``(i alpha)^2 = -alpha^2``."""

    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        if a == 0:
            raise InvalidShift("a zero shift is the plain extended Darboux transform")
        object.__setattr__(self, "alpha", a)

    @property
    def sigma(self):
        return -self.alpha * self.alpha

    @property
    def point(self):
        return ComplexRational(0, self.alpha)

    def __str__(self):
        return f"i:{self.alpha}"


Shift = Union[NoShift, RealShift, ImaginaryShift]


@dataclass(frozen=True)
class LUFactors:
    """``J - sigma I = L U`` with ``L`` unit lower bidiagonal (subdiagonal ``l_1, l_2, ...``)
    and ``U`` upper bidiagonal (diagonal ``u_0, u_1, ...``, unit superdiagonal)."""

    u: Tuple[Fraction, ...]
    l: Tuple[Fraction, ...]
    shift: Shift = NoShift()

    @property
    def order(self) -> int:
        return len(self.u)

    def lower(self) -> Matrix:
        n = self.order
        entries = {(i, i): Fraction(1) for i in range(n)}
        for k, v in enumerate(self.l):
            entries[(k + 1, k)] = v
        return Matrix.from_entries(n, entries)

    def upper(self) -> Matrix:
        n = self.order
        entries = {}
        for k, v in enumerate(self.u):
            entries[(k, k)] = v
            entries[(k, k + 1)] = Fraction(1)
        return Matrix.from_entries(n, entries)

    def product(self) -> Matrix:
        """``L U + sigma I``: reproduces the finite section of ``J``."""
        n = self.order
        return self.lower() @ self.upper() + Matrix.identity(n).scale(self.shift.sigma)

    def block_lower(self) -> Matrix:
        """Block factor with diagonal blocks ``[[1, 0], [-a, 1]]`` and
        subdiagonal blocks ``[[0, 0], [0, l_j]]``; ``a`` is the shift point."""
        a = self.shift.point
        n = 2 * self.order
        entries = {}
        for j in range(self.order):
            entries[(2 * j, 2 * j)] = Fraction(1)
            entries[(2 * j + 1, 2 * j + 1)] = Fraction(1)
            entries[(2 * j + 1, 2 * j)] = -a
        for k, v in enumerate(self.l):
            entries[(2 * k + 3, 2 * k + 1)] = v
        return Matrix.from_entries(n, entries)

    def block_upper(self) -> Matrix:
        """Block factor with diagonal blocks ``[[-a, 1], [u_j, 0]]`` and
        superdiagonal blocks ``[[0, 0], [1, 0]]``."""
        a = self.shift.point
        n = 2 * self.order
        entries = {}
        for j, v in enumerate(self.u):
            entries[(2 * j, 2 * j)] = -a
            entries[(2 * j, 2 * j + 1)] = Fraction(1)
            entries[(2 * j + 1, 2 * j)] = v
            entries[(2 * j + 1, 2 * j + 2)] = Fraction(1)
        return Matrix.from_entries(n, entries)

    def block_product(self) -> Matrix:
        """``L U + a I`` in block form: the finite section of the generalized matrix."""
        n = 2 * self.order
        return self.block_lower() @ self.block_upper() + Matrix.identity(n).scale(self.shift.point)


@dataclass(frozen=True)
class DarbouxResult:
    matrix: MonicJacobi
    polys: Tuple[Polynomial, ...]
    provenance: str
    factors: Optional[LUFactors] = None


def lu(J: MonicJacobi, shift: Shift = NoShift()) -> LUFactors:
    """Factor ``J - sigma I = L U``.

    ``u_j = -P_{j+1}(sigma) / P_j(sigma)`` and ``l_{j+1} = c_j / u_j``, where
    ``sigma`` is 0, ``alpha^2`` or ``-alpha^2`` for the three shift kinds.
    For a real shift the sign condition ``(-1)^j P_j(alpha^2) > 0`` is
    enforced degree by degree; that is how admissibility of ``alpha`` is
    decided without knowing the bottom of the support.

    Raises
    ------
    SingularPivot
        ``P_j(sigma) == 0`` for some ``1 <= j <= n``.
    SignConditionViolated
        Real shift with ``(-1)^j P_j(alpha^2) < 0``.
    """
    sigma = shift.sigma
    vals = J.values_at(sigma)
    for j in range(1, len(vals)):
        if vals[j] == 0:
            raise SingularPivot(j)
        if isinstance(shift, RealShift) and (-1) ** j * vals[j] < 0:
            raise SignConditionViolated(j)
    u = tuple(-vals[j + 1] / vals[j] for j in range(J.order))
    l = tuple(J.c[j] / u[j] for j in range(J.order - 1))
    return LUFactors(u, l, shift)


def ul(f: LUFactors) -> MonicJacobi:
    """Classical Darboux transform ``U L + sigma I`` (finite section).

    ``b~_j = u_j + l_{j+1} + sigma`` and ``c~_j = u_{j+1} l_{j+1}``. The last
    diagonal entry lacks ``l_n``, which is outside the section, so only the
    leading ``n-1`` block agrees with the infinite transform.
    """
    sigma = f.shift.sigma
    n = f.order
    b = tuple(f.u[j] + (f.l[j] if j < n - 1 else 0) + sigma for j in range(n))
    c = tuple(f.u[j + 1] * f.l[j] for j in range(n - 1))
    return MonicJacobi(b, c)


def _odd_family(J: MonicJacobi, point, sigma, vals):
    """``(P_{j+1}(x^2) - (P_{j+1}(sigma)/P_j(sigma)) P_j(x^2)) / (x - point)``
    next to ``P_j(x^2)``, interleaved."""
    squared = [p.compose_square() for p in ortho_polys(J, J.order).polys]
    lin = Polynomial((-point, 1))
    odd = []
    for j in range(J.order):
        num = squared[j + 1] - (vals[j + 1] / vals[j]) * squared[j]
        odd.append(poly_div_exact(num, lin))
    return tuple(interleave(squared, odd))


def extended_darboux(J: MonicJacobi) -> DarbouxResult:
    """UL step on the generalized matrix of ``S(lambda^2)``.

    The result is the Jacobi matrix of ``lambda S(lambda^2)``: zero diagonal
    and subdiagonal chain ``(u_0, l_1, u_1, l_2, ...)`` of order ``2n``.
    ``polys`` runs ``T~_0 .. T~_{2n}``.
    """
    f = lu(J, NoShift())
    chain = tuple(interleave(f.u, f.l))
    matrix = MonicJacobi((Fraction(0),) * (2 * J.order), chain)
    polys = _odd_family(J, Fraction(0), Fraction(0), J.values_at(Fraction(0)))
    return DarbouxResult(matrix, polys, "extended", f)


def chihara(J: MonicJacobi, shift: Union[RealShift, ImaginaryShift]) -> DarbouxResult:
    """Shifted extended Darboux transform ``U L + a I`` (Chihara construction).

    For a real shift ``alpha`` the matrix is the Jacobi matrix of
    ``(lambda - alpha) S(lambda^2)``: diagonal ``(-alpha, alpha, -alpha, ...)``
    and chain ``(u_0, l_1, u_1, ...)``. An imaginary shift gives the diagonal
    ``(-i alpha, i alpha, ...)`` with the same kind of positive real chain.
    """
    if not isinstance(shift, (RealShift, ImaginaryShift)):
        raise InvalidShift("chihara needs a nonzero real or imaginary shift; "
                           "use extended_darboux for the unshifted transform")
    f = lu(J, shift)
    a = shift.point
    diag = tuple(-a if k % 2 == 0 else a for k in range(2 * J.order))
    chain = tuple(interleave(f.u, f.l))
    matrix = MonicJacobi(diag, chain)
    polys = _odd_family(J, a, shift.sigma, J.values_at(shift.sigma))
    tag = "chihara-real" if isinstance(shift, RealShift) else "chihara-imag"
    return DarbouxResult(matrix, polys, tag, f)


def recurrence_polys(J: MonicJacobi) -> Tuple[Polynomial, ...]:
    """Monic polynomials generated by ``J`` (``P_0 .. P_n``), any coefficient ring."""
    return ortho_polys(J, J.order).polys
