"""Monic orthogonal polynomials, kernel polynomials and the linearized family."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import InsufficientMoments, PivotOnSpectrum, SingularHankel
from .exact import Polynomial, poly_div_exact
from .jacobi import MonicJacobi
from .linalg import det
from .moments import MomentSequence, hankel_det


@dataclass(frozen=True)
class OrthoSequence:
    """``polys = (P_0, ..., P_n)`` and ``norms[j] = S(P_j^2)`` for ``j < n``.

    The last polynomial ``P_n`` has no norm: it would need ``c_{n-1}``, which
    an order-``n`` Jacobi matrix does not carry.
    """

    polys: Tuple[Polynomial, ...]
    norms: Tuple = ()

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, j):
        return self.polys[j]


def ortho_polys(J: MonicJacobi, n: int, mass=1) -> OrthoSequence:
    """``P_0 .. P_n`` from ``P_{j+1} = (x - b_j) P_j - c_{j-1} P_{j-1}``."""
    if n > J.order:
        raise InsufficientMoments(n, J.order)
    x = Polynomial.x()
    polys = [Polynomial((1,))]
    prev = Polynomial()
    for j in range(n):
        nxt = (x - J.b[j]) * polys[-1]
        if j > 0:
            nxt = nxt - J.c[j - 1] * prev
        prev = polys[-1]
        polys.append(nxt)
    norms = [Fraction(mass)]
    for j in range(1, n):
        norms.append(norms[-1] * J.c[j - 1])
    return OrthoSequence(tuple(polys), tuple(norms[:n]))


def ortho_poly_determinant(s: MomentSequence, j: int) -> Polynomial:
    """``P_j`` from the bordered Hankel determinant, divided by ``D_{j-1}``.

    Independent of the recurrence; expands along the row ``(1, x, ..., x^j)``.
    """
    if j == 0:
        return Polynomial((1,))
    if len(s) < 2 * j:
        raise InsufficientMoments(2 * j, len(s))
    d_prev = hankel_det(s, j - 1)
    if d_prev == 0:
        raise SingularHankel(j - 1)
    top = [[s[i + k] for k in range(j + 1)] for i in range(j)]
    coeffs = []
    for k in range(j + 1):
        minor = [row[:k] + row[k + 1:] for row in top]
        coeffs.append((-1) ** (j + k) * det(minor) / d_prev)
    return Polynomial(coeffs)


def kernel_polys(ops: OrthoSequence, pivot=0) -> Tuple[Polynomial, ...]:
    """Kernel polynomials ``(P_{j+1} - (P_{j+1}(p)/P_j(p)) P_j) / (x - p)``.

    Every ``P_j`` in ``ops`` must be nonzero at the pivot, including the last.

    Raises
    ------
    PivotOnSpectrum
        Some ``P_j(pivot) == 0``.
    NonzeroRemainder
        The division by ``x - pivot`` is inexact (an upstream bug).
    """
    vals = [p(pivot) for p in ops.polys]
    for j, v in enumerate(vals):
        if v == 0:
            raise PivotOnSpectrum(j, pivot)
    lin = Polynomial((-pivot, 1))
    out = []
    for j in range(len(ops.polys) - 1):
        num = ops.polys[j + 1] - (vals[j + 1] / vals[j]) * ops.polys[j]
        out.append(poly_div_exact(num, lin))
    return tuple(out)


def linearized_polys(gops: Tuple[Polynomial, ...], n: int) -> Tuple[Polynomial, ...]:
    """``T_0 .. T_{2n+1}`` with ``T_{2j} = G_j`` and ``T_{2j+1} = x G_j``.

    ``gops`` holds ``G_j(x) = P_j(x^2)``.
    """
    if n + 1 > len(gops):
        raise InsufficientMoments(n + 1, len(gops))
    x = Polynomial.x()
    out = []
    for j in range(n + 1):
        out.append(gops[j])
        out.append(x * gops[j])
    return tuple(out)


def squared_family(ops: OrthoSequence) -> Tuple[Polynomial, ...]:
    """``P_j(x^2)`` for every polynomial in ``ops``."""
    return tuple(p.compose_square() for p in ops.polys)
