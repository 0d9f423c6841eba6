"""Monic Jacobi matrices, monic generalized (2x2 block) Jacobi matrices and
their finite sections."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .errors import (
    DegenerateMoments,
    InsufficientMoments,
    LengthMismatch,
    OddGeneralizedTruncation,
)
from .exact import Polynomial, _coerce
from .linalg import Matrix, det
from .moments import Functional, MomentSequence


@dataclass(frozen=True)
class MonicJacobi:
    """Tridiagonal matrix with diagonal ``b``, subdiagonal ``c`` and unit superdiagonal.

    ``b`` may hold complex-rational entries (imaginary-shift Chihara matrices).
    """

    b: Tuple
    c: Tuple = ()

    def __post_init__(self):
        b = tuple(_coerce(v) for v in self.b)
        c = tuple(_coerce(v) for v in self.c)
        if not b:
            raise LengthMismatch("a Jacobi matrix needs at least one diagonal entry")
        if len(c) != len(b) - 1:
            raise LengthMismatch(f"len(c) = {len(c)} but len(b) = {len(b)}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def order(self) -> int:
        return len(self.b)

    def section(self, n: int) -> "MonicJacobi":
        if not 1 <= n <= self.order:
            raise InsufficientMoments(n, self.order)
        return MonicJacobi(self.b[:n], self.c[:n - 1])

    def shifted(self, sigma) -> "MonicJacobi":
        """``J - sigma I``."""
        return MonicJacobi(tuple(v - sigma for v in self.b), self.c)

    def values_at(self, x) -> list:
        """``[P_0(x), ..., P_n(x)]`` straight from the three-term recurrence."""
        vals = [Fraction(1)]
        prev = Fraction(0)
        for j, bj in enumerate(self.b):
            nxt = (x - bj) * vals[-1] - (self.c[j - 1] * prev if j > 0 else 0)
            prev = vals[-1]
            vals.append(nxt)
        return vals


@dataclass(frozen=True)
class GeneralizedJacobi:
    """Monic generalized Jacobi matrix of ``F(lambda^2)``, stored as chains.

    Block ``j`` is ``B_j = [[0, 1], [b_j, 0]]``; the off-diagonal blocks are
    ``D_j = [[0, 0], [1, 0]]`` above and ``C_j = [[0, 0], [c_j, 0]]`` below.
    """

    b: Tuple
    c: Tuple = ()

    def __post_init__(self):
        MonicJacobi(self.b, self.c)  # same length contract
        object.__setattr__(self, "b", tuple(_coerce(v) for v in self.b))
        object.__setattr__(self, "c", tuple(_coerce(v) for v in self.c))

    @property
    def blocks(self) -> int:
        return len(self.b)

    @property
    def order(self) -> int:
        return 2 * len(self.b)

    def block_diagonal(self, j: int):
        return ((Fraction(0), Fraction(1)), (self.b[j], Fraction(0)))

    def block_upper(self, j: int):
        return ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))

    def block_lower(self, j: int):
        return ((Fraction(0), Fraction(0)), (self.c[j], Fraction(0)))


def jacobi_from_moments(s: MomentSequence, n: int) -> MonicJacobi:
    """Recurrence coefficients of order ``n`` from moments ``s_0 .. s_{2n-1}``.

    Uses the Stieltjes (Gram-Schmidt) recursion against the moment functional:
    ``b_j = S(x P_j^2) / S(P_j^2)`` and ``c_{j-1} = S(P_j^2) / S(P_{j-1}^2)``.
    Only nonvanishing of ``S(P_j^2)`` is needed, so quasi-definite (and
    complex) moment data is accepted.

    Raises
    ------
    InsufficientMoments
        Fewer than ``2n`` moments.
    DegenerateMoments
        ``S(P_j^2) = 0`` for some ``j < n``; ``rank`` is that ``j``.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if len(s) < 2 * n:
        raise InsufficientMoments(2 * n, len(s))
    fn = Functional(s)
    x = Polynomial.x()
    b, c = [], []
    p_prev, p = Polynomial(), Polynomial((1,))
    norm_prev = None
    for j in range(n):
        sq = p * p
        norm = fn(sq)
        if norm == 0:
            raise DegenerateMoments(j)
        b.append(fn(x * sq) / norm)
        if j > 0:
            c.append(norm / norm_prev)
        step = (x - b[-1]) * p
        if j > 0:
            step = step - c[-1] * p_prev
        p_prev, p, norm_prev = p, step, norm
    return MonicJacobi(tuple(b), tuple(c))


def generalized_from(J: MonicJacobi) -> GeneralizedJacobi:
    return GeneralizedJacobi(J.b, J.c)


def truncate(m: Union[MonicJacobi, GeneralizedJacobi], N: int) -> Matrix:
    """Leading ``N x N`` section in scalar layout."""
    if isinstance(m, GeneralizedJacobi):
        if N % 2:
            raise OddGeneralizedTruncation(N)
        if N // 2 > m.blocks:
            raise InsufficientMoments(N // 2, m.blocks)
        entries = {}
        for j in range(N // 2):
            entries[(2 * j, 2 * j + 1)] = Fraction(1)
            entries[(2 * j + 1, 2 * j)] = m.b[j]
            entries[(2 * j + 1, 2 * j + 2)] = Fraction(1)
            if j < m.blocks - 1:
                entries[(2 * j + 3, 2 * j)] = m.c[j]
        return Matrix.from_entries(N, entries)
    if N > m.order:
        raise InsufficientMoments(N, m.order)
    entries = {}
    for i in range(N):
        entries[(i, i)] = m.b[i]
        entries[(i, i + 1)] = Fraction(1)
        if i > 0:
            entries[(i, i - 1)] = m.c[i - 1]
    return Matrix.from_entries(N, entries)


def char_poly(m: Matrix) -> Polynomial:
    """``det(x I - m)`` by fraction-free elimination over polynomial entries.

    Leading minors of ``x I - m`` are monic characteristic polynomials, so no
    pivot ever vanishes.
    """
    x = Polynomial.x()
    rows = [[(x if i == j else Polynomial()) - m[i, j] for j in range(m.n)]
            for i in range(m.n)]
    out = det(rows)
    return out if isinstance(out, Polynomial) else Polynomial((out,))


def gram(N: int) -> Matrix:
    """Block-diagonal Gram matrix ``diag([[0,1],[1,0]], ...)`` of order ``N``."""
    if N % 2:
        raise OddGeneralizedTruncation(N)
    entries = {}
    for j in range(N // 2):
        entries[(2 * j, 2 * j + 1)] = Fraction(1)
        entries[(2 * j + 1, 2 * j)] = Fraction(1)
    return Matrix.from_entries(N, entries)


def indefinite_inner(x: Sequence, y: Sequence):
    """``[x, y] = (G x, y)``."""
    if len(x) != len(y) or len(x) % 2:
        raise LengthMismatch(f"need equal even lengths, got {len(x)} and {len(y)}")
    gx = gram(len(x)).apply([_coerce(v) for v in x])
    return sum((a * _coerce(b) for a, b in zip(gx, y)), Fraction(0))


def definitizable_check(s: MomentSequence, n: int) -> bool:
    """True iff ``(-1)^j P_j(0) > 0`` for every ``j <= n``.

    This sign condition is the finite, exactly testable content of
    non-negativity of the generalized Jacobi matrix of ``S(lambda^2)``.
    Moment data that degenerates before order ``n`` is reported as False.
    """
    if n == 0:
        return True
    try:
        J = jacobi_from_moments(s, n)
    except DegenerateMoments:
        return False
    vals = J.values_at(Fraction(0))
    return all((-1) ** j * v > 0 for j, v in enumerate(vals))
