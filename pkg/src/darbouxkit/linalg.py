"""Small dense matrices over exact rings and fraction-free determinants."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import LengthMismatch


class Matrix:
    """Immutable square matrix with exact entries (Fraction, ComplexRational or Polynomial)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise LengthMismatch("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, n: int, entries: dict) -> "Matrix":
        """Zero matrix of order ``n`` with ``entries[(i, j)]`` filled in."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in entries.items():
            if 0 <= i < n and 0 <= j < n:
                rows[i][j] = v
        return cls(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Fraction(0)
                for k in range(n):
                    a = self.rows[i][k]
                    if a == 0:
                        continue
                    b = other.rows[k][j]
                    if b == 0:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def apply(self, vec: Sequence):
        if len(vec) != self.n:
            raise LengthMismatch(f"vector of length {len(vec)} for order {self.n}")
        out = []
        for r in self.rows:
            acc = Fraction(0)
            for a, x in zip(r, vec):
                if a != 0:
                    acc = acc + a * x
            out.append(acc)
        return out

    def leading(self, k: int) -> "Matrix":
        return Matrix([r[:k] for r in self.rows[:k]])

    def _same(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            raise LengthMismatch("matrix orders differ")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.rows) + "])"


def det(rows: Sequence[Sequence]):
    """Bareiss fraction-free determinant over any exact integral domain.

    Entries only need ``+``, ``-``, ``*``, exact ``/`` and comparison with 0,
    so this serves Fractions, Gaussian rationals and polynomials alike.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign > 0 else -result
