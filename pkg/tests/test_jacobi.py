import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from corpus import SYMMETRIC, random_discrete, two_atom_moments
from darbouxkit import (
    DegenerateMoments,
    InsufficientMoments,
    LengthMismatch,
    Matrix,
    MomentSequence,
    MonicJacobi,
    NamedLaguerre,
    OddGeneralizedTruncation,
    Polynomial,
    char_poly,
    definitizable_check,
    generalized_from,
    gram,
    indefinite_inner,
    jacobi_from_moments,
    measure_moments,
    ortho_polys,
    truncate,
)

x = Polynomial.x()
LAG = measure_moments(NamedLaguerre(F(-1, 2)), 40)
TWO = jacobi_from_moments(two_atom_moments(), 2)


def leverrier(m: Matrix) -> Polynomial:
    """Faddeev-LeVerrier recursion, independent of elimination."""
    n = m.n
    coeffs = [F(0)] * (n + 1)
    coeffs[n] = F(1)
    M = Matrix.zeros(n)
    for k in range(1, n + 1):
        M = m @ M + Matrix.identity(n).scale(coeffs[n - k + 1])
        trace = sum((m @ M)[i, i] for i in range(n))
        coeffs[n - k] = -trace / k
    return Polynomial(coeffs)


def test_jacobi_examples():
    assert TWO == MonicJacobi((F(5, 2), F(5, 2)), (F(9, 4),))
    J = jacobi_from_moments(LAG, 3)
    assert J.b == (F(1, 2), F(5, 2), F(9, 2)) and J.c == (F(1, 2), 3)
    with pytest.raises(DegenerateMoments) as err:
        jacobi_from_moments(MomentSequence((1, 1, 1, 1)), 2)
    assert err.value.rank == 1
    with pytest.raises(InsufficientMoments):
        jacobi_from_moments(MomentSequence((1, 1)), 2)


def test_half_laguerre_closed_form():
    J = jacobi_from_moments(LAG, 20)
    assert J.b == tuple(2 * j + F(1, 2) for j in range(20))
    assert J.c == tuple(j * (j - F(1, 2)) for j in range(1, 20))


def test_generalized_blocks():
    G = generalized_from(TWO)
    assert G.block_diagonal(0) == ((0, 1), (F(5, 2), 0))
    assert G.block_lower(0) == ((0, 0), (F(9, 4), 0))
    assert generalized_from(jacobi_from_moments(LAG, 2)).block_diagonal(1) == ((0, 1), (F(5, 2), 0))
    single = generalized_from(MonicJacobi((F(3),), ()))
    assert single.blocks == 1


def test_truncate_generalized():
    G = generalized_from(TWO)
    assert truncate(G, 2) == Matrix([[0, 1], [F(5, 2), 0]])
    assert truncate(G, 4) == Matrix([[0, 1, 0, 0], [F(5, 2), 0, 1, 0], [0, 0, 0, 1], [F(9, 4), 0, F(5, 2), 0]])
    with pytest.raises(OddGeneralizedTruncation):
        truncate(G, 3)


def test_char_poly_examples():
    assert char_poly(truncate(generalized_from(TWO), 2)) == x * x - F(5, 2)
    assert char_poly(truncate(TWO, 2)) == x * x - 5 * x + 4
    assert char_poly(Matrix.zeros(1)) == x


def test_gram_examples():
    assert gram(2) == Matrix([[0, 1], [1, 0]])
    G = gram(4)
    assert G == Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert G @ G == Matrix.identity(4) and G == G.transpose()
    with pytest.raises(OddGeneralizedTruncation):
        gram(3)


def test_indefinite_inner_examples():
    assert indefinite_inner([1, 0], [1, 0]) == 0
    assert indefinite_inner([1, 0], [0, 1]) == 1
    assert indefinite_inner([1, 2, 3, 4], [1, 0, 0, 1]) == 5
    with pytest.raises(LengthMismatch):
        indefinite_inner([1, 0], [1, 0, 0, 0])


def test_definitizable_examples():
    assert definitizable_check(two_atom_moments(4), 2) is True
    assert definitizable_check(measure_moments(SYMMETRIC, 4), 2) is False
    assert definitizable_check(two_atom_moments(4), 0) is True


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_char_poly_matches_leverrier_and_spectrum(seed):
    spec = random_discrete(random.Random(seed))
    n = len(spec.atoms)
    J = jacobi_from_moments(measure_moments(spec, 2 * n), n)
    P = ortho_polys(J, n)
    G = generalized_from(J)
    for N in range(1, n + 1):
        assert char_poly(truncate(J, N)) == leverrier(truncate(J, N)) == P[N]
        assert char_poly(truncate(G, 2 * N)) == P[N].compose_square()
    # the top orthogonal polynomial vanishes on the support
    assert all(P[n](t) == 0 for t in spec.points)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_stieltjes_coefficients_positive(seed):
    spec = random_discrete(random.Random(seed), squares=False)
    n = len(spec.atoms)
    J = jacobi_from_moments(measure_moments(spec, 2 * n), n)
    assert all(b > 0 for b in J.b) and all(c > 0 for c in J.c)
    assert definitizable_check(measure_moments(spec, 2 * n), n)


def test_finite_rank_exhausts():
    with pytest.raises(DegenerateMoments) as err:
        jacobi_from_moments(two_atom_moments(8), 3)
    assert err.value.rank == 2
