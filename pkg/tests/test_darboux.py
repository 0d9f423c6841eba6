import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from corpus import DELTA_ZERO, TWO_ATOM, random_discrete, two_atom_moments
from darbouxkit import (
    ComplexRational,
    Functional,
    ImaginaryShift,
    InvalidShift,
    LUFactors,
    MonicJacobi,
    NamedLaguerre,
    NoShift,
    Polynomial,
    RealShift,
    SignConditionViolated,
    SingularPivot,
    chihara,
    chihara_measure,
    extended_darboux,
    generalized_from,
    jacobi_from_moments,
    lu,
    measure_moments,
    recurrence_polys,
    truncate,
    ul,
    unwrap_measure,
    unwrap_moments,
)

x = Polynomial.x()
TWO = jacobi_from_moments(two_atom_moments(), 2)
LAG = jacobi_from_moments(measure_moments(NamedLaguerre(F(-1, 2)), 40), 20)


def test_lu_examples():
    f = lu(TWO)
    assert f.u == (F(5, 2), F(8, 5)) and f.l == (F(9, 10),)
    f = lu(TWO, RealShift(F(1, 2)))
    assert f.u == (F(9, 4), F(5, 4)) and f.l == (1,)
    f = lu(TWO, ImaginaryShift(1))
    assert f.u == (F(7, 2), F(20, 7)) and f.l == (F(9, 14),)
    assert TWO.b[1] + 1 == f.u[1] + f.l[0]
    with pytest.raises(SingularPivot) as err:
        lu(jacobi_from_moments(DELTA_ZERO.values, 1))
    assert err.value.index == 1


def test_shift_outside_gap():
    with pytest.raises(SignConditionViolated):
        lu(TWO, RealShift(F(3, 2)))


def test_zero_shift_forbidden():
    with pytest.raises(InvalidShift):
        RealShift(0)
    with pytest.raises(InvalidShift):
        chihara(TWO, NoShift())


def test_lu_round_trip_classical_and_block():
    for shift in (NoShift(), RealShift(F(1, 2)), ImaginaryShift(F(2, 3))):
        f = lu(TWO, shift)
        assert f.product() == truncate(TWO, 2)
        assert f.block_product() == truncate(generalized_from(TWO), 4)


def test_ul_examples():
    D = ul(lu(TWO))
    assert D.b[0] == F(17, 5) and D.c[0] == F(36, 25)
    s = two_atom_moments()
    assert D.b[0] == s[2] / s[1]
    assert ul(lu(LAG)).b[0] == F(3, 2)
    assert ul(LUFactors((F(3),), (), RealShift(F(1, 2)))).b == (F(3) + F(1, 4),)


def test_ul_is_kernel_measure_jacobi():
    # Darboux of Laguerre(a) is Laguerre(a+1), up to the truncated last entry
    D = ul(lu(LAG))
    target = jacobi_from_moments(measure_moments(NamedLaguerre(F(1, 2)), 40), 20)
    assert D.c == target.c and D.b[:-1] == target.b[:-1]


def test_extended_examples():
    E = extended_darboux(TWO)
    assert E.matrix.b == (0, 0, 0, 0) and E.matrix.c == (F(5, 2), F(9, 10), F(8, 5))
    assert E.polys[1] == x and E.polys[2] == x * x - F(5, 2) and E.polys[3] == x**3 - F(17, 5) * x
    assert E.provenance == "extended"
    unwrapped = jacobi_from_moments(measure_moments(unwrap_measure(TWO_ATOM), 8), 4)
    assert E.matrix == unwrapped
    single = extended_darboux(MonicJacobi((F(7),), ()))
    assert single.matrix.c == (F(7),) and single.matrix.b == (0, 0)
    assert single.polys[1] == x and lu(MonicJacobi((F(7),), ())).u == (F(7),)


def test_extended_half_laguerre_is_hermite():
    E = extended_darboux(LAG)
    assert E.matrix.c == tuple(F(k + 1, 2) for k in range(39))


def test_chihara_examples():
    C = chihara(TWO, RealShift(F(1, 2)))
    assert C.matrix.b == (F(-1, 2), F(1, 2), F(-1, 2), F(1, 2))
    assert C.matrix.c == (F(9, 4), 1, F(5, 4))
    assert C.polys[1] == x + F(1, 2)
    assert C.provenance == "chihara-real"
    mu = chihara_measure(TWO_ATOM, F(1, 2))
    assert jacobi_from_moments(measure_moments(mu, 8), 4) == C.matrix


def test_chihara_imaginary_example():
    i = ComplexRational(0, 1)
    C = chihara(TWO, ImaginaryShift(1))
    assert C.matrix.b == (-i, i, -i, i)
    assert C.matrix.c == (F(7, 2), F(9, 14), F(20, 7))
    assert C.provenance == "chihara-imag"
    frak = unwrap_moments(two_atom_moments())
    m = Functional.shifted(frak, i).induced_moments(8)
    assert jacobi_from_moments(m, 4) == C.matrix


def _admissible(spec, den):
    alpha = F(1, den)
    while alpha * alpha >= min(spec.points):
        alpha /= 2
    return alpha


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 5))
def test_shifted_factorization_properties(seed, den):
    spec = random_discrete(random.Random(seed))
    n = len(spec.atoms)
    s = measure_moments(spec, 4 * n)
    J = jacobi_from_moments(s, n)
    alpha = _admissible(spec, den)
    frak = unwrap_moments(s)
    for shift in (RealShift(alpha), ImaginaryShift(F(den, 3))):
        f = lu(J, shift)
        assert all(v > 0 for v in f.u + f.l)
        for j in range(n):
            assert J.b[j] - shift.sigma == f.u[j] + (f.l[j - 1] if j else 0)
        for j in range(n - 1):
            assert J.c[j] == f.l[j] * f.u[j]
        C = chihara(J, shift)
        moments = Functional.shifted(frak, shift.point).induced_moments(4 * n)
        assert jacobi_from_moments(moments, 2 * n) == C.matrix
        assert recurrence_polys(C.matrix) == C.polys
        S_alpha = Functional.shifted(frak, shift.point)
        for k, p in enumerate(C.polys):
            for m in range(k):
                assert S_alpha(p * x**m) == 0
    mu = chihara_measure(spec, alpha)
    assert jacobi_from_moments(measure_moments(mu, 4 * n), 2 * n) == chihara(J, RealShift(alpha)).matrix


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_extended_polys_close_recurrence(seed):
    spec = random_discrete(random.Random(seed), squares=False)
    n = len(spec.atoms)
    E = extended_darboux(jacobi_from_moments(measure_moments(spec, 2 * n), n))
    assert recurrence_polys(E.matrix) == E.polys
    assert all(E.polys[2 * j + 1](0) == 0 for j in range(n))
