"""Acceptance criteria 1-9. Every comparison is exact equality."""
import random
from fractions import Fraction as F
from math import factorial

import pytest

from corpus import CORPUS_SIZE, DELTA_ZERO, LAGUERRE_ALPHAS, corpus, two_atom_moments
from darbouxkit import (
    ComplexRational,
    Discrete,
    Functional,
    ImaginaryShift,
    Kind,
    NamedLaguerre,
    Polynomial,
    RealShift,
    SingularPivot,
    approximant,
    char_poly,
    chihara,
    classify,
    even_contraction,
    extended_darboux,
    generalized_from,
    hankel_det,
    jacobi_from_moments,
    jfraction,
    kernel_polys,
    laurent_match,
    linearized_polys,
    lu,
    measure_moments,
    ortho_poly_determinant,
    ortho_polys,
    pfraction,
    sfraction,
    squared_family,
    truncate,
    ul,
    unwrap_measure,
    unwrap_moments,
    verify_all,
)

x = Polynomial.x()
CORPUS = corpus()


def depth_of(spec):
    return len(spec.atoms)


def jacobi_of(spec, n, extra=0):
    s = measure_moments(spec, 4 * n + extra)
    return s, jacobi_from_moments(s, n)


def rising(a, j):
    out = F(1)
    for i in range(j):
        out *= a + i
    return out


def binom(a, m):
    out = F(1)
    for i in range(m):
        out *= F(a - i) / (i + 1)
    return out


def monic_laguerre(n, alpha):
    """Closed-form monic generalized Laguerre polynomial."""
    coeffs = [(-1) ** k * binom(n + alpha, n - k) / factorial(k) for k in range(n + 1)]
    return Polynomial(coeffs) * ((-1) ** n * factorial(n))


def test_corpus_shape():
    assert len(CORPUS) >= CORPUS_SIZE
    assert all(1 <= depth_of(s) <= 6 for s in CORPUS)
    assert all(0 < t <= 100 for s in CORPUS for t in s.points)


# 1 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(1, "Laguerre(-1/2) unwraps to the Hermite chain; odd polys are x L_n^(1/2)(x^2)")
def test_laguerre_to_hermite():
    n = 11
    s = measure_moments(NamedLaguerre(F(-1, 2)), 4 * n)
    assert s.values == tuple(rising(F(1, 2), j) for j in range(4 * n))
    J = jacobi_from_moments(s, n)
    E = extended_darboux(J)
    assert all(b == 0 for b in E.matrix.b)
    assert len(E.matrix.c) >= 20
    assert E.matrix.c[:20] == tuple(F(k + 1, 2) for k in range(20))
    kernel = kernel_polys(ortho_polys(J, n), 0)
    for m in range(9):
        oracle = monic_laguerre(m, F(1, 2))
        assert kernel[m] == oracle
        assert E.polys[2 * m + 1] == x * oracle.compose_square()
        assert E.polys[2 * m] == monic_laguerre(m, F(-1, 2)).compose_square()


# 2 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(2, "unwrapped-measure Jacobi matrix equals extended Darboux matrix (corpus)")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_unwrapping_consistency(index):
    spec = CORPUS[index]
    n = depth_of(spec)
    assert n <= 8
    _, J = jacobi_of(spec, n)
    sym = unwrap_measure(spec)
    target = jacobi_from_moments(measure_moments(sym, 4 * n), 2 * n)
    assert extended_darboux(J).matrix == target


# 3 ------------------------------------------------------------------------------------

def _almost_orthogonality(s, n, kmax=8):
    ops = ortho_polys(jacobi_from_moments(s, n), n, mass=s.mass)
    T = linearized_polys(squared_family(ops), n)
    S = Functional(unwrap_moments(s))
    assert S(Polynomial((1,))) == 0
    for j in range(min(n, kmax) + 1):
        ratio = hankel_det(s, j) / hankel_det(s, j - 1)
        for k in range(min(2 * n + 1, kmax) + 1):
            assert S(T[2 * j] * T[k]) == (ratio if k == 2 * j + 1 else 0)
            assert S(T[2 * j + 1] * T[k]) == (ratio if k == 2 * j else 0)


@pytest.mark.acceptance(3, "almost-orthogonality of the linearized family, neutrality S(1)=0")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_almost_orthogonality_corpus(index):
    spec = CORPUS[index]
    n = depth_of(spec)
    _almost_orthogonality(measure_moments(spec, 4 * n + 4), n)


@pytest.mark.acceptance(3, "almost-orthogonality of the linearized family, neutrality S(1)=0")
@pytest.mark.parametrize("alpha", LAGUERRE_ALPHAS, ids=str)
def test_almost_orthogonality_laguerre(alpha):
    _almost_orthogonality(measure_moments(NamedLaguerre(alpha), 40), 9)


# 4 ------------------------------------------------------------------------------------

def _spectrum(s, n):
    G = generalized_from(jacobi_from_moments(s, n))
    for N in range(1, min(n, 8) + 1):
        assert char_poly(truncate(G, 2 * N)) == ortho_poly_determinant(s, N).compose_square()


@pytest.mark.acceptance(4, "char_poly of the 2N generalized section equals P_N(x^2)")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_spectrum_mapping_corpus(index):
    spec = CORPUS[index]
    n = depth_of(spec)
    _spectrum(measure_moments(spec, 2 * n), n)


@pytest.mark.acceptance(4, "char_poly of the 2N generalized section equals P_N(x^2)")
def test_spectrum_mapping_laguerre():
    _spectrum(measure_moments(NamedLaguerre(F(-1, 2)), 16), 8)


# 5 ------------------------------------------------------------------------------------

def _lu_algebra(J):
    f = lu(J)
    assert f.lower() @ f.upper() == truncate(J, J.order)
    for j in range(J.order):
        assert J.b[j] == f.u[j] + (f.l[j - 1] if j else 0)
    for j in range(J.order - 1):
        assert J.c[j] == f.l[j] * f.u[j]
    return f


@pytest.mark.acceptance(5, "LU reproduces J, contraction identities, UL = Jacobi of s'_k = s_{k+1}")
@pytest.mark.parametrize("alpha", LAGUERRE_ALPHAS, ids=str)
def test_lu_darboux_laguerre(alpha):
    n = 15
    s = measure_moments(NamedLaguerre(alpha), 4 * n + 4)
    # one extra level supplies l_n for the last diagonal entry
    f = _lu_algebra(jacobi_from_moments(s, n + 1))
    assert ul(f).section(n) == jacobi_from_moments(s.shifted(0), n)
    _lu_algebra(jacobi_from_moments(s, n))


@pytest.mark.acceptance(5, "LU reproduces J, contraction identities, UL = Jacobi of s'_k = s_{k+1}")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_lu_darboux_corpus(index):
    spec = CORPUS[index]
    n = depth_of(spec)
    s, J = jacobi_of(spec, n)
    f = _lu_algebra(J)
    # rank n: the missing l_n multiplies c_{n-1} = 0, so the section is exact
    assert ul(f) == jacobi_from_moments(s.shifted(0), n)


# 6 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(6, "Chihara construction on the two-atom measure with alpha = 1/2")
def test_chihara_two_atom():
    J = jacobi_from_moments(two_atom_moments(), 2)
    shift = RealShift(F(1, 2))
    assert [(-1) ** j * v > 0 for j, v in enumerate(J.values_at(F(1, 4)))] == [True] * 3
    f = lu(J, shift)
    assert f.u == (F(9, 4), F(5, 4)) and f.l == (1,)
    C = chihara(J, shift)
    assert C.matrix.b == (F(-1, 2), F(1, 2), F(-1, 2), F(1, 2))
    assert C.matrix.c == (F(9, 4), 1, F(5, 4))
    four = Discrete(((1, F(1, 8)), (-1, F(3, 8)), (2, F(3, 16)), (-2, F(5, 16))))
    assert jacobi_from_moments(measure_moments(four, 8), 4) == C.matrix


# 7 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(7, "imaginary shift: positive LU pivots and alternating imaginary diagonal")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_imaginary_shift(index):
    spec = CORPUS[index]
    rng = random.Random(index)
    alpha = F(rng.randint(1, 20), rng.randint(1, 7))
    n = depth_of(spec)
    s, J = jacobi_of(spec, n)
    assert classify(s[: 2 * n]).kind is Kind.STIELTJES
    shift = ImaginaryShift(alpha)
    f = lu(J, shift)
    assert all(v > 0 for v in f.u) and all(v > 0 for v in f.l)
    for j in range(n):
        assert J.b[j] + alpha * alpha == f.u[j] + (f.l[j - 1] if j else 0)
    C = chihara(J, shift)
    ia = ComplexRational(0, alpha)
    assert C.matrix.b == tuple(-ia if k % 2 == 0 else ia for k in range(2 * n))
    assert all(isinstance(c, F) and c > 0 for c in C.matrix.c)


# 8 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(8, "S-fraction contracts to the J-fraction; Laurent and P-fraction correspondences")
@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_continued_fractions(index):
    spec = CORPUS[index]
    n = depth_of(spec)
    s = measure_moments(spec, 4 * n)
    jf = jfraction(s, n)
    contracted = even_contraction(sfraction(s[: 2 * n], n))
    assert (contracted.b, contracted.c) == (jf.b, jf.c)
    ops = ortho_polys(jacobi_from_moments(s, n), n)
    pf = pfraction(s, n)
    for k in range(1, n + 1):
        assert laurent_match(approximant(jf, k), s) >= 2 * k
        assert approximant(pf, k).denominator == ops[k].compose_square()


# 9 ------------------------------------------------------------------------------------

@pytest.mark.acceptance(9, "delta_0 raw moments: SingularPivot in lu, verify report skips")
def test_delta_zero():
    s = DELTA_ZERO.values
    with pytest.raises(SingularPivot):
        lu(jacobi_from_moments(s, 1))
    report = verify_all(DELTA_ZERO, 1)
    assert report.ok
    assert report.by_name("lu_round_trip").witness["error"] == "SingularPivot"
    assert any(c.status == "skip" for c in report.checks)
