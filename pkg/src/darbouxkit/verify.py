"""Named, exact invariant checks assembled into a deterministic report.

Every check is an exact equality; there is no tolerance anywhere. A check
whose preconditions do not hold (e.g. a zero LU pivot, non-Stieltjes data,
too few moments) is reported as skipped with the triggering error as its
witness; it never aborts the report.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, List, Optional

from .cfrac import (
    approximant,
    even_contraction,
    jfraction,
    laurent_match,
    pfraction,
    sfraction,
)
from .darboux import (
    ImaginaryShift,
    NoShift,
    RealShift,
    Shift,
    chihara,
    extended_darboux,
    lu,
    recurrence_polys,
    ul,
)
from .errors import (
    DarbouxError,
    DegenerateMoments,
    InsufficientMoments,
    InvalidShift,
    IrrationalSupport,
    NonpositiveSupport,
    NotStieltjes,
    PivotOnSpectrum,
    SignConditionViolated,
    SingularPivot,
)
from .exact import Polynomial, interleave, poly_div_exact
from .jacobi import (
    char_poly,
    definitizable_check,
    generalized_from,
    gram,
    indefinite_inner,
    jacobi_from_moments,
    truncate,
)
from .linalg import Matrix
from .moments import (
    Discrete,
    Functional,
    Kind,
    MomentSequence,
    RawMoments,
    chihara_measure,
    classify,
    hankel_det,
    measure_moments,
    unwrap_measure,
    unwrap_moments,
)
from .opoly import (
    kernel_polys,
    linearized_polys,
    ortho_poly_determinant,
    ortho_polys,
    squared_family,
)

# errors that mean "precondition not met" rather than "identity broken"
PRECONDITION_ERRORS = (
    DegenerateMoments,
    InsufficientMoments,
    InvalidShift,
    IrrationalSupport,
    NonpositiveSupport,
    NotStieltjes,
    PivotOnSpectrum,
    SignConditionViolated,
    SingularPivot,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


class Skip(Exception):
    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class Mismatch(Exception):
    def __init__(self, witness):
        super().__init__(str(witness))
        self.witness = witness


def _show(v):
    if isinstance(v, Polynomial):
        return [str(c) for c in v.coeffs]
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    if isinstance(v, Matrix):
        return [[str(a) for a in r] for r in v.rows]
    if hasattr(v, "b") and hasattr(v, "c"):
        return {"b": _show(v.b), "c": _show(v.c)}
    if isinstance(v, (int, str)) or v is None:
        return v
    return str(v)


def expect(cond, **witness):
    if not cond:
        raise Mismatch({k: _show(v) for k, v in witness.items()})


def error_witness(exc: DarbouxError):
    w = {"error": exc.code, "message": str(exc)}
    for attr in ("index", "rank", "needed", "available"):
        if hasattr(exc, attr):
            w[attr] = getattr(exc, attr)
    return w


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: Optional[str] = None
    witness: Optional[dict] = None

    @property
    def passed(self):
        return None if self.status == SKIP else self.status == PASS

    def to_json(self):
        out = {"name": self.name, "status": self.status, "passed": self.passed}
        if self.detail is not None:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    spec: dict
    depth: int
    effective_depth: Optional[int]
    shift: Optional[str]
    classification: Optional[str]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def fingerprint(self) -> str:
        key = json.dumps({"spec": self.spec, "depth": self.depth, "shift": self.shift},
                         sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(key.encode()).hexdigest()

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.checks)

    def by_name(self, name) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def counts(self):
        return {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, SKIP)}

    def to_json(self):
        return {
            "spec": self.spec,
            "fingerprint": self.fingerprint,
            "depth": self.depth,
            "effective_depth": self.effective_depth,
            "shift": self.shift,
            "classification": self.classification,
            "summary": self.counts(),
            "checks": [c.to_json() for c in self.checks],
        }


def ingest(spec, depth: int) -> MomentSequence:
    """Moments ``s_0 .. s_{4n-1}``; raw moment specs contribute what they have."""
    count = 4 * depth
    if isinstance(spec, RawMoments):
        return spec.values[: min(count, len(spec.values))]
    return measure_moments(spec, count)


class _Context:
    """Lazily computed pipeline objects shared between checks."""

    def __init__(self, spec, depth: int, shift: Optional[Shift]):
        self.spec = spec
        self.shift = shift
        self.s = ingest(spec, depth)
        n = min(depth, len(self.s) // 2)
        if n < 1:
            raise InsufficientMoments(2, len(self.s))
        try:
            self.J = jacobi_from_moments(self.s, n)
        except DegenerateMoments as exc:
            if exc.rank == 0:
                raise
            self.J = jacobi_from_moments(self.s, exc.rank)
        self.n = self.J.order
        self.cls = classify(self.s[: 2 * self.n])

    # -- shared objects --------------------------------------------------------
    @cached_property
    def ops(self):
        return ortho_polys(self.J, self.n, mass=self.s.mass)

    @cached_property
    def frak(self) -> MomentSequence:
        return unwrap_moments(self.s)

    @cached_property
    def S(self) -> Functional:
        return Functional(self.frak)

    @cached_property
    def T(self):
        return linearized_polys(squared_family(self.ops), self.n)

    @cached_property
    def G(self):
        return generalized_from(self.J)

    def D(self, j):
        return hankel_det(self.s, j)

    def norm_ratio(self, j):
        return self.D(j) / self.D(j - 1)

    def fits(self, degree):
        return degree < len(self.frak)

    def require_stieltjes(self):
        if self.cls.kind is not Kind.STIELTJES:
            raise Skip(f"moment data classified {self.cls}, not Stieltjes")

    @cached_property
    def factors(self):
        return lu(self.J, NoShift())

    @cached_property
    def extended(self):
        return extended_darboux(self.J)

    @cached_property
    def unwrapped_jacobi_moments(self) -> MomentSequence:
        # moments of lambda S(lambda^2): m_k = frak_{k+1}
        return self.frak[1:]

    @cached_property
    def shifted_factors(self):
        return lu(self.J, self.shift)

    @cached_property
    def chihara(self):
        return chihara(self.J, self.shift)

    @cached_property
    def chihara_moments(self) -> MomentSequence:
        return Functional.shifted(self.frak, self.shift.point).induced_moments(4 * self.n)


# -- checks --------------------------------------------------------------------
#
# Each check takes the context and either returns None (pass), raises
# Mismatch (fail), Skip, or a precondition error (skip).

def check_neutrality(ctx):
    expect(ctx.S(Polynomial((1,))) == 0, value=ctx.S(Polynomial((1,))))
    expect(ctx.S(ctx.T[0] * ctx.T[0]) == 0)


def check_recurrence_determinant(ctx):
    for j in range(min(ctx.n, 6) + 1):
        det_form = ortho_poly_determinant(ctx.s, j)
        expect(det_form == ctx.ops[j], j=j, determinant=det_form, recurrence=ctx.ops[j])


def check_orthogonality(ctx):
    fn = Functional(ctx.s)
    P = ctx.ops.polys
    for i in range(ctx.n + 1):
        for j in range(ctx.n + 1):
            if i + j >= len(ctx.s):
                continue
            got = fn(P[i] * P[j])
            if i != j:
                want = Fraction(0)
            elif i < ctx.n:
                want = ctx.ops.norms[i]
            else:
                continue
            expect(got == want, i=i, j=j, got=got, expected=want)
    for j in range(ctx.n):
        expect(ctx.ops.norms[j] == ctx.norm_ratio(j), j=j, norm=ctx.ops.norms[j])


def check_almost_orthogonality(ctx):
    T = ctx.T
    for j in range(ctx.n + 1):
        if 2 * j + 1 > len(ctx.s):
            break
        ratio = ctx.norm_ratio(j)
        for k in range(len(T)):
            if not ctx.fits(2 * j + 1 + k):
                continue
            even = ctx.S(T[2 * j] * T[k])
            want = ratio if k == 2 * j + 1 else Fraction(0)
            expect(even == want, j=j, k=k, family="even", got=even, expected=want)
            odd = ctx.S(T[2 * j + 1] * T[k])
            want = ratio if k == 2 * j else Fraction(0)
            expect(odd == want, j=j, k=k, family="odd", got=odd, expected=want)


def check_power_form(ctx):
    T = ctx.T
    for j in range(ctx.n + 1):
        if 2 * j + 1 > len(ctx.s):
            break
        ratio = ctx.norm_ratio(j)
        for k in range(2 * j + 2):
            got = ctx.S(T[2 * j] * Polynomial.monomial(k))
            want = ratio if k == 2 * j + 1 else Fraction(0)
            expect(got == want, j=j, k=k, family="even", got=got, expected=want)
        for k in range(2 * j + 1):
            got = ctx.S(T[2 * j + 1] * Polynomial.monomial(k))
            want = ratio if k == 2 * j else Fraction(0)
            expect(got == want, j=j, k=k, family="odd", got=got, expected=want)


def check_eigenvector_relation(ctx):
    N = 2 * ctx.n
    M = truncate(ctx.G, N)
    x = Polynomial.x()
    for i in range(N - 1):
        lhs = sum((M[i, k] * ctx.T[k] for k in range(N) if M[i, k] != 0), Polynomial())
        expect(lhs == x * ctx.T[i], row=i, lhs=lhs, rhs=x * ctx.T[i])


def check_spectrum_mapping(ctx):
    for N in range(1, min(ctx.n, 8) + 1):
        P = ctx.ops[N]
        classical = char_poly(truncate(ctx.J, N))
        expect(classical == P, N=N, char_poly=classical, P=P)
        generalized = char_poly(truncate(ctx.G, 2 * N))
        expect(generalized == P.compose_square(), N=N, char_poly=generalized,
               expected=P.compose_square())


def check_gram_form(ctx):
    N = 2 * ctx.n
    G = gram(N)
    expect(G == G.transpose(), reason="G not symmetric")
    expect(G @ G == Matrix.identity(N), reason="G^2 != I")
    e0 = [Fraction(int(i == 0)) for i in range(N)]
    expect(indefinite_inner(e0, e0) == 0, reason="[e0, e0] != 0")


def check_jfraction(ctx):
    s = ctx.s[: 2 * ctx.n]
    cf = jfraction(s, ctx.n)
    expect(cf.b == ctx.J.b and cf.c == ctx.J.c, jfraction=(cf.b, cf.c))
    for k in range(1, ctx.n + 1):
        appr = approximant(cf, k)
        expect(appr.denominator == ctx.ops[k], k=k, denominator=appr.denominator)
        m = laurent_match(appr, ctx.s)
        expect(m >= min(2 * k, len(ctx.s)), k=k, matched=m)


def check_pfraction(ctx):
    cf = pfraction(ctx.s[: 2 * ctx.n], ctx.n)
    for k in range(1, ctx.n + 1):
        den = approximant(cf, k).denominator
        want = ctx.ops[k].compose_square()
        expect(den == want, k=k, denominator=den, expected=want)


def check_sign_condition(ctx):
    if ctx.cls.kind is Kind.DEGENERATE:
        raise Skip(f"moment data classified {ctx.cls}")
    s = ctx.s[: 2 * ctx.n]
    definite = definitizable_check(s, ctx.n)
    stieltjes = ctx.cls.kind is Kind.STIELTJES
    expect(definite == stieltjes, definitizable=str(definite), classification=str(ctx.cls))
    if stieltjes:
        for j, v in enumerate(ctx.J.values_at(Fraction(0))):
            expect((-1) ** j * v > 0, j=j, value=v)


def check_lu_round_trip(ctx):
    f = ctx.factors
    expect(f.product() == truncate(ctx.J, ctx.n), product=f.product())
    expect(f.block_product() == truncate(ctx.G, 2 * ctx.n), block_product=f.block_product())


def _contraction(J, f, sigma):
    for j in range(J.order):
        lj = f.l[j - 1] if j > 0 else 0
        expect(J.b[j] - sigma == f.u[j] + lj, j=j, b=J.b[j], u=f.u[j], l=lj)
    for j in range(J.order - 1):
        expect(J.c[j] == f.l[j] * f.u[j], j=j, c=J.c[j])


def check_lu_contraction(ctx):
    _contraction(ctx.J, ctx.factors, 0)


def check_lu_positivity(ctx):
    ctx.require_stieltjes()
    f = ctx.factors
    expect(all(v > 0 for v in f.u) and all(v > 0 for v in f.l), u=f.u, l=f.l)


def check_darboux_ul(ctx):
    D = ul(ctx.factors)
    target = jacobi_from_moments(ctx.s.shifted(0), ctx.n)
    n = ctx.n
    expect(D.c == target.c, ul=D, jacobi=target)
    expect(D.b[: n - 1] == target.b[: n - 1], ul=D, jacobi=target)
    expect(D.b[n - 1] == ctx.factors.u[n - 1], ul=D)


def check_kernel_orthogonality(ctx):
    kp = kernel_polys(ctx.ops, 0)
    shifted = Functional.shifted(ctx.s)
    for i in range(len(kp)):
        for j in range(i):
            if i + j + 1 >= len(ctx.s):
                continue
            v = shifted(kp[i] * kp[j])
            expect(v == 0, i=i, j=j, value=v)
    # the truncated last UL entry only enters the top polynomial
    P = recurrence_polys(ul(ctx.factors))
    for j, p in enumerate(kp):
        expect(P[j] == p, j=j, kernel=p, ul_poly=P[j])


def check_extended_unwrapping(ctx):
    E = ctx.extended
    target = jacobi_from_moments(ctx.unwrapped_jacobi_moments, 2 * ctx.n)
    expect(E.matrix == target, extended=E.matrix, jacobi=target)
    expect(E.matrix.c == tuple(interleave(ctx.factors.u, ctx.factors.l)))


def check_unwrap_measure(ctx):
    if not isinstance(ctx.spec, Discrete):
        raise Skip("measure-level unwrapping needs a discrete spec")
    sym = unwrap_measure(ctx.spec)
    mom = measure_moments(sym, 4 * ctx.n)
    for k, v in enumerate(mom):
        want = ctx.s[k // 2] if k % 2 == 0 else Fraction(0)
        expect(v == want, k=k, got=v, expected=want)
    target = jacobi_from_moments(mom, 2 * ctx.n)
    expect(ctx.extended.matrix == target, extended=ctx.extended.matrix, jacobi=target)


def check_extended_polynomials(ctx):
    E = ctx.extended
    kp = kernel_polys(ctx.ops, 0)
    x = Polynomial.x()
    for j in range(ctx.n + 1):
        expect(E.polys[2 * j] == ctx.ops[j].compose_square(), index=2 * j, got=E.polys[2 * j])
    for j in range(ctx.n):
        want = x * kp[j].compose_square()
        expect(E.polys[2 * j + 1] == want, index=2 * j + 1, got=E.polys[2 * j + 1], expected=want)
    _recurrence_closure(E.matrix, E.polys)


def _recurrence_closure(M, polys):
    expect(polys[0] == Polynomial((1,)))
    gen = recurrence_polys(M)
    for i, p in enumerate(polys):
        expect(p == gen[i], index=i, darboux_poly=p, recurrence=gen[i])


def _shifted_orthogonality(ctx, fn, polys):
    for i, p in enumerate(polys):
        for k in range(i):
            if p.degree + k + 1 >= len(ctx.frak):
                continue
            v = fn(p * Polynomial.monomial(k))
            expect(v == 0, index=i, k=k, value=v)


def check_extended_orthogonality(ctx):
    _shifted_orthogonality(ctx, Functional.shifted(ctx.frak), ctx.extended.polys)


def check_sfraction_contraction(ctx):
    s = ctx.s[: 2 * ctx.n]
    cf = sfraction(s, ctx.n)
    if len(cf.d) < 2 * ctx.n - 1:
        # chain stopped at a zero pivot P_n(0) = 0
        raise Skip("S-fraction terminates early", error_witness(SingularPivot(ctx.n)))
    jf = even_contraction(cf)
    expect(jf.b == ctx.J.b and jf.c == ctx.J.c, contracted=(jf.b, jf.c), jfraction=ctx.J)


def check_sj_consistency(ctx):
    s = ctx.s[: 2 * ctx.n]
    cf = sfraction(s, ctx.n)
    jf = jfraction(ctx.unwrapped_jacobi_moments, 2 * ctx.n)
    expect(all(v == 0 for v in jf.b), b=jf.b)
    expect(jf.c == cf.d, chain=jf.c, sfraction=cf.d)


# -- shifted (Chihara) suite -----------------------------------------------------

def check_chihara_sign_condition(ctx):
    sigma = ctx.shift.sigma
    for j, v in enumerate(ctx.J.values_at(sigma)):
        if isinstance(ctx.shift, RealShift) and (-1) ** j * v <= 0:
            # precondition of the shifted factorization
            raise Skip("shift lies outside the spectral gap",
                       error_witness(SignConditionViolated(j)))
        if isinstance(ctx.shift, ImaginaryShift):
            ctx.require_stieltjes()
            expect((-1) ** j * v > 0, j=j, value=v)


def check_chihara_factorization(ctx):
    f = ctx.shifted_factors
    expect(f.block_product() == truncate(ctx.G, 2 * ctx.n), block_product=f.block_product())
    expect(f.product() == truncate(ctx.J, ctx.n), product=f.product())
    _contraction(ctx.J, f, ctx.shift.sigma)
    if ctx.cls.kind is Kind.STIELTJES:
        expect(all(v > 0 for v in f.u) and all(v > 0 for v in f.l), u=f.u, l=f.l)


def check_chihara_moments(ctx):
    C = ctx.chihara
    target = jacobi_from_moments(ctx.chihara_moments, 2 * ctx.n)
    expect(C.matrix == target, chihara=C.matrix, jacobi=target)
    a = ctx.shift.point
    expect(all(C.matrix.b[k] == (-a if k % 2 == 0 else a) for k in range(2 * ctx.n)),
           diagonal=C.matrix.b)
    expect(all(getattr(v, "im", 0) == 0 for v in C.matrix.c), chain=C.matrix.c)


def check_chihara_measure(ctx):
    if not isinstance(ctx.shift, RealShift):
        raise Skip("measure-level Chihara construction needs a real shift")
    if not isinstance(ctx.spec, Discrete):
        raise Skip("measure-level Chihara construction needs a discrete spec")
    mu = chihara_measure(ctx.spec, ctx.shift.alpha)
    mom = measure_moments(mu, 4 * ctx.n)
    expect(mom == ctx.chihara_moments, measure=mom.values, expected=ctx.chihara_moments.values)
    target = jacobi_from_moments(mom, 2 * ctx.n)
    expect(ctx.chihara.matrix == target, chihara=ctx.chihara.matrix, jacobi=target)


def check_chihara_divisibility(ctx):
    sigma = ctx.shift.sigma
    vals = ctx.J.values_at(sigma)
    sq = squared_family(ctx.ops)
    quad = Polynomial((-sigma, 0, 1))
    for j in range(ctx.n):
        num = sq[j + 1] - (vals[j + 1] / vals[j]) * sq[j]
        poly_div_exact(num, quad)


def check_chihara_polynomials(ctx):
    C = ctx.chihara
    for j in range(ctx.n + 1):
        expect(C.polys[2 * j] == ctx.ops[j].compose_square(), index=2 * j)
    _recurrence_closure(C.matrix, C.polys)


def check_chihara_orthogonality(ctx):
    fn = Functional.shifted(ctx.frak, ctx.shift.point)
    _shifted_orthogonality(ctx, fn, ctx.chihara.polys)


CORE_CHECKS: List[tuple] = [
    ("neutrality", check_neutrality),
    ("recurrence_determinant_agreement", check_recurrence_determinant),
    ("orthogonality", check_orthogonality),
    ("almost_orthogonality", check_almost_orthogonality),
    ("power_form_relations", check_power_form),
    ("eigenvector_relation", check_eigenvector_relation),
    ("spectrum_mapping", check_spectrum_mapping),
    ("gram_form", check_gram_form),
    ("jfraction_correspondence", check_jfraction),
    ("pfraction_denominators", check_pfraction),
    ("sign_condition", check_sign_condition),
    ("lu_round_trip", check_lu_round_trip),
    ("lu_contraction", check_lu_contraction),
    ("lu_positivity", check_lu_positivity),
    ("darboux_ul", check_darboux_ul),
    ("kernel_orthogonality", check_kernel_orthogonality),
    ("extended_darboux_unwrapping", check_extended_unwrapping),
    ("unwrap_measure_consistency", check_unwrap_measure),
    ("extended_darboux_polynomials", check_extended_polynomials),
    ("extended_darboux_orthogonality", check_extended_orthogonality),
    ("sfraction_even_contraction", check_sfraction_contraction),
    ("sj_fraction_consistency", check_sj_consistency),
]

CHIHARA_CHECKS: List[tuple] = [
    ("chihara_sign_condition", check_chihara_sign_condition),
    ("chihara_factorization", check_chihara_factorization),
    ("chihara_moments", check_chihara_moments),
    ("chihara_measure_consistency", check_chihara_measure),
    ("chihara_divisibility", check_chihara_divisibility),
    ("chihara_polynomials", check_chihara_polynomials),
    ("chihara_orthogonality", check_chihara_orthogonality),
]


def _run(name: str, fn: Callable, ctx) -> CheckResult:
    try:
        fn(ctx)
    except Skip as exc:
        return CheckResult(name, SKIP, exc.reason, exc.witness)
    except Mismatch as exc:
        return CheckResult(name, FAIL, "identity does not hold", exc.witness)
    except PRECONDITION_ERRORS as exc:
        return CheckResult(name, SKIP, f"precondition not met: {exc.code}", error_witness(exc))
    except DarbouxError as exc:
        return CheckResult(name, FAIL, exc.code, error_witness(exc))
    return CheckResult(name, PASS)


def verify_all(spec, depth: int, alpha: Optional[Shift] = None) -> VerificationReport:
    """Run every invariant suite on ``spec`` at ``depth``.

    ``depth`` is lowered to the Hankel rank for finite-rank data. The
    Chihara suite runs only when ``alpha`` is a real or imaginary shift.
    """
    from .serialize import spec_to_json, shift_to_json

    if depth < 1:
        raise ValueError("depth must be at least 1")
    shift = None if alpha is None or isinstance(alpha, NoShift) else alpha
    spec_json = spec_to_json(spec)
    shift_json = shift_to_json(shift) if shift is not None else None
    try:
        ctx = _Context(spec, depth, shift)
    except DarbouxError as exc:
        report = VerificationReport(spec_json, depth, None, shift_json, None)
        report.checks.append(CheckResult("setup", SKIP, f"precondition not met: {exc.code}",
                                         error_witness(exc)))
        return report
    report = VerificationReport(spec_json, depth, ctx.n, shift_json, str(ctx.cls))
    suites = CORE_CHECKS + (CHIHARA_CHECKS if shift is not None else [])
    for name, fn in suites:
        report.checks.append(_run(name, fn, ctx))
    return report
