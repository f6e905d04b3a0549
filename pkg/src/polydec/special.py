"""Specializations t -> t* + a* x of bivariate polynomials.

``exceptional_set`` m-decomposes q(a, t, x) = f(t + a x, x) divided by its
leading coefficient a0(a), tracking every coefficient as a fraction over a
power of a0. Clearing denominators gives polynomials h_{m,i}(a, t); a point
(a*, t*) where a0(a*) != 0 and, for every divisor m, some h_{m,i} does not
vanish gives an indecomposable f(t* + a* x, x) of degree d.
``monte_carlo_test`` samples such points and compares the observed failure
rate against D / |S| with D = sigma_1(d) d^2 + 2 sigma_0(d) d.
"""

import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

import numpy as np

from .decomp import decompose, m_decompose_coeffs
from .errors import (
    ArityMismatch,
    CharacteristicTooSmall,
    EmptySampleSet,
    InputDecomposableAsMultivariate,
    InvariantError,
)
from .ntheory import nontrivial_divisors, sigma
from .oracle import search_extensions
from .polycore import dense
from .polycore.fields import QQ
from .polycore.multivariate import MultiPoly
from .polycore.substitution import generic_shift, substitute_linear, t_vars
from .polycore.univariate import UniPoly
from .tame import TameRing, alpha_tame_violations


@dataclass(frozen=True)
class HEntry:
    x_power: int
    h: MultiPoly  # a0 * h_prime, in (a, t)
    h_prime: MultiPoly  # cleared remainder coefficient a0^d * h_{m}[x^j]


@dataclass(frozen=True)
class ExceptionalSet:
    d: int
    a0: MultiPoly  # in (a, t), free of t
    per_divisor: dict = dc_field(default_factory=dict)  # m -> tuple of HEntry
    field: object = QQ

    def degree_bound(self, m):
        return m * self.d**2 + 2 * self.d

    @property
    def a0_poly(self) -> UniPoly:
        return self.a0.embed(("a",)).to_unipoly("a")

    def polys(self, m):
        return [e.h for e in self.per_divisor[m]]

    def vanishing_divisors(self):
        return [m for m, hs in self.per_divisor.items() if not hs]

    def to_json(self):
        return {
            "d": self.d,
            "a0": str(self.a0),
            "divisors": {
                str(m): {
                    "h": [str(e.h) for e in hs],
                    "degreeBound": self.degree_bound(m),
                    "maxDegree": max((e.h.degree() for e in hs), default=-1),
                }
                for m, hs in sorted(self.per_divisor.items())
            },
        }


def _bivariate(f: MultiPoly):
    ts = t_vars(f)
    if len(ts) != 1:
        raise ArityMismatch(f"expected one parameter t, got {ts}")
    if ts[0] != "t":
        f = f.substitute({ts[0]: MultiPoly.var("t", ("t", "x"), f.field)}, ("t", "x"))
    return f.embed(("t", "x"))


def _require_char(field, d):
    p = field.characteristic
    if p and p <= d:
        raise CharacteristicTooSmall(f"characteristic {p} <= degree {d}")


def _tame_check(coeffs, order, what):
    bad = alpha_tame_violations(coeffs, order)
    if bad:
        raise InvariantError(f"{what} is not a-tame of order {order}: {bad}")


def exceptional_set(f: MultiPoly) -> ExceptionalSet:
    f = _bivariate(f)
    k = f.field
    d = f.degree()
    _require_char(k, d)
    q = generic_shift(f)  # vars (a, t, x)
    coeffs = q.coeff_list("x")
    if len(coeffs) - 1 != d:
        raise InvariantError("x-degree of the shifted polynomial differs from deg f")
    a0 = coeffs[d]
    if a0.degree("t") > 0:
        raise InvariantError("leading x-coefficient depends on t")
    ring = TameRing(a0)
    qt = [ring(c, 1) for c in coeffs[:d]] + [ring.one]
    _tame_check(qt, d, "normalized q")
    inv_m_of = lambda m: k.one / k(m)
    per = {}
    for m in nontrivial_divisors(d) if d > 1 else ():
        u, g, h = m_decompose_coeffs(qt, m, ring.zero, ring.one, inv_m_of(m))
        _tame_check(g, d, f"approximate {m}-root")
        gj = [ring.one]
        for j in range(1, m + 1):
            gj = dense.mul(gj, g, ring.zero)
            _tame_check(gj, j * d, f"g^{j}")
        _tame_check(h, m * d, f"h_{m}")
        entries = []
        for j in range(len(h) - 1, -1, -1):
            c = h[j]
            if not c:
                continue
            hp = c.raised_to(d)
            hm = a0 * hp
            if hp.degree("a") > m * d * d or hp.degree("t") > d:
                raise InvariantError(f"h'_{m} coefficient at x^{j} breaks the degree bounds")
            if hm.degree() > m * d * d + 2 * d:
                raise InvariantError(f"h_{m} coefficient at x^{j} exceeds m d^2 + 2d")
            entries.append(HEntry(j, hm, hp))
        per[m] = tuple(entries)
    E = ExceptionalSet(d, a0, per, k)
    if E.vanishing_divisors():
        raise InputDecomposableAsMultivariate(
            f"all h_{{m,i}} vanish for m in {E.vanishing_divisors()}: f is decomposable",
            E,
        )
    return E


@dataclass(frozen=True)
class Certification:
    certified: bool
    failing: tuple = ()
    reason: str = ""


def certify_specialization(E: ExceptionalSet, alpha_star, t_star) -> Certification:
    k = E.field
    a, t = k(alpha_star), k(t_star)
    if not E.a0.evaluate({"a": a, "t": t}).constant_value():
        return Certification(False, (), "leading coefficient a0(a*) vanishes")
    failing = []
    for m, entries in sorted(E.per_divisor.items()):
        if not any(e.h.evaluate({"a": a, "t": t}).constant_value() for e in entries):
            failing.append(m)
    if failing:
        return Certification(False, tuple(failing), "every h_{m,i} vanishes for these m")
    return Certification(True)


@dataclass(frozen=True)
class SpecializationVerdict:
    """Outcome for one specialization.

    ``status`` is "decomposable" whenever the specialized polynomial
    decomposes (even with a dropped degree), "degree_dropped" when its
    degree fell below deg f and no decomposition exists, and
    "indecomposable" otherwise.
    """

    status: str
    poly: UniPoly
    u: Optional[UniPoly] = None
    g: Optional[UniPoly] = None
    field: object = None
    degree_dropped: bool = False
    note: str = ""

    @property
    def certified_shape(self):
        """Indecomposable of full degree, the conclusion the bound is about."""
        return self.status == "indecomposable"


def _decide(image: UniPoly, field):
    """(status, u, g, field, note) for a univariate polynomial of degree >= 1."""
    p = field.characteristic
    if p and p <= image.degree:
        # outside the characteristic hypothesis: small extensions by exhaustive search
        hit = search_extensions(image, max_k=3)
        if hit is None:
            return "indecomposable", None, None, field, "no decomposition over GF(p^k), k <= 3"
        F, u, g = hit
        return "decomposable", u, g, F, f"found over {F!r}"
    res = decompose(image)
    if res.is_decomposable:
        return "decomposable", res.u, res.g, field, ""
    return "indecomposable", None, None, field, ""


def multivar_specialize_and_test(f: MultiPoly, alpha_star, t_star) -> SpecializationVerdict:
    image = substitute_linear(f, t_star, alpha_star)
    d = f.degree()
    dropped = image.degree < d
    if image.degree < 1:
        return SpecializationVerdict("degree_dropped", image, field=f.field, degree_dropped=True)
    status, u, g, F, note = _decide(image, f.field)
    if dropped and status == "indecomposable":
        status = "degree_dropped"
    return SpecializationVerdict(status, image, u, g, F, dropped, note)


# ---------------------------------------------------------------------------
# Monte-Carlo
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SampleSet:
    """Finite S: all of GF(p), {0..s-1} in GF(p), or integers [-s, s] in Q."""

    field: object
    s: Optional[int] = None

    @property
    def size(self):
        if self.field == QQ:
            return 2 * self.s + 1
        return self.field.order if self.s is None else self.s

    def draw(self, rng):
        if self.size <= 0:
            raise EmptySampleSet("sample set is empty")
        if self.field == QQ:
            return Fraction(int(rng.integers(-self.s, self.s + 1)))
        return self.field(int(rng.integers(0, self.size)))

    def describe(self):
        if self.field == QQ:
            return f"integers in [-{self.s}, {self.s}]"
        if self.s is None:
            return f"all of {self.field!r}"
        return f"{{0..{self.s - 1}}} in {self.field!r}"


@dataclass(frozen=True)
class MonteCarloPlan:
    d: int
    sigma0: int
    sigma1: int
    D: int
    sample_size: int
    failure_bound: Fraction
    seed: int

    @classmethod
    def for_degree(cls, d, sample_size, seed=0):
        if sample_size <= 0:
            raise EmptySampleSet("sample set is empty")
        s0, s1 = sigma(d, 0), sigma(d, 1)
        D = s1 * d * d + 2 * s0 * d
        return cls(d, s0, s1, D, sample_size, min(Fraction(1), Fraction(D, sample_size)), seed)


@dataclass(frozen=True)
class TrialResult:
    alpha: object
    t: object
    verdict: str


@dataclass(frozen=True)
class MonteCarloReport:
    plan: MonteCarloPlan
    trials: tuple
    failures: int

    @property
    def frequency(self):
        return Fraction(self.failures, len(self.trials)) if self.trials else Fraction(0)

    def to_json(self):
        p = self.plan
        return {
            "plan": {
                "d": p.d,
                "sigma0": p.sigma0,
                "sigma1": p.sigma1,
                "D": p.D,
                "sampleSize": p.sample_size,
                "bound": float(p.failure_bound),
                "boundExact": str(p.failure_bound),
                "seed": p.seed,
            },
            "trials": [
                {"alpha": str(tr.alpha), "t": str(tr.t), "verdict": tr.verdict} for tr in self.trials
            ],
            "failures": self.failures,
            "frequency": float(self.frequency),
        }


def monte_carlo_test(f: MultiPoly, S: SampleSet, trials: int, seed: int = 0) -> MonteCarloReport:
    f = _bivariate(f)
    d = f.degree()
    _require_char(f.field, d)
    if S.size <= 0:
        raise EmptySampleSet("sample set is empty")
    plan = MonteCarloPlan.for_degree(d, S.size, seed)
    if S.size <= plan.D:
        warnings.warn(f"|S| = {S.size} <= D = {plan.D}: the bound is vacuous", stacklevel=2)
    results = []
    failures = 0
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        a, t = S.draw(rng), S.draw(rng)
        v = multivar_specialize_and_test(f, a, t).status
        failures += v != "indecomposable"
        results.append(TrialResult(a, t, v))
    return MonteCarloReport(plan, tuple(results), failures)
