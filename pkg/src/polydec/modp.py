"""Indecomposability under reduction modulo primes.

For an integral f of degree d, indecomposable over Q, with leading
coefficient a0 and gamma = d * a0: each m-decomposition remainder h_m of
f / a0 has denominators built from primes dividing gamma, so
gamma^nu * h_m = hA is integral for a least nu. With hm0 the top coefficient
of hA, the integer If = gamma * prod(hm0) is nonzero, and any prime p not
dividing If keeps every h_m nonzero mod p, hence the reduction stays
indecomposable (over the algebraic closure of GF(p) as well).
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import prod

from .decomp import decompose, m_decompose
from .errors import InputDecomposable, InvariantError, NotPrime
from .ntheory import is_prime, nontrivial_divisors, trial_factor
from .oracle import brute_force_decompose, find_decomposition
from .polycore.fields import QQ, PrimeField
from .polycore.univariate import UniPoly

FACTOR_BOUND = 10**6


@dataclass(frozen=True)
class DivisorData:
    m: int
    nu: int
    hA: tuple  # integer coefficients, low-to-high
    hm0: int


@dataclass(frozen=True)
class ModpCertificate:
    d: int
    gamma: int
    per_divisor: dict = dc_field(default_factory=dict)
    If: int = 0
    bad_primes: frozenset = frozenset()
    residual_cofactor: int = 1

    def to_json(self):
        return {
            "degree": self.d,
            "gamma": self.gamma,
            "divisors": [
                {"m": m, "nu": v.nu, "hA": list(v.hA), "hm0": v.hm0}
                for m, v in sorted(self.per_divisor.items())
            ],
            "If": self.If,
            "badPrimes": sorted(self.bad_primes),
            "residualCofactor": self.residual_cofactor,
        }

    @classmethod
    def from_json(cls, obj):
        per = {
            e["m"]: DivisorData(e["m"], e["nu"], tuple(e["hA"]), e["hm0"])
            for e in obj["divisors"]
        }
        return cls(
            obj["degree"],
            obj["gamma"],
            per,
            obj["If"],
            frozenset(obj["badPrimes"]),
            obj["residualCofactor"],
        )

    def threshold(self):
        """Every prime strictly above this value is certified."""
        return max([self.d, self.residual_cofactor, *self.bad_primes])

    def certifies(self, p):
        return p > self.d and self.If % p != 0


def clear_denominators(h: UniPoly, gamma: int):
    """Least nu with gamma^nu * h integral, and the integral polynomial."""
    cs = [Fraction(c) for c in h.coeffs]
    den = 1
    for c in cs:
        den = den * c.denominator // _gcd(den, c.denominator)
    nu = 0
    g = abs(gamma)
    power = 1
    while power % den:
        if g == 1:
            raise InvariantError(f"denominator {den} is not a divisor of a power of {gamma}")
        nu += 1
        power *= g
    hA = tuple(int(c * gamma**nu) for c in cs)
    return nu, hA


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _integral(f: UniPoly):
    return f.integer_coeffs()  # raises NonIntegralCoefficient


def obstruction_certificate(f: UniPoly) -> ModpCertificate:
    if f.field != QQ:
        f = UniPoly(f.integer_coeffs(), QQ)
    ints = _integral(f)
    d = f.degree
    verdict = decompose(f)
    if verdict.is_decomposable:
        raise InputDecomposable(f"{f} = ({verdict.u})({verdict.g}) over Q")
    a0 = ints[-1]
    gamma = d * a0
    per = {}
    for m in nontrivial_divisors(d) if d > 1 else ():
        h = m_decompose(f, m).h
        if not h:
            raise InvariantError(f"h_{m} vanishes for an indecomposable input")
        nu, hA = clear_denominators(h, gamma)
        per[m] = DivisorData(m, nu, hA, hA[-1])
    If = gamma * prod(v.hm0 for v in per.values())
    factors, rest = trial_factor(If, FACTOR_BOUND)
    return ModpCertificate(d, gamma, per, If, frozenset(factors), rest)


def theorem1_threshold(f: UniPoly) -> int:
    """Primes strictly greater than the returned value preserve indecomposability."""
    return obstruction_certificate(f).threshold()


@dataclass(frozen=True)
class ReductionResult:
    status: str  # guaranteed_indecomposable | reduced_decomposable | reduced_indecomposable | degenerate
    p: int
    u: object = None
    g: object = None
    method: str = ""


def reduce_and_test(f: UniPoly, p: int, certificate=None) -> ReductionResult:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    ints = _integral(f)
    if ints[-1] % p == 0:
        return ReductionResult("degenerate", p, method="leading coefficient vanishes")
    d = len(ints) - 1
    if certificate is None and p > d:
        f_q = UniPoly(ints, QQ)
        if not decompose(f_q).is_decomposable:
            certificate = obstruction_certificate(f_q)
    if certificate is not None and certificate.certifies(p):
        return ReductionResult("guaranteed_indecomposable", p, method="certificate")
    Fp = PrimeField(p)
    fbar = UniPoly(ints, Fp)
    if p <= d:
        hit = find_decomposition(fbar)
        if hit is None:
            return ReductionResult("reduced_indecomposable", p, method="oracle")
        return ReductionResult("reduced_decomposable", p, hit[0], hit[1], method="oracle")
    res = decompose(fbar)
    if res.is_decomposable:
        return ReductionResult("reduced_decomposable", p, res.u, res.g, method="m-decomposition")
    return ReductionResult("reduced_indecomposable", p, method="m-decomposition")


__all__ = [
    "DivisorData",
    "ModpCertificate",
    "ReductionResult",
    "brute_force_decompose",
    "clear_denominators",
    "obstruction_certificate",
    "reduce_and_test",
    "theorem1_threshold",
]
