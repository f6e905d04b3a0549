import json
import random
from fractions import Fraction

import pytest
from conftest import P
from polydec.decomp import decompose, m_decompose
from polydec.errors import InputDecomposable, NonIntegralCoefficient, NotPrime
from polydec.modp import (
    ModpCertificate,
    clear_denominators,
    obstruction_certificate,
    reduce_and_test,
    theorem1_threshold,
)
from polydec.oracle import find_decomposition
from polydec.polycore import PrimeField, UniPoly

PRIMES = [p for p in range(2, 51) if all(p % q for q in range(2, p))]


def test_certificate_x4_x3():
    c = obstruction_certificate(P("x^4+x^3"))
    assert c.gamma == 4
    v = c.per_divisor[2]
    assert (v.nu, v.hA, v.hm0) == (2, (0, 2), 2)
    assert c.If == 8 and c.bad_primes == {2} and c.residual_cofactor == 1


def test_certificate_prime_degree():
    c = obstruction_certificate(P("x^5+7*x+1"))
    assert c.per_divisor == {} and c.If == 5 and c.bad_primes == {5}


def test_certificate_integral_remainder():
    c = obstruction_certificate(P("x^4+2*x^3+3*x^2+x+1"))
    v = c.per_divisor[2]
    assert (v.nu, v.hA, v.hm0) == (0, (0, -1), -1)
    assert c.If == -4 and c.bad_primes == {2}


def test_thresholds():
    assert theorem1_threshold(P("x^4+x^3")) == 4
    assert theorem1_threshold(P("x^4+2*x^3+3*x^2+x+1")) == 4
    assert theorem1_threshold(P("x^5+7*x+1")) == 5


def test_reduce_examples():
    assert reduce_and_test(P("x^4+x^3"), 3).status == "reduced_indecomposable"
    assert reduce_and_test(P("x^4+x^3"), 5).status == "guaranteed_indecomposable"
    assert reduce_and_test(P("x^4+x^3"), 2).status == "reduced_indecomposable"
    for p in (3, 5, 7, 11):
        r = reduce_and_test(P("x^4+2*x^2+1"), p)
        assert r.status == "reduced_decomposable"
        F = PrimeField(p)
        assert r.u.compose(r.g) == P("x^4+2*x^2+1", F)


def test_reduce_degenerate_and_errors():
    assert reduce_and_test(P("3*x^4+x^3+1"), 3).status == "degenerate"
    with pytest.raises(NotPrime):
        reduce_and_test(P("x^4+x^3"), 9)
    with pytest.raises(InputDecomposable):
        obstruction_certificate(P("x^4+2*x^2+1"))
    with pytest.raises(NonIntegralCoefficient):
        obstruction_certificate(P("x^4+1/2*x^3"))


def test_clear_denominators_minimal():
    nu, hA = clear_denominators(P("1/8*x"), 4)
    assert (nu, hA) == (2, (0, 2))
    nu, hA = clear_denominators(P("-x+3"), 6)
    assert (nu, hA) == (0, (3, -1))


def _corpus(n, seed):
    rnd = random.Random(seed)
    out = []
    while len(out) < n:
        d = rnd.choice([4, 6, 8])
        lead = rnd.choice([1, 1, 1, 2, 3])
        f = UniPoly([rnd.randint(-9, 9) for _ in range(d)] + [lead])
        if f[0] and decompose(f).is_indecomposable:
            out.append(f)
    return out


def test_certificate_reconstruction():
    for f in _corpus(20, 1):
        c = obstruction_certificate(f)
        a0 = f.lc
        for m, v in c.per_divisor.items():
            h = m_decompose(f, m).h
            assert UniPoly(v.hA) == h * (c.gamma**v.nu)
            if v.nu:
                assert any(Fraction(x).denominator != 1 for x in (h * (c.gamma ** (v.nu - 1))).coeffs)
        assert c.gamma == f.degree * a0
        assert c.If != 0
        rest = abs(c.If)
        for p in c.bad_primes:
            assert c.If % p == 0
            while rest % p == 0:
                rest //= p
        assert rest == abs(c.residual_cofactor)


def test_consistency_against_oracle():
    """Certified primes really give indecomposable reductions."""
    for f in _corpus(15, 2):
        c = obstruction_certificate(f)
        for p in PRIMES:
            r = reduce_and_test(f, p, c)
            fbar = UniPoly([int(x) for x in f.coeffs], PrimeField(p))
            if r.status == "degenerate":
                assert f.lc % p == 0
                continue
            hit = find_decomposition(fbar)
            if r.status == "guaranteed_indecomposable":
                assert hit is None, (f, p)
            elif r.status == "reduced_indecomposable":
                assert hit is None
            else:
                assert hit is not None and r.u.compose(r.g) == fbar


def test_json_roundtrip():
    for f in _corpus(10, 3):
        c = obstruction_certificate(f)
        blob = json.dumps(c.to_json())
        assert ModpCertificate.from_json(json.loads(blob)) == c
    assert set(obstruction_certificate(P("x^4+x^3")).to_json()) == {
        "degree", "gamma", "divisors", "If", "badPrimes", "residualCofactor"
    }
