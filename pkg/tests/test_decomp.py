import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import M, P, random_monic
from polydec.decomp import (
    approx_m_root,
    bivariate_m_decompose,
    decompose,
    is_m_decomposable,
    m_decompose,
    m_decompose_coeffs,
)
from polydec.errors import HypothesisViolated, MNotInvertible, NotADivisor, NotMonic
from polydec.ntheory import nontrivial_divisors
from polydec.oracle import find_decomposition, oracle_is_decomposable
from polydec.polycore import QQ, MultiPoly, PrimeField, UniPoly, parse_poly

X = sympy.Symbol("x")


def sympy_decomposable(f: UniPoly):
    expr = sum((sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(f.coeffs)), sympy.Integer(0))
    return len(sympy.decompose(expr)) > 1


# --- worked examples ---------------------------------------------------------


def test_approx_root_examples():
    assert approx_m_root(P("x^4+2*x^3+3*x^2+x+1"), 2) == P("x^2+x+1")
    assert approx_m_root(P("x^4+2*x^2+1"), 2) == P("x^2+1")
    assert approx_m_root(P("x^4+x^3"), 2) == P("x^2 + 1/2*x - 1/8")


@pytest.mark.parametrize(
    "f,u,g,h",
    [
        ("x^4+2*x^3+3*x^2+x+1", "x^2", "x^2+x+1", "-x"),
        ("x^4+2*x^2+1", "x^2", "x^2+1", "0"),
        ("x^4+x^3", "x^2 - 1/64", "x^2 + 1/2*x - 1/8", "1/8*x"),
    ],
)
def test_m_decompose_examples(f, u, g, h):
    dec = m_decompose(P(f), 2)
    assert (dec.u, dec.g, dec.h) == (P(u), P(g), P(h))
    assert dec.check(P(f))


def test_is_m_decomposable_examples():
    assert is_m_decomposable(P("x^4+2*x^2+1"), 2)
    assert not is_m_decomposable(P("x^4+2*x^3+3*x^2+x+1"), 2)
    assert not is_m_decomposable(P("x^4+x^3"), 2)


def test_decompose_examples():
    r = decompose(P("x^4+2*x^2+1"))
    assert r.is_decomposable and (r.u, r.g) == (P("x^2"), P("x^2+1"))
    r = decompose(P("x^4+x^3"))
    assert r.is_indecomposable
    assert r.witnesses[2].h == P("1/8*x")
    assert r.witnesses[2].first_nonzero_index == 3
    assert decompose(P("x^5+7*x+1")).is_indecomposable


def test_non_monic_input_keeps_normalizer():
    f = P("3*x^6 + 6*x^3 + 5")  # 3(x^3)^2 + 6 x^3 + 5
    r = decompose(f)
    assert r.is_decomposable
    assert r.u.compose(r.g) == f
    assert r.g.is_monic()


def test_precondition_errors():
    with pytest.raises(NotADivisor):
        m_decompose(P("x^6+x"), 4)
    with pytest.raises(MNotInvertible):
        m_decompose(P("x^6+x", PrimeField(3)), 3)
    with pytest.raises(NotMonic):
        approx_m_root(P("2*x^4+x"), 2)


def test_small_characteristic_defers_to_oracle():
    assert decompose(P("x^4+x^3", PrimeField(3))).status == "not_applicable"


def test_m_equal_d_triple_exists_but_is_not_a_verdict():
    f = P("x^4+x^3+2")
    dec = m_decompose(f, 4)
    assert dec.g.degree == 1 and dec.check(f)
    assert decompose(f).is_indecomposable


# --- properties over Q -------------------------------------------------------


degrees = st.sampled_from([4, 6, 8, 9, 12])


@st.composite
def monic_q(draw):
    d = draw(degrees)
    cs = [Fraction(draw(st.integers(-9, 9))) for _ in range(d)]
    return UniPoly(cs + [Fraction(1)])


@given(monic_q())
def test_triple_conditions_and_reconstruction(f):
    for m in nontrivial_divisors(f.degree) + (f.degree,):
        dec = m_decompose(f, m)
        assert dec.check(f)
        s = f.degree // m
        # characterization of the approximate root, checked without the peeling
        assert (f - dec.g ** m).degree < f.degree - s


@given(monic_q(), st.integers(0, 11), st.integers(1, 5))
def test_perturbed_triple_breaks(f, j, c):
    m = nontrivial_divisors(f.degree)[0]
    dec = m_decompose(f, m)
    s = dec.g.degree
    j %= s
    bump = UniPoly([0] * j + [c])
    # same u and h with a perturbed g no longer rebuilds f
    assert (dec.u.compose(dec.g + bump) + dec.h) != f
    # moving a monomial between u and h violates (ii) or (iii)
    from polydec.decomp import MDecomposition

    moved = MDecomposition(m, dec.u + UniPoly([c]), dec.g, dec.h - UniPoly([c]), dec.normalizer)
    assert not moved.check(f)


@given(monic_q())
def test_decompose_agrees_with_sympy(f):
    assert decompose(f).is_decomposable == sympy_decomposable(f)


@given(
    st.lists(st.integers(-5, 5), min_size=2, max_size=3),
    st.lists(st.integers(-5, 5), min_size=2, max_size=3),
    st.integers(1, 4),
)
def test_constructed_compositions_are_found(ucs, gcs, lead):
    u = UniPoly(ucs + [lead])
    g = UniPoly(gcs + [1])
    f = u.compose(g)
    r = decompose(f)
    assert r.is_decomposable
    assert r.u.compose(r.g) == f
    assert r.u.degree >= 2 and r.g.degree >= 2


# --- oracle agreement over finite fields -------------------------------------


@pytest.mark.parametrize("p,d,n", [(p, d, 1000) for p in (7, 11, 13) for d in (4, 6)])
def test_decompose_agrees_with_search(p, d, n):
    F = PrimeField(p)
    rnd = random.Random(p * 100 + d)
    for _ in range(n):
        f = random_monic(rnd, d, F, 0, p - 1)
        if rnd.random() < 0.3:  # plant decompositions so both verdicts occur
            s = rnd.choice(nontrivial_divisors(d))
            u = random_monic(rnd, d // s, F, 0, p - 1)
            g = random_monic(rnd, s, F, 0, p - 1)
            f = u.compose(g)
        assert decompose(f).is_decomposable == oracle_is_decomposable(f)


# --- bivariate ---------------------------------------------------------------


def test_bivariate_examples():
    dec = bivariate_m_decompose(M("x^4+t"), 2)
    assert (dec.u, dec.g, dec.h) == (M("x^2+t"), M("x^2"), M("0"))
    dec = bivariate_m_decompose(M("x^4+t*x^3"), 2)
    assert dec.g == M("x^2 + 1/2*t*x - 1/8*t^2")
    assert dec.h == M("1/8*t^3*x")
    dec = bivariate_m_decompose(M("x^4+2*t*x^2+t^2"), 2)
    assert (dec.u, dec.g, dec.h) == (M("x^2"), M("x^2+t"), M("0"))


def test_bivariate_hypothesis_enforced():
    with pytest.raises(HypothesisViolated):
        bivariate_m_decompose(M("x^4 + t^2*x^3"), 2)
    assert bivariate_m_decompose(M("x^4 + t^2*x^3"), 2, strict=False).reconstruct() == M("x^4 + t^2*x^3")


def random_bivariate(rnd, d, field=QQ, c=5):
    """Monic in x with deg_t a_i <= i (coefficient of x^(d-i))."""
    terms = {(0, d): field.one}
    for i in range(1, d + 1):
        for j in range(i + 1):
            if rnd.random() < 0.5:
                v = field(rnd.randint(-c, c))
                if v:
                    terms[(j, d - i)] = v
    return MultiPoly(terms, ("t", "x"), field)


@pytest.mark.parametrize("field", [QQ, PrimeField(101)], ids=["Q", "F101"])
def test_lemma_degree_bounds(field):
    rnd = random.Random(7)
    for n in range(1000):
        d = rnd.choice([4, 6, 8, 9])
        F = random_bivariate(rnd, d, field)
        for m in nontrivial_divisors(d):
            dec = bivariate_m_decompose(F, m)
            assert dec.reconstruct() == F
            assert dec.check_degree_bounds(), dec.degree_report()


def test_generic_quartic_remainder_is_nonzero():
    avars = ("a1", "a2", "a3", "a4")
    coeff = lambda s: parse_poly(s, avars)
    f = [coeff("a4"), coeff("a3"), coeff("a2"), coeff("a1"), coeff("1")]
    zero, one = MultiPoly.zero(avars), MultiPoly.const(1, avars)
    u, g, h = m_decompose_coeffs(f, 2, zero, one, Fraction(1, 2))
    assert any(h)
    # independent check with sympy: f - g^2 has this x-coefficient and nothing above it
    a1, a2, a3, a4 = sympy.symbols("a1 a2 a3 a4")
    fx = X**4 + a1 * X**3 + a2 * X**2 + a3 * X + a4
    gx = sum(sympy.sympify(str(c).replace("^", "**")) * X**i for i, c in enumerate(g))
    diff = sympy.Poly(sympy.expand(fx - gx**2), X)
    assert diff.degree() <= 1
    h1 = sympy.sympify(str(h[1]).replace("^", "**"))
    assert sympy.expand(h1 - diff.coeff_monomial(X)) == 0
    assert sympy.expand(h1) != 0


# --- remark: adding a polynomial in t alone -----------------------------------


def test_adding_t_polynomial_moves_into_u():
    F5 = PrimeField(5)
    rnd = random.Random(3)
    for _ in range(5):
        g = MultiPoly.from_coeff_list(
            [MultiPoly.from_unipoly(UniPoly([0, rnd.randrange(5)], F5, "t"), "t", ("t",)),
             MultiPoly.const(rnd.randrange(5), ("t",), F5),
             MultiPoly.const(1, ("t",), F5)],
            "x", ("t", "x"),
        )
        c = F5(rnd.randrange(5))
        f = g * g + MultiPoly.const(c, ("t", "x"), F5)
        fprime = M("t^2 + 2*t", field=F5)
        dec = bivariate_m_decompose(f + fprime, 2, strict=False)
        assert not dec.h
        assert dec.g == g
        assert dec.u == M("x^2", field=F5) + MultiPoly.const(c, ("t", "x"), F5) + fprime
