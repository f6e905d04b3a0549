"""Subresultant resultants, shifted discriminants and base-field roots."""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import CharacteristicDividesDegree, FieldMismatch, ZeroPolynomial
from ..ntheory import divisors
from . import dense
from .fields import GaloisField, PrimeField, QQ
from .univariate import UniPoly


def subresultant(a, b, zero, one, exquo):
    """Resultant of two nonzero coefficient lists over an integral domain.

    Collins/Brown subresultant PRS; ``exquo(x, y)`` must return the exact
    quotient x / y in the coefficient domain.
    """
    a, b = dense.trim(list(a)), dense.trim(list(b))
    if not a or not b:
        raise ZeroPolynomial("resultant of the zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    sign = one
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            sign = -sign
    if db == 0:
        return sign * b[0] ** da
    g = h = one
    while True:
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = dense.pseudo_remainder(a, b, zero)
        a = b
        if not r:
            return zero
        denom = g * h**delta
        b = [exquo(c, denom) for c in r]
        g = a[-1]
        if delta:
            h = exquo(g**delta, h ** (delta - 1))
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            break
    if da == 0:
        return sign * b[0]
    return sign * exquo(b[0] ** da, h ** (da - 1))


def resultant(p: UniPoly, q: UniPoly):
    if p.field != q.field:
        raise FieldMismatch(f"{p.field} vs {q.field}")
    if not p or not q:
        raise ZeroPolynomial("resultant of the zero polynomial")
    F = p.field
    return subresultant(p.coeffs, q.coeffs, F.zero, F.one, lambda x, y: x / y)


def discriminant_shifted(g: UniPoly, c):
    """Res(g + c, g'), zero exactly when g + c has a repeated root."""
    if g.degree < 1:
        raise ZeroPolynomial("need deg g >= 1")
    return resultant(g + g.field(c), g.derivative())


def shift_resultant(g: UniPoly) -> UniPoly:
    """The polynomial R(c) = Res_x(g(x) + c, g'(x)) in the variable c."""
    F = g.field
    if g.degree < 1:
        raise ZeroPolynomial("need deg g >= 1")
    if F.characteristic and g.degree % F.characteristic == 0:
        raise CharacteristicDividesDegree(
            f"characteristic {F.characteristic} divides deg g = {g.degree}"
        )
    one = UniPoly._raw([F.one], F, "c")
    zero = UniPoly._raw([], F, "c")
    a = [UniPoly._raw([g[0], F.one], F, "c")] + [UniPoly._raw([x], F, "c") for x in g.coeffs[1:]]
    b = [UniPoly._raw([x], F, "c") for x in g.derivative().coeffs]
    return subresultant(a, b, zero, one, lambda x, y: x.exact_div(y))


def _squarefree_part(f: UniPoly) -> UniPoly:
    df = f.derivative()
    if not df:
        return f.monic()
    g = gcd(f, df)
    return (f // g).monic()


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def _rational_roots(f: UniPoly):
    f = _squarefree_part(f)
    roots = set()
    if f[0] == 0:
        roots.add(Fraction(0))
        f = f // UniPoly.x(QQ, f.var)
    if f.degree < 1:
        return roots
    den = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    for num in divisors(abs(ints[0])):
        for d in divisors(abs(ints[-1])):
            for s in (1, -1):
                r = Fraction(s * num, d)
                if r not in roots and not f(r):
                    roots.add(r)
    return roots


def _powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    result = UniPoly._raw([mod.field.one], mod.field, mod.var)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def _split_linear(f: UniPoly, rng):
    """Roots of a squarefree product of distinct linear factors over GF(p), p odd."""
    if f.degree == 0:
        return []
    if f.degree == 1:
        return [-f[0] / f[1]]
    p = f.field.p
    while True:
        delta = f.field(rng.randrange(p))
        s = _powmod(UniPoly._raw([delta, f.field.one], f.field, f.var), (p - 1) // 2, f) - 1
        d = gcd(f, s)
        if 0 < d.degree < f.degree:
            return _split_linear(d, rng) + _split_linear(f // d, rng)


def _prime_field_roots(f: UniPoly):
    F = f.field
    p = F.p
    if p <= 10**5:
        return {a for a in F.elements() if not f(a)}
    x = UniPoly.x(F, f.var)
    lin = gcd(f.monic(), _powmod(x, p, f.monic()) - x)
    return set(_split_linear(lin, random.Random(0)))


def base_field_roots(f: UniPoly):
    """Distinct roots of f lying in its coefficient field."""
    if not f:
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    if f.degree < 1:
        return set()
    if f.field == QQ:
        return _rational_roots(f)
    if isinstance(f.field, PrimeField):
        return _prime_field_roots(f)
    if isinstance(f.field, GaloisField):
        return {a for a in f.field.elements() if not f(a)}
    raise FieldMismatch(f"unsupported field {f.field!r}")


@dataclass(frozen=True)
class ShiftReport:
    """Outcome of the bad-shift computation for a polynomial g.

    ``roots`` are the base-field values c making g + c non-squarefree;
    ``residual_degree`` is the degree of the part of R(c) without base-field
    roots (those bad shifts live in a proper extension).
    """

    resultant: UniPoly
    roots: frozenset
    residual_degree: int


def bad_shift_report(g: UniPoly) -> ShiftReport:
    R = shift_resultant(g)
    roots = base_field_roots(R)
    rest = R.monic()
    for r in roots:
        lin = UniPoly._raw([-r, R.field.one], R.field, R.var)
        while True:
            q, rem = divmod(rest, lin)
            if rem:
                break
            rest = q
    return ShiftReport(R, frozenset(roots), rest.degree)


def count_bad_shifts(g: UniPoly) -> frozenset:
    """The set {c in K : g + c has a multiple root}; at most deg g - 1 values."""
    return bad_shift_report(g).roots
