"""Independent ground truth: base-g expansions, exhaustive decomposition
search over small finite fields, and Newton identities.

Nothing here relies on the peeling procedure of :mod:`polydec.decomp`, so
these routines can be used to check it. The finite-field search works on
integer codes of field elements (see :mod:`polydec.polycore.fields`).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CharacteristicTooSmall,
    FieldMismatch,
    GNotMonic,
    SearchSpaceTooLarge,
    ZeroPolynomial,
)
from .ntheory import nontrivial_divisors
from .polycore import dense
from .polycore.fields import QQ, GaloisField, PrimeField, galois_field
from .polycore.multivariate import MultiPoly
from .polycore.univariate import UniPoly

SEARCH_LIMIT = 10**6


@dataclass(frozen=True)
class GAdicExpansion:
    """f = sum(digits[i] * g**i) with deg digits[i] < deg g."""

    digits: tuple
    g: UniPoly

    def all_constant(self):
        return all(q.degree <= 0 for q in self.digits)

    def outer(self):
        """u with f = u(g); only meaningful when all digits are constant."""
        return UniPoly([q[0] for q in self.digits], self.g.field, "x")

    def evaluate(self):
        acc = UniPoly._raw([], self.g.field, self.g.var)
        for q in reversed(self.digits):
            acc = acc * self.g + q
        return acc


def g_adic_expand(f: UniPoly, g: UniPoly) -> GAdicExpansion:
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    if g.degree < 1 or not g.is_monic():
        raise GNotMonic("g must be monic of degree >= 1")
    digits = []
    r = f
    while r:
        r, q = divmod(r, g)
        digits.append(q)
    return GAdicExpansion(tuple(digits), g)


# ---------------------------------------------------------------------------
# raw finite-field search
# ---------------------------------------------------------------------------


class _Raw:
    """Integer-code arithmetic for GF(p) or GF(p^k)."""

    def __init__(self, field):
        self.field = field
        self.q = field.order
        if isinstance(field, PrimeField):
            p = field.p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: a * b % p
            self.inv = lambda a: pow(a, -1, p)
        else:
            self.sub = field.sub
            self.mul = field.mul
            self.inv = field.inv


def _codes(f: UniPoly, field):
    return [field.code(c) for c in f.coeffs]


def _constant_digits(f, g, ops):
    """Digits of the base-g expansion of f if all are constants, else None.

    f, g are code lists (low-to-high), g monic.
    """
    sub, mul = ops.sub, ops.mul
    s = len(g) - 1
    digits = []
    r = list(f)
    while r:
        n = len(r) - 1
        if n < s:
            if n > 0:
                return None
            digits.append(r[0])
            break
        q = [0] * (n - s + 1)
        for i in range(n, s - 1, -1):
            c = r[i]
            if not c:
                continue
            q[i - s] = c
            for j in range(s):
                gj = g[j]
                if gj:
                    r[i - s + j] = sub(r[i - s + j], mul(c, gj))
        if any(r[1:s]):
            return None
        digits.append(r[0])
        while q and not q[-1]:
            q.pop()
        r = q
    return digits


def _monic_codes(f: UniPoly, ops):
    codes = _codes(f, f.field)
    lead = codes[-1]
    if lead == 1:
        return codes, 1
    inv = ops.inv(lead)
    return [ops.mul(c, inv) for c in codes], lead


def _check_finite(f):
    if not isinstance(f.field, (PrimeField, GaloisField)):
        raise FieldMismatch("brute force search needs a finite field")
    if not f:
        raise ZeroPolynomial("zero polynomial")


def brute_force_decompose(f: UniPoly, limit=SEARCH_LIMIT):
    """Every pair (u, g) with f = u(g), g monic of degree d/m, 1 < m < d.

    All monic g of each admissible degree are enumerated (every constant
    term included, no affine normalization), in lexicographic order of the
    coefficient codes. An empty list means f is indecomposable over its
    field.
    """
    _check_finite(f)
    F = f.field
    ops = _Raw(F)
    d = f.degree
    divs = nontrivial_divisors(d) if d > 1 else ()
    for m in divs:
        if F.order ** (d // m) > limit:
            raise SearchSpaceTooLarge(f"{F.order}^{d // m} candidates exceed {limit}")
    fm, lead = _monic_codes(f, ops)
    found = []
    for m in divs:
        s = d // m
        for low in itertools.product(range(F.order), repeat=s):
            g = list(low) + [1]
            digits = _constant_digits(fm, g, ops)
            if digits is None:
                continue
            u = UniPoly([F.from_code(c) for c in digits], F) * F.from_code(lead)
            found.append((u, UniPoly([F.from_code(c) for c in g], F)))
    return found


def find_decomposition(f: UniPoly, limit=SEARCH_LIMIT):
    """First (u, g) with f = u(g) over a finite field, or None.

    Searches g with zero constant term only (f is in k[g] iff it is in
    k[g - g(0)]), which divides the search space by the field order.
    """
    _check_finite(f)
    F = f.field
    ops = _Raw(F)
    d = f.degree
    divs = nontrivial_divisors(d) if d > 1 else ()
    for m in divs:
        if F.order ** (d // m - 1) > limit:
            raise SearchSpaceTooLarge(f"{F.order}^{d // m - 1} candidates exceed {limit}")
    fm, lead = _monic_codes(f, ops)
    for m in divs:
        s = d // m
        for mid in itertools.product(range(F.order), repeat=s - 1):
            g = [0] + list(mid) + [1]
            digits = _constant_digits(fm, g, ops)
            if digits is not None:
                u = UniPoly([F.from_code(c) for c in digits], F) * F.from_code(lead)
                return u, UniPoly([F.from_code(c) for c in g], F)
    return None


def oracle_is_decomposable(f: UniPoly, limit=SEARCH_LIMIT) -> bool:
    """Decomposability of f in k[x] decided without the peeling procedure.

    Over a finite field: exhaustive search. Over Q: for each divisor m the
    approximate root g is the only possible right factor up to a constant,
    and f is in Q[g] iff every g-adic digit is constant.
    """
    if f.field == QQ:
        from .decomp import approx_m_root

        d = f.degree
        fm = f.monic()
        for m in nontrivial_divisors(d) if d > 1 else ():
            if g_adic_expand(fm, approx_m_root(fm, m)).all_constant():
                return True
        return False
    return find_decomposition(f, limit) is not None


def lift(f: UniPoly, field):
    """Image of a polynomial over GF(p) in an extension GF(p^k)."""
    if field.characteristic != f.field.characteristic:
        raise FieldMismatch("lift needs a common prime subfield")
    return UniPoly([field(int(c)) for c in f.coeffs], field, f.var)


def search_extensions(f: UniPoly, max_k=3, limit=SEARCH_LIMIT):
    """Look for a decomposition of f (over GF(p)) in GF(p^k), k = 1..max_k.

    Returns (field, u, g) for the smallest k with a hit, else None. Degrees
    whose search space exceeds ``limit`` are skipped.
    """
    p = f.field.characteristic
    for k in range(1, max_k + 1):
        F = PrimeField(p) if k == 1 else galois_field(p, k)
        try:
            hit = find_decomposition(lift(f, F), limit)
        except SearchSpaceTooLarge:
            continue
        if hit is not None:
            return F, hit[0], hit[1]
    return None


# ---------------------------------------------------------------------------
# decompositions over k[t] with a constant outer polynomial
# ---------------------------------------------------------------------------


def search_constant_outer(F: MultiPoly, m: int, limit=SEARCH_LIMIT):
    """All (U, G) with F = U(G), U in k[y] of degree m, G in k[t][x] monic
    in x with zero constant term, over a prime field.

    F must be monic in x. Since deg_t F = m * deg_t G for such a pair, the
    t-degree of every coefficient of G is bounded by deg_t(F) / m.
    """
    k = F.field
    if not isinstance(k, PrimeField):
        raise FieldMismatch("search_constant_outer needs a prime field")
    F = F.embed(("t", "x"))
    coeffs = [c.embed(("t",)).to_unipoly("t") for c in F.coeff_list("x")]
    d = len(coeffs) - 1
    if d % m or coeffs[-1] != 1:
        return []
    s = d // m
    dt = F.degree("t")
    if dt % m:
        return []
    bound = dt // m
    p = k.p
    slots = (s - 1) * (bound + 1) + bound
    if p**slots > limit:
        raise SearchSpaceTooLarge(f"{p}^{slots} candidates exceed {limit}")
    zero = UniPoly._raw([], k, "t")
    one = UniPoly._raw([k.one], k, "t")
    found = []
    for vals in itertools.product(range(p), repeat=slots):
        it = iter(vals)
        g = [UniPoly([0] + [next(it) for _ in range(bound)], k, "t")]
        for _ in range(s - 1):
            g.append(UniPoly([next(it) for _ in range(bound + 1)], k, "t"))
        g.append(one)
        digits = []
        r = list(coeffs)
        ok = True
        while r:
            q, rem = dense.divmod_monic(r, g, zero)
            rem = dense.trim(list(rem))
            if len(rem) > 1 or (rem and rem[0].degree > 0):
                ok = False
                break
            digits.append(rem[0][0] if rem else k.zero)
            r = dense.trim(list(q))
        if ok and len(digits) == m + 1:
            U = UniPoly(digits, k)
            G = MultiPoly.from_coeff_list(
                [MultiPoly.from_unipoly(c, "t", ("t",)) for c in g], "x", ("t", "x")
            )
            found.append((U, G))
    return found


# ---------------------------------------------------------------------------
# Newton identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerSums:
    """S_1..S_n of the roots of a monic polynomial of degree n."""

    values: tuple


def _require_char(field, n):
    p = field.characteristic
    if p and p <= n:
        raise CharacteristicTooSmall(f"characteristic {p} <= {n}")


def power_sums(f: UniPoly, n=None) -> PowerSums:
    """S_l = trace(C^l) for the companion matrix C of the monic f."""
    if not f.is_monic():
        raise GNotMonic("power sums need a monic polynomial")
    F = f.field
    deg = f.degree
    n = deg if n is None else n
    if deg == 0:
        return PowerSums(tuple(F.zero for _ in range(n)))
    # multiplication by x on the basis 1, x, ..., x^(deg-1)
    C = [[F.zero] * deg for _ in range(deg)]
    for j in range(deg - 1):
        C[j + 1][j] = F.one
    for i in range(deg):
        C[i][deg - 1] = -f[i]
    P = [[F.one if i == j else F.zero for j in range(deg)] for i in range(deg)]
    out = []
    for _ in range(n):
        P = [
            [sum((P[i][k] * C[k][j] for k in range(deg)), F.zero) for j in range(deg)]
            for i in range(deg)
        ]
        out.append(sum((P[i][i] for i in range(deg)), F.zero))
    return PowerSums(tuple(out))


def newton_check(f: UniPoly, S) -> bool:
    """True iff S_l + p_1 S_(l-1) + ... + p_(l-1) S_1 + l p_l = 0 for l <= n."""
    if not f.is_monic():
        raise GNotMonic("newton_check needs a monic polynomial")
    n = f.degree
    _require_char(f.field, n)
    vals = S.values if isinstance(S, PowerSums) else tuple(S)
    vals = tuple(f.field(v) for v in vals)
    if len(vals) != n:
        return False
    p = [f[n - i] for i in range(n + 1)]  # p[0] = 1, p[i] multiplies x^(n-i)
    for l in range(1, n + 1):
        acc = vals[l - 1] + l * p[l]
        for i in range(1, l):
            acc = acc + p[i] * vals[l - 1 - i]
        if acc:
            return False
    return True


def coeffs_from_power_sums(S, field=QQ, var="x") -> UniPoly:
    """Monic polynomial whose roots have the given power sums."""
    vals = tuple(field(v) for v in (S.values if isinstance(S, PowerSums) else S))
    n = len(vals)
    _require_char(field, n)
    p = [field.one]
    for l in range(1, n + 1):
        acc = vals[l - 1]
        for i in range(1, l):
            acc = acc + p[i] * vals[l - 1 - i]
        p.append(-acc / field(l))
    return UniPoly(list(reversed(p)), field, var)
