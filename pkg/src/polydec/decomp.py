"""m-decompositions f = u(g) + h and decomposability decisions.

For a monic f of degree d and a divisor m of d with m invertible, there is a
unique triple (u, g, h) with u, g monic, deg u = m, no y^(m-1) term in u,
deg h < d - d/m, and h_i = 0 whenever deg g divides i. The polynomial g is
the approximate m-th root of f; u and h come from peeling the residual
f - g^m one monomial at a time. Over a field, f is decomposable with an outer
polynomial of degree m exactly when h = 0.

The core routines work on coefficient lists over any commutative ring in
which m is invertible, so the same code serves k[x], k[t][x] and the
alpha-tame fractions of :mod:`polydec.special`.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import factorial
from typing import Optional

from .errors import (
    CharacteristicTooSmall,
    DegreeTooSmall,
    HypothesisViolated,
    InvariantError,
    MNotInvertible,
    NotADivisor,
    NotMonic,
    NotMonicInX,
    ZeroPolynomial,
)
from .ntheory import is_prime, nontrivial_divisors
from .polycore import dense
from .polycore.multivariate import MultiPoly
from .polycore.univariate import UniPoly


# ---------------------------------------------------------------------------
# generic engine on coefficient lists (low-to-high)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def weighted_exponents(i, m):
    """Exponent vectors (j_1..j_{i-1}) with sum k*j_k = i and sum j_k <= m.

    These index the non-linear terms of the i-th equation of the system
    defining the approximate root.
    """
    out = []

    def rec(k, remaining, used, acc):
        if remaining == 0:
            out.append(tuple(acc) + (0,) * (i - 1 - len(acc)))
            return
        if k >= i:
            return
        for j in range(remaining // k + 1):
            if used + j > m:
                break
            rec(k + 1, remaining - j * k, used + j, acc + [j])

    rec(1, i, 0, [])
    return tuple(out)


def multinomial(m, js):
    rest = m - sum(js)
    out = factorial(m) // factorial(rest)
    for j in js:
        out //= factorial(j)
    return out


def approx_root_coeffs(top, m, s, inv_m):
    """Solve the triangular system for b_1..b_s.

    ``top[i]`` is the coefficient a_i of x^(d-i) of a monic f (``top[0]`` is
    the ring's one). Returns ``[b_0 = 1, b_1, ..., b_s]``.
    """
    b = [top[0]]
    for i in range(1, s + 1):
        acc = top[i]
        for js in weighted_exponents(i, m):
            term = multinomial(m, js)
            for k, j in enumerate(js, start=1):
                if j:
                    term = term * b[k] ** j
            acc = acc - term
        b.append(acc * inv_m)
    return b


def peel(f, g, m, zero, one):
    """Split the monic f (low-to-high) as u(g) + h given its approximate root g.

    Returns (u, h) as low-to-high lists. Each step removes the top monomial
    of the residual, so the loop runs at most deg f times.
    """
    s = len(g) - 1
    gp = [[one]]
    for _ in range(m):
        gp.append(dense.mul(gp[-1], g, zero))
    r = dense.sub(f, gp[m], zero)
    r = list(r)
    u = [zero] * m + [one]
    h = [zero] * max(len(r), 1)
    for i in range(len(r) - 1, -1, -1):
        c = r[i]
        if not c:
            continue
        if i % s == 0:
            j = i // s
            u[j] = u[j] + c
            for k, y in enumerate(gp[j]):
                if y:
                    r[k] = r[k] - c * y
        else:
            h[i] = c
            r[i] = zero
        if r[i]:
            raise InvariantError("peeling failed to clear the top monomial")
    return dense.trim(u), dense.trim(h)


def m_decompose_coeffs(f, m, zero, one, inv_m):
    """(u, g, h) coefficient lists for a monic coefficient list f."""
    d = len(f) - 1
    s = d // m
    top = list(reversed(f))
    b = approx_root_coeffs(top, m, s, inv_m)
    g = list(reversed(b))
    u, h = peel(f, g, m, zero, one)
    return u, g, h


# ---------------------------------------------------------------------------
# univariate API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MDecomposition:
    """normalizer^-1 * f = u(g) + h, with u, g monic and h reduced."""

    m: int
    u: UniPoly
    g: UniPoly
    h: UniPoly
    normalizer: object
    gamma_exponent: int = 0

    @property
    def d(self):
        return self.u.degree * self.g.degree

    def reconstruct(self):
        return (self.u.compose(self.g) + self.h) * self.normalizer

    def check(self, f=None):
        """Verify conditions (i)-(iii) and, if f is given, the identity."""
        d, s = self.d, self.g.degree
        ok = (
            self.u.is_monic()
            and self.g.is_monic()
            and self.u.degree == self.m
            and not self.u[self.m - 1]
            and self.h.degree < d - s
            and all(not c for i, c in enumerate(self.h.coeffs) if i % s == 0)
        )
        if f is not None:
            ok = ok and self.reconstruct() == f
        return ok


def _check_m(d, m, field):
    if m < 2 or d % m:
        raise NotADivisor(f"m = {m} is not a divisor >= 2 of d = {d}")
    p = field.characteristic
    if p and m % p == 0:
        raise MNotInvertible(f"m = {m} is not invertible in characteristic {p}")


def approx_m_root(f: UniPoly, m: int) -> UniPoly:
    """The approximate m-th root of a monic f: the monic g of degree d/m
    with deg(f - g^m) < d - d/m."""
    if not f:
        raise ZeroPolynomial("zero polynomial")
    if not f.is_monic():
        raise NotMonic("approx_m_root needs a monic polynomial")
    d = f.degree
    _check_m(d, m, f.field)
    F = f.field
    b = approx_root_coeffs(list(reversed(f.coeffs)), m, d // m, F.one / F(m))
    return UniPoly._raw(list(reversed(b)), F, f.var)


def m_decompose(f: UniPoly, m: int) -> MDecomposition:
    if not f:
        raise ZeroPolynomial("zero polynomial")
    d = f.degree
    if d < 2:
        raise DegreeTooSmall(f"degree {d} < 2")
    F = f.field
    _check_m(d, m, F)
    a0 = f.lc
    fm = f if a0 == 1 else f / a0
    u, g, h = m_decompose_coeffs(list(fm.coeffs), m, F.zero, F.one, F.one / F(m))
    return MDecomposition(
        m,
        UniPoly._raw(u, F, f.var),
        UniPoly._raw(g, F, f.var),
        UniPoly._raw(h, F, f.var),
        a0,
    )


def is_m_decomposable(f: UniPoly, m: int) -> bool:
    if not 1 < m < f.degree:
        raise NotADivisor(f"need 1 < m < deg f, got m = {m}")
    return not m_decompose(f, m).h


@dataclass(frozen=True)
class Witness:
    """Remainder h_m of the m-decomposition; nonzero certifies that no
    decomposition with outer degree m exists."""

    h: UniPoly
    d: int = 0

    @property
    def first_nonzero_index(self) -> Optional[int]:
        """Index i of the top nonzero term h_i x^(d-i) (None if h = 0)."""
        if not self.h:
            return None
        return self.d - self.h.degree


@dataclass(frozen=True)
class DecompResult:
    status: str  # "indecomposable" | "decomposable" | "not_applicable"
    u: Optional[UniPoly] = None
    g: Optional[UniPoly] = None
    reason: str = ""
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def is_decomposable(self):
        return self.status == "decomposable"

    @property
    def is_indecomposable(self):
        return self.status == "indecomposable"


def decompose(f: UniPoly) -> DecompResult:
    """Decide decomposability of f in k[x] (one level: f = U(g) or nothing)."""
    if not f:
        raise ZeroPolynomial("zero polynomial")
    d = f.degree
    p = f.field.characteristic
    if d < 1:
        raise DegreeTooSmall("constant polynomial")
    if d == 1 or is_prime(d):
        return DecompResult("indecomposable", reason="degree 1 or prime")
    if p and p <= d:
        return DecompResult(
            "not_applicable",
            reason=f"characteristic {p} <= degree {d}; use the oracle",
        )
    witnesses = {}
    for m in nontrivial_divisors(d):
        dec = m_decompose(f, m)
        witnesses[m] = Witness(dec.h, d)
        if not dec.h:
            U = dec.u * dec.normalizer
            if U.compose(dec.g) != f:
                raise InvariantError("decomposition does not reconstruct f")
            return DecompResult("decomposable", U, dec.g, witnesses=witnesses)
    return DecompResult("indecomposable", witnesses=witnesses)


# ---------------------------------------------------------------------------
# bivariate variant over k[t]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BivariateMDecomposition:
    """F = u(g) + h over k[t][x]; u is written in x as the outer variable."""

    m: int
    d: int
    u: MultiPoly
    g: MultiPoly
    h: MultiPoly

    def reconstruct(self):
        return self.u.substitute({"x": self.g}, self.g.vars) + self.h

    def degree_report(self):
        s = self.d // self.m
        return {
            "deg_x_g": self.g.degree("x"),
            "deg_x_u": self.u.degree("x"),
            "deg_x_h": self.h.degree("x"),
            "deg_t_g": self.g.degree("t"),
            "deg_t_u": self.u.degree("t"),
            "deg_t_h": self.h.degree("t"),
            "deg_g": self.g.degree(),
            "deg_u": self.u.degree(),
            "deg_h": self.h.degree(),
            "bound_deg_x_h": self.d - s,
            "d_over_m": s,
        }

    def check_degree_bounds(self):
        r = self.degree_report()
        s, d, m = r["d_over_m"], self.d, self.m
        return (
            r["deg_x_g"] == s
            and r["deg_x_u"] == m
            and r["deg_x_h"] < d - s
            and r["deg_t_g"] <= s
            and r["deg_t_u"] <= d
            and r["deg_t_h"] <= d
            and r["deg_g"] == s
            and r["deg_u"] <= d
            and r["deg_h"] <= d
        )


def bivariate_m_decompose(F: MultiPoly, m: int, strict=True) -> BivariateMDecomposition:
    """m-decomposition of F in (t, x), viewed as a polynomial in x over k[t].

    With ``strict`` the degree hypothesis deg_t a_i <= i is enforced, which
    is what guarantees the reported degree bounds.
    """
    if set(F.vars) - {"t", "x"}:
        raise HypothesisViolated(f"expected variables (t, x), got {F.vars}")
    F = F.embed(("t", "x"))
    k = F.field
    coeffs = F.coeff_list("x")
    d = len(coeffs) - 1
    if d < 2:
        raise DegreeTooSmall(f"x-degree {d} < 2")
    if coeffs[-1] != 1:
        raise NotMonicInX("F must be monic in x")
    _check_m(d, m, k)
    if strict:
        for i in range(1, d + 1):
            if coeffs[d - i].degree("t") > i:
                raise HypothesisViolated(f"deg_t a_{i} > {i}")
    zero = MultiPoly.zero(("t",), k)
    one = MultiPoly.const(1, ("t",), k)
    u, g, h = m_decompose_coeffs(coeffs, m, zero, one, k.one / k(m))
    vars = ("t", "x")
    return BivariateMDecomposition(
        m,
        d,
        MultiPoly.from_coeff_list(u, "x", vars),
        MultiPoly.from_coeff_list(g, "x", vars),
        MultiPoly.from_coeff_list(h, "x", vars) if h else MultiPoly.zero(vars, k),
    )


def require_char(field, d):
    p = field.characteristic
    if p and p <= d:
        raise CharacteristicTooSmall(f"characteristic {p} <= degree {d}")
