"""Fractions numerator / a0(a)^e over k[a, t] with a fixed denominator base.

These are the coefficients met when m-decomposing q(a, t, x) / a0(a): every
division is by a power of the single polynomial a0(a), so keeping the
numerator and the exponent is enough and stays fraction-free.
"""

from dataclasses import dataclass

from .errors import InvariantError
from .polycore.multivariate import MultiPoly


class TameRing:
    """Shared context: the denominator base and a cache of its powers."""

    def __init__(self, base: MultiPoly):
        if not base:
            raise ZeroDivisionError("denominator base must be nonzero")
        self.base = base
        self.vars = base.vars
        self.field = base.field
        self._powers = [MultiPoly.const(1, base.vars, base.field)]

    def base_power(self, e):
        while len(self._powers) <= e:
            self._powers.append(self._powers[-1] * self.base)
        return self._powers[e]

    def __call__(self, numerator, exponent=0):
        if not isinstance(numerator, MultiPoly):
            numerator = MultiPoly.const(numerator, self.vars, self.field)
        return TameElem(numerator.embed(self.vars), exponent, self)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


class TameElem:
    __slots__ = ("num", "exp", "ring")

    def __init__(self, num, exp, ring):
        self.num = num
        self.exp = exp
        self.ring = ring

    def _lift(self, other):
        if isinstance(other, TameElem):
            return other
        return self.ring(other)

    def raised_to(self, e):
        """Same value written over base^e (e >= current exponent)."""
        if e < self.exp:
            raise InvariantError("cannot lower a denominator exponent")
        if e == self.exp:
            return self.num
        return self.num * self.ring.base_power(e - self.exp)

    def __add__(self, other):
        o = self._lift(other)
        if not o.num:
            return self
        if not self.num:
            return o
        e = max(self.exp, o.exp)
        return TameElem(self.raised_to(e) + o.raised_to(e), e, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TameElem(-self.num, self.exp, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TameElem):
            return TameElem(self.num * other, self.exp, self.ring)
        if not self.num or not other.num:
            return TameElem(MultiPoly.zero(self.ring.vars, self.ring.field), 0, self.ring)
        return TameElem(self.num * other.num, self.exp + other.exp, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n):
        return TameElem(self.num**n, self.exp * n, self.ring)

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"({self.num}) / a0^{self.exp}"


@dataclass(frozen=True)
class TamePoly:
    """numerator(a, t, x) / denom_base(a) ** denom_exponent."""

    numerator: MultiPoly
    denom_exponent: int
    denom_base: MultiPoly

    @classmethod
    def from_coeffs(cls, coeffs, ring: TameRing, vars=("a", "t", "x")):
        """Pack a low-to-high list of TameElem (coefficients in x)."""
        e = max((c.exp for c in coeffs if c), default=0)
        cl = [MultiPoly.zero(ring.vars, ring.field) if not c else c.raised_to(e) for c in coeffs]
        num = MultiPoly.from_coeff_list(cl, "x", vars)
        return cls(num, e, ring.base)

    def alpha_tame_violations(self, order, alpha="a"):
        """Coefficients of x^(order - i) whose numerator over a0^i exceeds
        a-degree i * order (or that would need a larger exponent)."""
        out = []
        for j, c in self.numerator.coefficients_in("x").items():
            i = order - j
            need = i - self.denom_exponent
            if i < 0:
                out.append((j, "x-degree above order"))
                continue
            if need < 0:
                out.append((j, "denominator exponent above index"))
                continue
            deg = c.degree(alpha) + need * self.denom_base.degree(alpha)
            if deg > i * order:
                out.append((j, f"a-degree {deg} > {i * order}"))
        return out


def alpha_tame_violations(coeffs, order, alpha="a"):
    """Tameness check directly on a low-to-high list of TameElem.

    The coefficient of x^j has index i = order - j; it must be expressible
    over a0^i with numerator a-degree at most i * order.
    """
    out = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        i = order - j
        if i < 0:
            out.append((j, "x-degree above order"))
            continue
        if c.exp > i:
            out.append((j, f"exponent {c.exp} above index {i}"))
            continue
        # degrees add in the domain k[a, t], so no need to expand base powers
        deg = c.num.degree(alpha) + (i - c.exp) * c.ring.base.degree(alpha)
        if deg > i * order:
            out.append((j, f"a-degree {deg} > {i * order}"))
    return out
