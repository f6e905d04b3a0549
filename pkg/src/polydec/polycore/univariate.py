"""Dense univariate polynomials over a coefficient field."""

from fractions import Fraction

from ..errors import FieldMismatch, NonIntegralCoefficient, ZeroPolynomial
from . import dense
from .fields import QQ


class UniPoly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs, field=QQ, var="x"):
        cs = [field(c) for c in coeffs]
        object.__setattr__(self, "coeffs", tuple(dense.trim(cs)))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def _raw(cls, coeffs, field, var="x"):
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(dense.trim(list(coeffs))))
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "var", var)
        return obj

    @classmethod
    def x(cls, field=QQ, var="x"):
        return cls([0, 1], field, var)

    @classmethod
    def constant(cls, c, field=QQ, var="x"):
        return cls([c], field, var)

    @classmethod
    def monomial(cls, c, n, field=QQ, var="x"):
        return cls([0] * n + [c], field, var)

    # -- basic accessors ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def _check(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        return UniPoly._raw([self.field(other)], self.field, self.var)

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        o = self._check(other)
        return UniPoly._raw(dense.add(list(self.coeffs), list(o.coeffs)), self.field, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return UniPoly._raw(
            dense.sub(list(self.coeffs), list(o.coeffs), self.field.zero), self.field, self.var
        )

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.field, self.var)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            s = self.field(other)
            return UniPoly._raw(dense.scale(list(self.coeffs), s), self.field, self.var)
        o = self._check(other)
        return UniPoly._raw(dense.mul(self.coeffs, o.coeffs, self.field.zero), self.field, self.var)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        return UniPoly._raw(
            dense.power(list(self.coeffs), e, self.field.zero, self.field.one), self.field, self.var
        )

    def __divmod__(self, other):
        o = self._check(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        inv = self.field.one / o.lc
        b = [c * inv for c in o.coeffs]
        q, r = dense.divmod_monic(list(self.coeffs), b, self.field.zero)
        return UniPoly._raw([c * inv for c in q], self.field, self.var), UniPoly._raw(r, self.field, self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            return self.exact_div(other)
        s = self.field(other)
        return UniPoly._raw([c / s for c in self.coeffs], self.field, self.var)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) or not hasattr(other, "coeffs"):
            try:
                return self.coeffs == UniPoly([other], self.field).coeffs
            except Exception:
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    # -- evaluation / composition ----------------------------------------------
    def __call__(self, arg):
        if isinstance(arg, UniPoly):
            return self.compose(arg)
        return dense.evaluate(self.coeffs, self.field(arg), self.field.zero)

    def compose(self, g):
        """u(g(x)) for u = self."""
        g = self._check(g)
        return UniPoly._raw(
            dense.compose(list(self.coeffs), list(g.coeffs), self.field.zero, self.field.one),
            self.field,
            g.var,
        )

    def derivative(self):
        return UniPoly._raw(dense.derivative(list(self.coeffs)), self.field, self.var)

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return self / self.lc

    def map_coeffs(self, fn, field):
        return UniPoly([fn(c) for c in self.coeffs], field, self.var)

    def reduce(self, field):
        """Image of an integral (or p-integral) polynomial in another field."""
        return UniPoly([field(c) for c in self.coeffs], field, self.var)

    def with_var(self, var):
        return UniPoly._raw(self.coeffs, self.field, var)

    def integer_coeffs(self):
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise NonIntegralCoefficient(f"coefficient {c} is not an integer")
                out.append(c.numerator)
            else:
                out.append(int(c))
        return out

    def inf_norm(self):
        """Largest absolute value of a coefficient (integral polynomials over Q)."""
        if self.field != QQ:
            raise NonIntegralCoefficient("inf_norm is defined for integral polynomials over Q")
        return max((abs(c) for c in self.integer_coeffs()), default=0)

    # -- printing ---------------------------------------------------------------
    def terms(self):
        """(exponent, coefficient) pairs in descending degree, zeros skipped."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        from .printing import format_terms

        return format_terms(
            [(c, ((self.var, i),) if i else ()) for i, c in self.terms()]
        )

    def __repr__(self):
        return f"UniPoly({self}, {self.field!r})"


def inf_norm(f: UniPoly) -> int:
    return f.inf_norm()


def compose(u: UniPoly, g: UniPoly) -> UniPoly:
    if u.field != g.field:
        raise FieldMismatch(f"{u.field} vs {g.field}")
    return u.compose(g)
