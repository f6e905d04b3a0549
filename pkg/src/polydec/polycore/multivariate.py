"""Sparse multivariate polynomials keyed by exponent tuples."""

from fractions import Fraction

from ..errors import ArityMismatch, FieldMismatch
from .fields import QQ
from .printing import format_terms
from .univariate import UniPoly


def _is_scalar(obj):
    return not isinstance(obj, (MultiPoly, UniPoly))


class MultiPoly:
    """Polynomial in the ordered variables ``vars`` over ``field``.

    ``terms`` maps exponent tuples (same arity as ``vars``) to nonzero
    coefficients. Instances are treated as immutable.
    """

    __slots__ = ("terms", "vars", "field")

    def __init__(self, terms, vars, field=QQ):
        vars = tuple(vars)
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != len(vars):
                raise ArityMismatch(f"exponent {exp} does not match variables {vars}")
            c = field(c)
            if c:
                clean[exp] = clean[exp] + c if exp in clean else c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self.vars = vars
        self.field = field

    @classmethod
    def _raw(cls, terms, vars, field):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.vars = vars
        obj.field = field
        return obj

    @classmethod
    def zero(cls, vars, field=QQ):
        return cls._raw({}, tuple(vars), field)

    @classmethod
    def const(cls, c, vars, field=QQ):
        c = field(c)
        vars = tuple(vars)
        return cls._raw({(0,) * len(vars): c} if c else {}, vars, field)

    @classmethod
    def var(cls, name, vars, field=QQ):
        vars = tuple(vars)
        exp = tuple(1 if v == name else 0 for v in vars)
        if name not in vars:
            raise ArityMismatch(f"{name} not among {vars}")
        return cls._raw({exp: field.one}, vars, field)

    @classmethod
    def from_unipoly(cls, f: UniPoly, var, vars):
        vars = tuple(vars)
        k = vars.index(var)
        terms = {}
        for i, c in enumerate(f.coeffs):
            if c:
                exp = [0] * len(vars)
                exp[k] = i
                terms[tuple(exp)] = c
        return cls._raw(terms, vars, f.field)

    # -- helpers -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            if other.vars != self.vars:
                return other.embed(self.vars)
            return other
        return MultiPoly.const(other, self.vars, self.field)

    def embed(self, vars):
        """Re-express over a variable list containing all used variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for k, v in enumerate(self.vars):
            if v in vars:
                idx.append(vars.index(v))
            elif any(e[k] for e in self.terms):
                raise ArityMismatch(f"variable {v} is used but missing from {vars}")
            else:
                idx.append(None)
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(vars)
            for k, e in enumerate(exp):
                if idx[k] is not None:
                    new[idx[k]] = e
            terms[tuple(new)] = c
        return MultiPoly._raw(terms, vars, self.field)

    def used_vars(self):
        return tuple(v for k, v in enumerate(self.vars) if any(e[k] for e in self.terms))

    # -- ring operations -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for exp, c in o.terms.items():
            if exp in terms:
                s = terms[exp] + c
                if s:
                    terms[exp] = s
                else:
                    del terms[exp]
            else:
                terms[exp] = c
        return MultiPoly._raw(terms, self.vars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if _is_scalar(other):
            s = self.field(other)
            if not s:
                return MultiPoly._raw({}, self.vars, self.field)
            return MultiPoly._raw({e: c * s for e, c in self.terms.items()}, self.vars, self.field)
        o = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if e in terms:
                    terms[e] = terms[e] + c1 * c2
                else:
                    terms[e] = c1 * c2
        terms = {e: c for e, c in terms.items() if c}
        return MultiPoly._raw(terms, self.vars, self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.const(1, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if self.field != other.field:
                return False
            if self.vars != other.vars:
                try:
                    other = other.embed(self.vars)
                except ArityMismatch:
                    return False
            return self.terms == other.terms
        if _is_scalar(other):
            try:
                return self.terms == MultiPoly.const(other, self.vars, self.field).terms
            except Exception:
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.vars))

    # -- degrees -------------------------------------------------------------
    def degree(self, var=None):
        """Total degree, or the degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        k = self.vars.index(var)
        return max(e[k] for e in self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), self.field.zero)

    # -- structure -------------------------------------------------------------
    def coefficients_in(self, var):
        """Map power -> coefficient (MultiPoly in the remaining variables)."""
        k = self.vars.index(var)
        rest = self.vars[:k] + self.vars[k + 1 :]
        out = {}
        for exp, c in self.terms.items():
            out.setdefault(exp[k], {})[exp[:k] + exp[k + 1 :]] = c
        return {i: MultiPoly._raw(t, rest, self.field) for i, t in out.items()}

    def coeff_list(self, var):
        """Dense low-to-high list of coefficients in ``var``."""
        cmap = self.coefficients_in(var)
        k = self.vars.index(var)
        rest = self.vars[:k] + self.vars[k + 1 :]
        n = max(cmap, default=-1)
        zero = MultiPoly.zero(rest, self.field)
        return [cmap.get(i, zero) for i in range(n + 1)]

    @classmethod
    def from_coeff_list(cls, coeffs, var, vars):
        """Inverse of :meth:`coeff_list`."""
        vars = tuple(vars)
        k = vars.index(var)
        rest = vars[:k] + vars[k + 1 :]
        field = None
        terms = {}
        for i, c in enumerate(coeffs):
            if not isinstance(c, MultiPoly):
                continue
            field = c.field
            c = c.embed(rest)
            for exp, v in c.terms.items():
                terms[exp[:k] + (i,) + exp[k:]] = v
        if field is None:
            field = QQ
            for c in coeffs:
                if isinstance(c, MultiPoly):
                    field = c.field
        return cls._raw(terms, vars, field)

    def to_unipoly(self, var=None):
        """Univariate view; all other variables must be absent."""
        if var is None:
            used = self.used_vars()
            var = used[0] if used else (self.vars[-1] if self.vars else "x")
        k = self.vars.index(var) if var in self.vars else None
        coeffs = {}
        for exp, c in self.terms.items():
            if any(e for j, e in enumerate(exp) if j != k):
                raise ArityMismatch(f"polynomial depends on variables other than {var}")
            coeffs[exp[k] if k is not None else 0] = c
        n = max(coeffs, default=-1)
        return UniPoly._raw(
            [coeffs.get(i, self.field.zero) for i in range(n + 1)], self.field, var
        )

    def evaluate(self, assignment):
        """Substitute scalars for some variables; returns a MultiPoly in the rest."""
        keep = [k for k, v in enumerate(self.vars) if v not in assignment]
        vals = {self.vars.index(v): self.field(x) for v, x in assignment.items() if v in self.vars}
        terms = {}
        for exp, c in self.terms.items():
            for k, x in vals.items():
                if exp[k]:
                    c = c * x ** exp[k]
            if not c:
                continue
            e = tuple(exp[k] for k in keep)
            terms[e] = terms[e] + c if e in terms else c
        terms = {e: c for e, c in terms.items() if c}
        return MultiPoly._raw(terms, tuple(self.vars[k] for k in keep), self.field)

    def __call__(self, **assignment):
        return self.evaluate(assignment)

    def substitute(self, mapping, new_vars):
        """Replace each variable by a MultiPoly over ``new_vars``.

        Variables absent from ``mapping`` are mapped to themselves (they must
        then occur in ``new_vars``).
        """
        new_vars = tuple(new_vars)
        images = []
        for v in self.vars:
            img = mapping.get(v)
            if img is None:
                img = MultiPoly.var(v, new_vars, self.field) if v in new_vars else None
            elif isinstance(img, MultiPoly):
                img = img.embed(new_vars)
            else:
                img = MultiPoly.const(img, new_vars, self.field)
            images.append(img)
        cache = {}

        def pw(k, e):
            if (k, e) not in cache:
                if images[k] is None:
                    raise ArityMismatch(f"no image for variable {self.vars[k]}")
                cache[(k, e)] = images[k] ** e
            return cache[(k, e)]

        result = MultiPoly.zero(new_vars, self.field)
        for exp, c in self.terms.items():
            term = MultiPoly.const(c, new_vars, self.field)
            for k, e in enumerate(exp):
                if e:
                    term = term * pw(k, e)
            result = result + term
        return result

    # -- printing ----------------------------------------------------------------
    def _print_key(self, exp):
        order = self._print_order()
        return tuple(-exp[k] for k in order[::-1] if self.vars[k] == "x") + tuple(
            -exp[k] for k in order if self.vars[k] != "x"
        )

    def _print_order(self):
        """Variables in monomial order: t's, then a's, then x."""
        def rank(v):
            return (0 if v.startswith("t") else 1 if v.startswith("a") else 2, v)

        return sorted(range(len(self.vars)), key=lambda k: rank(self.vars[k]))

    def __str__(self):
        order = self._print_order()
        items = sorted(self.terms.items(), key=lambda kv: self._print_key(kv[0]))
        return format_terms(
            [(c, tuple((self.vars[k], exp[k]) for k in order)) for exp, c in items]
        )

    def __repr__(self):
        return f"MultiPoly({self}, vars={self.vars}, {self.field!r})"


def is_integral(c):
    return not isinstance(c, Fraction) or c.denominator == 1
