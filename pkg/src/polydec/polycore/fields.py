"""Exact coefficient fields: the rationals, prime fields and small Galois fields.

Rational numbers are plain :class:`fractions.Fraction` values. Prime field
elements are :class:`Mod` instances holding the canonical residue in
``[0, p)``. Elements of ``GF(p^k)`` are :class:`GFElem` instances holding an
integer code ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` for the class of
``c_0 + c_1 z + ... + c_{k-1} z^{k-1}`` modulo a fixed irreducible polynomial;
their arithmetic goes through Zech logarithm tables, which the oracle also
uses directly on the integer codes.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ..errors import FieldMismatch, NonPrimeModulus, PreconditionError
from ..ntheory import is_prime


class Rationals:
    characteristic = 0
    order = None
    is_finite = False
    spec = "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise FieldMismatch(f"cannot coerce {value!r} into Q")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (Rationals, ())


QQ = Rationals()


class Mod:
    """Residue class modulo a prime p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in GF({self.p})")
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            return Mod(pow(self.v, -1, self.p), self.p) ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    is_finite = True

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.degree = 1

    @property
    def spec(self):
        return f"fp:{self.p}"

    @property
    def zero(self):
        return Mod(0, self.p)

    @property
    def one(self):
        return Mod(1, self.p)

    def __call__(self, value):
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatch(f"GF({value.p}) element used in GF({self.p})")
            return value
        if isinstance(value, int):
            return Mod(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise PreconditionError(f"{value} has no image in GF({self.p})")
            return Mod(value.numerator * pow(value.denominator, -1, self.p), self.p)
        raise FieldMismatch(f"cannot coerce {value!r} into GF({self.p})")

    def elements(self):
        return (Mod(i, self.p) for i in range(self.p))

    # raw integer-code interface shared with GaloisField
    def code(self, element):
        return element.v

    def from_code(self, c):
        return Mod(c, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def __reduce__(self):
        return (PrimeField, (self.p,))


# Irreducible moduli for GF(p^k), low-to-high coefficients (monic).
IRREDUCIBLE_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
}


def _has_root_mod_p(coeffs, p):
    for a in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * a + c) % p
        if acc == 0:
            return True
    return False


def irreducible_modulus(p, k):
    """Monic irreducible polynomial of degree k <= 3 over GF(p).

    Taken from the hard-coded table when present, otherwise the first
    root-free monic polynomial in lexicographic order (for k <= 3,
    root-free is equivalent to irreducible).
    """
    if (p, k) in IRREDUCIBLE_TABLE:
        return IRREDUCIBLE_TABLE[(p, k)]
    if k > 3:
        raise PreconditionError("extension degree limited to k <= 3")
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        coeffs = tuple(low) + (1,)
        if coeffs[0] and not _has_root_mod_p(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


class GFElem:
    __slots__ = ("c", "F")

    def __init__(self, c, F):
        self.c = c
        self.F = F

    def _coerce(self, other):
        if isinstance(other, GFElem):
            if other.F is not self.F and other.F != self.F:
                raise FieldMismatch(f"{self.F} vs {other.F}")
            return other.c
        if isinstance(other, int):
            return other % self.F.p
        if isinstance(other, Mod) and other.p == self.F.p:
            return other.v
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.add(self.c, o), self.F)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.sub(self.c, o), self.F)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.sub(o, self.c), self.F)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.mul(self.c, o), self.F)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.mul(self.c, self.F.inv(o)), self.F)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElem(self.F.mul(o, self.F.inv(self.c)), self.F)

    def __neg__(self):
        return GFElem(self.F.neg(self.c), self.F)

    def __pow__(self, e):
        return GFElem(self.F.pow(self.c, e), self.F)

    def __bool__(self):
        return self.c != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"GFElem({self.c}, {self.F!r})"

    def __str__(self):
        return self.F.format_code(self.c)


class GaloisField:
    """GF(p^k) for k <= 3, elements encoded as integers in [0, p^k)."""

    is_finite = True

    def __init__(self, p, k, generator_name="z"):
        p, k = int(p), int(k)
        if not is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if not 1 <= k <= 3:
            raise PreconditionError("extension degree must satisfy 1 <= k <= 3")
        self.p = p
        self.degree = k
        self.characteristic = p
        self.order = p**k
        self.modulus = irreducible_modulus(p, k) if k > 1 else (0, 1)
        self.generator_name = generator_name
        self._build_tables()

    # -- table construction -------------------------------------------------
    def _digits(self, c):
        p = self.p
        return [(c // p**i) % p for i in range(self.degree)]

    def _undigits(self, ds):
        c = 0
        for d in reversed(ds):
            c = c * self.p + d
        return c

    def _slow_mul(self, a, b):
        p, k = self.p, self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self._undigits(prod[:k])

    def _build_tables(self):
        q = self.order
        n = q - 1
        for cand in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = cand
            while x != 1:
                exp.append(x)
                x = self._slow_mul(x, cand)
                if len(exp) > n:
                    break
            if len(exp) == n:
                break
        else:
            raise AssertionError("no primitive element")
        log = [None] * q
        for i, c in enumerate(exp):
            log[c] = i
        p = self.p
        zech = [None] * n
        for i, c in enumerate(exp):
            d0 = c % p
            one_plus = c - d0 + (d0 + 1) % p
            zech[i] = log[one_plus] if one_plus else None
        self._exp, self._log, self._zech = exp, log, zech
        self._half = n // 2 if p != 2 else 0

    # -- raw arithmetic on codes --------------------------------------------
    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        n = self.order - 1
        z = self._zech[(lb - la) % n]
        if z is None:
            return 0
        return self._exp[(la + z) % n]

    def neg(self, a):
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self._half) % (self.order - 1)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in " + repr(self))
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    # -- element interface ----------------------------------------------------
    @property
    def spec(self):
        return f"fq:{self.p}^{self.degree}"

    @property
    def zero(self):
        return GFElem(0, self)

    @property
    def one(self):
        return GFElem(1, self)

    @property
    def gen(self):
        """The class of z (not necessarily a multiplicative generator)."""
        return GFElem(self.p if self.degree > 1 else 0, self)

    def __call__(self, value):
        if isinstance(value, GFElem):
            if value.F != self:
                raise FieldMismatch(f"{value.F} element used in {self}")
            return value
        if isinstance(value, int):
            return GFElem(value % self.p, self)
        if isinstance(value, Mod) and value.p == self.p:
            return GFElem(value.v, self)
        if isinstance(value, Fraction):
            num, den = value.numerator % self.p, value.denominator % self.p
            if den == 0:
                raise PreconditionError(f"{value} has no image in {self}")
            return GFElem(self.mul(num, self.inv(den)), self)
        raise FieldMismatch(f"cannot coerce {value!r} into {self}")

    def elements(self):
        return (GFElem(c, self) for c in range(self.order))

    def code(self, element):
        return element.c

    def from_code(self, c):
        return GFElem(c, self)

    def from_digits(self, digits):
        """Element c_0 + c_1 z + ... from its coordinate list."""
        ds = [d % self.p for d in digits] + [0] * (self.degree - len(digits))
        return GFElem(self._undigits(ds[: self.degree]), self)

    def format_code(self, c):
        ds = self._digits(c)
        z = self.generator_name
        parts = []
        for i in range(len(ds) - 1, -1, -1):
            d = ds[i]
            if not d:
                continue
            mono = "" if i == 0 else (z if i == 1 else f"{z}^{i}")
            if not mono:
                parts.append(str(d))
            elif d == 1:
                parts.append(mono)
            else:
                parts.append(f"{d}*{mono}")
        if not parts:
            return "0"
        s = "+".join(parts)
        return s if len(parts) == 1 and "*" not in s else f"({s})"

    def __eq__(self, other):
        return (
            isinstance(other, GaloisField)
            and other.p == self.p
            and other.degree == self.degree
        )

    def __hash__(self):
        return hash(("GF", self.p, self.degree))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    def __reduce__(self):
        return (galois_field, (self.p, self.degree))


@lru_cache(maxsize=None)
def galois_field(p, k):
    """Cached GF(p^k) instance (table construction is not free)."""
    return GaloisField(p, k)


def field_from_spec(spec: str):
    """Parse ``q``, ``fp:<p>`` or ``fq:<p>^<k>``."""
    s = spec.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("fp:"):
        return PrimeField(int(s[3:]))
    if s.startswith("fq:"):
        body = s[3:]
        if "^" in body:
            p, k = body.split("^", 1)
        else:
            p, k = body, "1"
        k = int(k)
        if k == 1:
            return PrimeField(int(p))
        return galois_field(int(p), k)
    raise PreconditionError(f"unknown field specification {spec!r}")


def is_field(obj):
    return isinstance(obj, (Rationals, PrimeField, GaloisField))
