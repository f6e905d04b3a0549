"""Coefficient-list arithmetic over an arbitrary commutative ring.

Lists are low-to-high (``c[i]`` multiplies ``x**i``) and may carry trailing
zeros; :func:`trim` removes them. Elements only need ``+ - *``, ``**`` with a
nonnegative int, multiplication by ``int`` and truthiness (zero is falsy), so
the same helpers serve rationals, prime fields, multivariate polynomials and
the tame fractions used by the specialization code.
"""


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return c[:n] if n != len(c) else c


def degree(c):
    return len(trim(c)) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return trim(out)


def sub(a, b, zero):
    n = max(len(a), len(b))
    out = list(a) + [zero] * (n - len(a))
    for i, y in enumerate(b):
        out[i] = out[i] - y
    return trim(out)


def scale(a, s):
    return trim([s * x for x in a])


def mul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, e, zero, one):
    result = [one]
    base = a
    while e:
        if e & 1:
            result = mul(result, base, zero)
        e >>= 1
        if e:
            base = mul(base, base, zero)
    return result


def compose(u, g, zero, one):
    """Coefficients of u(g(x)) by Horner's rule."""
    out = []
    for c in reversed(u):
        out = add(mul(out, g, zero), [c]) if out else trim([c])
    return out


def divmod_monic(a, b, zero):
    """Quotient and remainder of a by a monic b (no field division needed)."""
    a = list(trim(a))
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if not c:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - c * b[j]
    return trim(q), trim(a[:db])


def pseudo_remainder(a, b, zero):
    """lc(b)^(deg a - deg b + 1) * a mod b, division-free."""
    a = list(trim(a))
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - c * b[j]
        a = trim(a)
        e -= 1
    if e > 0:
        f = lb**e
        a = [f * x for x in a]
    return trim(a)


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def evaluate(a, x, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * x + c
    return acc
