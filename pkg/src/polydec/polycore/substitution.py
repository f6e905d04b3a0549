"""The shifts t_i -> t_i + a_i * x, symbolic and specialized."""

from ..errors import ArityMismatch
from .multivariate import MultiPoly
from .univariate import UniPoly


def t_vars(f: MultiPoly):
    """Parameter variables of f (everything except x); all must be t-names."""
    if "x" not in f.vars:
        raise ArityMismatch(f"variable x missing from {f.vars}")
    ts = [v for v in f.vars if v != "x"]
    bad = [v for v in ts if not v.startswith("t") and v in f.used_vars()]
    if bad:
        raise ArityMismatch(f"unexpected variables {bad}; expected t-variables and x")
    return [v for v in ts if v.startswith("t")]


def alpha_name(tname):
    return "a" + tname[1:]


def _as_tuple(v, r):
    if isinstance(v, (list, tuple)):
        if len(v) != r:
            raise ArityMismatch(f"expected {r} values, got {len(v)}")
        return tuple(v)
    if r != 1:
        raise ArityMismatch(f"expected {r} values, got a scalar")
    return (v,)


def substitute_linear(f: MultiPoly, t_star, alpha_star) -> UniPoly:
    """f(t_1* + a_1* x, ..., t_r* + a_r* x, x) as a univariate polynomial."""
    ts = t_vars(f)
    r = len(ts)
    t_star = _as_tuple(t_star, r)
    alpha_star = _as_tuple(alpha_star, r)
    F = f.field
    x = UniPoly.x(F)
    images = {t: F(ts_) + F(al) * x for t, ts_, al in zip(ts, t_star, alpha_star)}
    kx = f.vars.index("x")
    result = UniPoly._raw([], F)
    cache = {}
    for exp, c in f.terms.items():
        term = UniPoly._raw([c], F)
        for k, e in enumerate(exp):
            if not e:
                continue
            if k == kx:
                term = term * UniPoly.monomial(F.one, e, F)
            else:
                key = (k, e)
                if key not in cache:
                    cache[key] = images[f.vars[k]] ** e
                term = term * cache[key]
        result = result + term
    return result


def generic_shift(f: MultiPoly) -> MultiPoly:
    """f(t_1 + a_1 x, ..., t_r + a_r x, x) over the variables (a..., t..., x)."""
    ts = t_vars(f)
    new_vars = tuple(alpha_name(t) for t in ts) + tuple(ts) + ("x",)
    F = f.field
    x = MultiPoly.var("x", new_vars, F)
    mapping = {
        t: MultiPoly.var(t, new_vars, F) + MultiPoly.var(alpha_name(t), new_vars, F) * x
        for t in ts
    }
    return f.substitute(mapping, new_vars)
