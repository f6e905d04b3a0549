"""Shared term formatting for univariate and multivariate polynomials."""

from fractions import Fraction


def _is_negative(c):
    return isinstance(c, (int, Fraction)) and c < 0


def format_monomial(powers):
    parts = []
    for var, e in powers:
        if e == 1:
            parts.append(var)
        elif e:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def format_terms(terms):
    """Render ``[(coeff, ((var, exp), ...)), ...]`` already in print order."""
    out = []
    for k, (c, powers) in enumerate(terms):
        neg = _is_negative(c)
        a = -c if neg else c
        mono = format_monomial(powers)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"
