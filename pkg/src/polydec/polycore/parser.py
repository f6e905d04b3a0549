"""Recursive-descent parser for the ASCII polynomial language.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := coeff | var ('^' uint)? | '(' expr ')' ('^' uint)?
    coeff  := int ('/' uint)?
    var    := 'x' | 't' uint? | 'a' uint?

A leading sign is accepted so that printed polynomials with a negative
leading coefficient parse back.
"""

import re

from ..errors import PolySyntaxError, PreconditionError, UnknownVariable
from .fields import QQ
from .multivariate import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xta]\d*)|(.))")
VAR_RE = re.compile(r"^(x|t\d*|a\d*)$")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start, "operator, number or variable")
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars, field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = tuple(vars)
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, expected=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise PolySyntaxError(f"unexpected {tok[1] if tok[1] is not None else 'end of input'!r}", tok[2], expected or kind)
        self.i += 1
        return tok

    def parse(self):
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2], "'+', '-', '*' or end of input")
        return result

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-" and self.peek()[0] != "end":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self):
        if self.peek()[0] == "^":
            self.take()
            return self.take("int", "unsigned integer exponent")[1]
        return 1

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            num = val
            den = 1
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int", "unsigned integer denominator")[1]
                if den == 0:
                    raise PolySyntaxError("zero denominator", pos)
            try:
                c = self.field(num) / self.field(den) if den != 1 else self.field(num)
            except ZeroDivisionError:
                raise PreconditionError(f"{num}/{den} has no image in {self.field}") from None
            return MultiPoly.const(c, self.vars, self.field)
        if kind == "var":
            self.take()
            if val not in self.vars:
                raise UnknownVariable(f"unknown variable {val!r}", pos, f"one of {list(self.vars)}")
            base = MultiPoly.var(val, self.vars, self.field)
            return base ** self.exponent()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")", "')'")
            return inner ** self.exponent()
        shown = "end of input" if kind == "end" else repr(val)
        raise PolySyntaxError(f"unexpected {shown}", pos, "number, variable or '('")


def parse_poly(text: str, vars=("x",), field=QQ) -> MultiPoly:
    """Parse ``text`` into a canonical MultiPoly over ``vars``."""
    for v in vars:
        if not VAR_RE.match(v):
            raise PreconditionError(f"invalid variable name {v!r}")
    return _Parser(text, vars, field).parse()


def detect_vars(text: str) -> tuple:
    """Variables occurring in ``text``, ordered t's, a's, then x (x always present)."""
    names = set(m.group(0) for m in re.finditer(r"[xta]\d*", text))
    names.add("x")
    ts = sorted((v for v in names if v.startswith("t")), key=lambda v: (len(v), v))
    as_ = sorted((v for v in names if v.startswith("a")), key=lambda v: (len(v), v))
    return tuple(ts + as_ + ["x"])
