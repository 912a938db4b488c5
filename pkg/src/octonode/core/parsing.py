"""Text form of polynomials.

Grammar (whitespace insignificant)::

    poly    := ['+'|'-'] term (('+'|'-') term)*
    term    := coeff ('*' varpow)* | varpow ('*' varpow)*
    varpow  := ident ('^' uint)?
    coeff   := int ('/' uint)?

A leading sign is accepted so that every polynomial, including one whose
leading coefficient is negative, has a text form that parses back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .monomial import MonomialOrder
from .polynomial import Polynomial, Ring

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.index = {v: k for k, v in enumerate(ring.variables)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", position=t[2])
        return t

    def poly(self) -> Polynomial:
        terms: dict = {}
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        while True:
            mono, coeff = self.term()
            terms[mono] = terms.get(mono, 0) + sign * coeff
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] == "op" and t[1] in "+-":
                self.take()
                sign = -1 if t[1] == "-" else 1
                continue
            raise ParseError(f"expected '+', '-' or end, got {t[1]!r}", position=t[2])
        F = self.ring.field
        out = {}
        for m, c in terms.items():
            try:
                out[m] = F(c)
            except ZeroDivisionError:
                raise ParseError(f"coefficient {c} is not representable in {F}") from None
        return Polynomial(self.ring, out)

    def term(self):
        n = self.ring.nvars
        exp = [0] * n
        coeff: Fraction | int = 1
        t = self.peek()
        if t[0] == "int":
            self.take()
            num = int(t[1])
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                d = self.expect("int")
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", position=d[2])
                coeff = Fraction(num, int(d[1]))
            else:
                coeff = num
            if not (self.peek()[0] == "op" and self.peek()[1] == "*"):
                return tuple(exp), coeff
            self.take()
            self.varpow(exp)
        elif t[0] == "ident":
            self.varpow(exp)
        else:
            raise ParseError(f"expected a term, got {t[1] or 'end of input'!r}", position=t[2])
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            self.varpow(exp)
        return tuple(exp), coeff

    def varpow(self, exp):
        t = self.expect("ident")
        if t[1] not in self.index:
            raise ParseError(f"unknown variable {t[1]!r}", position=t[2])
        k = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            k = int(self.expect("int")[1])
        exp[self.index[t[1]]] += k


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(text, ring).poly()


def _format_coeff(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text: terms sorted by ``order`` (grevlex by default)."""
    if not f.terms:
        return "0"
    order = order or MonomialOrder.grevlex()
    names = f.ring.variables
    F = f.field
    parts = []
    for k, (m, c) in enumerate(f.sorted_terms(order)):
        c = F.to_signed(c)
        neg = c < 0
        a = -c if neg else c
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        if not factors:
            body = _format_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(a) + "*" + "*".join(factors)
        if k == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
