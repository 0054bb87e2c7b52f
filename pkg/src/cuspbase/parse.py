"""Parser for the small catalogue-expression grammar.

Atoms:  eta(m:r[,m:r]*)   E[w,N,s]   E4(d)  E6(d)  Ew2(N)
        wpa(a,b,N)        delta(N)   qser(v: c0,c1,...)
Operators: + - * ^ with the usual precedences, parentheses, rational
scalars p/q, and the postfix scaling f@d for f(d*tau).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExprSyntaxError, UnknownAtom
from .expr import Add, Const, Delta, Eis, Eta, Gen, Lit, Mul, Pow, Subst, W2, Wpa

_ATOM_NAMES = ("eta", "E4", "E6", "Ew2", "wpa", "delta", "qser")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    # -- lexical helpers --------------------------------------------------

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise ExprSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _int(self):
        self._skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ExprSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def _rational(self):
        num = self._int()
        if self.peek() == "/":
            self.pos += 1
            den = self._int()
            return Fraction(num, den)
        return Fraction(num)

    def _name(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos], start

    # -- grammar -----------------------------------------------------------

    def parse(self):
        node = self.expression()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ExprSyntaxError("unexpected trailing input", self.pos)
        return node

    def expression(self):
        terms = [self.term()]
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                terms.append(self.term())
            elif ch == "-":
                self.pos += 1
                terms.append(Mul((Const(Fraction(-1)), self.term())))
            else:
                break
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        if self.peek() == "-":
            self.pos += 1
            return Mul((Const(Fraction(-1)), self.factor()))
        node = self.primary()
        while True:
            ch = self.peek()
            if ch == "^":
                self.pos += 1
                n = self._int()
                if n < 0:
                    raise ExprSyntaxError("powers must be nonnegative", self.pos)
                node = Pow(node, n)
            elif ch == "@":
                self.pos += 1
                d = self._int()
                if d < 1:
                    raise ExprSyntaxError("scaling factor must be positive", self.pos)
                node = Subst(node, d)
            else:
                return node

    def primary(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expression()
            self.expect(")")
            return node
        if ch.isdigit():
            return Const(self._rational())
        if ch == "E" and self.pos + 1 < len(self.text) and self.text[self.pos + 1] == "[":
            self.pos += 2
            w = self._int()
            self.expect(",")
            n = self._int()
            self.expect(",")
            s = self._int()
            self.expect("]")
            return Gen(w, n, s)
        name, start = self._name()
        if not name:
            raise ExprSyntaxError("expected an atom, number or parenthesis", self.pos)
        if name not in _ATOM_NAMES:
            raise UnknownAtom(f"unknown atom {name!r} at position {start}")
        self.expect("(")
        node = self._atom_body(name, start)
        self.expect(")")
        return node

    def _atom_body(self, name, start):
        if name == "eta":
            pairs = []
            if self.peek() != ")":
                while True:
                    m = self._int()
                    self.expect(":")
                    r = self._int()
                    pairs.append((m, r))
                    if self.peek() != ",":
                        break
                    self.pos += 1
            scales = [m for m, _ in pairs]
            if len(set(scales)) != len(scales):
                raise ExprSyntaxError("duplicate eta scale", start)
            return Eta(tuple(pairs))
        if name in ("E4", "E6"):
            return Eis(int(name[1]), self._int())
        if name == "Ew2":
            return W2(self._int())
        if name == "wpa":
            a = self._int()
            self.expect(",")
            b = self._int()
            self.expect(",")
            n = self._int()
            return Wpa(a, b, n)
        if name == "delta":
            return Delta(self._int())
        if name == "qser":
            lead = self._int()
            self.expect(":")
            coeffs = [self._rational()]
            while self.peek() == ",":
                self.pos += 1
                coeffs.append(self._rational())
            return Lit(lead, tuple(coeffs))
        raise UnknownAtom(f"unknown atom {name!r} at position {start}")


def parse_expr(text):
    """Parse expression text into a form-expression tree."""
    return _Parser(text).parse()
