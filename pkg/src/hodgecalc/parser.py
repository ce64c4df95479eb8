"""Parser for the polynomial expression grammar.

Grammar (shared by polynomials, operators, and b-function text):

    expr   := ['-'] term { ('+' | '-') term }
    term   := factor { '*' factor }
    factor := atom [ '^' INT ]
    atom   := NUMBER [ '/' NUMBER ] | IDENT | '(' expr ')' | '-' atom

Implicit multiplication is rejected; exponents are non-negative
integers; NUMBER '/' NUMBER is a rational literal, not division.

The parser is generic over an algebra: anything with const/var/add/
neg/mul/pow semantics (commutative polynomials and normally ordered
Weyl operators both qualify).
"""

from __future__ import annotations

from .polyring import PolyRing, Polynomial
from .rational import rat


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position
        self.text = text


_OPS = set("+-*^()/")


def _tokenize(text: str):
    tokens = []  # (kind, value, pos)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.algebra = algebra

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self):
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "END":
            self.error(f"unexpected {val!r}")
        return value

    def expr(self):
        a = self.algebra
        if self.peek()[0] == "-":
            self.next()
            value = a.neg(self.term())
        else:
            value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            value = a.add(value, a.neg(rhs) if op == "-" else rhs)
        return value

    def term(self):
        a = self.algebra
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.next()
                value = a.mul(value, self.factor())
            elif kind in ("IDENT", "NUM", "("):
                self.error("implicit multiplication is not allowed (use '*')")
            else:
                return value

    def factor(self):
        a = self.algebra
        value = self.atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.next()
            if tok[0] != "NUM":
                self.error("exponent must be a non-negative integer", tok)
            value = a.pow(value, int(tok[1]))
        return value

    def atom(self):
        a = self.algebra
        kind, val, pos = self.next()
        if kind == "NUM":
            if self.peek()[0] == "/":
                self.next()
                tok = self.next()
                if tok[0] != "NUM":
                    self.error("malformed rational literal", tok)
                return a.const(rat(int(val), int(tok[1])))
            return a.const(rat(int(val)))
        if kind == "IDENT":
            try:
                return a.var(val)
            except KeyError:
                raise ParseError(f"unknown variable {val!r}", pos, self.text)
        if kind == "(":
            value = self.expr()
            tok = self.next()
            if tok[0] != ")":
                self.error("expected ')'", tok)
            return value
        if kind == "-":
            return a.neg(self.atom())
        self.error(f"unexpected {val!r}" if val else "unexpected end of input",
                   (kind, val, pos))


class _PolyAlgebra:
    def __init__(self, ring: PolyRing):
        self.ring = ring

    def const(self, c):
        return self.ring.const(c)

    def var(self, name):
        if name not in self.ring.index:
            raise KeyError(name)
        return self.ring.var(name)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def pow(a, n):
        return a**n


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, _PolyAlgebra(ring)).parse()


def parse_with_algebra(text: str, algebra):
    return _Parser(text, algebra).parse()
