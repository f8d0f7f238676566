"""Text format for polynomials.

Grammar (whitespace insignificant, '*' always explicit, '^' binds tighter
than '*'):

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := 'x' | 'y' | 'z' | rational | '(' expr ')'
    rational := uint ('/' uint)?

A leading '-' is sugar for 0 - expr. '/' is only the rational-constant
separator; dividing non-constant terms is reported as a dedicated error.
render() is the canonical inverse: graded-lex descending term order,
reduced coefficients, explicit '*'. parse(render(p)) == p.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly


class ParseError(ValueError):
    """Syntax or semantic error, carrying the byte offset and the tokens
    that would have been accepted there."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str, note: str = ""):
        self.offset = offset
        self.expected = expected
        self.found = found
        self.note = note
        want = ", ".join(expected)
        msg = note if note else f"expected {want}, found {found}"
        super().__init__(f"offset {offset}: {msg}")


_NUM = "NUM"
_VAR = "VAR"
_EOF = "EOF"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_NUM, text[i:j], i))
            i = j
            continue
        if ch in "xyz":
            tokens.append((_VAR, ch, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(i, ("'x'", "'y'", "'z'", "integer", "operator"), repr(ch))
    tokens.append((_EOF, "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...], note: str = ""):
        kind, value, offset = self.peek()
        found = "end of input" if kind == _EOF else repr(value)
        raise ParseError(offset, expected, found, note)

    def expr(self) -> Poly:
        kind, _, _ = self.peek()
        if kind == "-":
            self.take()
            total = -self.term()
        else:
            total = self.term()
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.take()
                total = total + self.term()
            elif kind == "-":
                self.take()
                total = total - self.term()
            else:
                return total

    def term(self) -> Poly:
        total = self.factor()
        while True:
            kind, _, offset = self.peek()
            if kind == "*":
                self.take()
                total = total * self.factor()
            elif kind == "/":
                raise ParseError(offset, ("'+'", "'-'", "'*'"), "'/'",
                                 "division of non-constant terms (use rational coefficients like 1/2)")
            else:
                return total

    def factor(self) -> Poly:
        base = self.base()
        kind, _, _ = self.peek()
        if kind == "^":
            self.take()
            kind, value, offset = self.peek()
            if kind == "-":
                raise ParseError(offset, ("unsigned integer",), "'-'", "negative exponent")
            if kind != _NUM:
                self.fail(("unsigned integer exponent",))
            self.take()
            return base ** int(value)
        return base

    def base(self) -> Poly:
        kind, value, offset = self.peek()
        if kind == _VAR:
            self.take()
            return Poly.variable(value)
        if kind == _NUM:
            self.take()
            num = int(value)
            kind, value, offset = self.peek()
            if kind == "/":
                self.take()
                kind, value, offset = self.peek()
                if kind != _NUM:
                    self.fail(("unsigned integer denominator",))
                self.take()
                den = int(value)
                if den == 0:
                    raise ParseError(offset, ("nonzero denominator",), value, "zero denominator")
                return Poly.constant(Fraction(num, den))
            return Poly.constant(num)
        if kind == "(":
            self.take()
            inner = self.expr()
            kind, _, _ = self.peek()
            if kind != ")":
                self.fail(("')'",))
            self.take()
            return inner
        self.fail(("'x'", "'y'", "'z'", "integer", "'('", "'-'"))


def parse(text: str) -> Poly:
    """Parse the expression grammar into a canonical Poly."""
    p = _Parser(text)
    result = p.expr()
    kind, _, _ = p.peek()
    if kind != _EOF:
        p.fail(("'+'", "'-'", "'*'", "end of input"))
    return result


def render(p: Poly) -> str:
    """Canonical text form; deterministic and injective on canonical polys."""
    return str(p)
