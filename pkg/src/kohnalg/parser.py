"""Parser for polynomial expressions in z1..zn, zbar1..zbarn.

Grammar (precedence low to high: +/- binary, unary -, *, ^):

    expr    := term (('+'|'-') term)*
    term    := '-' term | product
    product := factor ('*' factor)*
    factor  := atom ('^' INTEGER)*
    atom    := NUMBER | 'i' | variable | function '(' expr ')' | '(' expr ')'

NUMBER is an integer or fraction literal with optional imaginary suffix
(3, 3/2, i, 2i, 3/2i).  Variables are z<k> and zbar<k> with 1 <= k <= n.
Functions Re, Im, abs2 and conj are expanded into ring operations, so the
result is always a plain polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import GaussianRational, Poly

_FUNCTIONS = ("Re", "Im", "abs2", "conj")


class ParseError(ValueError):
    """Syntax or scope error, carrying a 1-based source position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str          # NUM, IDENT, OP, END
    text: str
    value: GaussianRational | None
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = 1
    col = 1
    length = len(text)
    while i < length:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_line, start_col = line, col
        if ch.isdigit():
            j = i
            while j < length and text[j].isdigit():
                j += 1
            num = Fraction(text[i:j])
            if j < length and text[j] == "/":
                k = j + 1
                while k < length and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise ParseError("malformed fraction literal", start_line, start_col)
                den = int(text[j + 1:k])
                if den == 0:
                    raise ParseError("zero denominator in literal", start_line, start_col)
                num = num / den
                j = k
            imag = False
            if j < length and text[j] == "i" and (j + 1 == length or not text[j + 1].isalnum()):
                imag = True
                j += 1
            value = GaussianRational(0, num) if imag else GaussianRational(num)
            tokens.append(_Token("NUM", text[i:j], value, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < length and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], None, start_line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token("OP", ch, None, start_line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", start_line, start_col)
    tokens.append(_Token("END", "", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], n: int) -> None:
        self.tokens = tokens
        self.pos = 0
        self.n = n

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == op:
            return self.advance()
        if tok.kind == "END":
            raise ParseError("unexpected end of input", tok.line, tok.column)
        raise ParseError(f"expected {op!r}", tok.line, tok.column)

    # expr := term (('+'|'-') term)*
    def expr(self) -> Poly:
        acc = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                acc = acc + rhs if tok.text == "+" else acc - rhs
            else:
                return acc

    # term := '-' term | product
    def term(self) -> Poly:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return -self.term()
        return self.product()

    # product := factor ('*' factor)*
    def product(self) -> Poly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    # factor := atom ('^' INTEGER)*
    def factor(self) -> Poly:
        acc = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.text == "^":
                self.advance()
                exp = self.peek()
                if exp.kind != "NUM" or exp.value is None or exp.value.im \
                        or exp.value.re.denominator != 1:
                    raise ParseError("expected integer exponent", exp.line, exp.column)
                self.advance()
                acc = acc ** int(exp.value.re)
            else:
                return acc

    def atom(self) -> Poly:
        tok = self.peek()
        if tok.kind == "NUM":
            self.advance()
            return Poly.constant(self.n, tok.value)
        if tok.kind == "IDENT":
            return self.ident()
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "END":
            raise ParseError("unexpected end of input", tok.line, tok.column)
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.column)

    def ident(self) -> Poly:
        tok = self.advance()
        name = tok.text
        if name == "i":
            return Poly.constant(self.n, GaussianRational(0, 1))
        if name in _FUNCTIONS:
            self.expect_op("(")
            inner = self.expr()
            self.expect_op(")")
            return _apply_function(name, inner)
        for prefix, maker in (("zbar", Poly.zbar), ("z", Poly.z)):
            if name.startswith(prefix) and name[len(prefix):].isdigit():
                index = int(name[len(prefix):])
                if index < 1:
                    raise ParseError("variable index must be at least 1",
                                     tok.line, tok.column)
                if index > self.n:
                    raise ParseError("index exceeds ambient dimension",
                                     tok.line, tok.column)
                return maker(self.n, index)
        raise ParseError(f"unknown identifier {name!r}", tok.line, tok.column)


def _apply_function(name: str, arg: Poly) -> Poly:
    if name == "conj":
        return arg.conjugate()
    if name == "abs2":
        return arg * arg.conjugate()
    if name == "Re":
        return (arg + arg.conjugate()) * Fraction(1, 2)
    # Im(w) = (w - conj(w)) / (2i)
    return (arg - arg.conjugate()) * GaussianRational(0, Fraction(-1, 2))


def parse_expression(text: str, n: int) -> Poly:
    """Parse an expression into a polynomial in ambient dimension n."""
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    parser = _Parser(_tokenize(text), n)
    result = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "END":
        raise ParseError(f"unexpected token {trailing.text!r}",
                         trailing.line, trailing.column)
    return result


def parse_scalar(text: str) -> GaussianRational:
    """Parse a constant expression such as '1/2-3i'."""
    value = parse_expression(text, 1)
    if not value.is_constant():
        raise ParseError("expected a constant expression", 1, 1)
    return value.constant_value()
