"""Reading and writing polynomials in a small Magma-like text syntax.

Grammar (whitespace-insensitive, ``**`` accepted for ``^``)::

    ideal      := wrapper? expression ((',' | newline) expression)*
    expression := term (('+' | '-') term)*
    term       := factor ('*' factor)*
    factor     := ('+' | '-') factor | primary ('^' integer)?
    primary    := rational | variable | '(' expression ')'
    rational   := integer ('/' integer)?

``wrapper`` is one of ``[ ... ]``, ``Ideal([ ... ])`` or ``( ... )`` around a
comma-separated list.  Juxtaposition is not multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import GREVLEX, Polynomial, RingContext


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, index: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.index = index
        where = f"line {line}, column {column}"
        if index is not None:
            where = f"element {index}, {where}"
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, NAME, OP, NL, EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"(?P<NUM>\d+)|(?P<NAME>[A-Za-z][A-Za-z0-9_]*)|(?P<OP>\*\*|[-+*/^(),\[\]])|(?P<NL>\n)|(?P<WS>[ \t\r]+)"
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "NL":
            tokens.append(Token("NL", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind != "WS":
            tok = m.group()
            tokens.append(Token(kind, "^" if tok == "**" else tok, line, col))
        pos = m.end()
    tokens.append(Token("EOF", "", line, len(text) - line_start + 1))
    return tokens


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.text)


class _Parser:
    def __init__(self, tokens: list[Token], ctx: RingContext):
        # newlines are insignificant inside a single expression
        self.toks = [t for t in tokens if t.kind != "NL"]
        self.pos = 0
        self.ctx = ctx

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.column)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "OP" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            self.error(f"expected {text!r}, found {_describe(self.tok)}")

    def expression(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.accept("*"):
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        base = self.primary()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "NUM":
                self.error("exponent must be a positive integer")
            n = int(tok.text)
            if n < 1:
                self.error("exponent must be a positive integer", tok)
            self.pos += 1
            base = base**n
        return base

    def primary(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "NUM":
            self.pos += 1
            value = Fraction(int(tok.text))
            if self.accept("/"):
                den = self.tok
                if den.kind != "NUM" or int(den.text) == 0:
                    self.error("denominator must be a positive integer")
                self.pos += 1
                value = value / int(den.text)
            return self.ctx.const(value)
        if tok.kind == "NAME":
            if tok.text not in self.ctx:
                self.error(f"unknown variable {tok.text!r}")
            self.pos += 1
            return self.ctx.var(tok.text)
        if self.accept("("):
            inner = self.expression()
            self.expect(")")
            return inner
        self.error(f"unexpected {_describe(tok)}")


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    """Parse one polynomial expression over ``ctx``."""
    p = _Parser(tokenize(text), ctx)
    result = p.expression()
    if p.tok.kind != "EOF":
        p.error(f"unexpected {p.tok.text!r}")
    return result


def _strip_wrapper(tokens: list[Token]) -> list[Token]:
    sig = [i for i, t in enumerate(tokens) if t.kind not in ("NL", "EOF")]
    if len(sig) < 2:
        return tokens
    first, last = sig[0], sig[-1]
    t0 = tokens[first]
    if t0.kind == "NAME" and t0.text == "Ideal" and len(sig) >= 4:
        t1 = tokens[sig[1]]
        if t1.text == "(" and tokens[last].text == ")":
            inner = tokens[sig[1] + 1 : last]
            return _strip_wrapper(inner + [tokens[-1]])
    pairs = {"[": "]", "(": ")"}
    if t0.text in pairs and tokens[last].text == pairs[t0.text]:
        # the opener must close at the very end, and for '(' the list must have a top-level comma
        depth, has_comma = 0, False
        for i in range(first, last + 1):
            t = tokens[i]
            if t.text in ("(", "["):
                depth += 1
            elif t.text in (")", "]"):
                depth -= 1
                if depth == 0 and i != last:
                    return tokens
            elif t.text == "," and depth == 1:
                has_comma = True
        if t0.text == "[" or has_comma:
            return tokens[first + 1 : last] + [tokens[-1]]
    return tokens


def parse_ideal(text: str, ctx: RingContext) -> list[Polynomial]:
    """Parse a comma- or newline-separated list of polynomials (source order kept)."""
    tokens = _strip_wrapper(tokenize(text))
    # split at top-level commas; a newline separates only after a complete operand
    groups: list[list[Token]] = [[]]
    seps: list[Token] = []
    depth = 0
    prev: Token | None = None
    for t in tokens:
        if t.kind == "EOF":
            break
        if t.text in ("(", "["):
            depth += 1
        elif t.text in (")", "]"):
            depth -= 1
        if depth == 0 and t.text == ",":
            groups.append([])
            seps.append(t)
        elif t.kind == "NL":
            if depth == 0 and prev is not None and (prev.kind in ("NUM", "NAME") or prev.text == ")"):
                groups.append([])
                seps.append(t)
        else:
            groups[-1].append(t)
        if t.kind != "NL":
            prev = t
    if len(groups) == 1 and not groups[0]:
        return []
    result = []
    for index, group in enumerate(groups, start=1):
        if not group:
            if seps and seps[-1].kind == "NL" and index == len(groups):
                continue  # trailing newline
            at = seps[index - 1] if index - 1 < len(seps) else seps[-1]
            raise ParseError("empty ideal element", at.line, at.column, index=index)
        last = group[-1]
        end = Token("EOF", "", last.line, last.column + len(last.text))
        p = _Parser(group + [end], ctx)
        try:
            poly = p.expression()
            if p.tok.kind != "EOF":
                p.error(f"unexpected {p.tok.text!r}")
        except ParseError as exc:
            raise ParseError(exc.message, exc.line, exc.column, index=index) from None
        result.append(poly)
    return result


def _format_coeff_term(c: Fraction, mono: str, leading: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if mono:
        body = mono if a == 1 else f"{a}*{mono}"
    else:
        body = str(a)
    if leading:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


def serialize(p: Polynomial) -> str:
    """Canonical text: descending grevlex, explicit ``*`` and ``^``."""
    if p.is_zero():
        return "0"
    names = p.ctx.variables
    out = []
    for i, (e, c) in enumerate(p.sorted_terms(GREVLEX)):
        parts = []
        for name, k in zip(names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        out.append(_format_coeff_term(c, "*".join(parts), i == 0))
    return "".join(out)


def serialize_ideal(gens: list[Polynomial], sep: str = ", ") -> str:
    return sep.join(serialize(g) for g in gens)
