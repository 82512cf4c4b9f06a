from __future__ import annotations

import re

from ..errors import ArityError, LamParseError
from .expr import Comp, Named, PrfExpr, PrimRec, Proj, Succ, Zero
from .stdlib import const, lookup

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<int>[0-9]+)
  | (?P<punct>[()\[\];,/])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class _PrfParser:
    def __init__(self, text: str):
        self._tokens: list[tuple[str, str, int, int]] = []
        pos, line, line_start = 0, 1, 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                raise LamParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
            kind = match.lastgroup or ""
            if kind != "ws":
                self._tokens.append((kind, match.group(), line, pos - line_start + 1))
            else:
                newlines = match.group().count("\n")
                if newlines:
                    line += newlines
                    line_start = pos + match.group().rfind("\n") + 1
            pos = match.end()
        self._tokens.append(("eof", "", line, pos - line_start + 1))
        self._pos = 0

    def _peek(self) -> tuple[str, str, int, int]:
        return self._tokens[self._pos]

    def _next(self) -> tuple[str, str, int, int]:
        tok = self._tokens[self._pos]
        if tok[0] != "eof":
            self._pos += 1
        return tok

    def _error(self, message: str, tok: tuple[str, str, int, int]) -> LamParseError:
        return LamParseError(message, tok[2], tok[3])

    def _expect(self, text: str) -> None:
        tok = self._next()
        if tok[1] != text:
            raise self._error(f"expected {text!r}, found {tok[1] or 'end of input'!r}", tok)

    def _int(self) -> int:
        tok = self._next()
        if tok[0] != "int":
            raise self._error(f"expected a number, found {tok[1] or 'end of input'!r}", tok)
        return int(tok[1])

    def expect_eof(self) -> None:
        tok = self._peek()
        if tok[0] != "eof":
            raise self._error(f"unexpected {tok[1]!r} after end of expression", tok)

    def expr(self) -> PrfExpr:
        tok = self._next()
        if tok[0] != "ident":
            raise self._error(f"expected a function, found {tok[1] or 'end of input'!r}", tok)
        word = tok[1]
        try:
            return self._construct(word, tok)
        except ArityError as exc:
            raise self._error(str(exc), tok) from exc

    def _construct(self, word: str, tok: tuple[str, str, int, int]) -> PrfExpr:
        if word == "Z":
            return Zero()
        if word == "S":
            return Succ()
        if word in ("proj", "const"):
            self._expect("[")
            first = self._int()
            self._expect("/")
            second = self._int()
            self._expect("]")
            return Proj(first, second) if word == "proj" else const(first, second)
        if word == "comp":
            arity = None
            if self._peek()[1] == "[":
                self._next()
                arity = self._int()
                self._expect("]")
            self._expect("(")
            outer = self.expr()
            self._expect(";")
            inners: list[PrfExpr] = []
            if self._peek()[1] != ")":
                inners.append(self.expr())
                while self._peek()[1] == ",":
                    self._next()
                    inners.append(self.expr())
            self._expect(")")
            return Comp(outer, tuple(inners), arity)
        if word == "rec":
            self._expect("(")
            base = self.expr()
            self._expect(",")
            step = self.expr()
            self._expect(")")
            return PrimRec(base, step)
        try:
            return lookup(word)
        except KeyError:
            raise self._error(f"unknown function {word!r}", tok) from None


def parse_prf(text: str) -> PrfExpr:
    parser = _PrfParser(text)
    expr = parser.expr()
    parser.expect_eof()
    return expr


def format_prf(f: PrfExpr) -> str:
    if isinstance(f, Named):
        return f.name
    if isinstance(f, Zero):
        return "Z"
    if isinstance(f, Succ):
        return "S"
    if isinstance(f, Proj):
        return f"proj[{f.index}/{f.n}]"
    if isinstance(f, Comp):
        inners = ", ".join(format_prf(g) for g in f.inners)
        if not f.inners:
            return f"comp[{f.arity}]({format_prf(f.outer)};)"
        return f"comp({format_prf(f.outer)}; {inners})"
    if isinstance(f, PrimRec):
        return f"rec({format_prf(f.base)}, {format_prf(f.step)})"
    raise TypeError(f"not a primitive recursive expression: {f!r}")
