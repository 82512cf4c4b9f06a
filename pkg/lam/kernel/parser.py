from __future__ import annotations

from dataclasses import dataclass
import re
from typing import Optional

from ..errors import LamParseError, UnboundIdentifierError, WrongCalculusError
from ..types import SystemTag
from .terms import NAT, NAT_F, PROP, SUCC, ZERO, App, Context, Lam, Pi, RecT, Term, Var

KEYWORDS = frozenset({"Prop", "Nat", "O", "S", "Rec", "fun", "Pi"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->|→)
  | (?P<punct>[()\[\]:.;])
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

# placeholder scope entry for the unused binder of an arrow; never matches an identifier
_ANON = ""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise LamParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup or ""
        text = match.group()
        if kind not in ("ws", "comment"):
            if kind == "ident" and text in KEYWORDS:
                kind = "keyword"
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rfind("\n") + 1
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str, system: SystemTag, scope: Optional[list[str]] = None):
        self._tokens = tokenize(source)
        self._pos = 0
        self._system = system
        self._scope: list[str] = list(scope or [])

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _next(self) -> Token:
        tok = self._tokens[self._pos]
        if tok.kind != "eof":
            self._pos += 1
        return tok

    def _error(self, message: str, tok: Optional[Token] = None) -> LamParseError:
        tok = tok or self._peek()
        return LamParseError(message, tok.line, tok.column)

    def _expect(self, text: str) -> Token:
        tok = self._peek()
        if tok.text != text or tok.kind in ("ident", "eof"):
            found = tok.text or "end of input"
            raise self._error(f"expected {text!r}, found {found!r}")
        return self._next()

    def expect_eof(self) -> None:
        tok = self._peek()
        if tok.kind != "eof":
            raise self._error(f"unexpected {tok.text!r} after end of term")

    def term(self) -> Term:
        tok = self._peek()
        if tok.kind == "keyword" and tok.text in ("fun", "Pi"):
            return self._binder()
        lhs = self._application()
        if self._peek().kind == "arrow":
            self._next()
            self._scope.append(_ANON)
            try:
                rhs = self.term()
            finally:
                self._scope.pop()
            return Pi("_", lhs, rhs)
        return lhs

    def _binder(self) -> Term:
        keyword = self._next()
        name_tok = self._next()
        if name_tok.kind != "ident":
            raise self._error(f"expected a binder name after {keyword.text!r}", name_tok)
        self._expect(":")
        annotation = self.term()
        self._expect(".")
        self._scope.append(name_tok.text)
        try:
            body = self.term()
        finally:
            self._scope.pop()
        if keyword.text == "fun":
            return Lam(name_tok.text, annotation, body)
        return Pi(name_tok.text, annotation, body)

    def _starts_atom(self, tok: Token) -> bool:
        if tok.kind == "ident":
            return True
        if tok.kind == "keyword":
            return tok.text not in ("fun", "Pi")
        return tok.kind == "punct" and tok.text == "("

    def _application(self) -> Term:
        head = self._atom()
        while True:
            tok = self._peek()
            if self._starts_atom(tok):
                head = App(head, self._atom())
            elif tok.kind == "keyword" and tok.text in ("fun", "Pi"):
                # a trailing binder extends as far right as possible
                return App(head, self._binder())
            else:
                return head

    def _atom(self) -> Term:
        tok = self._next()
        if tok.kind == "punct" and tok.text == "(":
            inner = self.term()
            self._expect(")")
            return inner
        if tok.kind == "keyword":
            return self._keyword(tok)
        if tok.kind == "ident":
            return self._resolve(tok)
        found = tok.text or "end of input"
        raise self._error(f"unexpected {found!r}", tok)

    def _keyword(self, tok: Token) -> Term:
        if tok.text == "Prop":
            if self._system is SystemTag.T:
                raise WrongCalculusError("Prop", self._system, tok.line, tok.column)
            return PROP
        if tok.text == "Nat":
            return NAT_F if self._system is SystemTag.F else NAT
        if self._system is SystemTag.F:
            raise WrongCalculusError(tok.text, self._system, tok.line, tok.column)
        if tok.text == "O":
            return ZERO
        if tok.text == "S":
            return SUCC
        if tok.text == "Rec":
            self._expect("[")
            ty = self.term()
            self._expect("]")
            return RecT(ty)
        raise self._error(f"unexpected keyword {tok.text!r}", tok)

    def _resolve(self, tok: Token) -> Term:
        for distance, name in enumerate(reversed(self._scope)):
            if name == tok.text:
                return Var(distance, tok.text)
        raise UnboundIdentifierError(tok.text, tok.line, tok.column)

    def context(self) -> Context:
        entries: list[tuple[str, Term]] = []
        if self._peek().kind == "eof":
            return Context((), self._system)
        self._expect("[")
        if self._peek().text == "]" and self._peek().kind == "punct":
            self._next()
            return Context((), self._system)
        while True:
            name_tok = self._next()
            if name_tok.kind != "ident":
                raise self._error("expected a declaration name", name_tok)
            self._expect(":")
            ty = self.term()
            entries.append((name_tok.text, ty))
            self._scope.append(name_tok.text)
            tok = self._next()
            if tok.kind == "punct" and tok.text == ";":
                continue
            if tok.kind == "punct" and tok.text == "]":
                break
            raise self._error("expected ';' or ']' in context", tok)
        return Context(tuple(entries), self._system)


def parse_term(source: str, system: SystemTag = SystemTag.F, context: Optional[Context] = None) -> Term:
    """Parse ``source`` into a nameless term.

    Free identifiers resolve against ``context`` (innermost declaration wins).
    """
    system = SystemTag.parse(system)
    parser = _Parser(source, system, context.names if context is not None else None)
    term = parser.term()
    parser.expect_eof()
    return term


def parse_context(source: str, system: SystemTag = SystemTag.F) -> Context:
    system = SystemTag.parse(system)
    parser = _Parser(source, system)
    ctx = parser.context()
    parser.expect_eof()
    return ctx
