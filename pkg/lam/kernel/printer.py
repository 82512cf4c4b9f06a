from __future__ import annotations

import re
from typing import Sequence

from .parser import KEYWORDS
from .terms import NAT_F, App, Lam, NatT, Pi, RecT, Sort, SuccT, Term, Var, ZeroT, occurs_free

_TOP = 0
_FN = 1
_ARG = 2

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _fresh(hint: str, scope: Sequence[str]) -> str:
    base = hint if _IDENT_RE.match(hint or "") and hint not in KEYWORDS else "x"
    if base not in scope:
        return base
    counter = 1
    while f"{base}{counter}" in scope:
        counter += 1
    return f"{base}{counter}"


def _fresh_scope(names: Sequence[str]) -> list[str]:
    scope: list[str] = []
    for name in names:
        scope.append(_fresh(name, scope))
    return scope


def print_term(t: Term, names: Sequence[str] = ()) -> str:
    """Render ``t`` in the kernel grammar; ``names`` are the enclosing context, oldest first."""
    return _render(t, _fresh_scope(names), _TOP)


def _wrap(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def _render(t: Term, scope: list[str], level: int) -> str:
    if isinstance(t, Sort):
        return "Prop"
    if isinstance(t, NatT):
        return "Nat"
    if isinstance(t, ZeroT):
        return "O"
    if isinstance(t, SuccT):
        return "S"
    if isinstance(t, RecT):
        return f"Rec[{_render(t.ty, scope, _TOP)}]"
    if isinstance(t, Var):
        if t.index < len(scope):
            return scope[len(scope) - 1 - t.index]
        return f"#{t.index}"
    if isinstance(t, App):
        text = f"{_render(t.fn, scope, _FN)} {_render(t.arg, scope, _ARG)}"
        return _wrap(text, level >= _ARG)
    if isinstance(t, Pi) and t == NAT_F:
        return "Nat"
    if isinstance(t, Pi) and not occurs_free(t.cod, 0):
        text = f"{_render(t.dom, scope, _FN)} -> {_render(t.cod, scope + [''], _TOP)}"
        return _wrap(text, level > _TOP)
    if isinstance(t, (Lam, Pi)):
        name = _fresh(t.name, scope)
        keyword = "fun" if isinstance(t, Lam) else "Pi"
        ann = t.ty if isinstance(t, Lam) else t.dom
        body = t.body if isinstance(t, Lam) else t.cod
        text = f"{keyword} {name}:{_render(ann, scope, _TOP)}. {_render(body, scope + [name], _TOP)}"
        return _wrap(text, level > _TOP)
    raise TypeError(f"not a term: {t!r}")
