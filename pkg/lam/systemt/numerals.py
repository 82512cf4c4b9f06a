from __future__ import annotations

from typing import Optional

from ..kernel.terms import NAT, SUCC, ZERO, App, Lam, RecT, Term, Var, ZeroT, apply_spine

# fun y:Nat. fun z:Nat. z
KEEP_ACCUMULATOR: Term = Lam("y", NAT, Lam("z", NAT, Var(0, "z")))


def t_numeral(n: int) -> Term:
    if n < 0:
        raise ValueError(f"numerals are natural numbers, got {n}")
    term: Term = ZERO
    for _ in range(n):
        term = App(SUCC, term)
    return term


def recognize_numeral_t(t: Term) -> Optional[int]:
    count = 0
    while isinstance(t, App) and t.fn == SUCC:
        count += 1
        t = t.arg
    if isinstance(t, ZeroT):
        return count
    return None


def probe_t(t: Term) -> Term:
    return apply_spine(RecT(NAT), [ZERO, KEEP_ACCUMULATOR, t])


def fair_probe_t() -> Term:
    return Lam("x", NAT, probe_t(Var(0, "x")))
