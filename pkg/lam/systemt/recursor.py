from __future__ import annotations

from typing import Optional

from ..kernel.terms import SUCC, App, RecT, Term, ZeroT, apply_spine, spine


def is_constructor_form(t: Term) -> bool:
    return isinstance(t, ZeroT) or (isinstance(t, App) and t.fn == SUCC)


def contract_recursor(head: RecT, base: Term, step: Term, scrutinee: Term) -> Term:
    if isinstance(scrutinee, ZeroT):
        return base
    if isinstance(scrutinee, App) and scrutinee.fn == SUCC:
        pred = scrutinee.arg
        return apply_spine(step, [pred, apply_spine(head, [base, step, pred])])
    raise ValueError("recursor scrutinee is not O or an S-application")


def step_recursor(t: Term) -> Optional[Term]:
    """One recursor step at the root of ``Rec[T] a b n``, or None when stuck."""
    head, args = spine(t)
    if not isinstance(head, RecT) or len(args) != 3:
        return None
    base, step, scrutinee = args
    if not is_constructor_form(scrutinee):
        return None
    return contract_recursor(head, base, step, scrutinee)
