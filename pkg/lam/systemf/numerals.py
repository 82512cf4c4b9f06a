from __future__ import annotations

from typing import Optional

from ..config import DEFAULT_FUEL
from ..errors import IllTypedError, PreconditionError, WrongCalculusError
from ..kernel.parser import parse_term
from ..kernel.reduce import normalize
from ..kernel.terms import NAT_F, PROP, App, Context, Lam, Pi, Term, Var, apply_spine, shift
from ..types import SystemTag
from .check import typecheck_f

SUCC_F: Term = parse_term("fun n:Nat. fun P:Prop. fun x:P. fun f:P -> P. f (n P x f)", SystemTag.F)
IDENTITY_NAT_F: Term = Lam("y", NAT_F, Var(0, "y"))


def church(n: int) -> Term:
    """The Church numeral ``fun P:Prop. fun x:P. fun f:P -> P. f (... (f x))``."""
    if n < 0:
        raise ValueError(f"church numerals are natural numbers, got {n}")
    body: Term = Var(1, "x")
    for _ in range(n):
        body = App(Var(0, "f"), body)
    return Lam("P", PROP, Lam("x", Var(0, "P"), Lam("f", Pi("_", Var(1, "P"), Var(2, "P")), body)))


def probe_f(t: Term) -> Term:
    return apply_spine(t, [NAT_F, church(0), IDENTITY_NAT_F])


def fair_probe_f() -> Term:
    return Lam("x", NAT_F, probe_f(Var(0, "x")))


def recognize_numeral_f(g: Context, t: Term, *, fuel: int = DEFAULT_FUEL) -> Optional[int]:
    """Return n when the normal term ``t : Nat`` is the n-th Church numeral, else None."""
    try:
        ty = typecheck_f(g, t, fuel=fuel)
    except (IllTypedError, WrongCalculusError) as exc:
        raise PreconditionError(f"term is not well-typed: {exc}") from exc
    if ty != NAT_F:
        raise PreconditionError("term does not have type Nat")
    if normalize(t, SystemTag.F, fuel).steps != 0:
        raise PreconditionError("term is not in normal form")

    # extend g with [P:Prop; x:P; f:P -> P]
    applied = apply_spine(shift(t, 3), [Var(2, "P"), Var(1, "x"), Var(0, "f")])
    body = normalize(applied, SystemTag.F, fuel).term
    count = 0
    while isinstance(body, App) and body.fn == Var(0):
        count += 1
        body = body.arg
    if body == Var(1):
        return count
    return None
