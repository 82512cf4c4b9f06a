from __future__ import annotations

from dataclasses import dataclass

from ..kernel.terms import Term, Var, arrows, nat_type
from ..prf.expr import PrfExpr
from ..types import SystemTag


@dataclass(frozen=True)
class CompiledFn:
    source: PrfExpr
    system: SystemTag
    term: Term
    type: Term


def function_type(arity: int, system: SystemTag) -> Term:
    nat = nat_type(system)
    return arrows([nat] * arity, nat)


def argument_vars(n: int, offset: int = 0) -> list[Term]:
    """x_1 .. x_n as seen under ``offset`` extra binders after the n argument binders."""
    return [Var(n - j + offset, f"x{j}") for j in range(1, n + 1)]
