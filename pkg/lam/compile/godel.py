"""Compilation of primitive recursive functions into System T.

``rec(base, step)`` becomes ``Rec[Nat] (base x...) (fun k r. step x... k r) y``.
"""

from __future__ import annotations

from functools import lru_cache

from ..kernel.terms import NAT, SUCC, ZERO, Lam, RecT, Term, Var, apply_spine
from ..prf.expr import Comp, Named, PrfExpr, PrimRec, Proj, Succ, Zero
from ..types import SystemTag
from .compiled import CompiledFn, argument_vars, function_type


def _abstract(names: list[str], body: Term) -> Term:
    for name in reversed(names):
        body = Lam(name, NAT, body)
    return body


def _arg_names(n: int) -> list[str]:
    return [f"x{j}" for j in range(1, n + 1)]


@lru_cache(maxsize=None)
def _compile(f: PrfExpr) -> Term:
    if isinstance(f, Named):
        return _compile(f.body)
    if isinstance(f, Zero):
        return ZERO
    if isinstance(f, Succ):
        return SUCC
    if isinstance(f, Proj):
        return _abstract(_arg_names(f.n), Var(f.n - f.index, f"x{f.index}"))
    if isinstance(f, Comp):
        n = f.arity
        inner_apps = [apply_spine(_compile(g), argument_vars(n)) for g in f.inners]
        return _abstract(_arg_names(n), apply_spine(_compile(f.outer), inner_apps))
    if isinstance(f, PrimRec):
        n = f.base.arity
        step = Lam(
            "k",
            NAT,
            Lam("r", NAT, apply_spine(_compile(f.step), [*argument_vars(n, 3), Var(1, "k"), Var(0, "r")])),
        )
        base = apply_spine(_compile(f.base), argument_vars(n, 1))
        body = apply_spine(RecT(NAT), [base, step, Var(0, "y")])
        return _abstract([*_arg_names(n), "y"], body)
    raise TypeError(f"not a primitive recursive expression: {f!r}")


def compile_to_t(f: PrfExpr) -> CompiledFn:
    return CompiledFn(f, SystemTag.T, _compile(f), function_type(f.arity, SystemTag.T))
