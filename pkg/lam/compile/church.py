"""Compilation of primitive recursive functions into System F.

Church numerals only iterate, so primitive recursion walks a pair
``(k, h(x..., k))`` from ``(0, base(x...))`` and keeps the second half.
"""

from __future__ import annotations

from functools import lru_cache

from ..kernel.parser import parse_term
from ..kernel.terms import NAT_F, App, Lam, Term, Var, apply_spine
from ..prf.expr import Comp, Named, PrfExpr, PrimRec, Proj, Succ, Zero
from ..systemf.numerals import SUCC_F, church
from ..types import SystemTag
from .compiled import CompiledFn, argument_vars, function_type

PAIR_TYPE_SOURCE = "Pi C:Prop. (Nat -> Nat -> C) -> C"

PAIR_TYPE: Term = parse_term(PAIR_TYPE_SOURCE, SystemTag.F)
PAIR: Term = parse_term("fun a:Nat. fun b:Nat. fun C:Prop. fun k:Nat -> Nat -> C. k a b", SystemTag.F)
SECOND: Term = parse_term(f"fun p:({PAIR_TYPE_SOURCE}). p Nat (fun a:Nat. fun b:Nat. b)", SystemTag.F)


def _abstract(names: list[str], body: Term) -> Term:
    for name in reversed(names):
        body = Lam(name, NAT_F, body)
    return body


def _arg_names(n: int) -> list[str]:
    return [f"x{j}" for j in range(1, n + 1)]


@lru_cache(maxsize=None)
def _compile(f: PrfExpr) -> Term:
    if isinstance(f, Named):
        return _compile(f.body)
    if isinstance(f, Zero):
        return church(0)
    if isinstance(f, Succ):
        return SUCC_F
    if isinstance(f, Proj):
        return _abstract(_arg_names(f.n), Var(f.n - f.index, f"x{f.index}"))
    if isinstance(f, Comp):
        n = f.arity
        outer = _compile(f.outer)
        inner_apps = [apply_spine(_compile(g), argument_vars(n)) for g in f.inners]
        return _abstract(_arg_names(n), apply_spine(outer, inner_apps))
    if isinstance(f, PrimRec):
        n = f.base.arity
        base = _compile(f.base)
        step = _compile(f.step)
        start = apply_spine(PAIR, [church(0), apply_spine(base, argument_vars(n, 1))])
        # the accumulator pair is opened once per iteration
        k, r = Var(1, "k"), Var(0, "r")
        successor = apply_spine(PAIR, [App(SUCC_F, k), apply_spine(step, [*argument_vars(n, 4), k, r])])
        advance = Lam(
            "p",
            PAIR_TYPE,
            apply_spine(Var(0, "p"), [PAIR_TYPE, Lam("k", NAT_F, Lam("r", NAT_F, successor))]),
        )
        body = App(SECOND, apply_spine(Var(0, "y"), [PAIR_TYPE, start, advance]))
        return _abstract([*_arg_names(n), "y"], body)
    raise TypeError(f"not a primitive recursive expression: {f!r}")


def compile_to_f(f: PrfExpr) -> CompiledFn:
    return CompiledFn(f, SystemTag.F, _compile(f), function_type(f.arity, SystemTag.F))
