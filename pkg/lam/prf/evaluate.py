from __future__ import annotations

from typing import Any, Callable, Mapping, Optional, Sequence

from ..errors import ArityError
from .expr import Comp, Named, PrfExpr, PrimRec, Proj, Succ, Zero
from .jets import JETS

NaturalVector = tuple[int, ...]


def _check_args(f: PrfExpr, args: Sequence[int]) -> NaturalVector:
    values = tuple(int(a) for a in args)
    if len(values) != f.arity:
        raise ArityError(f"function of arity {f.arity} applied to {len(values)} arguments")
    for value in values:
        if value < 0:
            raise ValueError(f"arguments must be natural numbers, got {value}")
    return values


class PrfEvaluator:
    """Exact evaluator; primitive recursion runs as a loop from 0 upwards."""

    def __init__(self, *, jets: bool = True, jet_table: Optional[Mapping[str, Callable[..., int]]] = None):
        self._jets: Mapping[str, Callable[..., int]] = (jet_table if jet_table is not None else JETS) if jets else {}

    def eval(self, f: PrfExpr, args: Sequence[int]) -> int:
        return self._eval(f, _check_args(f, args))

    def _eval(self, f: PrfExpr, args: NaturalVector) -> int:
        if isinstance(f, Zero):
            return 0
        if isinstance(f, Succ):
            return args[0] + 1
        if isinstance(f, Proj):
            return args[f.index - 1]
        if isinstance(f, Comp):
            values = tuple(self._eval(g, args) for g in f.inners)
            return self._eval(f.outer, values)
        if isinstance(f, PrimRec):
            params, bound = args[:-1], args[-1]
            acc = self._eval(f.base, params)
            for k in range(bound):
                acc = self._eval(f.step, (*params, k, acc))
            return acc
        if isinstance(f, Named):
            jet = self._jets.get(f.name)
            if jet is not None:
                return int(jet(*args))
            return self._eval(f.body, args)
        raise TypeError(f"not a primitive recursive expression: {f!r}")


def eval_prf(f: PrfExpr, args: Sequence[int], *, jets: bool = True) -> int:
    return PrfEvaluator(jets=jets).eval(f, args)


def reference_eval(f: PrfExpr, args: Sequence[int]) -> int:
    """Jet-free evaluation driven by an explicit task stack instead of recursion."""
    tasks: list[tuple[Any, ...]] = [("eval", f, _check_args(f, args))]
    values: list[int] = []
    while tasks:
        task = tasks.pop()
        kind = task[0]
        if kind == "eval":
            _, g, xs = task
            if isinstance(g, Named):
                tasks.append(("eval", g.body, xs))
            elif isinstance(g, Zero):
                values.append(0)
            elif isinstance(g, Succ):
                values.append(xs[0] + 1)
            elif isinstance(g, Proj):
                values.append(xs[g.index - 1])
            elif isinstance(g, Comp):
                tasks.append(("apply", g.outer, len(g.inners)))
                for inner in reversed(g.inners):
                    tasks.append(("eval", inner, xs))
            elif isinstance(g, PrimRec):
                params = xs[:-1]
                tasks.append(("rec", g, params, 0, xs[-1]))
                tasks.append(("eval", g.base, params))
            else:
                raise TypeError(f"not a primitive recursive expression: {g!r}")
        elif kind == "apply":
            _, outer, count = task
            if count:
                collected = tuple(values[-count:])
                del values[-count:]
            else:
                collected = ()
            tasks.append(("eval", outer, collected))
        else:
            _, g, params, k, bound = task
            if k == bound:
                continue
            acc = values.pop()
            tasks.append(("rec", g, params, k + 1, bound))
            tasks.append(("eval", g.step, (*params, k, acc)))
    return values.pop()
