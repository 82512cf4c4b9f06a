from __future__ import annotations

from typing import Optional, Sequence

from ..calculus import numeral, recognize_numeral
from ..config import DEFAULT_FUEL
from ..kernel.reduce import NormalForm, normalize
from ..kernel.terms import apply_spine
from ..prf.expr import PrfExpr
from ..types import Strategy, SystemTag
from .church import compile_to_f
from .compiled import CompiledFn
from .godel import compile_to_t


def compile_prf(f: PrfExpr, system: SystemTag) -> CompiledFn:
    return compile_to_f(f) if system is SystemTag.F else compile_to_t(f)


def apply_to_numerals(
    compiled: CompiledFn,
    args: Sequence[int],
    *,
    fuel: int = DEFAULT_FUEL,
    strategy: Strategy = Strategy.LEFTMOST_OUTERMOST,
) -> NormalForm:
    term = apply_spine(compiled.term, [numeral(a, compiled.system) for a in args])
    return normalize(term, compiled.system, fuel, strategy=strategy)


def run_compiled(compiled: CompiledFn, args: Sequence[int], *, fuel: int = DEFAULT_FUEL) -> Optional[int]:
    """Numeral value of the compiled term applied to ``args``, or None if the result is no numeral."""
    result = apply_to_numerals(compiled, args, fuel=fuel)
    return recognize_numeral(result.term, compiled.system)
