from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

from ..calculus import nat_type, numeral, probe, typecheck
from ..compile.represent import compile_prf
from ..config import DEFAULT_FUEL
from ..errors import ArityError, IllTypedError, PreconditionError
from ..kernel.parser import parse_context, parse_term
from ..kernel.printer import print_term
from ..kernel.reduce import normalize
from ..kernel.terms import App, Context, Term, Var, apply_spine, is_closed, substitute
from ..log.jsonl import JsonlLogger, log_event
from ..prf.expr import PrfExpr
from ..prf.text import format_prf, parse_prf
from ..types import Strategy, SystemTag

PAIR_SOURCE = "fun x:Nat. fun y:Nat. fun g:Nat -> Nat -> Nat. g x y"


def matching_pair(system: SystemTag) -> Term:
    return parse_term(PAIR_SOURCE, system)


@dataclass(frozen=True)
class MatchingProblem:
    """Find u with a[x := u] and b sharing a normal form."""

    system: SystemTag
    a: Term
    b: Term
    variable: str = "x"
    source: Optional[PrfExpr] = field(default=None, compare=False)

    @property
    def context(self) -> Context:
        return Context(((self.variable, nat_type(self.system)),), self.system)


@dataclass(frozen=True)
class Solution:
    context: Context
    witness: Term


def gen_matching(f: PrfExpr, system: SystemTag, *, logger: Optional[JsonlLogger] = None) -> MatchingProblem:
    system = SystemTag.parse(system)
    if f.arity != 1:
        raise ArityError(f"matching problems are generated from unary functions, got arity {f.arity}")
    compiled = compile_prf(f, system)
    pair = matching_pair(system)
    x = Var(0, "x")
    a = apply_spine(pair, [probe(x, system), App(compiled.term, x)])
    b = apply_spine(pair, [numeral(0, system), numeral(0, system)])
    problem = MatchingProblem(system, a, b, "x", f)
    log_event(
        logger,
        "problem_generated",
        system=system.value,
        reason="gen",
        data={"source": format_prf(f)},
    )
    return problem


def check_problem(p: MatchingProblem, *, fuel: int = DEFAULT_FUEL) -> None:
    if not is_closed(p.b):
        raise PreconditionError("right-hand side of a matching problem must be closed")
    if not is_closed(p.a, 1):
        raise PreconditionError(f"left-hand side may only mention the variable {p.variable!r}")
    typecheck(p.context, p.a, fuel=fuel)
    typecheck(Context((), p.system), p.b, fuel=fuel)


def verify_solution(
    p: MatchingProblem,
    g: Context,
    u: Term,
    *,
    fuel: int = DEFAULT_FUEL,
    strategy: Strategy = Strategy.LEFTMOST_OUTERMOST,
    logger: Optional[JsonlLogger] = None,
) -> bool:
    """True when a[x := u] and b have the same normal form in g.

    Type errors in g or u raise instead of answering False.
    """
    if g.system is not p.system:
        raise PreconditionError(f"context is for system {g.system.value}, problem is for {p.system.value}")
    witness_type = typecheck(g, u, fuel=fuel)
    if witness_type != nat_type(p.system):
        raise IllTypedError(f"witness has type {print_term(witness_type, g.names)}, expected Nat", u, "witness")
    # a mentions only x, so the instance lives in g
    left = normalize(substitute(p.a, 0, u), p.system, fuel, strategy=strategy)
    right = normalize(p.b, p.system, fuel, strategy=strategy)
    verdict = left.term == right.term
    log_event(
        logger,
        "solution_verified",
        system=p.system.value,
        reason="match" if verdict else "mismatch",
        res={"verdict": verdict, "steps": left.steps + right.steps},
    )
    return verdict


def problem_to_dict(p: MatchingProblem) -> dict[str, Any]:
    return {
        "system": p.system.value,
        "context": f"[{p.variable}:Nat]",
        "variable": p.variable,
        "a": print_term(p.a, [p.variable]),
        "b": print_term(p.b),
        "source": format_prf(p.source) if p.source is not None else None,
    }


def problem_from_dict(raw: Mapping[str, Any]) -> MatchingProblem:
    for key in ("system", "a", "b"):
        if key not in raw:
            raise KeyError(f"missing problem key: {key}")
    system = SystemTag.parse(raw["system"])
    variable = str(raw.get("variable") or "x")
    context = parse_context(str(raw.get("context") or f"[{variable}:Nat]"), system)
    if len(context) != 1:
        raise PreconditionError("a matching problem has exactly one variable")
    variable = context.names[0]
    source = raw.get("source")
    return MatchingProblem(
        system=system,
        a=parse_term(str(raw["a"]), system, context),
        b=parse_term(str(raw["b"]), system),
        variable=variable,
        source=parse_prf(source) if source else None,
    )
