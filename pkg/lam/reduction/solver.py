from __future__ import annotations

from concurrent.futures import Future, ThreadPoolExecutor
from contextlib import closing
from dataclasses import dataclass, field
import time
from typing import Any, Callable, Iterator, Optional

from ..calculus import numeral
from ..config import DEFAULT_FUEL
from ..errors import FuelExhaustedError, SolverFuelExhaustedError
from ..kernel.printer import print_term
from ..kernel.reduce import normalize
from ..kernel.terms import Context, Term, substitute
from ..log.jsonl import JsonlLogger, log_event
from ..types import Strategy, VerdictStatus
from .matching import MatchingProblem, Solution, check_problem, verify_solution


@dataclass(frozen=True)
class SolverStats:
    steps: int = 0
    candidates: int = 0
    wall_time_sec: float = 0.0


@dataclass(frozen=True)
class SolverVerdict:
    status: VerdictStatus
    bound: int
    witness: Optional[int] = None
    solution: Optional[Solution] = None
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def found(self) -> bool:
        return self.status is VerdictStatus.FOUND


@dataclass(frozen=True)
class _CandidateResult:
    n: int
    matched: bool
    steps: int


def solve_bounded(
    p: MatchingProblem,
    bound: int,
    *,
    fuel: int = DEFAULT_FUEL,
    threads: int = 1,
    strategy: Strategy = Strategy.LEFTMOST_OUTERMOST,
    logger: Optional[JsonlLogger] = None,
) -> SolverVerdict:
    """Try the numerals 0..bound in ascending order and return the least solution."""
    if bound < 0:
        raise ValueError(f"bound must be a natural number, got {bound}")
    started = time.perf_counter()
    check_problem(p, fuel=fuel)
    per_candidate = max(1, fuel // (bound + 1))

    def check(n: int) -> _CandidateResult:
        instance = substitute(p.a, 0, numeral(n, p.system))
        try:
            result = normalize(instance, p.system, per_candidate, strategy=strategy)
        except FuelExhaustedError as exc:
            raise SolverFuelExhaustedError(n, exc.fuel, exc.steps) from exc
        return _CandidateResult(n, result.term == target.term, result.steps)

    checked = 0
    hit: Optional[int] = None
    try:
        try:
            target = normalize(p.b, p.system, per_candidate, strategy=strategy)
        except FuelExhaustedError as exc:
            raise SolverFuelExhaustedError(None, exc.fuel, exc.steps) from exc
        steps = target.steps
        with closing(_ascending(check, bound, threads)) as results:
            for result in results:
                checked += 1
                steps += result.steps
                log_event(
                    logger,
                    "candidate_checked",
                    system=p.system.value,
                    reason="match" if result.matched else "mismatch",
                    data={"candidate": result.n},
                    res={"steps": result.steps},
                )
                if result.matched:
                    hit = result.n
                    break
    except SolverFuelExhaustedError as exc:
        log_event(
            logger,
            "fuel_exhausted",
            system=p.system.value,
            reason="solver",
            data={"candidate": exc.candidate},
            res={"fuel": exc.fuel, "steps": exc.steps},
        )
        raise

    stats = SolverStats(steps, checked, round(time.perf_counter() - started, 6))
    if hit is None:
        log_event(logger, "solver_exhausted", system=p.system.value, reason="bound", res={"bound": bound})
        return SolverVerdict(VerdictStatus.EXHAUSTED_BOUND, bound, stats=stats)

    solution = Solution(Context((), p.system), numeral(hit, p.system))
    if not verify_solution(p, solution.context, solution.witness, fuel=fuel, strategy=strategy):
        raise AssertionError(f"candidate {hit} matched during search but failed verification")
    log_event(logger, "solver_found", system=p.system.value, reason="found", res={"witness": hit, "bound": bound})
    return SolverVerdict(VerdictStatus.FOUND, bound, hit, solution, stats)


def _ascending(
    check: Callable[[int], _CandidateResult], bound: int, threads: int
) -> Iterator[_CandidateResult]:
    if threads <= 1:
        for n in range(bound + 1):
            yield check(n)
        return
    executor = ThreadPoolExecutor(max_workers=threads, thread_name_prefix="lam-solver")
    futures: list[Future[_CandidateResult]] = []
    try:
        futures = [executor.submit(check, n) for n in range(bound + 1)]
        # consumed in candidate order so the least witness wins
        for future in futures:
            yield future.result()
    finally:
        for future in futures:
            future.cancel()
        executor.shutdown(wait=True, cancel_futures=True)


def verdict_to_dict(v: SolverVerdict) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "status": v.status.value,
        "bound": v.bound,
        "stats": {
            "steps": v.stats.steps,
            "candidates": v.stats.candidates,
            "wall_time_sec": v.stats.wall_time_sec,
        },
    }
    if v.witness is not None:
        payload["witness"] = v.witness
    if v.solution is not None:
        payload["solution"] = {
            "context": "[]",
            "witness_term": print_term(v.solution.witness),
        }
    return payload

