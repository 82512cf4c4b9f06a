from __future__ import annotations

import argparse
from dataclasses import dataclass
import os
from pathlib import Path
import sys
from typing import Any, Callable, Optional, Sequence

import orjson
from dotenv import load_dotenv

from .calculus import typecheck
from .compile.represent import compile_prf
from .config import AppConfig, apply_env_overrides, default_config, load_config, validate_config
from .errors import (
    ArityError,
    ConfigError,
    FuelExhaustedError,
    IllTypedError,
    LamParseError,
    PreconditionError,
    SolverFuelExhaustedError,
)
from .kernel.parser import parse_context, parse_term
from .kernel.printer import print_term
from .kernel.reduce import NormalFormCache, normalize
from .log.jsonl import JsonlLogger
from .log.run_report import RunStats
from .prf.evaluate import eval_prf
from .prf.text import format_prf, parse_prf
from .reduction.hilbert import hilbert_to_prf, to_one_variable
from .reduction.matching import MatchingProblem, gen_matching, problem_from_dict, problem_to_dict, verify_solution
from .reduction.polynomial import load_polynomial, polynomial_from_expression, polynomial_to_dict
from .reduction.solver import solve_bounded, verdict_to_dict
from .types import Strategy, SystemTag, VerdictStatus

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_BOUND = 4

LOG_FILE_NAME = "lam.jsonl"


@dataclass
class CommandResult:
    exit_code: int
    result: dict[str, Any]
    stdout: list[str]
    stderr: list[str]


@dataclass
class _Run:
    args: argparse.Namespace
    config: AppConfig
    system: SystemTag
    strategy: Strategy
    stats: RunStats
    logger: Optional[JsonlLogger]
    cache: Optional[NormalFormCache]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", choices=["f", "t"], default=None, help="calculus (default: f)")
    common.add_argument("--fuel", type=int, default=None, help="reduction step budget")
    common.add_argument("--eta", action="store_true", default=None, help="apply the eta post-pass")
    common.add_argument("--json", action="store_true", help="emit one machine-readable report")
    common.add_argument("--threads", type=int, default=None, help="solver worker threads")
    common.add_argument("--strategy", choices=[s.value for s in Strategy], default=None)
    common.add_argument("--config", default=None, help="YAML config (default: config.yaml when present)")
    common.add_argument("--log-dir", default=None, help="directory for the JSONL event log")
    return common


def _parse_args(argv: Sequence[str]) -> argparse.Namespace:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="lam",
        description="System F / System T workbench: typing, normalization, PRF compilation and matching problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="typecheck a term")
    check.add_argument("source", help="term, file path, or - for stdin")
    check.add_argument("--context", default="[]", help='context such as "[y:Nat]"')

    norm = sub.add_parser("norm", parents=[common], help="normalize a term")
    norm.add_argument("source", help="term, file path, or - for stdin")
    norm.add_argument("--context", default="[]", help="context the term lives in")

    prf = sub.add_parser("prf", parents=[common], help="evaluate or compile a primitive recursive function")
    prf.add_argument("expr", help="PRF expression or library name (add, mult, equal, alpha, ...)")
    mode = prf.add_mutually_exclusive_group()
    mode.add_argument("--eval", nargs="*", type=int, dest="eval_args", metavar="N")
    mode.add_argument("--compile", choices=["f", "t"], dest="compile_to")
    prf.add_argument("--no-jets", action="store_true", help="evaluate library functions by their definitions")

    gen = sub.add_parser("gen", parents=[common], help="generate a matching problem")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--prf", dest="prf_expr", help="unary PRF expression")
    source.add_argument("--poly-p", help="left polynomial: JSON/YAML/expression file or expression")
    gen.add_argument("--poly-q", help="right polynomial (with --poly-p)")
    gen.add_argument("--one-var", action="store_true", help="reduce to one variable through prime coding")
    gen.add_argument("--out", help="write the problem here instead of stdout")

    solve = sub.add_parser("solve", parents=[common], help="search numeral witnesses up to a bound")
    solve.add_argument("problem", help="problem file or - for stdin")
    solve.add_argument("--bound", type=int, default=None)

    verify = sub.add_parser("verify", parents=[common], help="check a candidate solution")
    verify.add_argument("problem", help="problem file or - for stdin")
    verify.add_argument("--witness", required=True, help="witness term")
    verify.add_argument("--context", default="[]", help="context of the witness")

    return parser.parse_args(list(argv))


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    path = Path(value)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8")
    except OSError:
        pass
    return value


def _load_run_config(args: argparse.Namespace) -> AppConfig:
    if args.config:
        config = load_config(args.config)
    elif os.path.exists("config.yaml"):
        config = load_config("config.yaml")
    else:
        config = default_config()
    apply_env_overrides(config)
    if args.fuel is not None:
        config.kernel.fuel = args.fuel
    if args.eta:
        config.kernel.eta = True
    if args.strategy is not None:
        config.kernel.strategy = args.strategy
    if args.threads is not None:
        config.solver.threads = args.threads
    if args.log_dir is not None:
        config.log.dir = args.log_dir
    if getattr(args, "bound", None) is not None:
        config.solver.bound = args.bound
    if getattr(args, "no_jets", False):
        config.prf.jets = False
    validate_config(config)
    return config


def _open_logger(config: AppConfig, command: str) -> Optional[JsonlLogger]:
    if not config.log.dir:
        return None
    return JsonlLogger(os.path.join(config.log.dir, LOG_FILE_NAME), max_bytes=config.log.max_bytes, command=command)


def _load_problem(value: str) -> MatchingProblem:
    raw = orjson.loads(_read_source(value))
    if not isinstance(raw, dict):
        raise ValueError("problem document must be a JSON object")
    return problem_from_dict(raw)


def cmd_check(run: _Run) -> CommandResult:
    ctx = parse_context(run.args.context, run.system)
    source = _read_source(run.args.source)
    term = parse_term(source, run.system, ctx)
    run.stats.record_inputs(system=run.system.value, context=run.args.context, source=source)
    ty = typecheck(ctx, term, fuel=run.config.kernel.fuel)
    rendered = print_term(ty, ctx.names)
    return CommandResult(EXIT_OK, {"type": rendered}, [rendered], [])


def cmd_norm(run: _Run) -> CommandResult:
    ctx = parse_context(run.args.context, run.system)
    source = _read_source(run.args.source)
    term = parse_term(source, run.system, ctx)
    run.stats.record_inputs(
        system=run.system.value,
        context=run.args.context,
        source=source,
        eta=run.config.kernel.eta,
        strategy=run.strategy.value,
    )
    result = normalize(
        term,
        run.system,
        run.config.kernel.fuel,
        run.config.kernel.eta,
        strategy=run.strategy,
        cache=run.cache,
        logger=run.logger,
    )
    run.stats.record_steps(result.steps)
    rendered = print_term(result.term, ctx.names)
    payload = {"normal_form": rendered, "steps": result.steps, "eta_applied": result.eta_applied}
    return CommandResult(EXIT_OK, payload, [rendered], [f"steps: {result.steps}"])


def cmd_prf(run: _Run) -> CommandResult:
    expr = parse_prf(_read_source(run.args.expr))
    run.stats.record_inputs(expr=format_prf(expr), eval=run.args.eval_args, compile=run.args.compile_to)
    if run.args.compile_to is not None:
        target = SystemTag.parse(run.args.compile_to)
        compiled = compile_prf(expr, target)
        term = print_term(compiled.term)
        ty = print_term(compiled.type)
        payload = {"system": target.value, "term": term, "type": ty, "arity": expr.arity}
        return CommandResult(EXIT_OK, payload, [term], [f"type: {ty}"])
    if run.args.eval_args is not None:
        value = eval_prf(expr, run.args.eval_args, jets=run.config.prf.jets)
        payload = {"value": value, "args": list(run.args.eval_args), "jets": run.config.prf.jets}
        return CommandResult(EXIT_OK, payload, [str(value)], [])
    text = format_prf(expr)
    return CommandResult(EXIT_OK, {"expr": text, "arity": expr.arity}, [text], [f"arity: {expr.arity}"])


def _read_polynomial(value: str, nvars: Optional[int] = None) -> Any:
    if Path(value).is_file():
        return load_polynomial(value, nvars)
    return polynomial_from_expression(value, nvars)


def cmd_gen(run: _Run) -> CommandResult:
    args = run.args
    notes: list[str] = []
    if args.prf_expr is not None:
        f = parse_prf(_read_source(args.prf_expr))
        run.stats.record_inputs(prf=format_prf(f))
    else:
        if not args.poly_q:
            raise ValueError("--poly-p requires --poly-q")
        p = _read_polynomial(args.poly_p)
        q = _read_polynomial(args.poly_q, p.nvars)
        if q.nvars > p.nvars:
            p = _read_polynomial(args.poly_p, q.nvars)
        run.stats.record_inputs(p=polynomial_to_dict(p), q=polynomial_to_dict(q))
        f = hilbert_to_prf(p, q)
    if args.one_var:
        f = to_one_variable(f)
        notes.append("one-variable problem: solving it needs compiled prime coding and is expensive")
    elif f.arity != 1:
        raise ArityError(f"function has {f.arity} arguments; pass --one-var to reduce it to one")
    problem = gen_matching(f, run.system, logger=run.logger)
    document = problem_to_dict(problem)
    run.stats.record_inputs(system=run.system.value, one_var=bool(args.one_var))
    if args.out:
        Path(args.out).write_bytes(orjson.dumps(document, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS) + b"\n")
        return CommandResult(EXIT_OK, {"problem": document, "out": args.out}, [args.out], notes)
    text = orjson.dumps(document, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode()
    return CommandResult(EXIT_OK, {"problem": document}, [text], notes)


def cmd_solve(run: _Run) -> CommandResult:
    problem = _load_problem(run.args.problem)
    bound = run.config.solver.bound
    run.stats.record_inputs(problem=problem_to_dict(problem), bound=bound, strategy=run.strategy.value)
    verdict = solve_bounded(
        problem,
        bound,
        fuel=run.config.kernel.fuel,
        threads=run.config.solver.threads,
        strategy=run.strategy,
        logger=run.logger,
    )
    run.stats.record_steps(verdict.stats.steps)
    run.stats.record_candidates(verdict.stats.candidates)
    payload = verdict_to_dict(verdict)
    if verdict.status is VerdictStatus.FOUND and verdict.solution is not None:
        lines = [f"found {verdict.witness}", print_term(verdict.solution.witness)]
        return CommandResult(EXIT_OK, payload, lines, [])
    return CommandResult(EXIT_BOUND, payload, [f"exhausted_bound {bound}"], [])


def cmd_verify(run: _Run) -> CommandResult:
    problem = _load_problem(run.args.problem)
    ctx = parse_context(run.args.context, problem.system)
    witness = parse_term(_read_source(run.args.witness), problem.system, ctx)
    run.stats.record_inputs(problem=problem_to_dict(problem), context=run.args.context, witness=run.args.witness)
    ok = verify_solution(
        problem,
        ctx,
        witness,
        fuel=run.config.kernel.fuel,
        strategy=run.strategy,
        logger=run.logger,
    )
    return CommandResult(EXIT_OK if ok else EXIT_SEMANTIC, {"verified": ok}, ["true" if ok else "false"], [])


COMMANDS: dict[str, Callable[[_Run], CommandResult]] = {
    "check": cmd_check,
    "norm": cmd_norm,
    "prf": cmd_prf,
    "gen": cmd_gen,
    "solve": cmd_solve,
    "verify": cmd_verify,
}


def _error_result(code: int, kind: str, exc: BaseException, **extra: Any) -> CommandResult:
    payload = {"error": str(exc), "kind": kind, **extra}
    return CommandResult(code, payload, [], [f"error: {exc}"])


def _dispatch(run: _Run) -> CommandResult:
    # 役割: 例外を終了コードに写す
    try:
        return COMMANDS[run.args.command](run)
    except SolverFuelExhaustedError as exc:
        return _error_result(EXIT_RESOURCE, "fuel", exc, candidate=exc.candidate, fuel=exc.fuel)
    except FuelExhaustedError as exc:
        return _error_result(EXIT_RESOURCE, "fuel", exc, fuel=exc.fuel)
    except LamParseError as exc:
        return _error_result(EXIT_INPUT, "parse", exc, line=exc.line, column=exc.column)
    except (IllTypedError, PreconditionError) as exc:
        return _error_result(EXIT_SEMANTIC, "type", exc)
    except (ArityError, ConfigError, KeyError, ValueError, OSError) as exc:
        return _error_result(EXIT_INPUT, "input", exc)


def _emit(outcome: CommandResult, run_stats: RunStats, as_json: bool) -> None:
    if as_json:
        report = run_stats.flush(outcome.result, outcome.exit_code)
        sys.stdout.write(orjson.dumps(report, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode() + "\n")
        return
    run_stats.flush(outcome.result, outcome.exit_code)
    for line in outcome.stdout:
        print(line)
    for line in outcome.stderr:
        print(line, file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _parse_args(argv)
    load_dotenv()
    stats = RunStats(["lam", *argv])
    try:
        config = _load_run_config(args)
    except (ConfigError, OSError, TypeError, ValueError) as exc:
        _emit(_error_result(EXIT_INPUT, "config", exc), stats, args.json)
        return EXIT_INPUT

    logger = _open_logger(config, args.command)
    stats = RunStats(["lam", *argv], logger=logger)
    run = _Run(
        args=args,
        config=config,
        system=SystemTag.parse(args.system or "f"),
        strategy=Strategy.parse(config.kernel.strategy),
        stats=stats,
        logger=logger,
        cache=NormalFormCache() if config.kernel.memo else None,
    )
    outcome = _dispatch(run)
    _emit(outcome, stats, args.json)
    return outcome.exit_code


def prf_compile_main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = argparse.ArgumentParser(prog="prf-compile", description="compile a PRF expression to a closed term")
    parser.add_argument("expr")
    parser.add_argument("--system", choices=["f", "t"], default="f")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    forwarded = ["prf", args.expr, "--compile", args.system]
    if args.json:
        forwarded.append("--json")
    return main(forwarded)


if __name__ == "__main__":
    raise SystemExit(main())
