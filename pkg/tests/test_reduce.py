from __future__ import annotations

import orjson
import pytest

from lam.compile.church import compile_to_f
from lam.errors import FuelExhaustedError
from lam.kernel.parser import parse_context, parse_term
from lam.kernel.reduce import NormalFormCache, classify_shape, eta_reduce, is_normal, normalize
from lam.kernel.terms import NAT, Var, apply_spine
from lam.log.jsonl import JsonlLogger
from lam.prf.stdlib import ADD, MULT
from lam.systemf.numerals import church
from lam.systemt.numerals import t_numeral
from lam.types import ShapeKind, Strategy, SystemTag

OMEGA = "(fun x:Prop. x x) (fun x:Prop. x x)"


def test_beta_under_binder() -> None:
    t = parse_term("fun x:Nat. (fun y:Nat. y) x", SystemTag.F)

    result = normalize(t, SystemTag.F)

    assert result.term == parse_term("fun x:Nat. x", SystemTag.F)
    assert result.steps == 1
    assert result.eta_applied is False


def test_eta_is_opt_in() -> None:
    ctx = parse_context("[f:Nat -> Nat]", SystemTag.F)
    t = parse_term("fun x:Nat. f x", SystemTag.F, ctx)

    assert normalize(t, SystemTag.F).term == t

    reduced = normalize(t, SystemTag.F, eta=True)
    assert reduced.term == Var(0)
    assert reduced.eta_applied is True


def test_eta_keeps_abstraction_when_variable_escapes() -> None:
    t = parse_term("fun x:Nat. x x", SystemTag.F)

    assert eta_reduce(t) == t


def test_fuel_exhaustion_reports_budget() -> None:
    with pytest.raises(FuelExhaustedError) as excinfo:
        normalize(parse_term(OMEGA, SystemTag.F), SystemTag.F, fuel=100)

    assert excinfo.value.fuel == 100
    assert excinfo.value.steps == 100


def test_fuel_exhaustion_under_innermost_strategy() -> None:
    with pytest.raises(FuelExhaustedError):
        normalize(parse_term(OMEGA, SystemTag.F), SystemTag.F, fuel=50, strategy=Strategy.RIGHTMOST_INNERMOST)


def test_exact_fuel_is_enough() -> None:
    t = apply_spine(compile_to_f(ADD).term, [church(1), church(1)])
    steps = normalize(t, SystemTag.F).steps

    assert normalize(t, SystemTag.F, fuel=steps).term == church(2)
    with pytest.raises(FuelExhaustedError):
        normalize(t, SystemTag.F, fuel=steps - 1)


@pytest.mark.parametrize("strategy", list(Strategy))
def test_strategies_agree_on_compiled_arithmetic(strategy: Strategy) -> None:
    t = apply_spine(compile_to_f(MULT).term, [church(2), church(3)])

    assert normalize(t, SystemTag.F, strategy=strategy).term == church(6)


@pytest.mark.parametrize("strategy", list(Strategy))
def test_recursor_reduction_in_t(strategy: Strategy) -> None:
    t = parse_term("Rec[Nat] O (fun y:Nat. fun z:Nat. S (S z)) (S (S (S O)))", SystemTag.T)

    assert normalize(t, SystemTag.T, strategy=strategy).term == t_numeral(6)


def test_recursor_stuck_on_variable_normalizes_arguments() -> None:
    ctx = parse_context("[y:Nat]", SystemTag.T)
    t = parse_term("Rec[Nat] ((fun z:Nat. z) O) (fun a:Nat. fun b:Nat. b) y", SystemTag.T, ctx)

    result = normalize(t, SystemTag.T).term

    assert result == parse_term("Rec[Nat] O (fun a:Nat. fun b:Nat. b) y", SystemTag.T, ctx)


def test_cache_hits_and_respects_fuel() -> None:
    cache = NormalFormCache()
    t = apply_spine(compile_to_f(ADD).term, [church(2), church(2)])

    first = normalize(t, SystemTag.F, cache=cache)
    second = normalize(t, SystemTag.F, cache=cache)

    assert first == second
    assert cache.hits == 1
    assert cache.misses == 1
    assert len(cache) == 1

    with pytest.raises(FuelExhaustedError):
        normalize(t, SystemTag.F, fuel=first.steps - 1, cache=cache)


def test_is_normal() -> None:
    assert is_normal(church(3), SystemTag.F)
    assert not is_normal(parse_term("(fun x:Nat. x) O", SystemTag.T), SystemTag.T)


def test_shape_classification() -> None:
    ctx = parse_context("[y:Nat]", SystemTag.T)

    assert classify_shape(church(2)) is ShapeKind.ABSTRACTION
    assert classify_shape(NAT) is ShapeKind.ATOMIC
    assert classify_shape(parse_term("Nat -> Nat", SystemTag.T)) is ShapeKind.PRODUCT
    assert classify_shape(parse_term("S (S y)", SystemTag.T, ctx)) is ShapeKind.ATOMIC
    assert classify_shape(parse_term("(fun x:Nat. x) O", SystemTag.T)) is ShapeKind.OTHER


def test_normalize_logs_events(tmp_path) -> None:
    logger = JsonlLogger(str(tmp_path / "kernel.jsonl"), command="test")

    normalize(parse_term("(fun x:Nat. x) O", SystemTag.T), SystemTag.T, logger=logger)
    with pytest.raises(FuelExhaustedError):
        normalize(parse_term(OMEGA, SystemTag.F), SystemTag.F, fuel=3, logger=logger)

    lines = (tmp_path / "kernel.jsonl").read_bytes().splitlines()
    records = [orjson.loads(line) for line in lines]
    assert [r["event"] for r in records] == ["normalize_done", "fuel_exhausted"]
    assert records[0]["system"] == "t"
    assert records[0]["res"] == {"steps": 1}
    assert records[1]["res"] == {"fuel": 3, "steps": 3}
    assert all(r["command"] == "test" for r in records)
