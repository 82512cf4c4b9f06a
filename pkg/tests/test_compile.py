from __future__ import annotations

import itertools

import pytest

from lam.calculus import empty_context, numeral, typecheck
from lam.compile import church as church_compiler
from lam.compile import godel as godel_compiler
from lam.compile.church import compile_to_f
from lam.compile.compiled import function_type
from lam.compile.godel import compile_to_t
from lam.compile.represent import apply_to_numerals, compile_prf, run_compiled
from lam.kernel.parser import parse_term
from lam.kernel.printer import print_term
from lam.kernel.terms import NAT, NAT_F, SUCC, ZERO, is_closed
from lam.prf.evaluate import eval_prf
from lam.prf.expr import Comp, Proj, Succ, Zero
from lam.prf.stdlib import (
    ADD,
    ALPHA,
    BOUNDED_MU,
    DIVIDES,
    EQUAL,
    IS_PRIME,
    MIN,
    MONUS,
    MULT,
    NDIV,
    NEXT_PRIME,
    NTH_PRIME,
    POW,
    PRED,
    REM,
    SGN,
    TPOW,
)
from lam.systemf.numerals import SUCC_F, church
from lam.types import Strategy, SystemTag

SYSTEMS = [SystemTag.F, SystemTag.T]

# largest argument checked in (T, F); None leaves that calculus out.
# Call-by-name reduction copies unevaluated recursion results, so the
# number-theoretic entries stay on small inputs.
REPRESENTATION_LIMITS = [
    (ADD, 6, 6),
    (MULT, 6, 6),
    (EQUAL, 4, 4),
    (PRED, 6, 6),
    (SGN, 6, 6),
    (MONUS, 4, 4),
    (POW, 3, 2),
    (REM, 4, 2),
    (DIVIDES, 4, 2),
    (MIN, 4, 3),
    (TPOW, 4, 1),
    (NDIV, 2, 1),
    (IS_PRIME, 2, 1),
    (BOUNDED_MU, 1, 0),
    (NEXT_PRIME, 0, None),
    (NTH_PRIME, 0, 0),
]

REPRESENTATION_CASES = [
    pytest.param(system, fn, limit, id=f"{fn.name}-{system.value}")
    for fn, t_limit, f_limit in REPRESENTATION_LIMITS
    for system, limit in ((SystemTag.T, t_limit), (SystemTag.F, f_limit))
    if limit is not None
]


def test_compile_constructors_in_f() -> None:
    zero = compile_to_f(Zero())
    assert zero.term == church(0)
    assert zero.type == NAT_F
    assert compile_to_f(Succ()).term == SUCC_F
    assert compile_to_f(Proj(1, 2)).term == parse_term("fun x1:Nat. fun x2:Nat. x1", SystemTag.F)


def test_compile_constructors_in_t() -> None:
    assert compile_to_t(Zero()).term == ZERO
    assert compile_to_t(Succ()).term == SUCC
    assert compile_to_t(Proj(2, 3)).term == parse_term("fun x1:Nat. fun x2:Nat. fun x3:Nat. x2", SystemTag.T)
    assert compile_to_t(Comp(Zero(), (), 2)).term == parse_term("fun x1:Nat. fun x2:Nat. O", SystemTag.T)


def test_recursion_compiles_to_recursor_in_t() -> None:
    expected = parse_term(
        "fun y:Nat. Rec[Nat] O (fun k:Nat. fun r:Nat. (fun x1:Nat. fun x2:Nat. x1) k r) y",
        SystemTag.T,
    )

    assert compile_to_t(PRED).term == expected
    assert print_term(compile_to_t(PRED).type) == "Nat -> Nat"


@pytest.mark.parametrize(("system", "fn", "limit"), REPRESENTATION_CASES)
def test_compiled_functions_represent_their_source(system: SystemTag, fn, limit: int) -> None:
    compiled = compile_prf(fn, system)
    for args in itertools.product(range(limit + 1), repeat=fn.arity):
        result = apply_to_numerals(compiled, args)
        assert result.term == numeral(eval_prf(fn, args), system), args


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_run_compiled_reads_back_numerals(system: SystemTag) -> None:
    compiled = compile_prf(ADD, system)

    assert run_compiled(compiled, [2, 3]) == 5


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_compiled_arithmetic_under_innermost_strategy(system: SystemTag) -> None:
    compiled = compile_prf(MULT, system)

    result = apply_to_numerals(compiled, [2, 3], strategy=Strategy.RIGHTMOST_INNERMOST)

    assert result.term == numeral(6, system)


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
@pytest.mark.parametrize("fn", [ADD, MULT, EQUAL, REM, IS_PRIME, ALPHA], ids=lambda f: f.name)
def test_compiled_terms_are_closed_and_well_typed(system: SystemTag, fn) -> None:
    compiled = compile_prf(fn, system)

    assert is_closed(compiled.term)
    assert compiled.type == function_type(fn.arity, system)
    assert typecheck(empty_context(system), compiled.term) == compiled.type


def test_function_type_shapes() -> None:
    assert function_type(0, SystemTag.T) == NAT
    assert print_term(function_type(2, SystemTag.F)) == "Nat -> Nat -> Nat"


def test_compilation_is_deterministic() -> None:
    first_f = compile_to_f(EQUAL).term
    first_t = compile_to_t(EQUAL).term
    church_compiler._compile.cache_clear()
    godel_compiler._compile.cache_clear()

    assert compile_to_f(EQUAL).term == first_f
    assert compile_to_t(EQUAL).term == first_t


def test_compiled_examples() -> None:
    assert apply_to_numerals(compile_to_f(Succ()), [1]).term == church(2)
    assert run_compiled(compile_to_t(PRED), [0]) == 0
    assert apply_to_numerals(compile_to_t(MULT), [3, 4]).term == numeral(12, SystemTag.T)
    assert apply_to_numerals(compile_to_t(EQUAL), [2, 2]).term == ZERO


def test_church_recursion_cost_grows_linearly() -> None:
    compiled = compile_to_f(ADD)
    short = apply_to_numerals(compiled, [0, 4])
    long = apply_to_numerals(compiled, [0, 8])

    assert long.term == church(8)
    assert long.steps < 3 * short.steps
