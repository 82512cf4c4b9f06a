from __future__ import annotations

import pytest

from lam.calculus import empty_context, fair_probe, nat_type, numeral, probe, recognize_numeral, typecheck
from lam.corpus import normal_nat_corpus, well_typed_corpus
from lam.kernel.reduce import classify_shape, is_normal, normalize
from lam.kernel.terms import App, Pi
from lam.types import ShapeKind, Strategy, SystemTag

SYSTEMS = [SystemTag.F, SystemTag.T]


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_corpus_is_well_typed_and_deterministic(system: SystemTag) -> None:
    corpus = well_typed_corpus(system, 50, seed=7)

    assert corpus == well_typed_corpus(system, 50, seed=7)
    assert any(len(ctx) == 1 for ctx, _ in corpus)
    for ctx, term in corpus:
        assert typecheck(ctx, term) == nat_type(system)


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_strategies_reach_the_same_normal_form(system: SystemTag) -> None:
    for _, term in well_typed_corpus(system, 500, seed=1):
        outermost = normalize(term, system, strategy=Strategy.LEFTMOST_OUTERMOST)
        innermost = normalize(term, system, strategy=Strategy.RIGHTMOST_INNERMOST)
        assert outermost.term == innermost.term


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_normalization_preserves_types(system: SystemTag) -> None:
    for ctx, term in well_typed_corpus(system, 150, seed=2):
        result = normalize(term, system)
        assert typecheck(ctx, result.term) == nat_type(system)
        assert is_normal(result.term, system)


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_normal_terms_of_type_nat_have_a_canonical_shape(system: SystemTag) -> None:
    allowed = {ShapeKind.ATOMIC} if system is SystemTag.T else {ShapeKind.ABSTRACTION, ShapeKind.ATOMIC}
    for ctx, term in normal_nat_corpus(system, 250, seed=3):
        assert classify_shape(term) in allowed
        if len(ctx) == 0 and system is SystemTag.F:
            assert classify_shape(term) is ShapeKind.ABSTRACTION


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_probe_and_recognizer_agree(system: SystemTag) -> None:
    corpus = normal_nat_corpus(system, 400, seed=4)
    closed = [term for ctx, term in corpus if len(ctx) == 0]
    assert len(closed) >= 200
    assert all(is_normal(term, system) for term in closed)
    assert all(typecheck(empty_context(system), term) == nat_type(system) for term in closed)

    recognized = 0
    for ctx, term in corpus:
        value = recognize_numeral(term, system, ctx)
        reaches_zero = normalize(probe(term, system), system).term == numeral(0, system)
        assert (value is not None) == reaches_zero
        if value is not None:
            recognized += 1
            assert term == numeral(value, system)
    assert 0 < recognized < len(corpus)


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_closed_normal_terms_of_type_nat_are_numerals(system: SystemTag) -> None:
    for ctx, term in normal_nat_corpus(system, 250, seed=5):
        if len(ctx) == 0:
            assert recognize_numeral(term, system, ctx) is not None


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s.value)
def test_fair_probe_sends_numerals_to_zero(system: SystemTag) -> None:
    witness = fair_probe(system)

    assert typecheck(empty_context(system), witness) == Pi("_", nat_type(system), nat_type(system))
    for n in range(5):
        assert normalize(App(witness, numeral(n, system)), system).term == numeral(0, system)
