from __future__ import annotations

import random

import pytest

from lam.errors import LamParseError, UnboundIdentifierError, WrongCalculusError
from lam.kernel.parser import parse_context, parse_term
from lam.kernel.printer import print_term
from lam.kernel.terms import NAT, NAT_F, PROP, SUCC, ZERO, App, Lam, Pi, RecT, Term, Var, shift
from lam.systemf.numerals import church
from lam.systemt.numerals import probe_t, t_numeral
from lam.types import SystemTag


def test_parse_identity_under_t() -> None:
    assert parse_term("fun x:Nat. x", SystemTag.T) == Lam("x", NAT, Var(0))


def test_parse_nat_spelled_out_under_f() -> None:
    assert parse_term("Pi P:Prop. P -> (P -> P) -> P", SystemTag.F) == NAT_F


def test_parse_rejects_t_constructors_under_f() -> None:
    with pytest.raises(WrongCalculusError) as excinfo:
        parse_term("(S O)", SystemTag.F)
    assert excinfo.value.constructor == "S"

    with pytest.raises(WrongCalculusError):
        parse_term("Rec[Nat]", SystemTag.F)


def test_parse_rejects_prop_under_t() -> None:
    with pytest.raises(WrongCalculusError):
        parse_term("fun P:Prop. P", SystemTag.T)


def test_unbound_identifier_reports_name_and_position() -> None:
    with pytest.raises(UnboundIdentifierError) as excinfo:
        parse_term("fun x:Nat. y", SystemTag.T)

    assert excinfo.value.name == "y"
    assert excinfo.value.line == 1
    assert excinfo.value.column == 12


def test_syntax_error_reports_line() -> None:
    with pytest.raises(LamParseError) as excinfo:
        parse_term("fun x:Nat.\n  (x", SystemTag.T)

    assert excinfo.value.line == 2


def test_trailing_tokens_are_rejected() -> None:
    with pytest.raises(LamParseError):
        parse_term("O )", SystemTag.T)


def test_application_is_left_associative_and_arrow_right_associative() -> None:
    ctx = parse_context("[f:Nat -> Nat -> Nat; y:Nat]", SystemTag.T)

    assert parse_term("f y y", SystemTag.T, ctx) == App(App(Var(1), Var(0)), Var(0))
    assert parse_term("Nat -> Nat -> Nat", SystemTag.T) == Pi("_", NAT, Pi("_", NAT, NAT))


def test_parse_recursor_and_constants() -> None:
    term = parse_term("Rec[Nat] O (fun y:Nat. fun z:Nat. z) (S (S O))", SystemTag.T)

    assert term == probe_t(t_numeral(2))
    assert parse_term("S O", SystemTag.T) == App(SUCC, ZERO)
    assert parse_term("Rec[Nat -> Nat]", SystemTag.T) == RecT(Pi("_", NAT, NAT))


def test_parse_context_resolves_prefix_scope() -> None:
    ctx = parse_context("[P:Prop; x:P; f:P -> P]", SystemTag.F)

    assert [name for name, _ in ctx.entries] == ["P", "x", "f"]
    assert ctx.entries[0][1] == PROP
    assert ctx.entries[1][1] == Var(0)
    assert ctx.entries[2][1] == Pi("_", Var(1), Var(2))
    assert len(parse_context("[]", SystemTag.F)) == 0


def test_print_examples() -> None:
    assert print_term(Lam("x", NAT, Var(0))) == "fun x:Nat. x"
    assert print_term(church(0)) == "fun P:Prop. fun x:P. fun f:P -> P. x"
    assert print_term(church(2)) == "fun P:Prop. fun x:P. fun f:P -> P. f (f x)"


def test_print_freshens_shadowed_names() -> None:
    term = Lam("x", NAT, Lam("x", NAT, Var(1)))

    assert print_term(term) == "fun x:Nat. fun x1:Nat. x"
    assert parse_term(print_term(term), SystemTag.T) == term


def test_print_resugars_nat_and_uses_context_names() -> None:
    assert print_term(NAT_F) == "Nat"
    assert print_term(App(Var(0), Var(1)), ["f", "y"]) == "y f"


def _random_f_term(rng: random.Random, depth: int, scope: int) -> Term:
    options = ["prop"] + (["var", "var"] if scope else []) + (["app", "lam", "pi", "arrow"] if depth else [])
    kind = rng.choice(options)
    if kind == "prop":
        return PROP
    if kind == "var":
        return Var(rng.randrange(scope))
    if kind == "app":
        return App(_random_f_term(rng, depth - 1, scope), _random_f_term(rng, depth - 1, scope))
    name = rng.choice(["x", "x", "P", "f", "_", "O"])
    ann = _random_f_term(rng, depth - 1, scope)
    if kind == "arrow":
        return Pi(name, ann, _arrow_codomain(rng, depth - 1, scope))
    body = _random_f_term(rng, depth - 1, scope + 1)
    return Lam(name, ann, body) if kind == "lam" else Pi(name, ann, body)


def _arrow_codomain(rng: random.Random, depth: int, scope: int) -> Term:
    return shift(_random_f_term(rng, depth, scope), 1)


def _random_t_term(rng: random.Random, depth: int, scope: int) -> Term:
    options = ["nat", "zero", "succ"] + (["var"] if scope else []) + (["app", "lam", "rec", "arrow"] if depth else [])
    kind = rng.choice(options)
    if kind == "nat":
        return NAT
    if kind == "zero":
        return ZERO
    if kind == "succ":
        return SUCC
    if kind == "var":
        return Var(rng.randrange(scope))
    if kind == "app":
        return App(_random_t_term(rng, depth - 1, scope), _random_t_term(rng, depth - 1, scope))
    if kind == "rec":
        return RecT(_random_t_term(rng, depth - 1, scope))
    if kind == "arrow":
        return Pi("_", NAT, NAT)
    return Lam(rng.choice(["x", "y", "x"]), _random_t_term(rng, depth - 1, scope), _random_t_term(rng, depth - 1, scope + 1))


def test_print_parse_round_trip_on_generated_terms() -> None:
    rng = random.Random(5)
    for _ in range(300):
        f_term = _random_f_term(rng, 4, 0)
        assert parse_term(print_term(f_term), SystemTag.F) == f_term
        t_term = _random_t_term(rng, 4, 0)
        assert parse_term(print_term(t_term), SystemTag.T) == t_term


def test_round_trip_church_seven() -> None:
    assert parse_term(print_term(church(7)), SystemTag.F) == church(7)
