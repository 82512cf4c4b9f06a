"""System F typing with a single sort ``Prop``.

Products and abstractions range over terms (``x:T`` with ``T:Prop``) and
over propositions (``P:Prop``). Types are compared after β-normalization
at application sites.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..config import DEFAULT_FUEL
from ..errors import IllFormedContextError, IllTypedError, WrongCalculusError
from ..kernel.printer import print_term
from ..kernel.reduce import normalize
from ..kernel.terms import PROP, App, Context, Lam, NatT, Pi, RecT, Sort, SuccT, Term, Var, ZeroT, substitute
from ..types import SystemTag


@dataclass(frozen=True)
class Judgment:
    context: Context
    subject: Term
    type: Term


class _Checker:
    def __init__(self, fuel: int):
        self._fuel = fuel

    def _norm(self, t: Term) -> Term:
        return normalize(t, SystemTag.F, self._fuel).term

    def _expect_prop(self, g: Context, t: Term, rule: str) -> None:
        try:
            sort = self.infer(g, t)
        except IllTypedError as exc:
            raise IllTypedError(f"{exc.message} in a position that must be a proposition", t, rule) from exc
        if sort != PROP:
            raise IllTypedError(
                f"expected a proposition, got a term of type {print_term(sort, g.names)}", t, rule
            )

    def infer(self, g: Context, t: Term) -> Term:
        if isinstance(t, Sort):
            raise IllTypedError("Prop has no type", t, "sort")
        if isinstance(t, (NatT, ZeroT, SuccT, RecT)):
            raise WrongCalculusError(type(t).__name__, SystemTag.F)
        if isinstance(t, Var):
            if t.index >= len(g):
                raise IllTypedError(f"unbound variable #{t.index}", t, "variable")
            return self._norm(g.lookup(t.index))
        if isinstance(t, Pi):
            if t.dom != PROP:
                self._expect_prop(g, t.dom, "product")
            self._expect_prop(g.extend(t.name, t.dom), t.cod, "product")
            return PROP
        if isinstance(t, Lam):
            if t.ty != PROP:
                self._expect_prop(g, t.ty, "abstraction")
            inner = g.extend(t.name, t.ty)
            body_ty = self.infer(inner, t.body)
            self._expect_prop(inner, body_ty, "abstraction")
            return Pi(t.name, self._norm(t.ty), body_ty)
        if isinstance(t, App):
            fn_ty = self.infer(g, t.fn)
            if not isinstance(fn_ty, Pi):
                raise IllTypedError(
                    f"applied term has type {print_term(fn_ty, g.names)}, not a product", t, "application"
                )
            arg_ty = self.infer(g, t.arg)
            if self._norm(arg_ty) != self._norm(fn_ty.dom):
                raise IllTypedError(
                    f"argument has type {print_term(arg_ty, g.names)}, expected {print_term(fn_ty.dom, g.names)}",
                    t,
                    "application",
                )
            return self._norm(substitute(fn_ty.cod, 0, t.arg))
        raise IllTypedError(f"not a term: {t!r}", t, "syntax")


def validate_context_f(g: Context, *, fuel: int = DEFAULT_FUEL) -> None:
    checker = _Checker(fuel)
    prefix = Context((), SystemTag.F)
    for index, (name, ty) in enumerate(g.entries):
        if ty != PROP:
            try:
                checker._expect_prop(prefix, ty, "context")
            except WrongCalculusError as exc:
                raise IllFormedContextError(index, name, str(exc)) from exc
            except IllTypedError as exc:
                raise IllFormedContextError(index, name, exc.message) from exc
        prefix = prefix.extend(name, ty)


def check_context_f(g: Context, *, fuel: int = DEFAULT_FUEL) -> bool:
    try:
        validate_context_f(g, fuel=fuel)
    except IllFormedContextError:
        return False
    return True


def typecheck_f(g: Context, t: Term, *, fuel: int = DEFAULT_FUEL) -> Term:
    if g.system is not SystemTag.F:
        raise WrongCalculusError("context", g.system)
    validate_context_f(g, fuel=fuel)
    return _Checker(fuel).infer(g, t)


def judge_f(g: Context, t: Term, *, fuel: int = DEFAULT_FUEL) -> Judgment:
    return Judgment(g, t, typecheck_f(g, t, fuel=fuel))
