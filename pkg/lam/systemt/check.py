from __future__ import annotations

from ..errors import IllFormedContextError, IllTypedError, WrongCalculusError
from ..kernel.printer import print_term
from ..kernel.terms import (
    NAT,
    App,
    Context,
    Lam,
    NatT,
    Pi,
    RecT,
    Sort,
    SuccT,
    Term,
    Var,
    ZeroT,
    arrow,
    arrows,
    occurs_free,
    uses_sort,
)
from ..types import SystemTag


def is_simple_type(t: Term) -> bool:
    """Nat and non-dependent arrows built from it."""
    if isinstance(t, NatT):
        return True
    if isinstance(t, Pi):
        return is_simple_type(t.dom) and is_simple_type(t.cod) and not occurs_free(t.cod, 0)
    return False


def recursor_type(ty: Term) -> Term:
    # T -> (Nat -> T -> T) -> Nat -> T
    return arrows([ty, arrows([NAT, ty], ty), NAT], ty)


def _infer(g: Context, t: Term) -> Term:
    if isinstance(t, Sort):
        raise WrongCalculusError("Prop", SystemTag.T)
    if isinstance(t, Var):
        if t.index >= len(g):
            raise IllTypedError(f"unbound variable #{t.index}", t, "variable")
        return g.lookup(t.index)
    if isinstance(t, ZeroT):
        return NAT
    if isinstance(t, SuccT):
        return arrow(NAT, NAT)
    if isinstance(t, RecT):
        if uses_sort(t.ty):
            raise WrongCalculusError("Prop", SystemTag.T)
        if not is_simple_type(t.ty):
            raise IllTypedError("recursor index is not a simple type", t, "recursor")
        return recursor_type(t.ty)
    if isinstance(t, (NatT, Pi)):
        raise IllTypedError("a type is not a term of system T", t, "type-as-term")
    if isinstance(t, Lam):
        if uses_sort(t.ty):
            raise WrongCalculusError("Prop", SystemTag.T)
        if not is_simple_type(t.ty):
            raise IllTypedError(f"annotation {print_term(t.ty, g.names)} is not a simple type", t, "abstraction")
        body_ty = _infer(g.extend(t.name, t.ty), t.body)
        return arrow(t.ty, body_ty)
    if isinstance(t, App):
        fn_ty = _infer(g, t.fn)
        if not isinstance(fn_ty, Pi):
            raise IllTypedError(
                f"applied term has type {print_term(fn_ty, g.names)}, not a function type", t, "application"
            )
        arg_ty = _infer(g, t.arg)
        if arg_ty != fn_ty.dom:
            raise IllTypedError(
                f"argument has type {print_term(arg_ty, g.names)}, expected {print_term(fn_ty.dom, g.names)}",
                t,
                "application",
            )
        return fn_ty.cod
    raise IllTypedError(f"not a term: {t!r}", t, "syntax")


def validate_context_t(g: Context) -> None:
    for index, (name, ty) in enumerate(g.entries):
        if not is_simple_type(ty):
            raise IllFormedContextError(index, name, "declared type is not a simple type over Nat")


def check_context_t(g: Context) -> bool:
    try:
        validate_context_t(g)
    except IllFormedContextError:
        return False
    return True


def typecheck_t(g: Context, t: Term) -> Term:
    if g.system is not SystemTag.T:
        raise WrongCalculusError("context", g.system)
    validate_context_t(g)
    return _infer(g, t)
