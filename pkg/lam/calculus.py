"""Per-calculus dispatch for numerals, probes, typing and context checks."""

from __future__ import annotations

from typing import Optional

from .config import DEFAULT_FUEL
from .kernel.terms import Context, Term, empty_context, nat_type
from .systemf.check import check_context_f, typecheck_f, validate_context_f
from .systemf.numerals import church, fair_probe_f, probe_f, recognize_numeral_f
from .systemt.check import check_context_t, typecheck_t, validate_context_t
from .systemt.numerals import fair_probe_t, probe_t, recognize_numeral_t, t_numeral
from .types import SystemTag

__all__ = [
    "check_context",
    "empty_context",
    "fair_probe",
    "nat_type",
    "numeral",
    "probe",
    "recognize_numeral",
    "typecheck",
    "validate_context",
]


def numeral(n: int, system: SystemTag) -> Term:
    return church(n) if system is SystemTag.F else t_numeral(n)


def probe(t: Term, system: SystemTag) -> Term:
    return probe_f(t) if system is SystemTag.F else probe_t(t)


def fair_probe(system: SystemTag) -> Term:
    return fair_probe_f() if system is SystemTag.F else fair_probe_t()


def typecheck(g: Context, t: Term, *, fuel: int = DEFAULT_FUEL) -> Term:
    if g.system is SystemTag.F:
        return typecheck_f(g, t, fuel=fuel)
    return typecheck_t(g, t)


def validate_context(g: Context) -> None:
    if g.system is SystemTag.F:
        validate_context_f(g)
    else:
        validate_context_t(g)


def check_context(g: Context) -> bool:
    return check_context_f(g) if g.system is SystemTag.F else check_context_t(g)


def recognize_numeral(t: Term, system: SystemTag, context: Optional[Context] = None) -> Optional[int]:
    if system is SystemTag.F:
        return recognize_numeral_f(context or empty_context(SystemTag.F), t)
    return recognize_numeral_t(t)
