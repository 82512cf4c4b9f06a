from __future__ import annotations

from dataclasses import dataclass
import sys
import threading
from typing import Any, Optional

from ..config import DEFAULT_FUEL
from ..errors import FuelExhaustedError
from ..log.jsonl import JsonlLogger, log_event
from ..systemt.recursor import contract_recursor, is_constructor_form, step_recursor
from ..types import ShapeKind, Strategy, SystemTag
from .terms import (
    App,
    Lam,
    NatT,
    Pi,
    RecT,
    Sort,
    SuccT,
    Term,
    Var,
    ZeroT,
    apply_spine,
    occurs_free,
    shift,
    spine,
    substitute,
)

# nested numerals and compiled terms recurse once per constructor layer
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


@dataclass(frozen=True)
class NormalForm:
    term: Term
    steps: int
    eta_applied: bool = False


class NormalFormCache:
    """Thread-safe memo of normal forms keyed on (term, system, strategy, eta)."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._entries: dict[tuple[Any, ...], NormalForm] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: tuple[Any, ...]) -> Optional[NormalForm]:
        with self._lock:
            found = self._entries.get(key)
            if found is None:
                self.misses += 1
            else:
                self.hits += 1
            return found

    def put(self, key: tuple[Any, ...], value: NormalForm) -> None:
        with self._lock:
            self._entries[key] = value

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


class Reducer:
    """Fuel-bounded β (and, for System T, recursor) reduction."""

    def __init__(self, system: SystemTag, fuel: int = DEFAULT_FUEL):
        self.system = system
        self.fuel = fuel
        self.steps = 0

    def _tick(self) -> None:
        if self.steps >= self.fuel:
            raise FuelExhaustedError(self.fuel, self.steps)
        self.steps += 1

    # leftmost-outermost

    def whnf(self, t: Term) -> Term:
        while True:
            head, args = spine(t)
            if isinstance(head, Lam) and args:
                self._tick()
                t = apply_spine(substitute(head.body, 0, args[0]), args[1:])
                continue
            if self.system is SystemTag.T and isinstance(head, RecT) and len(args) >= 3:
                base, step, scrutinee = args[0], args[1], args[2]
                if not is_constructor_form(scrutinee):
                    base = self.normal(base)
                    step = self.normal(step)
                    scrutinee = self.whnf(scrutinee)
                    if not is_constructor_form(scrutinee):
                        return apply_spine(head, [base, step, self.normal(scrutinee), *args[3:]])
                self._tick()
                t = apply_spine(contract_recursor(head, base, step, scrutinee), args[3:])
                continue
            return t

    def normal(self, t: Term) -> Term:
        t = self.whnf(t)
        if isinstance(t, Lam):
            return Lam(t.name, self.normal(t.ty), self.normal(t.body))
        if isinstance(t, Pi):
            return Pi(t.name, self.normal(t.dom), self.normal(t.cod))
        head, args = spine(t)
        if isinstance(head, RecT):
            head = RecT(self.normal(head.ty))
        elif isinstance(head, Pi):
            head = self.normal(head)
        return apply_spine(head, [self.normal(arg) for arg in args])

    # rightmost-innermost

    def innermost(self, t: Term) -> Term:
        if isinstance(t, App):
            arg = self.innermost(t.arg)
            fn = self.innermost(t.fn)
            if isinstance(fn, Lam):
                self._tick()
                return self.innermost(substitute(fn.body, 0, arg))
            node = App(fn, arg)
            if self.system is SystemTag.T:
                contracted = step_recursor(node)
                if contracted is not None:
                    self._tick()
                    return self.innermost(contracted)
            return node
        if isinstance(t, Lam):
            body = self.innermost(t.body)
            return Lam(t.name, self.innermost(t.ty), body)
        if isinstance(t, Pi):
            cod = self.innermost(t.cod)
            return Pi(t.name, self.innermost(t.dom), cod)
        if isinstance(t, RecT):
            return RecT(self.innermost(t.ty))
        return t

    def run(self, t: Term, strategy: Strategy) -> Term:
        if strategy is Strategy.RIGHTMOST_INNERMOST:
            return self.innermost(t)
        return self.normal(t)


def eta_reduce(t: Term) -> Term:
    """Contract every ``fun x:T. f x`` with x not free in f, bottom-up."""
    if isinstance(t, Lam):
        ty = eta_reduce(t.ty)
        body = eta_reduce(t.body)
        if isinstance(body, App) and body.arg == Var(0) and not occurs_free(body.fn, 0):
            return shift(body.fn, -1)
        return Lam(t.name, ty, body)
    if isinstance(t, App):
        return App(eta_reduce(t.fn), eta_reduce(t.arg))
    if isinstance(t, Pi):
        return Pi(t.name, eta_reduce(t.dom), eta_reduce(t.cod))
    if isinstance(t, RecT):
        return RecT(eta_reduce(t.ty))
    return t


def normalize(
    t: Term,
    system: SystemTag = SystemTag.F,
    fuel: int = DEFAULT_FUEL,
    eta: bool = False,
    *,
    strategy: Strategy = Strategy.LEFTMOST_OUTERMOST,
    cache: Optional[NormalFormCache] = None,
    logger: Optional[JsonlLogger] = None,
) -> NormalForm:
    system = SystemTag.parse(system)
    strategy = Strategy.parse(strategy)
    key = (t, system, strategy, eta)
    if cache is not None:
        cached = cache.get(key)
        if cached is not None:
            if cached.steps > fuel:
                raise FuelExhaustedError(fuel, fuel)
            return cached

    reducer = Reducer(system, fuel)
    try:
        result = reducer.run(t, strategy)
    except FuelExhaustedError as exc:
        log_event(
            logger,
            "fuel_exhausted",
            system=system.value,
            reason="fuel",
            data={"strategy": strategy.value},
            res={"fuel": exc.fuel, "steps": exc.steps},
        )
        raise
    if eta:
        result = eta_reduce(result)

    normal_form = NormalForm(result, reducer.steps, eta)
    if cache is not None:
        cache.put(key, normal_form)
    log_event(
        logger,
        "normalize_done",
        system=system.value,
        reason="normal",
        data={"strategy": strategy.value, "eta": eta},
        res={"steps": reducer.steps},
    )
    return normal_form


def is_normal(t: Term, system: SystemTag, fuel: int = DEFAULT_FUEL) -> bool:
    return normalize(t, system, fuel).steps == 0


def classify_shape(t: Term) -> ShapeKind:
    if isinstance(t, Lam):
        return ShapeKind.ABSTRACTION
    if isinstance(t, Pi):
        return ShapeKind.PRODUCT
    head, _ = spine(t)
    if isinstance(head, (Var, Sort, NatT, ZeroT, SuccT, RecT)):
        return ShapeKind.ATOMIC
    return ShapeKind.OTHER
