"""Deterministic term corpora for the property sweeps.

Every generated term has type Nat in its context. Open terms live in
``[y:Nat]`` so that normal non-numerals exist.
"""

from __future__ import annotations

import random
from typing import Callable

from .calculus import numeral, probe
from .compile.represent import compile_prf
from .errors import FuelExhaustedError
from .kernel.reduce import normalize
from .kernel.terms import NAT, NAT_F, PROP, SUCC, App, Context, Lam, Pi, RecT, Term, Var, apply_spine, nat_type
from .prf.stdlib import ADD, MONUS, MULT, PRED, SGN
from .systemf.numerals import SUCC_F
from .systemt.numerals import KEEP_ACCUMULATOR
from .types import SystemTag

MAX_NUMERAL = 3
# terms beyond this many steps are dropped from corpora
STEP_CEILING = 5_000

CorpusEntry = tuple[Context, Term]


def open_context(system: SystemTag) -> Context:
    return Context((("y", nat_type(system)),), system)


def _succ(system: SystemTag) -> Term:
    return SUCC_F if system is SystemTag.F else SUCC


# fun k:Nat. fun r:Nat. S r
COUNT_UP: Term = Lam("k", NAT, Lam("r", NAT, App(SUCC, Var(0, "r"))))


class _Generator:
    def __init__(self, system: SystemTag, rng: random.Random):
        self._system = system
        self._rng = rng
        self._binary = [compile_prf(f, system).term for f in (ADD, MONUS, MULT)]
        self._unary = [compile_prf(f, system).term for f in (PRED, SGN)]

    def nat(self, depth: int, scope: int) -> Term:
        """A term of type Nat under ``scope`` Nat-typed variables."""
        rng = self._rng
        leaves: list[Callable[[], Term]] = [lambda: numeral(rng.randint(0, MAX_NUMERAL), self._system)]
        if scope:
            leaves.append(lambda: Var(rng.randrange(scope), "v"))
        if depth <= 0:
            return rng.choice(leaves)()

        def successor() -> Term:
            return App(_succ(self._system), self.nat(depth - 1, scope))

        def unary() -> Term:
            return App(rng.choice(self._unary), self.nat(depth - 1, scope))

        def binary() -> Term:
            return apply_spine(rng.choice(self._binary), [self.nat(depth - 1, scope), self.nat(depth - 1, scope)])

        def redex() -> Term:
            body = self.nat(depth - 1, scope + 1)
            return App(Lam("z", nat_type(self._system), body), self.nat(depth - 1, scope))

        def probed() -> Term:
            return probe(self.nat(depth - 1, scope), self._system)

        def iterate() -> Term:
            if self._system is SystemTag.F:
                return apply_spine(self.nat(depth - 1, scope), [NAT_F, self.nat(depth - 1, scope), SUCC_F])
            return apply_spine(RecT(NAT), [self.nat(depth - 1, scope), COUNT_UP, self.nat(depth - 1, scope)])

        builders = [*leaves, successor, unary, binary, redex, probed, iterate]
        return rng.choice(builders)()


def well_typed_corpus(system: SystemTag, size: int, *, seed: int = 0, max_depth: int = 3) -> list[CorpusEntry]:
    """Closed and open (in [y:Nat]) Nat-typed terms, normalizable within STEP_CEILING."""
    rng = random.Random(seed)
    generator = _Generator(system, rng)
    closed = Context((), system)
    opened = open_context(system)
    entries: list[CorpusEntry] = []
    while len(entries) < size:
        use_open = rng.random() < 0.3
        ctx = opened if use_open else closed
        term = generator.nat(rng.randint(0, max_depth), len(ctx))
        try:
            normalize(term, system, STEP_CEILING)
        except FuelExhaustedError:
            continue
        entries.append((ctx, term))
    return entries


def _stuck_shapes(system: SystemTag, k: int) -> list[Term]:
    y = Var(0, "y")
    if system is SystemTag.T:
        stuck = apply_spine(RecT(NAT), [numeral(k, system), COUNT_UP, y])
        shapes: list[Term] = [y, stuck]
        body: Term = y
        for _ in range(k):
            body = App(SUCC, body)
            stuck = App(SUCC, stuck)
        shapes += [body, stuck, apply_spine(RecT(NAT), [numeral(0, system), KEEP_ACCUMULATOR, body])]
        return shapes
    # under fun P x f, with y shifted past the three binders
    y3 = Var(3, "y")
    p, x, f = Var(2, "P"), Var(1, "x"), Var(0, "f")
    inner: Term = apply_spine(y3, [p, x, f])
    seeded: Term = x
    for _ in range(k):
        inner = App(f, inner)
        seeded = App(f, seeded)
    shapes = [y, apply_spine(y3, [p, seeded, f]), inner, apply_spine(y3, [p, x, Lam("z", Var(2, "P"), Var(2, "x"))])]
    return [s if s is y else _church_wrap(s) for s in shapes]


def _church_wrap(body: Term) -> Term:
    return Lam("P", PROP, Lam("x", Var(0, "P"), Lam("f", Pi("_", Var(1, "P"), Var(2, "P")), body)))


def normal_nat_corpus(system: SystemTag, size: int, *, seed: int = 0) -> list[CorpusEntry]:
    """Normal terms of type Nat: numerals, normal forms of generated terms, and stuck open shapes."""
    entries: list[CorpusEntry] = []
    closed = Context((), system)
    opened = open_context(system)
    for n in range(0, 20):
        entries.append((closed, numeral(n, system)))
    for k in range(0, 6):
        for shape in _stuck_shapes(system, k):
            entries.append((opened, normalize(shape, system, STEP_CEILING).term))
    for ctx, term in well_typed_corpus(system, size, seed=seed):
        if len(entries) >= size:
            break
        entries.append((ctx, normalize(term, system, STEP_CEILING).term))
    return entries
