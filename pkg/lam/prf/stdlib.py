"""Arithmetic library built from the five constructors.

Every entry is wrapped in ``Named`` so that evaluators may substitute a
native accelerator; compilation and the reference evaluator look through
the label.
"""

from __future__ import annotations

from functools import lru_cache

from .expr import Comp, Named, PrfExpr, PrimRec, Proj, Succ, Zero

Z = Zero()
S = Succ()


def proj(index: int, n: int) -> Proj:
    return Proj(index, n)


def comp(outer: PrfExpr, *inners: PrfExpr, arity: int | None = None) -> Comp:
    return Comp(outer, tuple(inners), arity)


def rec(base: PrfExpr, step: PrfExpr) -> PrimRec:
    return PrimRec(base, step)


def const(value: int, arity: int) -> PrfExpr:
    """The ``arity``-ary function constantly equal to ``value``."""
    closed: PrfExpr = Z
    for _ in range(value):
        closed = comp(S, closed)
    if arity == 0:
        return closed
    return comp(closed, arity=arity)


PRED = Named("pred", rec(Z, proj(1, 2)))
ADD = Named("add", rec(proj(1, 1), comp(S, proj(3, 3))))
MONUS = Named("monus", rec(proj(1, 1), comp(PRED, proj(3, 3))))
SGN = Named("sgn", rec(Z, const(1, 2)))
MULT = Named("mult", rec(const(0, 1), comp(ADD, proj(3, 3), proj(1, 3))))
POW = Named("pow", rec(const(1, 1), comp(MULT, proj(3, 3), proj(1, 3))))
CONST1 = Named("const1", const(1, 0))

# sgn((x - y) + (y - x))
EQUAL = Named(
    "equal",
    comp(SGN, comp(ADD, comp(MONUS, proj(1, 2), proj(2, 2)), comp(MONUS, proj(2, 2), proj(1, 2)))),
)

# rem(d, x): remainder of x by d, by counting up and resetting at d
REM = Named(
    "rem",
    rec(
        const(0, 1),
        comp(MULT, comp(S, proj(3, 3)), comp(EQUAL, comp(S, proj(3, 3)), proj(1, 3))),
    ),
)
DIVIDES = Named("divides", comp(MONUS, const(1, 2), REM))
MIN = Named("min", comp(MONUS, proj(1, 2), comp(MONUS, proj(1, 2), proj(2, 2))))

# number of divisors of z in 1..b
_DIVISOR_COUNT = rec(
    const(0, 1),
    comp(ADD, proj(3, 3), comp(DIVIDES, comp(S, proj(2, 3)), proj(1, 3))),
)
NDIV = Named("ndiv", comp(_DIVISOR_COUNT, proj(1, 1), proj(1, 1)))
IS_PRIME = Named("is_prime", comp(MONUS, const(1, 1), comp(EQUAL, NDIV, const(2, 1))))


def bounded_mu(predicate: PrfExpr) -> PrfExpr:
    """From p of arity n+1, the function (x..., b) -> least z < b with p(x..., z) = 0, else b."""
    n = predicate.arity - 1
    if n < 0:
        raise ValueError("bounded minimization needs a predicate of arity >= 1")
    width = n + 2
    r = proj(width, width)
    k = proj(n + 1, width)
    at_k = comp(predicate, *(proj(i, width) for i in range(1, n + 2)))
    still_searching = comp(MONUS, const(1, width), comp(EQUAL, r, k))
    step = comp(ADD, r, comp(MULT, still_searching, comp(SGN, at_k)))
    return rec(const(0, n), step)


# zero exactly when z is a prime above p
_PRIME_ABOVE = comp(
    ADD,
    comp(MONUS, const(1, 2), comp(IS_PRIME, proj(2, 2))),
    comp(MONUS, const(1, 2), comp(MONUS, proj(2, 2), proj(1, 2))),
)
BOUNDED_MU = Named("bounded_mu", bounded_mu(_PRIME_ABOVE))

# Bertrand: a prime lies in (p, 2p + 2)
NEXT_PRIME = Named(
    "next_prime",
    comp(BOUNDED_MU, proj(1, 1), comp(S, comp(S, comp(ADD, proj(1, 1), proj(1, 1))))),
)
NTH_PRIME = Named("nth_prime", rec(CONST1, comp(NEXT_PRIME, proj(2, 2))))

# tpow(p, x, e) = min(p^e, x + 1)
TPOW = Named(
    "tpow",
    rec(const(1, 2), comp(MIN, comp(MULT, proj(4, 4), proj(1, 4)), comp(S, proj(2, 4)))),
)

# number of e in 1..b such that nth_prime(n)^e divides x
_PRIME_POWER_COUNT = rec(
    const(0, 2),
    comp(
        ADD,
        proj(4, 4),
        comp(DIVIDES, comp(TPOW, comp(NTH_PRIME, proj(2, 4)), proj(1, 4), comp(S, proj(3, 4))), proj(1, 4)),
    ),
)
ALPHA = Named("alpha", comp(_PRIME_POWER_COUNT, proj(1, 2), proj(2, 2), proj(1, 2)))

_ENTRIES: tuple[Named, ...] = (
    PRED,
    MONUS,
    SGN,
    ADD,
    MULT,
    POW,
    CONST1,
    EQUAL,
    REM,
    DIVIDES,
    MIN,
    NDIV,
    IS_PRIME,
    BOUNDED_MU,
    NEXT_PRIME,
    NTH_PRIME,
    TPOW,
    ALPHA,
)


@lru_cache(maxsize=1)
def _table() -> dict[str, Named]:
    return {entry.name: entry for entry in _ENTRIES}


def stdlib() -> dict[str, PrfExpr]:
    return dict(_table())


def lookup(name: str) -> PrfExpr:
    table = _table()
    key = name.lower()
    if key not in table:
        raise KeyError(f"unknown library function: {name!r}")
    return table[key]
