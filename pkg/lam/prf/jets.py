"""Native accelerators for named library functions.

Each entry computes exactly what the primitive recursive definition of the
same name computes, including its conventions at 0 and 1.
"""

from __future__ import annotations

from typing import Callable

import sympy


def _nth_prime(n: int) -> int:
    # q(0) = 1, q(n) = n-th prime with q(1) = 2
    return int(sympy.prime(n)) if n >= 1 else 1


def _rem(d: int, x: int) -> int:
    return x % d if d else x


def _divides(d: int, x: int) -> int:
    return 1 if _rem(d, x) == 0 else 0


def _tpow(p: int, x: int, e: int) -> int:
    # min(p^e, x + 1) without building p^e
    cap = x + 1
    acc = 1
    for _ in range(e):
        acc = min(acc * p, cap)
        if acc in (0, cap):
            break
    return acc


def _bounded_mu_next_prime(p: int, b: int) -> int:
    for z in range(p + 1, b):
        if sympy.isprime(z):
            return z
    return b


def _alpha(x: int, n: int) -> int:
    if x == 0:
        return 0
    if n == 0:
        return x
    return int(sympy.multiplicity(_nth_prime(n), x))


def _ndiv(z: int) -> int:
    if z == 0:
        return 0
    return int(sympy.divisor_count(z))


JETS: dict[str, Callable[..., int]] = {
    "pred": lambda x: max(x - 1, 0),
    "monus": lambda x, y: max(x - y, 0),
    "sgn": lambda x: 1 if x > 0 else 0,
    "add": lambda x, y: x + y,
    "mult": lambda x, y: x * y,
    "pow": lambda x, y: x**y,
    "equal": lambda x, y: 0 if x == y else 1,
    "rem": _rem,
    "divides": _divides,
    "min": min,
    "ndiv": _ndiv,
    "is_prime": lambda z: 1 if sympy.isprime(z) else 0,
    "bounded_mu": _bounded_mu_next_prime,
    "next_prime": lambda p: int(sympy.nextprime(p)),
    "nth_prime": _nth_prime,
    "tpow": _tpow,
    "alpha": _alpha,
}
