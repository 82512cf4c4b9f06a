from __future__ import annotations

from typing import Sequence

import sympy

from .evaluate import eval_prf
from .stdlib import ALPHA


def encode_sequence(values: Sequence[int]) -> int:
    """Code a_1..a_n as 2^a_1 * 3^a_2 * ... * p_n^a_n."""
    code = 1
    for position, value in enumerate(values, start=1):
        if value < 0:
            raise ValueError(f"sequence entries must be natural numbers, got {value}")
        code *= int(sympy.prime(position)) ** int(value)
    return code


def decode_sequence(code: int, length: int, *, jets: bool = True) -> list[int]:
    return [eval_prf(ALPHA, [code, position], jets=jets) for position in range(1, length + 1)]
