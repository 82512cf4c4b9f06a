from __future__ import annotations

from enum import Enum


class SystemTag(str, Enum):
    F = "f"
    T = "t"

    @classmethod
    def parse(cls, raw: str | SystemTag) -> SystemTag:
        if isinstance(raw, SystemTag):
            return raw
        value = str(raw).strip().lower()
        for tag in cls:
            if tag.value == value:
                return tag
        raise ValueError(f"unknown system tag: {raw!r} (expected 'f' or 't')")


class Strategy(str, Enum):
    LEFTMOST_OUTERMOST = "leftmost-outermost"
    RIGHTMOST_INNERMOST = "rightmost-innermost"

    @classmethod
    def parse(cls, raw: str | Strategy) -> Strategy:
        if isinstance(raw, Strategy):
            return raw
        value = str(raw).strip().lower()
        for strategy in cls:
            if strategy.value == value:
                return strategy
        raise ValueError(f"unknown strategy: {raw!r}")


class ShapeKind(str, Enum):
    ABSTRACTION = "abstraction"
    PRODUCT = "product"
    ATOMIC = "atomic"
    OTHER = "other"


class VerdictStatus(str, Enum):
    FOUND = "found"
    EXHAUSTED_BOUND = "exhausted_bound"
