from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..errors import ArityError


@dataclass(frozen=True)
class Zero:
    @property
    def arity(self) -> int:
        return 0


@dataclass(frozen=True)
class Succ:
    @property
    def arity(self) -> int:
        return 1


@dataclass(frozen=True)
class Proj:
    index: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.index <= self.n:
            raise ArityError(f"projection index {self.index} out of range 1..{self.n}")

    @property
    def arity(self) -> int:
        return self.n


@dataclass(frozen=True)
class Comp:
    outer: PrfExpr
    inners: tuple[PrfExpr, ...] = ()
    n: Optional[int] = field(default=None)

    def __post_init__(self) -> None:
        object.__setattr__(self, "inners", tuple(self.inners))
        if self.outer.arity != len(self.inners):
            raise ArityError(
                f"composition of a {self.outer.arity}-ary function with {len(self.inners)} inner functions"
            )
        arities = {inner.arity for inner in self.inners}
        if len(arities) > 1:
            raise ArityError(f"inner functions disagree on arity: {sorted(arities)}")
        if arities:
            (common,) = arities
            if self.n is not None and self.n != common:
                raise ArityError(f"explicit arity {self.n} differs from inner arity {common}")
            object.__setattr__(self, "n", common)
        elif self.n is None:
            raise ArityError("composition without inner functions needs an explicit arity")
        elif self.n < 0:
            raise ArityError(f"negative arity {self.n}")

    @property
    def arity(self) -> int:
        return int(self.n or 0)


@dataclass(frozen=True)
class PrimRec:
    base: PrfExpr
    step: PrfExpr

    def __post_init__(self) -> None:
        if self.step.arity != self.base.arity + 2:
            raise ArityError(
                f"recursion step has arity {self.step.arity}, expected {self.base.arity + 2}"
            )

    @property
    def arity(self) -> int:
        return self.base.arity + 1


@dataclass(frozen=True)
class Named:
    """A labelled function; semantically identical to its body."""

    name: str
    body: PrfExpr

    @property
    def arity(self) -> int:
        return self.body.arity


PrfExpr = Union[Zero, Succ, Proj, Comp, PrimRec, Named]


def unwrap(f: PrfExpr) -> PrfExpr:
    while isinstance(f, Named):
        f = f.body
    return f


def depth(f: PrfExpr) -> int:
    if isinstance(f, Named):
        return depth(f.body)
    if isinstance(f, Comp):
        return 1 + max([depth(f.outer), *(depth(g) for g in f.inners)])
    if isinstance(f, PrimRec):
        return 1 + max(depth(f.base), depth(f.step))
    return 0
