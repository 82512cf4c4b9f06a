"""Nameless term representation shared by System F and System T.

Variables are de Bruijn indices; binder names are kept only as printing
hints and never take part in equality, so ``==`` on terms is equality up
to renaming of bound variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from ..types import SystemTag


@dataclass(frozen=True, slots=True)
class Sort:
    """The sort ``Prop``."""


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    name: str = field(default="", compare=False)


@dataclass(frozen=True, slots=True)
class App:
    fn: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Lam:
    name: str = field(compare=False)
    ty: Term
    body: Term


@dataclass(frozen=True, slots=True)
class Pi:
    name: str = field(compare=False)
    dom: Term
    cod: Term


@dataclass(frozen=True, slots=True)
class NatT:
    pass


@dataclass(frozen=True, slots=True)
class ZeroT:
    pass


@dataclass(frozen=True, slots=True)
class SuccT:
    pass


@dataclass(frozen=True, slots=True)
class RecT:
    ty: Term


Term = Union[Sort, Var, App, Lam, Pi, NatT, ZeroT, SuccT, RecT]

PROP = Sort()
NAT = NatT()
ZERO = ZeroT()
SUCC = SuccT()

# Pi P:Prop. P -> (P -> P) -> P
NAT_F: Term = Pi("P", PROP, Pi("x", Var(0, "P"), Pi("f", Pi("_", Var(1, "P"), Var(2, "P")), Var(2, "P"))))


def alpha_equal(t1: Term, t2: Term) -> bool:
    return t1 == t2


def shift(t: Term, by: int, cutoff: int = 0) -> Term:
    if by == 0:
        return t
    return _shift(t, by, cutoff)


def _shift(t: Term, by: int, cutoff: int) -> Term:
    if isinstance(t, Var):
        if t.index < cutoff:
            return t
        if t.index + by < 0:
            raise ValueError(f"shift would produce a negative index from {t.index} by {by}")
        return Var(t.index + by, t.name)
    if isinstance(t, App):
        return App(_shift(t.fn, by, cutoff), _shift(t.arg, by, cutoff))
    if isinstance(t, Lam):
        return Lam(t.name, _shift(t.ty, by, cutoff), _shift(t.body, by, cutoff + 1))
    if isinstance(t, Pi):
        return Pi(t.name, _shift(t.dom, by, cutoff), _shift(t.cod, by, cutoff + 1))
    if isinstance(t, RecT):
        return RecT(_shift(t.ty, by, cutoff))
    return t


def substitute(t: Term, target: int, replacement: Term) -> Term:
    """Replace variable ``target`` by ``replacement`` and remove its binder.

    ``replacement`` lives in the context outside the removed binder; indices
    above ``target`` move down by one.
    """

    def go(node: Term, depth: int) -> Term:
        if isinstance(node, Var):
            k = target + depth
            if node.index == k:
                return shift(replacement, k)
            if node.index > k:
                return Var(node.index - 1, node.name)
            return node
        if isinstance(node, App):
            return App(go(node.fn, depth), go(node.arg, depth))
        if isinstance(node, Lam):
            return Lam(node.name, go(node.ty, depth), go(node.body, depth + 1))
        if isinstance(node, Pi):
            return Pi(node.name, go(node.dom, depth), go(node.cod, depth + 1))
        if isinstance(node, RecT):
            return RecT(go(node.ty, depth))
        return node

    return go(t, 0)


def free_indices(t: Term) -> set[int]:
    found: set[int] = set()

    def go(node: Term, depth: int) -> None:
        if isinstance(node, Var):
            if node.index >= depth:
                found.add(node.index - depth)
        elif isinstance(node, App):
            go(node.fn, depth)
            go(node.arg, depth)
        elif isinstance(node, Lam):
            go(node.ty, depth)
            go(node.body, depth + 1)
        elif isinstance(node, Pi):
            go(node.dom, depth)
            go(node.cod, depth + 1)
        elif isinstance(node, RecT):
            go(node.ty, depth)

    go(t, 0)
    return found


def occurs_free(t: Term, index: int) -> bool:
    return index in free_indices(t)


def is_closed(t: Term, depth: int = 0) -> bool:
    return all(index < depth for index in free_indices(t))


def spine(t: Term) -> tuple[Term, list[Term]]:
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def apply_spine(head: Term, args: Iterable[Term]) -> Term:
    for arg in args:
        head = App(head, arg)
    return head


def arrow(dom: Term, cod: Term) -> Term:
    """Non-dependent product ``dom -> cod`` with ``cod`` given in the outer scope."""
    return Pi("_", dom, shift(cod, 1))


def arrows(doms: Sequence[Term], cod: Term) -> Term:
    result = cod
    for dom in reversed(doms):
        result = arrow(dom, result)
    return result


def nat_type(system: SystemTag) -> Term:
    return NAT_F if system is SystemTag.F else NAT


def uses_t_constructors(t: Term) -> bool:
    if isinstance(t, (NatT, ZeroT, SuccT, RecT)):
        return True
    if isinstance(t, App):
        return uses_t_constructors(t.fn) or uses_t_constructors(t.arg)
    if isinstance(t, Lam):
        return uses_t_constructors(t.ty) or uses_t_constructors(t.body)
    if isinstance(t, Pi):
        return uses_t_constructors(t.dom) or uses_t_constructors(t.cod)
    return False


def uses_sort(t: Term) -> bool:
    if isinstance(t, Sort):
        return True
    if isinstance(t, App):
        return uses_sort(t.fn) or uses_sort(t.arg)
    if isinstance(t, Lam):
        return uses_sort(t.ty) or uses_sort(t.body)
    if isinstance(t, Pi):
        return uses_sort(t.dom) or uses_sort(t.cod)
    if isinstance(t, RecT):
        return uses_sort(t.ty)
    return False


@dataclass(frozen=True)
class Context:
    """Ordered declarations, oldest first; index 0 refers to the last entry."""

    entries: tuple[tuple[str, Term], ...] = ()
    system: SystemTag = SystemTag.F

    def __len__(self) -> int:
        return len(self.entries)

    def extend(self, name: str, ty: Term) -> Context:
        return Context(self.entries + ((name, ty),), self.system)

    def lookup(self, index: int) -> Term:
        if index < 0 or index >= len(self.entries):
            raise IndexError(f"variable #{index} is not declared in a context of length {len(self.entries)}")
        _, ty = self.entries[len(self.entries) - 1 - index]
        return shift(ty, index + 1)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.entries]


def empty_context(system: SystemTag) -> Context:
    return Context((), system)
