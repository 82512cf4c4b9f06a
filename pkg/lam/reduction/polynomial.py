from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
import re
from typing import Any, Mapping, Optional, Sequence

import orjson
import sympy
import yaml

from ..errors import ArityError


@dataclass(frozen=True)
class Monomial:
    coeff: int
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))
        if self.coeff < 0 or any(e < 0 for e in self.exps):
            raise ValueError("coefficients and exponents must be natural numbers")


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    monomials: tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "monomials", tuple(self.monomials))
        if self.nvars < 0:
            raise ValueError(f"negative number of variables: {self.nvars}")
        for monomial in self.monomials:
            if len(monomial.exps) != self.nvars:
                raise ArityError(f"monomial has {len(monomial.exps)} exponents, polynomial has {self.nvars} variables")


def eval_polynomial(p: Polynomial, values: Sequence[int]) -> int:
    if len(values) != p.nvars:
        raise ArityError(f"polynomial in {p.nvars} variables evaluated at {len(values)} values")
    total = 0
    for monomial in p.monomials:
        term = monomial.coeff
        for value, exp in zip(values, monomial.exps):
            term *= int(value) ** exp
        total += term
    return total


def constant(value: int, nvars: int) -> Polynomial:
    return Polynomial(nvars, (Monomial(value, (0,) * nvars),))


def polynomial_from_dict(raw: Mapping[str, Any]) -> Polynomial:
    if "nvars" not in raw:
        raise KeyError("missing polynomial key: nvars")
    nvars = int(raw["nvars"])
    monomials = tuple(
        Monomial(int(item["coeff"]), tuple(int(e) for e in item["exps"])) for item in raw.get("monomials", [])
    )
    return Polynomial(nvars, monomials)


def polynomial_to_dict(p: Polynomial) -> dict[str, Any]:
    return {
        "nvars": p.nvars,
        "monomials": [{"coeff": m.coeff, "exps": list(m.exps)} for m in p.monomials],
    }


_VAR_RE = re.compile(r"x([0-9]+)\Z")


def polynomial_from_expression(text: str, nvars: Optional[int] = None) -> Polynomial:
    """Read a polynomial written over x1..xn, e.g. ``"x1*x2 + 3"``."""
    try:
        expr = sympy.sympify(text)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ValueError(f"cannot read polynomial {text!r}: {exc}") from exc
    indices = []
    for symbol in expr.free_symbols:
        match = _VAR_RE.match(str(symbol))
        if match is None or int(match.group(1)) < 1:
            raise ValueError(f"unexpected symbol {symbol} (variables are x1, x2, ...)")
        indices.append(int(match.group(1)))
    width = max(indices, default=0)
    if nvars is None:
        nvars = width
    elif width > nvars:
        raise ArityError(f"expression uses x{width} but nvars is {nvars}")
    if nvars == 0:
        value = sympy.Integer(expr) if expr.is_Integer else None
        if value is None or value < 0:
            raise ValueError(f"not a natural constant: {text!r}")
        return constant(int(value), 0)
    symbols = sympy.symbols(f"x1:{nvars + 1}")
    try:
        poly = sympy.Poly(expr, *symbols)
    except sympy.PolynomialError as exc:
        raise ValueError(f"not a polynomial: {text!r}") from exc
    monomials = []
    for exps, coeff in poly.terms():
        if coeff == 0:
            continue
        if not coeff.is_Integer or coeff < 0:
            raise ValueError(f"coefficients must be natural numbers, got {coeff}")
        monomials.append(Monomial(int(coeff), tuple(int(e) for e in exps)))
    return Polynomial(nvars, tuple(monomials))


def load_polynomial(path: str, nvars: Optional[int] = None) -> Polynomial:
    """Read a polynomial from JSON, YAML or a plain expression file."""
    source = Path(path)
    text = source.read_text(encoding="utf-8")
    suffix = source.suffix.lower()
    if suffix == ".json":
        return polynomial_from_dict(orjson.loads(text))
    if suffix in (".yaml", ".yml"):
        return polynomial_from_dict(yaml.safe_load(text) or {})
    return polynomial_from_expression(text.strip(), nvars)
