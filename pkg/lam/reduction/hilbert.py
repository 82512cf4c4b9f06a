from __future__ import annotations

from ..errors import ArityError
from ..prf.expr import PrfExpr
from ..prf.stdlib import ADD, ALPHA, EQUAL, MULT, POW, comp, const, proj
from .polynomial import Monomial, Polynomial


def _monomial_to_prf(monomial: Monomial, nvars: int) -> PrfExpr:
    factors: list[PrfExpr] = []
    if monomial.coeff != 1:
        factors.append(const(monomial.coeff, nvars))
    for index, exp in enumerate(monomial.exps, start=1):
        if exp == 0:
            continue
        variable = proj(index, nvars)
        factors.append(variable if exp == 1 else comp(POW, variable, const(exp, nvars)))
    if not factors:
        return const(1, nvars)
    product = factors[0]
    for factor in factors[1:]:
        product = comp(MULT, product, factor)
    return product


def polynomial_to_prf(p: Polynomial) -> PrfExpr:
    terms = [_monomial_to_prf(m, p.nvars) for m in p.monomials if m.coeff != 0]
    if not terms:
        return const(0, p.nvars)
    total = terms[0]
    for term in terms[1:]:
        total = comp(ADD, total, term)
    return total


def hilbert_to_prf(p: Polynomial, q: Polynomial) -> PrfExpr:
    """The function that is 0 exactly at the solutions of ``p = q``."""
    if p.nvars != q.nvars:
        raise ArityError(f"polynomials disagree on the number of variables: {p.nvars} and {q.nvars}")
    return comp(EQUAL, polynomial_to_prf(p), polynomial_to_prf(q))


def to_one_variable(f: PrfExpr) -> PrfExpr:
    """g(x) = f(alpha(x, 1), ..., alpha(x, n))."""
    n = f.arity
    if n < 1:
        raise ArityError("a function of at least one argument is required")
    exponents = [comp(ALPHA, proj(1, 1), const(i, 1)) for i in range(1, n + 1)]
    return comp(f, *exponents)
