"""S-polynomials, multivariate division and Buchberger's criterion."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .ring import (CONCA_LEX, Monomial, MonomialOrder, Polynomial, get_order,
                   mono_div, mono_divides, mono_lcm)


def leading_monomial(p: Polynomial, order: MonomialOrder | str = CONCA_LEX) -> Monomial:
    if not p.terms:
        raise ValueError("the zero polynomial has no leading term")
    return get_order(order).leading(p.terms)


def leading_term(p: Polynomial, order: MonomialOrder | str = CONCA_LEX) -> tuple[Monomial, Fraction]:
    m = leading_monomial(p, order)
    return m, p.terms[m]


def _shift(p: Polynomial, m: Monomial, c: Fraction) -> dict:
    return {tuple(a + b for a, b in zip(u, m)): x * c for u, x in p.terms.items()}


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | str = CONCA_LEX) -> Polynomial:
    """lc(g) (h/lm f) f - lc(f) (h/lm g) g with h = lcm of the leading monomials.

    This cross-multiplied form stays integral for integral inputs; it is a
    nonzero multiple of the textbook monic version.
    """
    order = get_order(order)
    if not f.terms or not g.terms:
        raise ValueError("S-polynomials need nonzero inputs")
    mf, cf = leading_term(f, order)
    mg, cg = leading_term(g, order)
    h = mono_lcm(mf, mg)
    out = _shift(f, mono_div(h, mf), cg)
    for u, x in _shift(g, mono_div(h, mg), -cf).items():
        v = out.get(u, 0) + x
        if v:
            out[u] = v
        else:
            out.pop(u, None)
    return Polynomial(f.ring, out)


def reduce(p: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | str = CONCA_LEX) -> Polynomial:
    """Remainder of p on division by G; the first divisor in list order wins.

    The result has no term divisible by any leading monomial of G.  Inputs
    must be homogeneous, which guarantees termination for either order.
    """
    order = get_order(order)
    if not p.is_homogeneous() or not all(g.is_homogeneous() for g in G):
        raise ValueError("reduce works on homogeneous polynomials")
    leads = [leading_term(g, order) for g in G if g.terms]
    divisors = [g for g in G if g.terms]
    rest = dict(p.terms)
    remainder = {}
    while rest:
        m = order.leading(rest)
        c = rest[m]
        for g, (mg, cg) in zip(divisors, leads):
            if mono_divides(mg, m):
                q = mono_div(m, mg)
                factor = c / cg
                for u, x in g.terms.items():
                    key = tuple(a + b for a, b in zip(u, q))
                    v = rest.get(key, 0) - factor * x
                    if v:
                        rest[key] = v
                    else:
                        rest.pop(key, None)
                break
        else:
            remainder[m] = rest.pop(m)
    return Polynomial(p.ring, remainder)


@dataclass
class GroebnerReport:
    pairs_checked: int = 0
    skipped_coprime: int = 0
    skipped_degree: int = 0
    failures: list[tuple[int, int]] = field(default_factory=list)
    remainders: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"pairs_checked": self.pairs_checked,
                "skipped_coprime": self.skipped_coprime,
                "skipped_degree": self.skipped_degree,
                "failures": [list(f) for f in self.failures]}


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder | str = CONCA_LEX,
                degree_cap: int | None = None,
                use_coprime_criterion: bool = False) -> GroebnerReport:
    """Buchberger's criterion: every S-polynomial reduces to zero modulo G.

    With ``use_coprime_criterion`` pairs whose leading monomials share no
    variable are skipped (their S-polynomials always reduce to zero); by
    default every pair is reduced.  ``degree_cap`` skips pairs whose lcm of
    leading monomials has larger degree, which turns the check into a
    truncated one; skipped pairs are counted in the report.
    """
    order = get_order(order)
    G = [g for g in G if g.terms]
    leads = [leading_monomial(g, order) for g in G]
    report = GroebnerReport()
    for i, j in combinations(range(len(G)), 2):
        if use_coprime_criterion and not any(a and b for a, b in zip(leads[i], leads[j])):
            report.skipped_coprime += 1
            continue
        if degree_cap is not None and sum(map(max, leads[i], leads[j])) > degree_cap:
            report.skipped_degree += 1
            continue
        report.pairs_checked += 1
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if r.terms:
            report.failures.append((i, j))
            report.remainders[(i, j)] = r
    return report
