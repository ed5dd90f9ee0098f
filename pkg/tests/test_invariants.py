import math
from itertools import combinations

import pytest
import sympy

from apolarity.apolar import GradedSubspace
from apolarity.invariants import (cubics_6x6, det_poly, form_poly, generator_set,
                                  generators_det, generators_det_contract,
                                  generators_perm, generators_perm_cubic, hafnian_poly,
                                  immanant_poly, minor_poly, minors, perm_poly,
                                  subperm_poly, subpermanents)
from apolarity.ring import apply, to_divided

from helpers import from_words, gen, sym


def symbolic_matrix(ring):
    syms = [sympy.Symbol(f"v{k}") for k in range(ring.nvars)]
    n = ring.n
    return sympy.Matrix(n, n, lambda i, j: syms[ring.var_index(i + 1, j + 1)]), syms


def as_sympy(p, syms):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(
        [s ** e for s, e in zip(syms, m)]) for m, c in p.terms.items())


# -- expansions against sympy ---------------------------------------------------------

@pytest.mark.parametrize("ring", [sym(n) for n in range(1, 6)] + [gen(n) for n in range(1, 5)])
def test_det_and_perm_match_sympy(ring):
    M, syms = symbolic_matrix(ring)
    assert sympy.expand(M.det(method="berkowitz") - as_sympy(det_poly(ring), syms)) == 0
    assert sympy.expand(M.per() - as_sympy(perm_poly(ring), syms)) == 0


def test_two_by_two_forms():
    ring = sym(2)
    assert from_words(ring, "AC - BB") == det_poly(ring)
    assert from_words(ring, "AC + BB") == perm_poly(ring)


def test_symmetric_four_by_four_determinant_has_seventeen_terms():
    ring = sym(4)
    expected = from_words(ring, (
        "ddff - 2*cdfg + ccgg - ddeh + 2*bdgh - aggh + 2*cdei - 2*bdfi - 2*bcgi"
        " + 2*afgi + bbii - aeii - ccej + 2*bcfj - affj - bbhj + aehj"))
    assert det_poly(ring) == expected
    assert len(det_poly(ring).terms) == 17


def test_divided_form_of_four_by_four_determinant():
    ring = sym(4)
    expected = from_words(ring, (
        "4*ddff - 2*cdfg + 4*ccgg - 2*ddeh + 2*bdgh - 2*aggh + 2*cdei - 2*bdfi"
        " - 2*bcgi + 2*afgi + 4*bbii - 2*aeii - 2*ccej + 2*bcfj - 2*affj - 2*bbhj + aehj"))
    assert dict(to_divided(det_poly(ring)).terms) == dict(expected.terms)


@pytest.mark.parametrize("n", range(2, 7))
def test_det_and_perm_share_support(n):
    assert set(det_poly(sym(n)).terms) == set(perm_poly(sym(n)).terms)


# -- hafnians and immanants --------------------------------------------------------------

def test_hafnian_of_four_by_four():
    assert hafnian_poly(sym(4)) == from_words(sym(4), "BI + CG + DF")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hafnian_monomial_count(k):
    h = hafnian_poly(sym(2 * k))
    assert len(h.terms) == math.factorial(2 * k) // (2 ** k * math.factorial(k))
    assert set(h.terms.values()) == {1}


def test_hafnian_rejects_odd_size():
    with pytest.raises(ValueError):
        hafnian_poly(sym(3))


def test_hafnian_rejects_generic_layout():
    with pytest.raises(ValueError):
        hafnian_poly(gen(4))


def test_standard_immanant_generic_three_by_three():
    ring = gen(3)
    # letters run down the columns: a = x11, b = x21, c = x31, d = x12, ...
    cell = {ch: (k % 3 + 1, k // 3 + 1) for k, ch in enumerate("abcdefghi")}
    from apolarity.ring import polynomial_from_letters

    expected = polynomial_from_letters(ring, cell, [(2, "aei"), (-1, "dhc"), (-1, "bfg")])
    assert immanant_poly(ring, (2, 1)) == expected


def test_standard_immanant_symmetric_three_by_three():
    assert immanant_poly(sym(3), (2, 1)) == from_words(sym(3), "2*ADF - 2*BCE")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_extreme_immanants_are_det_and_perm(n):
    for ring in (sym(n), gen(n)):
        assert immanant_poly(ring, (1,) * n) == det_poly(ring)
        assert immanant_poly(ring, (n,)) == perm_poly(ring)


def test_immanant_rejects_wrong_partition():
    with pytest.raises(ValueError):
        immanant_poly(sym(3), (2, 2))


def test_form_dispatch():
    assert form_poly(sym(3), "imm:2,1") == immanant_poly(sym(3), (2, 1))
    with pytest.raises(ValueError):
        form_poly(sym(3), "pfaffian")


# -- generator sets -------------------------------------------------------------------

def c2(n):
    return math.comb(n, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_generator_set_sizes(n):
    assert len(generators_det(n)) == n * n + c2(n) + n * math.comb(n - 1, 2) + math.comb(n, 4)
    assert len(generators_perm(n)) == n * n + c2(n) + n * math.comb(n - 1, 2)
    assert len(generators_det_contract(n)) == n * n + c2(n)


def test_four_by_four_set_sizes():
    assert len(generators_det(4)) == 35
    assert len(generators_perm(4)) == 34


@pytest.mark.parametrize("n", range(2, 7))
def test_generator_sets_are_linearly_independent(n):
    for gens in (generators_det(n), generators_perm(n)):
        assert GradedSubspace.span(sym(n), 2, gens).dim == len(gens)


def test_cubic_generators_for_six_by_six():
    cubics = cubics_6x6()
    assert sorted(len(p.terms) for p in cubics) == [6, 6, 6, 8, 8]
    assert len(generators_perm_cubic(7)) == 5 * math.comb(7, 6)
    assert generators_perm_cubic(5) == []


@pytest.mark.parametrize("n", range(2, 7))
def test_every_generator_annihilates(n):
    ring = sym(n)
    det, perm = det_poly(ring), perm_poly(ring)
    assert all(not apply(g, det, "diff") for g in generators_det(n))
    assert all(not apply(g, perm, "diff") for g in generators_perm(n))
    assert all(not apply(g, perm, "diff") for g in generators_perm_cubic(n))
    if n >= 4:
        assert all(not apply(g, det, "contract") for g in generators_det_contract(n))


def test_generator_set_lookup():
    assert generator_set("V", 3) == generators_det(3)
    with pytest.raises(ValueError):
        generator_set("Z", 3)


# -- minors and permanents --------------------------------------------------------------

def test_minor_and_subpermanent_of_two_by_two_block():
    ring = sym(3)
    assert minor_poly(ring, (1, 2), (1, 2)) == from_words(ring, "AD - BB")
    assert subperm_poly(ring, (1, 2), (2, 3)) == from_words(ring, "BE + CD")


@pytest.mark.parametrize("n", range(2, 6))
def test_minor_and_permanent_space_dimensions(n):
    ring = sym(n)
    for t in range(1, n + 1):
        m = GradedSubspace.span(ring, t, minors(ring, t)).dim
        p = GradedSubspace.span(ring, t, subpermanents(ring, t)).dim
        assert m == math.comb(n + 1, t) * math.comb(n + 1, t + 1) // (n + 1)
        c = math.comb(n, t)
        assert p == c * (c + 1) // 2


def test_all_minors_lie_in_the_doset_span():
    ring = sym(4)
    span = GradedSubspace.span(ring, 2, minors(ring, 2))
    for rows in combinations(range(1, 5), 2):
        for cols in combinations(range(1, 5), 2):
            assert span.contains(minor_poly(ring, rows, cols))
