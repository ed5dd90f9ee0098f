"""End-to-end acceptance criteria, one test per criterion.

Each test collects every discrepancy it finds into a list before asserting,
so a failing criterion reports all of its problems at once.  The terminal
summary prints one PASS/FAIL line per criterion.
"""

import math
import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from apolarity.apolar import (GradedSubspace, ann_slice, check_triangularity,
                              derived_spaces, hilbert_sequence, minimal_generator_profile,
                              monomial_generators, verify_generator_set)
from apolarity.combinatorics import (catalan, det_hilbert_closed_form,
                                     partition_monomials, perm_hilbert_closed_form)
from apolarity.groebner import is_groebner, reduce, s_polynomial
from apolarity.invariants import (det_poly, generators_det, generators_det_contract,
                                  generators_perm, generators_perm_contract,
                                  generators_perm_full, hafnian_poly, immanant_poly,
                                  perm_poly, polynomial_from_letters, same_line_cubes)
from apolarity.ranks import l_diff, lt_bound_det, rs_bound
from apolarity.ring import (CONCA_LEX, DIVIDED, Polynomial, contract_apply, diff_apply,
                            divided_power_linear, to_divided)
from apolarity.symgroup import (character_table, check_phi_equivariance, decompose,
                                inner_product, monomial_space_character, partitions,
                                phi_psi_maps)
from apolarity.tables import PUBLISHED_HILBERT, emit_table

from helpers import from_words, gen, sym


def table_problems(tid):
    table = emit_table(tid)
    return [f"table {tid} {m.row} [{m.column}]: expected {m.expected}, actual {m.actual}"
            for m in table.mismatches]


# -- 1, 2: Hilbert tables under differentiation ----------------------------------------

def test_criterion_01_determinant_hilbert_table(criterion):
    done = criterion(1, "Hilbert sequences of the symmetric determinant, n = 2..6")
    problems = table_problems(1)
    for n in range(2, 7):
        h = list(hilbert_sequence(det_poly(sym(n))))
        if h != PUBLISHED_HILBERT[("det", "diff")][n]:
            problems.append(f"n={n}: {h}")
    assert problems == []
    done()


def test_criterion_02_permanent_hilbert_table(criterion):
    done = criterion(2, "Hilbert sequences of the symmetric permanent and the closed form")
    problems = table_problems(2)
    for n in range(2, 7):
        h = list(hilbert_sequence(perm_poly(sym(n))))
        if h != PUBLISHED_HILBERT[("perm", "diff")][n]:
            problems.append(f"computed n={n}: {h}")
    for n in range(2, 9):
        closed = [math.comb(n, k) * (math.comb(n, k) + 1) // 2 for k in range(n + 1)]
        if closed != PUBLISHED_HILBERT[("perm", "diff")][n]:
            problems.append(f"closed form n={n}: {closed}")
    assert problems == []
    done()


# -- 3: generator degrees and generator sets --------------------------------------------

def test_criterion_03_generator_degrees_and_sets(criterion):
    done = criterion(3, "Minimal generator profiles and generator-set verification")
    problems = []
    for n in range(2, 6):
        det, perm = det_poly(sym(n)), perm_poly(sym(n))
        if minimal_generator_profile(det).as_dict() != {2: len(generators_det(n))}:
            problems.append(f"det profile n={n}")
        if minimal_generator_profile(perm).as_dict() != {2: len(generators_perm(n))}:
            problems.append(f"perm profile n={n}")
        if not verify_generator_set(det, generators_det(n)).passed:
            problems.append(f"det set n={n}")
        if not verify_generator_set(perm, generators_perm_full(n)).passed:
            problems.append(f"perm set n={n}")
    perm6 = perm_poly(sym(6))
    expected = {2: len(generators_perm(6)), 3: 5 * math.comb(6, 6)}
    if minimal_generator_profile(perm6).as_dict() != expected:
        problems.append("perm profile n=6")
    if not verify_generator_set(det_poly(sym(6)), generators_det(6), max_degree=3).passed:
        problems.append("det set n=6 up to degree 3")
    if not verify_generator_set(perm6, generators_perm_full(6), max_degree=3).passed:
        problems.append("perm set n=6 up to degree 3")
    assert problems == []
    done()


# -- 4: lengths -----------------------------------------------------------------------

def test_criterion_04_length_identities(criterion):
    done = criterion(4, "Lengths: Catalan numbers and (C(2n,n) + 2^n)/2")
    problems = []
    for n in range(1, 7):
        det_len = hilbert_sequence(det_poly(sym(n))).length
        perm_len = hilbert_sequence(perm_poly(sym(n))).length
        if det_len != catalan(n + 1):
            problems.append(f"det n={n}: {det_len}")
        if perm_len != (math.comb(2 * n, n) + 2 ** n) // 2:
            problems.append(f"perm n={n}: {perm_len}")
    for n in range(1, 9):
        if sum(det_hilbert_closed_form(n)) != catalan(n + 1):
            problems.append(f"det closed form n={n}")
        if sum(perm_hilbert_closed_form(n)) != (math.comb(2 * n, n) + 2 ** n) // 2:
            problems.append(f"perm closed form n={n}")
    assert problems == []
    done()


# -- 5: Groebner bases -----------------------------------------------------------------

WORKED = [
    ("AG + BC", "AN + DE", "BCN - DEG"),
    ("HL + IK + GN", "DG + CH + BK", "BHKL + BIKK - DGGN - CGHN"),
    ("CH + DG + BK", "CI + EG + BL", "CHL + DGL - CIK - EGK"),
    ("2*FJ + GG", "CI + EG + BL", "BGGL - 2*CFIJ - 2*EFGJ"),
    ("BG + CF", "CI + EG + BL", "CFL - CGI - EGG"),
]


def test_criterion_05_groebner_basis_under_conca_order(criterion):
    done = criterion(5, "Quadric determinant generators form a Groebner basis (Conca order)")
    problems = []
    for n in (4, 5):
        report = is_groebner(generators_det(n), CONCA_LEX)
        if not report.passed:
            problems.append(f"n={n}: {len(report.failures)} of {report.pairs_checked} "
                            "S-pairs have a nonzero normal form")
    ring = sym(5)
    V = generators_det(5)
    for f, g, expected in WORKED:
        s = s_polynomial(from_words(ring, f), from_words(ring, g), CONCA_LEX)
        if s != from_words(ring, expected):
            problems.append(f"S({f}, {g}) differs from {expected}")
        elif reduce(s, V, CONCA_LEX).terms:
            problems.append(f"S({f}, {g}) = {expected} does not reduce to zero")
    assert problems == []
    done()


# -- 6: triangularity ------------------------------------------------------------------

def test_criterion_06_triangularity(criterion):
    done = criterion(6, "Triangularity of the generated ideals, 3 <= k <= n <= 5")
    problems = []
    for form in ("det", "perm"):
        for n in range(3, 6):
            for k in range(3, n + 1):
                if not check_triangularity(form, k, n).passed:
                    problems.append(f"{form} n={n} k={k}")
    ring = sym(3)
    expected = {from_words(ring, w).monomials()[0] for w in ("AEE", "BBF", "BEC", "CCD")}
    if partition_monomials("det", 3, 3)["acceptable_non_initial"] != expected:
        problems.append("non-initial acceptable cubics for n=3")
    assert problems == []
    done()


# -- 7: rank tables -----------------------------------------------------------------

def test_criterion_07_rank_tables(criterion):
    done = criterion(7, "Rank tables for differentiation and contraction")
    problems = table_problems(3) + table_problems(4) + table_problems(6)
    if lt_bound_det(4, 2).bound != 25:
        problems.append("determinant bound n=4, t=2")
    if rs_bound(det_poly(sym(4))) != 21 or l_diff(det_poly(sym(4))) != 20:
        problems.append("determinant n=4 row")
    assert problems == []
    done()


# -- 8: contraction -------------------------------------------------------------------

def _letters_2x2():
    return {"x": (1, 1), "y": (1, 2), "u": (2, 1), "v": (2, 2)}


def test_criterion_08_contraction(criterion):
    done = criterion(8, "Apolarity under contraction")
    problems = []

    # a square of a linear form
    ring = gen(2)
    cells = _letters_2x2()
    F = polynomial_from_letters(ring, cells, [(1, "xx"), (2, "xy"), (1, "yy")])
    if list(hilbert_sequence(F, "contract")) != [1, 2, 1]:
        problems.append("square of a linear form: Hilbert sequence")
    gens = [polynomial_from_letters(ring, cells, t) for t in (
        [(1, "xy"), (-2, "yy")], [(1, "xx"), (-1, "yy")], [(1, "u")], [(1, "v")])]
    if not verify_generator_set(F, gens, "contract").passed:
        problems.append("square of a linear form: generators")

    # the 2 x 2 symmetric case
    s2 = sym(2)
    if contract_apply(perm_poly(s2), det_poly(s2)).terms:
        problems.append("perm does not kill det by contraction")
    if list(hilbert_sequence(det_poly(s2), "contract")) != [1, 3, 1]:
        problems.append("2x2 contraction Hilbert sequence")
    if rs_bound(det_poly(s2), "contract") != Fraction(5, 2):
        problems.append("2x2 contraction bound")
    dring = s2.with_flavor(DIVIDED)
    x, y, z = (Polynomial.var(dring, *c) for c in ((1, 1), (1, 2), (2, 2)))
    # the usual det xz - y^2 written in divided powers is xz - 2 y^[2]; the
    # decomposition below concerns the divided form xz - y^[2]
    target = x * z - divided_power_linear(y, 2)
    waring = (divided_power_linear(x + z, 2).scale(Fraction(1, 2))
              - divided_power_linear(x - z, 2).scale(Fraction(1, 2))
              - divided_power_linear(y, 2))
    if waring != target:
        problems.append("divided-power Waring identity")

    # degree-two generators and monomial generators, n = 4, 5
    for n in (4, 5):
        ring = sym(n)
        det, perm = det_poly(ring), perm_poly(ring)
        dim2 = n * n + math.comb(n, 2)
        for name, F, gens in (("det", det, generators_det_contract(n)),
                              ("perm", perm, generators_perm_contract(n))):
            slice2 = ann_slice(F, 2, "contract")
            if slice2.dim != dim2 or slice2 != GradedSubspace.span(ring, 2, gens):
                problems.append(f"{name} n={n}: degree-two annihilator")
            spaces = derived_spaces(F, "contract")
            quad = set(monomial_generators(F, 2, "contract", spaces=spaces))
            cube = set(monomial_generators(F, 3, "contract", spaces=spaces))
            expected_quad = {g.monomials()[0] for g in gens if len(g.terms) == 1}
            expected_cube = {g.monomials()[0] for g in same_line_cubes(n)}
            if quad != expected_quad:
                problems.append(f"{name} n={n}: quadratic monomial generators")
            if cube != expected_cube:
                problems.append(f"{name} n={n}: cubic monomial generators")
    problems += table_problems(5)
    assert problems == []
    done()


# -- 9: representation theory -------------------------------------------------------

def test_criterion_09_representation_theory(criterion):
    done = criterion(9, "Characters of hafnian monomials and the composition maps")
    problems = []
    for tid in (7, 8, 9, 10):
        problems += table_problems(tid)
    norms = {}
    for n in (4, 6, 8):
        ring = sym(n)
        chi = monomial_space_character(hafnian_poly(ring).monomials(), ring)
        norms[n] = inner_product(chi, chi, n)
        even = {s: 1 for s in partitions(n) if all(p % 2 == 0 for p in s)}
        if decompose(chi, n) != even:
            problems.append(f"n={n}: decomposition {decompose(chi, n)}")
    if (norms[4], norms[6]) != (2, 3):
        problems.append(f"norms {norms}")
    four, six = phi_psi_maps(4), phi_psi_maps(6)
    dims = [(m.kernel_dim, m.image_dim) for m in (four.phi, four.psi, six.phi, six.psi)]
    if dims != [(0, 3), (1, 2), (5, 10), (10, 5)]:
        problems.append(f"kernel and image dimensions {dims}")
    if check_phi_equivariance(6, 100, random.Random(2024)):
        problems.append("equivariance")
    assert problems == []
    done()


# -- 10: immanants --------------------------------------------------------------------

def test_criterion_10_immanants(criterion):
    done = criterion(10, "Immanant examples")
    problems = []
    g3 = gen(3)
    cell = {ch: (k % 3 + 1, k // 3 + 1) for k, ch in enumerate("abcdefghi")}
    expected = polynomial_from_letters(g3, cell, [(2, "aei"), (-1, "dhc"), (-1, "bfg")])
    if immanant_poly(g3, (2, 1)) != expected:
        problems.append("generic 3x3 polynomial")
    if list(hilbert_sequence(expected)) != [1, 9, 9, 1]:
        problems.append("generic 3x3 Hilbert sequence")
    s3 = immanant_poly(sym(3), (2, 1))
    if s3 != from_words(sym(3), "2*ADF - 2*BCE") or list(hilbert_sequence(s3)) != [1, 6, 6, 1]:
        problems.append("symmetric 3x3")
    ring = sym(4)
    for shape, h in (((3, 1), [1, 10, 39, 10, 1]), ((2, 2), [1, 10, 39, 10, 1]),
                     ((2, 1, 1), [1, 10, 38, 10, 1])):
        got = list(hilbert_sequence(immanant_poly(ring, shape)))
        if got != h:
            problems.append(f"{shape}: {got}")
    plus, minus = from_words(ring, "BII + 2*BHJ"), from_words(ring, "BII - 2*BHJ")
    if diff_apply(plus, immanant_poly(ring, (3, 1))).terms:
        problems.append("BI^2 + 2BHJ does not kill the (3,1) immanant")
    if diff_apply(minus, immanant_poly(ring, (2, 1, 1))).terms:
        problems.append("BI^2 - 2BHJ does not kill the (2,1,1) immanant")
    assert problems == []
    done()


# -- 11: property suites --------------------------------------------------------------

RING3 = sym(3)


def sparse(ring, degree):
    mons = ring.monomials(degree)
    return st.dictionaries(st.sampled_from(mons), st.integers(-6, 6), min_size=1,
                           max_size=5).map(lambda t: Polynomial(ring, t))


@settings(max_examples=500, deadline=None)
@given(st.integers(0, 3).flatmap(lambda a: st.tuples(sparse(RING3, a), sparse(RING3, 3))))
def _pairing_duality(pair):
    h, F = pair
    assert to_divided(diff_apply(h, F)) == contract_apply(h, to_divided(F))


def test_criterion_11_property_suites(criterion):
    done = criterion(11, "Property suites")
    _pairing_duality()
    for n in range(1, 5):
        ring = sym(n)
        for F in (det_poly(ring), perm_poly(ring)):
            for pairing in ("diff", "contract"):
                h = hilbert_sequence(F, pairing)
                for k in range(n + 1):
                    assert ann_slice(F, k, pairing).dim + h[k] == ring.dim(k)
    for n in range(1, 7):
        assert hilbert_sequence(det_poly(sym(n))).is_symmetric()
        assert hilbert_sequence(perm_poly(sym(n))).is_symmetric()
    rng = random.Random(11)
    V = generators_det(3)
    mons = RING3.monomials(3)
    for _ in range(50):
        p = Polynomial(RING3, {rng.choice(mons): rng.randint(-5, 5) for _ in range(4)})
        r = reduce(p, V, CONCA_LEX)
        assert reduce(r, V, CONCA_LEX) == r
    for n in range(1, 9):
        table = character_table(n)
        for a in table:
            for b in table:
                assert inner_product(table[a], table[b], n) == (a == b)
    done()
