"""Determinants, permanents, hafnians, immanants and the generator sets
of their apolar ideals, as exact polynomials."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Sequence

from .combinatorics import doset_pairs
from .ring import SYMMETRIC, USUAL, Polynomial, RingSpec, polynomial_from_letters


def perm_sign(p: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (0-based)."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_usual(ring: RingSpec) -> None:
    if ring.flavor != USUAL:
        raise ValueError("matrix invariants are built in the usual-flavor ring")


def _expand(ring: RingSpec, rows: Sequence[int], cols: Sequence[int], weight) -> Polynomial:
    """Sum over bijections rows -> cols of weight(sigma) * prod x[r, sigma(r)]."""
    if len(rows) != len(cols):
        raise ValueError("row and column selections differ in size")
    idx = [[ring.var_index(r, c) for c in cols] for r in rows]
    terms: dict = {}
    zero = [0] * ring.nvars
    for p in permutations(range(len(cols))):
        w = weight(p)
        if not w:
            continue
        e = list(zero)
        for r, c in enumerate(p):
            e[idx[r][c]] += 1
        m = tuple(e)
        v = terms.get(m, 0) + w
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
    return Polynomial(ring, terms)


def _full(ring: RingSpec) -> list[int]:
    return list(range(1, ring.n + 1))


def det_poly(ring: RingSpec) -> Polynomial:
    _check_usual(ring)
    return _expand(ring, _full(ring), _full(ring), perm_sign)


def perm_poly(ring: RingSpec) -> Polynomial:
    _check_usual(ring)
    return _expand(ring, _full(ring), _full(ring), lambda p: 1)


def minor_poly(ring: RingSpec, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of the submatrix on the given rows and columns (1-based)."""
    _check_usual(ring)
    return _expand(ring, rows, cols, perm_sign)


def subperm_poly(ring: RingSpec, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    _check_usual(ring)
    return _expand(ring, rows, cols, lambda p: 1)


def perfect_matchings(points: Sequence[int]) -> Iterable[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + m


def hafnian_poly(ring: RingSpec, indices: Sequence[int] | None = None) -> Polynomial:
    """Hafnian of the principal submatrix on ``indices`` (default: all)."""
    _check_usual(ring)
    if not ring.symmetric:
        raise ValueError("the hafnian is defined for the symmetric layout")
    indices = list(indices) if indices is not None else _full(ring)
    if len(indices) % 2:
        raise ValueError("hafnian needs an even number of indices")
    terms: dict = {}
    for match in perfect_matchings(indices):
        e = [0] * ring.nvars
        for a, b in match:
            e[ring.var_index(a, b)] += 1
        m = tuple(e)
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(ring, terms)


def immanant_poly(ring: RingSpec, shape: Sequence[int]) -> Polynomial:
    """Immanant: sum over sigma of chi_shape(sigma) prod x[i, sigma(i)]."""
    from .symgroup import character_value, cycle_type

    _check_usual(ring)
    shape = tuple(shape)
    if sum(shape) != ring.n:
        raise ValueError(f"partition {shape} is not a partition of {ring.n}")
    cache: dict = {}

    def weight(p):
        ct = cycle_type(p)
        if ct not in cache:
            cache[ct] = character_value(shape, ct)
        return cache[ct]

    return _expand(ring, _full(ring), _full(ring), weight)


def form_poly(ring: RingSpec, form: str) -> Polynomial:
    """Dispatch on a form name: det, perm, hafnian or imm:<partition>."""
    if form == "det":
        return det_poly(ring)
    if form == "perm":
        return perm_poly(ring)
    if form == "hafnian":
        return hafnian_poly(ring)
    if form.startswith("imm:"):
        shape = tuple(int(x) for x in form[4:].split(","))
        return immanant_poly(ring, shape)
    raise ValueError(f"unknown form {form!r}")


# -- generator sets -----------------------------------------------------------

def _y(ring: RingSpec, i: int, j: int) -> Polynomial:
    return Polynomial.var(ring, i, j)


def _diag_times_row(ring: RingSpec) -> list[Polynomial]:
    """y[i,i] * y[i,j] for all i, j (the diagonal squares included)."""
    return [_y(ring, i, i) * _y(ring, i, j)
            for i in range(1, ring.n + 1) for j in range(1, ring.n + 1)]


def _off_diagonal_squares(ring: RingSpec, sign: int) -> list[Polynomial]:
    return [_y(ring, i, j) ** 2 + _y(ring, i, i) * _y(ring, j, j) * (2 * sign)
            for i, j in combinations(range(1, ring.n + 1), 2)]


def _one_diagonal_pairs(ring: RingSpec, sign: int) -> list[Polynomial]:
    """2x2 permanents (sign=+1) or minors (sign=-1) on rows {i,j}, columns {i,k}."""
    out = []
    for i in range(1, ring.n + 1):
        others = [t for t in range(1, ring.n + 1) if t != i]
        for j, k in combinations(others, 2):
            out.append(_y(ring, i, i) * _y(ring, j, k) + _y(ring, i, j) * _y(ring, i, k) * sign)
    return out


def _sym_ring(n: int) -> RingSpec:
    return RingSpec(n, SYMMETRIC, USUAL)


def generators_det(n: int) -> list[Polynomial]:
    """Quadrics generating the apolar ideal of the symmetric determinant.

    Diagonal-times-same-row monomials, y_ij^2 + 2 y_ii y_jj, the 2x2
    permanents containing exactly one diagonal entry, and the hafnians of
    all 4x4 principal submatrices.
    """
    ring = _sym_ring(n)
    gens = _diag_times_row(ring)
    gens += _off_diagonal_squares(ring, +1)
    gens += _one_diagonal_pairs(ring, +1)
    gens += [hafnian_poly(ring, q) for q in combinations(range(1, n + 1), 4)]
    return gens


def generators_perm(n: int) -> list[Polynomial]:
    """Quadrics in the apolar ideal of the symmetric permanent.

    Same shape as the determinant set with minors in place of permanents
    and no hafnians.
    """
    ring = _sym_ring(n)
    gens = _diag_times_row(ring)
    gens += _off_diagonal_squares(ring, -1)
    gens += _one_diagonal_pairs(ring, -1)
    return gens


# Five cubics in the entries of a symmetric 6x6 matrix whose letters run
# row by row over the upper triangle (A=11, B=12, ..., U=66).
_CUBICS_6 = (
    [(1, "EIO"), (-1, "DJO"), (-1, "EHR"), (1, "CJR"), (1, "DHT"), (-1, "CIT")],
    [(1, "DKN"), (-1, "DJO"), (-1, "CKQ"), (1, "BOQ"), (1, "CJR"), (-1, "BNR")],
    [(1, "FIN"), (-1, "DJO"), (-1, "FHQ"), (1, "BOQ"), (1, "CJR"), (-1, "BNR"),
     (1, "DHT"), (-1, "CIT")],
    [(1, "EKM"), (-1, "DJO"), (-1, "CKQ"), (1, "BOQ"), (-1, "EHR"), (1, "CJR"),
     (1, "DHT"), (-1, "BMT")],
    [(1, "FJM"), (-1, "DJO"), (-1, "FHQ"), (1, "BOQ"), (1, "DHT"), (-1, "BMT")],
)

LETTERS_6 = {ch: cell for ch, cell in zip(
    "ABCDEFGHIJKLMNOPQRSTU",
    [(i, j) for i in range(1, 7) for j in range(i, 7)])}


def cubics_6x6(ring: RingSpec | None = None) -> list[Polynomial]:
    ring = ring or _sym_ring(6)
    return [polynomial_from_letters(ring, LETTERS_6, t) for t in _CUBICS_6]


def generators_perm_cubic(n: int) -> list[Polynomial]:
    """The five 6x6 cubics transported to every 6-subset of {1..n}.

    The substitution is order preserving: position p of the 6x6 pattern
    goes to the p-th smallest chosen index.
    """
    ring = _sym_ring(n)
    out = []
    for subset in combinations(range(1, n + 1), 6):
        letters = {ch: (subset[i - 1], subset[j - 1]) for ch, (i, j) in LETTERS_6.items()}
        out += [polynomial_from_letters(ring, letters, t) for t in _CUBICS_6]
    return out


def generators_perm_full(n: int) -> list[Polynomial]:
    return generators_perm(n) + generators_perm_cubic(n)


def generators_det_contract(n: int) -> list[Polynomial]:
    """Degree-two part of the contraction annihilator of det (n > 3).

    Diagonal squares, diagonal-times-same-row products, and all diagonal
    2x2 permanents y_ii y_jj + y_ij^2.
    """
    ring = _sym_ring(n)
    return _diag_times_row(ring) + [
        _y(ring, i, i) * _y(ring, j, j) + _y(ring, i, j) ** 2
        for i, j in combinations(range(1, n + 1), 2)]


def generators_perm_contract(n: int) -> list[Polynomial]:
    """Permanent analogue: diagonal 2x2 minors in place of permanents."""
    ring = _sym_ring(n)
    return _diag_times_row(ring) + [
        _y(ring, i, i) * _y(ring, j, j) - _y(ring, i, j) ** 2
        for i, j in combinations(range(1, n + 1), 2)]


def same_line_cubes(n: int) -> list[Polynomial]:
    """Products of three distinct off-diagonal entries sharing a row."""
    ring = _sym_ring(n)
    out = []
    for i in range(1, n + 1):
        others = [t for t in range(1, n + 1) if t != i]
        for a, b, c in combinations(others, 3):
            out.append(_y(ring, i, a) * _y(ring, i, b) * _y(ring, i, c))
    return out


GENERATOR_SETS = {
    "V": generators_det,
    "W": generators_perm,
    "W+": generators_perm_full,
    "Hdeg3": generators_perm_cubic,
    "AnnCo2": generators_det_contract,
    "AnnCo2perm": generators_perm_contract,
}


def generator_set(kind: str, n: int) -> list[Polynomial]:
    try:
        return GENERATOR_SETS[kind](n)
    except KeyError:
        raise ValueError(f"unknown generator set {kind!r}") from None


# -- spaces of minors and permanents -----------------------------------------

def minors(ring: RingSpec, t: int) -> list[Polynomial]:
    """All t x t minors, one per doset pair (the rest repeat them up to sign)."""
    return [minor_poly(ring, a, b) for a, b in doset_pairs(ring.n, t)]


def subpermanents(ring: RingSpec, t: int) -> list[Polynomial]:
    """One t x t permanent per unordered pair {rows, cols}; a symmetric
    matrix has [a|b] = [b|a] and no straightening relations among them."""
    subsets = list(combinations(range(1, ring.n + 1), t))
    return [subperm_poly(ring, a, b) for k, a in enumerate(subsets) for b in subsets[k:]]


def hafnian_monomials(ring: RingSpec) -> list[Polynomial]:
    """The monomials of the hafnian, each as its own polynomial."""
    h = hafnian_poly(ring)
    return [Polynomial.monomial(ring, m) for m in h.monomials()]


__all__ = [
    "det_poly", "perm_poly", "minor_poly", "subperm_poly", "hafnian_poly",
    "immanant_poly", "form_poly", "generators_det", "generators_perm",
    "generators_perm_cubic", "generators_perm_full", "generators_det_contract",
    "generators_perm_contract", "same_line_cubes", "generator_set", "doset_pairs",
    "minors", "subpermanents", "hafnian_monomials", "cubics_6x6", "perm_sign",
]
