"""Counting formulas and monomial classifications for minors and permanents."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .ring import CONCA_LEX, Monomial, RingSpec, SYMMETRIC, USUAL


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n,k) C(n,k-1) / n: Dyck paths of order n with k peaks."""
    if n == 0:
        return 1 if k == 0 else 0
    if not 1 <= k <= n:
        return 0
    return math.comb(n, k) * math.comb(n, k - 1) // n


def minor_space_dim(n: int, t: int, convention: str = "table") -> int:
    """Dimension of the span of the t x t minors of a symmetric n x n matrix.

    The ``table`` convention C(n+1,t) C(n+1,t+1)/(n+1) = N(n+1, t+1) matches
    direct computation.  ``shifted`` evaluates the variant with t-1 in place
    of t+1, i.e. N(n+1, t), which does not; it is kept for comparison.
    """
    if t == 0:
        return 1
    if convention == "table":
        return math.comb(n + 1, t) * math.comb(n + 1, t + 1) // (n + 1)
    if convention == "shifted":
        return math.comb(n + 1, t) * math.comb(n + 1, t - 1) // (n + 1)
    raise ValueError(f"unknown convention {convention!r}")


def permanent_space_dim(n: int, t: int) -> int:
    c = math.comb(n, t)
    return c * (c + 1) // 2


def det_length(n: int) -> int:
    """Length of the apolar algebra of the symmetric n x n determinant."""
    return catalan(n + 1)


def perm_length(n: int) -> int:
    return (math.comb(2 * n, n) + 2 ** n) // 2


def det_hilbert_closed_form(n: int) -> list[int]:
    return [minor_space_dim(n, n - k) for k in range(n + 1)]


def perm_hilbert_closed_form(n: int) -> list[int]:
    return [permanent_space_dim(n, k) for k in range(n + 1)]


def monhaf_dim(n: int) -> int:
    """Number of perfect matchings of n points, (n-1)!!."""
    if n % 2:
        return 0
    k = n // 2
    return math.factorial(n) // (2 ** k * math.factorial(k))


def doset_pairs(n: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs (a, b) of increasing t-subsets of 1..n with a_i <= b_i for all i."""
    subsets = list(combinations(range(1, n + 1), t))
    return [(a, b) for a in subsets for b in subsets if all(x <= y for x, y in zip(a, b))]


enumerate_doset_minors = doset_pairs


def dyck_paths(order: int, peaks: int | None = None) -> Iterator[str]:
    """Lattice paths of ``order`` E and ``order`` N steps never rising above y = x.

    With ``peaks`` set, keep paths with exactly that many E-then-N turns.
    """
    def walk(e, n, path):
        if e == order and n == order:
            yield path
            return
        if e < order:
            yield from walk(e + 1, n, path + "E")
        if n < e:
            yield from walk(e, n + 1, path + "N")

    for p in walk(0, 0, ""):
        if peaks is None or p.count("EN") == peaks:
            yield p


def count_dyck(order: int, peaks: int | None = None) -> int:
    return sum(1 for _ in dyck_paths(order, peaks))


def enumerate_dyck(order: int, corners: int | None = None, paths: bool = False):
    """Count the Dyck paths of the given order, or list them with ``paths=True``."""
    if order < 1:
        raise ValueError("order must be positive")
    found = dyck_paths(order, corners)
    return list(found) if paths else sum(1 for _ in found)


def reversal_pairs(rows: tuple[int, ...], cols: tuple[int, ...]) -> list[tuple[int, int]]:
    """Column pairs (b_i, b_j) with i < j and b_i > b_j, rows taken in increasing order."""
    pairs = sorted(zip(rows, cols))
    b = [c for _, c in pairs]
    return [(b[i], b[j]) for i in range(len(b)) for j in range(i + 1, len(b)) if b[i] > b[j]]


def _ring(n: int) -> RingSpec:
    return RingSpec(n, SYMMETRIC, USUAL)


def flag_monomial(ring: RingSpec, a: tuple[int, ...], b: tuple[int, ...]) -> Monomial:
    """Product of x[a_i, b_i]: the diagonal of the submatrix (a|b)."""
    e = [0] * ring.nvars
    for i, j in zip(a, b):
        e[ring.var_index(i, j)] += 1
    return tuple(e)


def sorted_initial(ring: RingSpec, rows: tuple[int, ...], cols: tuple[int, ...]) -> Monomial:
    """Pair the sorted rows with the sorted columns."""
    return flag_monomial(ring, tuple(sorted(rows)), tuple(sorted(cols)))


@lru_cache(maxsize=None)
def det_support(n: int) -> frozenset:
    from .invariants import det_poly

    return frozenset(det_poly(_ring(n)).terms)


def _sub_multisets(m: Monomial, k: int) -> set:
    flat = [i for i, e in enumerate(m) for _ in range(e)]
    out = set()
    for combo in combinations(flat, k):
        e = [0] * len(m)
        for i in combo:
            e[i] += 1
        out.add(tuple(e))
    return out


@lru_cache(maxsize=None)
def acceptable_monomials(n: int, k: int) -> frozenset:
    """Degree-k monomials dividing some term of det (equivalently of perm)."""
    out: set = set()
    for m in det_support(n):
        out |= _sub_multisets(m, k)
    return frozenset(out)


@lru_cache(maxsize=None)
def conca_monomials(n: int, k: int) -> frozenset:
    """Flag monomials of the k x k doset minors."""
    ring = _ring(n)
    return frozenset(flag_monomial(ring, a, b) for a, b in doset_pairs(n, k))


@lru_cache(maxsize=None)
def permanent_initial_monomials(n: int, k: int) -> frozenset:
    """Leading monomials (lexicographic) of the span of the k x k permanents."""
    from .apolar import GradedSubspace
    from .invariants import subpermanents

    ring = _ring(n)
    return frozenset(GradedSubspace.span(ring, k, subpermanents(ring, k), CONCA_LEX).rows)


@lru_cache(maxsize=None)
def permanent_sorted_initials(n: int, k: int) -> frozenset:
    """Sorted-pairing monomial of each k x k permanent; can be smaller than the span."""
    ring = _ring(n)
    subsets = list(combinations(range(1, n + 1), k))
    return frozenset(sorted_initial(ring, a, b)
                     for i, a in enumerate(subsets) for b in subsets[i:])


def initial_monomials(form: str, n: int, k: int) -> frozenset:
    if form == "det":
        return conca_monomials(n, k)
    if form == "perm":
        return permanent_initial_monomials(n, k)
    raise ValueError(f"unknown form {form!r}")


def classify_monomial(m: Monomial, form: str, n: int) -> str:
    """'unacceptable', 'conca_initial' or 'acceptable_non_initial'."""
    k = sum(m)
    if m not in acceptable_monomials(n, k):
        return "unacceptable"
    if m in initial_monomials(form, n, k):
        return "conca_initial"
    return "acceptable_non_initial"


def partition_monomials(form: str, n: int, k: int) -> dict[str, set]:
    """Split all degree-k monomials into the three classes."""
    acc = acceptable_monomials(n, k)
    init = initial_monomials(form, n, k)
    every = set(_ring(n).monomials(k))
    return {
        "unacceptable": every - acc,
        "conca_initial": set(init),
        "acceptable_non_initial": set(acc - init),
    }
