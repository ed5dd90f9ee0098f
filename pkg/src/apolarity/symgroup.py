"""Symmetric groups: classes, characters, and their action on matrix entries.

Permutations are tuples in one-line notation with 1-based images:
``sigma[i - 1] == sigma(i)``.  Cycle types are partitions written with
parts in decreasing order; conjugacy classes are listed by the
lexicographic order of their parts written increasingly, so that (1^n)
comes first and the n-cycle last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .ring import Monomial, Polynomial, RingSpec

Partition = tuple  # tuple[int, ...], parts decreasing


def partitions(n: int, largest: int | None = None) -> list[Partition]:
    """All partitions of n, parts in decreasing order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in partitions(n - first, first)]
    return out


def class_order_key(ct: Partition) -> tuple:
    return tuple(sorted(ct))


def cycle_type(p: Sequence[int]) -> Partition:
    """Cycle type of a permutation; accepts 0-based or 1-based one-line form."""
    base = min(p) if p else 0
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - base
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def centralizer_order(ct: Partition) -> int:
    out = 1
    for part in set(ct):
        m = ct.count(part)
        out *= part ** m * math.factorial(m)
    return out


def class_size(ct: Partition) -> int:
    return math.factorial(sum(ct)) // centralizer_order(ct)


def representative(ct: Partition) -> tuple[int, ...]:
    """Permutation made of consecutive cycles, shortest cycles first."""
    n = sum(ct)
    img = list(range(1, n + 1))
    start = 1
    for length in sorted(ct):
        for k in range(length):
            img[start + k - 1] = start + (k + 1) % length
        start += length
    return tuple(img)


@dataclass(frozen=True)
class ConjugacyClass:
    cycle_type: Partition
    size: int
    representative: tuple[int, ...]

    @property
    def label(self) -> str:
        """Exponential notation such as (1^2 2) or (1 5)."""
        parts = []
        for part in sorted(set(self.cycle_type)):
            m = self.cycle_type.count(part)
            parts.append(f"{part}^{m}" if m > 1 else f"{part}")
        return "(" + " ".join(parts) + ")"


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> tuple[ConjugacyClass, ...]:
    types = sorted(partitions(n), key=class_order_key)
    return tuple(ConjugacyClass(ct, class_size(ct), representative(ct)) for ct in types)


# -- characters ---------------------------------------------------------------

def _beta(shape: Partition) -> tuple[int, ...]:
    k = len(shape)
    return tuple(part + k - 1 - i for i, part in enumerate(shape))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    shape = tuple(x - (k - 1 - i) for i, x in enumerate(b))
    return tuple(x for x in shape if x > 0)


@lru_cache(maxsize=None)
def character_value(shape: Partition, ct: Partition) -> int:
    """Murnaghan-Nakayama: strip rim hooks of the cycle lengths one by one."""
    shape = tuple(x for x in shape if x)
    ct = tuple(sorted((x for x in ct if x), reverse=True))
    if sum(shape) != sum(ct):
        raise ValueError(f"{shape} and {ct} have different sizes")
    if not ct:
        return 1
    r, rest = ct[0], ct[1:]
    beta = set(_beta(shape))
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beta:
            continue
        crossed = sum(1 for x in beta if b - r < x < b)
        sign = -1 if crossed % 2 else 1
        total += sign * character_value(_from_beta((beta - {b}) | {b - r}), rest)
    return total


def character(shape: Partition) -> dict[Partition, int]:
    """Values of an irreducible character on every class."""
    n = sum(shape)
    return {c.cycle_type: character_value(tuple(shape), c.cycle_type) for c in conjugacy_classes(n)}


def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    return {shape: character(shape) for shape in partitions(n)}


def inner_product(chi: Mapping[Partition, Fraction], psi: Mapping[Partition, Fraction], n: int) -> Fraction:
    """(1/n!) sum over g of chi(g) psi(g); characters here are real."""
    total = sum(Fraction(c.size) * chi[c.cycle_type] * psi[c.cycle_type]
                for c in conjugacy_classes(n))
    return total / math.factorial(n)


def decompose(chi: Mapping[Partition, int], n: int) -> dict[Partition, int]:
    """Multiplicities of irreducibles; raises if a multiplicity is not integral."""
    out = {}
    for shape in partitions(n):
        m = inner_product(chi, character(shape), n)
        if m.denominator != 1:
            raise ValueError(f"non-integral multiplicity {m} for {shape}")
        if m:
            out[shape] = int(m)
    return out


def dimension(shape: Partition) -> int:
    return character_value(tuple(shape), (1,) * sum(shape))


# -- action on polynomials ----------------------------------------------------

def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a o b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def _variable_permutation(sigma: Sequence[int], ring: RingSpec) -> list[int]:
    """Image index of each variable under x[i,j] -> x[s^-1(i), s^-1(j)]."""
    inv = inverse(sigma)
    return [ring.var_index(inv[i - 1], inv[j - 1]) for i, j in ring.variables]


def act_on_monomial(sigma: Sequence[int], m: Monomial, ring: RingSpec) -> Monomial:
    target = _variable_permutation(sigma, ring)
    e = [0] * ring.nvars
    for k, x in enumerate(m):
        if x:
            e[target[k]] += x
    return tuple(e)


def act_on_polynomial(sigma: Sequence[int], p: Polynomial) -> Polynomial:
    """sigma . x[i,j] = x[sigma^-1(i), sigma^-1(j)], extended multiplicatively."""
    if len(sigma) != p.ring.n:
        raise ValueError("permutation size does not match the matrix size")
    target = _variable_permutation(sigma, p.ring)

    def move(m):
        e = [0] * len(m)
        for k, x in enumerate(m):
            if x:
                e[target[k]] += x
        return tuple(e)

    return p.map_monomials(move)


def permutation_character(monomials: Sequence[Monomial], ring: RingSpec) -> dict[Partition, int]:
    """Character of S_n permuting a set of monomials: count fixed points."""
    basis = set(monomials)
    chi = {}
    for c in conjugacy_classes(ring.n):
        target = _variable_permutation(c.representative, ring)
        fixed = 0
        for m in basis:
            e = [0] * ring.nvars
            for k, x in enumerate(m):
                if x:
                    e[target[k]] += x
            if tuple(e) == m:
                fixed += 1
        chi[c.cycle_type] = fixed
    return chi


def all_permutations(n: int) -> list[tuple[int, ...]]:
    return [tuple(x + 1 for x in p) for p in permutations(range(n))]


def irreducible_character(shape: Partition, cls: ConjugacyClass | Partition) -> int:
    """Value of the irreducible character for ``shape`` on one class."""
    ct = cls.cycle_type if isinstance(cls, ConjugacyClass) else tuple(cls)
    return character_value(tuple(shape), ct)


def monomial_space_character(monomials: Sequence[Monomial], ring: RingSpec) -> dict[Partition, int]:
    """Permutation character of a set of monomials permuted by S_n.

    Raises ValueError when some permutation maps a monomial outside the set,
    since the count of fixed points is then not a character of the span.
    """
    basis = set(monomials)
    for c in conjugacy_classes(ring.n):
        if c.size == 1:
            continue
        # transpositions and the n-cycle generate S_n
        if c.cycle_type in ((2,) + (1,) * (ring.n - 2), (ring.n,)):
            if any(act_on_monomial(c.representative, m, ring) not in basis for m in basis):
                raise ValueError("the monomial set is not stable under the action")
    return permutation_character(list(basis), ring)


def character_vector(chi: Mapping[Partition, int], n: int) -> list[int]:
    """Character values listed in the canonical class order."""
    return [chi[c.cycle_type] for c in conjugacy_classes(n)]


# -- the maps h -> h o perm(X) and h -> h o det(X) on hafnian monomials ---------

@dataclass
class LinearMapReport:
    """A linear map given on a monomial basis, with kernel and image data."""

    domain: list[Monomial]
    images: list[Polynomial]
    kernel: list[Polynomial]
    rank: int

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def image_dim(self) -> int:
        return self.rank

    def matrix(self) -> tuple[list[Monomial], list[list[Fraction]]]:
        """Dense matrix: one row per target monomial, one column per domain monomial."""
        targets = sorted({m for p in self.images for m in p.terms}, reverse=True)
        return targets, [[p.coefficient(u) for p in self.images] for u in targets]


@dataclass
class PhiPsiReport:
    n: int
    phi: LinearMapReport
    psi: LinearMapReport

    def as_dict(self) -> dict:
        from .ring import format_poly

        def one(r):
            return {"kernel_dim": r.kernel_dim, "image_dim": r.image_dim,
                    "kernel": [format_poly(p, "y") for p in r.kernel]}

        return {"n": self.n, "domain_dim": len(self.phi.domain),
                "phi": one(self.phi), "psi": one(self.psi)}


def _map_report(ring: RingSpec, domain: list[Monomial], F: Polynomial) -> LinearMapReport:
    from .linalg import nullspace, rank
    from .ring import diff_apply

    images = [diff_apply(Polynomial.monomial(ring, m), F) for m in domain]
    rows: dict = {}
    for k, p in enumerate(images):
        for u, c in p.terms.items():
            rows.setdefault(u, {})[k] = c
    kernel_vectors = nullspace(rows.values(), range(len(domain)))
    kernel = [Polynomial(ring, {domain[k]: c for k, c in v.items()}) for v in kernel_vectors]
    r = rank([p.terms for p in images])
    return LinearMapReport(domain, images, kernel, r)


def phi_psi_maps(n: int) -> PhiPsiReport:
    """Phi(h) = h o perm(X) and Psi(h) = h o det(X) on the hafnian monomials of size n."""
    from .invariants import det_poly, hafnian_poly, perm_poly
    from .ring import SYMMETRIC, USUAL

    if n % 2 or n < 2:
        raise ValueError("the hafnian monomial space needs an even n >= 2")
    ring = RingSpec(n, SYMMETRIC, USUAL)
    domain = hafnian_poly(ring).monomials()
    return PhiPsiReport(n, _map_report(ring, domain, perm_poly(ring)),
                        _map_report(ring, domain, det_poly(ring)))


def check_phi_equivariance(n: int, samples: int, rng) -> list[tuple]:
    """Compare Phi(sigma . h) with sigma . Phi(h) for random sigma and h.

    ``h`` is a random integer combination of hafnian monomials.  Returns the
    failing (sigma, h) pairs, so an empty list means every sample agreed.
    """
    from .invariants import hafnian_poly, perm_poly
    from .ring import SYMMETRIC, USUAL, diff_apply

    ring = RingSpec(n, SYMMETRIC, USUAL)
    F = perm_poly(ring)
    domain = hafnian_poly(ring).monomials()
    bad = []
    for _ in range(samples):
        sigma = tuple(rng.sample(range(1, n + 1), n))
        h = Polynomial(ring, {m: rng.randint(-5, 5) for m in rng.sample(domain, rng.randint(1, len(domain)))})
        if diff_apply(act_on_polynomial(sigma, h), F) != act_on_polynomial(sigma, diff_apply(h, F)):
            bad.append((sigma, h))
    return bad
