"""Catalecticants, Hilbert functions and apolar ideals of homogeneous forms.

Two routes to the same numbers are implemented.

* The direct route works in the operator ring S: catalecticant matrices,
  their kernels (annihilator slices) and products of generators with
  monomials (ideal slices).  It is simple and serves as the reference for
  small cases.

* The inverse-system route works in R.  Under either pairing, the
  annihilator slice Ann(F)_k is the orthogonal complement of
  L_k = S_{d-k} o F, and the degree-k part of any ideal I is the complement
  of {G in R_k : g o G = 0 for g in I_k}.  These spaces are small, and they
  can be built one degree at a time: G lies in the complement of S_1 I_{k-1}
  exactly when every first derivative of G lies in the complement of
  I_{k-1}.  Hilbert functions, generator counts and generating-set checks
  all reduce to this "integration" step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Echelon, integral, nullspace
from .ring import (CONCA_LEX, Monomial, MonomialOrder, Polynomial, RingSpec,
                   apply, get_order, mono_divides, mono_factorial, mono_mul)

PAIRINGS = ("diff", "contract")


def _check_pairing(pairing: str) -> None:
    if pairing not in PAIRINGS:
        raise ValueError(f"unknown pairing {pairing!r}; expected one of {PAIRINGS}")


def pairing_weight(m: Monomial, pairing: str) -> int:
    """<y^m, x^m> under the pairing: m! for differentiation, 1 for contraction."""
    return mono_factorial(m) if pairing == "diff" else 1


# -- subspaces ------------------------------------------------------------------

class GradedSubspace:
    """A subspace of one homogeneous component, kept in reduced echelon form.

    ``rows`` maps each pivot (leading monomial under ``order``) to its basis
    vector, a dict monomial -> Fraction with a 1 at the pivot and zeros in
    every other pivot.  The reduced form is unique, so two subspaces are
    equal exactly when their rows are.
    """

    def __init__(self, ring: RingSpec, degree: int, rows: dict,
                 order: MonomialOrder = CONCA_LEX):
        self.ring = ring
        self.degree = degree
        self.rows = rows
        self.order = order

    @classmethod
    def span(cls, ring: RingSpec, degree: int, polys: Iterable[Polynomial | dict],
             order: MonomialOrder | str = CONCA_LEX) -> "GradedSubspace":
        order = get_order(order)
        ech = Echelon(order.key, order.heapkey)
        for p in polys:
            terms = p.terms if isinstance(p, Polynomial) else p
            if any(sum(m) != degree for m in terms):
                raise ValueError(f"vector is not homogeneous of degree {degree}")
            ech.add(integral(terms))
        return cls(ring, degree, ech.reduced(), order)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[Monomial]:
        """Leading monomials, largest first."""
        return self.order.sorted(self.rows)

    @property
    def basis(self) -> list[Polynomial]:
        return [Polynomial(self.ring, self.rows[p]) for p in self.pivots()]

    def support(self) -> set[Monomial]:
        out: set = set()
        for row in self.rows.values():
            out.update(row)
        return out

    def contains(self, p: Polynomial | dict) -> bool:
        terms = dict(p.terms if isinstance(p, Polynomial) else p)
        for piv in self.order.sorted(self.rows):
            c = terms.get(piv)
            if c:
                for m, x in self.rows[piv].items():
                    v = terms.get(m, 0) - c * x
                    if v:
                        terms[m] = v
                    else:
                        terms.pop(m, None)
        return not terms

    def contains_space(self, other: "GradedSubspace") -> bool:
        return all(self.contains(row) for row in other.rows.values())

    def reordered(self, order: MonomialOrder | str) -> "GradedSubspace":
        return GradedSubspace.span(self.ring, self.degree, self.rows.values(), order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        if self.degree != other.degree or self.dim != other.dim:
            return False
        if self.order == other.order:
            return self.rows == other.rows
        return self.contains_space(other)

    def __repr__(self) -> str:
        return f"GradedSubspace(degree={self.degree}, dim={self.dim}, order={self.order.name})"


@dataclass(frozen=True)
class HilbertSequence:
    values: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.values)

    @property
    def degree(self) -> int:
        return len(self.values) - 1

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __iter__(self):
        return iter(self.values)


@dataclass
class CatalecticantMatrix:
    """Matrix of h -> h o F from S_k to R_{d-k} in monomial bases (largest first)."""

    degree: int
    row_monomials: list[Monomial]
    col_monomials: list[Monomial]
    rows: list[dict]  # sparse: column monomial -> Fraction

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_monomials), len(self.col_monomials)

    def rank(self) -> int:
        ech = Echelon(CONCA_LEX.key, CONCA_LEX.heapkey)
        for r in self.rows:
            if r:
                ech.add(integral(r))
        return ech.rank

    def dense(self) -> list[list[Fraction]]:
        idx = {m: j for j, m in enumerate(self.col_monomials)}
        out = []
        for r in self.rows:
            line = [Fraction(0)] * len(self.col_monomials)
            for m, c in r.items():
                line[idx[m]] = c
            out.append(line)
        return out


# -- direct route -----------------------------------------------------------------

def _form_degree(F: Polynomial) -> int:
    if not F.terms:
        raise ValueError("the zero form has no apolar ideal worth computing")
    if not F.is_homogeneous():
        raise ValueError("apolarity computations need a homogeneous form")
    return F.degree()


def _act_monomial(u: Monomial, F: Polynomial, pairing: str) -> dict:
    out = {}
    for v, c in F.terms.items():
        if mono_divides(u, v):
            m = tuple(b - a for a, b in zip(u, v))
            if pairing == "diff":
                c = c * (mono_factorial(v) // mono_factorial(m))
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def catalecticant(F: Polynomial, k: int, pairing: str = "diff") -> CatalecticantMatrix:
    _check_pairing(pairing)
    d = _form_degree(F)
    if not 0 <= k <= d:
        raise ValueError(f"degree {k} outside 0..{d}")
    rows_m = F.ring.monomials(k)
    cols_m = F.ring.monomials(d - k)
    return CatalecticantMatrix(k, rows_m, cols_m, [_act_monomial(u, F, pairing) for u in rows_m])


def ann_slice(F: Polynomial, k: int, pairing: str = "diff",
              order: MonomialOrder | str = CONCA_LEX) -> GradedSubspace:
    """Degree-k part of Ann(F): the kernel of the catalecticant."""
    _check_pairing(pairing)
    order = get_order(order)
    d = _form_degree(F)
    if k > d:
        rows = {m: {m: Fraction(1)} for m in F.ring.monomials(k)}
        return GradedSubspace(F.ring, k, rows, order)
    cat = catalecticant(F, k, pairing)
    by_col: dict = {}
    for u, r in zip(cat.row_monomials, cat.rows):
        for v, c in r.items():
            by_col.setdefault(v, {})[u] = c
    basis = nullspace((integral(r) for r in by_col.values()), cat.row_monomials, key=order.key)
    return GradedSubspace(F.ring, k, {order.leading(v): v for v in basis}, order)


def ideal_slice(gens: Sequence[Polynomial], k: int, ring: RingSpec | None = None,
                order: MonomialOrder | str = CONCA_LEX) -> GradedSubspace:
    """Degree-k part of the ideal generated by ``gens``: span of m * g."""
    order = get_order(order)
    if ring is None:
        if not gens:
            raise ValueError("need a ring when the generator list is empty")
        ring = gens[0].ring
    ech = Echelon(order.key, order.heapkey)
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        e = g.degree()
        if e < 0 or e > k:
            continue
        for m in ring.monomials(k - e):
            ech.add(integral({mono_mul(m, u): c for u, c in g.terms.items()}))
    return GradedSubspace(ring, k, ech.reduced(), order)


# -- inverse-system route ------------------------------------------------------------

def _derivative(terms: dict, i: int, pairing: str) -> dict:
    out = {}
    for m, c in terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e if pairing == "diff" else c
    return out


def derived_spaces(F: Polynomial, pairing: str = "diff") -> list[GradedSubspace]:
    """L_j = S_{d-j} o F for j = 0..d, each in reduced echelon form.

    Built top-down: L_{j-1} is spanned by first derivatives of a spanning
    set of L_j.  Only the sparse vectors that enlarged the span are
    differentiated again, which keeps the working set small.
    """
    _check_pairing(pairing)
    d = _form_degree(F)
    nv = F.ring.nvars
    spaces: list[GradedSubspace | None] = [None] * (d + 1)
    witnesses = [integral(F.terms)]
    ech = Echelon(CONCA_LEX.key, CONCA_LEX.heapkey)
    ech.add(witnesses[0])
    spaces[d] = GradedSubspace(F.ring, d, ech.reduced())
    for j in range(d - 1, -1, -1):
        ech = Echelon(CONCA_LEX.key, CONCA_LEX.heapkey)
        fresh = []
        for w in witnesses:
            for i in range(nv):
                v = _derivative(w, i, pairing)
                if v and ech.add(v):
                    fresh.append(v)
        witnesses = fresh
        spaces[j] = GradedSubspace(F.ring, j, ech.reduced())
    return spaces


def hilbert_sequence(F: Polynomial, pairing: str = "diff") -> HilbertSequence:
    """H_k = rank of the k-th catalecticant = dim S_k o F, for k = 0..deg F."""
    spaces = derived_spaces(F, pairing)
    d = len(spaces) - 1
    return HilbertSequence(tuple(spaces[d - k].dim for k in range(d + 1)))


def hilbert_sequence_direct(F: Polynomial, pairing: str = "diff") -> HilbertSequence:
    """Same numbers straight from catalecticant ranks; for small cases."""
    d = _form_degree(F)
    return HilbertSequence(tuple(catalecticant(F, k, pairing).rank() for k in range(d + 1)))


def orthogonal_complement(space: GradedSubspace, pairing: str,
                          order: MonomialOrder | str = CONCA_LEX,
                          within: Iterable[Monomial] | None = None) -> GradedSubspace:
    """Complement of ``space`` under the pairing <y^U, x^V> = weight(U) [U = V].

    ``within`` restricts the answer to a set of monomials containing the
    support of ``space``; by default all monomials of the degree are used.
    """
    order = get_order(order)
    opposite = get_order("reverse_conca_lex" if order.name == "conca_lex" else "conca_lex")
    rows = space.reordered(opposite).rows if space.order != opposite else space.rows
    cols = list(within) if within is not None else space.ring.monomials(space.degree)
    # Reduced with respect to the opposite order, row p only involves monomials
    # larger than p in ``order``; the complement is then already reduced.
    by_col: dict = {}
    for p, row in rows.items():
        for t, x in row.items():
            if t != p:
                by_col.setdefault(t, []).append((p, x))
    out = {}
    for t in cols:
        if t in rows:
            continue
        wt = pairing_weight(t, pairing)
        vec = {t: Fraction(1)}
        for p, x in by_col.get(t, ()):
            vec[p] = -x * wt / pairing_weight(p, pairing)
        out[t] = vec
    return GradedSubspace(space.ring, space.degree, out, order)


def annihilator_slice(F: Polynomial, k: int, pairing: str = "diff",
                      order: MonomialOrder | str = CONCA_LEX) -> GradedSubspace:
    """Ann(F)_k computed as the complement of S_{d-k} o F."""
    d = _form_degree(F)
    if k > d:
        return ann_slice(F, k, pairing, order)
    return orthogonal_complement(derived_spaces(F, pairing)[k], pairing, order)


def integrate(prev: GradedSubspace, pairing: str,
              conditions: Sequence[Polynomial] = ()) -> GradedSubspace:
    """{G in R_k : every y_i o G lies in ``prev`` and g o G = 0 for g in conditions}.

    ``prev`` lives in degree k-1; the conditions are forms of degree k in S.
    """
    _check_pairing(pairing)
    ring, k = prev.ring, prev.degree + 1
    nv = ring.nvars
    supp = prev.support()
    diff = pairing == "diff"

    def parents_ok(u):
        for j in range(nv):
            if u[j] and (u[:j] + (u[j] - 1,) + u[j + 1:]) not in supp:
                return False
        return True

    cands: set = set()
    rejected: set = set()
    for s in supp:
        for i in range(nv):
            u = s[:i] + (s[i] + 1,) + s[i + 1:]
            if u in cands or u in rejected:
                continue
            (cands if parents_ok(u) else rejected).add(u)

    rows = prev.rows if prev.order == CONCA_LEX else prev.reordered(CONCA_LEX).rows
    nonpivots = supp.difference(rows)
    constraints = []
    for i in range(nv):
        eqs: dict = {}
        for t in nonpivots:
            u = t[:i] + (t[i] + 1,) + t[i + 1:]
            if u in cands:
                eqs[t] = {u: Fraction(u[i] if diff else 1)}
        for p, row in rows.items():
            u = p[:i] + (p[i] + 1,) + p[i + 1:]
            if u not in cands:
                continue
            w = u[i] if diff else 1
            for t, x in row.items():
                if t == p:
                    continue
                eq = eqs.setdefault(t, {})
                v = eq.get(u, 0) - w * x
                if v:
                    eq[u] = v
                else:
                    eq.pop(u, None)
        constraints.extend(integral(eq) for eq in eqs.values() if eq)
    for g in conditions:
        eq = {u: c * pairing_weight(u, pairing) for u, c in g.terms.items() if u in cands}
        if eq:
            constraints.append(integral(eq))
    order = CONCA_LEX
    basis = nullspace(constraints, cands, key=order.key)
    return GradedSubspace(ring, k, {order.leading(v): v for v in basis}, order)


def unit_space(ring: RingSpec) -> GradedSubspace:
    u = ring.unit()
    return GradedSubspace(ring, 0, {u: {u: Fraction(1)}})


def ideal_inverse_system(gens: Sequence[Polynomial], ring: RingSpec, pairing: str,
                         upto: int) -> list[GradedSubspace]:
    """J_k = {G in R_k : h o G = 0 for all h in (gens)_k} for k = 0..upto."""
    by_degree: dict[int, list[Polynomial]] = {}
    for g in gens:
        if not g.terms:
            continue
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        by_degree.setdefault(g.degree(), []).append(g)
    if by_degree.get(0):
        spaces = [GradedSubspace(ring, 0, {})]
    else:
        spaces = [unit_space(ring)]
    for k in range(1, upto + 1):
        spaces.append(integrate(spaces[-1], pairing, by_degree.get(k, ())))
    return spaces


# -- generators ----------------------------------------------------------------------

@dataclass
class GeneratorProfile:
    """Number of minimal generators of Ann(F) in each degree up to deg F.

    ``socle`` counts the generators in degree deg F + 1, which every
    Artinian Gorenstein quotient may need and which are reported apart.
    """

    counts: dict[int, int]
    socle: int
    degree: int

    @property
    def max_degree(self) -> int:
        degs = [k for k, c in self.counts.items() if c]
        if self.socle:
            degs.append(self.degree + 1)
        return max(degs) if degs else 0

    def as_dict(self) -> dict[int, int]:
        return {k: c for k, c in sorted(self.counts.items()) if c}


def minimal_generator_profile(F: Polynomial, pairing: str = "diff",
                              up_to: int | None = None,
                              spaces: list[GradedSubspace] | None = None) -> GeneratorProfile:
    """count_k = dim Ann_k - dim S_1 Ann_{k-1}, computed on the inverse-system side."""
    spaces = spaces or derived_spaces(F, pairing)
    d = len(spaces) - 1
    top = d + 1 if up_to is None else min(up_to, d + 1)
    counts = {}
    socle = 0
    for k in range(1, top + 1):
        q = integrate(spaces[k - 1], pairing)
        have = spaces[k].dim if k <= d else 0
        if k == d + 1:
            socle = q.dim
        else:
            counts[k] = q.dim - have
    return GeneratorProfile(counts, socle, d)


def minimal_generator_profile_direct(F: Polynomial, pairing: str = "diff",
                                     up_to: int | None = None) -> dict[int, int]:
    """Reference version of the profile using S-side slices; small cases only."""
    d = _form_degree(F)
    top = d + 1 if up_to is None else up_to
    out = {}
    prev = None
    for k in range(1, top + 1):
        ann = ann_slice(F, k, pairing)
        if prev is None:
            have = 0
        else:
            have = ideal_slice(prev.basis, k, F.ring).dim if prev.dim else 0
        if ann.dim - have:
            out[k] = ann.dim - have
        prev = ann
    return out


def monomial_generators(F: Polynomial, k: int, pairing: str = "diff",
                        spaces: list[GradedSubspace] | None = None) -> list[Monomial]:
    """Monomials of Ann(F)_k that are not in S_1 Ann(F)_{k-1}.

    A monomial lies in a subspace's complement exactly when it is missing
    from the support of that subspace, so this is supp(Q_k) minus supp(L_k),
    where Q_k is the complement of S_1 Ann_{k-1}.
    """
    spaces = spaces or derived_spaces(F, pairing)
    d = len(spaces) - 1
    q = integrate(spaces[k - 1], pairing)
    inside = spaces[k].support() if k <= d else set()
    return CONCA_LEX.sorted(q.support() - inside)


@dataclass
class VerificationReport:
    passed: bool
    degrees: dict[int, dict] = field(default_factory=dict)
    non_annihilating: list[int] = field(default_factory=list)

    @property
    def failures(self) -> dict[int, int]:
        return {k: v["gap"] for k, v in self.degrees.items() if v["gap"]}

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "non_annihilating": self.non_annihilating,
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
        }


def verify_generator_set(F: Polynomial, gens: Sequence[Polynomial], pairing: str = "diff",
                         max_degree: int | None = None,
                         spaces: list[GradedSubspace] | None = None) -> VerificationReport:
    """Check that ``gens`` generates Ann(F) in degrees 1 .. deg F + 1.

    Passing means every generator kills F and (gens)_k has the dimension of
    Ann(F)_k in each checked degree; the first condition makes the ideal a
    subspace of the annihilator, so equal dimensions mean equal spaces.
    Degree deg F + 1 is included: Ann(F) contains all of S_{d+1}, so the
    generators must produce it too.
    """
    _check_pairing(pairing)
    spaces = spaces or derived_spaces(F, pairing)
    d = len(spaces) - 1
    top = d + 1 if max_degree is None else min(max_degree, d + 1)
    bad = [i for i, g in enumerate(gens) if apply(g, F, pairing)]
    inv = ideal_inverse_system(gens, F.ring, pairing, top)
    report = VerificationReport(passed=not bad, non_annihilating=bad)
    for k in range(1, top + 1):
        have = spaces[k].dim if k <= d else 0
        total = F.ring.dim(k)
        report.degrees[k] = {
            "ideal_dim": total - inv[k].dim,
            "ann_dim": total - have,
            "gap": inv[k].dim - have,
        }
        if inv[k].dim != have:
            report.passed = False
    return report


@dataclass
class TriangularityReport:
    """Outcome of the triangularity check for (form, n, k).

    ``outside_unacceptable`` lists unacceptable monomials that the ideal
    fails to contain; ``uncovered`` lists monomials that should be leading
    monomials of ideal elements under the reverse order but are not.
    """

    form: str
    n: int
    k: int
    ideal_dim: int
    initial_count: int
    outside_unacceptable: list
    uncovered: list

    @property
    def passed(self) -> bool:
        return not self.outside_unacceptable and not self.uncovered


def check_triangularity(form: str, k: int, n: int) -> TriangularityReport:
    """Check that the quadric (and cubic) generators reach every non-initial monomial.

    With J_k the complement of the degree-k slice I_k of the generated ideal:

    * a monomial is in I_k iff it is missing from supp(J_k), so condition (i)
      is supp(J_k) contained in the acceptable monomials;
    * the leading monomials of I_k under the reverse order are exactly the
      monomials that are *not* lexicographic pivots of J_k, so condition (ii)
      is that every pivot of J_k is an initial monomial.
    """
    from .combinatorics import acceptable_monomials, initial_monomials
    from .invariants import generators_det, generators_perm_full

    if not 3 <= k <= n:
        raise ValueError("triangularity is checked for 3 <= k <= n")
    gens = {"det": generators_det, "perm": generators_perm_full}[form](n)
    ring = gens[0].ring
    J = ideal_inverse_system(gens, ring, "diff", k)[k]
    acc = acceptable_monomials(n, k)
    init = initial_monomials(form, n, k)
    return TriangularityReport(
        form=form, n=n, k=k,
        ideal_dim=ring.dim(k) - J.dim,
        initial_count=len(init),
        outside_unacceptable=CONCA_LEX.sorted(J.support() - acc),
        uncovered=CONCA_LEX.sorted(set(J.rows) - init),
    )
