"""Exact sparse linear algebra over Q.

Vectors are dicts ``column -> int``.  Elimination is fraction-free: a row
is combined as ``r[c] * v - v[c] * r`` and kept primitive (content divided
out), so only Python integers are touched in the inner loop.  Rationals
appear only when a caller asks for a reduced basis.

Column order is given by a key function; the *leading* column of a vector
is the one with the largest key.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Mapping

Vector = dict  # column -> int


def primitive(v: Vector) -> Vector:
    """Divide out the content of an integer vector (in place) and return it."""
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        for k in v:
            v[k] //= g
    return v


def integral(v: Mapping[Hashable, Fraction]) -> Vector:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v.values():
        den = lcm(den, Fraction(x).denominator)
    return primitive({k: int(Fraction(x) * den) for k, x in v.items() if x})


class Echelon:
    """Incrementally maintained row echelon form.

    Each stored row is primitive, and its leading column (largest key) is
    distinct from every other row's.  ``key`` must return values whose
    natural order is the column order; by default columns compare directly.
    """

    def __init__(self, key: Callable | None = None, heapkey: Callable | None = None):
        self._key = key
        # heapkey(c) must sort ascending exactly when key(c) sorts descending;
        # supplying one avoids a Python-level comparison wrapper.
        if heapkey is None:
            heapkey = (lambda c: _Desc(key(c))) if key else _Desc
        self._hk = heapkey
        self.rows: dict[Hashable, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self._key, reverse=True)

    def _top_reduce(self, v: Vector):
        """Reduce ``v`` in place until its leading column is not a pivot.

        Returns the leading column, or None when ``v`` reduces to zero.
        """
        rows = self.rows
        hk = self._hk
        heap = [(hk(c), c) for c in v]
        heapify(heap)
        steps = 0
        while heap:
            _, c = heappop(heap)
            a = v.get(c)
            if not a:
                continue
            row = rows.get(c)
            if row is None:
                # might have been pushed twice; the live entry is what matters
                return c
            r = row[c]
            g = gcd(a, r)
            ma, mr = r // g, a // g
            if ma != 1:
                if ma == -1:
                    for k in v:
                        v[k] = -v[k]
                else:
                    for k in v:
                        v[k] *= ma
            for k, x in row.items():
                nv = v.get(k, 0) - mr * x
                if nv:
                    if k not in v:
                        heappush(heap, (hk(k), k))
                    v[k] = nv
                else:
                    v.pop(k, None)
            steps += 1
            if steps % 32 == 0:
                primitive(v)
        return None

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        v = {k: int(x) for k, x in vec.items() if x}
        if not v:
            return False
        lead = self._top_reduce(v)
        if lead is None:
            return False
        primitive(v)
        if v[lead] < 0:
            for k in v:
                v[k] = -v[k]
        self.rows[lead] = v
        return True

    def extend(self, vecs: Iterable[Mapping]) -> int:
        return sum(self.add(v) for v in vecs)

    def contains(self, vec: Mapping) -> bool:
        v = {k: int(x) for k, x in vec.items() if x}
        return not v or self._top_reduce(v) is None

    def reduced(self) -> dict[Hashable, dict[Hashable, Fraction]]:
        """Reduced row echelon form: pivot -> row with pivot entry 1.

        No row has a nonzero entry in another row's pivot column.
        """
        order = sorted(self.rows, key=self._key)  # smallest pivot first
        done: dict[Hashable, Vector] = {}
        for p in order:
            v = dict(self.rows[p])
            for c in [c for c in v if c != p and c in done]:
                a = v.get(c)
                if not a:
                    continue
                row = done[c]
                r = row[c]
                g = gcd(a, r)
                ma, mr = r // g, a // g
                if ma != 1:
                    for k in v:
                        v[k] *= ma
                for k, x in row.items():
                    nv = v.get(k, 0) - mr * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            primitive(v)
            if v[p] < 0:
                for k in v:
                    v[k] = -v[k]
            done[p] = v
        out = {}
        for p, v in done.items():
            lead = v[p]
            out[p] = {k: Fraction(x, lead) for k, x in v.items()}
        return out

    def reduced_integral(self) -> dict[Hashable, Vector]:
        """Like :meth:`reduced` but each row scaled to a primitive integer vector."""
        return {p: integral(row) for p, row in self.reduced().items()}


class _Desc:
    """Wrapper that inverts comparison, turning heapq into a max-heap."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def rank(vectors: Iterable[Mapping], key: Callable | None = None) -> int:
    ech = Echelon(key)
    ech.extend(vectors)
    return ech.rank


def nullspace(rows: Iterable[Mapping], columns: Iterable[Hashable],
              key: Callable | None = None) -> list[dict[Hashable, Fraction]]:
    """Basis of {c : sum_k row[k] c[k] = 0 for every row} over the given columns.

    The basis comes out reduced with respect to ``key``: vector f has
    entry 1 at its free column f, which is its largest column, and no other
    free column appears in it.
    """
    columns = list(columns)
    # Eliminate with the *opposite* order so pivots land on small columns,
    # leaving the large ones free.
    if key is None:
        ech = Echelon(_Neg, heapkey=lambda c: c)
    else:
        ech = Echelon(lambda c: _Neg(key(c)), heapkey=key)
    for r in rows:
        ech.add(r)
    red = ech.reduced()
    pivots = set(red)
    out = []
    # column f appears in row p only when p is smaller than f in the original order
    by_col: dict[Hashable, list] = {}
    for p, row in red.items():
        for k, x in row.items():
            if k != p:
                by_col.setdefault(k, []).append((p, x))
    for f in columns:
        if f in pivots:
            continue
        vec = {f: Fraction(1)}
        for p, x in by_col.get(f, ()):
            vec[p] = -x
        out.append(vec)
    return out


class _Neg:
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __gt__(self, other):
        return self.k < other.k

    def __eq__(self, other):
        return self.k == other.k

    def __le__(self, other):
        return self.k >= other.k

    def __ge__(self, other):
        return self.k <= other.k
