"""Polynomial rings in the entries of an n x n matrix of indeterminates.

A ring is described by a :class:`RingSpec`: the matrix size, whether the
matrix is symmetric (entries x[i,j] with i <= j) or generic (all n^2
entries), and whether monomials are ordinary powers or divided powers.

Monomials are dense exponent tuples indexed by the variable ranking
x[1,1] > x[1,2] > ... > x[1,n] > x[2,2] > ... (row-major for the generic
layout).  With that indexing, Python tuple comparison *is* the lexicographic
order used throughout the package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Monomial = tuple  # tuple[int, ...] of exponents, one slot per ring variable
Scalar = Union[int, Fraction]

SYMMETRIC = "symmetric"
GENERIC = "generic"
USUAL = "usual"
DIVIDED = "divided"


class VarId(NamedTuple):
    row: int
    col: int


@lru_cache(maxsize=None)
def _variables(n: int, layout: str) -> tuple[VarId, ...]:
    if layout == SYMMETRIC:
        return tuple(VarId(i, j) for i in range(1, n + 1) for j in range(i, n + 1))
    return tuple(VarId(i, j) for i in range(1, n + 1) for j in range(1, n + 1))


@lru_cache(maxsize=None)
def _index(n: int, layout: str) -> dict[VarId, int]:
    return {v: k for k, v in enumerate(_variables(n, layout))}


@dataclass(frozen=True)
class RingSpec:
    """Shape of a polynomial ring in matrix entries."""

    n: int
    layout: str = SYMMETRIC
    flavor: str = USUAL

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"matrix size must be positive, got {self.n}")
        if self.layout not in (SYMMETRIC, GENERIC):
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.flavor not in (USUAL, DIVIDED):
            raise ValueError(f"unknown flavor {self.flavor!r}")

    @property
    def variables(self) -> tuple[VarId, ...]:
        return _variables(self.n, self.layout)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def symmetric(self) -> bool:
        return self.layout == SYMMETRIC

    def with_flavor(self, flavor: str) -> "RingSpec":
        return RingSpec(self.n, self.layout, flavor)

    def var_index(self, i: int, j: int) -> int:
        """Index of x[i,j]; symmetric rings identify x[i,j] with x[j,i]."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise KeyError(f"variable index ({i},{j}) out of range for n={self.n}")
        if self.symmetric and i > j:
            i, j = j, i
        return _index(self.n, self.layout)[VarId(i, j)]

    def var_monomial(self, i: int, j: int) -> Monomial:
        e = [0] * self.nvars
        e[self.var_index(i, j)] = 1
        return tuple(e)

    def unit(self) -> Monomial:
        return (0,) * self.nvars

    def monomials(self, degree: int) -> list[Monomial]:
        """All monomials of the given degree, largest first."""
        return list(monomials_of_degree(self.nvars, degree))

    def dim(self, degree: int) -> int:
        return math.comb(self.nvars + degree - 1, degree) if degree >= 0 else 0


# -- monomial helpers -------------------------------------------------------

def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """Exponent tuples of total ``degree`` in descending lexicographic order."""
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        yield tuple(e)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_factorial(a: Monomial) -> int:
    out = 1
    for x in a:
        if x > 1:
            out *= math.factorial(x)
    return out


def mono_binomial(total: Monomial, part: Monomial) -> int:
    """Multinomial-style product of binomials C(total_i, part_i)."""
    out = 1
    for t, p in zip(total, part):
        if p:
            out *= math.comb(t, p)
    return out


# -- polynomials --------------------------------------------------------------

class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions.  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, Scalar] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != ring.nvars:
                        raise ValueError("monomial length does not match ring")
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: RingSpec, c: Scalar) -> "Polynomial":
        return cls(ring, {ring.unit(): c})

    @classmethod
    def var(cls, ring: RingSpec, i: int, j: int) -> "Polynomial":
        return cls._raw(ring, {ring.var_monomial(i, j): Fraction(1)})

    @classmethod
    def monomial(cls, ring: RingSpec, m: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls(ring, {tuple(m): c})

    # -- inspection --
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other) if other else not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def monomials(self) -> list[Monomial]:
        """Support in descending lexicographic order."""
        return sorted(self.terms, reverse=True)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # -- arithmetic --
    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        divided = self.ring.flavor == DIVIDED
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                m = mono_mul(a, b)
                c = ca * cb
                if divided:
                    c *= mono_binomial(m, a)
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def map_monomials(self, fn) -> "Polynomial":
        """Apply a monomial substitution ``fn`` (monomial -> monomial)."""
        out: dict = {}
        for m, c in self.terms.items():
            key = fn(m)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Polynomial._raw(self.ring, out)

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


# -- apolarity actions --------------------------------------------------------

def _act(h: Polynomial, F: Polynomial, weighted: bool) -> Polynomial:
    if h.ring.n != F.ring.n or h.ring.layout != F.ring.layout:
        raise ValueError("operator and form live over different matrix shapes")
    out: dict = {}
    for u, a in h.terms.items():
        for v, b in F.terms.items():
            if not mono_divides(u, v):
                continue
            m = mono_div(v, u)
            c = a * b
            if weighted:
                c *= mono_factorial(v) // mono_factorial(m)
            val = out.get(m, 0) + c
            if val:
                out[m] = val
            else:
                out.pop(m, None)
    return Polynomial._raw(F.ring, out)


def diff_apply(h: Polynomial, F: Polynomial) -> Polynomial:
    """Let ``h`` act on ``F`` by partial differentiation: y[i,j] acts as d/dx[i,j]."""
    return _act(h, F, weighted=True)


def contract_apply(h: Polynomial, F: Polynomial) -> Polynomial:
    """Let ``h`` act on ``F`` by contraction.

    y^U sends x^V to x^(V-U) when U <= V and to zero otherwise, with no
    combinatorial factor.  The same rule covers divided-power forms, where
    it is the natural action Y^U o X^[V] = X^[V-U].
    """
    return _act(h, F, weighted=False)


PAIRINGS = {"diff": diff_apply, "contract": contract_apply}


def apply(h: Polynomial, F: Polynomial, pairing: str) -> Polynomial:
    try:
        return PAIRINGS[pairing](h, F)
    except KeyError:
        raise ValueError(f"unknown pairing {pairing!r}") from None


def to_divided(F: Polynomial) -> Polynomial:
    """Rewrite an ordinary polynomial in the divided-power basis: x^U = U! X^[U]."""
    if F.ring.flavor != USUAL:
        raise ValueError("to_divided expects a usual-flavor polynomial")
    ring = F.ring.with_flavor(DIVIDED)
    return Polynomial._raw(ring, {m: c * mono_factorial(m) for m, c in F.terms.items()})


def from_divided(F: Polynomial) -> Polynomial:
    """Inverse of :func:`to_divided`."""
    if F.ring.flavor != DIVIDED:
        raise ValueError("from_divided expects a divided-flavor polynomial")
    ring = F.ring.with_flavor(USUAL)
    return Polynomial._raw(ring, {m: c / mono_factorial(m) for m, c in F.terms.items()})


def reinterpret(F: Polynomial, flavor: str) -> Polynomial:
    """Same coefficients, other monomial basis.

    Contraction on ordinary monomials is literally the divided-power action
    on the coefficient-identical divided-power form, so this is the bridge
    between the two viewpoints.
    """
    return Polynomial._raw(F.ring.with_flavor(flavor), dict(F.terms))


def divided_power_linear(L: Polynomial, j: int) -> Polynomial:
    """j-th divided power of a linear form: sum over |J| = j of a^J X^[J]."""
    if any(sum(m) != 1 for m in L.terms):
        raise ValueError("divided_power_linear expects a linear form")
    ring = L.ring.with_flavor(DIVIDED)
    coeffs = [(m.index(1), c) for m, c in L.terms.items()]
    out: dict = {}
    for combo in combinations_with_replacement(range(len(coeffs)), j):
        e = [0] * ring.nvars
        c = Fraction(1)
        for k in combo:
            idx, a = coeffs[k]
            e[idx] += 1
            c *= a
        if c:
            out[tuple(e)] = out.get(tuple(e), 0) + c
    return Polynomial(ring, out)


# -- text form ----------------------------------------------------------------

class PolynomialParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(
    r"\s*(?:(?P<var>[xXyY]\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])"
    r"|(?P<rat>\d+(?:/\d+)?)|(?P<op>[-+*^()]))"
)


def _tokens(text: str) -> list[tuple[str, object, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("var"):
            out.append(("var", (int(m.group("i")), int(m.group("j"))), start))
        elif m.group("rat"):
            out.append(("rat", Fraction(m.group("rat")), start))
        else:
            out.append(("op", m.group("op"), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse ``[sign] term (('+'|'-') term)*`` with ``term := [rat '*'] factor ('*' factor)*``.

    A factor is ``x[i,j]`` (or X/y/Y) optionally raised to ``^k``.  A bare
    rational is accepted as a constant term.
    """
    toks = _tokens(text)
    pos = 0
    terms: dict = {}

    def peek():
        return toks[pos]

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    while True:
        coeff = Fraction(sign)
        expo = [0] * ring.nvars
        seen_factor = False
        kind, val, off = peek()
        if kind == "rat":
            take()
            coeff *= val
            if peek()[0] == "op" and peek()[1] == "*":
                take()
            else:
                seen_factor = True  # constant term
        while not seen_factor or (peek()[0] == "op" and peek()[1] == "*"):
            if seen_factor:
                take()  # '*'
            kind, val, off = take()
            if kind != "var":
                raise PolynomialParseError("expected a variable", off)
            try:
                idx = ring.var_index(*val)
            except KeyError as exc:
                raise PolynomialParseError(f"unknown variable index {val}", off) from exc
            k = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take()
                kind, e, off = take()
                if kind != "rat" or e.denominator != 1:
                    raise PolynomialParseError("expected an integer exponent", off)
                k = int(e)
            expo[idx] += k
            seen_factor = True
        m = tuple(expo)
        v = terms.get(m, 0) + coeff
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
        kind, val, off = take()
        if kind == "end":
            break
        if kind != "op" or val not in "+-":
            raise PolynomialParseError(f"expected '+' or '-', got {val!r}", off)
        sign = -1 if val == "-" else 1
    return Polynomial(ring, terms)


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, ring: RingSpec, letter: str = "x") -> str:
    parts = []
    for (row, col), e in zip(ring.variables, m):
        if e:
            parts.append(f"{letter}[{row},{col}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_poly(p: Polynomial, letter: str | None = None) -> str:
    """Canonical text: terms in descending lexicographic order."""
    if letter is None:
        letter = "X" if p.ring.flavor == DIVIDED else "x"
    if not p.terms:
        return "0"
    out = []
    for m in p.monomials():
        c = p.terms[m]
        mono = format_monomial(m, p.ring, letter)
        mag = abs(c)
        if not mono:
            body = _format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_rational(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def polynomial_from_letters(ring: RingSpec, letters: Mapping[str, tuple[int, int]],
                            terms: Iterable[tuple[Scalar, str]]) -> Polynomial:
    """Build a polynomial from single-letter variable names, e.g. (1, "EIO").

    Handy for transcribing hand computations that name matrix entries by
    letters.
    """
    out: dict = {}
    for c, word in terms:
        e = [0] * ring.nvars
        for ch in word:
            e[ring.var_index(*letters[ch])] += 1
        m = tuple(e)
        out[m] = out.get(m, 0) + Fraction(c)
    return Polynomial(ring, out)


def letter_map(n: int, alphabet: str | None = None) -> dict[str, tuple[int, int]]:
    """Letters assigned row by row to the upper triangle: a=11, b=12, ..."""
    alphabet = alphabet or "abcdefghijklmnopqrstuvwxyz"
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    if len(cells) > len(alphabet):
        raise ValueError("not enough letters for this matrix size")
    return dict(zip(alphabet, cells))


# -- monomial orders ------------------------------------------------------------

def _negated(m: Monomial) -> tuple:
    return tuple(-x for x in m)


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials of a fixed degree.

    ``conca_lex`` is lexicographic with x[1,1] > x[1,2] > ... > x[n,n].
    ``reverse_conca_lex`` is the opposite order: its leading monomial is the
    lexicographically *smallest* one.  Both are compatible with
    multiplication on homogeneous components, which is all that is needed.
    """

    name: str

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        return m if self.name == "conca_lex" else _negated(m)

    def heapkey(self, m: Monomial):
        """Sort key that is *ascending* when the order is descending."""
        return _negated(m) if self.name == "conca_lex" else m

    def leading(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[Monomial], descending: bool = True) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=descending)


CONCA_LEX = MonomialOrder("conca_lex")
REVERSE_CONCA_LEX = MonomialOrder("reverse_conca_lex")
ORDERS = {"conca_lex": CONCA_LEX, "reverse_conca_lex": REVERSE_CONCA_LEX,
          "conca": CONCA_LEX, "reverse": REVERSE_CONCA_LEX}


def get_order(name: str | MonomialOrder) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None
