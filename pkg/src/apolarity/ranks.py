"""Lower bounds for the rank and cactus rank of a form.

Three independent bounds are provided:

* the Ranestad-Schreyer bound length / d, where d is the largest degree of
  a minimal generator of the apolar ideal;
* the differential rank, the largest value of the Hilbert function;
* the Landsberg-Teitler bound for the symmetric determinant, which adds the
  dimension of a singular locus to a minor-space dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .apolar import (GradedSubspace, HilbertSequence, derived_spaces,
                     minimal_generator_profile)
from .combinatorics import minor_space_dim
from .ring import Polynomial


# -- Ranestad-Schreyer and differential rank ------------------------------------------

def rs_bound(F: Polynomial, pairing: str = "diff", d: int | None = None,
             spaces: list[GradedSubspace] | None = None) -> Fraction:
    """Exact length / d.

    ``d`` defaults to the largest degree of a minimal generator, socle
    generators in degree deg F + 1 excluded.  Passing ``d`` overrides it,
    which is how tables that use a fixed divisor are reproduced.
    """
    spaces = spaces or derived_spaces(F, pairing)
    length = sum(s.dim for s in spaces)
    if d is None:
        d = generator_degree(F, pairing, spaces)
    if d <= 0:
        raise ValueError("the divisor must be positive")
    return Fraction(length, d)


def generator_degree(F: Polynomial, pairing: str = "diff",
                     spaces: list[GradedSubspace] | None = None) -> int:
    profile = minimal_generator_profile(F, pairing, spaces=spaces)
    degs = [k for k, c in profile.counts.items() if c]
    return max(degs) if degs else profile.degree + 1


def l_diff(F: Polynomial | HilbertSequence | Sequence[int], pairing: str = "diff") -> int:
    """Largest entry of the Hilbert sequence (the catalecticant bound)."""
    if isinstance(F, Polynomial):
        return max(s.dim for s in derived_spaces(F, pairing))
    return max(F)


# -- Landsberg-Teitler for the symmetric determinant ----------------------------------

@dataclass(frozen=True)
class SigmaDimension:
    """Dimension of the singular locus used by the bound at a given t.

    At t = n the locus is empty and its dimension is taken to be -1.
    """

    n: int
    t: int

    @property
    def value(self) -> int:
        n, t = self.n, self.t
        if t == n:
            return -1
        return (n - t - 1) * (n - t) // 2 + (t + 1) * (n - t - 1)


@dataclass(frozen=True)
class LTBound:
    bound: int
    t: int
    claimed_argmax: int
    computed_argmax: int


def lt_value(n: int, t: int) -> int:
    if not 1 <= t <= n - 1:
        raise ValueError(f"t must lie in 1..{n - 1}, got {t}")
    return minor_space_dim(n, t) + SigmaDimension(n, t).value + 1


def lt_bound_det(n: int, t: int | None = None) -> LTBound:
    """Bound for the rank of the symmetric n x n determinant.

    Without ``t`` the bound is maximized over 1 <= t <= n - 1 (the smallest
    maximizer wins ties).  The claimed maximizer floor(n/2) is reported next
    to the computed one so that a disagreement is visible.
    """
    if n < 2:
        raise ValueError("the bound needs n >= 2")
    values = {s: lt_value(n, s) for s in range(1, n)}
    best = max(values.values())
    computed = min(s for s, v in values.items() if v == best)
    if t is None:
        t = computed
    elif t not in values:
        raise ValueError(f"t must lie in 1..{n - 1}, got {t}")
    return LTBound(values[t], t, n // 2, computed)


# -- reports -----------------------------------------------------------------------

@dataclass
class RankReport:
    n: int
    form: str
    pairing: str
    length: int
    max_gen_degree: int
    rs_bound: Fraction
    l_diff: int
    lt_bound: LTBound | None = None

    def as_dict(self) -> dict:
        out = {
            "n": self.n, "form": self.form, "pairing": self.pairing,
            "length": self.length, "max_gen_degree": self.max_gen_degree,
            "rs_bound": str(self.rs_bound), "rs_bound_decimal": render_decimal(self.rs_bound, 2),
            "l_diff": self.l_diff,
        }
        if self.lt_bound is not None:
            out["lt_bound"] = {
                "bound": self.lt_bound.bound, "t": self.lt_bound.t,
                "claimed_argmax": self.lt_bound.claimed_argmax,
                "computed_argmax": self.lt_bound.computed_argmax,
            }
        return out


def rank_report(F: Polynomial, form: str, pairing: str = "diff") -> RankReport:
    spaces = derived_spaces(F, pairing)
    d = generator_degree(F, pairing, spaces)
    length = sum(s.dim for s in spaces)
    lt = None
    if form == "det" and pairing == "diff" and F.ring.symmetric and F.ring.n >= 2:
        lt = lt_bound_det(F.ring.n)
    return RankReport(
        n=F.ring.n, form=form, pairing=pairing, length=length, max_gen_degree=d,
        rs_bound=Fraction(length, d), l_diff=max(s.dim for s in spaces), lt_bound=lt,
    )


def render_decimal(x: Fraction | int, places: int) -> str:
    """Integers print plainly, short exact decimals exactly, the rest truncated.

    5/2 -> "2.5", 889/4 -> "222.25" with two places, 43/3 -> "14.3" with one.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scale = 10 ** places
    digits = math.floor(x * scale)
    whole, frac = divmod(digits, scale)
    text = f"{frac:0{places}d}".rstrip("0")
    return f"{sign}{whole}.{text}" if text else f"{sign}{whole}"
