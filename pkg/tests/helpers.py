"""Small constructors shared by the test modules."""

from apolarity.ring import (GENERIC, SYMMETRIC, USUAL, RingSpec, letter_map,
                            polynomial_from_letters)


def sym(n: int) -> RingSpec:
    return RingSpec(n, SYMMETRIC, USUAL)


def gen(n: int) -> RingSpec:
    return RingSpec(n, GENERIC, USUAL)


def upper_letters(n: int) -> dict:
    """A, B, C, ... over the upper triangle, row by row."""
    return letter_map(n, "ABCDEFGHIJKLMNOPQRSTUVWXYZ")


def from_words(ring, text: str):
    """Parse '2*BI + CG - DF'-style sums of letter words (symmetric letters)."""
    letters = letter_map(ring.n, "ABCDEFGHIJKLMNOPQRSTUVWXYZ")
    terms = []
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip().replace(" ", "")
        if not chunk:
            continue
        sign = -1 if chunk.startswith("-") else 1
        chunk = chunk.lstrip("-")
        coeff, _, word = chunk.rpartition("*")
        terms.append((sign * int(coeff or 1), word.upper()))
    return polynomial_from_letters(ring, letters, terms)
