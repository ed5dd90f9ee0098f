"""Apolar ideals of determinants, permanents, hafnians and immanants of matrices.

The subpackages build exact polynomials in matrix entries, compute their
apolar ideals under differentiation or contraction, check explicit
generating sets and Groebner bases, derive rank lower bounds, and decompose
monomial spaces into irreducible representations of the symmetric group.
"""

from .apolar import (GradedSubspace, HilbertSequence, derived_spaces, hilbert_sequence,
                     minimal_generator_profile, verify_generator_set)
from .invariants import det_poly, form_poly, generator_set, hafnian_poly, perm_poly
from .ring import (DIVIDED, GENERIC, SYMMETRIC, USUAL, Polynomial, RingSpec,
                   format_poly, parse_poly)

__version__ = "0.1.0"

__all__ = [
    "GradedSubspace", "HilbertSequence", "derived_spaces", "hilbert_sequence",
    "minimal_generator_profile", "verify_generator_set", "det_poly", "form_poly",
    "generator_set", "hafnian_poly", "perm_poly", "DIVIDED", "GENERIC", "SYMMETRIC",
    "USUAL", "Polynomial", "RingSpec", "format_poly", "parse_poly",
]
