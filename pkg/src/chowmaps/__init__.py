"""
chowmaps
Exact relations for the integral Chow ring of the space of degree d maps P^1 -> P^r, d odd
"""

__version__ = "0.1.0"
__author__ = "chowmaps developers"

# Polynomials
from .algebra.poly_core import (
    QQ_CHERN, ZZ_CHERN, TruncatedSeries, format_poly, from_terms, grade_component,
    poly_exact_div, poly_mul, series_invert, substitute, to_terms
)
from .algebra.weights import build_P, divide_by_weight_diff, specialize_H, symmetrize_to_chern

# Relations
from .relations.first_envelope import claim_R_coefficients, genfun_alpha1, recursion_alpha1
from .relations.localization import (
    alpha_i0, alpha_ik, hadamard_genfun_alpha0, localize_pushforward, poly_in_d_check
)
from .relations.pullback import phi_pullback_check
from .relations.catalog import compute_relation_set

# Ideals
from .ideals.graded_ideal import GradedIdeal, ideal_equal, membership, minimality_check, slice_basis
from .ideals.binomials import binomial_gcd

# Services
from .services.presentation import presentation_document
from .services.verification import VerificationService, conjecture_verify, reduction_verify

# Configuration
from .core.config import Settings, get_settings, load_settings

# Exceptions
from .core.exceptions import (
    ChowMapsError, EvenDegreeError, IdentityViolatedError, NotDivisibleError,
    NotHomogeneousError, NotInvertibleError, NotSymmetricError
)

__all__ = [
    # Polynomials
    "QQ_CHERN",
    "ZZ_CHERN",
    "TruncatedSeries",
    "format_poly",
    "from_terms",
    "grade_component",
    "poly_exact_div",
    "poly_mul",
    "series_invert",
    "substitute",
    "to_terms",
    "build_P",
    "divide_by_weight_diff",
    "specialize_H",
    "symmetrize_to_chern",

    # Relations
    "claim_R_coefficients",
    "genfun_alpha1",
    "recursion_alpha1",
    "alpha_i0",
    "alpha_ik",
    "hadamard_genfun_alpha0",
    "localize_pushforward",
    "poly_in_d_check",
    "phi_pullback_check",
    "compute_relation_set",

    # Ideals
    "GradedIdeal",
    "ideal_equal",
    "membership",
    "minimality_check",
    "slice_basis",
    "binomial_gcd",

    # Services
    "presentation_document",
    "VerificationService",
    "conjecture_verify",
    "reduction_verify",

    # Configuration
    "Settings",
    "get_settings",
    "load_settings",

    # Exceptions
    "ChowMapsError",
    "EvenDegreeError",
    "IdentityViolatedError",
    "NotDivisibleError",
    "NotHomogeneousError",
    "NotInvertibleError",
    "NotSymmetricError",
]


def get_version() -> str:
    """Get package version"""
    return __version__


def get_info() -> dict:
    """Get package information"""
    return {
        "name": "chowmaps",
        "version": __version__,
        "author": __author__,
        "description": "Exact relations for the integral Chow ring of spaces of rational maps of odd degree",
    }
