"""Exact certification of parallel k-differentials for rational maps of the sphere.

A k-differential q is *parallel* for a rational map f when f*q = lambda q.
The package classifies postcritically finite maps by their orbifold
signature, builds the forced tensor for the six parabolic types and
certifies the eigenvalue as an exact polynomial identity.
"""

from .algebra import INF, Q, QI, QW, Field, Poly, RationalFunction, Scalar, field_from_flag, quadratic_field
from .forge import (
    CurveSpec, EndoSpec, chebyshev, cm_quotient_map, endo_degree, multiplication_map,
    power_map, torsion_translations, twist_by_translation,
)
from .orbifold import OrbifoldSignature, classify, enumerate_parabolic_signatures, nu_function, postcritical_set
from .parse import ParseError, parse_differential_parts, parse_rational, parse_scalar
from .ratmap import (
    PointSet, RatMap, compose, image_of_pointset, local_degree, mobius, mobius_normal_form,
    preimage_of_pointset, ramification_divisor,
)
from .tensor import (
    KDifferential, ParallelCertificate, eigenvalue_modulus, minimal_k, parallel_factor,
    pullback, search_parallel, validate_constraints,
)

__version__ = "0.1.0"

__all__ = [
    "INF", "Q", "QI", "QW", "Field", "Poly", "RationalFunction", "Scalar",
    "field_from_flag", "quadratic_field",
    "CurveSpec", "EndoSpec", "chebyshev", "cm_quotient_map", "endo_degree",
    "multiplication_map", "power_map", "torsion_translations", "twist_by_translation",
    "OrbifoldSignature", "classify", "enumerate_parabolic_signatures", "nu_function",
    "postcritical_set", "ParseError", "parse_differential_parts", "parse_rational",
    "parse_scalar", "PointSet", "RatMap", "compose", "image_of_pointset", "local_degree",
    "mobius", "mobius_normal_form", "preimage_of_pointset", "ramification_divisor",
    "KDifferential", "ParallelCertificate", "eigenvalue_modulus", "minimal_k",
    "parallel_factor", "pullback", "search_parallel", "validate_constraints",
]
