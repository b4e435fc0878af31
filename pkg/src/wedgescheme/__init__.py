"""Exact computations with the exterior square of GL_n.

Wedge powers of matrices, the Plücker ideal of Gr(2, n), membership in the
group scheme wedge^2 GL_n via exterior numbers, factorizations of wedged
transvections, and weight diagrams of type (A_{n-1}, varpi_2).
"""
from .combinat import pair_partitions, rank, sign_concat, subsets, unrank
from .diagrams import build_diagram, diagram_exterior_number, elementary_square, path_of, render
from .errors import (
    ArityOutOfRange,
    InvalidIndexSet,
    NotAUnit,
    NotInvertible,
    NotInvertibleModulo,
    OverlappingIndices,
    ParseError,
    RankTooSmall,
    RingMismatch,
    ShapeMismatch,
    UnsupportedFormat,
    UnsupportedRing,
    WedgeError,
)
from .exalg import Matrix, det, inverse, matmul, minor, wedge
from .pluecker import QuadForm, act, canonical_basis, in_ideal, plucker_poly
from .scalars import QQ, ZZ, Ring, Scalar, Zmod
from .scheme_eqs import (
    b_matrix,
    congruence_membership,
    exterior_number,
    membership,
    second_form_membership,
    theta_compose,
    theta_from_minors,
    transvection_ext_numbers,
)
from .transvect import Transvection, decompose_wedge2, elementary, random_elementary, verify_decomposition

__version__ = "0.1.0"

__all__ = [
    "ArityOutOfRange", "InvalidIndexSet", "Matrix", "NotAUnit", "NotInvertible", "NotInvertibleModulo",
    "OverlappingIndices", "ParseError", "QQ", "QuadForm", "RankTooSmall", "Ring", "RingMismatch", "Scalar",
    "ShapeMismatch", "Transvection", "UnsupportedFormat", "UnsupportedRing", "WedgeError", "ZZ", "Zmod",
    "act", "b_matrix", "build_diagram", "canonical_basis", "congruence_membership", "decompose_wedge2", "det",
    "diagram_exterior_number", "elementary", "elementary_square", "exterior_number", "in_ideal", "inverse",
    "matmul", "membership", "minor", "pair_partitions", "path_of", "plucker_poly", "random_elementary", "rank",
    "render", "second_form_membership", "sign_concat", "subsets", "theta_compose", "theta_from_minors",
    "transvection_ext_numbers", "unrank", "verify_decomposition", "wedge",
]
