"""Exact hermitian Morita theory over division algebras with involution.

Forms over ``(M_n(D), *)`` with ``*`` an adjoint involution are carried to
forms over ``(M_n(D), -t)`` by scaling with ``S^-1``, and from there to
forms over ``(D, -)`` by reading a Gram matrix off unit-matrix probes.
Everything is computed over the rationals with no rounding.
"""

from .algebra import (
    AlgebraDescriptor,
    AlgebraElement,
    quadratic_field,
    quaternion_algebra,
    rational_field,
)
from .forms import FormRecord, Side, Symmetry, check_symmetry, congruence, hyperbolic, orthogonal_sum, random_form
from .involutions import InvolutionSpec, apply_involution, involution_from_S
from .matrices import Matrix, bar_transpose, mat_inv, unit_matrix
from .morita import (
    EquivalenceReport,
    extract_gram,
    lift_form,
    morita_lift,
    morita_reduce,
    scale_form,
    unscale_form,
)

__all__ = [
    "AlgebraDescriptor",
    "AlgebraElement",
    "EquivalenceReport",
    "FormRecord",
    "InvolutionSpec",
    "Matrix",
    "Side",
    "Symmetry",
    "apply_involution",
    "bar_transpose",
    "check_symmetry",
    "congruence",
    "extract_gram",
    "hyperbolic",
    "involution_from_S",
    "lift_form",
    "mat_inv",
    "morita_lift",
    "morita_reduce",
    "orthogonal_sum",
    "quadratic_field",
    "quaternion_algebra",
    "random_form",
    "rational_field",
    "scale_form",
    "unit_matrix",
    "unscale_form",
]
