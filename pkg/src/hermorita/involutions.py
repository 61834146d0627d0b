"""Adjoint involutions ``X -> S * bar(X)^t * S^-1`` on ``M_n(D)``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DescriptorMismatch, NotEpsilonHermitian, ShapeMismatch
from .matrices import Matrix, bar_transpose, mat_inv


@dataclass(frozen=True)
class InvolutionSpec:
    """The matrix ``S`` of a nonsingular ``eps0``-hermitian form on ``D^n``.

    Build with :func:`involution_from_S`; ``epsilon0`` is detected from ``S``
    and never supplied by the caller.
    """

    S: Matrix
    S_inv: Matrix = field(repr=False, compare=False)
    epsilon0: int

    @property
    def n(self) -> int:
        return self.S.rows

    @property
    def descriptor(self):
        return self.S.descriptor

    def __call__(self, x: Matrix) -> Matrix:
        return apply_involution(self, x)

    def is_transpose_involution(self) -> bool:
        return self.S == Matrix.identity(self.descriptor, self.n)


def involution_from_S(S: Matrix) -> InvolutionSpec:
    if not S.is_square:
        raise ShapeMismatch(f"S must be square, got {S.rows}x{S.cols}")
    S_inv = mat_inv(S)
    St = bar_transpose(S)
    if St == S:
        eps0 = 1
    elif St == -S:
        eps0 = -1
    else:
        raise NotEpsilonHermitian("bar(S)^t is neither S nor -S")
    return InvolutionSpec(S=S, S_inv=S_inv, epsilon0=eps0)


def transpose_involution(descriptor, n: int) -> InvolutionSpec:
    """The involution ``X -> bar(X)^t`` (``S = I``)."""
    return involution_from_S(Matrix.identity(descriptor, n))


def apply_involution(spec: InvolutionSpec, x: Matrix) -> Matrix:
    if x.descriptor != spec.descriptor:
        raise DescriptorMismatch(f"{x.descriptor} vs {spec.descriptor}")
    if x.shape != (spec.n, spec.n):
        raise ShapeMismatch(f"expected {spec.n}x{spec.n}, got {x.rows}x{x.cols}")
    return spec.S @ bar_transpose(x) @ spec.S_inv
