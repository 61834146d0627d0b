"""Seeded random generators for elements, matrices, involutions.

All functions take a :class:`random.Random` so results are a pure function
of the seed.
"""

from __future__ import annotations

import random

from .algebra import RATIONAL, AlgebraDescriptor, AlgebraElement
from .errors import MathError
from .involutions import InvolutionSpec, involution_from_S
from .matrices import Matrix, bar_transpose, mat_inv
from .scalars import ExactRational, rat

MAX_TRIES = 50


def random_rational(rng: random.Random, size: int = 4) -> ExactRational:
    return rat(rng.randint(-size, size)) / rng.randint(1, 3)


def random_element(rng: random.Random, descriptor: AlgebraDescriptor, density: float = 1.0) -> AlgebraElement:
    if density < 1.0 and rng.random() > density:
        return descriptor.zero()
    return AlgebraElement(descriptor, tuple(random_rational(rng) for _ in range(descriptor.dimension)))


def random_nonzero_element(rng: random.Random, descriptor: AlgebraDescriptor) -> AlgebraElement:
    while True:
        x = random_element(rng, descriptor)
        if x:
            return x


def random_matrix(rng: random.Random, descriptor: AlgebraDescriptor, rows: int, cols: int,
                  density: float = 1.0) -> Matrix:
    return Matrix(descriptor, [
        [random_element(rng, descriptor, density) for _ in range(cols)] for _ in range(rows)
    ])


def random_invertible_matrix(rng: random.Random, descriptor: AlgebraDescriptor, n: int) -> Matrix:
    for _ in range(MAX_TRIES):
        m = random_matrix(rng, descriptor, n, n)
        try:
            mat_inv(m)
        except MathError:
            continue
        return m
    raise MathError(f"no invertible {n}x{n} matrix over {descriptor} after {MAX_TRIES} draws")


def epsilon_hermitian_part(m: Matrix, epsilon: int) -> Matrix:
    """``m + eps * bar(m)^t``, which is always ``eps``-hermitian."""
    return m + epsilon * bar_transpose(m)


def admits_nonsingular(descriptor: AlgebraDescriptor, size: int, epsilon: int) -> bool:
    """False only for odd-size skew-symmetric matrices over Q, which are always singular."""
    return not (descriptor.kind == RATIONAL and epsilon == -1 and size % 2 == 1)


def random_epsilon_hermitian(rng: random.Random, descriptor: AlgebraDescriptor, size: int,
                             epsilon: int, nonsingular: bool = False) -> Matrix:
    if not nonsingular:
        return epsilon_hermitian_part(random_matrix(rng, descriptor, size, size), epsilon)
    if not admits_nonsingular(descriptor, size, epsilon):
        raise ValueError(f"no nonsingular {epsilon:+d}-hermitian {size}x{size} matrix over {descriptor}")
    for _ in range(MAX_TRIES):
        m = epsilon_hermitian_part(random_matrix(rng, descriptor, size, size), epsilon)
        try:
            mat_inv(m)
        except MathError:
            continue
        return m
    raise MathError(f"no nonsingular {epsilon:+d}-hermitian matrix over {descriptor} after {MAX_TRIES} draws")


def random_involution(rng: random.Random, descriptor: AlgebraDescriptor, n: int,
                      epsilon0: int) -> InvolutionSpec:
    S = random_epsilon_hermitian(rng, descriptor, n, epsilon0, nonsingular=True)
    return involution_from_S(S)
