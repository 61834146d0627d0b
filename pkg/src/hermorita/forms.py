"""Sesquilinear and epsilon-hermitian forms stored by Gram matrix.

Three settings share one record type, distinguished by :class:`Side`:

``Side.D``
    forms on ``D^k`` (column vectors, ``k x 1``) with values in ``D``,
    ``h(x, y) = bar(x)^t B y``.
``Side.BAR_T``
    forms on ``D^{k x n}`` with values in ``M_n(D)``, sesquilinear for the
    involution ``X -> bar(X)^t``, again ``h(x, y) = bar(x)^t B y``.
``Side.STAR``
    forms on ``D^{k x n}`` sesquilinear for an adjoint involution
    ``X* = S bar(X)^t S^-1``, parameterized as ``h(x, y) = S bar(x)^t T y``.

A :data:`FormEvaluator` is any callable ``(x, y) -> h(x, y)``; the Gram
matrix is not visible through it.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .algebra import AlgebraDescriptor
from .errors import (
    DescriptorMismatch,
    EpsilonMismatch,
    MathError,
    NotEpsilonHermitian,
    ShapeMismatch,
    SideMismatch,
)
from .involutions import InvolutionSpec, apply_involution
from .matrices import Matrix, bar_transpose, block_diagonal, block_matrix, mat_inv, unit_matrix
from .randoms import random_epsilon_hermitian, random_matrix

FormEvaluator = Callable[[Matrix, Matrix], Matrix]

SYMMETRY_RANDOM_PROBES = 20


class Side(enum.Enum):
    D = "D"
    BAR_T = "MnD_bar_t"
    STAR = "MnD_star"


class Symmetry(enum.Enum):
    HERMITIAN = 1
    SKEW_HERMITIAN = -1
    SESQUILINEAR_ONLY = 0

    @property
    def epsilon(self) -> Optional[int]:
        return None if self is Symmetry.SESQUILINEAR_ONLY else self.value

    @classmethod
    def from_epsilon(cls, epsilon: Optional[int]) -> "Symmetry":
        return cls.SESQUILINEAR_ONLY if epsilon is None else cls(epsilon)


@dataclass(frozen=True)
class FormRecord:
    side: Side
    gram: Matrix
    epsilon: Optional[int] = None
    n: int = 1
    involution: Optional[InvolutionSpec] = None

    def __post_init__(self):
        if not self.gram.is_square:
            raise ShapeMismatch(f"Gram matrix must be square, got {self.gram.shape}")
        if self.epsilon not in (None, 1, -1):
            raise ValueError(f"epsilon must be +1, -1 or None, got {self.epsilon!r}")
        if self.side is Side.D and self.n != 1:
            raise ShapeMismatch("forms over D live on column vectors (n = 1)")
        if self.side is Side.STAR:
            if self.involution is None:
                raise ValueError("a form over (M_n(D), *) needs its involution")
            if self.involution.n != self.n:
                raise ShapeMismatch(f"involution has size {self.involution.n}, form has n = {self.n}")
            if self.involution.descriptor != self.gram.descriptor:
                raise DescriptorMismatch("involution and Gram matrix live over different algebras")
        elif self.involution is not None:
            raise ValueError(f"{self.side.value} forms carry no involution matrix")
        if self.epsilon is not None and not _satisfies(self, self.epsilon):
            raise NotEpsilonHermitian(f"Gram data is not {self.epsilon:+d}-hermitian on side {self.side.value}")

    @property
    def k(self) -> int:
        return self.gram.rows

    @property
    def descriptor(self) -> AlgebraDescriptor:
        return self.gram.descriptor

    @property
    def vector_shape(self) -> tuple[int, int]:
        return self.k, self.n

    def evaluator(self) -> FormEvaluator:
        return lambda x, y: evaluate(self, x, y)

    def __call__(self, x: Matrix, y: Matrix) -> Matrix:
        return evaluate(self, x, y)

    def with_gram(self, gram: Matrix, epsilon="same") -> "FormRecord":
        return FormRecord(self.side, gram, self.epsilon if epsilon == "same" else epsilon,
                          self.n, self.involution)


def evaluate(form: FormRecord, x: Matrix, y: Matrix) -> Matrix:
    """``bar(x)^t B y``, with an extra left factor ``S`` on the star side."""
    for v in (x, y):
        if v.descriptor != form.descriptor:
            raise DescriptorMismatch(f"{v.descriptor} vs {form.descriptor}")
        if v.shape != form.vector_shape:
            raise ShapeMismatch(f"expected a {form.k}x{form.n} argument, got {v.rows}x{v.cols}")
    value = bar_transpose(x) @ form.gram @ y
    if form.side is Side.STAR:
        value = form.involution.S @ value
    return value


def side_involution(form: FormRecord) -> Callable[[Matrix], Matrix]:
    """The involution on the value ring the form is sesquilinear for."""
    if form.side is Side.STAR:
        spec = form.involution
        return lambda a: apply_involution(spec, a)
    return bar_transpose


def _satisfies(form: FormRecord, epsilon: int) -> bool:
    # S bar(x)^t T y is eps-hermitian for * exactly when bar(T)^t = eps0 * eps * T
    if form.side is Side.STAR:
        epsilon *= form.involution.epsilon0
    return bar_transpose(form.gram) == epsilon * form.gram


def unit_probes(k: int, n: int, descriptor: AlgebraDescriptor,
                max_column: Optional[int] = None) -> Iterator[tuple[Matrix, Matrix]]:
    """All pairs ``(e_if, e_jg)`` with ``i, j <= k`` and ``f, g <= max_column``."""
    cols = n if max_column is None else min(n, max_column)
    units = [unit_matrix(k, n, i, f, descriptor)
             for i in range(1, k + 1) for f in range(1, cols + 1)]
    for x in units:
        for y in units:
            yield x, y


def probe_symmetry(h: FormEvaluator, twist: Callable[[Matrix], Matrix], k: int, n: int,
                   descriptor: AlgebraDescriptor, random_pairs: int = SYMMETRY_RANDOM_PROBES,
                   seed: int = 0) -> set[int]:
    """Signs ``eps`` with ``h(y, x) == eps * twist(h(x, y))`` on every probe pair.

    Probes are the unit pairs with column indices up to 3 plus
    ``random_pairs`` seeded random pairs. For a Gram-backed form the unit
    pairs alone already decide the question exactly.
    """
    rng = random.Random(seed)
    pairs = list(unit_probes(k, n, descriptor, max_column=3))
    pairs += [(random_matrix(rng, descriptor, k, n), random_matrix(rng, descriptor, k, n))
              for _ in range(random_pairs)]
    candidates = {1, -1}
    for x, y in pairs:
        lhs = h(y, x)
        rhs = twist(h(x, y))
        candidates = {e for e in candidates if lhs == e * rhs}
        if not candidates:
            break
    return candidates


def check_symmetry(form: FormRecord) -> Symmetry:
    """Classify as hermitian, skew-hermitian, or merely sesquilinear.

    The zero form is both hermitian and skew-hermitian; it is then reported
    with the form's declared sign (hermitian when none is declared).
    """
    if form.side is Side.STAR:
        signs = probe_symmetry(form.evaluator(), side_involution(form), form.k, form.n, form.descriptor)
    else:
        bt = bar_transpose(form.gram)
        signs = {e for e in (1, -1) if bt == e * form.gram}
    if not signs:
        return Symmetry.SESQUILINEAR_ONLY
    if len(signs) == 1:
        return Symmetry(signs.pop())
    return Symmetry(form.epsilon if form.epsilon is not None else 1)


def _same_setting(f: FormRecord, g: FormRecord):
    if f.side is not g.side:
        raise SideMismatch(f"{f.side.value} vs {g.side.value}")
    if f.descriptor != g.descriptor:
        raise DescriptorMismatch(f"{f.descriptor} vs {g.descriptor}")
    if f.n != g.n or f.involution != g.involution:
        raise SideMismatch("forms are over different involutions")


def orthogonal_sum(f: FormRecord, g: FormRecord) -> FormRecord:
    _same_setting(f, g)
    if f.epsilon != g.epsilon:
        raise EpsilonMismatch(f"epsilon {f.epsilon} vs {g.epsilon}")
    return f.with_gram(block_diagonal(f.gram, g.gram))


def hyperbolic(rank: int, epsilon: int, side: Side = Side.D, involution: Optional[InvolutionSpec] = None,
               descriptor: Optional[AlgebraDescriptor] = None, n: Optional[int] = None) -> FormRecord:
    """Orthogonal sum of ``rank`` hyperbolic planes.

    On ``Side.D`` and ``Side.BAR_T`` each plane has Gram ``[[0, 1], [eps, 0]]``.
    On ``Side.STAR`` the plane is ``A + A`` for ``A = M_n(D)`` with
    ``h(x, y) = x1* y2 + eps x2* y1``; in the ``S bar(x)^t T y``
    parameterization that is ``T = [[0, S^-1], [eps S^-1, 0]]`` in ``n x n``
    blocks, a form on ``D^{2n x n}``.
    """
    if epsilon not in (1, -1):
        raise ValueError("hyperbolic forms need epsilon = +1 or -1")
    if side is Side.STAR:
        if involution is None:
            raise ValueError("the star side needs an involution")
        desc = involution.descriptor
        size = involution.n
        zero = Matrix.zeros(desc, size, size)
        s_inv = involution.S_inv
        plane = block_matrix([[zero, s_inv], [epsilon * s_inv, zero]])
        return FormRecord(Side.STAR, block_diagonal(*[plane] * rank), epsilon, size, involution)
    if descriptor is None:
        raise ValueError("descriptor required")
    plane = Matrix.from_values(descriptor, [[0, 1], [epsilon, 0]])
    gram = block_diagonal(*[plane] * rank)
    return FormRecord(side, gram, epsilon, 1 if side is Side.D else (n or 1))


def congruence(form: FormRecord, Q: Matrix) -> FormRecord:
    """The isometric form with Gram ``bar(Q)^t B Q`` (change of basis ``x -> Q x``)."""
    if Q.shape != (form.k, form.k):
        raise ShapeMismatch(f"witness must be {form.k}x{form.k}, got {Q.shape}")
    mat_inv(Q)
    return form.with_gram(bar_transpose(Q) @ form.gram @ Q)


def random_form(side: Side, k: int, epsilon: Optional[int], involution: Optional[InvolutionSpec] = None,
                *, seed: int, descriptor: Optional[AlgebraDescriptor] = None, n: int = 1,
                nonsingular: bool = False) -> FormRecord:
    """A random form, deterministic in ``seed``.

    Hermitian requests are built as ``M + eps * bar(M)^t``. On the star side
    the stored ``T`` must satisfy ``bar(T)^t = eps0 * eps * T`` for the form
    to be ``eps``-hermitian, so the sign used for ``T`` is shifted by ``eps0``.
    """
    rng = random.Random(seed)
    if side is Side.STAR:
        if involution is None:
            raise ValueError("the star side needs an involution")
        descriptor = involution.descriptor
        n = involution.n
    elif descriptor is None:
        raise ValueError("descriptor required")
    if side is Side.D:
        n = 1
    if epsilon is None:
        gram = random_matrix(rng, descriptor, k, k)
    else:
        gram_sign = epsilon * involution.epsilon0 if side is Side.STAR else epsilon
        gram = random_epsilon_hermitian(rng, descriptor, k, gram_sign, nonsingular=nonsingular)
    return FormRecord(side, gram, epsilon, n, involution if side is Side.STAR else None)


def is_nonsingular(form: FormRecord) -> bool:
    try:
        mat_inv(form.gram)
    except MathError:
        return False
    return True


def probe_sesquilinearity(h: FormEvaluator, twist: Callable[[Matrix], Matrix], k: int, n: int,
                          descriptor: AlgebraDescriptor, pairs: int = 10, seed: int = 0) -> bool:
    """Check ``h(x a, y) = twist(a) h(x, y)`` and ``h(x, y a) = h(x, y) a`` on random data."""
    rng = random.Random(seed)
    for _ in range(pairs):
        x = random_matrix(rng, descriptor, k, n)
        y = random_matrix(rng, descriptor, k, n)
        a = random_matrix(rng, descriptor, n, n)
        base = h(x, y)
        if h(x @ a, y) != twist(a) @ base:
            return False
        if h(x, y @ a) != base @ a:
            return False
        x2 = random_matrix(rng, descriptor, k, n)
        if h(x + x2, y) != base + h(x2, y):
            return False
    return True
