"""Scaling and Morita transport between the three settings of forms.

The chain is::

    eps-hermitian over (M_n(D), *)  --scale_form-->  eps0*eps over (M_n(D), -t)
                                    --extract_gram-> eps0*eps over (D, -)

with :func:`unscale_form` and :func:`lift_form` going back. The composites
are :func:`morita_reduce` and :func:`morita_lift`.

:func:`extract_gram` only ever calls the evaluator; it recovers the Gram
matrix from the values on unit matrices ``e_if`` of ``D^{k x n}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import AlgebraDescriptor
from .errors import InconsistentEvaluator, InvariantViolation, NotEpsilonHermitian, SideMismatch
from .forms import FormEvaluator, FormRecord, Side
from .involutions import InvolutionSpec, involution_from_S
from .matrices import Matrix, block_diagonal, unit_matrix
from .scalars import rat

DEFAULT_VERIFY_COLUMNS = 2


@dataclass(frozen=True)
class EquivalenceReport:
    operation: str
    input_side: Side
    output_side: Side
    input_epsilon: Optional[int]
    output_epsilon: Optional[int]
    epsilon0: Optional[int]
    exact_roundtrip: bool
    canonical: bool
    witness: Optional[Matrix] = None

    def lines(self) -> list[str]:
        def sign(e):
            return "none" if e is None else f"{e:+d}"

        out = [
            f"operation: {self.operation}",
            f"input_side: {self.input_side.value}",
            f"output_side: {self.output_side.value}",
            f"input_epsilon: {sign(self.input_epsilon)}",
            f"output_epsilon: {sign(self.output_epsilon)}",
            f"epsilon0: {sign(self.epsilon0)}",
            f"exact_roundtrip: {str(self.exact_roundtrip).lower()}",
            f"canonical: {str(self.canonical).lower()}",
        ]
        if self.witness is not None:
            rows = "; ".join(", ".join(str(x) for x in self.witness.row(i)) for i in range(self.witness.rows))
            out.append(f"witness: [{rows}]")
        return out

    def to_text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _times(e0: int, e: Optional[int]) -> Optional[int]:
    return None if e is None else e0 * e


def _require(form: FormRecord, side: Side):
    if form.side is not side:
        raise SideMismatch(f"expected a {side.value} form, got {form.side.value}")


def scaled_evaluator(form: FormRecord) -> FormEvaluator:
    """``(x, y) -> S^-1 h(x, y)``, using ``form`` only through evaluation."""
    _require(form, Side.STAR)
    s_inv = form.involution.S_inv
    h = form.evaluator()
    return lambda x, y: s_inv @ h(x, y)


def scale_form(form: FormRecord) -> FormRecord:
    """The form ``S^-1 h`` over ``(M_n(D), -t)``.

    In the ``S bar(x)^t T y`` parameterization this keeps ``T`` and switches
    side. An ``eps``-hermitian input gives an ``eps0*eps``-hermitian output;
    that is re-checked on the result.
    """
    _require(form, Side.STAR)
    eps = _times(form.involution.epsilon0, form.epsilon)
    try:
        return FormRecord(Side.BAR_T, form.gram, eps, form.n)
    except NotEpsilonHermitian as exc:
        raise InvariantViolation(f"scaled form is not {eps:+d}-hermitian: {exc}") from exc


def unscale_form(form: FormRecord, spec: InvolutionSpec) -> FormRecord:
    _require(form, Side.BAR_T)
    if spec.n != form.n:
        raise SideMismatch(f"involution has size {spec.n}, form has n = {form.n}")
    return FormRecord(Side.STAR, form.gram, _times(spec.epsilon0, form.epsilon), form.n, spec)


def _probe_columns(i: int, n: int) -> int:
    # row i of D^{k x n} is probed in column i when that exists, else column 1
    return i if i <= n else 1


def extract_gram(h: FormEvaluator, k: int, n: int, descriptor: AlgebraDescriptor,
                 strict: bool = False, probe_log: Optional[list] = None) -> Matrix:
    """Recover ``B`` with ``h(x, y) = bar(x)^t B y`` from evaluations of ``h``.

    ``B[i, j]`` is read off ``h(e_ii, e_jj)`` at position ``(i, j)``, whose
    other entries must vanish. When ``k > n`` the missing ``e_ii`` is replaced
    by ``e_i1``. Every entry is then cross-checked against
    ``h(e_if, e_jg) = B[i, j] E_fg`` for ``f, g <= 2`` (all ``f, g`` when
    ``strict``). ``probe_log`` collects ``(i, j, f, g, value)`` for the
    primary probes.
    """
    zero = descriptor.zero()
    units = {(i, f): unit_matrix(k, n, i, f, descriptor)
             for i in range(1, k + 1) for f in range(1, n + 1)}
    entries = [[zero] * k for _ in range(k)]
    for i in range(1, k + 1):
        f = _probe_columns(i, n)
        for j in range(1, k + 1):
            g = _probe_columns(j, n)
            value = h(units[i, f], units[j, g])
            if value.shape != (n, n):
                raise InconsistentEvaluator(f"evaluator returned a {value.rows}x{value.cols} value")
            if probe_log is not None:
                probe_log.append((i, j, f, g, value))
            for r in range(n):
                for c in range(n):
                    if (r, c) != (f - 1, g - 1) and value[r, c]:
                        raise InconsistentEvaluator(
                            f"h(e_{i}{f}, e_{j}{g}) has a nonzero entry at ({r + 1}, {c + 1})")
            entries[i - 1][j - 1] = value[f - 1, g - 1]
    B = Matrix(descriptor, entries)

    cols = n if strict else min(n, DEFAULT_VERIFY_COLUMNS)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            expected_entry = B[i - 1, j - 1]
            for f in range(1, cols + 1):
                for g in range(1, cols + 1):
                    got = h(units[i, f], units[j, g])
                    if got != expected_entry * unit_matrix(n, n, f, g, descriptor):
                        raise InconsistentEvaluator(
                            f"h(e_{i}{f}, e_{j}{g}) != B[{i},{j}] E_{f}{g}; evaluator is not sesquilinear")
    return B


def lift_form(phi: FormRecord, n: int) -> FormRecord:
    """``h(x, y) = bar(x)^t B y`` on ``D^{k x n}`` for the Gram ``B`` of ``phi``."""
    _require(phi, Side.D)
    if n < 1:
        raise ValueError("n must be positive")
    return FormRecord(Side.BAR_T, phi.gram, phi.epsilon, n)


def reduce_bar_t(form: FormRecord, strict: bool = False) -> FormRecord:
    """Morita reduction of a form over ``(M_n(D), -t)`` to a form over ``(D, -)``."""
    _require(form, Side.BAR_T)
    B = extract_gram(form.evaluator(), form.k, form.n, form.descriptor, strict=strict)
    return FormRecord(Side.D, B, form.epsilon)


def morita_reduce(form: FormRecord, strict: bool = False) -> tuple[FormRecord, EquivalenceReport]:
    """Scale, then extract the Gram matrix from the scaled evaluator.

    The extraction sees the input only as the black box ``S^-1 h``; its
    result is compared with the Gram stored by :func:`scale_form`.
    """
    _require(form, Side.STAR)
    spec = form.involution
    scaled = scale_form(form)
    B = extract_gram(scaled_evaluator(form), form.k, form.n, form.descriptor, strict=strict)
    if B != scaled.gram:
        raise InvariantViolation("extracted Gram differs from the scaled form's Gram")
    reduced = FormRecord(Side.D, B, scaled.epsilon)
    back = morita_lift(reduced, spec)
    report = EquivalenceReport(
        operation="reduce",
        input_side=Side.STAR,
        output_side=Side.D,
        input_epsilon=form.epsilon,
        output_epsilon=reduced.epsilon,
        epsilon0=spec.epsilon0,
        exact_roundtrip=back == form,
        canonical=False,
    )
    return reduced, report


def morita_lift(phi: FormRecord, spec: InvolutionSpec) -> FormRecord:
    return unscale_form(lift_form(phi, spec.n), spec)


def lift_report(phi: FormRecord, spec: InvolutionSpec) -> tuple[FormRecord, EquivalenceReport]:
    lifted = morita_lift(phi, spec)
    back, _ = morita_reduce(lifted)
    report = EquivalenceReport(
        operation="lift",
        input_side=Side.D,
        output_side=Side.STAR,
        input_epsilon=phi.epsilon,
        output_epsilon=lifted.epsilon,
        epsilon0=spec.epsilon0,
        exact_roundtrip=back == phi,
        canonical=False,
    )
    return lifted, report


def rescale_involution(form: FormRecord, lam) -> FormRecord:
    """The same map ``h`` written with ``lam * S`` in place of ``S``.

    ``lam * S`` defines the same involution, and ``S bar(x)^t T y =
    (lam S) bar(x)^t (T / lam) y``, so the stored Gram is divided by ``lam``.
    """
    _require(form, Side.STAR)
    lam = rat(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    spec = involution_from_S(lam * form.involution.S)
    return FormRecord(Side.STAR, form.gram * (1 / lam), form.epsilon, form.n, spec)


def hyperbolic_witness(spec: InvolutionSpec, rank: int = 1) -> Matrix:
    """``diag(I, S)`` per hyperbolic plane.

    It carries the scaled star-side hyperbolic Gram ``[[0, S^-1], [eps S^-1, 0]]``
    to ``[[0, I], [eps0 eps I, 0]]``.
    """
    ident = Matrix.identity(spec.descriptor, spec.n)
    return block_diagonal(*[block_diagonal(ident, spec.S)] * rank)


def interleave_permutation(descriptor: AlgebraDescriptor, n: int) -> Matrix:
    """Permutation ``P`` with ``P^t [[0, I_n], [e I_n, 0]] P`` the sum of ``n`` planes ``[[0, 1], [e, 0]]``."""
    size = 2 * n
    one, zero = descriptor.one(), descriptor.zero()
    data = [[zero] * size for _ in range(size)]
    for t in range(n):
        data[t][2 * t] = one
        data[n + t][2 * t + 1] = one
    return Matrix(descriptor, data)
