"""Randomized invariant suite behind ``hermorita fuzz``.

Each trial draws an algebra, sizes ``n, k`` in ``{1, 2, 3}``, an involution
and forms from a seed derived from ``(seed, trial)``, then runs every
invariant on that data. Unlucky draws in a quaternion algebra that hit a
zero divisor are redrawn a bounded number of times and then skipped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import AlgebraDescriptor, quadratic_field, quaternion_algebra, rational_field
from .errors import InvariantViolation, NotDivision
from .forms import (
    FormRecord,
    Side,
    check_symmetry,
    congruence,
    hyperbolic,
    orthogonal_sum,
    probe_sesquilinearity,
    probe_symmetry,
    random_form,
    side_involution,
)
from .involutions import InvolutionSpec, apply_involution
from .matrices import Matrix, bar_transpose, block_matrix
from .morita import (
    extract_gram,
    hyperbolic_witness,
    lift_form,
    morita_lift,
    morita_reduce,
    rescale_involution,
    scale_form,
    unscale_form,
)
from .randoms import admits_nonsingular, random_invertible_matrix, random_involution, random_matrix

RETRIES = 3


def fuzz_algebras() -> list[AlgebraDescriptor]:
    return [
        rational_field(),
        quadratic_field(-1),
        quadratic_field(2),
        quadratic_field(5),
        quaternion_algebra(-1, -1),
        quaternion_algebra(-1, -3),
        quaternion_algebra(2, 5),
    ]


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


@dataclass
class Case:
    descriptor: AlgebraDescriptor
    n: int
    k: int
    spec: InvolutionSpec
    epsilon: int
    form: FormRecord
    rng: random.Random

    @property
    def epsilon0(self) -> int:
        return self.spec.epsilon0


def draw_case(rng: random.Random) -> Case:
    descriptor = rng.choice(fuzz_algebras())
    n = rng.randint(1, 3)
    k = rng.randint(1, 3)
    eps0 = rng.choice((1, -1))
    if not admits_nonsingular(descriptor, n, eps0):
        eps0 = 1
    spec = random_involution(rng, descriptor, n, eps0)
    eps = rng.choice((1, -1))
    form = random_form(Side.STAR, k, eps, spec, seed=rng.getrandbits(32))
    return Case(descriptor, n, k, spec, eps, form, rng)


def _expect(cond: bool, message: str):
    if not cond:
        raise InvariantViolation(message)


def inv_scale_sign(c: Case):
    got = check_symmetry(scale_form(c.form)).epsilon
    _expect(got == c.epsilon0 * c.epsilon, f"scaled symmetry {got}, expected {c.epsilon0 * c.epsilon}")


def inv_reduce_sign(c: Case):
    reduced, report = morita_reduce(c.form)
    _expect(reduced.epsilon == c.epsilon0 * c.epsilon, "reduced epsilon is not eps0 * eps")
    _expect(check_symmetry(reduced).epsilon == reduced.epsilon, "reduced Gram has the wrong symmetry")
    _expect(report.output_epsilon == c.epsilon0 * report.input_epsilon, "report sign bookkeeping")


def inv_roundtrip_star(c: Case):
    reduced, report = morita_reduce(c.form)
    _expect(morita_lift(reduced, c.spec) == c.form, "lift(reduce(f)) != f")
    _expect(report.exact_roundtrip, "report does not record an exact round trip")


def inv_roundtrip_d(c: Case):
    phi = random_form(Side.D, c.k, c.rng.choice((1, -1, None)), seed=c.rng.getrandbits(32),
                      descriptor=c.descriptor)
    reduced, _ = morita_reduce(morita_lift(phi, c.spec))
    _expect(reduced == phi, "reduce(lift(phi)) != phi")


def inv_unscale(c: Case):
    _expect(unscale_form(scale_form(c.form), c.spec) == c.form, "unscale(scale(f)) != f")


def inv_extract(c: Case):
    eps = c.rng.choice((1, -1, None))
    form = random_form(Side.BAR_T, c.k, eps, seed=c.rng.getrandbits(32), descriptor=c.descriptor, n=c.n)
    B = extract_gram(form.evaluator(), c.k, c.n, c.descriptor)
    _expect(B == form.gram, "extracted Gram differs from the stored one")
    if eps is not None:
        _expect(bar_transpose(B) == eps * B, "extracted Gram is not eps-hermitian")


def inv_lift_extract(c: Case):
    phi = random_form(Side.D, c.k, c.rng.choice((1, -1, None)), seed=c.rng.getrandbits(32),
                      descriptor=c.descriptor)
    lifted = lift_form(phi, c.n)
    _expect(extract_gram(lifted.evaluator(), c.k, c.n, c.descriptor) == phi.gram, "extract(lift(phi)) != phi")
    _expect(check_symmetry(lifted) == check_symmetry(phi), "lift changed the symmetry type")


def inv_evaluator_symmetry(c: Case):
    signs = probe_symmetry(c.form.evaluator(), side_involution(c.form), c.k, c.n, c.descriptor,
                           random_pairs=3, seed=c.rng.getrandbits(32))
    _expect(c.epsilon in signs, "h(y, x) != eps h(x, y)* on a probe pair")


def inv_sesquilinear(c: Case):
    for form in (c.form, scale_form(c.form)):
        ok = probe_sesquilinearity(form.evaluator(), side_involution(form), c.k, c.n, c.descriptor,
                                   pairs=2, seed=c.rng.getrandbits(32))
        _expect(ok, f"sesquilinearity fails on side {form.side.value}")


def inv_orthogonal_sum(c: Case):
    g = random_form(Side.STAR, c.rng.randint(1, 2), c.epsilon, c.spec, seed=c.rng.getrandbits(32))
    total, _ = morita_reduce(orthogonal_sum(c.form, g))
    parts = orthogonal_sum(morita_reduce(c.form)[0], morita_reduce(g)[0])
    _expect(total == parts, "reduce(f + g) != reduce(f) + reduce(g)")


def inv_isometry(c: Case):
    form = scale_form(c.form)
    Q = random_invertible_matrix(c.rng, c.descriptor, c.k)
    moved = congruence(form, Q)
    B = extract_gram(form.evaluator(), c.k, c.n, c.descriptor)
    B_moved = extract_gram(moved.evaluator(), c.k, c.n, c.descriptor)
    _expect(B_moved == bar_transpose(Q) @ B @ Q, "extract(Q-congruent form) != bar(Q)^t B Q")
    _expect(check_symmetry(moved) == check_symmetry(form), "congruence changed the symmetry type")


def inv_hyperbolic(c: Case):
    H = hyperbolic(1, c.epsilon, Side.STAR, c.spec)
    scaled = scale_form(H)
    Q = hyperbolic_witness(c.spec)
    n = c.n
    ident = Matrix.identity(c.descriptor, n)
    zero = Matrix.zeros(c.descriptor, n, n)
    target = block_matrix([[zero, ident], [c.epsilon0 * c.epsilon * ident, zero]])
    _expect(congruence(scaled, Q).gram == target, "hyperbolic witness identity fails")


def inv_rescale(c: Case):
    lam = c.rng.choice((2, 3, -1))
    other = rescale_involution(c.form, lam)
    probe = random_matrix(c.rng, c.descriptor, c.n, c.n)
    _expect(apply_involution(other.involution, probe) == apply_involution(c.spec, probe),
            "lambda S defines a different involution")
    _expect(other.involution.epsilon0 == c.epsilon0, "lambda S changed eps0")
    x = random_matrix(c.rng, c.descriptor, c.k, c.n)
    y = random_matrix(c.rng, c.descriptor, c.k, c.n)
    _expect(other(x, y) == c.form(x, y), "rescaled record evaluates differently")
    reduced, _ = morita_reduce(c.form)
    reduced_other, _ = morita_reduce(other)
    _expect(reduced_other.gram * lam == reduced.gram, "reduced Gram not scaled by 1/lambda")


INVARIANTS: dict[str, Callable[[Case], None]] = {
    "scale_sign": inv_scale_sign,
    "reduce_sign": inv_reduce_sign,
    "roundtrip_star": inv_roundtrip_star,
    "roundtrip_d": inv_roundtrip_d,
    "unscale_roundtrip": inv_unscale,
    "extract_gram": inv_extract,
    "lift_extract": inv_lift_extract,
    "evaluator_symmetry": inv_evaluator_symmetry,
    "sesquilinearity": inv_sesquilinear,
    "orthogonal_sum": inv_orthogonal_sum,
    "isometry_transport": inv_isometry,
    "hyperbolic_witness": inv_hyperbolic,
    "lambda_rescale": inv_rescale,
}


@dataclass
class InvariantTally:
    passed: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class FuzzResult:
    seed: int
    trials: int
    tallies: dict[str, InvariantTally]
    notes: list[str]

    @property
    def ok(self) -> bool:
        return not any(t.failures for t in self.tallies.values())

    def lines(self) -> list[str]:
        out = [f"seed: {self.seed}", f"trials: {self.trials}"]
        for name, t in self.tallies.items():
            status = "fail" if t.failures else "pass"
            out.append(f"{name}: {status} (passed={t.passed}, skipped={t.skipped}, failed={len(t.failures)})")
        out.extend(f"failure: {msg}" for t in self.tallies.values() for msg in t.failures)
        out.extend(f"note: {msg}" for msg in self.notes)
        out.append(f"result: {'pass' if self.ok else 'fail'}")
        return out

    def to_text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def run_invariant(name: str, seed: int, trial: int) -> Optional[str]:
    """Run one invariant on one trial; returns ``None`` on success, else a message.

    Raises :class:`NotDivision` when every redraw hit a zero divisor.
    """
    check = INVARIANTS[name]
    base = trial_seed(seed, trial)
    for attempt in range(RETRIES):
        rng = random.Random(f"{base}:{name}:{attempt}")
        try:
            case = draw_case(rng)
            check(case)
        except NotDivision:
            continue
        except InvariantViolation as exc:
            return f"{name} seed={seed} trial={trial}: {exc}"
        return None
    raise NotDivision(f"{name} seed={seed} trial={trial}: zero divisor on {RETRIES} draws")


def fuzz(seed: int, trials: int, invariants: Optional[list[str]] = None) -> FuzzResult:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    names = list(INVARIANTS) if invariants is None else invariants
    tallies = {name: InvariantTally() for name in names}
    notes = []
    for trial in range(trials):
        for name in names:
            try:
                failure = run_invariant(name, seed, trial)
            except NotDivision as exc:
                tallies[name].skipped += 1
                notes.append(f"skipped {exc}")
                continue
            if failure is None:
                tallies[name].passed += 1
            else:
                tallies[name].failures.append(failure)
    return FuzzResult(seed, trials, tallies, notes)
