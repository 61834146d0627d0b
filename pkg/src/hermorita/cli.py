"""Command line front end.

::

    hermorita scale     --input F [--output G] [--involution I]
    hermorita reduce    --input F [--output G] [--report R] [--strict]
    hermorita lift      --input F [--output G] (--involution I | --n N)
    hermorita roundtrip --input F [--output R] [--involution I]
    hermorita verify    --input F [--output R]
    hermorita fuzz      [--seed N] [--trials N] [--output R]

Exit status: 0 ok, 2 parse error, 3 mathematical error, 4 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation, MathError, ParseError
from .formfile import dumps_form, read_form
from .forms import (
    FormRecord,
    Side,
    check_symmetry,
    is_nonsingular,
    probe_sesquilinearity,
    side_involution,
)
from .harness import fuzz
from .involutions import InvolutionSpec, involution_from_S
from .matrices import matrix_from_json
from .morita import (
    EquivalenceReport,
    lift_form,
    lift_report,
    morita_lift,
    morita_reduce,
    reduce_bar_t,
    scale_form,
    unscale_form,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_INVARIANT = 4

COMMANDS = ("scale", "reduce", "lift", "roundtrip", "verify", "fuzz")


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    report_path: Optional[str] = None
    involution_path: Optional[str] = None
    n: Optional[int] = None
    seed: int = 0
    trials: int = 200
    strict: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.command != "fuzz" and not self.input_path:
            raise ValueError(f"{self.command} needs --input")


def read_involution(path: str, descriptor) -> InvolutionSpec:
    """Read ``{"n": 2, "S": <matrix>}``; entries are parsed over ``descriptor``."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict) or "S" not in doc:
        raise ParseError("involution document needs an 'S' matrix")
    S = matrix_from_json(doc["S"], descriptor)
    if "n" in doc and doc["n"] != S.rows:
        raise ParseError(f"n = {doc['n']} but S has {S.rows} rows")
    return involution_from_S(S)


class _Run:
    def __init__(self, config: CliConfig, stdout, stderr):
        self.config = config
        self.stdout = stdout
        self.stderr = stderr

    def emit(self, text: str, path: Optional[str] = None):
        path = path if path is not None else self.config.output_path
        if path is None or path == "-":
            self.stdout.write(text)
        else:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)

    def emit_report(self, text: str):
        if self.config.report_path:
            self.emit(text, self.config.report_path)
        else:
            self.stderr.write(text)

    def form(self) -> FormRecord:
        return read_form(self.config.input_path)

    def involution(self, form: FormRecord) -> Optional[InvolutionSpec]:
        if self.config.involution_path is None:
            return None
        return read_involution(self.config.involution_path, form.descriptor)

    # commands

    def scale(self) -> int:
        form = self.form()
        if form.side is Side.STAR:
            self.emit(dumps_form(scale_form(form)))
            return EXIT_OK
        spec = self.involution(form)
        if form.side is Side.BAR_T and spec is not None:
            self.emit(dumps_form(unscale_form(form, spec)))
            return EXIT_OK
        raise ParseError("scale expects a MnD_star form, or a MnD_bar_t form with --involution")

    def reduce(self) -> int:
        form = self.form()
        if form.side is Side.STAR:
            reduced, report = morita_reduce(form, strict=self.config.strict)
        elif form.side is Side.BAR_T:
            reduced = reduce_bar_t(form, strict=self.config.strict)
            back = lift_form(reduced, form.n)
            report = EquivalenceReport(
                operation="extract", input_side=Side.BAR_T, output_side=Side.D,
                input_epsilon=form.epsilon, output_epsilon=reduced.epsilon, epsilon0=None,
                exact_roundtrip=back == form, canonical=True,
            )
        else:
            raise ParseError("reduce expects a MnD_star or MnD_bar_t form")
        self.emit(dumps_form(reduced))
        self.emit_report(report.to_text())
        return EXIT_OK

    def lift(self) -> int:
        form = self.form()
        if form.side is not Side.D:
            raise ParseError("lift expects a form over D")
        spec = self.involution(form)
        if spec is not None:
            lifted, report = lift_report(form, spec)
            self.emit(dumps_form(lifted))
            self.emit_report(report.to_text())
            return EXIT_OK
        if self.config.n is None:
            raise ParseError("lift needs --involution or --n")
        self.emit(dumps_form(lift_form(form, self.config.n)))
        return EXIT_OK

    def roundtrip(self) -> int:
        form = self.form()
        strict = self.config.strict
        if form.side is Side.STAR:
            reduced, _ = morita_reduce(form, strict=strict)
            ok = morita_lift(reduced, form.involution) == form
            eps0, canonical = form.involution.epsilon0, False
        elif form.side is Side.BAR_T:
            ok = lift_form(reduce_bar_t(form, strict=strict), form.n) == form
            eps0, canonical = None, True
        else:
            spec = self.involution(form)
            if spec is None:
                raise ParseError("roundtrip of a form over D needs --involution")
            back, _ = morita_reduce(morita_lift(form, spec), strict=strict)
            ok = back == form
            eps0, canonical = spec.epsilon0, False
        report = EquivalenceReport("roundtrip", form.side, form.side, form.epsilon, form.epsilon,
                                   eps0, ok, canonical)
        self.emit(report.to_text())
        if not ok:
            raise InvariantViolation("round trip is not exact")
        return EXIT_OK

    def verify(self) -> int:
        form = self.form()
        symmetry = check_symmetry(form)
        sesquilinear = probe_sesquilinearity(form.evaluator(), side_involution(form), form.k, form.n,
                                             form.descriptor, pairs=20, seed=self.config.seed)
        nonsingular = is_nonsingular(form)
        declared = "none" if form.epsilon is None else f"{form.epsilon:+d}"
        measured = "none" if symmetry.epsilon is None else f"{symmetry.epsilon:+d}"
        lines = [
            f"side: {form.side.value}",
            f"algebra: {form.descriptor}",
            f"n: {form.n}",
            f"k: {form.k}",
            f"declared_epsilon: {declared}",
            f"symmetry: {symmetry.name.lower()}",
            f"symmetry_epsilon: {measured}",
            f"sesquilinear: {str(sesquilinear).lower()}",
            f"nonsingular: {str(nonsingular).lower()}",
        ]
        if form.side is Side.STAR:
            lines.insert(4, f"epsilon0: {form.involution.epsilon0:+d}")
        self.emit("\n".join(lines) + "\n")
        if not sesquilinear:
            raise InvariantViolation("sesquilinearity probes failed")
        if form.epsilon is not None and symmetry.epsilon != form.epsilon:
            raise InvariantViolation(f"declared epsilon {declared} but form is {measured}")
        return EXIT_OK

    def fuzz(self) -> int:
        result = fuzz(self.config.seed, self.config.trials)
        self.emit(result.to_text())
        return EXIT_OK if result.ok else EXIT_INVARIANT


def run(config: CliConfig, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    runner = _Run(config, stdout, stderr)
    try:
        return getattr(runner, config.command)()
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InvariantViolation as exc:
        stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except MathError as exc:
        stderr.write(f"math error: {type(exc).__name__}: {exc}\n")
        return EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermorita", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", dest="input_path")
    parser.add_argument("--output", dest="output_path")
    parser.add_argument("--report", dest="report_path", help="where reduce/lift write their report (default stderr)")
    parser.add_argument("--involution", dest="involution_path", help='JSON {"n": N, "S": matrix}')
    parser.add_argument("--n", type=int, help="matrix size for lift to MnD_bar_t")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--strict", action="store_true", help="probe every column pair during extraction")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig(**vars(args))
    except ValueError as exc:
        parser.error(str(exc))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
