"""JSON form files.

One document per file::

    {"algebra": {"kind": "quaternion", "a": "-1", "b": "-1"},
     "side": "MnD_star", "n": 2, "k": 2, "epsilon": 1,
     "S": [[["1","0","0","0"], ...], ...],
     "gram": [[...], ...]}

``S`` is required for ``MnD_star`` and ignored otherwise. Elements are
arrays of rational strings; a bare string or integer is accepted for a
rational-only entry.
"""

from __future__ import annotations

import json

from .algebra import AlgebraDescriptor
from .errors import MathError, ParseError, ShapeMismatch
from .forms import FormRecord, Side
from .involutions import involution_from_S
from .matrices import matrix_from_json


def form_to_json(form: FormRecord) -> dict:
    doc = {
        "algebra": form.descriptor.to_json(),
        "side": form.side.value,
        "n": form.n,
        "k": form.k,
        "epsilon": form.epsilon,
    }
    if form.side is Side.STAR:
        doc["S"] = form.involution.S.to_json()
    doc["gram"] = form.gram.to_json()
    return doc


def _dump_matrix(rows: list) -> str:
    if not rows:
        return "[]"
    body = ",\n".join("  " + json.dumps(r) for r in rows)
    return "[\n" + body + "\n ]"


def dumps_form(form: FormRecord) -> str:
    """Serialize with one matrix row per line, so files diff cleanly."""
    doc = form_to_json(form)
    parts = []
    for key, value in doc.items():
        text = _dump_matrix(value) if key in ("S", "gram") else json.dumps(value)
        parts.append(f" {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def form_from_json(doc) -> FormRecord:
    """Decode a form document.

    Structural problems raise :class:`ParseError`; well-formed data that is
    mathematically invalid (singular ``S``, wrong symmetry) raises the
    corresponding :class:`MathError`.
    """
    if not isinstance(doc, dict):
        raise ParseError("form document must be a JSON object")
    for key in ("algebra", "side", "gram"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    descriptor = AlgebraDescriptor.from_json(doc["algebra"])
    try:
        side = Side(doc["side"])
    except ValueError:
        raise ParseError(f"unknown side {doc['side']!r}") from None
    epsilon = doc.get("epsilon")
    if epsilon not in (None, 1, -1) or isinstance(epsilon, bool):
        raise ParseError(f"epsilon must be 1, -1 or null, got {epsilon!r}")
    gram = matrix_from_json(doc["gram"], descriptor)
    if "k" in doc and doc["k"] != gram.rows:
        raise ParseError(f"k = {doc['k']} but gram has {gram.rows} rows")
    n = doc.get("n", 1)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    involution = None
    if side is Side.STAR:
        if "S" not in doc:
            raise ParseError("MnD_star forms need an S matrix")
        S = matrix_from_json(doc["S"], descriptor)
        if S.shape != (n, n):
            raise ParseError(f"S has shape {S.shape}, expected ({n}, {n})")
        involution = involution_from_S(S)
    elif side is Side.D and n != 1:
        raise ParseError("forms over D have n = 1")
    try:
        return FormRecord(side, gram, epsilon, n, involution)
    except ShapeMismatch as exc:
        raise ParseError(str(exc)) from exc
    except MathError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def loads_form(text: str) -> FormRecord:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return form_from_json(doc)


def read_form(path) -> FormRecord:
    with open(path, encoding="utf-8") as fh:
        return loads_form(fh.read())
