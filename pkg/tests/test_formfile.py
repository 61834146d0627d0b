import json
import random

import pytest

from hermorita.errors import NotEpsilonHermitian, ParseError, Singular
from hermorita.formfile import dumps_form, form_from_json, form_to_json, loads_form
from hermorita.forms import Side, random_form
from hermorita.randoms import random_involution

from conftest import ALGEBRAS

Q_DOC = {"kind": "rational"}


@pytest.mark.parametrize("desc", ALGEBRAS, ids=str)
def test_roundtrip_all_sides(desc):
    rng = random.Random(1)
    spec = random_involution(rng, desc, 2, -1)
    forms = [
        random_form(Side.D, 2, 1, seed=1, descriptor=desc),
        random_form(Side.BAR_T, 3, None, seed=2, descriptor=desc, n=2),
        random_form(Side.STAR, 2, -1, spec, seed=3),
    ]
    for f in forms:
        assert loads_form(dumps_form(f)) == f
        assert form_from_json(json.loads(json.dumps(form_to_json(f)))) == f


def test_document_layout():
    f = random_form(Side.D, 1, 1, seed=0, descriptor=ALGEBRAS[4])
    doc = json.loads(dumps_form(f))
    assert set(doc) == {"algebra", "side", "n", "k", "epsilon", "gram"}
    assert doc["algebra"] == {"kind": "quaternion", "a": "-1", "b": "-1"}
    assert doc["side"] == "D" and doc["n"] == 1 and doc["k"] == 1
    assert len(doc["gram"][0][0]) == 4


def test_rational_entries_accept_bare_strings():
    f = form_from_json({"algebra": Q_DOC, "side": "D", "epsilon": 1, "gram": [["1", "0"], ["0", "-3/7"]]})
    assert f.k == 2 and str(f.gram[1, 1]) == "-3/7"


@pytest.mark.parametrize("doc", [
    [],
    {"algebra": Q_DOC, "side": "D"},
    {"algebra": Q_DOC, "side": "nowhere", "gram": [["1"]]},
    {"algebra": {"kind": "quadratic", "d": 9}, "side": "D", "gram": [[["1", "0"]]]},
    {"algebra": Q_DOC, "side": "D", "epsilon": 2, "gram": [["1"]]},
    {"algebra": Q_DOC, "side": "D", "k": 2, "gram": [["1"]]},
    {"algebra": Q_DOC, "side": "D", "gram": [["1", "2"]]},
    {"algebra": Q_DOC, "side": "D", "gram": [["x"]]},
    {"algebra": Q_DOC, "side": "MnD_star", "n": 1, "gram": [["1"]]},
    {"algebra": Q_DOC, "side": "MnD_star", "n": 2, "S": [["1"]], "gram": [["1"]]},
    {"algebra": Q_DOC, "side": "D", "n": 2, "gram": [["1"]]},
])
def test_parse_errors(doc):
    with pytest.raises(ParseError):
        form_from_json(doc)


def test_invalid_json():
    with pytest.raises(ParseError):
        loads_form("{not json")


def test_math_errors_are_not_parse_errors():
    with pytest.raises(NotEpsilonHermitian):
        form_from_json({"algebra": Q_DOC, "side": "D", "epsilon": 1, "gram": [["0", "1"], ["0", "0"]]})
    with pytest.raises(Singular):
        form_from_json({"algebra": Q_DOC, "side": "MnD_star", "n": 1, "S": [["0"]], "gram": [["1"]]})
