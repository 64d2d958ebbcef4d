from __future__ import annotations

import json
from pathlib import Path

import pytest

from qtbounds.golden import EXAMPLES
from qtbounds.specfile import SpecError, load_spec, parse_spec

SPECS = Path(__file__).resolve().parent.parent / "specs"


def test_bundled_specs_match_worked_examples():
    files = sorted(SPECS.glob("*.json"))
    assert len(files) == len(EXAMPLES)
    by_params = {(e.q, e.m, e.lam, e.ell, e.expect["dim"]): e for e in EXAMPLES}
    for f in files:
        c = load_spec(f)
        ex = by_params[(c.q, c.m, c.tower.lam, c.ell, c.dim)]
        assert c.code.same_space(ex.build().code)


def test_defaults():
    s = parse_spec({"q": 2, "m": 7, "generators": [[1, 1], [1, 0, 1]]})
    assert (s.lam, s.ell, s.r) == (1, 2, 1)
    s = parse_spec({"q": 2, "m": 7, "ell": 1, "generators": [[1, 1], [1, 0, 1]]})
    assert s.r == 2
    assert parse_spec(s.as_dict()) == s


def test_prime_power_digits():
    a = parse_spec({"q": 4, "m": 3, "ell": 1, "generators": [[3, 1]]})
    b = parse_spec({"q": 4, "m": 3, "ell": 1, "generators": [[[1, 1], [1]]]})
    assert a == b
    assert a.build().dim == 2


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"q": 6, "m": 5, "generators": [[1]]},
        {"q": 3, "m": 6, "generators": [[1]]},
        {"q": 3, "m": 4, "lambda": 0, "generators": [[1]]},
        {"q": 3, "m": 4, "lambda": 3, "generators": [[1]]},
        {"q": 3, "m": 4, "generators": [[3]]},
        {"q": 3, "m": 4, "generators": [[1, 0, 0, 0, 1]]},
        {"q": 3, "m": 4, "ell": 2, "generators": [[1], [1], [1]]},
        {"q": 3, "m": 4, "generators": [[1.5]]},
        {"q": 3, "m": 4, "generators": [[True]]},
        {"q": 3, "m": 4, "generators": "1 2"},
        {"q": 3, "m": 4, "generators": [[1]], "colour": "red"},
        {"q": "3", "m": 4, "generators": [[1]]},
        {"q": 3, "m": 0, "generators": [[1]]},
        {"q": 4, "m": 3, "generators": [[[1, 2]]]},
    ],
)
def test_rejects_bad_input(obj):
    with pytest.raises(SpecError):
        parse_spec(obj)


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SpecError):
        load_spec(bad)
    with pytest.raises(OSError):
        load_spec(tmp_path / "missing.json")
    ok = tmp_path / "ok.json"
    ok.write_text(json.dumps({"q": 2, "m": 3, "generators": [[1, 1], [1]]}))
    assert load_spec(ok).length == 6
