from __future__ import annotations

import csv
import io

import numpy as np
import pytest

from qtbounds.harness import (
    CSV_COLUMNS,
    PATTERNS,
    ComparisonRow,
    default_ranges,
    evaluate,
    pattern_of,
    random_qt,
    rate_ratios,
    rows_to_csv,
    summarize,
    sweep,
)
from qtbounds.linalg import INF

RANGES = [(2, 3, 2, 1, 1), (2, 5, 2, 2, 1), (2, 5, 3, 1, 1), (3, 4, 2, 1, 2)]


@pytest.fixture(scope="module")
def rows():
    return sweep(RANGES, 6, seed=11)


def test_random_codes_are_reproducible():
    a = random_qt(3, 5, 3, 2, 2, 42)
    b = random_qt(3, 5, 3, 2, 2, 42)
    assert a.code.same_space(b.code)
    assert [[f.coeffs for f in g] for g in a.gens] == [[f.coeffs for f in g] for g in b.gens]
    others = [random_qt(3, 5, 3, 2, 2, s) for s in range(43, 48)]
    assert any([[f.coeffs for f in g] for g in o.gens] != [[f.coeffs for f in g] for g in a.gens] for o in others)


def test_no_generators_is_the_zero_code():
    assert random_qt(2, 5, 2, 0, 1, 0).is_zero()


@pytest.mark.parametrize("q", [2, 3])
def test_coefficients_look_uniform(q):
    # chi-square against uniform on F_q; 0.999 quantiles for 1 and 2 dof
    counts = np.zeros(q)
    for seed in range(200):
        for g in random_qt(q, 7, 3, 2, 1, seed).gens:
            for f in g:
                full = list(f.coeffs) + [0] * (7 - len(f.coeffs))
                counts += np.bincount(full, minlength=q)
    exp = counts.sum() / q
    chi2 = float(((counts - exp) ** 2 / exp).sum())
    assert chi2 < {2: 10.83, 3: 13.82}[q]


def test_pattern_of():
    assert pattern_of(1, 2, 3) == "JSL"
    assert pattern_of(8, 4, 6) == "LJS"
    assert pattern_of(1, 5, 3) == "SJL"
    assert pattern_of(2, 2, 3) == "none"
    assert set(PATTERNS) == {"JSL", "JLS", "SJL", "LJS", "SLJ", "LSJ"}


def test_row_flags_with_ties():
    r = ComparisonRow(0, 2, 7, 3, 1, 1, 6, d=8, d_L=8, d_Spec=4, d_J=8)
    assert r.best == {"L": True, "S": False, "J": True}
    assert r.sharp == {"L": True, "S": False, "J": True}
    assert r.pattern == "none"
    rec = r.as_record()
    assert len(rec) == len(CSV_COLUMNS)
    assert rec[-1] == "none"
    inf = ComparisonRow(0, 2, 7, 3, 1, 1, 0, d=INF, d_L=INF, d_Spec=INF, d_J=INF)
    assert inf.as_record()[7:11] == ["inf"] * 4


def test_evaluate_statuses():
    assert evaluate(random_qt(2, 5, 2, 0, 1, 0)).status == "trivial"
    r = evaluate(random_qt(3, 8, 4, 1, 1, 0), enum_budget=10)
    assert r.status == "budget" and r.pattern == "budget"
    assert not any(r.best.values())


def test_bounds_never_exceed_distance(rows):
    assert rows
    for r in rows:
        assert r.ok
        assert max(r.d_L, r.d_Spec, r.d_J) <= r.d
        assert min(r.d_L, r.d_Spec, r.d_J) >= 1


def test_summary_invariants(rows):
    s = summarize(rows)
    assert s.nontrivial == len(rows)
    assert sum(s.patterns.values()) == s.nontrivial
    for k in "LSJ":
        assert s.sharp[k] <= s.best[k] <= s.nontrivial
    assert sum(s.best.values()) >= s.nontrivial
    d = s.as_dict()
    assert set(d) == {"nontrivial", "budget_exceeded", "sharp", "best", "patterns"}


def test_csv_is_deterministic(rows):
    text = rows_to_csv(rows)
    again = rows_to_csv(sweep(RANGES, 6, seed=11))
    assert text == again
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[0] == CSV_COLUMNS
    assert len(parsed) == len(rows) + 1
    buf = io.StringIO()
    assert rows_to_csv(rows, buf) is None
    assert buf.getvalue() == text


def test_parallel_sweep_matches_serial(rows):
    par = sweep(RANGES, 6, seed=11, jobs=2)
    assert rows_to_csv(par) == rows_to_csv(rows)


def test_rate_ratios(rows):
    table = rate_ratios(rows, buckets=4)
    assert sum(t["count"] for t in table) == len(rows)
    for t in table:
        assert 0 <= t["rate_lo"] < t["rate_hi"] <= 1
        for k in ("mean_L", "mean_S", "mean_J"):
            assert 0 < t[k] <= 1


def test_default_ranges():
    tups = default_ranges(2, 1, [3], range(2, 4))
    assert tups == [(2, 3, 2, 1, 1), (2, 3, 2, 2, 1), (2, 3, 3, 1, 1), (2, 3, 3, 2, 1), (2, 3, 3, 3, 1)]
    assert {t[1] for t in default_ranges(3, 2)} == {4, 5, 7, 8}
    with pytest.raises(ValueError):
        default_ranges(2, 1, [4])
