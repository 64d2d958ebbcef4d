"""Random QT codes and the three-way comparison of d_L, d_Spec and d_J.

A sweep draws ``count`` codes per parameter tuple, evaluates every
nontrivial one and emits one CSV row per code.  Rows are ordered by
(tuple, draw index) regardless of how the work is scheduled.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .concat import jensen_bound
from .lally import lally_bound
from .linalg import DEFAULT_ENUM_BUDGET, INF, BudgetExceeded
from .qtcode import QtCode, exact_min_distance
from .spectral import spectral_bounds
from .tower import build_tower

__all__ = [
    "CSV_COLUMNS",
    "PATTERNS",
    "ComparisonRow",
    "SweepSummary",
    "random_qt",
    "evaluate",
    "pattern_of",
    "default_ranges",
    "sweep",
    "rows_to_csv",
    "summarize",
    "rate_ratios",
]

CSV_COLUMNS = (
    "seed,q,m,ell,r,lambda,dim,d,d_L,d_Spec,d_J,"
    "sharp_L,sharp_S,sharp_J,best_L,best_S,best_J,pattern"
).split(",")

# strict orderings, largest bound first
PATTERNS = ("JSL", "JLS", "SJL", "LJS", "SLJ", "LSJ")


def random_qt(q: int, m: int, ell: int, r: int, lam: int, seed: int) -> QtCode:
    """r generators of ell polynomials each, coefficients uniform on F_q
    with degree < m.  The stream depends on every argument, so each
    (tuple, seed) names one code."""
    t = build_tower(q, m, lam)
    rng = np.random.default_rng([seed, q, m, ell, r, lam])
    coeffs = rng.integers(0, q, size=(r, ell, m))
    return QtCode.from_coeffs(t, ell, coeffs.tolist())


@dataclass(frozen=True)
class ComparisonRow:
    seed: int
    q: int
    m: int
    ell: int
    r: int
    lam: int
    dim: int
    d: float | None = None
    d_L: float | None = None
    d_Spec: float | None = None
    d_J: float | None = None
    status: str = "ok"  # ok | trivial | budget

    @property
    def length(self) -> int:
        return self.m * self.ell

    @property
    def rate(self) -> float:
        return self.dim / self.length

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def _bounds(self) -> dict[str, float]:
        return {"L": self.d_L, "S": self.d_Spec, "J": self.d_J}

    @property
    def sharp(self) -> dict[str, bool]:
        if not self.ok:
            return {k: False for k in "LSJ"}
        return {k: v == self.d for k, v in self._bounds().items()}

    @property
    def best(self) -> dict[str, bool]:
        if not self.ok:
            return {k: False for k in "LSJ"}
        b = self._bounds()
        top = max(b.values())
        return {k: v == top for k, v in b.items()}

    @property
    def pattern(self) -> str:
        if not self.ok:
            return self.status
        return pattern_of(self.d_L, self.d_Spec, self.d_J)

    def as_record(self) -> list:
        def num(x):
            if x is None:
                return ""
            return "inf" if x == INF else str(int(x))

        sh, be = self.sharp, self.best
        return [
            self.seed, self.q, self.m, self.ell, self.r, self.lam, self.dim,
            num(self.d), num(self.d_L), num(self.d_Spec), num(self.d_J),
            int(sh["L"]), int(sh["S"]), int(sh["J"]),
            int(be["L"]), int(be["S"]), int(be["J"]),
            self.pattern,
        ]


def pattern_of(d_L: float, d_Spec: float, d_J: float) -> str:
    vals = {"L": d_L, "S": d_Spec, "J": d_J}
    order = sorted(vals, key=lambda k: -vals[k])
    if len(set(vals.values())) < 3:
        return "none"
    return "".join(order)


def evaluate(
    c: QtCode,
    seed: int = 0,
    families: Sequence[str] = ("bu",),
    subset_cap: int | None = None,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
) -> ComparisonRow:
    """True distance and the three bounds; d_Spec is the best value over the
    requested families.  Trivial codes come back with status ``trivial``."""
    t = c.tower
    base = dict(seed=seed, q=t.q, m=t.m, ell=c.ell, r=len(c.gens), lam=t.lam, dim=c.dim)
    if c.is_zero() or c.is_full():
        return ComparisonRow(**base, status="trivial")
    try:
        d = exact_min_distance(c, budget=enum_budget)
        spec = spectral_bounds(c, families, subset_cap=subset_cap)
    except BudgetExceeded:
        return ComparisonRow(**base, status="budget")
    d_spec = max(r.value for r in spec.values())
    return ComparisonRow(
        **base,
        d=d,
        d_L=lally_bound(c).value,
        d_Spec=d_spec,
        d_J=jensen_bound(c).value,
    )


def default_ranges(q: int, lam: int = 1, ms: Iterable[int] | None = None, ells: Iterable[int] = range(2, 7)):
    """(q, m, ell, r, lambda) tuples in the style of the comparison tables:
    every r from 1 to ell."""
    if ms is None:
        ms = {2: (3, 5, 7, 9, 11), 3: (4, 5, 7, 8)}.get(q, ())
    out = []
    for m in ms:
        if math.gcd(m, q) != 1:
            raise ValueError(f"gcd(m={m}, q={q}) != 1")
        for ell in ells:
            for r in range(1, ell + 1):
                out.append((q, m, ell, r, lam))
    return out


@dataclass(frozen=True)
class _Job:
    tup: tuple[int, int, int, int, int]
    seed: int
    families: tuple[str, ...]
    subset_cap: int | None
    enum_budget: int


def _run(job: _Job) -> ComparisonRow:
    q, m, ell, r, lam = job.tup
    c = random_qt(q, m, ell, r, lam, job.seed)
    return evaluate(c, job.seed, job.families, job.subset_cap, job.enum_budget)


def sweep(
    ranges: Sequence[tuple[int, int, int, int, int]],
    count: int,
    seed: int = 0,
    families: Sequence[str] = ("bu",),
    subset_cap: int | None = None,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
    jobs: int = 1,
) -> list[ComparisonRow]:
    """``count`` codes per tuple with seeds seed, seed+1, ...; trivial codes
    are dropped, budget failures kept and flagged."""
    work = [
        _Job(tuple(tup), seed + i, tuple(families), subset_cap, enum_budget)
        for tup in ranges
        for i in range(count)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_run, work, chunksize=8))
    else:
        rows = [_run(w) for w in work]
    return [r for r in rows if r.status != "trivial"]


def rows_to_csv(rows: Iterable[ComparisonRow], out=None) -> str | None:
    buf = io.StringIO() if out is None else out
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.as_record())
    return buf.getvalue() if out is None else None


@dataclass
class SweepSummary:
    nontrivial: int = 0
    budget: int = 0
    sharp: dict[str, int] = dc_field(default_factory=lambda: dict.fromkeys("LSJ", 0))
    best: dict[str, int] = dc_field(default_factory=lambda: dict.fromkeys("LSJ", 0))
    patterns: dict[str, int] = dc_field(default_factory=lambda: dict.fromkeys(PATTERNS + ("none",), 0))

    def as_dict(self) -> dict:
        return {
            "nontrivial": self.nontrivial,
            "budget_exceeded": self.budget,
            "sharp": dict(self.sharp),
            "best": dict(self.best),
            "patterns": dict(self.patterns),
        }


def summarize(rows: Iterable[ComparisonRow]) -> SweepSummary:
    s = SweepSummary()
    for row in rows:
        if row.status == "budget":
            s.budget += 1
            continue
        if not row.ok:
            continue
        s.nontrivial += 1
        for k in "LSJ":
            s.sharp[k] += row.sharp[k]
            s.best[k] += row.best[k]
        s.patterns[row.pattern] += 1
    return s


def rate_ratios(rows: Iterable[ComparisonRow], buckets: int = 10) -> list[dict]:
    """Mean d_X / d per rate bucket [i/buckets, (i+1)/buckets); rate 1 is
    impossible for nontrivial codes."""
    acc: dict[int, list] = {}
    for row in rows:
        if not row.ok:
            continue
        b = min(int(row.rate * buckets), buckets - 1)
        a = acc.setdefault(b, [0, 0.0, 0.0, 0.0])
        a[0] += 1
        a[1] += row.d_L / row.d
        a[2] += row.d_Spec / row.d
        a[3] += row.d_J / row.d
    out = []
    for b in sorted(acc):
        n, l, s, j = acc[b]
        out.append(
            {
                "rate_lo": b / buckets,
                "rate_hi": (b + 1) / buckets,
                "count": n,
                "mean_L": l / n,
                "mean_S": s / n,
                "mean_J": j / n,
            }
        )
    return out
