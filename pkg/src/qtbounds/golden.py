"""Worked examples with known answers, recomputed on demand."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .concat import jensen_bound
from .constabounds import dist_true, mask_of
from .harness import pattern_of
from .lally import lally_bound
from .linalg import INF
from .qtcode import QtCode, exact_min_distance
from .spectral import EigenData, spectral_bounds

__all__ = [
    "GoldenExample",
    "GoldenResult",
    "EXAMPLES",
    "SUBSET_CHECKS",
    "check_example",
    "check_subsets",
    "run_worked_examples",
]


@dataclass(frozen=True)
class GoldenExample:
    name: str
    q: int
    m: int
    lam: int
    ell: int
    gens: tuple  # per generator, ell coefficient lists (low degree first)
    expect: dict  # keys: n, dim, d, d_L, d_J, b1..b4, bu, pattern
    b1_witnesses: tuple = ()  # acceptable b1 subsets (class indices of Omega)
    b1_size: int | None = None

    def build(self) -> QtCode:
        return QtCode.build(self.q, self.m, self.lam, self.ell, [list(map(list, g)) for g in self.gens])


EXAMPLES = (
    GoldenExample(
        "[14,7,4]_3 2-QT (m=7, ell=2)",
        3, 7, 2, 2,
        (([2, 0, 1, 1, 0, 2], [0, 0, 1, 1, 0, 1]),),
        {"n": 14, "dim": 7, "d": 4, "b1": 4, "b2": 3, "b3": 3, "b4": 3, "d_J": 2},
        b1_witnesses=((0, 4, 5), (1, 2, 6)),
        b1_size=3,
    ),
    GoldenExample(
        "[20,10,4]_3 2-QT (m=10, ell=2)",
        3, 10, 2, 2,
        (([1, 1, 1, 0, 0, 0, 0, 2, 2], [2, 1, 0, 0, 1, 2, 2]),),
        {"n": 20, "dim": 10, "d": 4, "b1": 4, "b2": 4, "b3": 4, "b4": 4, "bu": 4, "d_L": 1, "d_J": 2},
        b1_size=3,
    ),
    GoldenExample(
        "[16,7,5]_3 QC (m=8, ell=2)",
        3, 8, 1, 2,
        (([2, 0, 0, 2, 1, 1, 1, 1], [0, 1, 0, 2, 2, 1, 0, 1]),),
        {"n": 16, "dim": 7, "d": 5, "b1": 5, "b2": 5, "b3": 5, "b4": 5, "bu": 5, "d_L": 2, "d_J": 4},
        b1_size=4,
    ),
    GoldenExample(
        "[8,2,6]_3 2-QT (m=4, ell=2)",
        3, 4, 2, 2,
        (([1, 2, 0, 2], [1, 1, 2]),),
        {"n": 8, "dim": 2, "d": 6, "bu": 4, "d_L": 3, "d_J": 6, "pattern": "JSL"},
    ),
    GoldenExample(
        "[21,6,8]_2 QC (m=7, ell=3)",
        2, 7, 1, 3,
        (([1, 1, 0, 1, 1], [1, 0, 0, 0, 1], [0, 1, 0, 1]),),
        {"n": 21, "dim": 6, "d": 8, "bu": 4, "d_L": 8, "d_J": 6, "pattern": "LJS"},
    ),
    GoldenExample(
        "[21,7,6]_2 QC (m=7, ell=3)",
        2, 7, 1, 3,
        (([1, 0, 1, 0, 1, 1, 1], [0, 0, 1, 0, 0, 1, 1], [1, 0, 0, 0, 1, 1, 1]),),
        {"n": 21, "dim": 7, "d": 6, "bu": 5, "d_L": 1, "d_J": 3, "pattern": "SJL"},
    ),
)

# subsets of the eigenvalues of the first example, as class-free root
# indices k of omega_k, with expected (d_P, eigencode distance, value)
SUBSET_CHECKS = (
    ((0,), (2, INF, 2)),
    ((3, 0), (3, 1, 1)),
    ((0, 4), (3, INF, 3)),
)


@dataclass
class GoldenResult:
    name: str
    got: dict
    diffs: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diffs


def check_example(ex: GoldenExample) -> GoldenResult:
    c = ex.build()
    data = EigenData(c)
    spec = spectral_bounds(c, ("b1", "b2", "b3", "b4", "bu"), data=data)
    got = {
        "n": c.length,
        "dim": c.dim,
        "d": exact_min_distance(c),
        "d_L": lally_bound(c).value,
        "d_J": jensen_bound(c).value,
    }
    got.update({f: r.value for f, r in spec.items()})
    got["pattern"] = pattern_of(got["d_L"], got["bu"], got["d_J"])
    res = GoldenResult(ex.name, got)
    for k, v in ex.expect.items():
        if got[k] != v:
            res.diffs.append(f"{k}: expected {v}, got {got[k]}")
    b1 = spec["b1"]
    if ex.b1_witnesses and b1.subset.indices not in ex.b1_witnesses:
        res.diffs.append(f"b1 witness {b1.subset.indices} not among {ex.b1_witnesses}")
    if ex.b1_size is not None:
        if len(b1.subset) != ex.b1_size:
            res.diffs.append(f"b1 witness size {len(b1.subset)} != {ex.b1_size}")
        if b1.eigencode_dist != INF:
            res.diffs.append(f"b1 eigencode distance {b1.eigencode_dist} != inf")
    return res


def check_subsets() -> GoldenResult:
    ex = EXAMPLES[0]
    c = ex.build()
    data = EigenData(c)
    got, res = {}, GoldenResult("subset values for the [14,7,4]_3 code", {})
    for P, want in SUBSET_CHECKS:
        dP = dist_true(c.tower, P)
        dC = data.eigencode_dist(mask_of(P))
        have = (dP, dC, min(dP, dC))
        got[P] = have
        if have != want:
            res.diffs.append(f"P={P}: expected {want}, got {have}")
    res.got = got
    return res


def run_worked_examples() -> list[GoldenResult]:
    return [check_example(ex) for ex in EXAMPLES] + [check_subsets()]
