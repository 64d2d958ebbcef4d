"""Quasi-twisted codes as F_q[x]/(x^m - lambda)-submodules of R^ell.

A codeword is an m x ell array; coefficient k of column polynomial j sits at
flat position ``k * ell + j``, so the lambda-constashift by ell positions is
a rotation of the flat vector with the wrapped block scaled by lambda.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf import GF
from .linalg import DEFAULT_ENUM_BUDGET, LinearCode, as_matrix, min_distance
from .polyring import Poly, xm_minus_lambda
from .tower import FieldTower, build_tower

__all__ = [
    "QtCode",
    "ReducedBasis",
    "reduce",
    "dimension",
    "scalar_generator_matrix",
    "exact_min_distance",
    "shift_invariance_check",
    "constashift",
]


@dataclass(frozen=True)
class ReducedBasis:
    """Upper-triangular reduced generating matrix G~(x) of a code of co-index m."""

    m: int
    gmat: tuple[tuple[Poly, ...], ...]

    @property
    def ell(self) -> int:
        return len(self.gmat)

    @property
    def diag(self) -> tuple[Poly, ...]:
        return tuple(self.gmat[j][j] for j in range(len(self.gmat)))

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(repr(f) for f in r) + "]" for r in self.gmat]
        return "ReducedBasis(" + ", ".join(rows) + ")"


@dataclass(frozen=True, eq=False)
class QtCode:
    tower: FieldTower
    ell: int
    gens: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("index ell must be positive")
        Kq, m = self.tower.base, self.tower.m
        for g in self.gens:
            if len(g) != self.ell:
                raise ValueError(f"generator has {len(g)} entries, expected {self.ell}")
            for f in g:
                if f.field != Kq:
                    raise ValueError("generator polynomial over the wrong field")
                if f.degree >= m:
                    raise ValueError("generator entries must have degree < m")

    @classmethod
    def from_coeffs(
        cls,
        tower: FieldTower,
        ell: int,
        gens: Sequence[Sequence[Sequence[int]]],
    ) -> "QtCode":
        """Build from coefficient lists (low degree first); each entry is
        reduced mod x^m - lambda."""
        Kq = tower.base
        mod = xm_minus_lambda(tower)
        return cls(tower, ell, tuple(tuple(Poly(Kq, f) % mod for f in g) for g in gens))

    @classmethod
    def build(cls, q: int, m: int, lam: int, ell: int, gens) -> "QtCode":
        return cls.from_coeffs(build_tower(q, m, lam), ell, gens)

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def m(self) -> int:
        return self.tower.m

    @property
    def length(self) -> int:
        return self.tower.m * self.ell

    @functools.cached_property
    def basis(self) -> ReducedBasis:
        return reduce(self)

    @property
    def dim(self) -> int:
        return dimension(self.basis)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.length

    @functools.cached_property
    def code(self) -> LinearCode:
        return scalar_generator_matrix(self)

    def __repr__(self) -> str:
        t = self.tower
        return f"QtCode(q={t.q}, m={t.m}, lambda={t.lam}, ell={self.ell}, r={len(self.gens)})"


def _euclid_column(rows: list[list[Poly]], j: int, mod: Poly) -> tuple[list[Poly] | None, list[list[Poly]]]:
    """Row-reduce so that exactly one row is nonzero in column j."""
    active = [r for r in rows if r[j]]
    rest = [r for r in rows if not r[j]]
    while len(active) > 1:
        active.sort(key=lambda r: r[j].degree)
        piv = active[0]
        nxt = [piv]
        for r in active[1:]:
            qt = r[j] // piv[j]
            new = [(a - qt * b) % mod for a, b in zip(r, piv)]
            (nxt if new[j] else rest).append(new)
        active = nxt
    return (active[0] if active else None), rest


def reduce(c: QtCode) -> ReducedBasis:
    """Reduced (Hermite-form) generating matrix of the module.

    Column-wise Euclidean elimination over the generators together with the
    rows (x^m - lambda) e_j; entries are kept reduced mod x^m - lambda, which
    stays inside the module.  Entries above each pivot are then reduced
    modulo the pivot and the pivots made monic.
    """
    Kq, ell = c.tower.base, c.ell
    mod = xm_minus_lambda(c.tower)
    zero = Poly.zero(Kq)
    rows = [list(g) for g in c.gens if any(g)]
    rows += [[mod if i == j else zero for i in range(ell)] for j in range(ell)]

    out: list[list[Poly]] = []
    for j in range(ell):
        piv, rows = _euclid_column(rows, j, mod)
        assert piv is not None, "the (x^m - lambda) e_j row keeps every pivot nonzero"
        s = Kq.inv(piv[j].lead)
        out.append([f.scale(s) for f in piv])
        rows = [r for r in rows if any(r)]

    for j in range(ell):
        g = out[j][j]
        for i in range(j):
            qt = out[i][j] // g
            if qt:
                out[i] = [(a - qt * b) % mod for a, b in zip(out[i], out[j])]
    return ReducedBasis(c.tower.m, tuple(tuple(r) for r in out))


def dimension(b: ReducedBasis) -> int:
    return sum(b.m - g.degree for g in b.diag)


def _array_rows(K: GF, vec: np.ndarray, m: int, ell: int, lam: int) -> np.ndarray:
    """All m constashifts of one flat codeword."""
    out = np.empty((m, m * ell), dtype=np.int64)
    cur = vec.copy()
    for a in range(m):
        out[a] = cur
        cur = constashift(K, cur, ell, lam)
    return out


def constashift(K: GF, vec: np.ndarray, ell: int, lam: int) -> np.ndarray:
    """Multiply a flat codeword by x: rotate by ell, scaling the wrapped block."""
    vec = np.asarray(vec, dtype=np.int64)
    out = np.roll(vec, ell, axis=-1)
    out[..., :ell] = K.vmul(out[..., :ell], np.int64(lam))
    return out


def _flatten(tup: Sequence[Poly], m: int, ell: int) -> np.ndarray:
    v = np.zeros(m * ell, dtype=np.int64)
    for j, f in enumerate(tup):
        for k, cf in enumerate(f.coeffs):
            v[k * ell + j] = cf
    return v


def scalar_generator_matrix(c: QtCode, rows: Sequence[Sequence[Poly]] | None = None) -> LinearCode:
    """Row space of all x^a multiples of the generators (or of ``rows``)."""
    t, ell = c.tower, c.ell
    K, m = t.base, t.m
    src = c.gens if rows is None else rows
    blocks = [_array_rows(K, _flatten(g, m, ell), m, ell, t.lam) for g in src if any(g)]
    if not blocks:
        return LinearCode.zero(K, m * ell)
    return LinearCode.span(K, np.vstack(blocks), m * ell)


def exact_min_distance(c: QtCode, budget: int = DEFAULT_ENUM_BUDGET, strategy: str = "auto") -> float:
    return min_distance(c.code, strategy=strategy, budget=budget)


def shift_invariance_check(c: QtCode, genmat: np.ndarray | None = None) -> bool:
    """True iff constashifting every row of ``genmat`` stays in the row space."""
    code = c.code if genmat is None else LinearCode.span(c.tower.base, genmat, c.length)
    G = code.genmat if genmat is None else as_matrix(genmat, c.length)
    if G.shape[0] == 0:
        return True
    shifted = constashift(c.tower.base, G, c.ell, c.tower.lam)
    return code.contains_code(LinearCode.span(c.tower.base, shifted, c.length)) and all(
        code.contains(row) for row in shifted
    )
