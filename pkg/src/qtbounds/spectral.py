"""Eigenvalues, eigenspaces and eigencodes of a QT code; the spectral bound.

For a subset P of the eigenvalues, the common eigenspace V_P is the
intersection of the null spaces of G~(beta), beta in P, and the eigencode is
the set of base-field vectors orthogonal to V_P.  The bound
min(d_P, d(eigencode(P))) holds whenever (P, d_P) comes from a defining-set
bound for constacyclic codes with zero set P.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field, replace
from typing import Iterable, Sequence

import numpy as np

from .constabounds import (
    MAX_FULL_SCAN_M,
    SHIFT_STATE_CAP,
    ZeroSet,
    consecutive_table,
    dist_true,
    general_roos_table,
    ht_table,
    indices_of,
    mask_of,
    roos_table,
    shift_independent,
    shift_table,
)
from .linalg import INF, LinearCode, base_solutions, min_distance, rank, right_kernel, rref
from .polyring import eval_at
from .qtcode import QtCode

__all__ = [
    "Spectrum",
    "BoundReport",
    "EigenData",
    "spectrum",
    "parity_check",
    "eigencode",
    "spectral_bound",
    "spectral_bounds",
    "shift_spectral_bound",
    "FAMILIES",
]

FAMILIES = ("b1", "b2", "b3", "b4", "b5", "bu")


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: ZeroSet
    multiplicity: dict[int, int]
    eigenbasis: dict[int, np.ndarray]

    @property
    def mask(self) -> int:
        return self.eigenvalues.mask

    def is_empty(self) -> bool:
        return not self.eigenvalues.indices


@dataclass(frozen=True)
class BoundReport:
    value: float
    family: str
    subset: ZeroSet = ZeroSet(())
    d_P: float = INF
    eigencode_dist: float = INF
    witness: tuple = ()
    exhaustive: bool = True


def eval_matrix(c: QtCode, k: int) -> np.ndarray:
    """G~(omega_k) as an ell x ell matrix over F."""
    t = c.tower
    beta = t.roots.omega[k]
    g = c.basis.gmat
    return np.array([[eval_at(t, f, beta) for f in row] for row in g], dtype=np.int64)


def spectrum(c: QtCode) -> Spectrum:
    """Eigenvalues are the roots of prod g_jj inside Omega; eigenspaces are
    null spaces of G~(beta) and multiplicities count vanishing diagonals."""
    t = c.tower
    omega = t.roots.omega
    diag = c.basis.diag
    mult: dict[int, int] = {}
    basis: dict[int, np.ndarray] = {}
    for k in range(t.m):
        a = sum(1 for g in diag if eval_at(t, g, omega[k]) == 0)
        if a:
            mult[k] = a
            basis[k] = right_kernel(t.F, eval_matrix(c, k), c.ell)
    return Spectrum(ZeroSet(tuple(sorted(mult))), mult, basis)


def parity_check(c: QtCode, sp: Spectrum | None = None) -> np.ndarray:
    """Rows (1, beta, ..., beta^(m-1)) (x) v for each eigenvalue beta and
    each eigenbasis vector v, laid out to match the row-major flat codeword."""
    sp = spectrum(c) if sp is None else sp
    if sp.is_empty():
        raise ValueError("code has no eigenvalues (it is the full space)")
    t = c.tower
    F, m, ell = t.F, t.m, c.ell
    blocks = []
    for k in sp.eigenvalues.indices:
        beta = t.roots.omega[k]
        powers = np.array([F.pow(beta, i) for i in range(m)], dtype=np.int64)
        V = sp.eigenbasis[k]
        # entry at flat position i*ell + j is beta^i * v_j
        blocks.append(F.vmul(powers[None, :, None], V[:, None, :]).reshape(V.shape[0], m * ell))
    return np.vstack(blocks)


class EigenData:
    """Common eigenspaces and eigencode distances of one code, memoised.

    Subspaces of F^ell are interned by their reduced echelon basis, so the
    many subsets P sharing one common eigenspace share all downstream work.
    """

    def __init__(self, c: QtCode, sp: Spectrum | None = None, enum_budget: int | None = None):
        self.code = c
        self.sp = spectrum(c) if sp is None else sp
        self.t = c.tower
        self.ell = c.ell
        self.enum_budget = enum_budget
        self._spaces: list[np.ndarray] = []
        self._ids: dict[bytes, int] = {}
        self._meet: dict[tuple[int, int], int] = {}
        self._by_mask: dict[int, int] = {0: self._intern(np.eye(self.ell, dtype=np.int64))}
        self._dist: dict[int, float] = {}
        for k in self.sp.eigenvalues.indices:
            self._by_mask[1 << k] = self._intern(self.sp.eigenbasis[k])

    def _intern(self, V: np.ndarray) -> int:
        if V.shape[0]:
            V, _ = rref(self.t.F, V)
        key = V.tobytes() + bytes([V.shape[0]])
        sid = self._ids.get(key)
        if sid is None:
            sid = len(self._spaces)
            self._spaces.append(V)
            self._ids[key] = sid
        return sid

    def _intersect(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        hit = self._meet.get(key)
        if hit is not None:
            return hit
        A, B = self._spaces[a], self._spaces[b]
        F = self.t.F
        if A.shape[0] == 0 or B.shape[0] == 0:
            res = self._intern(np.zeros((0, self.ell), dtype=np.int64))
        elif A.shape[0] == self.ell:
            res = b
        elif B.shape[0] == self.ell:
            res = a
        else:
            # v = x A with x in ker of (B-perp applied to A)
            Bperp = right_kernel(F, B, self.ell)
            M = _matmul(F, Bperp, A.T)  # (ell - dimB) x dimA
            X = right_kernel(F, M, A.shape[0])
            res = self._intern(_matmul(F, X, A) if X.shape[0] else np.zeros((0, self.ell), dtype=np.int64))
        self._meet[key] = res
        return res

    def space_id(self, mask: int) -> int:
        sid = self._by_mask.get(mask)
        if sid is None:
            low = mask & -mask
            sid = self._intersect(self.space_id(mask ^ low), self.space_id(low))
            self._by_mask[mask] = sid
        return sid

    def common_eigenspace(self, mask: int) -> np.ndarray:
        if mask & ~self.sp.mask:
            raise ValueError("subset is not contained in the eigenvalues")
        return self._spaces[self.space_id(mask)]

    def eigencode(self, mask: int) -> LinearCode:
        return base_solutions(self.t, self.common_eigenspace(mask), self.ell)

    def eigencode_dist(self, mask: int) -> float:
        if mask & ~self.sp.mask:
            raise ValueError("subset is not contained in the eigenvalues")
        sid = self.space_id(mask)
        d = self._dist.get(sid)
        if d is None:
            code = base_solutions(self.t, self._spaces[sid], self.ell)
            d = min_distance(code) if self.enum_budget is None else min_distance(code, budget=self.enum_budget)
            self._dist[sid] = d
        return d


def _matmul(F, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, i][:, None], B[i][None, :]))
    return out


def eigencode(c: QtCode, sp: Spectrum | None, p: ZeroSet | Iterable[int]) -> LinearCode:
    """Base-field vectors orthogonal to the common eigenspace of P."""
    data = EigenData(c, sp)
    idx = p.indices if isinstance(p, ZeroSet) else tuple(p)
    if not idx:
        raise ValueError("empty eigenvalue subset")
    return data.eigencode(mask_of(idx))


# --- the spectral bound ----------------------------------------------------


def _subsets_in_order(s_mask: int):
    """Nonempty submasks of s_mask by size, then lexicographically by indices."""
    idx = indices_of(s_mask)
    for size in range(1, len(idx) + 1):
        for comb in itertools.combinations(idx, size):
            yield comb


def _order_key(mask: int) -> tuple:
    idx = indices_of(mask)
    return (len(idx), idx)


def _best_from_candidates(
    data: EigenData, family: str, cands: list[tuple[int, float, tuple]]
) -> BoundReport:
    """max over candidates (mask, d_P, witness) of min(d_P, eigencode distance);
    ties go to the smallest (|P|, sorted indices)."""
    best_val = -1.0
    best = None
    cands = sorted(cands, key=lambda x: (-x[1], _order_key(x[0])))
    # values are non-increasing, so once d_P <= best no later candidate wins
    for mask, dP, wit in cands:
        if dP < best_val:
            break
        v = min(dP, data.eigencode_dist(mask))
        if v > best_val or (v == best_val and _order_key(mask) < _order_key(best[0])):
            best_val = v
            best = (mask, dP, wit)
    if best is None:
        return BoundReport(1, family, exhaustive=True)
    mask, dP, wit = best
    return BoundReport(
        value=best_val,
        family=family,
        subset=ZeroSet.from_mask(mask),
        d_P=dP,
        eigencode_dist=data.eigencode_dist(mask),
        witness=wit,
    )


def _family_candidates(data: EigenData, family: str, general_roos: bool = False) -> list[tuple[int, float, tuple]]:
    t = data.t
    s = data.sp.mask
    full = (1 << t.m) - 1
    if family == "b2":
        cands = consecutive_table(t.m).restrict(s)
    elif family == "b3":
        cands = ht_table(t.m).restrict(s)
    elif family == "b4":
        cands = roos_table(t.m).restrict(s)
        if general_roos:
            cands = cands + general_roos_table(t).restrict(s)
    else:
        raise ValueError(family)
    if s == full:
        cands = cands + [(full, INF, (("omega", True),))]
    return cands


def _b1_bound(data: EigenData, subset_cap: int | None) -> BoundReport:
    t = data.t
    s = data.sp.mask
    best_val, best_mask = -1.0, None
    exhaustive = True
    count = 0
    for comb in _subsets_in_order(s):
        count += 1
        if subset_cap is not None and count > subset_cap:
            exhaustive = False
            break
        mask = mask_of(comb)
        dC = data.eigencode_dist(mask)
        ub = min(dC, len(comb) + 1) if mask != (1 << t.m) - 1 else dC
        if ub <= best_val:
            continue
        v = min(dist_true(t, mask, cap=ub), dC)
        if v > best_val:
            best_val, best_mask = v, mask
    if best_mask is None:
        return BoundReport(1, "b1", exhaustive=exhaustive)
    return BoundReport(
        value=best_val,
        family="b1",
        subset=ZeroSet.from_mask(best_mask),
        d_P=dist_true(t, best_mask),
        eigencode_dist=data.eigencode_dist(best_mask),
        witness=(("exact", True),),
        exhaustive=exhaustive,
    )


def _b5_bound(data: EigenData, cap: int) -> BoundReport:
    t = data.t
    s = data.sp.mask
    full = (1 << t.m) - 1
    cands = [(b.subset.mask, b.value, b.witness) for b in shift_independent(t, s, cap)]
    if s == full:
        cands.append((full, INF, (("omega", True),)))
    rep = _best_from_candidates(data, "b5", cands)
    return replace(rep, exhaustive=shift_table(t.m, cap).exhaustive)


def spectral_bounds(
    c: QtCode,
    families: Sequence[str] = ("b1", "b2", "b3", "b4", "b5", "bu"),
    subset_cap: int | None = None,
    shift_cap: int = SHIFT_STATE_CAP,
    general_roos: bool = False,
    data: EigenData | None = None,
) -> dict[str, BoundReport]:
    """Spectral bound per family; ``bu`` is the best of b1..b4 (b5 is kept
    separate).  The zero code gets infinity for every family."""
    fams = [f.lower() for f in families]
    for f in fams:
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
    data = EigenData(c) if data is None else data
    if data.sp.is_empty():
        raise ValueError("code has no eigenvalues (it is the full space)")
    if c.is_zero():
        full = ZeroSet(tuple(range(c.m)))
        return {f: BoundReport(INF, f, full, INF, INF, (("zero code", True),)) for f in fams}
    if c.m > MAX_FULL_SCAN_M:
        raise ValueError(f"m = {c.m} exceeds the subset-scan limit {MAX_FULL_SCAN_M}")
    out: dict[str, BoundReport] = {}
    need = set(fams)
    if "bu" in need:
        need |= {"b1", "b2", "b3", "b4"}
    for f in ("b1", "b2", "b3", "b4", "b5"):
        if f not in need:
            continue
        if f == "b1":
            out[f] = _b1_bound(data, subset_cap)
        elif f == "b5":
            out[f] = _b5_bound(data, shift_cap)
        else:
            out[f] = _best_from_candidates(data, f, _family_candidates(data, f, general_roos))
    if "bu" in need:
        parts = [out[f] for f in ("b1", "b2", "b3", "b4")]
        top = max(parts, key=lambda r: r.value)
        out["bu"] = BoundReport(
            top.value,
            "bu",
            top.subset,
            top.d_P,
            top.eigencode_dist,
            (("from", top.family),) + top.witness,
            all(r.exhaustive for r in parts),
        )
    return {f: out[f] for f in fams}


def spectral_bound(c: QtCode, families: Iterable[str] = ("bu",), subset_cap: int | None = None) -> BoundReport:
    """Best spectral bound over the union of the given families."""
    fams = list(families)
    reps = spectral_bounds(c, fams, subset_cap=subset_cap)
    best = max(reps.values(), key=lambda r: r.value)
    return best


def shift_spectral_bound(c: QtCode, sp: Spectrum | None = None, cap: int = SHIFT_STATE_CAP) -> BoundReport:
    data = EigenData(c, sp)
    if data.sp.is_empty():
        raise ValueError("code has no eigenvalues (it is the full space)")
    if c.is_zero():
        return BoundReport(INF, "b5", ZeroSet(tuple(range(c.m))), INF, INF)
    return _b5_bound(data, cap)
