"""Defining-set bounds for lambda-constacyclic codes of length m over F.

Subsets P of Omega are handled as index sets of {0, ..., m-1}, usually as
bitmasks (bit k set <=> omega[k] in P).  For a consecutive set the element
alpha * xi^(e + z n) has index e + z n mod m, and the Roos product
MN = (1/alpha) * union(eps * N) becomes the sumset of the index sets.

The BCH, HT and Roos (consecutive-N) families are pure combinatorics over
Z_m: they are computed once per m on canonical representatives and spread
over all affine images k -> u k + c (u a unit mod m), which permute each
family.  Only the exact distance d(D_P) needs the field tower.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from .linalg import INF, min_dependent_columns
from .tower import FieldTower

__all__ = [
    "ZeroSet",
    "DefSetBound",
    "FamilyTable",
    "mask_of",
    "indices_of",
    "vandermonde_parity",
    "dist_true",
    "consecutive_sets",
    "ht_sets",
    "roos_sets",
    "shift_independent",
    "consecutive_table",
    "ht_table",
    "roos_table",
    "general_roos_table",
    "ShiftSearch",
    "ShiftTable",
    "shift_search",
    "shift_table",
    "shift_value",
    "MAX_FULL_SCAN_M",
    "SHIFT_STATE_CAP",
]

MAX_FULL_SCAN_M = 16
SHIFT_STATE_CAP = 1 << 20


def mask_of(indices: Iterable[int]) -> int:
    out = 0
    for k in indices:
        out |= 1 << k
    return out


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class ZeroSet:
    indices: tuple[int, ...]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "ZeroSet":
        return cls(tuple(sorted(set(indices))))

    @classmethod
    def from_mask(cls, mask: int) -> "ZeroSet":
        return cls(indices_of(mask))

    @property
    def mask(self) -> int:
        return mask_of(self.indices)

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class DefSetBound:
    subset: ZeroSet
    value: float
    family: str
    witness: tuple = dc_field(default=())


# --- B1: exact distance of D_P ---------------------------------------------


def vandermonde_parity(t: FieldTower, p: ZeroSet | Iterable[int]) -> np.ndarray:
    """|P| x m matrix with row (1, b, b^2, ..., b^(m-1)) for each b in P."""
    idx = p.indices if isinstance(p, ZeroSet) else tuple(sorted(set(p)))
    if not idx:
        raise ValueError("empty zero set")
    F, omega = t.F, t.roots.omega
    H = np.empty((len(idx), t.m), dtype=np.int64)
    for i, k in enumerate(idx):
        b, acc = omega[k], 1
        for j in range(t.m):
            H[i, j] = acc
            acc = F.mul(acc, b)
    return H


# per tower: mask -> (value, exact); when not exact the value is a lower bound
_DIST_CACHE: dict[tuple[int, int, int], dict[int, tuple[float, bool]]] = {}


def dist_true(t: FieldTower, p: ZeroSet | Iterable[int] | int, cap: float = INF) -> float:
    """min(d(D_P), cap) where D_P is the largest constacyclic code over F
    with zero set P; d(D_Omega) is infinite."""
    if isinstance(p, int):
        mask = p
    elif isinstance(p, ZeroSet):
        mask = p.mask
    else:
        mask = mask_of(p)
    if mask == 0:
        raise ValueError("empty zero set")
    full = (1 << t.m) - 1
    if mask == full:
        return INF
    cache = _DIST_CACHE.setdefault(t.key, {})
    hit = cache.get(mask)
    if hit is not None:
        val, exact = hit
        if exact or cap <= val:
            return min(val, cap)
    # Singleton: dim D_P = m - |P|, so d(D_P) <= |P| + 1
    size = bin(mask).count("1")
    limit = min(cap, size + 2)
    val = min_dependent_columns(t.F, vandermonde_parity(t, indices_of(mask)), below=limit)
    exact = val < limit or limit == size + 2
    if exact and val == size + 2:  # pragma: no cover - Singleton violated
        raise AssertionError("vandermonde columns unexpectedly independent")
    cache[mask] = (val, exact)
    return min(val, cap)


# --- affine images of index sets ------------------------------------------


@functools.lru_cache(maxsize=None)
def _units(m: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, m + 1) if math.gcd(u, m) == 1 and u < max(m, 2))


@functools.lru_cache(maxsize=None)
def _affine_perms(m: int) -> tuple[np.ndarray, np.ndarray]:
    """(params, perms): perms[i, k] = u*k + c mod m for params[i] = (u, c)."""
    params = [(u, c) for u in _units(m) for c in range(m)]
    ks = np.arange(m)
    perms = np.array([(u * ks + c) % m for u, c in params], dtype=np.int64)
    return np.array(params, dtype=np.int64), perms


def _bits(masks: np.ndarray, m: int) -> np.ndarray:
    return ((masks[:, None] >> np.arange(m)[None, :]) & 1).astype(bool)


@dataclass(frozen=True)
class FamilyTable:
    """A defining-set family over Z_m: distinct masks with their best value.

    ``witness[i]`` holds the canonical parameters together with the affine
    map (u, c) that carries the canonical set onto ``masks[i]``.
    """

    family: str
    m: int
    masks: np.ndarray
    values: np.ndarray
    witness: tuple

    def restrict(self, s_mask: int) -> list[tuple[int, float, tuple]]:
        """Members contained in s_mask as (mask, value, witness)."""
        sel = np.flatnonzero((self.masks & ~np.int64(s_mask)) == 0)
        return [(int(self.masks[i]), float(self.values[i]), self.witness[i]) for i in sel]

    def value_of(self, mask: int) -> float | None:
        i = np.searchsorted(self.masks, mask)
        if i < self.masks.size and self.masks[i] == mask:
            return float(self.values[i])
        return None

    def __len__(self) -> int:
        return int(self.masks.size)


def _spread(family: str, m: int, canon: list[tuple[int, int, tuple]]) -> FamilyTable:
    """Apply every affine map to canonical (mask, value, params) and keep, per
    image mask, the best value (ties: first canonical entry, first map)."""
    full = (1 << m) - 1
    if not canon:
        z = np.zeros(0, dtype=np.int64)
        return FamilyTable(family, m, z, z.astype(float), ())
    cmask = np.array([c[0] for c in canon], dtype=np.int64)
    cval = np.array([c[1] for c in canon], dtype=np.int64)
    params, perms = _affine_perms(m)
    bits = _bits(cmask, m)
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    img = np.zeros((perms.shape[0], cmask.size), dtype=np.int64)
    for i, perm in enumerate(perms):
        # bit k of the canonical mask goes to bit perm[k]
        img[i] = bits.astype(np.int64) @ weights[perm]
    flat_mask = img.ravel()
    flat_val = np.broadcast_to(cval, img.shape).ravel()
    flat_map = np.repeat(np.arange(perms.shape[0]), cmask.size)
    flat_can = np.tile(np.arange(cmask.size), perms.shape[0])
    keep = flat_mask != full
    flat_mask, flat_val, flat_map, flat_can = (a[keep] for a in (flat_mask, flat_val, flat_map, flat_can))
    # sort by mask, then value descending, then canonical order, then map
    order = np.lexsort((flat_map, flat_can, -flat_val, flat_mask))
    fm = flat_mask[order]
    first = np.ones(fm.size, dtype=bool)
    first[1:] = fm[1:] != fm[:-1]
    sel = order[first]
    wit = tuple(
        canon[int(flat_can[i])][2] + (("u", int(params[flat_map[i], 0])), ("c", int(params[flat_map[i], 1])))
        for i in sel
    )
    return FamilyTable(family, m, flat_mask[sel], flat_val[sel].astype(float), wit)


@functools.lru_cache(maxsize=None)
def consecutive_table(m: int) -> FamilyTable:
    """All consecutive proper subsets {e + z n}, gcd(m, n) = 1, value |E| + 1."""
    canon = [(mask_of(range(size)), size + 1, (("e", 0), ("n", 1), ("delta", size + 1))) for size in range(1, m)]
    return _spread("B2", m, canon)


@functools.lru_cache(maxsize=None)
def ht_table(m: int) -> FamilyTable:
    """All sets {e + z n1 + y n2 : z <= delta - 2, y <= s} with gcd(m, n1) = 1,
    gcd(m, n2) < delta and s >= 1; value delta + s."""
    canon = []
    full = (1 << m) - 1
    for n2 in range(1, m):
        g = math.gcd(m, n2)
        for delta in range(max(2, g + 1), m + 1):
            for s in range(1, m):
                mask = mask_of((z + y * n2) % m for z in range(delta - 1) for y in range(s + 1))
                if mask == full:
                    break
                canon.append((mask, delta + s, (("e", 0), ("n1", 1), ("n2", n2), ("delta", delta), ("s", s))))
    return _spread("B3", m, canon)


def _hull_length(idx: tuple[int, ...], step_inv: int, m: int) -> int:
    """Length of the shortest consecutive set with the given step containing idx."""
    pos = sorted((k * step_inv) % m for k in idx)
    if len(pos) == 1:
        return 1
    gaps = [pos[i + 1] - pos[i] for i in range(len(pos) - 1)] + [pos[0] + m - pos[-1]]
    return m - max(gaps) + 1


@functools.lru_cache(maxsize=None)
def roos_table(m: int) -> FamilyTable:
    """Roos sets MN with N consecutive: |M'| < |M| + |N| gives value |M| + |N|.

    Canonical form: N = {0, 1, ..., a - 1} (an affine map sends any
    consecutive N there) and M an arbitrary subset containing 0.
    """
    canon = []
    full = (1 << m) - 1
    units = _units(m)
    inv = {u: pow(u, -1, m) if m > 1 else 0 for u in units}
    for rest in range(1 << (m - 1)):
        mmask = 1 | (rest << 1)
        M = indices_of(mmask)
        hull = min(_hull_length(M, inv[u], m) for u in units)
        nprime = min(units, key=lambda u: (_hull_length(M, inv[u], m), u))
        for a in range(max(1, hull - len(M) + 1), m):
            mn = 0
            for k in M:
                for z in range(a):
                    mn |= 1 << ((k + z) % m)
            if mn == full:
                break
            canon.append((mn, len(M) + a, (("M", M), ("N", tuple(range(a))), ("n_prime", nprime), ("hull", hull))))
    return _spread("B4", m, canon)


def general_roos_table(t: FieldTower) -> FamilyTable:
    """Roos family with arbitrary N and d_N = d(D_N) (expensive; opt-in).

    Translations preserve d(D_N), so M and N are taken to contain 0 and the
    products are spread by translations only.
    """
    m = t.m
    full = (1 << m) - 1
    units = _units(m)
    inv = {u: pow(u, -1, m) if m > 1 else 0 for u in units}
    best: dict[int, tuple[float, tuple]] = {}
    for nrest in range(1 << (m - 1)):
        nmask = 1 | (nrest << 1)
        if nmask == full:
            continue
        dN = dist_true(t, nmask)
        N = indices_of(nmask)
        for mrest in range(1 << (m - 1)):
            M = indices_of(1 | (mrest << 1))
            hull = min(_hull_length(M, inv[u], m) for u in units)
            if hull > len(M) + dN - 2:
                continue
            mn = 0
            for a in M:
                for b in N:
                    mn |= 1 << ((a + b) % m)
            if mn == full:
                continue
            val = len(M) + dN - 1
            for c in range(m):
                img = ((mn << c) | (mn >> (m - c))) & full
                if img not in best or best[img][0] < val:
                    best[img] = (val, (("M", M), ("N", N), ("d_N", dN), ("c", c)))
    masks = np.array(sorted(best), dtype=np.int64)
    return FamilyTable(
        "B4g", m, masks, np.array([best[k][0] for k in sorted(best)], dtype=float), tuple(best[k][1] for k in sorted(best))
    )


def _as_mask(s: ZeroSet | Iterable[int] | int) -> int:
    if isinstance(s, int):
        return s
    if isinstance(s, ZeroSet):
        return s.mask
    return mask_of(s)


def _maximal(entries: list[tuple[int, float, tuple]]) -> list[tuple[int, float, tuple]]:
    masks = [e[0] for e in entries]
    return [e for e in entries if not any(o != e[0] and (o & e[0]) == e[0] for o in masks)]


def _to_bounds(entries, family: str) -> list[DefSetBound]:
    out = [DefSetBound(ZeroSet.from_mask(mk), v, family, w) for mk, v, w in entries]
    out.sort(key=lambda b: (len(b.subset), b.subset.indices))
    return out


def consecutive_sets(t: FieldTower, s, maximal: bool = True) -> list[DefSetBound]:
    """Consecutive subsets of s with value |E| + 1 (maximal ones by default)."""
    entries = consecutive_table(t.m).restrict(_as_mask(s))
    return _to_bounds(_maximal(entries) if maximal else entries, "B2")


def ht_sets(t: FieldTower, s) -> list[DefSetBound]:
    return _to_bounds(ht_table(t.m).restrict(_as_mask(s)), "B3")


def roos_sets(t: FieldTower, s, general: bool = False) -> list[DefSetBound]:
    table = general_roos_table(t) if general else roos_table(t.m)
    return _to_bounds(table.restrict(_as_mask(s)), "B4")


# --- B5: independent sets of the shift bound -------------------------------


@dataclass(frozen=True)
class ShiftSearch:
    """Independent sets with respect to a fixed root set S.

    Pairs (T_A, |A|) bound the weight of a polynomial whose root set in
    Omega is exactly S; they are not defining-set bounds for zero sets that
    merely contain T_A (see :func:`shift_table`).
    """

    m: int
    s_mask: int
    pairs: tuple[tuple[int, int, int], ...]  # (T_A mask, |A|, A mask), Pareto-maximal
    states: int
    exhaustive: bool


@functools.lru_cache(maxsize=4096)
def _shift_search(m: int, s_mask: int, cap: int) -> ShiftSearch:
    full = (1 << m) - 1
    outside = [b for b in range(m) if not (s_mask >> b) & 1]
    seen = {0}
    queue = deque([0])
    exhaustive = True

    def rot(a: int, k: int) -> int:
        return ((a << k) | (a >> (m - k))) & full if k else a

    while queue:
        a = queue.popleft()
        nxt = []
        if (a & ~s_mask) == 0:
            nxt.extend(a | (1 << b) for b in outside)
        nxt.extend(rot(a, k) for k in range(1, m) if (rot(a, k) & ~s_mask) == 0)
        for b in nxt:
            if b not in seen:
                if len(seen) >= cap:
                    exhaustive = False
                    break
                seen.add(b)
                queue.append(b)
        if not exhaustive:
            break
    best: dict[int, tuple[int, int]] = {}
    for a in seen:
        if a == 0:
            continue
        tmask = a & s_mask
        size = bin(a).count("1")
        if tmask not in best or best[tmask][0] < size or (best[tmask][0] == size and a < best[tmask][1]):
            best[tmask] = (size, a)
    items = sorted(best.items(), key=lambda kv: (-kv[1][0], bin(kv[0]).count("1"), kv[0]))
    pareto = []
    for tmask, (size, a) in items:
        if any((tm & tmask) == tm and sz >= size for tm, sz, _ in pareto):
            continue
        pareto.append((tmask, size, a))
    return ShiftSearch(m, s_mask, tuple(pareto), len(seen), exhaustive)


def shift_search(m: int, s, cap: int = SHIFT_STATE_CAP) -> ShiftSearch:
    return _shift_search(m, _as_mask(s), cap)


def _max_independent(m: int, t_mask: int, cap: int) -> tuple[int, int, bool]:
    """(largest |A|, that A, exhaustive) over sets independent with respect
    to the exact root set t_mask.  A polynomial with root set T has weight
    at most |T| + 1, so the search stops there."""
    full = (1 << m) - 1
    outside = [b for b in range(m) if not (t_mask >> b) & 1]
    ceiling = bin(t_mask).count("1") + 1
    seen = {0}
    queue = deque([0])
    best, best_a = 0, 0

    def rot(a: int, k: int) -> int:
        return ((a << k) | (a >> (m - k))) & full

    while queue:
        a = queue.popleft()
        nxt = [a | (1 << b) for b in outside] if (a & ~t_mask) == 0 else []
        nxt.extend(r for r in (rot(a, k) for k in range(1, m)) if (r & ~t_mask) == 0)
        for b in nxt:
            if b in seen:
                continue
            size = bin(b).count("1")
            if size > best:
                best, best_a = size, b
                if best >= ceiling:
                    return best, best_a, True
            if len(seen) >= cap:
                return best, best_a, False
            seen.add(b)
            queue.append(b)
    return best, best_a, True


@dataclass(frozen=True)
class ShiftTable:
    """value[P] = min over T with P <= T < Omega of the largest set
    independent with respect to T; a valid d_P for every P.

    A codeword of D_P may vanish on more of Omega than P, and the shift
    bound only applies to independence with respect to the exact root set,
    hence the minimum over supersets.  ``binding[P]`` is a minimising T.
    """

    m: int
    value: np.ndarray  # float, index = mask; value[full] = inf
    binding: np.ndarray
    witness_a: np.ndarray  # largest independent set found for each T
    exhaustive: bool


@functools.lru_cache(maxsize=None)
def shift_table(m: int, cap: int = SHIFT_STATE_CAP) -> ShiftTable:
    full = (1 << m) - 1
    size = 1 << m
    best = np.full(size, INF)
    best_a = np.zeros(size, dtype=np.int64)
    done = np.zeros(size, dtype=bool)
    done[full] = True
    _, perms = _affine_perms(m)
    weights = np.int64(1) << np.arange(m, dtype=np.int64)
    exhaustive = True
    # independence only uses translations, so affine images of T share the value
    for t_mask in range(full):
        if done[t_mask]:
            continue
        val, a, ex = _max_independent(m, t_mask, cap)
        exhaustive &= ex
        tb = _bits(np.array([t_mask], dtype=np.int64), m)[0].astype(np.int64)
        ab = _bits(np.array([a], dtype=np.int64), m)[0].astype(np.int64)
        for perm in perms:
            img = int(tb @ weights[perm])
            if not done[img]:
                done[img] = True
                best[img] = val
                best_a[img] = int(ab @ weights[perm])
    value = best.copy()
    binding = np.arange(size, dtype=np.int64)
    masks = np.arange(size, dtype=np.int64)
    for i in range(m):
        lo = masks[(masks >> i) & 1 == 0]
        hi = lo | (1 << i)
        better = value[hi] < value[lo]
        value[lo] = np.where(better, value[hi], value[lo])
        binding[lo] = np.where(better, binding[hi], binding[lo])
    return ShiftTable(m, value, binding, best_a, exhaustive)


def shift_value(m: int, p, cap: int = SHIFT_STATE_CAP) -> float:
    """Shift-bound d_P for the zero set p (infinite for p = Omega)."""
    return float(shift_table(m, cap).value[_as_mask(p)])


def shift_independent(t: FieldTower, s, cap: int = SHIFT_STATE_CAP) -> list[DefSetBound]:
    """Shift-bound pairs (P, d_P) with P inside s, keeping only P whose
    every proper subset has a smaller value."""
    m = t.m
    tab = shift_table(m, cap)
    s_mask = _as_mask(s)
    full = (1 << m) - 1
    out = []
    sub = s_mask
    while sub:
        v = tab.value[sub]
        if sub != full and all(tab.value[sub & ~(1 << b)] < v for b in indices_of(sub)):
            T = int(tab.binding[sub])
            out.append(
                DefSetBound(
                    ZeroSet.from_mask(sub),
                    float(v),
                    "B5",
                    (("T", indices_of(T)), ("A", indices_of(int(tab.witness_a[T]))), ("exhaustive", tab.exhaustive)),
                )
            )
        sub = (sub - 1) & s_mask
    out.sort(key=lambda b: (-b.value, len(b.subset), b.subset.indices))
    return out
