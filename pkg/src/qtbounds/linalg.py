"""Exact linear algebra over tower fields and minimum-distance oracles.

Matrices are 2-D ``int64`` numpy arrays of field elements paired with the
:class:`~qtbounds.gf.GF` they live in.  Distances are ints, with
``math.inf`` standing for the distance of the zero code.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf import GF
from .tower import FieldTower

__all__ = [
    "INF",
    "DEFAULT_ENUM_BUDGET",
    "BudgetExceeded",
    "as_matrix",
    "rref",
    "rank",
    "right_kernel",
    "LinearCode",
    "dual_code",
    "base_solutions",
    "min_distance",
    "min_dependent_columns",
    "dist_mul",
]

INF = math.inf
DEFAULT_ENUM_BUDGET = 1 << 24


class BudgetExceeded(RuntimeError):
    """A distance computation would exceed its configured work budget."""


def dist_mul(a: float, b: float) -> float:
    """Product in N with infinity absorbing (0 never occurs as a distance)."""
    if a == INF or b == INF:
        return INF
    return a * b


def as_matrix(rows, cols: int | None = None) -> np.ndarray:
    A = np.asarray(rows, dtype=np.int64)
    if A.ndim == 1:
        if A.size == 0:
            return np.zeros((0, cols or 0), dtype=np.int64)
        A = A[None, :]
    if A.size == 0 and cols is not None:
        return np.zeros((A.shape[0], cols), dtype=np.int64)
    return A


def rref(K: GF, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, and pivot columns."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = K.vmul(R[r], K.inv(lead))
        col = R[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            R[others] = K.vsub(R[others], K.vmul(col[others][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(K: GF, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(K, A)[1])


def right_kernel(K: GF, A: np.ndarray, cols: int | None = None) -> np.ndarray:
    """Rows form a basis of {v : A v^T = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1] if A.ndim == 2 else cols
    if cols is not None:
        n = cols
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(K, A)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, pc in enumerate(piv):
            out[t, pc] = K.neg(int(R[i, f]))
    return out


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear code given by a reduced generator matrix (no zero rows)."""

    field: GF
    genmat: np.ndarray
    length: int

    @classmethod
    def span(cls, K: GF, rows, length: int) -> "LinearCode":
        A = as_matrix(rows, length)
        if A.shape[0] == 0:
            return cls(K, np.zeros((0, length), dtype=np.int64), length)
        if A.shape[1] != length:
            raise ValueError("row length mismatch")
        R, _ = rref(K, A)
        return cls(K, R, length)

    @classmethod
    def zero(cls, K: GF, length: int) -> "LinearCode":
        return cls(K, np.zeros((0, length), dtype=np.int64), length)

    @classmethod
    def full(cls, K: GF, length: int) -> "LinearCode":
        return cls(K, np.eye(length, dtype=np.int64), length)

    @property
    def dim(self) -> int:
        return self.genmat.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.length

    def contains(self, v) -> bool:
        v = as_matrix(v, self.length)
        if self.dim == 0:
            return not v.any()
        return rank(self.field, np.vstack([self.genmat, v])) == self.dim

    def contains_code(self, other: "LinearCode") -> bool:
        if other.dim == 0:
            return True
        return rank(self.field, np.vstack([self.genmat, other.genmat])) == self.dim

    def same_space(self, other: "LinearCode") -> bool:
        return (
            self.field == other.field
            and self.length == other.length
            and self.dim == other.dim
            and np.array_equal(self.genmat, other.genmat)
        )

    def parity_matrix(self) -> np.ndarray:
        return right_kernel(self.field, self.genmat, self.length)

    def dual(self) -> "LinearCode":
        return dual_code(self)

    def key(self) -> bytes:
        return self.genmat.tobytes() + bytes([self.length])

    def min_distance(self, strategy: str = "auto", budget: int = DEFAULT_ENUM_BUDGET) -> float:
        return min_distance(self, strategy=strategy, budget=budget)

    def codewords(self) -> np.ndarray:
        """Every codeword (use only for small codes)."""
        return _enumerate_words(self.field, self.genmat, 0, self.field.order**self.dim)


def dual_code(c: LinearCode) -> LinearCode:
    return LinearCode(c.field, c.parity_matrix(), c.length)


def base_solutions(t: FieldTower, V: np.ndarray, length: int) -> LinearCode:
    """Base-field vectors u with sum_j V[i, j] u_j = 0 for every row i of V.

    Each F-linear equation is split into F_p-linear equations on the
    prime-field coordinates of u; the F_p solution space is then re-spanned
    over F_q.
    """
    F, Kq = t.F, t.base
    V = as_matrix(V, length)
    if V.shape[0] == 0 or not V.any():
        return LinearCode.full(Kq, length)
    k = Kq.n
    # theta^s, s < k: images of the F_p-basis of F_q inside F
    basis = [t.emb[int(Kq._weights[s])] for s in range(k)]
    # unknowns c[j, s] in F_p with u_j = sum_s c[j, s] theta^s
    cols = []
    for j in range(length):
        for s in range(k):
            col = F.vmul(V[:, j], np.full(V.shape[0], basis[s], dtype=np.int64))
            cols.append(F.digits[col].reshape(-1))  # rows * (k e) prime coords
    M = np.stack(cols, axis=1)
    Kp = _prime_field(F)
    sol = right_kernel(Kp, M, length * k)
    if sol.shape[0] == 0:
        return LinearCode.zero(Kq, length)
    w = np.asarray(Kq._weights, dtype=np.int64)
    vecs = sol.reshape(sol.shape[0], length, k) @ w
    return LinearCode.span(Kq, vecs, length)


def _prime_field(F: GF) -> GF:
    from .gf import field

    return field(F.p, 1)


# --- minimum distance ------------------------------------------------------


def _enumerate_words(K: GF, G: np.ndarray, start: int, stop: int) -> np.ndarray:
    k, n = G.shape
    idx = np.arange(start, stop, dtype=np.int64)
    q = K.order
    digits = (idx[:, None] // (q ** np.arange(k, dtype=np.int64))[None, :]) % q
    if K.kind == "binary":
        return (digits @ G) & 1
    if K.kind == "prime":
        return (digits @ G) % K.p
    out = np.zeros((idx.size, n), dtype=np.int64)
    for i in range(k):
        out = K.vadd(out, K.vmul(digits[:, i][:, None], G[i][None, :]))
    return out


def _distance_enumerate(c: LinearCode, budget: int) -> float:
    K, G = c.field, c.genmat
    total = K.order**c.dim
    if total > budget:
        raise BudgetExceeded(f"{total} codewords exceed budget {budget}")
    best = INF
    chunk = max(1, (1 << 20) // max(1, c.length))
    for start in range(1, total, chunk):
        words = _enumerate_words(K, G, start, min(total, start + chunk))
        w = int(np.count_nonzero(words, axis=1).min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def min_dependent_columns(
    K: GF,
    H: np.ndarray,
    below: float = INF,
    stop_at: int = 0,
    node_budget: int | None = None,
) -> float:
    """Smallest number of linearly dependent columns of H.

    Only sizes strictly below ``below`` are searched; if none exists,
    ``below`` itself is returned.  The search may stop as soon as a
    dependent set of size <= ``stop_at`` is found (the returned value is then
    an upper bound that is <= stop_at).  An all-independent column set
    returns ``below`` (infinity by default).
    """
    H = np.asarray(H, dtype=np.int64)
    n = H.shape[1]
    if H.shape[0] == 0 or n == 0:
        return 1 if n and 1 < below else below
    cols = [H[:, j].tolist() for j in range(n)]
    best = below
    nodes = 0
    binary = K.kind == "binary"
    if binary:
        masks = [sum(1 << i for i, x in enumerate(col) if x) for col in cols]
    mul, sub, inv = K.mul, K.sub, K.inv

    def reduce_vec(v, basis):
        v = list(v)
        for piv, b in basis:
            c = v[piv]
            if c:
                for i, bi in enumerate(b):
                    if bi:
                        v[i] = sub(v[i], mul(c, bi))
        return v

    def dfs(start: int, basis: list, depth: int) -> None:
        nonlocal best, nodes
        for j in range(start, n):
            if depth + 1 >= best or best <= stop_at:
                return
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetExceeded("support-rank node budget exceeded")
            if binary:
                v = masks[j]
                for piv, b in basis:
                    if (v >> piv) & 1:
                        v ^= b
                if v == 0:
                    best = depth + 1
                    return
                piv = (v & -v).bit_length() - 1
                basis.append((piv, v))
            else:
                v = reduce_vec(cols[j], basis)
                piv = next((i for i, x in enumerate(v) if x), -1)
                if piv < 0:
                    best = depth + 1
                    return
                s = inv(v[piv])
                v = [mul(s, x) for x in v]
                basis.append((piv, v))
            dfs(j + 1, basis, depth + 1)
            basis.pop()

    dfs(0, [], 0)
    return best


def _distance_support_rank(c: LinearCode, parity: np.ndarray | None, budget: int | None) -> float:
    if c.dim == 0:
        return INF
    H = c.parity_matrix() if parity is None else np.asarray(parity, dtype=np.int64)
    return min_dependent_columns(c.field, H, node_budget=budget)


def _info_sets(K: GF, G: np.ndarray) -> list[tuple[np.ndarray, int]]:
    """Systematic generator matrices on disjoint-as-possible information sets.

    Returns (G_j, r_j) where r_j counts the pivot columns of G_j not used by
    earlier matrices.
    """
    k, n = G.shape
    used: set[int] = set()
    out = []
    while True:
        order = [c for c in range(n) if c not in used] + [c for c in range(n) if c in used]
        R, piv = rref(K, G[:, order])
        piv_cols = [order[i] for i in piv]
        new = [c for c in piv_cols if c not in used]
        if not new:
            break
        Gs = np.empty_like(R)
        Gs[:, order] = R
        out.append((Gs, len(new)))
        used.update(piv_cols)
    return out


def _distance_info_set(c: LinearCode, budget: int) -> float:
    """Brouwer-Zimmermann style search over several information sets.

    After every information set has been used to enumerate all codewords
    of message weight <= w, any codeword not yet seen has weight at least
    sum_j max(0, w + 1 - (k - r_j)).
    """
    K, G = c.field, c.genmat
    k, n = G.shape
    if k == 0:
        return INF
    if K.kind == "ext":
        raise ValueError("information-set search needs a prime field")
    p = K.p
    mats = _info_sets(K, G)
    best = INF
    spent = 0
    for w in range(1, k + 1):
        pats = (
            np.ones((1, w), dtype=np.int64)
            if p == 2
            else np.array([(1,) + t for t in itertools.product(range(1, p), repeat=w - 1)], dtype=np.int64)
        )
        for j, (Gj, _) in enumerate(mats):
            combos = list(itertools.combinations(range(k), w))
            spent += len(combos) * len(pats)
            if spent > budget:
                raise BudgetExceeded("information-set budget exceeded")
            step = max(1, (1 << 21) // max(1, n * len(pats) * w))
            for s in range(0, len(combos), step):
                rows = np.array(combos[s : s + step], dtype=np.int64)
                sub = Gj[rows]  # (C, w, n)
                if p == 2:
                    words = np.bitwise_xor.reduce(sub, axis=1)
                else:
                    words = np.einsum("pw,cwn->cpn", pats, sub) % p
                wt = int(np.count_nonzero(words, axis=-1).min())
                if wt < best:
                    best = wt
            lower = sum(max(0, w + 1 - (k - r)) for _, r in mats[: j + 1]) + sum(
                max(0, w - (k - r)) for _, r in mats[j + 1 :]
            )
            if lower >= best:
                return best
    return best


def min_distance(
    c: LinearCode,
    strategy: str = "auto",
    budget: int = DEFAULT_ENUM_BUDGET,
    parity: np.ndarray | None = None,
) -> float:
    """Exact minimum distance; ``math.inf`` for the zero code.

    strategy: ``enumerate`` (all codewords), ``support-rank`` (smallest set
    of dependent parity-check columns), ``info-set`` (several information
    sets with a lower-bound stop; prime fields only) or ``auto``.
    """
    if c.dim == 0:
        return INF
    if strategy == "enumerate":
        return _distance_enumerate(c, budget)
    if strategy == "support-rank":
        return _distance_support_rank(c, parity, None)
    if strategy == "info-set":
        return _distance_info_set(c, budget)
    if strategy != "auto":
        raise ValueError(f"unknown distance strategy {strategy!r}")
    if c.dim == c.length:
        return 1
    if c.field.order**c.dim <= 4096:
        return _distance_enumerate(c, budget)
    if c.field.kind != "ext":
        return _distance_info_set(c, budget)
    return _distance_support_rank(c, parity, None)
