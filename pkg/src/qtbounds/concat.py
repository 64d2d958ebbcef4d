"""Constituent codes, inner constacyclic codes and the Jensen bound.

The constituent for conjugacy class i is the E_i-row space of
G~(omega_{u_i}); it is stored as a matrix over F whose entries happen to lie
in E_i.  Inner codes are the q-ary constacyclic codes whose check polynomial
is a product of irreducible factors f_i of x^m - lambda.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constabounds import ZeroSet, dist_true, mask_of
from .linalg import INF, LinearCode, base_solutions, dist_mul, min_distance, rank, right_kernel, rref
from .polyring import Poly, factor_xm_minus_lambda, xm_minus_lambda
from .qtcode import QtCode, scalar_generator_matrix
from .spectral import BoundReport, EigenData, eval_matrix
from .tower import FieldTower, frobenius, trace_to_subfield

__all__ = [
    "Constituent",
    "Constituents",
    "constituents",
    "inner_sum_distance",
    "inner_sum_code",
    "jensen_bound",
    "trace_coefficients",
    "trace_reconstruct",
    "evaluate_codeword",
    "eigencode_via_constituents",
]


@dataclass(frozen=True)
class Constituent:
    index: int  # class index
    rep: int  # representative u_i
    degree: int  # e_i
    code: LinearCode  # over F, E_i-rational
    kind: str  # "zero" | "full" | "nontrivial"

    @functools.cached_property
    def distance(self) -> float:
        return min_distance(self.code)


@dataclass(frozen=True)
class Constituents:
    items: tuple[Constituent, ...]

    @property
    def gamma(self) -> tuple[int, ...]:
        """Classes whose constituent is not the full space."""
        return tuple(c.index for c in self.items if c.kind != "full")

    def dimension(self) -> int:
        return sum(c.degree * c.code.dim for c in self.items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i: int) -> Constituent:
        return self.items[i]


def constituents(c: QtCode) -> Constituents:
    t = c.tower
    rs = t.roots
    out = []
    for i, u in enumerate(rs.reps):
        M = eval_matrix(c, u)
        code = LinearCode.span(t.F, M, c.ell)
        kind = "zero" if code.dim == 0 else ("full" if code.dim == c.ell else "nontrivial")
        out.append(Constituent(i, u, rs.degrees[i], code, kind))
    return Constituents(tuple(out))


def inner_sum_code(t: FieldTower, classes: Sequence[int]) -> LinearCode:
    """q-ary constacyclic code with check polynomial prod_{i in classes} f_i."""
    g = _inner_generator(t, mask_of(classes))
    rows = []
    mod = xm_minus_lambda(t)
    cur = g
    for _ in range(t.m - g.degree):
        v = np.zeros(t.m, dtype=np.int64)
        v[: len(cur.coeffs)] = cur.coeffs
        rows.append(v)
        cur = cur.shift(1) % mod
    return LinearCode.span(t.base, np.array(rows, dtype=np.int64).reshape(-1, t.m), t.m)


def _inner_generator(t: FieldTower, cmask: int) -> Poly:
    h = Poly.one(t.base)
    for f, i in factor_xm_minus_lambda(t):
        if (cmask >> i) & 1:
            h = h * f
    return xm_minus_lambda(t) // h


_INNER_CACHE: dict[tuple, float] = {}


def inner_sum_distance(t: FieldTower, classes: Sequence[int]) -> float:
    """Distance of the sum of the minimal codes for the given classes."""
    cmask = mask_of(classes)
    if cmask == 0:
        raise ValueError("empty class subset")
    key = t.key + (cmask,)
    d = _INNER_CACHE.get(key)
    if d is None:
        d = min_distance(inner_sum_code(t, classes))
        _INNER_CACHE[key] = d
    return d


def jensen_bound(c: QtCode, cons: Constituents | None = None) -> BoundReport:
    """min over prefixes of the distance-sorted nonzero constituents of
    d(C_{i_r}) * d(inner sum over the prefix)."""
    if c.is_zero():
        return BoundReport(INF, "J", witness=(("zero code", True),))
    cons = constituents(c) if cons is None else cons
    nonzero = sorted((x for x in cons if x.kind != "zero"), key=lambda x: (x.distance, x.rep))
    best = INF
    arg = 0
    prefix: list[int] = []
    terms = []
    for r, x in enumerate(nonzero):
        prefix.append(x.index)
        term = dist_mul(x.distance, inner_sum_distance(c.tower, prefix))
        terms.append(term)
        if term < best:
            best, arg = term, r
    order = tuple(x.index for x in nonzero)
    return BoundReport(
        value=best,
        family="J",
        witness=(("order", order), ("prefix", order[: arg + 1]), ("terms", tuple(terms))),
    )


# --- trace representation ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def _trace_one(t: FieldTower, degree: int) -> int:
    """First element b of F (integer order) with Tr_{F/E}(b) = 1, [E:F_q] = degree."""
    for b in range(1, t.F.order):
        if trace_to_subfield(t, b, degree) == 1:
            return b
    raise AssertionError("trace map is not onto")  # pragma: no cover


def trace_coefficients(t: FieldTower) -> tuple[int, ...]:
    rs = t.roots
    return tuple(_trace_one(t, e) for e in rs.degrees)


def trace_reconstruct(c: QtCode, kappas: Sequence[Sequence[int]]) -> np.ndarray:
    """Flat q-ary word with entry (k, j) = Tr_{F/F_q}(sum_i b_i kappa_{i,j} omega_{u_i}^(-k)).

    ``kappas[i]`` is a length-ell vector over F lying in constituent i.  The
    usual 1/m factor is left out, so evaluating the result at omega_{u_i}
    gives m * kappa_i.
    """
    t = c.tower
    F, rs = t.F, t.roots
    if len(kappas) != rs.num_classes:
        raise ValueError("one constituent vector per conjugacy class expected")
    cons = constituents(c)
    for i, kap in enumerate(kappas):
        if not cons[i].code.contains(np.asarray(kap, dtype=np.int64)):
            raise ValueError(f"vector {i} is not in its constituent")
    bs = trace_coefficients(t)
    out = np.zeros(t.m * c.ell, dtype=np.int64)
    for k in range(t.m):
        for j in range(c.ell):
            acc = 0
            for i, u in enumerate(rs.reps):
                kij = int(kappas[i][j])
                if kij:
                    w = F.pow(rs.omega[u], -k)
                    acc = F.add(acc, F.mul(F.mul(bs[i], kij), w))
            out[k * c.ell + j] = t.unembed(trace_to_subfield(t, acc, 1))
    return out


def evaluate_codeword(c: QtCode, word: np.ndarray, k: int) -> np.ndarray:
    """(c_0(omega_k), ..., c_{ell-1}(omega_k)) for a flat word."""
    t = c.tower
    F = t.F
    arr = np.asarray(word, dtype=np.int64).reshape(t.m, c.ell)
    beta = t.roots.omega[k]
    out = np.zeros(c.ell, dtype=np.int64)
    for j in range(c.ell):
        acc = 0
        for i in range(t.m - 1, -1, -1):
            acc = F.add(F.mul(acc, beta), t.emb[int(arr[i, j])])
        out[j] = acc
    return out


def eigencode_via_constituents(c: QtCode, cons: Constituents | None = None) -> LinearCode:
    """Eigencode of all eigenvalues as the base-field subcode of the sum of
    the Frobenius conjugates of the non-full constituents."""
    t = c.tower
    F = t.F
    cons = constituents(c) if cons is None else cons
    rows = []
    for x in cons:
        if x.kind == "full":
            continue
        for j in range(x.degree):
            G = x.code.genmat
            if G.shape[0]:
                rows.append(np.vectorize(lambda a: frobenius(t, int(a), j), otypes=[np.int64])(G))
    if not rows:
        return LinearCode.zero(t.base, c.ell)
    W = LinearCode.span(F, np.vstack(rows), c.ell)
    return base_solutions(t, W.parity_matrix(), c.ell)
