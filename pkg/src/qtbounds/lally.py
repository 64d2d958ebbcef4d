"""The Lally bound d(C^) * d(B).

Each codeword row (c_{k,0}, ..., c_{k,ell-1}) is folded into the element
sum_j c_{k,j} gamma^j of F_{q^ell}; C^ is the smallest constacyclic code over
F_{q^ell} containing the folded code, and B is the q-ary code spanned by the
rows of all codewords.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .gf import GF, field
from .linalg import INF, LinearCode, dist_mul, min_distance
from .polyring import Poly, poly_gcd
from .qtcode import QtCode
from .spectral import BoundReport, EigenData

__all__ = [
    "LallyField",
    "LallyDecomposition",
    "lally_field",
    "fold",
    "lally_decompose",
    "lally_bound",
    "lally_vs_eigencode_check",
]


@dataclass(frozen=True, eq=False)
class LallyField:
    """F_{q^ell} with the basis 1, gamma, ..., gamma^(ell-1) over F_q."""

    q: int
    ell: int
    K: GF
    emb: tuple[int, ...]  # F_q -> K
    gamma_powers: tuple[int, ...]

    def fold(self, row) -> int:
        K = self.K
        acc = 0
        for j, cj in enumerate(row):
            cj = int(cj)
            if cj:
                acc = K.add(acc, K.mul(self.emb[cj], self.gamma_powers[j]))
        return acc


@functools.lru_cache(maxsize=None)
def lally_field(q: int, ell: int, basis: str = "conway") -> LallyField:
    """F_{q^ell} with a fixed basis 1, gamma, ..., gamma^(ell-1).

    ``basis="conway"`` (default) takes gamma to be a root of the Conway
    polynomial of F_{q^ell} over its prime field, the representation most
    computer algebra systems use by default.  ``basis="lex"`` takes the
    indeterminate modulo the lexicographically smallest irreducible instead.
    The value of d(C^) can depend on this choice.
    """
    from .gf import conway_polynomial, prime_power, smallest_irreducible

    p, k = prime_power(q)
    n = k * ell
    if basis == "conway":
        K = field(p, n, conway_polynomial(p, n))
    elif basis == "lex":
        K = field(p, n, smallest_irreducible(p, n))
    else:
        raise ValueError(f"unknown basis {basis!r}")
    if k == 1:
        emb = tuple(range(p))
    else:
        base = field(p, k)
        root = next(x for x in range(1, K.order) if _horner(K, base.modulus, x) == 0)
        pw = [1]
        for _ in range(k - 1):
            pw.append(K.mul(pw[-1], root))
        emb_l = []
        for c in range(q):
            acc = 0
            for i, dig in enumerate(base.digits[c].tolist()):
                if dig:
                    acc = K.add(acc, K.mul(dig, pw[i]))
            emb_l.append(acc)
        emb = tuple(emb_l)
    # the class of the indeterminate generates F_{p^n}, hence has degree
    # exactly ell over F_q
    gamma = p if n > 1 else 1
    powers = [1]
    for _ in range(ell - 1):
        powers.append(K.mul(powers[-1], gamma))
    return LallyField(q, ell, K, emb, tuple(powers))


def _horner(K: GF, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = K.add(K.mul(acc, x), int(c) % K.p)
    return acc


def _degree_over(K: GF, x: int, q: int) -> int:
    d, y = 1, K.pow(x, q)
    while y != x:
        y = K.pow(y, q)
        d += 1
    return d


@dataclass(frozen=True)
class LallyDecomposition:
    ext: LallyField
    folded: tuple[Poly, ...]
    hat_gen: Poly
    row_code: LinearCode

    def hat_code(self, m: int, lam: int) -> LinearCode:
        K = self.ext.K
        g = self.hat_gen
        if g.degree >= m:
            return LinearCode.zero(K, m)
        mod = _xm_minus(K, m, self.ext.emb[lam])
        rows, cur = [], g
        for _ in range(m - g.degree):
            v = np.zeros(m, dtype=np.int64)
            v[: len(cur.coeffs)] = cur.coeffs
            rows.append(v)
            cur = cur.shift(1) % mod
        return LinearCode.span(K, np.array(rows), m)


def _xm_minus(K: GF, m: int, lam: int) -> Poly:
    return Poly(K, [K.neg(lam)] + [0] * (m - 1) + [1])


def fold(c: QtCode, gen, basis: str = "conway") -> Poly:
    """tau of one generator tuple: coefficient i is sum_j f_{j,i} gamma^j."""
    ext = lally_field(c.q, c.ell, basis)
    m = c.m
    return Poly(ext.K, [ext.fold([f.coeff(i) for f in gen]) for i in range(m)])


def lally_decompose(c: QtCode, basis: str = "conway") -> LallyDecomposition:
    ext = lally_field(c.q, c.ell, basis)
    K = ext.K
    m, lam = c.m, c.tower.lam
    mod = _xm_minus(K, m, ext.emb[lam])
    folded = tuple(fold(c, g, basis) for g in c.gens)
    g = mod
    for f in folded:
        g = poly_gcd(g, f)
    rows = [[f.coeff(i) for f in gen] for gen in c.gens for i in range(m)]
    row_code = LinearCode.span(c.tower.base, np.array(rows, dtype=np.int64).reshape(-1, c.ell), c.ell)
    return LallyDecomposition(ext, folded, g, row_code)


_HAT_CACHE: dict[tuple, float] = {}


def lally_bound(c: QtCode, dec: LallyDecomposition | None = None, basis: str = "conway") -> BoundReport:
    dec = lally_decompose(c, basis) if dec is None else dec
    key = (dec.ext.K.modulus, c.q, c.ell, c.m, c.tower.lam, dec.hat_gen.coeffs)
    d_hat = _HAT_CACHE.get(key)
    if d_hat is None:
        d_hat = min_distance(dec.hat_code(c.m, c.tower.lam))
        _HAT_CACHE[key] = d_hat
    d_row = min_distance(dec.row_code)
    return BoundReport(
        value=dist_mul(d_hat, d_row),
        family="L",
        witness=(("d_hat", d_hat), ("d_B", d_row), ("hat_gen", dec.hat_gen.coeffs)),
    )


def lally_vs_eigencode_check(c: QtCode, data: EigenData | None = None) -> bool:
    """d_L >= d(eigencode of Omega) and B inside that eigencode (needs all of
    Omega to be eigenvalues)."""
    data = EigenData(c) if data is None else data
    full = (1 << c.m) - 1
    if data.sp.mask != full:
        raise ValueError("requires every element of Omega to be an eigenvalue")
    dec = lally_decompose(c)
    eig = data.eigencode(full)
    return lally_bound(c, dec).value >= data.eigencode_dist(full) and eig.contains_code(dec.row_code)
