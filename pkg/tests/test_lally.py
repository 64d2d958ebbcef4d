from __future__ import annotations

import itertools

import galois
import numpy as np
import pytest

from qtbounds.golden import EXAMPLES
from qtbounds.harness import random_qt
from qtbounds.lally import lally_bound, lally_decompose, lally_field, lally_vs_eigencode_check
from qtbounds.linalg import INF
from qtbounds.qtcode import QtCode, exact_min_distance
from qtbounds.spectral import spectrum

import oracles


def _dependent_columns(GF, H, n) -> float:
    """Smallest number of linearly dependent columns of H (the distance of
    the code with parity matrix H)."""
    if H.shape[0] == 0:
        return 1
    for w in range(1, n + 1):
        for S in itertools.combinations(range(n), w):
            if np.linalg.matrix_rank(H[:, list(S)]) < w:
                return w
    return INF


def lally_oracle(c: QtCode) -> float:
    """Fold by hand in galois's Conway-polynomial field of order q^ell, span
    the constashifts over it, and multiply by the row-code distance."""
    q, m, ell, lam = c.q, c.m, c.ell, c.tower.lam
    K = galois.GF(q**ell, irreducible_poly=galois.conway_poly(q, ell))
    vecs = []
    rows = []
    for gen in c.gens:
        coef = [[f.coeff(i) for f in gen] for i in range(m)]
        rows.extend(coef)
        # sum_j f_{j,i} gamma^j, gamma = x: integer with base-q digits f_{j,i}
        vecs.append([sum(int(a) * q**j for j, a in enumerate(row)) for row in coef])
    shifts = []
    for v in vecs:
        cur = K(v)
        for _ in range(m):
            shifts.append(cur.copy())
            last = cur[-1] * K(lam)
            cur = np.concatenate([K([int(last)]), cur[:-1]])
            cur = K(cur)
    G = K(np.array(shifts))
    if not np.any(G):
        d_hat = INF
    else:
        H = G.null_space()
        d_hat = _dependent_columns(K, H, m)
    d_row = oracles.brute_distance(c.tower.base, np.array(rows, dtype=np.int64))
    if INF in (d_hat, d_row):
        return INF
    return d_hat * d_row


def _codes():
    for q, m, ell, r, lam in [(2, 3, 2, 1, 1), (2, 5, 2, 1, 1), (2, 7, 3, 1, 1), (3, 4, 2, 1, 2), (3, 5, 2, 1, 1), (2, 5, 3, 2, 1)]:
        for seed in range(4):
            c = random_qt(q, m, ell, r, lam, seed)
            if not (c.is_zero() or c.is_full()):
                yield c


CODES = list(_codes())
IDS = [f"q{c.q}m{c.m}l{c.ell}k{c.dim}" for c in CODES]


@pytest.mark.parametrize("c", CODES, ids=IDS)
def test_lally_against_oracle(c):
    got = lally_bound(c).value
    assert got == lally_oracle(c)
    assert got <= exact_min_distance(c)


@pytest.mark.parametrize("ex", [e for e in EXAMPLES if "d_L" in e.expect], ids=lambda e: e.name.split()[0])
def test_lally_worked_examples(ex):
    c = ex.build()
    assert lally_bound(c).value == ex.expect["d_L"]
    assert lally_oracle(c) == ex.expect["d_L"]


def test_lex_basis_changes_the_value():
    # the bound depends on the choice of gamma; the lexicographically
    # smallest modulus gives different (still valid) values here
    by_name = {e.name.split()[0]: e for e in EXAMPLES}
    c = by_name["[16,7,5]_3"].build()
    assert lally_bound(c, basis="lex").value == 5
    c = by_name["[21,6,8]_2"].build()
    assert lally_bound(c, basis="lex").value == 4
    for e in EXAMPLES:
        c = e.build()
        assert lally_bound(c, basis="lex").value <= exact_min_distance(c)


def test_field_choice():
    assert lally_field(3, 2).K.modulus == tuple(galois.conway_poly(3, 2).coeffs[::-1].tolist())
    assert lally_field(2, 3, "lex").K.modulus == (1, 0, 1, 1)  # 1 + x^2 + x^3, low degree compared first
    with pytest.raises(ValueError):
        lally_field(2, 3, "normal")


def test_decomposition_pieces():
    c = EXAMPLES[0].build()
    dec = lally_decompose(c)
    assert len(dec.folded) == len(c.gens)
    assert dec.row_code.length == c.ell
    assert dec.hat_code(c.m, c.tower.lam).length == c.m


def test_zero_code():
    z = QtCode.build(2, 5, 1, 2, [[[0], [0]]])
    assert lally_bound(z).value == INF


def test_lally_dominates_full_eigencode():
    hits = 0
    for q, m, ell, lam in [(2, 3, 2, 1), (2, 5, 2, 1), (3, 4, 2, 2), (2, 7, 3, 1)]:
        for seed in range(30):
            c = random_qt(q, m, ell, 1, lam, seed)
            if c.is_zero() or c.is_full() or spectrum(c).mask != (1 << m) - 1:
                continue
            assert lally_vs_eigencode_check(c)
            hits += 1
    assert hits >= 5
    with pytest.raises(ValueError):
        lally_vs_eigencode_check(
            next(c for c in (random_qt(2, 7, 2, 2, 1, s) for s in range(20)) if spectrum(c).mask != (1 << 7) - 1)
        )
