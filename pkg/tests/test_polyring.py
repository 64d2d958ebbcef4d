from __future__ import annotations

import galois
import numpy as np
from hypothesis import given, settings, strategies as st

from qtbounds.gf import field
from qtbounds.polyring import Poly, eval_at, factor_xm_minus_lambda, poly_gcd, xm_minus_lambda
from qtbounds.tower import build_tower

import pytest

K3 = field(3)
K9 = field(3, 2)

coeff_lists = st.lists(st.integers(0, 2), max_size=8)


def test_degree_and_trimming():
    assert Poly(K3, [1, 2, 0, 0]).degree == 1
    assert Poly(K3, []).degree == -1
    assert Poly(K3, [0, 0]).is_zero()
    assert Poly.monomial(K3, 3, 2).coeffs == (0, 0, 0, 2)


@settings(max_examples=150, deadline=None)
@given(coeff_lists, coeff_lists)
def test_division_identity(a, b):
    A, B = Poly(K3, a), Poly(K3, b)
    if B.is_zero():
        return
    Q, R = divmod(A, B)
    assert Q * B + R == A
    assert R.degree < B.degree


@settings(max_examples=150, deadline=None)
@given(coeff_lists, coeff_lists)
def test_ring_laws(a, b):
    A, B = Poly(K3, a), Poly(K3, b)
    assert A + B == B + A
    assert A * B == B * A
    assert (A - B) + B == A
    for x in range(3):
        assert (A * B)(x) == K3.mul(A(x), B(x))


@settings(max_examples=100, deadline=None)
@given(coeff_lists, coeff_lists)
def test_gcd_matches_galois(a, b):
    A, B = Poly(K3, a), Poly(K3, b)
    g = poly_gcd(A, B)
    GF3 = galois.GF(3)
    if A.is_zero() and B.is_zero():
        assert g.is_zero()
        return
    ref = galois.gcd(galois.Poly(list(reversed(A.coeffs)) or [0], field=GF3), galois.Poly(list(reversed(B.coeffs)) or [0], field=GF3))
    assert list(reversed(g.coeffs)) == [int(c) for c in ref.coeffs]


def test_from_roots_over_extension():
    roots = [1, 3, 5]
    f = Poly.from_roots(K9, roots)
    assert f.degree == 3 and f.lead == 1
    for r in roots:
        assert f(r) == 0


@pytest.mark.parametrize("q,m,lam", [(2, 7, 1), (2, 9, 1), (2, 15, 1), (3, 7, 2), (3, 8, 1), (3, 10, 2), (5, 6, 2), (4, 5, 2)])
def test_factorisation_of_xm_minus_lambda(q, m, lam):
    t = build_tower(q, m, lam)
    facs = factor_xm_minus_lambda(t)
    prod = Poly.one(t.base)
    for f, i in facs:
        assert f.degree == t.roots.degrees[i]
        prod = prod * f
    assert prod == xm_minus_lambda(t)
    if q in (2, 3, 5):
        G = galois.GF(q)
        ref = galois.Poly([1] + [0] * (m - 1) + [(-lam) % q], field=G).factors()[0]
        ref_set = sorted(tuple(int(c) for c in reversed(r.coeffs)) for r in ref)
        assert sorted(f.coeffs for f, _ in facs) == ref_set


def test_eval_at_roots_vanishes():
    t = build_tower(3, 10, 2)
    for f, i in factor_xm_minus_lambda(t):
        for k in t.roots.classes[i]:
            assert eval_at(t, f, t.roots.omega[k]) == 0
        others = [k for k in range(t.m) if t.roots.class_of[k] != i]
        assert all(eval_at(t, f, t.roots.omega[k]) != 0 for k in others)
