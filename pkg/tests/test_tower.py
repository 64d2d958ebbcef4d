from __future__ import annotations

import pytest

from qtbounds.tower import build_tower, frobenius, in_subfield, trace_to_subfield

TOWERS = [(2, 3, 1), (2, 7, 1), (2, 9, 1), (3, 4, 2), (3, 7, 2), (3, 8, 1), (3, 8, 2), (3, 10, 2), (3, 5, 1), (4, 5, 2), (4, 3, 3), (5, 6, 4)]


@pytest.mark.parametrize("q,m,lam", TOWERS)
def test_roots_of_xm_minus_lambda(q, m, lam):
    t = build_tower(q, m, lam)
    F = t.F
    rs = t.roots
    lam_F = t.embed(lam)
    assert len(set(rs.omega)) == m
    for w in rs.omega:
        assert F.pow(w, m) == lam_F
    # alpha has order r*m, xi is a primitive m-th root of unity
    assert F.order_of(t.alpha) == t.r * t.m
    assert F.order_of(t.xi) == t.m
    assert F.order == t.q**t.e
    assert (t.q**t.e - 1) % (t.r * t.m) == 0


@pytest.mark.parametrize("q,m,lam", TOWERS)
def test_classes_are_frobenius_orbits(q, m, lam):
    t = build_tower(q, m, lam)
    rs = t.roots
    pos = {w: k for k, w in enumerate(rs.omega)}
    for k in range(m):
        assert pos[frobenius(t, rs.omega[k])] == rs.step[k]
    covered = sorted(k for c in rs.classes for k in c)
    assert covered == list(range(m))
    for c, rep, d in zip(rs.classes, rs.reps, rs.degrees):
        assert rep == min(c) and d == len(c)
        assert t.e % d == 0
        # the class is closed and of size = degree of omega over F_q
        for k in c:
            assert rs.class_of[k] == rs.class_of[rep]
            assert in_subfield(t, rs.omega[k], d)


def test_known_class_structures():
    assert build_tower(3, 7, 2).roots.classes == ((0, 1, 2, 4, 5, 6), (3,))
    assert build_tower(2, 7, 1).roots.classes == ((0, 1, 3), (2, 4, 5), (6,))
    t = build_tower(3, 8, 1)
    assert t.e == 2 and t.F.order == 9
    t2 = build_tower(3, 8, 2)
    assert t2.r == 2 and t2.e == 4
    assert build_tower(3, 10, 2).e == 4


def test_embedding_of_extension_base_field():
    t = build_tower(4, 5, 2)
    F, K = t.F, t.base
    for a in range(4):
        for b in range(4):
            assert t.embed(K.mul(a, b)) == F.mul(t.embed(a), t.embed(b))
            assert t.embed(K.add(a, b)) == F.add(t.embed(a), t.embed(b))
        assert t.unembed(t.embed(a)) == a


def test_trace_lands_in_subfield_and_is_linear():
    t = build_tower(3, 8, 2)
    F = t.F
    for d in (1, 2, 4):
        for x in range(0, F.order, 7):
            y = trace_to_subfield(t, x, d)
            assert in_subfield(t, y, d)
            assert trace_to_subfield(t, F.add(x, 1), d) == F.add(y, trace_to_subfield(t, 1, d))
    with pytest.raises(ValueError):
        trace_to_subfield(t, 1, 3)


@pytest.mark.parametrize("args", [(2, 4, 1), (3, 6, 1), (3, 7, 0), (3, 7, 3), (6, 5, 1)])
def test_bad_tower_arguments(args):
    with pytest.raises(ValueError):
        build_tower(*args)
