from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ftdesigns.errors import ConstructionError, InputError
from ftdesigns.gfield import GF, field_make
from ftdesigns.suzuki import (circles, export_csv, normalize_point,
                              ovoid_points, suzuki_action)


def test_gf2_is_parity():
    f = field_make(1)
    assert f.add(1, 1) == 0
    assert f.mul(1, 1) == 1


def test_gf8_generator_order():
    f = field_make(3)
    x = 2  # the class of x
    powers = {f.pow(x, i) for i in range(1, 8)}
    assert len({f.pow(x, i) for i in range(7)}) == 7
    assert f.pow(x, 7) == 1


def test_gf8_defining_relation():
    f = field_make(3)
    x = 2
    assert f.mul(f.mul(x, x), x) == x ^ 1  # x^3 = x + 1


def test_field_range_check():
    with pytest.raises(InputError):
        field_make(0)
    with pytest.raises(InputError):
        field_make(17)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_field_axioms_exhaustive(m):
    f = field_make(m)
    els = list(f.elements())
    for a in els:
        assert f.mul(a, 1) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in els:
        for b in els:
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)


@settings(max_examples=60)
@given(st.integers(min_value=5, max_value=9), st.data())
def test_field_axioms_random(m, data):
    f = field_make(m)
    a = data.draw(st.integers(min_value=0, max_value=f.size - 1))
    b = data.draw(st.integers(min_value=0, max_value=f.size - 1))
    c = data.draw(st.integers(min_value=0, max_value=f.size - 1))
    assert f.mul(a, b) == f.mul(b, a)
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
    if a:
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("m", range(1, 17))
def test_pinned_polynomials_are_primitive(m):
    GF(m)  # table construction raises if x fails to generate


def test_ovoid_point_count():
    ov = ovoid_points(8)
    assert len(ov.points) == 65


def test_ovoid_contains_expected_points():
    ov = ovoid_points(8)
    assert (0, 0, 0, 1) in ov.points   # the distinguished point
    assert (1, 0, 0, 0) in ov.points   # s = t = 0


def test_ovoid_rejects_bad_q():
    for q in [4, 7, 16, 2]:
        with pytest.raises(InputError):
            ovoid_points(q)


def test_normalization_idempotent():
    f = field_make(3)
    p = normalize_point(f, (3, 5, 1, 6))
    assert normalize_point(f, p) == p
    assert p[0] == 1


def test_no_three_collinear_q8():
    ov = ovoid_points(8)
    f = ov.field
    pts = ov.points
    for a, b, c in combinations(range(65), 3):
        # rank of the 3x4 matrix over GF(8) must be 3
        rows = [list(pts[a]), list(pts[b]), list(pts[c])]
        rank = 0
        cols = 4
        r = 0
        for col in range(cols):
            piv = next((i for i in range(r, 3) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = f.inv(rows[r][col])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(3):
                if i != r and rows[i][col]:
                    coef = rows[i][col]
                    rows[i] = [x ^ f.mul(coef, y) for x, y in zip(rows[i], rows[r])]
            r += 1
        assert r == 3, (a, b, c)


def test_plane_sections_q8(suzuki8):
    circ = circles(8)
    assert len(circ) == 520
    assert all(len(c) == 9 for c in circ)


def test_every_pair_on_q_plus_1_circles():
    circ = circles(8)
    count = {}
    for c in circ:
        for pr in combinations(c, 2):
            count[pr] = count.get(pr, 0) + 1
    assert len(count) == 65 * 64 // 2
    assert set(count.values()) == {9}


def test_pair_count_identity():
    # sum over circles of C(q+1,2) = C(q^2+1,2) * (q+1)
    circ = circles(8)
    assert len(circ) * 36 == (65 * 64 // 2) * 9


def test_suzuki_action_order(suzuki8):
    act, _ = suzuki8
    assert act.degree == 65
    assert act.order == 64 * 65 * 7


def test_suzuki_two_transitive(suzuki8):
    from ftdesigns.actions import point_stabilizer_gens
    from ftdesigns.bsgs import bsgs_build, orbit

    act, _ = suzuki8
    stab = point_stabilizer_gens(act, 0)
    assert bsgs_build(stab, 65).order() == 448   # q^2 (q-1)
    rest = orbit(stab, 1, 65)
    assert len(rest) == 64


def test_generators_preserve_circles(suzuki8):
    act, _ = suzuki8
    circ = set(circles(8))
    for g in act.generators:
        for c in circ:
            assert tuple(sorted(g(x) for x in c)) in circ


def test_circles_single_orbit(suzuki8):
    from ftdesigns.designs import set_orbit

    act, _ = suzuki8
    circ = circles(8)
    assert sorted(set_orbit(act.generators, circ[0])) == circ


def test_export_csv_headers():
    text = export_csv(8)
    lines = text.splitlines()
    assert lines[0] == "kind,id,data"
    assert sum(1 for l in lines if l.startswith("point,")) == 65
    assert sum(1 for l in lines if l.startswith("circle,")) == 520
