import pytest

from kwsgp.errors import DuplicateGenerator, NonCoprime, NotAGap
from kwsgp.kw3d import (KW3Params, base_semigroup, build_kw3, canonical_points_below_plane,
                        gap_rep, scan_tables, single_points, type3_theorem,
                        verify_apery_characterization)

from oracles import frobenius_naive, pf_naive


@pytest.mark.parametrize("params, gens, F", [
    ((5, 7, 2, 1, 3), (15, 17, 21), 103),
    ((9, 11, 2, 1, 4), (29, 36, 44), 403),
    ((9, 11, 2, 1, 3), (27, 29, 33), 295),
])
def test_base_semigroup(params, gens, F):
    rep = base_semigroup(KW3Params(*params))
    assert rep.S.gens == gens
    assert rep.formula_frobenius == F == frobenius_naive(gens)
    assert rep.frobenius_agrees and rep.symmetric


def test_noncoprime_s_w():
    with pytest.raises(NonCoprime):
        KW3Params(5, 7, 1, 1, 4)  # w = 12


@pytest.mark.parametrize("params, t, point", [
    ((9, 11, 2, 1, 4), 221, (1, 2, 2)),
    ((9, 11, 2, 1, 3), 152, (3, 1, 1)),
    ((5, 7, 2, 1, 3), 37, (3, 1, 0)),
])
def test_gap_rep(params, t, point):
    assert gap_rep(KW3Params(*params), t).point == point


def test_gap_rep_outside_componentwise_box():
    g = gap_rep(KW3Params(9, 11, 2, 1, 4), 7)
    assert g.point == (0, 9, 0) and not g.in_box


def test_gap_rep_not_a_gap():
    with pytest.raises(NotAGap):
        gap_rep(KW3Params(5, 7, 2, 1, 3), 15)


@pytest.mark.parametrize("params", [(5, 7, 2, 1, 3), (9, 11, 2, 1, 4), (7, 9, 1, 1, 3)])
def test_gap_bijection(params):
    P = KW3Params(*params)
    S = base_semigroup(P).S
    pts = canonical_points_below_plane(P)
    assert len(pts) == len(S.gaps()) == (P.frobenius + 1) // 2
    assert sorted(P.gamma(*pt) for pt in pts) == S.gaps()
    assert all(gap_rep(P, P.gamma(*pt), S).point == pt for pt in pts)


def test_build_examples():
    P = KW3Params(9, 11, 2, 1, 4)
    K = build_kw3(P, [(1, 2, 2)])
    assert K.H.gens == (29, 36, 44, 221) and K.strict_class
    K = build_kw3(P, [(1, 2, 2), (3, 1, 1), (1, 3, 1)])
    assert K.H.gens == (29, 36, 44, 206, 221, 222)
    assert not K.strict_class  # y = 3 exceeds (9 - 4) / 2
    K = build_kw3(KW3Params(5, 7, 2, 1, 3), [(3, 1, 0)])
    assert K.H.gens == (15, 17, 21, 37) and not K.strict_class


def test_build_errors():
    P = KW3Params(5, 7, 2, 1, 3)
    with pytest.raises(NotAGap):
        build_kw3(P, [], extra=[30])
    with pytest.raises(DuplicateGenerator):
        build_kw3(P, [(2, 0, 0), (2, 0, 0)])
    with pytest.raises(DuplicateGenerator):
        build_kw3(P, [(2, 0, 0), (0, 0, 0)])  # 103 = 73 + 2 * 15


def test_apery_characterization():
    K = build_kw3(KW3Params(9, 11, 2, 1, 4), [(1, 2, 2)])
    rep = verify_apery_characterization(K)
    assert rep.ok and rep.intersection == (221,)


def test_type3_examples():
    r = type3_theorem(KW3Params(9, 11, 2, 1, 4), (1, 2, 2))
    assert r.applicable and r.agrees and r.actual_pf == (271, 316, 331)
    r = type3_theorem(KW3Params(9, 11, 2, 1, 3), (3, 1, 1))
    assert r.p_z == 237 and r.p_z_in_H and not r.applicable
    assert len(r.actual_pf) == 4 and {183, 204} <= set(r.actual_pf)
    r = type3_theorem(KW3Params(5, 7, 2, 1, 3), (1, 1, 1))
    assert r.h == 50 and not r.strict and r.agrees


@pytest.mark.parametrize("params", [(5, 7, 2, 1, 3), (9, 11, 2, 1, 4), (9, 11, 2, 1, 3),
                                    (7, 9, 1, 1, 3)])
def test_strict_scans(params):
    P = KW3Params(*params)
    for pt in single_points(P, strict_only=True):
        r = type3_theorem(P, pt)
        if r.applicable:
            assert list(r.actual_pf) == pf_naive(build_kw3(P, [pt]).H.gens)
            assert r.agrees, pt
        assert verify_apery_characterization(build_kw3(P, [pt])).ok


def test_scan_tables_values():
    t = scan_tables(KW3Params(5, 7, 2, 1, 3), 73)
    single = {r.h: (r.type, r.mu) for r in t["single"]}
    assert sorted(single) == [35, 50, 52, 56, 65, 67, 71, 73, 82, 86, 88, 103]
    assert {h for h, (ty, _) in single.items() if ty == 4} == {35, 52}
    assert {r.h: r.mu for r in t["pairs"]} == {50: 10, 65: 11, 67: 9, 71: 10, 82: 10, 86: 10}
    # the printed table gives 7 for h = 103; both Betti oracles give 6
    assert single[103] == (3, 6)
