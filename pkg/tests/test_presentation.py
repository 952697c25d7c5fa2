from math import comb

import pytest

from kwsgp.errors import InvalidCorners, TheoremViolation
from kwsgp.kw2d import KWParams, build_kw, enumerate_kw, kw_corners
from kwsgp.poly import Binomial, mono
from kwsgp.presentation import (all_minors, appendix_generators, betti_elements,
                                critical_binomials, determinantal_matrices,
                                verify_kw_presentation)
from kwsgp.semigroup import factorizations_over

from oracles import koszul_mu


@pytest.mark.parametrize("gens", [(5, 7), (5, 7, 11, 13), (15, 17, 21, 103), (8, 9, 28),
                                  (15, 17, 21, 65, 73), (7, 11, 23, 27, 31)])
def test_betti_matches_koszul_oracle(gens):
    assert betti_elements(gens).mu == koszul_mu(sorted(gens))


def test_betti_values():
    assert betti_elements((5, 7)).elements == ((35, 1),)
    r = betti_elements((5, 7, 11, 13))
    assert r.mu == 6 and sorted(r.degrees) == [18, 20, 21, 22, 24, 26]


def test_appendix_list_single_corner():
    c = kw_corners(KWParams(5, 7), [(2, 2)])
    gens = appendix_generators(c)
    assert sorted(b.degree for b in gens) == [21, 22, 25]
    w = c.generators
    assert Binomial.make(mono(3, v=3), mono(3, u=2, u1=1), w) in gens


def test_minors_contain_appendix_n5():
    c = kw_corners(KWParams(7, 11), [(3, 3), (4, 2), (5, 1)])
    app = set(appendix_generators(c))
    minors = all_minors(c)
    assert app < minors
    assert len(app) == comb(5, 2)
    assert {m.label for m in determinantal_matrices(c)} == {"A12", "A13", "A23", "B", "C"}


def _fiber_connected(facts, moves):
    facts = set(facts)
    seen, stack = {facts.pop()}, []
    stack.extend(seen)
    while stack:
        f = stack.pop()
        for a, b in moves:
            for s, t in ((a, b), (b, a)):
                if all(x >= y for x, y in zip(f, s)):
                    g = tuple(x - y + z for x, y, z in zip(f, s, t))
                    if g in facts and g not in seen:
                        seen.add(g)
                        stack.append(g)
    return seen >= facts


@pytest.mark.parametrize("p,q", [(5, 7), (7, 9), (5, 9), (7, 11), (8, 9), (9, 10)])
def test_appendix_list_generates_ideal(p, q):
    # a binomial set generates I_H iff its moves connect every Betti fiber
    for c in enumerate_kw(KWParams(p, q)):
        if not c.corners or not 3 <= c.n <= 5:
            continue
        moves = [(b.plus, b.minus) for b in appendix_generators(c)]
        for d, _ in betti_elements(build_kw(c)).elements:
            assert _fiber_connected(factorizations_over(c.generators, d), moves), (c, d)


@pytest.mark.parametrize("p,q", [(5, 7), (7, 9), (5, 9), (7, 11)])
def test_theorem_on_odd_families(p, q):
    for m in enumerate_kw(KWParams(p, q)):
        rep = verify_kw_presentation(m)
        assert rep.ok and rep.mu == comb(rep.n, 2) and rep.type == rep.n - 1


def test_boundary_corner_counterexample():
    # y = p/2 makes <p, q, h> a complete intersection: two relations, type 1
    c = kw_corners(KWParams(8, 9), [(1, 4)])
    with pytest.raises(TheoremViolation) as info:
        verify_kw_presentation(c)
    rep = info.value.payload
    assert (rep.n, rep.mu, rep.type) == (3, 2, 1)
    assert rep.minors_contain_appendix
    assert build_kw(c).is_symmetric()


@pytest.mark.parametrize("p,q", [(8, 9), (9, 10), (6, 7), (4, 7), (8, 11), (10, 13)])
def test_counterexamples_are_exactly_boundary_triples(p, q):
    params = KWParams(p, q)
    for m in enumerate_kw(params):
        try:
            verify_kw_presentation(m)
            failed = False
        except TheoremViolation:
            failed = True
        boundary = m.n == 3 and any(2 * y == p or 2 * x == q for x, y in m.corners)
        assert failed == boundary, m


def test_critical_binomials():
    bs = critical_binomials((5, 7, 11, 13))
    assert len(bs) == 4
    assert all(b.degree in {20, 21, 22, 26} for b in bs)


def test_no_corners_rejected():
    with pytest.raises(InvalidCorners):
        appendix_generators(kw_corners(KWParams(5, 7), []))
