import pytest

from kwsgp.errors import EmptyInput, ModulusNotInSemigroup, NegativeInput, NonCoprime
from kwsgp.semigroup import build, factorizations_over, minimalize, semigroup

from oracles import frobenius_naive, members_upto, pf_naive


def test_minimalize_drops_redundant():
    assert minimalize([15, 21, 17, 35, 52]) == (15, 17, 21, 35)
    assert minimalize([6, 4, 9, 12]) == (4, 6, 9)


@pytest.mark.parametrize("raw, exc", [([], EmptyInput), ([4, 6], NonCoprime),
                                      ([0, 3, 5], NegativeInput), ([-1, 2], NegativeInput)])
def test_minimalize_errors(raw, exc):
    with pytest.raises(exc):
        minimalize(raw)


@pytest.mark.parametrize("gens", [(5, 7), (5, 7, 11, 13), (15, 17, 21), (36, 44, 29, 221),
                                  (8, 9, 28), (3, 10, 17)])
def test_frobenius_and_pf_match_oracle(gens):
    H = semigroup(*gens)
    assert H.frobenius == frobenius_naive(H.gens)
    assert list(H.pseudo_frobenius()) == pf_naive(H.gens)
    S = members_upto(H.gens, H.frobenius + 5)
    assert H.gaps() == [t for t in range(H.frobenius + 1) if t not in S]


def test_known_values():
    H = semigroup(15, 21, 17)
    assert H.frobenius == 103
    assert len(H.gaps()) == 52
    assert H.is_symmetric()
    assert semigroup(36, 44, 29, 221).pseudo_frobenius() == (271, 316, 331)
    assert semigroup(27, 33, 29, 152).pseudo_frobenius() == (183, 187, 204, 229)
    assert semigroup(15, 21, 17, 37).type == 4
    assert semigroup(2, 3).frobenius == 1


def test_apery():
    H = semigroup(5, 7)
    assert H.apery(5).elements == (0, 7, 14, 21, 28)
    with pytest.raises(ModulusNotInSemigroup):
        H.apery(3)
    with pytest.raises(ModulusNotInSemigroup):
        H.apery(0)


def test_contains_negative():
    with pytest.raises(NegativeInput):
        semigroup(3, 5).contains(-1)


def test_factorizations_sorted_and_complete():
    f = semigroup(5, 7, 11, 13).factorizations(35)
    assert f == sorted(f)
    assert all(sum(c * g for c, g in zip(v, (5, 7, 11, 13))) == 35 for v in f)
    assert (7, 0, 0, 0) in f and (0, 5, 0, 0) in f
    assert factorizations_over((3, 5), 1) == []
    assert factorizations_over((3, 5), 0) == [(0, 0)]


def test_build_requires_coprime():
    with pytest.raises(NonCoprime):
        build([4, 6])
