from collections import Counter

import pytest

from kwsgp.errors import ParityViolation, RankDeficient, WrongTag
from kwsgp.kw2d import KWParams, enumerate_kw, kw_corners
from kwsgp.principal import (AlphaBeta, adjugate, alpha_beta, classify_case, closed_form,
                             construct_exceptional, construct_T, minimal_multiple,
                             principal_matrix_bruteforce, rank, recover_generators,
                             verify_theorem31)


def test_bruteforce_example():
    P = principal_matrix_bruteforce((5, 7, 11, 13))
    assert P.entries == ((-4, 1, 0, 1), (2, -3, 1, 0), (3, 1, -2, 0), (1, 3, 0, -2))
    assert P.kernel_ok() and P.sign_pattern_ok()


def test_minimal_multiple_is_minimal():
    gens = (5, 7, 11, 13)
    for i, c in enumerate((4, 3, 2, 2)):
        assert minimal_multiple(gens, i) == c


def test_closed_form_case_i():
    c = kw_corners(KWParams(5, 7), [(2, 2), (3, 1)])
    tag, P = closed_form(c)
    assert tag == "i"
    assert P.gens == (5, 7, 11, 13)
    assert P.diagonal == (-4, -3, -2, -2)


def test_alpha_beta_and_h():
    c = kw_corners(KWParams(8, 9), [(1, 3)])
    ab = alpha_beta(c)
    assert ab == AlphaBeta((7,), (2,))
    assert ab.hs(c.params) == c.hs == (37,)
    tag, P = closed_form(c)
    assert tag == "ii" and P.kernel_ok()


@pytest.mark.parametrize("p,q,tags", [
    (8, 9, {"ii", "iii", "even_p_exception"}),
    (9, 10, {"iv", "v", "even_q_exception"}),
    (5, 7, {"i"}),
])
def test_case_coverage(p, q, tags):
    seen = Counter(verify_theorem31(m).case for m in enumerate_kw(KWParams(p, q)) if m.corners)
    assert set(seen) == tags


def test_wrong_tag_and_parity():
    params = KWParams(8, 9)
    ab = alpha_beta(kw_corners(params, [(1, 3)]))
    with pytest.raises(WrongTag):
        construct_exceptional(params, ab, "ii")
    with pytest.raises(ParityViolation):
        construct_T(params, AlphaBeta((2,), (3,)))


def test_recover_generators():
    P = principal_matrix_bruteforce((5, 7, 11, 13))
    assert recover_generators(P) == (5, 7, 11, 13)
    assert recover_generators([[1, 0], [0, 1]]) is None
    with pytest.raises(RankDeficient):
        recover_generators([[1, 1, 1], [2, 2, 2], [3, 3, 3]])


def test_adjugate_identity():
    M = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
    A = adjugate(M)
    det = sum(M[0][j] * A[j][0] for j in range(3))
    prod = [[sum(M[i][k] * A[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[det if i == j else 0 for j in range(3)] for i in range(3)]
    assert rank(M) == 3


def test_classify_is_first_condition():
    params = KWParams(5, 7)
    assert classify_case(params, AlphaBeta((3,), (1,))) == "i"
