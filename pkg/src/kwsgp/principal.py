"""Principal matrices of numerical semigroups and their closed forms on KW(p, q).

Row ``i`` of a principal matrix is a relation ``c_i a_i = sum_j a_ij a_j``
written as ``-c_i`` on the diagonal, with ``c_i`` minimal. Off-diagonal
entries are not unique; the brute-force constructor fixes the
lexicographically smallest factorization of ``c_i a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .errors import ParityViolation, RankDeficient, TheoremViolation, WrongTag
from .kw2d import KWCorners, KWParams
from .semigroup import NumericalSemigroup, factorizations_over, reachable

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PrincipalMatrix:
    entries: Matrix
    gens: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def kernel_ok(self) -> bool:
        return all(sum(a * g for a, g in zip(row, self.gens)) == 0
                   for row in self.entries)

    def sign_pattern_ok(self) -> bool:
        return all((a < 0) if i == j else (a >= 0)
                   for i, row in enumerate(self.entries) for j, a in enumerate(row))


@dataclass(frozen=True)
class AlphaBeta:
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def hs(self, params: KWParams) -> tuple[int, ...]:
        return tuple((params.p * a + params.q * b) // 2
                     for a, b in zip(self.alphas, self.betas))


def alpha_beta(c: KWCorners) -> AlphaBeta:
    p, q = c.params.p, c.params.q
    return AlphaBeta(tuple(q - 2 * x for x, _ in c.corners),
                     tuple(p - 2 * y for _, y in c.corners))


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ParityViolation(f"{what} = {value} is odd")
    return value // 2


def construct_T(params: KWParams, ab: AlphaBeta) -> PrincipalMatrix:
    """The closed-form candidate ``T(alpha, beta)``."""
    p, q = params.p, params.q
    k = len(ab.alphas)
    if k < 1:
        raise ValueError("construct_T needs at least one adjoined generator")
    n = k + 2
    rows = [[0] * n for _ in range(n)]
    a1, b1 = ab.alphas[0], ab.betas[0]
    ak, bk = ab.alphas[-1], ab.betas[-1]
    rows[0][0] = -_half(q + ak, "q + alpha_last")
    rows[0][1] = _half(p - bk, "p - beta_last")
    rows[0][n - 1] += 1
    rows[1][0] = _half(q - a1, "q - alpha_1")
    rows[1][1] = -_half(p + b1, "p + beta_1")
    rows[1][2] += 1
    for i, (a, b) in enumerate(zip(ab.alphas, ab.betas)):
        rows[2 + i][0] = a
        rows[2 + i][1] = b
        rows[2 + i][2 + i] = -2
    return PrincipalMatrix(tuple(map(tuple, rows)), (p, q) + ab.hs(params))


CASES = ("i", "ii", "iii", "iv", "v")
EXCEPTIONS = ("even_p_exception", "even_q_exception")


def classify_case(params: KWParams, ab: AlphaBeta) -> str:
    """First of the sufficient conditions (i)-(v) that holds, else the exception tag."""
    p, q = params.p, params.q
    a1, ak = ab.alphas[0], ab.alphas[-1]
    b1, bk = ab.betas[0], ab.betas[-1]
    h1, hk = ab.hs(params)[0], ab.hs(params)[-1]
    if p % 2 and q % 2:
        return "i"
    if p % 2 == 0 and 2 * h1 != p * a1:
        return "ii"
    if p % 2 == 0 and q <= 2 * a1 - ak:
        return "iii"
    if q % 2 == 0 and 2 * hk != q * bk:
        return "iv"
    if q % 2 == 0 and p <= 2 * bk - b1:
        return "v"
    return "even_p_exception" if p % 2 == 0 else "even_q_exception"


def construct_exceptional(params: KWParams, ab: AlphaBeta, tag: str) -> PrincipalMatrix:
    T = construct_T(params, ab)
    rows = [list(r) for r in T.entries]
    n = T.n
    if tag == "even_p_exception":
        rows[0] = [0] * n
        rows[0][0] = -ab.alphas[0]
        rows[0][2] = 2
    elif tag == "even_q_exception":
        rows[1] = [0] * n
        rows[1][1] = -ab.betas[-1]
        rows[1][n - 1] = 2
    else:
        raise WrongTag(f"{tag!r} is not an exceptional case")
    return PrincipalMatrix(tuple(map(tuple, rows)), T.gens)


def closed_form(c: KWCorners) -> tuple[str, PrincipalMatrix]:
    """The matrix the classification predicts for ``c``, with its case tag."""
    ab = alpha_beta(c)
    tag = classify_case(c.params, ab)
    if tag in EXCEPTIONS:
        return tag, construct_exceptional(c.params, ab, tag)
    return tag, construct_T(c.params, ab)


def minimal_multiple(gens: Sequence[int], i: int) -> int:
    """Least ``c >= 1`` with ``c * gens[i]`` in the monoid of the other generators.

    ``c <= gens[j]`` for any ``j != i``, which bounds the knapsack table.
    """
    a = gens[i]
    others = [g for j, g in enumerate(gens) if j != i]
    bound = a * min(others)
    table = reachable(others, bound)
    return next(c for c in range(1, min(others) + 1) if table[c * a])


def principal_matrix_bruteforce(H) -> PrincipalMatrix:
    """Principal matrix by exhaustive search.

    ``H`` is a :class:`NumericalSemigroup` or any sequence of minimal
    generators; the row order follows the given order.
    """
    gens = tuple(H.gens if isinstance(H, NumericalSemigroup) else H)
    n = len(gens)
    rows = []
    for i in range(n):
        c = minimal_multiple(gens, i)
        others = [g for j, g in enumerate(gens) if j != i]
        coeffs = list(min(factorizations_over(others, c * gens[i])))
        coeffs.insert(i, -c)
        rows.append(tuple(coeffs))
    return PrincipalMatrix(tuple(rows), gens)


def _bareiss_det(M) -> int:
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]


def adjugate(M) -> list[list[int]]:
    n = len(M)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(list, M)) if k != i]
            adj[j][i] = (-1) ** (i + j) * _bareiss_det(minor)
    return adj


def rank(M) -> int:
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def recover_generators(P) -> Optional[tuple[int, ...]]:
    """Generators from a nonzero adjugate column, or None for full rank."""
    M = P.entries if isinstance(P, PrincipalMatrix) else tuple(map(tuple, P))
    n = len(M)
    rk = rank(M)
    if rk < n - 1:
        raise RankDeficient(f"rank {rk} < {n - 1}")
    if rk == n:
        return None
    adj = adjugate(M)
    for j in range(n):
        col = [adj[i][j] for i in range(n)]
        if any(col):
            g = reduce(gcd, col)
            return tuple(abs(x) // g for x in col)
    raise RankDeficient("adjugate vanished")  # unreachable when rank == n - 1


@dataclass(frozen=True)
class Theorem31Report:
    corners: KWCorners
    case: str
    closed_form: PrincipalMatrix
    bruteforce: PrincipalMatrix
    diagonal_agrees: bool
    kernel_ok: bool
    exact_match: bool

    @property
    def ok(self) -> bool:
        return self.diagonal_agrees and self.kernel_ok


def verify_theorem31(c: KWCorners) -> Theorem31Report:
    """Compare the predicted matrix with the brute-force one.

    Raises TheoremViolation when the diagonals disagree or the predicted
    matrix does not annihilate the generators.
    """
    if not c.corners:
        raise ValueError("the closed form needs embedding dimension >= 3")
    case, predicted = closed_form(c)
    brute = principal_matrix_bruteforce(predicted.gens)
    report = Theorem31Report(
        corners=c,
        case=case,
        closed_form=predicted,
        bruteforce=brute,
        diagonal_agrees=predicted.diagonal == brute.diagonal,
        kernel_ok=predicted.kernel_ok() and predicted.sign_pattern_ok(),
        exact_match=predicted.entries == brute.entries,
    )
    if not report.ok:
        raise TheoremViolation(
            f"closed form fails for {c.params} corners {c.corners} (case {case})", report)
    return report
