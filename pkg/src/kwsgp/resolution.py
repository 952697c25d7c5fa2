"""Graded free resolutions of KW semigroup rings in embedding dimension 3 and 4.

Matrices are lists of rows of :class:`~kwsgp.poly.Poly` entries. A complex
``F_0 <- F_1 <- ... <- F_k`` is stored as ``[D_1, ..., D_k]`` with ``D_t`` the
matrix of ``F_t -> F_{t-1}`` (rows index the basis of ``F_{t-1}``), so
``D_t @ D_{t+1} == 0`` is the complex condition.

Entries are written as templates whose exponents are linear expressions in
``p, q, x1, x2, y1, y2``. The embedding-dimension-4 templates are the printed
ones after the corrections listed in :data:`REPAIRS`; the repaired matrices
need ``2 x1 >= x2`` and ``2 y2 >= y1``. :func:`resolution_ed4` falls back to
an equivalent basis of the syzygies (``form="general"``) otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .errors import ComplexBroken, InvalidCorners
from .kw2d import KWParams, kw_corners
from .poly import Poly, degree, matmul, monomials_of_degree, var_names
from .principal import rank

_VARS = ("u", "v", "u1", "u2")


@dataclass(frozen=True)
class Term:
    """Signed monomial template: ``Term(-1, u="q-2*x2", v="y1-y2")``."""

    sign: int
    exps: tuple[tuple[str, str], ...]

    def instantiate(self, env: dict, nvars: int) -> Poly:
        e = [0] * nvars
        for var, expr in self.exps:
            value = eval(expr, {"__builtins__": {}}, env)  # templates are module constants
            if value < 0:
                raise InvalidCorners(f"exponent {var}^({expr}) = {value} is negative")
            e[_VARS.index(var)] += value
        return Poly.monomial(tuple(e), self.sign)

    def __str__(self) -> str:
        body = "*".join(v if x == "1" else f"{v}^({x})" for v, x in self.exps) or "1"
        return ("-" if self.sign < 0 else "") + body


def T(sign: str | int, **exps) -> Term:
    s = -1 if sign in ("-", -1) else 1
    return Term(s, tuple((k, str(v)) for k, v in exps.items()))


def B(*terms: Term) -> tuple[Term, ...]:
    """Sum of signed terms (used for the generators of the ideal)."""
    return terms


P, M = "+", "-"

# Embedding dimension 3: S <- S^3 <- S^2.
ED3_D1 = [[
    B(T(P, v="p-y1"), T(M, u="x1", u1=1)),
    B(T(P, u="q-2*x1", v="p-2*y1"), T(M, u1=2)),
    B(T(P, u="q-x1"), T(M, v="y1", u1=1)),
]]
ED3_D2 = [
    [T(P, u1=1), T(M, u="q-2*x1")],
    [T(M, u="x1"), T(P, v="y1")],
    [T(P, v="p-2*y1"), T(M, u1=1)],
]

# Embedding dimension 4: S <- S^6 <- S^8 <- S^3.
ED4_A3 = [[
    B(T(P, u="q-2*x1", v="p-2*y1"), T(M, u1=2)),
    B(T(P, u="q-x1-x2", v="p-y1-y2"), T(M, u1=1, u2=1)),
    B(T(P, u="q-2*x2", v="p-2*y2"), T(M, u2=2)),
    B(T(P, v="y1-y2", u1=1), T(M, u="x2-x1", u2=1)),
    B(T(P, v="y2", u2=1), T(M, u="q-x2")),
    B(T(P, u="x1", u1=1), T(M, v="p-y1")),
]]
_0 = None
ED4_A2 = [
    [T(M, u="x1"), T(M, u="2*x1-x2", v="y1-y2"), _0, _0, _0, T(M, u2=1), T(M, v="y1-y2"), _0],
    [_0, _0, _0, T(M, u2=1), _0, T(P, u1=1), T(P, u="x2-x1"), T(M, v="y1-y2")],
    [_0, _0, T(P, v="y2"), T(P, u1=1), T(P, u="x2-x1", v="2*y2-y1"), _0, _0, T(P, u="x2-x1")],
    [T(M, v="p+y2-2*y1"), T(M, u="2*x1-x2", u1=1), T(M, u="q+x1-2*x2"),
     T(M, u="q-2*x2", v="p-y1-y2"), T(M, v="2*y2-y1", u2=1), T(M, u="q-x1-x2", v="p-2*y1"),
     T(M, u1=1), T(M, u2=1)],
    [T(M, u="x2-x1", v="p-2*y1"), T(M, v="p-y1-y2"), T(P, u2=1), _0, T(P, u1=1), _0, _0, _0],
    [T(M, u1=1), T(M, u2=1), T(P, u="q-2*x2", v="y1-y2"), _0, T(P, u="q-x1-x2"), _0, _0, _0],
]
ED4_A1 = [
    [T(P, u2=1), T(M, u="q-2*x2", v="y1-y2"), _0],
    [T(M, u1=1), T(P, u="q-x1-x2"), _0],
    [T(P, u="x2-x1", v="p-2*y1"), T(M, u1=1), _0],
    [_0, T(P, v="y2"), T(P, u="x2-x1")],
    [T(M, v="p-y1-y2"), T(P, u2=1), _0],
    [T(M, u="x1"), _0, T(M, v="y1-y2")],
    [T(P, u="2*x1-x2", u1=1), _0, T(P, u2=1)],
    [_0, T(M, v="2*y2-y1", u2=1), T(M, u1=1)],
]

# Change of basis valid for every pair of corners:
# column 2 of A2 minus u^(2x1-x2) times column 7, column 5 minus v^(2y2-y1) times column 8.
ED4_A2_GENERAL_COLUMNS = {
    1: [_0, T(M, u="x1"), _0, _0, T(M, v="p-y1-y2"), T(M, u2=1)],
    4: [_0, T(P, v="y2"), _0, _0, T(P, u1=1), T(P, u="q-x1-x2")],
}
ED4_A1_GENERAL_ROWS = {
    6: [_0, T(P, u="q+x1-2*x2"), T(P, u2=1)],
    7: [T(M, v="p+y2-2*y1"), _0, T(M, u1=1)],
}


@dataclass(frozen=True)
class Repair:
    matrix: str
    row: int  # 1-based, as printed
    col: int
    printed: str
    corrected: str
    reason: str


REPAIRS = (
    Repair("D1", 1, 1, "v^{p-y_1} - u^{x_1}", "v^{p-y_1} - u^{x_1} u_1",
           "not homogeneous; the matching appendix binomial carries u_1"),
    Repair("A2", 1, 2, "-u^{2x_1-x_2} v^{p-y_1-y_2}", "-u^{2x_1-x_2} v^{y_1-y_2}",
           "column degree fixed by rows 4-6 forces v-exponent y_1-y_2"),
    Repair("A2", 1, 7, "-v^{p-y_1-y_2}", "-v^{y_1-y_2}",
           "column degree fixed by rows 2 and 4 forces v-exponent y_1-y_2"),
    Repair("A2", 2, 8, "-v^{(y_1-y_2)/2}", "-v^{y_1-y_2}",
           "fractional exponent; homogeneity forces y_1-y_2"),
    Repair("A2", 4, 3, "u^{q+x_1-2x_2}", "-u^{q+x_1-2x_2}",
           "sign: with the printed sign the u^{q-x_2} u_2 terms double instead of cancel"),
    Repair("A1", 3, 1, "u^{x_1} v^{p-2y_1}", "u^{x_2-x_1} v^{p-2y_1}",
           "u-exponent off by 2x_1-x_2 against the column degree"),
    Repair("A1", 6, 1, "-u^{2x_1-x_2}", "-u^{x_1}",
           "u-exponent off by x_2-x_1 against the column degree"),
    Repair("A1", 7, 1, "u^{x_2-x_2} u_1", "u^{2x_1-x_2} u_1",
           "exponent x_2-x_2 is a misprint for 2x_1-x_2"),
    Repair("A1", 1, 2, "-u^{q-x_2} v^{y_1-y_2}", "-u^{q-2x_2} v^{y_1-y_2}",
           "u-exponent off by x_2 against the column degree"),
    Repair("A1", 3, 2, "-x_1", "-u_1",
           "not a monomial; degree h_1 forces u_1"),
    Repair("A1", 8, 2, "v^{2y_2-y_1} u_2", "-v^{2y_2-y_1} u_2",
           "sign: rows 3 and 4 of the product do not cancel otherwise"),
)


def _env(p, q, corners) -> dict:
    env = {"p": p, "q": q}
    for i, (x, y) in enumerate(corners, start=1):
        env[f"x{i}"] = x
        env[f"y{i}"] = y
    return env


def _entry(t, env, nvars) -> Poly:
    if t is None:
        return Poly.zero(nvars)
    if isinstance(t, Term):
        return t.instantiate(env, nvars)
    acc = Poly.zero(nvars)
    for term in t:
        acc = acc + term.instantiate(env, nvars)
    return acc


def instantiate(template, env, nvars) -> list[list[Poly]]:
    return [[_entry(t, env, nvars) for t in row] for row in template]


@dataclass
class GradedComplex:
    """``F_0 <- F_1 <- ...``; ``shifts[t]`` are the generator degrees of ``F_t``."""

    weights: tuple[int, ...]
    matrices: list[list[list[Poly]]]
    form: str = "printed"
    shifts: list[list[int]] = field(default_factory=list)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def ranks(self) -> tuple[int, ...]:
        return (len(self.matrices[0]),) + tuple(len(m[0]) for m in self.matrices)

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "variables": var_names(self.nvars),
            "weights": list(self.weights),
            "ranks": list(self.ranks),
            "shifts": self.shifts,
            "matrices": [[[e.to_json() for e in row] for row in m] for m in self.matrices],
        }

    def to_text(self) -> str:
        blocks = []
        for t, m in enumerate(self.matrices, start=1):
            cells = [[str(e) for e in row] for row in m]
            widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
            lines = [f"D{t}: F{t} -> F{t - 1}  ({len(m)}x{len(m[0])})"]
            for r in cells:
                lines.append("  [ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]")
            blocks.append("\n".join(lines))
        head = f"ranks {self.ranks}  weights {self.weights}  form {self.form}"
        return head + "\n" + "\n\n".join(blocks) + "\n"


def infer_shifts(weights, matrices) -> list[list[int]]:
    shifts = [[0] * len(matrices[0])]
    for m in matrices:
        prev = shifts[-1]
        cols = []
        for j in range(len(m[0])):
            deg = None
            for i, row in enumerate(m):
                if row[j]:
                    deg = min(row[j].degrees(weights)) + prev[i]
                    break
            cols.append(deg)
        shifts.append(cols)
    return shifts


def _finish(weights, matrices, form) -> GradedComplex:
    c = GradedComplex(tuple(weights), matrices, form)
    c.shifts = infer_shifts(c.weights, matrices)
    for m in matrices:
        for row in m:
            for e in row:
                if e and not e.coefficients() <= {1, -1}:
                    raise ComplexBroken(f"entry {e} has a coefficient other than +-1")
    return c


def _check_single_corner(p, q, corners, count):
    params = KWParams(p, q)
    c = kw_corners(params, corners)
    if len(c.corners) != count:
        raise InvalidCorners(f"expected {count} corner(s), got {c}")
    return c


def resolution_ed3(p: int, q: int, x1: int, y1: int) -> GradedComplex:
    c = _check_single_corner(p, q, [(x1, y1)], 1)
    env = _env(p, q, c.corners)
    weights = c.generators
    return _finish(weights, [instantiate(ED3_D1, env, 3), instantiate(ED3_D2, env, 3)], "printed")


def printed_form_applies(corners) -> bool:
    (x1, y1), (x2, y2) = corners
    return 2 * x1 >= x2 and 2 * y2 >= y1


def ed4_templates(form: str):
    if form == "printed":
        return ED4_A3, ED4_A2, ED4_A1
    A2 = [list(r) for r in ED4_A2]
    for j, col in ED4_A2_GENERAL_COLUMNS.items():
        for i, t in enumerate(col):
            A2[i][j] = t
    A1 = [list(r) for r in ED4_A1]
    for i, row in ED4_A1_GENERAL_ROWS.items():
        A1[i] = list(row)
    return ED4_A3, A2, A1


def resolution_ed4(p: int, q: int, corners, form: str = "auto") -> GradedComplex:
    """``form`` is ``"printed"``, ``"general"``, or ``"auto"`` (printed when it applies)."""
    c = _check_single_corner(p, q, corners, 2)
    if form == "auto":
        form = "printed" if printed_form_applies(c.corners) else "general"
    if form == "printed" and not printed_form_applies(c.corners):
        raise InvalidCorners(f"printed matrices need 2x1 >= x2 and 2y2 >= y1, got {c.corners}")
    env = _env(p, q, c.corners)
    mats = [instantiate(t, env, 4) for t in ed4_templates(form)]
    return _finish(c.generators, mats, form)


@dataclass(frozen=True)
class ComplexReport:
    ok: bool
    reason: str = ""
    matrix: Optional[int] = None  # 1-based index of the failing D_t (or product D_t D_t+1)
    row: Optional[int] = None
    col: Optional[int] = None
    detail: str = ""


def verify_complex(c: GradedComplex) -> ComplexReport:
    """Exact check of composability, ``D_t D_{t+1} = 0`` and homogeneity."""
    mats = c.matrices
    for t in range(len(mats) - 1):
        if len(mats[t][0]) != len(mats[t + 1]):
            return ComplexReport(False, "shape", t + 1)
    for t in range(len(mats) - 1):
        prod = matmul(mats[t], mats[t + 1], c.nvars)
        for i, row in enumerate(prod):
            for j, e in enumerate(row):
                if e:
                    return ComplexReport(False, "product", t + 1, i + 1, j + 1, str(e))
    shifts = infer_shifts(c.weights, mats)
    for t, m in enumerate(mats):
        for i, row in enumerate(m):
            for j, e in enumerate(row):
                if not e:
                    continue
                want = shifts[t + 1][j] - shifts[t][i]
                if e.degrees(c.weights) != {want}:
                    return ComplexReport(False, "homogeneity", t + 1, i + 1, j + 1,
                                         f"{e} has degrees {sorted(e.degrees(c.weights))}, want {want}")
    return ComplexReport(True)


def specialized_rank(matrix: list[list[Poly]], point: Sequence[int]) -> int:
    values = [[sum(coef * _eval_mono(m, point) for m, coef in e.terms.items()) for e in row]
              for row in matrix]
    return rank(values)


def _eval_mono(m, point) -> int:
    out = 1
    for e, x in zip(m, point):
        out *= x ** e
    return out


def last_map_has_full_rank(c: GradedComplex, seed: int = 0) -> bool:
    rng = random.Random(seed)
    point = [rng.randint(2, 50) for _ in range(c.nvars)]
    last = c.matrices[-1]
    return specialized_rank(last, point) == len(last[0])


# --- repair search -----------------------------------------------------------

_REPAIRED_CELLS = {
    "A2": [(r.row - 1, r.col - 1) for r in REPAIRS if r.matrix == "A2"],
    "A1": [(r.row - 1, r.col - 1) for r in REPAIRS if r.matrix == "A1"],
}


def _signed_candidates(d: int, weights) -> list[Poly]:
    out = [Poly.zero(len(weights))]
    for m in monomials_of_degree(d, weights):
        out.append(Poly.monomial(m, 1))
        out.append(Poly.monomial(m, -1))
    return out


def _column_solutions(left, column, unknown_rows, row_degrees, weights):
    """All fillings of ``unknown_rows`` making ``left @ column == 0``.

    The column degree is read off the known entries; each unknown cell is a
    signed monomial of the forced degree, or zero.
    """
    nvars = len(weights)
    col_deg = None
    for i, e in enumerate(column):
        if i not in unknown_rows and e:
            col_deg = min(e.degrees(weights)) + row_degrees[i]
            break
    residual = []
    for row in left:
        acc = Poly.zero(nvars)
        for i, e in enumerate(column):
            if i not in unknown_rows and e and row[i]:
                acc = acc + row[i] * e
        residual.append(acc)
    options = [_signed_candidates(col_deg - row_degrees[i], weights) for i in unknown_rows]
    sols = []
    for choice in product(*options):
        ok = True
        for k, row in enumerate(left):
            acc = residual[k]
            for i, val in zip(unknown_rows, choice):
                if val and row[i]:
                    acc = acc + row[i] * val
            if acc:
                ok = False
                break
        if ok:
            sols.append(choice)
    return sols


@dataclass(frozen=True)
class RepairSearch:
    corners: tuple
    solutions: dict  # (matrix, row, col) -> list of str candidates
    unique: bool
    matches_table: bool


def search_repairs(p: int, q: int, corners) -> RepairSearch:
    """Re-derive every repaired cell from homogeneity and the complex condition.

    Each repaired cell is treated as unknown; all other entries are taken as
    printed. Solutions are enumerated column by column.
    """
    c = _check_single_corner(p, q, corners, 2)
    if not printed_form_applies(c.corners):
        raise InvalidCorners("repair search runs on the printed form only")
    weights = c.generators
    env = _env(p, q, c.corners)
    A3 = instantiate(ED4_A3, env, 4)
    A2 = instantiate(ED4_A2, env, 4)
    A1 = instantiate(ED4_A1, env, 4)
    found = {}
    unique = True
    matches = True

    e_deg = [min(e.degrees(weights)) for e in A3[0]]
    steps = [("A2", A3, A2, e_deg)]
    for name, left, right, row_deg in steps + [("A1", A2, A1, None)]:
        if row_deg is None:
            row_deg = infer_shifts(weights, [A3, A2])[2]
        cells = _REPAIRED_CELLS[name]
        for j in sorted({col for _, col in cells}):
            rows = [r for r, col in cells if col == j]
            column = [right[i][j] for i in range(len(right))]
            sols = _column_solutions(left, column, rows, row_deg, weights)
            if len(sols) != 1:
                unique = False
            for k, r in enumerate(rows):
                found[(name, r + 1, j + 1)] = sorted({str(s[k]) for s in sols})
                if len(sols) != 1 or sols[0][k] != right[r][j]:
                    matches = False
    return RepairSearch(c.corners, found, unique, matches)


def search_repair_ed3(p: int, q: int, x1: int, y1: int) -> list[str]:
    """Every signed monomial ``m`` with ``v^(p-y1) + m`` in place of the first
    generator keeping ``D1 D2 = 0``; the repaired entry is ``-u^x1 u1``."""
    c = resolution_ed3(p, q, x1, y1)
    weights = c.weights
    D1, D2 = c.matrices
    lead = Poly.monomial((0, p - y1, 0))
    d = degree((0, p - y1, 0), weights)
    out = []
    for cand in _signed_candidates(d, weights):
        if not cand or cand == lead or cand == -lead:
            continue
        row = [lead + cand] + D1[0][1:]
        if not any(matmul([row], D2, 3)[0]):
            out.append(str(cand))
    return out

