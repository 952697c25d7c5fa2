"""The Kunz-Waldi class KW(p, q) and its lattice-path description.

A member is fixed by corner points ``(x_i, y_i)`` with ``0 < x_1 < ... ``,
``y_1 > ... > 0``, ``2 x_i <= q`` and ``2 y_i <= p``; the adjoined generators
are ``h_i = pq - x_i p - y_i q``. Two corner sets of the even-parameter case
collapse to the two-generated semigroups ``<p/2, q>`` and ``<p, q/2>``; those
are stored as a separate ``halved`` variant with no corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd
from typing import Optional

from .errors import InvalidCorners, NonCoprime, NotMinimal
from .semigroup import NumericalSemigroup, build, minimalize


@dataclass(frozen=True)
class KWParams:
    p: int
    q: int

    def __post_init__(self):
        if not 3 <= self.p < self.q:
            raise InvalidCorners(f"need 3 <= p < q, got p={self.p}, q={self.q}")
        if gcd(self.p, self.q) != 1:
            raise NonCoprime(f"p={self.p} and q={self.q} are not coprime")

    @property
    def r(self) -> int:
        if self.p % 2 == 0:
            return self.p // 2
        if self.q % 2 == 0:
            return self.q // 2
        return (self.p + self.q) // 2

    @property
    def p_half(self) -> int:
        return self.p // 2

    @property
    def q_half(self) -> int:
        return self.q // 2


@dataclass(frozen=True)
class KWCorners:
    params: KWParams
    corners: tuple[tuple[int, int], ...] = ()
    halved: Optional[str] = None  # 'p' for <p/2, q>, 'q' for <p, q/2>

    @property
    def n(self) -> int:
        """Embedding dimension of the member."""
        return 2 + len(self.corners)

    @property
    def lattice_corners(self) -> tuple[tuple[int, int], ...]:
        """Corners of the lattice path; a halved member keeps the corner it came from."""
        p, q = self.params.p, self.params.q
        if self.halved == "p":
            return (((q - 1) // 2, p // 2),)
        if self.halved == "q":
            return ((q // 2, (p - 1) // 2),)
        return self.corners

    @property
    def hs(self) -> tuple[int, ...]:
        return tuple(gap_value(self.params, x, y) for x, y in self.corners)

    @property
    def generators(self) -> tuple[int, ...]:
        """Generators in the order ``(p, q, h_1, ..., h_{n-2})``."""
        p, q = self.params.p, self.params.q
        if self.halved == "p":
            return (p // 2, q)
        if self.halved == "q":
            return (p, q // 2)
        return (p, q) + self.hs


def gap_value(params: KWParams, x: int, y: int) -> int:
    return params.p * params.q - x * params.p - y * params.q


def _degenerate(params: KWParams, corners) -> Optional[str]:
    p, q = params.p, params.q
    if len(corners) != 1:
        return None
    if p % 2 == 0 and corners[0] == ((q - 1) // 2, p // 2):
        return "p"
    if q % 2 == 0 and corners[0] == (q // 2, (p - 1) // 2):
        return "q"
    return None


def kw_corners(params: KWParams, corners) -> KWCorners:
    """Validate corner data and return the member it describes."""
    corners = tuple(sorted((int(x), int(y)) for x, y in corners))
    p, q = params.p, params.q
    for x, y in corners:
        if x <= 0 or y <= 0:
            raise InvalidCorners(f"corner {(x, y)} must have positive coordinates")
        if 2 * x > q or 2 * y > p:
            raise InvalidCorners(f"corner {(x, y)} violates 2x <= {q}, 2y <= {p}")
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        if x0 == x1 or y0 <= y1:
            raise InvalidCorners(f"corners {corners} are not a staircase")
    halved = _degenerate(params, corners)
    if halved:
        return KWCorners(params, (), halved)
    return KWCorners(params, corners)


def build_kw(c: KWCorners) -> NumericalSemigroup:
    gens = c.generators
    minimal = minimalize(gens)
    if sorted(gens) != list(minimal):
        raise NotMinimal(f"{gens} reduces to {minimal}")
    return build(minimal)


def enumerate_kw(params: KWParams) -> list[KWCorners]:
    """Every member of KW(p, q), lexicographic in the corner tuple.

    The halved members sit at the position of the corner set they replace.
    """
    xs = range(1, params.q_half + 1)
    ys = range(1, params.p_half + 1)
    keyed = []
    for k in range(min(len(xs), len(ys)) + 1):
        for xsel in combinations(xs, k):
            for ysel in combinations(ys, k):
                corners = tuple(zip(xsel, reversed(ysel)))
                keyed.append((corners, kw_corners(params, corners)))
    keyed.sort(key=lambda kv: kv[0])
    return [member for _, member in keyed]


def family_size(params: KWParams) -> int:
    return comb(params.p_half + params.q_half, params.p_half)


def max_embdim(params: KWParams) -> int:
    return 2 + params.p_half


def is_kw(H: NumericalSemigroup, params: KWParams) -> Optional[KWCorners]:
    """Recover the corner data of ``H`` in KW(p, q), or None."""
    p, q = params.p, params.q
    gens = set(H.gens)
    if p % 2 == 0 and gens == {p // 2, q}:
        return KWCorners(params, (), "p")
    if q % 2 == 0 and gens == {p, q // 2}:
        return KWCorners(params, (), "q")
    if not {p, q} <= gens:
        return None
    corners = []
    for h in sorted(gens - {p, q}):
        hit = [(x, y) for x in range(1, params.q_half + 1)
               for y in range(1, params.p_half + 1) if gap_value(params, x, y) == h]
        if len(hit) != 1:
            return None
        corners.append(hit[0])
    try:
        return kw_corners(params, corners)
    except InvalidCorners:
        return None


@dataclass(frozen=True)
class LatticePath:
    """Unit-step staircase from ``(0, p')`` down to ``(q', 0)``.

    ``steps`` is a string of ``R`` (x + 1) and ``D`` (y - 1) moves.
    """

    start: tuple[int, int]
    steps: str
    corners: tuple[tuple[int, int], ...]

    def points(self) -> list[tuple[int, int]]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "R":
                x += 1
            else:
                y -= 1
            pts.append((x, y))
        return pts


def render_path(c: KWCorners) -> LatticePath:
    p_half, q_half = c.params.p_half, c.params.q_half
    steps = []
    x, y = 0, p_half
    for cx, cy in c.lattice_corners:
        steps.append("D" * (y - cy))
        steps.append("R" * (cx - x))
        x, y = cx, cy
    steps.append("D" * y)
    steps.append("R" * (q_half - x))
    return LatticePath((0, p_half), "".join(steps), c.lattice_corners)


def path_corners(path: LatticePath) -> tuple[tuple[int, int], ...]:
    """Points where a right step is followed by a down step."""
    pts = path.points()
    return tuple(pts[i + 1] for i in range(len(path.steps) - 1)
                 if path.steps[i] == "R" and path.steps[i + 1] == "D")
