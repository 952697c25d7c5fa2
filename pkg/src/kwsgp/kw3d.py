"""The three-dimensional class KW(p, q, r1, r2, s) and its superclass R(p, q, r1, r2, s).

The base semigroup is ``S = <sp, sq, w>`` with ``w = r1 p + r2 q``. It is
symmetric with Frobenius number ``F = s(pq - p - q) + w(s - 1)``, and every
gap is ``Gamma(x, y, z) = F - x sp - y sq - z w`` for a unique lattice point
with ``x < q`` and ``z < s``. Members adjoin such gaps to ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .errors import DuplicateGenerator, InvalidCorners, NonCoprime, NotAGap
from .presentation import betti_elements
from .semigroup import NumericalSemigroup, build, minimalize

Point = tuple[int, int, int]


@dataclass(frozen=True)
class KW3Params:
    p: int
    q: int
    r1: int
    r2: int
    s: int

    def __post_init__(self):
        if not 1 < self.p < self.q:
            raise InvalidCorners(f"need 1 < p < q, got p={self.p}, q={self.q}")
        if self.r1 < 1 or self.r2 < 1 or self.s < 2:
            raise InvalidCorners("need r1, r2 >= 1 and s >= 2")
        if gcd(self.p, self.q) != 1:
            raise NonCoprime(f"p={self.p} and q={self.q} are not coprime")
        if gcd(self.s, self.w) != 1:
            raise NonCoprime(f"s={self.s} and w={self.w} are not coprime")

    @property
    def w(self) -> int:
        return self.r1 * self.p + self.r2 * self.q

    @property
    def base_generators(self) -> tuple[int, int, int]:
        return (self.s * self.p, self.s * self.q, self.w)

    @property
    def frobenius(self) -> int:
        p, q, s, w = self.p, self.q, self.s, self.w
        return s * (p * q - p - q) + w * (s - 1)

    def gamma(self, x: int, y: int, z: int) -> int:
        sp, sq, w = self.base_generators
        return self.frobenius - x * sp - y * sq - z * w

    def is_strict(self, point: Point) -> bool:
        x, y, z = point
        return 2 * x <= self.q - 4 and 2 * y <= self.p - 4 and z <= self.s - 2

    def in_table_box(self, point: Point) -> bool:
        """Points scanned by :func:`scan_tables`: ``x < q//2``, ``y < p//2``, ``z <= s - 2``."""
        x, y, z = point
        return x < self.q // 2 and y < self.p // 2 and z <= self.s - 2


def parse_params(values: Iterable[int]) -> KW3Params:
    vals = [int(v) for v in values]
    if len(vals) != 5:
        raise InvalidCorners(f"expected p,q,r1,r2,s, got {vals}")
    return KW3Params(*vals)


@dataclass(frozen=True)
class BaseReport:
    S: NumericalSemigroup
    formula_frobenius: int
    frobenius_agrees: bool
    symmetric: bool


def base_semigroup(params: KW3Params) -> BaseReport:
    S = build(minimalize(params.base_generators))
    return BaseReport(S, params.frobenius, S.frobenius == params.frobenius, S.is_symmetric())


def _base(params: KW3Params) -> NumericalSemigroup:
    return base_semigroup(params).S


@dataclass(frozen=True)
class GapPoint:
    x: int
    y: int
    z: int
    in_box: bool  # y < p as well, i.e. (x, y, z) < (q, p, s) componentwise

    @property
    def point(self) -> Point:
        return (self.x, self.y, self.z)


def gap_rep(params: KW3Params, t: int, S: Optional[NumericalSemigroup] = None) -> GapPoint:
    """The lattice point of a gap ``t`` of the base semigroup.

    Normal form ``x < q``, ``z < s`` with ``y`` free; found by exhaustive
    search over that range, which must return exactly one solution.
    """
    S = S or _base(params)
    if t < 0 or S.contains(t):
        raise NotAGap(f"{t} is not a gap of {S.gens}")
    sp, sq, w = params.base_generators
    F = params.frobenius
    hits = []
    for z in range(params.s):
        for x in range(params.q):
            rest = F - t - x * sp - z * w
            if rest >= 0 and rest % sq == 0:
                hits.append((x, rest // sq, z))
    if len(hits) != 1:
        raise AssertionError(f"gap {t} has {len(hits)} normal-form points: {hits}")
    x, y, z = hits[0]
    return GapPoint(x, y, z, y < params.p)


def canonical_points_below_plane(params: KW3Params) -> list[Point]:
    """Normal-form points with ``Gamma >= 0`` (equivalently strictly under the plane through F)."""
    sp, sq, w = params.base_generators
    F = params.frobenius
    out = []
    for z in range(params.s):
        for x in range(params.q):
            rest = F - x * sp - z * w
            if rest < 0:
                continue
            out.extend((x, y, z) for y in range(rest // sq + 1))
    return sorted(out)


@dataclass(frozen=True)
class KW3Semigroup:
    params: KW3Params
    points: tuple[Point, ...]
    H: NumericalSemigroup
    strict_class: bool

    @property
    def adjoined(self) -> tuple[int, ...]:
        return tuple(self.params.gamma(*pt) for pt in self.points)

    @property
    def embdim(self) -> int:
        return self.H.embdim


def build_kw3(params: KW3Params, points: Iterable[Point], extra: Iterable[int] = ()) -> KW3Semigroup:
    """``<sp, sq, w>`` with the gaps at ``points`` (and the raw gaps ``extra``) adjoined.

    Every adjoined element must be a gap of ``S`` and the result must keep all
    generators minimal.
    """
    S = _base(params)
    points = tuple(tuple(int(c) for c in pt) for pt in points)
    hs = [params.gamma(*pt) for pt in points] + list(extra)
    for pt, h in zip(points, hs):
        if min(pt) < 0:
            raise InvalidCorners(f"point {pt} has a negative coordinate")
    for h in hs:
        if h < 0 or S.contains(h):
            raise NotAGap(f"{h} is not a gap of {S.gens}")
    raw = list(params.base_generators) + hs
    if len(set(raw)) != len(raw):
        raise DuplicateGenerator(f"repeated generator in {raw}")
    gens = minimalize(raw)
    if len(gens) != len(raw):
        dropped = sorted(set(raw) - set(gens))
        raise DuplicateGenerator(f"{dropped} generated by the others in {sorted(raw)}")
    strict = all(params.is_strict(pt) for pt in points)
    if extra:
        strict = strict and all(params.is_strict(gap_rep(params, h, S).point) for h in extra)
    return KW3Semigroup(params, points, build(gens), strict)


@dataclass(frozen=True)
class AperyReport:
    generators: tuple[int, ...]
    intersection: tuple[int, ...]
    strict_class: bool

    @property
    def ok(self) -> bool:
        return self.generators == self.intersection


def verify_apery_characterization(K: KW3Semigroup) -> AperyReport:
    """Compare the adjoined minimal generators with ``Ap(sp) & Ap(sq) & Ap(w)`` minus 0."""
    H = K.H
    sp, sq, w = K.params.base_generators
    common = set(H.apery(sp).elements) & set(H.apery(sq).elements) & set(H.apery(w).elements)
    common.discard(0)
    gens = tuple(sorted(set(H.gens) - {sp, sq, w}))
    return AperyReport(gens, tuple(sorted(common)), K.strict_class)


@dataclass(frozen=True)
class Type3Report:
    point: Point
    h: int
    strict: bool
    p_x: int
    p_y: int
    p_z: int
    p_z_in_H: bool
    predicted_pf: tuple[int, ...]
    actual_pf: tuple[int, ...]

    @property
    def applicable(self) -> bool:
        return self.strict and not self.p_z_in_H

    @property
    def agrees(self) -> bool:
        return self.predicted_pf == self.actual_pf

    @property
    def status(self) -> str:
        if not self.applicable:
            return "not-applicable"
        return "pass" if self.agrees else "fail"


def type3_theorem(params: KW3Params, point: Point) -> Type3Report:
    """Predicted ``PF = {p_x, p_y, p_z}`` against the brute-force pseudo-Frobenius set."""
    K = build_kw3(params, [point])
    x, y, z = point
    F = params.frobenius
    sp, sq, w = params.base_generators
    px, py, pz = F - (x + 1) * sp, F - (y + 1) * sq, F - (z + 1) * w
    return Type3Report(
        point=tuple(point), h=params.gamma(*point), strict=K.strict_class,
        p_x=px, p_y=py, p_z=pz, p_z_in_H=K.H.contains(pz),
        predicted_pf=tuple(sorted({px, py, pz})), actual_pf=K.H.pseudo_frobenius(),
    )


def single_points(params: KW3Params, strict_only: bool = False) -> list[Point]:
    """Lattice points of the scan box (or the strict box) whose gap gives a 4-generated member."""
    S = _base(params)
    pred = params.is_strict if strict_only else params.in_table_box
    out = []
    for x in range(params.q):
        for y in range(params.p):
            for z in range(params.s):
                pt = (x, y, z)
                if not pred(pt):
                    continue
                h = params.gamma(*pt)
                if h < 0 or S.contains(h):
                    continue
                try:
                    build_kw3(params, [pt])
                except DuplicateGenerator:
                    continue
                out.append(pt)
    return out


@dataclass(frozen=True)
class TableRow:
    h: int
    point: Point
    type: int
    mu: int


def scan_single(params: KW3Params) -> list[TableRow]:
    """``(h, t(H), mu(I_H))`` for every single gap in the table box, sorted by ``h``."""
    rows = []
    for pt in single_points(params):
        K = build_kw3(params, [pt])
        rows.append(TableRow(params.gamma(*pt), pt, K.H.type, betti_elements(K.H).mu))
    return sorted(rows, key=lambda r: r.h)


def scan_pairs(params: KW3Params, first: int) -> list[TableRow]:
    """``(h', t, mu)`` for ``<sp, sq, w, first, h'>`` over ``h'`` in the table box.

    ``h'`` must be a gap of ``<sp, sq, w, first>`` and all five generators
    must stay minimal.
    """
    S = _base(params)
    base = build(minimalize(list(params.base_generators) + [first]))
    rows = []
    for pt in single_points(params):
        h = params.gamma(*pt)
        if h == first or base.contains(h):
            continue
        raw = list(params.base_generators) + [first, h]
        gens = minimalize(raw)
        if len(gens) != len(raw):
            continue
        H = build(gens)
        rows.append(TableRow(h, pt, H.type, betti_elements(H).mu))
    del S
    return sorted(rows, key=lambda r: r.h)


def scan_tables(params: KW3Params, first: Optional[int] = None) -> dict:
    """Single-gap table and, when ``first`` is given, the two-gap table over it."""
    out = {"single": scan_single(params)}
    if first is not None:
        out["pairs"] = scan_pairs(params, first)
    return out
