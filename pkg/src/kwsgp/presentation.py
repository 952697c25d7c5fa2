"""Defining ideals of KW semigroup rings as sets of binomials.

Three routes to the ideal ``I_H``:

* the explicit binomial list of Kunz and Waldi (:func:`appendix_generators`);
* 2x2 minors of the 2x3 matrices ``A_ij``, ``B``, ``C``
  (:func:`determinantal_matrices`);
* an independent count of minimal generators from factorization graphs
  (:func:`betti_elements`), valid for any numerical semigroup.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import InvalidCorners, TheoremViolation
from .kw2d import KWCorners, build_kw
from .poly import Binomial, Monomial, degree, mono
from .principal import principal_matrix_bruteforce
from .semigroup import NumericalSemigroup, build, minimalize


def _require_corners(c: KWCorners) -> None:
    if not c.corners:
        raise InvalidCorners("need at least one corner (embedding dimension >= 3)")


def _u(n: int, *indices: int) -> Monomial:
    """Product of the adjoined variables ``u_{i+1}`` for 0-based ``indices``."""
    exps = [0] * n
    for i in indices:
        exps[2 + i] += 1
    return tuple(exps)


def appendix_generators(c: KWCorners) -> list[Binomial]:
    """``f_ij`` (i <= j), ``g_i``, and the two boundary binomials."""
    _require_corners(c)
    p, q = c.params.p, c.params.q
    xs = [x for x, _ in c.corners]
    ys = [y for _, y in c.corners]
    k = len(c.corners)
    n = k + 2
    w = c.generators
    out = []
    for i in range(k):
        for j in range(i, k):
            out.append(Binomial.make(_u(n, i, j),
                                     mono(n, u=q - xs[i] - xs[j], v=p - ys[i] - ys[j]), w))
    for i in range(k - 1):
        out.append(Binomial.make(mono(n, v=ys[i] - ys[i + 1], **{f"u{i + 1}": 1}),
                                 mono(n, u=xs[i + 1] - xs[i], **{f"u{i + 2}": 1}), w))
    out.append(Binomial.make(mono(n, v=p - ys[0]), mono(n, u=xs[0], u1=1), w))
    out.append(Binomial.make(mono(n, v=ys[-1], **{f"u{k}": 1}), mono(n, u=q - xs[-1]), w))
    return out


@dataclass(frozen=True)
class DetMatrix:
    label: str
    rows: tuple[tuple[Monomial, Monomial, Monomial], tuple[Monomial, Monomial, Monomial]]

    def minor(self, a: int, b: int, weights: Sequence[int]) -> Binomial | None:
        (r0, r1) = self.rows
        left = tuple(x + y for x, y in zip(r0[a], r1[b]))
        right = tuple(x + y for x, y in zip(r0[b], r1[a]))
        if left == right:
            return None
        return Binomial.make(left, right, weights)

    def minors(self, weights: Sequence[int]) -> dict[tuple[int, int], Binomial | None]:
        return {(a, b): self.minor(a, b, weights) for a, b in combinations(range(3), 2)}


def determinantal_matrices(c: KWCorners) -> list[DetMatrix]:
    """``A_ij`` for ``i < j``, then ``B`` and ``C`` (indices are 1-based in labels)."""
    _require_corners(c)
    p, q = c.params.p, c.params.q
    xs = [x for x, _ in c.corners]
    ys = [y for _, y in c.corners]
    k = len(c.corners)
    n = k + 2

    def U(i):
        return _u(n, i)

    mats = []
    for i, j in combinations(range(k), 2):
        mats.append(DetMatrix(f"A{i + 1}{j + 1}", (
            (U(i), mono(n, u=q - 2 * xs[j], v=p - ys[i] - ys[j]), U(j)),
            (mono(n, u=xs[j] - xs[i]), U(j), mono(n, v=ys[i] - ys[j])),
        )))
    last = k - 1
    mats.append(DetMatrix("B", (
        (mono(n, v=ys[last]), mono(n, u=q - xs[0] - xs[last]), U(0)),
        (mono(n, u=xs[0]), U(last), mono(n, v=p - ys[0] - ys[last])),
    )))
    mats.append(DetMatrix("C", (
        (mono(n, u=q - xs[0] - xs[last], v=p - 2 * ys[0]), U(0), U(last)),
        (U(0), mono(n, u=xs[last] - xs[0]), mono(n, v=ys[0] - ys[last])),
    )))
    return mats


def all_minors(c: KWCorners) -> set[Binomial]:
    """Nonzero 2x2 minors of every determinantal matrix, up to sign."""
    w = c.generators
    return {b for m in determinantal_matrices(c) for b in m.minors(w).values() if b is not None}


def critical_binomials(H) -> list[Binomial]:
    """One binomial per row of the brute-force principal matrix."""
    P = principal_matrix_bruteforce(H)
    out = []
    for row in P.entries:
        lead = tuple(-a if a < 0 else 0 for a in row)
        rest = tuple(a if a > 0 else 0 for a in row)
        out.append(Binomial.make(lead, rest, P.gens))
    return out


@dataclass(frozen=True)
class BettiReport:
    elements: tuple[tuple[int, int], ...]  # (degree, new generators)
    mu: int

    @property
    def degrees(self) -> Counter:
        return Counter({d: k for d, k in self.elements})


def _components(facts: list[tuple[int, ...]]) -> int:
    parent = list(range(len(facts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    first_with = {}
    for idx, f in enumerate(facts):
        for var, e in enumerate(f):
            if not e:
                continue
            if var in first_with:
                ra, rb = find(idx), find(first_with[var])
                if ra != rb:
                    parent[ra] = rb
            else:
                first_with[var] = idx
    return len({find(i) for i in range(len(facts))})


def betti_elements(H) -> BettiReport:
    """Degrees of a minimal presentation and their multiplicities.

    At degree ``t`` the factorizations form a graph, two being adjacent when
    they share a generator in their supports; ``t`` needs ``components - 1``
    new relations. Past ``F + min + max`` every factorization links to one
    using the smallest generator, so the scan stops there.
    """
    if not isinstance(H, NumericalSemigroup):
        H = build(minimalize(H))
    if H.embdim < 2:
        return BettiReport((), 0)
    elements = []
    for t in range(1, H.frobenius + H.gens[0] + H.gens[-1] + 1):
        if not H.contains(t):
            continue
        facts = H.factorizations(t)
        if len(facts) < 2:
            continue
        extra = _components(facts) - 1
        if extra:
            elements.append((t, extra))
    return BettiReport(tuple(elements), sum(k for _, k in elements))


@dataclass(frozen=True)
class PresentationReport:
    corners: KWCorners
    n: int
    mu: int
    type: int
    appendix_degrees: tuple[int, ...]
    betti: BettiReport
    minors_contain_appendix: bool
    minors_homogeneous: bool
    minor_set_equals_appendix: bool
    extra_minors: tuple[Binomial, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return (self.mu == comb(self.n, 2) and self.type == self.n - 1
                and self.minors_contain_appendix and self.minors_homogeneous
                and Counter(self.appendix_degrees) == self.betti.degrees)


def verify_kw_presentation(c: KWCorners) -> PresentationReport:
    """Check the count and type statement for one KW member.

    The determinantal check is at the level of ideals: every appendix
    binomial is a minor, and every minor is homogeneous (hence lies in the
    toric ideal). Literal set equality of the two lists is reported
    separately because it only holds for n <= 4.
    """
    H = build_kw(c)
    betti = betti_elements(H)
    if c.corners:
        appendix = appendix_generators(c)
        minors = all_minors(c)
        contains = set(appendix) <= minors
        homogeneous = True  # Binomial.make raises otherwise
        extra = tuple(sorted(minors - set(appendix), key=lambda b: (b.degree, b.plus)))
        app_degrees = tuple(sorted(b.degree for b in appendix))
    else:
        # <p, q>, <p/2, q>, <p, q/2>: a single relation
        a, b = H.gens
        contains, homogeneous, extra = True, True, ()
        app_degrees = (a * b,)
    report = PresentationReport(
        corners=c, n=H.embdim, mu=betti.mu, type=H.type,
        appendix_degrees=app_degrees, betti=betti,
        minors_contain_appendix=contains, minors_homogeneous=homogeneous,
        minor_set_equals_appendix=not extra, extra_minors=extra,
    )
    if not report.ok:
        raise TheoremViolation(f"presentation check failed for {c}", report)
    return report
