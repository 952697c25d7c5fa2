"""Exact arithmetic of numerical semigroups.

Everything here works on plain Python integers, so there is no overflow.
The membership table of a semigroup covers ``0 .. frobenius + max(gens)``;
queries beyond that range are answered directly since every integer past
the Frobenius number belongs to the semigroup.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import EmptyInput, ModulusNotInSemigroup, NegativeInput, NonCoprime


def reachable(weights: Sequence[int], bound: int) -> list[bool]:
    """Table ``r`` with ``r[t]`` true iff ``t`` is a non-negative combination
    of ``weights``, for ``0 <= t <= bound``.

    The weights need not be coprime, so this also decides membership in
    submonoids that are not numerical semigroups.
    """
    table = [False] * (bound + 1)
    table[0] = True
    for w in sorted(set(weights)):
        for t in range(w, bound + 1):
            if table[t - w]:
                table[t] = True
    return table


def minimalize(raw: Iterable[int]) -> tuple[int, ...]:
    """Return the minimal generating set of the monoid generated by ``raw``."""
    values = sorted(set(raw))
    if not values:
        raise EmptyInput("generator list is empty")
    if values[0] <= 0:
        raise NegativeInput(f"generators must be positive, got {values[0]}")
    if reduce(gcd, values) != 1:
        raise NonCoprime(f"gcd of {values} is {reduce(gcd, values)}")
    top = values[-1]
    table = [False] * (top + 1)
    table[0] = True
    kept = []
    for g in values:
        if table[g]:
            continue
        kept.append(g)
        for t in range(g, top + 1):
            if table[t - g]:
                table[t] = True
    return tuple(kept)


def _apery_by_residue(gens: Sequence[int], m: int) -> list[int]:
    # Dijkstra on residues mod m: dist[r] is the least element of <gens> = r (mod m).
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens:
            nd, nr = d + g, (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


@dataclass(frozen=True)
class AperySet:
    modulus: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Build instances with :func:`build` or :func:`semigroup`; the constructor
    does not check minimality.
    """

    gens: tuple[int, ...]
    frobenius: int
    table: tuple[bool, ...] = field(repr=False, compare=False)

    @property
    def multiplicity(self) -> int:
        return self.gens[0]

    @property
    def embdim(self) -> int:
        return len(self.gens)

    def __contains__(self, t: int) -> bool:
        return self.contains(t)

    def contains(self, t: int) -> bool:
        if t < 0:
            raise NegativeInput(f"membership asked for negative integer {t}")
        if t > self.frobenius:
            return True
        return self.table[t]

    def gaps(self) -> list[int]:
        return [t for t in range(1, self.frobenius + 1) if not self.table[t]]

    def apery(self, m: int) -> AperySet:
        """Apéry set of ``m``: the least element of each residue class mod ``m``."""
        if m <= 0 or not self.contains(m):
            raise ModulusNotInSemigroup(f"{m} is not a positive element of {self.gens}")
        elements = [w for w in range(self.frobenius + m + 1)
                    if self.contains(w) and (w < m or not self.contains(w - m))]
        return AperySet(m, tuple(elements))

    def pseudo_frobenius(self) -> tuple[int, ...]:
        return tuple(g for g in self.gaps()
                     if all(self.contains(g + a) for a in self.gens))

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def factorizations(self, t: int) -> list[tuple[int, ...]]:
        if t < 0:
            raise NegativeInput(f"cannot factor negative integer {t}")
        return factorizations_over(self.gens, t)

    def is_symmetric(self) -> bool:
        return all(self.contains(t) != self.contains(self.frobenius - t)
                   for t in range(self.frobenius + 1))


def build(gens: Sequence[int]) -> NumericalSemigroup:
    """Build a semigroup from an already minimal, coprime generator list."""
    gens = tuple(sorted(gens))
    if not gens:
        raise EmptyInput("generator list is empty")
    if reduce(gcd, gens) != 1:
        raise NonCoprime(f"gcd of {list(gens)} is {reduce(gcd, gens)}")
    apery = _apery_by_residue(gens, gens[0])
    frobenius = max(apery) - gens[0]
    table = reachable(gens, max(frobenius + gens[-1], 0))
    return NumericalSemigroup(gens, frobenius, tuple(table))


def semigroup(*raw: int) -> NumericalSemigroup:
    """Convenience: ``semigroup(5, 7, 11, 13)``; non-minimal input is reduced."""
    if len(raw) == 1 and not isinstance(raw[0], int):
        raw = tuple(raw[0])
    return build(minimalize(raw))


def factorizations_over(weights: Sequence[int], t: int) -> list[tuple[int, ...]]:
    """All non-negative ``c`` with ``sum(c[i] * weights[i]) == t``.

    Coefficient tuples follow the order of ``weights`` and are returned in
    increasing lexicographic order. Recursion runs over the weights from the
    largest down; the smallest one is solved by division.
    """
    if t < 0:
        return []
    order = sorted(range(len(weights)), key=lambda i: -weights[i])
    n = len(weights)
    out = []
    coeffs = [0] * n

    def walk(k, rest):
        i = order[k]
        w = weights[i]
        if k == n - 1:
            if rest % w == 0:
                coeffs[i] = rest // w
                out.append(tuple(coeffs))
            coeffs[i] = 0
            return
        for c in range(rest // w + 1):
            coeffs[i] = c
            walk(k + 1, rest - c * w)
        coeffs[i] = 0

    if n:
        walk(0, t)
    elif t == 0:
        out.append(())
    out.sort()
    return out
