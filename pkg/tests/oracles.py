"""Slow, definition-level oracles that share no code with the library."""

from itertools import combinations, product
from math import gcd
from functools import reduce


def members_upto(gens, bound):
    """Set of semigroup elements <= bound by breadth-first closure."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a + g
                if b <= bound and b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def frobenius_naive(gens):
    """Largest gap, searching until min(gens) consecutive members appear."""
    assert reduce(gcd, gens) == 1
    m = min(gens)
    bound = 2 * max(gens) * m + 10
    while True:
        S = members_upto(gens, bound)
        run, last_gap = 0, -1
        for t in range(bound + 1):
            if t in S:
                run += 1
                if run == m:
                    return last_gap
            else:
                run, last_gap = 0, t
        bound *= 2


def pf_naive(gens):
    F = frobenius_naive(gens)
    S = members_upto(gens, 2 * F + 2)
    return sorted(g for g in range(F + 1) if g not in S
                  and all(g + s in S for s in S if 0 < s <= F + 1))


def koszul_mu(gens):
    """Minimal presentation size from the squarefree-divisor complexes.

    Degree t contributes (#components of the graph on {i : t - a_i in H} with
    edges {i, j : t - a_i - a_j in H}) - 1.
    """
    F = frobenius_naive(gens)
    top = F + 2 * max(gens) + 1
    S = members_upto(gens, top + max(gens))
    total = 0
    for t in range(1, top):
        if t not in S:
            continue
        verts = [i for i, a in enumerate(gens) if t - a in S]
        comp = {i: i for i in verts}

        def find(a):
            while comp[a] != a:
                a = comp[a]
            return a

        for i in verts:
            for j in verts:
                if i < j and t - gens[i] - gens[j] in S:
                    comp[find(i)] = find(j)
        total += max(len({find(i) for i in verts}) - 1, 0)
    return total


def kw_members_naive(p, q):
    """KW(p, q) as generator sets, straight from the staircase definition."""
    out = set()
    for k in range(0, min(q // 2, p // 2) + 1):
        for xs in combinations(range(1, q // 2 + 1), k):
            for ys in combinations(range(1, p // 2 + 1), k):
                hs = [p * q - x * p - y * q for x, y in zip(xs, reversed(ys))]
                out.add(minimal_naive({p, q, *hs}))
    return out


def minimal_naive(gens):
    gens = sorted(gens)
    return tuple(g for g in gens if g not in members_upto([h for h in gens if h != g], g))


def lattice_paths(pq, ph):
    """All monotone D/R words with ph D's and pq R's."""
    for word in product("DR", repeat=pq + ph):
        if word.count("D") == ph:
            yield "".join(word)
