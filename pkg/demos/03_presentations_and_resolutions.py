# %% [markdown]
# # Defining ideals and free resolutions
# Minimal presentations from factorization graphs, the determinantal
# description, and explicit resolutions in embedding dimension 3 and 4.

# %%
from math import comb

from kwsgp.kw2d import KWParams, build_kw, enumerate_kw, kw_corners
from kwsgp.presentation import all_minors, appendix_generators, betti_elements
from kwsgp.resolution import REPAIRS, resolution_ed3, resolution_ed4, verify_complex

c = kw_corners(KWParams(5, 7), [(2, 2), (3, 1)])
b = betti_elements(c.generators)
print("Betti elements", b.elements, "mu", b.mu)
for g in appendix_generators(c):
    print("  ", g, "degree", g.degree)

# %% mu = C(n, 2) and type n - 1 except for corners on the boundary line
for pq in [(7, 9), (8, 9)]:
    for m in enumerate_kw(KWParams(*pq)):
        if m.corners:
            H = build_kw(m)
            mu = betti_elements(H).mu
            if mu != comb(m.n, 2) or H.type != m.n - 1:
                print(f"  {pq} corners {m.corners}: n={m.n} mu={mu} type={H.type}")

# %% In embedding dimension 5 the minors generate the ideal but include extra binomials
c5 = kw_corners(KWParams(7, 11), [(3, 3), (4, 2), (5, 1)])
extra = all_minors(c5) - set(appendix_generators(c5))
print(len(extra), "extra minors, e.g.", next(iter(extra)))

# %% Resolutions
print(resolution_ed3(5, 7, 2, 2).to_text())
cx = resolution_ed4(5, 7, [(2, 2), (3, 1)])
print("ranks", cx.ranks, "shifts", cx.shifts, verify_complex(cx))
print(len(REPAIRS), "printed entries corrected; see REPAIRS.md")
print("general form used for", resolution_ed4(7, 11, [(1, 3), (3, 1)]).form)
