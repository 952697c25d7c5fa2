# %% [markdown]
# # Numerical semigroup invariants
# Membership, gaps, Apery sets and pseudo-Frobenius numbers for a few small
# semigroups, checked against the closed formulas for two generators.

# %%
from kwsgp.semigroup import semigroup

H = semigroup(5, 7, 11, 13)
print("generators", H.gens)
print("frobenius", H.frobenius, "gaps", H.gaps())
print("Ap(H, 5)", H.apery(5).elements)
print("PF", H.pseudo_frobenius(), "type", H.type)

# %% Two generators: F = pq - p - q and (p-1)(q-1)/2 gaps, always symmetric
for p, q in [(3, 5), (5, 7), (8, 13), (11, 15)]:
    G = semigroup(p, q)
    print(p, q, G.frobenius == p * q - p - q, len(G.gaps()) == (p - 1) * (q - 1) // 2,
          G.is_symmetric())

# %% Redundant input is reduced to the minimal generators
print(semigroup(15, 21, 17, 35, 52).gens)

# %% Factorizations of 35 in <5, 7, 11, 13>, lexicographic
for f in H.factorizations(35):
    print(f)
