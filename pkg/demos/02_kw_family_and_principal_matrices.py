# %% [markdown]
# # The family KW(p, q) and its principal matrices
# Every member is a staircase path in the q' x p' box. For each member the
# closed-form matrix is compared with an exhaustive search.

# %%
from collections import Counter

from kwsgp.kw2d import KWParams, enumerate_kw, family_size, render_path
from kwsgp.principal import principal_matrix_bruteforce, recover_generators, verify_theorem31

params = KWParams(5, 7)
members = enumerate_kw(params)
print(f"KW(5,7): {len(members)} members (binomial count {family_size(params)})")
for m in members:
    print(f"  corners {m.lattice_corners!s:18} path {render_path(m).steps:6} generators {m.generators}")

# %% The example member <5, 7, 11, 13>
m = next(m for m in members if m.corners == ((2, 2), (3, 1)))
rep = verify_theorem31(m)
print("case", rep.case)
for row in rep.closed_form.entries:
    print("  ", row)
print("diagonal agrees:", rep.diagonal_agrees, " exact match:", rep.exact_match)

# %% Even parameters exercise the exceptional matrices
for pq in [(8, 9), (9, 10)]:
    tags = Counter(verify_theorem31(m).case for m in enumerate_kw(KWParams(*pq)) if m.corners)
    print(pq, dict(tags))

# %% Generators come back from the adjugate of the principal matrix
P = principal_matrix_bruteforce((7, 11, 23, 27, 31))
print(recover_generators(P))
