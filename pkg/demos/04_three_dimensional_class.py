# %% [markdown]
# # The class KW(p, q, r1, r2, s)
# Gaps of <sp, sq, w> as lattice points, the type-3 prediction and the
# type / mu tables over R(5, 7, 2, 1, 3).

# %%
from kwsgp.kw3d import (KW3Params, base_semigroup, build_kw3, canonical_points_below_plane,
                        gap_rep, scan_tables, type3_theorem, verify_apery_characterization)

P = KW3Params(9, 11, 2, 1, 4)
base = base_semigroup(P)
print("S =", base.S.gens, "F =", base.S.frobenius, "formula", base.formula_frobenius,
      "symmetric", base.symmetric)
print("gap lattice points:", len(canonical_points_below_plane(P)), "gaps:", len(base.S.gaps()))
print("221 ->", gap_rep(P, 221).point)

# %% Type three when p_z is a gap
r = type3_theorem(P, (1, 2, 2))
print("predicted", r.predicted_pf, "actual", r.actual_pf, r.status)
print(verify_apery_characterization(build_kw3(P, [(1, 2, 2)])))
r = type3_theorem(KW3Params(9, 11, 2, 1, 3), (3, 1, 1))
print("p_z =", r.p_z, "in H:", r.p_z_in_H, "actual PF", r.actual_pf)

# %% Tables
t = scan_tables(KW3Params(5, 7, 2, 1, 3), 73)
print("h  type  mu")
for row in t["single"]:
    print(f"{row.h:3} {row.type:4} {row.mu:4}")
print("h'  mu over <15,21,17,73>")
for row in t["pairs"]:
    print(f"{row.h:3} {row.mu:4}")
