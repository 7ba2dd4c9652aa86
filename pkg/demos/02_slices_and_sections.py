"""Slice diameters and section radii of a few unit balls."""
from normlab import Lp, Sup, base, basis, nakano_norm
from normlab.probes import SliceSpec, e_alpha_sup, slice_diameter_lb

e1 = basis(base(1))

# the sup ball: every slice has diameter 2
print("sup   ", slice_diameter_lb(Sup(), SliceSpec(e1, 0.1), 8, 100).lower_bound)

# the Euclidean ball: a thin cap, diameter close to 2 sqrt(1 - (1 - eps)^2)
eps = 0.01
r = slice_diameter_lb(Lp(2.0), SliceSpec(e1, eps), 8, 2000)
print("l2    ", r.lower_bound, "vs", 2 * (1 - (1 - eps) ** 2) ** 0.5)

# Nakano: strictly convex, yet the slice through e_1 still gets long as dim grows
for dim in (10, 50, 200):
    print(f"nakano dim={dim:3d}", slice_diameter_lb(nakano_norm(), SliceSpec(e1, 0.1), dim, 200).lower_bound)

# largest residual off e_1 among unit vectors with x(1) > 1 - d
for p in (1.5, 2.0, 4.0):
    for d in (0.05, 0.1):
        u = e_alpha_sup(Lp(p), base(1), d, 16, budget=4)
        print(f"p={p} d={d}  E = {u.E_estimate:.12f}  formula {(1 - (1 - d) ** p) ** (1 / p):.12f}")
