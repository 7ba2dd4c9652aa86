"""The renorming of a base space plus c_0: strict convexity and almost squareness."""
import numpy as np

from normlab import Lp, Sup, SparseVector, z_norm, zinf_norm
from normlab.probes import asq_witness, phi_strictness_probe
from normlab.scenarios import random_unit_z

b = Lp(2.0)
rng = np.random.default_rng(1)

# the new norm sits between the direct-sum norm and twice it
for _ in range(5):
    z = SparseVector.from_parts(rng.uniform(-1, 1, 30), rng.uniform(-1, 1, 30))
    print(f"{zinf_norm(b, z):.6f} <= {z_norm(b, z):.6f} <= {2 * zinf_norm(b, z):.6f}")

# the gauge function is strictly convex over a strictly convex base...
print("Lp(2) base:", type(phi_strictness_probe(b, 2000)).__name__)
# ...and the flat pieces of the sup ball show through
w = phi_strictness_probe(Sup(), 100)
print("Sup base:  ", type(w).__name__, "gap", w.gap)

# almost squareness: one far tail vector moves every point by at most eps
points = [random_unit_z(rng, b, 30, 30) for _ in range(5)]
h = asq_witness(b, points, 0.01, dim=100_000)
print("h lives on", h.support(), "|||h||| =", z_norm(b, h))
print("max |||z_i + h||| =", max(z_norm(b, z + h) for z in points))
