"""Luxemburg gauges of two modulars, compared with closed forms."""
import numpy as np

from normlab import SparseVector, base, basis, eval_norm, indicator, nakano_norm, orlicz_norm
from normlab.certificates import hM_sn_norm

nak = nakano_norm()
orl = orlicz_norm()

# unit vectors have norm one in both
print("||e_1||      nakano", eval_norm(nak, basis(base(1))))
print("||e_1||      orlicz", eval_norm(orl, basis(base(1))))

# two-coordinate indicator: the Nakano exponent 4 on coordinate 2 keeps it well below 2
print("||e_1+e_2||  nakano", eval_norm(nak, basis(base(1)) + basis(base(2))))

# indicators grow like log n in the Orlicz space
for n in (4, 10, 100, 1000, 10_000):
    s = indicator(base(i) for i in range(1, n + 1))
    print(f"n={n:6d}  solver {eval_norm(orl, s):.15f}  closed form {hM_sn_norm(n):.15f}")

# ...but stay bounded by sqrt(2) in the Nakano space
for n in (10, 100, 500):
    s = indicator(base(i) for i in range(1, n + 1))
    print(f"n={n:4d}  nakano {eval_norm(nak, s):.12f}")

# random vectors, as a sanity check that the gauge is homogeneous
rng = np.random.default_rng(0)
v = SparseVector.dense(rng.uniform(-1, 1, 8))
print("||3v|| / ||v||", eval_norm(orl, 3 * v) / eval_norm(orl, v))
