import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from normlab.modulars import Nakano, OrliczM, PhiSum, nakano_eval, orliczM, orlicz_eval, phi_sum_eval
from normlab.norms import L1, Lp, Sup
from normlab.vectors import Order, SparseVector, abs_leq, base, basis, indicator, tail

import oracles


def test_nakano_examples():
    assert nakano_eval(basis(base(1))) == 1.0
    assert nakano_eval(basis(base(1)) + basis(base(2))) == 2.0
    assert nakano_eval(0.5 * basis(base(2))) == 0.0625


def test_nakano_exponent_follows_index():
    # a lone coordinate 3 carries exponent 6, not 2
    assert nakano_eval(0.5 * basis(tail(3))) == 0.5 ** 6


def test_orliczM_examples():
    assert orliczM(0.0) == 0.0
    assert orliczM(0.5) == pytest.approx(0.25, abs=1e-15)
    assert 0.25 * math.e ** 2 * math.exp(-2.0) == pytest.approx(0.25, abs=1e-15)
    assert orliczM(1.0) == 1.0
    with pytest.raises(ValueError):
        orliczM(-0.1)


def test_orliczM_underflow_floor():
    assert orliczM(1e-3) == 0.0
    assert orliczM(0.01) > 0.0


def test_orliczM_matches_oracle():
    for t in np.linspace(0, 3, 301):
        assert orliczM(t) == pytest.approx(oracles.orlicz_m(float(t)), rel=1e-14, abs=1e-300)


@settings(max_examples=300)
@given(st.floats(0.001, 2.0), st.floats(0.001, 2.0))
def test_orliczM_strictly_convex(a, b):
    if abs(a - b) < 1e-3:
        return
    assert (orliczM(a) + orliczM(b)) / 2 - orliczM((a + b) / 2) > 0


def test_orlicz_eval_examples():
    assert orlicz_eval(basis(base(1))) == 1.0
    for n in (1, 5, 17):
        assert orlicz_eval(indicator(base(i) for i in range(1, n + 1))) == n
    assert orlicz_eval(indicator(base(i) for i in range(1, 5)) / 2) == pytest.approx(1.0, abs=1e-15)


def test_phi_sum_examples():
    b = Lp(2.0)
    assert phi_sum_eval(SparseVector(), b) == 0.0
    assert phi_sum_eval(basis(base(4)), b) == 1.0
    # sup norm 1/2 with full tail support stays below 1/2 + 1/3
    for N in (5, 50, 500):
        z = SparseVector({base(1): 0.5, **{tail(n): 0.5 for n in range(1, N + 1)}})
        val = phi_sum_eval(z, L1())
        assert val <= 0.5 + 1.0 / 3.0
    z = SparseVector({tail(n): 0.5 for n in range(1, 60)})
    assert phi_sum_eval(z, b) == pytest.approx(1.0 / 3.0, rel=1e-12)


MODULARS = [Nakano(), OrliczM(), PhiSum(Lp(2.0)), PhiSum(Sup()), PhiSum(L1())]


def _rand_vec(rng, n=4):
    return SparseVector.from_parts(rng.uniform(-1.5, 1.5, n), rng.uniform(-1.5, 1.5, n))


@pytest.mark.parametrize("m", MODULARS, ids=lambda m: type(m).__name__)
def test_midpoint_convexity_sampled(m):
    rng = np.random.default_rng(1)
    for _ in range(10_000 if not isinstance(m, PhiSum) else 2_000):
        u, v = _rand_vec(rng), _rand_vec(rng)
        mid = m((u + v) * 0.5)
        assert mid <= (m(u) + m(v)) / 2 + 1e-12 * max(1.0, m(u) + m(v))


@pytest.mark.parametrize("m", MODULARS, ids=lambda m: type(m).__name__)
def test_sign_symmetry_and_monotone(m):
    rng = np.random.default_rng(2)
    for _ in range(500):
        v = _rand_vec(rng)
        assert m(v) == m(-v)
        u = SparseVector._from_arrays(v.sectors, v.indices, v.values * rng.uniform(0, 1, len(v)))
        assert abs_leq(u, v) in (Order.BELOW, Order.STRICTLY_BELOW)
        assert m(u) <= m(v)


@pytest.mark.parametrize("m", MODULARS, ids=lambda m: type(m).__name__)
def test_positive_off_zero(m):
    assert m(SparseVector()) == 0.0
    assert m(0.05 * basis(base(1))) > 0.0


def test_phi_strict_gap_tail_increment():
    rng = np.random.default_rng(3)
    phi = PhiSum(Lp(2.0))
    for _ in range(2000):
        z = _rand_vec(rng)
        w = SparseVector.from_parts(rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4))
        gap = phi(z + w) + phi(z - w) - 2 * phi(z)
        assert gap > 1e-14 * np.max(np.abs(w.values)) ** 2
