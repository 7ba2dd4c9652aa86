"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
detail lines; the terminal summary lists PASS/FAIL for each criterion.
"""
import json
import math
import time

import numpy as np
import pytest

from normlab.certificates import (
    certify_no_ld2p, check_certificate, hM_sn_norm, hM_xn, thm43_symmetric_check,
)
from normlab.modulars import Nakano, OrliczM, PhiSum
from normlab.norms import (
    Day, Lp, Sup, eval_norm, luxemburg, nakano_norm, orlicz_norm, scale_check, z_norm, zinf_norm,
)
from normlab.probes import (
    SliceSpec, asq_witness, e_alpha_sup, phi_strictness_probe, slice_diameter_lb,
)
from normlab.scenarios import random_unit_z
from normlab.vectors import SparseVector, base, basis, indicator

import oracles


def report(n, ok, detail):
    print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def test_criterion_1_orlicz_indicator_closed_form():
    m = orlicz_norm()
    start = time.perf_counter()
    worst = 0.0
    for n in (4, 10, 100, 1000, 10_000):
        got = eval_norm(m, indicator(base(i) for i in range(1, n + 1)))
        worst = max(worst, abs(got - hM_sn_norm(n)) / hM_sn_norm(n))
    elapsed = time.perf_counter() - start
    s4 = eval_norm(m, indicator(base(i) for i in range(1, 5)))
    ok = worst <= 1e-9 and elapsed < 1.0 and abs(s4 - 2.0) <= 2e-9
    report(1, ok, f"max rel err {worst:.2e}, {elapsed:.3f}s, ||s_4|| = {s4!r}")
    assert worst <= 1e-9
    assert elapsed < 1.0
    assert s4 == pytest.approx(2.0, rel=1e-9)


def _x_residual(d, n):
    k, _ = hM_xn(d, n)
    x = SparseVector({base(1): 1 - d, **{base(i + 1): 1.0 / k for i in range(1, n + 1)}})
    return x - x[base(1)] * basis(base(1))


def test_criterion_2_orlicz_residual_quotient():
    m = orlicz_norm()
    worst, ok_shape = 0.0, True
    for d in (0.1, 0.25, 0.4):
        vals = []
        for n in (100, 10_000):
            got = eval_norm(m, _x_residual(d, n))
            worst = max(worst, abs(got - hM_xn(d, n)[1]))
            vals.append(got)
        ok_shape &= vals[0] < vals[1] < 1.0
    report(2, worst <= 1e-8 and ok_shape, f"max abs err {worst:.2e}, increasing and < 1: {ok_shape}")
    assert worst <= 1e-8
    assert ok_shape


def test_criterion_3_lp_section_formula():
    worst = 0.0
    for p in (1.5, 2.0, 4.0):
        for d in (0.05, 0.1):
            rep = e_alpha_sup(Lp(p), base(1), d, dim=16, budget=4, seed=0)
            worst = max(worst, abs(rep.E_estimate - (1 - (1 - d) ** p) ** (1 / p)))
    report(3, worst <= 1e-10, f"max abs err {worst:.2e}")
    assert worst <= 1e-10


def test_criterion_4_z_norm_suite():
    b = Lp(2.0)
    phi = PhiSum(b)
    rng = np.random.default_rng(20240501)
    sandwich = scale = unit = True
    worst_unit = 0.0
    for _ in range(10_000):
        z = SparseVector.from_parts(rng.uniform(-1, 1, 30), rng.uniform(-1, 1, 30))
        n = z_norm(b, z)
        s = zinf_norm(b, z)
        sandwich &= s - 1e-10 <= n <= 2 * s + 1e-10
        scale &= all(scale_check(phi, z, lam) for lam in (1.1, 2.0, 10.0))
        err = abs(phi(z / n) - 1.0)
        worst_unit = max(worst_unit, err)
        unit &= err <= 1e-9
    report(4, sandwich and scale and unit,
           f"sandwich {sandwich}, scale_check {scale}, max |Phi(z/|||z|||) - 1| {worst_unit:.2e}")
    assert sandwich and scale and unit


def test_criterion_5_phi_strictness():
    res = phi_strictness_probe(Lp(2.0), trials=10_000, seed=0)
    sup = phi_strictness_probe(Sup(), trials=1000, seed=0)
    ok = res.passed and not sup.passed
    report(5, ok, f"Lp(2): {type(res).__name__}; Sup: {type(sup).__name__} "
                  f"after {sup.trials} trial budget")
    assert res.passed
    assert type(sup).__name__ == "Witness"


def test_criterion_6_asq_witness():
    b = Lp(2.0)
    rng = np.random.default_rng(7)
    points = [random_unit_z(rng, b, 30, 30) for _ in range(5)]
    start = time.perf_counter()
    h = asq_witness(b, points, 0.01, dim=100_000)
    worst = max(z_norm(b, z + h) for z in points)
    elapsed = time.perf_counter() - start
    ok = worst <= 1.01 and elapsed < 1.0 and abs(z_norm(b, h) - 1) <= 1e-9
    report(6, ok, f"max |||z_i + h||| = {worst!r}, {elapsed:.3f}s")
    assert abs(z_norm(b, h) - 1.0) <= 1e-9
    assert worst <= 1.01
    assert elapsed < 1.0


@pytest.mark.slow
def test_criterion_7_certificate_soundness_lp2():
    spec = Lp(2.0)
    cert = certify_no_ld2p(spec, base(1), dim=16, seed=0)
    assert cert.status == "certificate"
    lb = slice_diameter_lb(spec, SliceSpec(basis(base(1)), cert.eps), 16, 100_000, seed=0)
    sound = cert.diameter_bound > lb.lower_bound
    margin = cert.diameter_bound < 1.95 and lb.lower_bound < 1.95
    report(7, sound and margin,
           f"bound {cert.diameter_bound!r} vs lb {lb.lower_bound!r} at eps {cert.eps!r}; "
           f"sound {sound}, both < 1.95 {margin}")
    assert sound
    assert lb.lower_bound < 1.95
    assert cert.diameter_bound < 1.95


def test_criterion_8_nakano_evidence():
    spec = nakano_norm()
    lb = slice_diameter_lb(spec, SliceSpec(basis(base(1)), 0.1), 200, 200, seed=0)
    cert = certify_no_ld2p(spec, base(1), dim=500, seed=0)
    inconclusive = cert.status == "inconclusive" and "l_minus_1" in cert.details
    gap = cert.details.get("l_minus_1", math.inf) if inconclusive else math.inf
    ok = lb.lower_bound >= 1.9 and inconclusive and gap < 1e-6
    report(8, ok, f"slice lb {lb.lower_bound!r}, certify {cert.status}, l - 1 = {gap!r}")
    assert lb.lower_bound >= 1.9
    assert inconclusive and gap < 1e-6


@pytest.mark.parametrize("spec, dim", [(Lp(1.5), 8), (Lp(2.0), 12), (Lp(4.0), 16), (Day(), 8)],
                         ids=["lp1.5", "lp2", "lp4", "day"])
def test_criterion_9_symmetric_certificates(spec, dim):
    cert = thm43_symmetric_check(spec, dim=dim, seed=0)
    assert cert.status == "certificate"
    data = json.loads(json.dumps(cert.to_dict()))
    bad = check_certificate(data)
    report(9, not bad, f"{spec} dim {dim}: bound {data['diameter_bound']!r}, violations {bad}")
    assert bad == []


def _oracle_pairs(v):
    return [(int(i), float(x)) for i, x in zip(v.indices, v.values)]


@pytest.mark.parametrize("name", ["nakano", "orlicz-m"])
def test_criterion_10_oracle_equivalence(name):
    modular = Nakano() if name == "nakano" else OrliczM()
    oracle = oracles.nakano_modular if name == "nakano" else oracles.orlicz_modular
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 40))
        v = SparseVector.dense(rng.uniform(-1, 1, n) * 10.0 ** rng.uniform(-3, 2))
        if v.is_zero():
            continue
        got = luxemburg(modular, v)
        ref = oracles.brute_bisection(oracle, _oracle_pairs(v))
        worst = max(worst, abs(got - ref) / ref)
    report(10, worst <= 1e-10, f"{name}: max rel diff {worst:.2e}")
    assert worst <= 1e-10
