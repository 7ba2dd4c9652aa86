"""Worked examples as reproducible tables.

Each scenario is a pure function of (dim, seed, tol) and returns a
``ScenarioReport`` whose rows are (label, value, provenance) triples; the
provenance says how the value was obtained (solver, closed-form, probe,
certificate, check).
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .certificates import certify_no_ld2p, hM_sn_norm, hM_xn
from .modulars import DEFAULT_TOL
from .norms import Lp, eval_norm, nakano_norm, orlicz_norm, z_norm, zinf_norm
from .probes import (
    SliceSpec, asq_witness, e_alpha_sup, phi_strictness_probe, slice_diameter_lb,
)
from .vectors import SparseVector, base, basis, indicator

__all__ = ["ScenarioReport", "SCENARIOS", "run_scenario", "replay", "random_unit_z"]


@dataclass
class ScenarioReport:
    scenario: str
    inputs: dict
    rows: list = field(default_factory=list)
    tol: float = DEFAULT_TOL
    seed: int = 0

    def add(self, label, value, tag):
        if isinstance(value, (bool, np.bool_)):
            value = bool(value)
        elif isinstance(value, (int, np.integer)):
            value = int(value)
        else:
            value = float(value)
        self.rows.append((label, value, tag))

    def to_dict(self):
        return {
            "scenario": self.scenario, "inputs": self.inputs, "tol": self.tol,
            "seed": self.seed,
            "rows": [{"label": a, "value": b, "provenance": c} for a, b, c in self.rows],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "value", "provenance"])
        for label, value, tag in self.rows:
            w.writerow([label, format(value, ".17g") if isinstance(value, float) else value, tag])
        return buf.getvalue()

    def row(self, label):
        for a, b, _ in self.rows:
            if a == label:
                return b
        raise KeyError(label)


def random_unit_z(rng, base_spec, base_dim, tail_dim, tol=DEFAULT_TOL):
    """A vector of the renormed space drawn uniformly in a box, then normalised."""
    z = SparseVector.from_parts(rng.uniform(-1, 1, base_dim), rng.uniform(-1, 1, tail_dim))
    return z / z_norm(base_spec, z, tol)


def scenario_hm(dim=1000, seed=0, tol=DEFAULT_TOL):
    rep = ScenarioReport("hM", {"dim": dim, "seed": seed}, tol=tol, seed=seed)
    m = orlicz_norm()
    ns = [n for n in (4, 10, 100, 1000, 10_000) if n <= dim]
    for n in ns:
        s = indicator(base(i) for i in range(1, n + 1))
        rep.add(f"||s_{n}||", eval_norm(m, s, tol), "solver")
        rep.add(f"||s_{n}|| closed form", hM_sn_norm(n), "closed-form")
    for d in (0.1, 0.25, 0.4):
        for n in (n for n in (100, 1000, 10_000) if n + 1 <= dim):
            k, res = hM_xn(d, n)
            x = SparseVector({base(1): 1 - d, **{base(i + 1): 1.0 / k for i in range(1, n + 1)}})
            resid = x - x[base(1)] * basis(base(1))
            rep.add(f"residual d={d} n={n}", eval_norm(m, resid, tol), "solver")
            rep.add(f"residual d={d} n={n} closed form", res, "closed-form")
    return rep


def scenario_nakano_ld2p(dim=200, seed=0, tol=DEFAULT_TOL, budget=200, eps=0.1):
    rep = ScenarioReport("nakano-ld2p", {"dim": dim, "seed": seed, "budget": budget, "eps": eps},
                         tol=tol, seed=seed)
    spec = nakano_norm()
    dims = sorted({d for d in (10, 25, 50, 100, 200, 500) if d <= dim} | {dim})
    f = basis(base(1))
    for d in dims:
        r = slice_diameter_lb(spec, SliceSpec(f, eps), d, budget, seed, tol)
        rep.add(f"slice diameter lb dim={d}", r.lower_bound, "probe")
    for d in dims:
        u = e_alpha_sup(spec, base(1), eps, d, budget=8, seed=seed, tol=tol)
        rep.add(f"E estimate dim={d}", u.E_estimate, "probe")
    cert = certify_no_ld2p(spec, base(1), dim, seed=seed, solver_tol=tol)
    rep.add("certificate issued", cert.status == "certificate", "certificate")
    if cert.status == "inconclusive" and "l" in cert.details:
        rep.add("l - 1", cert.details["l_minus_1"], "certificate")
    return rep


def scenario_z_renorm(dim=30, seed=0, tol=DEFAULT_TOL, samples=200, eps=0.01):
    rep = ScenarioReport("z-renorm", {"dim": dim, "seed": seed, "samples": samples, "eps": eps},
                         tol=tol, seed=seed)
    b = Lp(2.0)
    probe = phi_strictness_probe(b, trials=samples, seed=seed, tol=tol)
    rep.add("strictness probe pass", probe.passed, "probe")
    rng = np.random.default_rng(seed)
    points = [random_unit_z(rng, b, dim, dim, tol) for _ in range(5)]
    h = asq_witness(b, points, eps, dim=100_000, tol=tol)
    worst = max(z_norm(b, z + h, tol) for z in points)
    rep.add("asq |||h|||", z_norm(b, h, tol), "solver")
    rep.add("asq max |||z_i + h|||", worst, "solver")
    rep.add("asq check pass", worst <= 1 + eps, "check")
    ok = True
    lo_ratio, hi_ratio = math.inf, 0.0
    for _ in range(samples):
        z = SparseVector.from_parts(rng.uniform(-1, 1, dim), rng.uniform(-1, 1, dim))
        ratio = z_norm(b, z, tol) / zinf_norm(b, z, tol)
        lo_ratio, hi_ratio = min(lo_ratio, ratio), max(hi_ratio, ratio)
        ok &= 1 - 1e-10 <= ratio <= 2 + 1e-10
    rep.add("sandwich min |||z|||/||z||_oplus_inf", lo_ratio, "solver")
    rep.add("sandwich max |||z|||/||z||_oplus_inf", hi_ratio, "solver")
    rep.add("sandwich pass", ok, "check")
    return rep


def scenario_lp_slices(dim=16, seed=0, tol=DEFAULT_TOL, budget=2000):
    rep = ScenarioReport("lp-slices", {"dim": dim, "seed": seed, "budget": budget},
                         tol=tol, seed=seed)
    for p in (1.5, 2.0, 4.0):
        spec = Lp(p)
        cert = certify_no_ld2p(spec, base(1), dim, seed=seed, solver_tol=tol)
        rep.add(f"p={p} certificate issued", cert.status == "certificate", "certificate")
        if cert.status != "certificate":
            continue
        rep.add(f"p={p} K", cert.K, "certificate")
        rep.add(f"p={p} l", cert.l, "certificate")
        rep.add(f"p={p} eps", cert.eps, "certificate")
        rep.add(f"p={p} diameter bound", cert.diameter_bound, "certificate")
        lb = slice_diameter_lb(spec, SliceSpec(basis(base(1)), cert.eps), dim, budget, seed, tol)
        rep.add(f"p={p} diameter lb", lb.lower_bound, "probe")
        rep.add(f"p={p} section residual closed form",
                (1 - (1 - cert.eps) ** p) ** (1 / p), "closed-form")
        u = e_alpha_sup(spec, base(1), cert.eps, dim, budget=8, seed=seed, tol=tol)
        rep.add(f"p={p} E estimate", u.E_estimate, "probe")
    return rep


SCENARIOS = {
    "hM": scenario_hm,
    "nakano-ld2p": scenario_nakano_ld2p,
    "z-renorm": scenario_z_renorm,
    "lp-slices": scenario_lp_slices,
}


def run_scenario(name, dim=None, seed=0, tol=DEFAULT_TOL) -> ScenarioReport:
    fn = SCENARIOS[name]
    kwargs = {"seed": seed, "tol": tol}
    if dim is not None:
        kwargs["dim"] = dim
    return fn(**kwargs)


def replay(report: dict) -> ScenarioReport:
    """Re-run a serialised report from its echoed inputs."""
    return SCENARIOS[report["scenario"]](**report["inputs"], tol=report["tol"])
