"""Empirical geometry of unit balls: slices, section radii, convexity probes.

Every probe is deterministic in its ``seed`` (numpy PCG64) and returns a
record that carries the seed and tolerance it ran with.  Probes search;
they never prove.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetExceeded, DomainError, EmptySliceSearch
from .modulars import DEFAULT_TOL, PhiSum
from .norms import Luxemburg, NormSpec, eval_norm, z_norm
from .vectors import (
    Coordinate, Sector, SparseVector, abs_leq, base, basis, pair, sup_norm, tail, Order,
)

__all__ = [
    "PRNG_NAME", "SliceSpec", "DiameterReport", "UsmReport",
    "Pass", "CounterExample", "NoViolationFound", "Segment", "Witness",
    "slice_diameter_lb", "section_radius", "e_alpha_sup",
    "strict_monotonicity_probe", "midpoint_sc_probe", "phi_strictness_probe",
    "asq_witness", "is_z_norm",
]

PRNG_NAME = "numpy.PCG64"


# -- outcomes ---------------------------------------------------------------

@dataclass(frozen=True)
class Pass:
    trials: int
    seed: int
    passed = True

    def to_dict(self):
        return {"status": "Pass", "trials": self.trials, "seed": self.seed, "prng": PRNG_NAME}


@dataclass(frozen=True)
class CounterExample:
    u: SparseVector
    v: SparseVector
    trials: int
    seed: int
    passed = False

    def to_dict(self):
        return {"status": "CounterExample", "u": self.u.to_json(), "v": self.v.to_json(),
                "trials": self.trials, "seed": self.seed, "prng": PRNG_NAME}


@dataclass(frozen=True)
class NoViolationFound:
    trials: int
    seed: int
    passed = True

    def to_dict(self):
        return {"status": "NoViolationFound", "trials": self.trials, "seed": self.seed,
                "prng": PRNG_NAME}


@dataclass(frozen=True)
class Segment:
    x: SparseVector
    y: SparseVector
    midpoint_norm: float
    trials: int
    seed: int
    passed = False

    def to_dict(self):
        return {"status": "Segment", "x": self.x.to_json(), "y": self.y.to_json(),
                "midpoint_norm": self.midpoint_norm, "trials": self.trials,
                "seed": self.seed, "prng": PRNG_NAME}


@dataclass(frozen=True)
class Witness:
    z: SparseVector
    w: SparseVector
    gap: float
    trials: int
    seed: int
    passed = False

    def to_dict(self):
        return {"status": "Witness", "z": self.z.to_json(), "w": self.w.to_json(),
                "gap": self.gap, "trials": self.trials, "seed": self.seed, "prng": PRNG_NAME}


# -- coordinate frames --------------------------------------------------------

def is_z_norm(spec: NormSpec) -> bool:
    return isinstance(spec, Luxemburg) and isinstance(spec.modular, PhiSum)


class _Frame:
    """A fixed finite coordinate list so searches can work on dense arrays."""

    def __init__(self, coords):
        coords = sorted(set(coords))
        self.coords = coords
        self.sectors = np.array([c.sector for c in coords], dtype=np.int8)
        self.indices = np.array([c.index for c in coords], dtype=np.int64)
        self.pos = {c: k for k, c in enumerate(coords)}

    @classmethod
    def for_spec(cls, spec, dim, extra=()):
        coords = [base(i) for i in range(1, dim + 1)]
        if is_z_norm(spec):
            coords += [tail(i) for i in range(1, dim + 1)]
        return cls(list(coords) + list(extra))

    def __len__(self):
        return len(self.coords)

    def vec(self, values) -> SparseVector:
        return SparseVector._from_arrays(self.sectors, self.indices, values)

    def dense(self, v: SparseVector) -> np.ndarray:
        out = np.zeros(len(self.coords))
        for c, val in v.items():
            out[self.pos[c]] = val
        return out


# -- slices -------------------------------------------------------------------

@dataclass(frozen=True)
class SliceSpec:
    functional: SparseVector
    eps: float

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise DomainError("slice eps must lie in (0, 1)")
        if self.functional.is_zero():
            raise DomainError("slice functional must be nonzero")


@dataclass
class DiameterReport:
    lower_bound: float
    witness_pair: tuple
    upper_bound: Optional[float] = None
    budget_used: int = 0
    seed: int = 0
    tol: float = DEFAULT_TOL
    dim: int = 0
    rescale: float = 1.0
    eps: float = 0.0

    def to_dict(self):
        return {
            "lower_bound": self.lower_bound,
            "witness_pair": [w.to_json() for w in self.witness_pair],
            "upper_bound": self.upper_bound,
            "budget_used": self.budget_used,
            "seed": self.seed, "prng": PRNG_NAME, "tol": self.tol,
            "dim": self.dim, "rescale": self.rescale, "eps": self.eps,
        }


_RADII = np.unique(np.concatenate([
    np.geomspace(1e-4, 1.0, 40),
    [0.5, 0.8, 0.9, 0.95, 0.97, 0.98, 0.99, 0.995, 0.999, 1.0],
]))


def _scan_indices(n_total, cap=48):
    if n_total <= cap:
        return list(range(n_total))
    head = list(range(8))
    rest = np.unique(np.linspace(8, n_total - 1, cap - 8).round().astype(int)).tolist()
    return sorted(set(head + rest))


def _functional_scale(spec, f, frame, tol):
    """Empirical sup of f over the ball, with the maximiser found."""
    fd = frame.dense(f)
    cands = []
    for k in np.flatnonzero(fd):
        e = np.zeros(len(frame))
        e[k] = np.sign(fd[k])
        cands.append(e)
    cands.append(np.sign(fd))
    cands.append(fd.copy())
    best, best_x = -math.inf, None
    for c in cands:
        v = frame.vec(c)
        x = v / eval_norm(spec, v, tol)
        val = pair(f, x)
        if val > best:
            best, best_x = val, x
    return best, best_x


def slice_diameter_lb(spec: NormSpec, slice: SliceSpec, dim: int, budget: int,
                      seed: int = 0, tol: float = DEFAULT_TOL) -> DiameterReport:
    """Lower bound on the diameter of a slice of the unit ball.

    Two searches share one report: a fixed structured scan of pairs
    ``x +- r e_n`` around a maximiser ``x`` of the functional, then
    ``budget`` steps of seeded hill climbing on the pair.  The climb only
    ever improves on the scan, so the bound is non-decreasing in budget.
    """
    if dim < 2:
        raise DomainError("dim must be at least 2")
    if budget < 1:
        raise DomainError("budget must be at least 1")
    f = slice.functional
    frame = _Frame.for_spec(spec, dim, extra=f.support())
    scale, x = _functional_scale(spec, f, frame, tol)
    if not scale > 0:
        raise EmptySliceSearch("functional is non-positive on the probed ball")
    threshold = 1.0 - slice.eps
    used = 0

    def in_slice(v):
        return pair(f, v) / scale > threshold

    def into_ball(v):
        nv = eval_norm(spec, v, tol)
        return v / nv if nv > 1.0 else v

    best = (0.0, x, x) if in_slice(x) else None
    xd = frame.dense(x)
    off = [k for k in range(len(frame)) if xd[k] == 0.0]
    for k in (off[j] for j in _scan_indices(len(off))):
        e = np.zeros(len(frame))
        e[k] = 1.0
        for r in _RADII:
            p = into_ball(frame.vec(xd + r * e))
            m = into_ball(frame.vec(xd - r * e))
            used += 2
            if in_slice(p) and in_slice(m):
                d = eval_norm(spec, p - m, tol)
                used += 1
                if best is None or d > best[0]:
                    best = (d, p, m)
    if best is None:
        raise EmptySliceSearch("no feasible point found; is the functional mis-scaled?")

    rng = np.random.default_rng(seed)
    ya, za = frame.dense(best[1]), frame.dense(best[2])
    bound = best[0]
    step = 0.1
    for _ in range(budget):
        which = rng.integers(2)
        noise = rng.standard_normal(len(frame))
        cur = ya if which == 0 else za
        other = za if which == 0 else ya
        cand = into_ball(frame.vec(cur + step * noise))
        used += 2
        if in_slice(cand):
            d = eval_norm(spec, cand - frame.vec(other), tol)
            if d > bound:
                bound = d
                if which == 0:
                    ya = frame.dense(cand)
                else:
                    za = frame.dense(cand)
                step = min(1.0, step * 1.5)
                continue
        step = max(1e-6, step * 0.97)

    y, z = frame.vec(ya), frame.vec(za)
    # self-check at 10x the solver tolerance
    for w in (y, z):
        if eval_norm(spec, w, tol) > 1 + 10 * tol or not in_slice(w):
            raise EmptySliceSearch("witness failed re-validation")
    return DiameterReport(
        lower_bound=eval_norm(spec, y - z, tol), witness_pair=(y, z), budget_used=used,
        seed=seed, tol=tol, dim=dim, rescale=scale, eps=slice.eps,
    )


# -- uniform strict monotonicity -------------------------------------------------

@dataclass
class UsmReport:
    alpha: Coordinate
    eps: float
    E_estimate: float
    witness: SparseVector
    seed: int = 0
    tol: float = DEFAULT_TOL
    dim: int = 0
    alpha_value: float = 1.0
    direction: str = ""

    def to_dict(self):
        return {
            "alpha": str(self.alpha), "eps": self.eps, "E_estimate": self.E_estimate,
            "witness": self.witness.to_json(), "seed": self.seed, "prng": PRNG_NAME,
            "tol": self.tol, "dim": self.dim, "alpha_value": self.alpha_value,
            "direction": self.direction,
        }


def section_radius(spec: NormSpec, alpha: Coordinate, c: float, u: SparseVector,
                   tol: float = DEFAULT_TOL, rel: float = 1e-14) -> tuple[float, SparseVector]:
    """Largest t with ||c e_alpha + t u|| <= 1, and the point it reaches.

    For lattice norms t -> ||c e_alpha + t u|| is even and non-decreasing
    on t >= 0 when u is supported off alpha, so bisection on the
    feasibility predicate is exact up to ``rel``.
    """
    ca = c * basis(alpha)
    if not spec.in_ball(ca, tol):
        raise DomainError("c * e_alpha is already outside the ball")
    lo, hi = 0.0, 2.0 / sup_norm(u)
    while spec.in_ball(ca + hi * u, tol):
        lo, hi = hi, 2.0 * hi
    while hi - lo > rel * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if spec.in_ball(ca + mid * u, tol):
            lo = mid
        else:
            hi = mid
    return lo, ca + lo * u


def e_alpha_sup(spec: NormSpec, alpha: Coordinate, eps: float, dim: int,
                budget: int = 32, seed: int = 0, tol: float = DEFAULT_TOL,
                grid: int = 4) -> UsmReport:
    """Lower estimate of sup ||x - x(alpha) e_alpha|| over unit x with x(alpha) > 1 - eps.

    The alpha-coordinate is fixed on a grid in (1 - eps, 1]; along each
    direction supported off alpha the point is pushed out to the sphere.
    Directions: unit vectors, normalised indicators of initial and final
    runs of coordinates, and ``budget`` seeded random directions.
    """
    if not 0 < eps < 1:
        raise DomainError("eps must lie in (0, 1)")
    if dim < 2:
        raise DomainError("dim must be at least 2")
    frame = _Frame.for_spec(spec, dim, extra=[alpha])
    others = [k for k, c in enumerate(frame.coords) if c != alpha]
    n_off = len(others)

    dirs: list[tuple[str, np.ndarray]] = []
    for j in _scan_indices(n_off, cap=16):
        e = np.zeros(len(frame))
        e[others[j]] = 1.0
        dirs.append((f"e[{frame.coords[others[j]]}]", e))
    sizes = sorted({int(s) for s in np.geomspace(2, n_off, 10).round()} | {n_off})
    for m in sizes:
        if m < 2:
            continue
        for label, idx in (("head", others[:m]), ("tail", others[-m:])):
            e = np.zeros(len(frame))
            e[idx] = 1.0
            dirs.append((f"1[{label}{m}]", e))
    rng = np.random.default_rng(seed)
    for k in range(budget):
        g = np.zeros(len(frame))
        g[others] = rng.standard_normal(n_off)
        dirs.append((f"random{k}", g))

    cs = 1.0 - eps + eps * np.r_[1e-12, np.arange(1, grid + 1) / grid]
    best = None
    for label, d in dirs:
        u = frame.vec(d)
        u = u / eval_norm(spec, u, tol)
        for c in cs:
            t, x = section_radius(spec, alpha, float(c), u, tol)
            res = eval_norm(spec, x - x[alpha] * basis(alpha), tol)
            if best is None or res > best[0]:
                best = (res, x, float(c), label)
    res, x, c, label = best
    return UsmReport(alpha=alpha, eps=eps, E_estimate=res, witness=x, seed=seed,
                     tol=tol, dim=dim, alpha_value=c, direction=label)


# -- monotonicity and convexity probes ------------------------------------------

def strict_monotonicity_probe(spec: NormSpec, trials: int = 1000, seed: int = 0,
                              dim: int = 4, tol: float = DEFAULT_TOL):
    """Sample |u| < |v| pairs and look for ||u|| >= ||v|| - 1e-12.

    Small dims keep every coordinate's influence above the threshold
    (high-index Nakano terms are numerically invisible).
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    frame = _Frame.for_spec(spec, dim)
    n = len(frame)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        v = rng.uniform(0.5, 1.0, n) * rng.choice([-1.0, 1.0], n)
        mask = rng.random(n) < 0.5
        if not mask.any():
            mask[rng.integers(n)] = True
        u = v * np.where(mask, rng.uniform(0.0, 0.9, n), 1.0)
        uv, vv = frame.vec(u), frame.vec(v)
        assert abs_leq(uv, vv) is Order.STRICTLY_BELOW
        if not eval_norm(spec, uv, tol) < eval_norm(spec, vv, tol) - 1e-12:
            return CounterExample(uv, vv, trials, seed)
    return Pass(trials, seed)


def midpoint_sc_probe(spec: NormSpec, trials: int = 1000, seed: int = 0,
                      dim: int = 4, tol: float = DEFAULT_TOL):
    """Look for distinct unit x, y whose midpoint still has norm >= 1 - 1e-10."""
    if trials < 1:
        raise DomainError("trials must be >= 1")
    frame = _Frame.for_spec(spec, dim)
    n = len(frame)

    def unit(a):
        v = frame.vec(a)
        return v / eval_norm(spec, v, tol)

    def check(x, y):
        if sup_norm(x - y) < 1e-3:
            return None
        mid = 0.5 * eval_norm(spec, x + y, tol)
        return mid if mid >= 1.0 - 1e-10 else None

    structured = []
    for i in range(min(n, 3)):
        for j in range(i + 1, min(n, 3)):
            ei, ej = np.zeros(n), np.zeros(n)
            ei[i], ej[j] = 1.0, 1.0
            structured += [(ei, ej), (ei + ej, ei - ej)]
    for a, b in structured:
        x, y = unit(a), unit(b)
        mid = check(x, y)
        if mid is not None:
            return Segment(x, y, mid, trials, seed)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        x, y = unit(rng.standard_normal(n)), unit(rng.standard_normal(n))
        mid = check(x, y)
        if mid is not None:
            return Segment(x, y, mid, trials, seed)
    return NoViolationFound(trials, seed)


def phi_strictness_probe(base_spec: NormSpec, trials: int = 1000, seed: int = 0,
                         base_dim: int = 4, tail_dim: int = 4, base_only="auto",
                         tol: float = DEFAULT_TOL):
    """Check Phi(z + w) + Phi(z - w) - 2 Phi(z) > 1e-14 ||w||_inf^2.

    Increments with a nonzero tail part are always sampled.  With
    ``base_only`` true (``"auto"`` means true) every odd sample is a
    base-only increment, and a designed pair (z = 3 e_1, w = e_1 - e_2)
    leads them; that pair has zero gap exactly when the base norm has a
    flat piece through (4, -1) and (2, 1), as the sup norm does.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    phi = PhiSum(base_spec, tol)
    if base_only == "auto":
        base_only = True
    rng = np.random.default_rng(seed)

    def gap(z, w):
        return phi(z + w) + phi(z - w) - 2.0 * phi(z)

    for k in range(trials):
        if base_only and k == 1:
            z = SparseVector({base(1): 3.0})
            w = SparseVector({base(1): 1.0, base(2): -1.0})
        else:
            z = SparseVector.from_parts(rng.uniform(-1, 1, base_dim), rng.uniform(-1, 1, tail_dim))
            u = rng.uniform(-1, 1, base_dim)
            v = np.zeros(tail_dim) if (base_only and k % 2 == 1) else rng.uniform(-1, 1, tail_dim)
            w = SparseVector.from_parts(u, v)
        if w.is_zero():
            continue
        g = gap(z, w)
        if not g > 1e-14 * sup_norm(w) ** 2:
            return Witness(z, w, g, trials, seed)
    return Pass(trials, seed)


# -- almost squareness ---------------------------------------------------------

def asq_witness(base_spec: NormSpec, points, eps: float, dim: int,
                tol: float = DEFAULT_TOL) -> SparseVector:
    """Unit h in the renormed space with |||z_i + h||| <= 1 + eps for every z_i.

    h is a normalised multiple r e_N of a tail unit vector, with N past all
    tail supports and r^(2N) < eps / 2; ``dim`` caps the search for N.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    points = list(points)
    for z in points:
        if z_norm(base_spec, z, tol) > 1 + tol:
            raise DomainError("asq_witness points must lie in the unit ball")
    r = 1.0 - min(0.495 * eps, 0.5)
    n0 = 1 + max((int(z.sector_part(Sector.TAIL).indices.max())
                  for z in points if len(z.sector_part(Sector.TAIL))), default=0)
    need = math.floor(math.log(eps / 2.0) / (2.0 * math.log(r))) + 1 if eps < 2 else 1
    N = max(n0, need, 1)
    while r ** (2 * N) >= eps / 2.0:
        N += 1
    if N > dim:
        raise BudgetExceeded(f"tail index {N} needed, dim is {dim}")
    g = SparseVector({tail(N): r})
    h = g / z_norm(base_spec, g, tol)
    for z in points:
        if z_norm(base_spec, z + h, tol) > 1.0 + eps:
            raise DomainError("witness check failed")
    return h
