"""Norm evaluation: closed-form lattice norms and Luxemburg gauges."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import NonBracketable, ZeroVector
from .modulars import DEFAULT_TOL, Nakano, OrliczM, PhiSum
from .vectors import Sector, SparseVector, base, indicator, sup_norm

__all__ = [
    "NormSpec", "Sup", "L1", "Lp", "Day", "Luxemburg", "ZNorm",
    "luxemburg", "eval_norm", "z_norm", "zinf_norm", "mathfrak_LF", "scale_check",
    "spec_from_config", "nakano_norm", "orlicz_norm",
]

_TINY = 1e-300
_MAX_DOUBLINGS = 2100


def luxemburg(m, v: SparseVector, tol: float = DEFAULT_TOL) -> float:
    """Gauge inf{lam > 0 : m(v / lam) <= 1} by bracketing and bisection.

    The returned value is the upper (feasible) end of the final bracket,
    so the relative error is at most ``tol``.  The gauge is positively
    homogeneous, so the solve runs on ``v / ||v||_inf`` and is scaled back;
    this keeps tiny and huge vectors away from the float range limits.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if v.is_zero():
        raise ZeroVector("Luxemburg gauge of the zero vector is not solved for")
    scale = sup_norm(v)
    h = m.prepare(v / scale)

    def feasible(lam):
        return h(1.0 / lam) <= 1.0

    start = 1.0
    if feasible(start):
        hi, lo = start, start / 2.0
        for _ in range(_MAX_DOUBLINGS):
            if not feasible(lo):
                break
            hi, lo = lo, lo / 2.0
            if lo < _TINY:
                raise NonBracketable("modular stays <= 1 as lambda -> 0")
        else:
            raise NonBracketable("lower bracket not found")
    else:
        lo, hi = start, 2.0 * start
        for _ in range(_MAX_DOUBLINGS):
            if feasible(hi):
                break
            lo, hi = hi, 2.0 * hi
            if not math.isfinite(hi):
                raise NonBracketable("modular never drops to <= 1")
        else:
            raise NonBracketable("upper bracket not found")

    while hi - lo > tol * lo:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return scale * hi


class NormSpec:
    """Base class; subclasses implement ``_evaluate`` on nonzero vectors."""

    def evaluate(self, v: SparseVector, tol: float = DEFAULT_TOL) -> float:
        if v.is_zero():
            return 0.0
        return self._evaluate(v, tol)

    def _evaluate(self, v, tol):
        raise NotImplementedError

    def in_ball(self, v: SparseVector, tol: float = DEFAULT_TOL) -> bool:
        """||v|| <= 1."""
        return self.evaluate(v, tol) <= 1.0

    def to_json(self) -> dict:
        raise NotImplementedError

    def __str__(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class Sup(NormSpec):
    def _evaluate(self, v, tol):
        return sup_norm(v)

    def to_json(self):
        return {"norm": "sup"}


@dataclass(frozen=True)
class L1(NormSpec):
    def _evaluate(self, v, tol):
        return float(np.sum(np.abs(v.values)))

    def to_json(self):
        return {"norm": "l1"}


@dataclass(frozen=True)
class Lp(NormSpec):
    p: float

    def __post_init__(self):
        if not self.p > 1:
            raise ValueError("Lp needs p > 1 (use L1 for p = 1)")

    def _evaluate(self, v, tol):
        a = np.abs(v.values)
        top = a.max()
        return float(top * np.sum((a / top) ** self.p) ** (1.0 / self.p))

    def to_json(self):
        return {"norm": "lp", "p": self.p}


@dataclass(frozen=True)
class Day(NormSpec):
    """2 * sqrt(sum_k 4^-k a_k^2), a_1 >= a_2 >= ... the sorted |entries|.

    The factor 2 makes every unit vector norm one.
    """

    def _evaluate(self, v, tol):
        a = np.abs(v.values)
        a = a[np.argsort(-a, kind="stable")]
        w = 0.25 ** np.arange(1, a.size + 1)
        return float(2.0 * math.sqrt(np.sum(w * a * a)))

    def to_json(self):
        return {"norm": "day"}


@dataclass(frozen=True)
class Luxemburg(NormSpec):
    modular: Any

    def _evaluate(self, v, tol):
        return luxemburg(self.modular, v, tol)

    def in_ball(self, v, tol=DEFAULT_TOL):
        # the gauge is <= 1 exactly when the modular is
        return v.is_zero() or self.modular(v) <= 1.0

    def to_json(self):
        if isinstance(self.modular, PhiSum):
            return {"norm": "z", "base": self.modular.base.to_json()}
        return {"norm": "luxemburg", **self.modular.to_json()}


def ZNorm(base_spec: NormSpec, tol: float = DEFAULT_TOL) -> Luxemburg:
    """The renorming of base (+)_inf c_0 gauged by ||x|| + nakano(y)."""
    return Luxemburg(PhiSum(base_spec, tol))


def nakano_norm() -> Luxemburg:
    return Luxemburg(Nakano())


def orlicz_norm() -> Luxemburg:
    return Luxemburg(OrliczM())


def eval_norm(spec: NormSpec, v: SparseVector, tol: float = DEFAULT_TOL) -> float:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return spec.evaluate(v, tol)


def z_norm(base_spec: NormSpec, z: SparseVector, tol: float = DEFAULT_TOL) -> float:
    return eval_norm(ZNorm(base_spec, tol), z, tol)


def zinf_norm(base_spec: NormSpec, z: SparseVector, tol: float = DEFAULT_TOL) -> float:
    """max(||x||_base, ||y||_inf), the direct-sum norm the renorming is compared to."""
    return max(eval_norm(base_spec, z.sector_part(Sector.BASE), tol),
               sup_norm(z.sector_part(Sector.TAIL)))


def mathfrak_LF(spec: NormSpec, n: int, tol: float = DEFAULT_TOL) -> float:
    """Norm of the indicator of the first n base coordinates."""
    if n < 1:
        raise ValueError("n must be positive")
    return eval_norm(spec, indicator(base(i) for i in range(1, n + 1)), tol)


def scale_check(m, z: SparseVector, lam: float) -> bool:
    if not lam > 1:
        raise ValueError("scale_check needs lambda > 1")
    return m(z / lam) <= m(z) / lam + 1e-12


_MODULARS = {"nakano": Nakano, "orlicz-m": OrliczM}


def spec_from_config(cfg: dict | str) -> NormSpec:
    """Build a NormSpec from its JSON config (dict or JSON text)."""
    if isinstance(cfg, str):
        cfg = json.loads(cfg)
    if not isinstance(cfg, dict) or "norm" not in cfg:
        raise ValueError("norm config must be an object with a 'norm' key")
    kind = cfg["norm"]
    if kind == "sup":
        return Sup()
    if kind == "l1":
        return L1()
    if kind == "lp":
        p = float(cfg.get("p", 2.0))
        return L1() if p == 1 else Lp(p)
    if kind == "day":
        return Day()
    if kind == "z":
        return ZNorm(spec_from_config(cfg["base"]))
    if kind == "luxemburg":
        name = cfg.get("modular")
        if name == "phi-sum":
            return ZNorm(spec_from_config(cfg["base"]))
        if name not in _MODULARS:
            raise ValueError(f"unknown modular {name!r}")
        return Luxemburg(_MODULARS[name]())
    if kind in _MODULARS:
        return Luxemburg(_MODULARS[kind]())
    raise ValueError(f"unknown norm {kind!r}")
