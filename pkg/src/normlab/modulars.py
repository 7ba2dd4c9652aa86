"""Convex modulars whose Luxemburg gauges give the norms in this package.

A modular here is anything with ``__call__(v)`` and ``prepare(v)``; the
latter returns ``s -> m(s * v)`` with per-vector work hoisted out, which is
what the gauge solver iterates on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .vectors import Sector, SparseVector

__all__ = [
    "DEFAULT_TOL", "Nakano", "OrliczM", "PhiSum",
    "nakano_eval", "orliczM", "orlicz_eval", "phi_sum_eval",
]

DEFAULT_TOL = 1e-12

_QUARTER_E2 = 0.25 * math.e ** 2
# below this exp(-1/t) is under 1e-300; M is reported as exactly 0
_M_FLOOR = 1.0 / 690.0


def orliczM(t):
    """The Orlicz function M: 0 at 0, e^2/4 * exp(-1/t) on (0, 1/2), t^2 after.

    Accepts scalars or arrays; negative input raises ``ValueError``.
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise ValueError("orliczM is defined on [0, inf)")
    out = np.where(arr >= 0.5, arr * arr, 0.0)
    small = (arr > _M_FLOOR) & (arr < 0.5)
    if np.any(small):
        out[small] = _QUARTER_E2 * np.exp(-1.0 / arr[small])
    if np.ndim(t) == 0:
        return float(out)
    return out


def _nakano_terms(values: np.ndarray, exponents: np.ndarray, s: float) -> float:
    with np.errstate(over="ignore"):
        return float(np.sum((values * s) ** exponents))


def _nakano_prep(v: SparseVector) -> Callable[[float], float]:
    if len(v) and v.indices.min() < 1:
        raise ValueError("Nakano exponents need coordinate indices >= 1")
    a = np.abs(v.values)
    e = 2.0 * v.indices
    return lambda s: _nakano_terms(a, e, s)


def nakano_eval(v: SparseVector) -> float:
    """sum_n v(n)^(2n), the exponent read from each coordinate's own index."""
    return _nakano_prep(v)(1.0)


def orlicz_eval(v: SparseVector) -> float:
    return float(np.sum(orliczM(np.abs(v.values))))


@dataclass(frozen=True)
class Nakano:
    name = "nakano"

    def __call__(self, v: SparseVector) -> float:
        return nakano_eval(v)

    def prepare(self, v: SparseVector) -> Callable[[float], float]:
        return _nakano_prep(v)

    def to_json(self) -> dict:
        return {"modular": self.name}


@dataclass(frozen=True)
class OrliczM:
    name = "orlicz-m"

    def __call__(self, v: SparseVector) -> float:
        return orlicz_eval(v)

    def prepare(self, v: SparseVector) -> Callable[[float], float]:
        a = np.abs(v.values)
        return lambda s: float(np.sum(orliczM(a * s)))

    def to_json(self) -> dict:
        return {"modular": self.name}


@dataclass(frozen=True)
class PhiSum:
    """z = (x, y) -> ||x||_base + nakano(y), base acting on the Base sector."""

    base: Any
    tol: float = field(default=DEFAULT_TOL, compare=False)
    name = "phi-sum"

    def __call__(self, z: SparseVector) -> float:
        return self.prepare(z)(1.0)

    def prepare(self, z: SparseVector) -> Callable[[float], float]:
        x = z.sector_part(Sector.BASE)
        nx = self.base.evaluate(x, self.tol) if len(x) else 0.0
        nak = _nakano_prep(z.sector_part(Sector.TAIL))
        return lambda s: s * nx + nak(s)

    def to_json(self) -> dict:
        return {"modular": self.name, "base": self.base.to_json()}


def phi_sum_eval(z: SparseVector, base, tol: float = DEFAULT_TOL) -> float:
    return PhiSum(base, tol)(z)
