"""Finitely supported vectors over a two-sector index set.

Coordinates live either in the base sector (the lattice being renormed)
or in the tail sector (the appended copy of c_0).  Single-lattice norms
only ever touch the base sector.
"""
from __future__ import annotations

import enum
import json
from typing import Iterable, Mapping, NamedTuple

import numpy as np

__all__ = [
    "Sector", "Coordinate", "SparseVector", "DualFunctional", "Order",
    "base", "tail", "basis", "pair", "restrict", "abs_leq", "indicator",
    "sup_norm", "l1_norm", "coordinate_set", "parse_vector", "parse_coordinate",
]


class Sector(enum.IntEnum):
    BASE = 0
    TAIL = 1


class Coordinate(NamedTuple):
    """A (sector, index) pair; tuples order Base before Tail, then by index."""

    sector: Sector
    index: int

    def __str__(self) -> str:
        return f"{'b' if self.sector == Sector.BASE else 't'}:{self.index}"


def base(i: int) -> Coordinate:
    return Coordinate(Sector.BASE, int(i))


def tail(i: int) -> Coordinate:
    return Coordinate(Sector.TAIL, int(i))


def parse_coordinate(text: str) -> Coordinate:
    """Parse ``b:3`` / ``t:7`` (a bare integer means base)."""
    text = text.strip()
    if ":" not in text:
        return base(int(text))
    s, i = text.split(":", 1)
    s = s.strip().lower()
    if s in ("b", "base"):
        return base(int(i))
    if s in ("t", "tail"):
        return tail(int(i))
    raise ValueError(f"unknown sector in coordinate {text!r}")


class SparseVector:
    """Immutable finitely supported real vector.

    Storage is three aligned numpy arrays (sector, index, value) sorted in
    coordinate order with exact zeros removed, so equal vectors have equal
    storage.
    """

    __slots__ = ("_sectors", "_indices", "_values")

    def __init__(self, entries: Mapping[Coordinate, float] | Iterable[tuple[Coordinate, float]] = ()):
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        acc: dict[Coordinate, float] = {}
        for c, v in items:
            c = Coordinate(Sector(c[0]), int(c[1]))
            if c.index < 0:
                raise ValueError("coordinate index must be non-negative")
            acc[c] = acc.get(c, 0.0) + float(v)
        keys = sorted(k for k, v in acc.items() if v != 0.0)
        self._sectors = np.array([k.sector for k in keys], dtype=np.int8)
        self._indices = np.array([k.index for k in keys], dtype=np.int64)
        self._values = np.array([acc[k] for k in keys], dtype=float)
        for a in (self._sectors, self._indices, self._values):
            a.flags.writeable = False

    @classmethod
    def _from_arrays(cls, sectors, indices, values):
        # caller guarantees sorted unique coordinates
        values = np.asarray(values, dtype=float)
        keep = values != 0.0
        obj = cls.__new__(cls)
        obj._sectors = np.array(sectors, dtype=np.int8)[keep]
        obj._indices = np.array(indices, dtype=np.int64)[keep]
        obj._values = values[keep].copy()
        for a in (obj._sectors, obj._indices, obj._values):
            a.flags.writeable = False
        return obj

    @classmethod
    def dense(cls, values, sector: Sector = Sector.BASE, start: int = 1):
        """Vector with ``values[k]`` at coordinate ``(sector, start + k)``."""
        values = np.asarray(values, dtype=float)
        n = values.shape[0]
        return cls._from_arrays(np.full(n, int(sector)), np.arange(start, start + n), values)

    @classmethod
    def from_parts(cls, base_values=(), tail_values=()):
        """Base coefficients at b:1.., tail coefficients at t:1.."""
        b = np.asarray(base_values, dtype=float)
        t = np.asarray(tail_values, dtype=float)
        return cls._from_arrays(
            np.concatenate([np.zeros(b.size), np.ones(t.size)]),
            np.concatenate([np.arange(1, b.size + 1), np.arange(1, t.size + 1)]),
            np.concatenate([b, t]),
        )

    # -- accessors -------------------------------------------------------
    @property
    def sectors(self) -> np.ndarray:
        return self._sectors

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def values(self) -> np.ndarray:
        return self._values

    def support(self) -> list[Coordinate]:
        return [Coordinate(Sector(int(s)), int(i)) for s, i in zip(self._sectors, self._indices)]

    def items(self):
        return zip(self.support(), self._values.tolist())

    def __len__(self) -> int:
        return self._values.size

    def is_zero(self) -> bool:
        return self._values.size == 0

    def _lookup(self, c: Coordinate) -> int:
        # position of c in storage, or -1
        key = int(c[0]) * (1 << 62) + int(c[1])
        keys = self._sectors.astype(np.int64) * (1 << 62) + self._indices
        k = int(np.searchsorted(keys, key))
        if k < keys.size and keys[k] == key:
            return k
        return -1

    def __getitem__(self, c: Coordinate) -> float:
        k = self._lookup(c)
        return float(self._values[k]) if k >= 0 else 0.0

    def sector_part(self, sector: Sector) -> "SparseVector":
        mask = self._sectors == int(sector)
        return SparseVector._from_arrays(self._sectors[mask], self._indices[mask], self._values[mask])

    # -- arithmetic ------------------------------------------------------
    def _combine(self, other: "SparseVector", a: float, b: float) -> "SparseVector":
        k1 = self._sectors.astype(np.int64) * (1 << 62) + self._indices
        k2 = other._sectors.astype(np.int64) * (1 << 62) + other._indices
        keys = np.union1d(k1, k2)
        out = np.zeros(keys.size)
        out[np.searchsorted(keys, k1)] += a * self._values
        out[np.searchsorted(keys, k2)] += b * other._values
        return SparseVector._from_arrays(keys >> 62, keys & ((1 << 62) - 1), out)

    def __add__(self, other: "SparseVector") -> "SparseVector":
        return self._combine(other, 1.0, 1.0)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self._combine(other, 1.0, -1.0)

    def __mul__(self, c: float) -> "SparseVector":
        return SparseVector._from_arrays(self._sectors, self._indices, float(c) * self._values)

    __rmul__ = __mul__

    def __truediv__(self, c: float) -> "SparseVector":
        return SparseVector._from_arrays(self._sectors, self._indices, self._values / float(c))

    def __neg__(self) -> "SparseVector":
        return self * -1.0

    def __abs__(self) -> "SparseVector":
        return SparseVector._from_arrays(self._sectors, self._indices, np.abs(self._values))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (
            np.array_equal(self._sectors, other._sectors)
            and np.array_equal(self._indices, other._indices)
            and np.array_equal(self._values, other._values)
        )

    def __hash__(self) -> int:
        return hash((self._sectors.tobytes(), self._indices.tobytes(), self._values.tobytes()))

    def __repr__(self) -> str:
        body = ", ".join(f"{c}: {v:.6g}" for c, v in self.items())
        return f"{type(self).__name__}({{{body}}})"

    # -- literal format --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "entries": [
                ["b" if c.sector == Sector.BASE else "t", c.index, v] for c, v in self.items()
            ]
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SparseVector":
        entries = []
        for row in obj["entries"]:
            s, i, v = row
            if s not in ("b", "t"):
                raise ValueError(f"sector must be 'b' or 't', got {s!r}")
            entries.append((base(i) if s == "b" else tail(i), v))
        return cls(entries)


class DualFunctional(SparseVector):
    """Finitely supported functional acting by the coordinate pairing."""

    __slots__ = ()


def basis(c: Coordinate) -> SparseVector:
    return SparseVector({c: 1.0})


def coordinate_set(coords: Iterable[Coordinate]) -> frozenset[Coordinate]:
    return frozenset(Coordinate(Sector(c[0]), int(c[1])) for c in coords)


def pair(f: SparseVector, v: SparseVector) -> float:
    kf = f.sectors.astype(np.int64) * (1 << 62) + f.indices
    kv = v.sectors.astype(np.int64) * (1 << 62) + v.indices
    _, i, j = np.intersect1d(kf, kv, assume_unique=True, return_indices=True)
    return float(np.dot(f.values[i], v.values[j]))


def restrict(v: SparseVector, coords: Iterable[Coordinate]) -> SparseVector:
    """Coordinate projection onto ``coords``."""
    wanted = coordinate_set(coords)
    mask = np.array([c in wanted for c in v.support()], dtype=bool)
    if mask.size == 0:
        return SparseVector()
    return type(v)._from_arrays(v.sectors[mask], v.indices[mask], v.values[mask])


class Order(enum.Enum):
    STRICTLY_BELOW = "StrictlyBelow"
    BELOW = "Below"
    INCOMPARABLE = "Incomparable"


def abs_leq(u: SparseVector, v: SparseVector) -> Order:
    """Compare |u| and |v| coordinatewise."""
    diff = abs(v)._combine(abs(u), 1.0, -1.0)
    d = diff.values
    if np.any(d < 0):
        return Order.INCOMPARABLE
    return Order.STRICTLY_BELOW if np.any(d > 0) else Order.BELOW


def indicator(coords: Iterable[Coordinate]) -> SparseVector:
    return SparseVector({c: 1.0 for c in coordinate_set(coords)})


def sup_norm(v: SparseVector) -> float:
    return float(np.max(np.abs(v.values))) if len(v) else 0.0


def l1_norm(v: SparseVector) -> float:
    return float(np.sum(np.abs(v.values)))


def parse_vector(text_or_obj) -> SparseVector:
    if isinstance(text_or_obj, str):
        text_or_obj = json.loads(text_or_obj)
    return SparseVector.from_json(text_or_obj)
