"""Fuzzy subsets of a finite universe and the min/max degree algebra.

Degrees are plain floats in [0, 1]. Every operation here is a pointwise
``min``/``max`` (or a comparison), so no arithmetic rounding ever happens
and exact equality of results is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DegreeError, UniverseMismatch

__all__ = [
    "Universe",
    "FuzzySet",
    "check_degree",
    "format_degree",
    "union",
    "intersect",
    "scale_product",
    "height",
    "support",
    "is_subset",
    "equals",
]


def check_degree(value, where: str = "", *, positive: bool = False) -> float:
    """Coerce ``value`` to float and check it lies in [0, 1] ((0, 1] if ``positive``)."""
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise DegreeError(f"degree is not a number: {value!r}", where) from None
    low_ok = x > 0.0 if positive else x >= 0.0
    if not (low_ok and x <= 1.0):
        interval = "(0,1]" if positive else "[0,1]"
        raise DegreeError(f"degree out of range {interval}: {value!r}", where)
    return x


def format_degree(x: float) -> str:
    """Shortest decimal that round-trips, without a trailing ``.0``."""
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


@dataclass(frozen=True)
class Universe:
    """An ordered, finite set of distinct symbol names."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        syms = tuple(str(s) for s in self.symbols)
        if not syms:
            raise ValueError("a universe must be nonempty")
        if len(set(syms)) != len(syms):
            raise ValueError(f"duplicate symbols in universe: {syms}")
        object.__setattr__(self, "symbols", syms)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        try:
            return self._index[str(symbol)]
        except KeyError:
            raise KeyError(f"symbol {symbol!r} not in universe {self.symbols}") from None

    def __contains__(self, symbol) -> bool:
        return str(symbol) in self._index

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)


@dataclass(frozen=True)
class FuzzySet:
    """A membership vector aligned with ``universe.symbols``."""

    universe: Universe
    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(check_degree(v, f"membership[{i}]") for i, v in enumerate(self.values))
        if len(vals) != len(self.universe):
            raise ValueError(
                f"{len(vals)} memberships given for a universe of {len(self.universe)} symbols"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_mapping(cls, universe: Universe, memberships: Mapping) -> FuzzySet:
        """Build from ``{symbol: degree}``; symbols left out get membership 0."""
        vals = [0.0] * len(universe)
        for sym, deg in memberships.items():
            vals[universe.index(sym)] = check_degree(deg, f"membership of {sym!r}")
        return cls(universe, tuple(vals))

    @classmethod
    def empty(cls, universe: Universe) -> FuzzySet:
        return cls(universe, (0.0,) * len(universe))

    @classmethod
    def singleton(cls, universe: Universe, symbol: str, degree: float = 1.0) -> FuzzySet:
        return cls.from_mapping(universe, {symbol: degree})

    def __call__(self, symbol: str) -> float:
        return self.values[self.universe.index(symbol)]

    def as_dict(self, *, nonzero: bool = True) -> dict[str, float]:
        return {
            s: v for s, v in zip(self.universe.symbols, self.values) if v > 0 or not nonzero
        }

    def __or__(self, other: FuzzySet) -> FuzzySet:
        return union(self, other)

    def __and__(self, other: FuzzySet) -> FuzzySet:
        return intersect(self, other)

    def __le__(self, other: FuzzySet) -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        terms = [f"{format_degree(v)}/{s}" for s, v in zip(self.universe.symbols, self.values) if v > 0]
        return " + ".join(terms) if terms else "0"


def _same_universe(a: FuzzySet, b: FuzzySet) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch(f"{a.universe.symbols} vs {b.universe.symbols}")


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_universe(a, b)
    return FuzzySet(a.universe, tuple(map(max, a.values, b.values)))


def intersect(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _same_universe(a, b)
    return FuzzySet(a.universe, tuple(map(min, a.values, b.values)))


def scale_product(lam: float, a: FuzzySet) -> FuzzySet:
    """``(lam . A)(x) = lam ^ A(x)``."""
    lam = check_degree(lam, "scale")
    return FuzzySet(a.universe, tuple(min(lam, v) for v in a.values))


def height(a: FuzzySet | Iterable[float]) -> float:
    values = a.values if isinstance(a, FuzzySet) else tuple(a)
    return max(values, default=0.0)


def support(a: FuzzySet) -> frozenset[str]:
    return frozenset(s for s, v in zip(a.universe.symbols, a.values) if v > 0)


def is_subset(a: FuzzySet, b: FuzzySet) -> bool:
    _same_universe(a, b)
    return all(x <= y for x, y in zip(a.values, b.values))


def equals(a: FuzzySet, b: FuzzySet) -> bool:
    return is_subset(a, b) and is_subset(b, a)
