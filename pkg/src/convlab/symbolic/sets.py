"""Representable sets on the two countable exemplar carriers.

Two small decidable set algebras:

  PeriodicSet   subsets of N that are eventually periodic with period 2,
                stored as (even-tail flag, odd-tail flag, finite symmetric
                difference).  Contains every finite and every cofinite set
                and, crucially, the even/odd halves used to witness that a
                cofinite filter is not an ultrafilter.
  FinCof        plain finite-or-cofinite subsets of N, used as per-row
                slices of the fan carrier.

The spoke carrier ("prime") is {apex} + N, its representable sets are a
PeriodicSet plus an apex flag.  The fan carrier is {apex} + rows x
positions; a representable set fixes a FinCof slice for finitely many rows
and one uniform FinCof slice for all remaining rows.  All classes are
closed under union, intersection, difference and complement; membership,
emptiness, finiteness and inclusion are decidable, and every set reports a
stability bound beyond which the finite-truncation harness can confirm its
verdicts inside a window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

APEX = -1  # the distinguished point x_infinity on either carrier


class UnrepresentableSet(ValueError):
    """A construction left the representable class."""


@dataclass(frozen=True, slots=True)
class PeriodicSet:
    """Eventually period-2 subset of N: beyond the finite ``diff``,
    membership of x depends only on the parity tail flags."""

    even_tail: bool
    odd_tail: bool
    diff: frozenset[int]

    def __post_init__(self):
        if any(x < 0 for x in self.diff):
            raise UnrepresentableSet("negative positions are not points")

    # -- constructors ------------------------------------------------------
    @classmethod
    def empty(cls) -> "PeriodicSet":
        return cls(False, False, frozenset())

    @classmethod
    def full(cls) -> "PeriodicSet":
        return cls(True, True, frozenset())

    @classmethod
    def of(cls, *xs: int) -> "PeriodicSet":
        return cls(False, False, frozenset(xs))

    @classmethod
    def cofinite_without(cls, *xs: int) -> "PeriodicSet":
        return cls(True, True, frozenset(xs))

    @classmethod
    def evens(cls) -> "PeriodicSet":
        return cls(True, False, frozenset())

    @classmethod
    def odds(cls) -> "PeriodicSet":
        return cls(False, True, frozenset())

    # -- queries -----------------------------------------------------------
    def _tail_contains(self, x: int) -> bool:
        return self.even_tail if x % 2 == 0 else self.odd_tail

    def contains(self, x: int) -> bool:
        return self._tail_contains(x) != (x in self.diff)

    @property
    def is_infinite(self) -> bool:
        return self.even_tail or self.odd_tail

    @property
    def is_finite(self) -> bool:
        return not self.is_infinite

    @property
    def is_empty(self) -> bool:
        return self.is_finite and not self.diff

    def subset_of(self, other: "PeriodicSet") -> bool:
        return (self - other).is_empty

    def meets(self, other: "PeriodicSet") -> bool:
        return not (self & other).is_empty

    def infinitely_meets(self, other: "PeriodicSet") -> bool:
        return (self & other).is_infinite

    def stability_bound(self) -> int:
        return max(self.diff, default=-1) + 1

    def truncate(self, k: int) -> frozenset[int]:
        return frozenset(x for x in range(k + 1) if self.contains(x))

    # -- algebra -----------------------------------------------------------
    def _binop(self, other: "PeriodicSet", op) -> "PeriodicSet":
        et = op(self.even_tail, other.even_tail)
        ot = op(self.odd_tail, other.odd_tail)
        bound = max(self.stability_bound(), other.stability_bound())
        diff = frozenset(
            x for x in range(bound)
            if op(self.contains(x), other.contains(x))
            != (et if x % 2 == 0 else ot))
        return PeriodicSet(et, ot, diff)

    def __and__(self, other):
        return self._binop(other, lambda a, b: a and b)

    def __or__(self, other):
        return self._binop(other, lambda a, b: a or b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a and not b)

    def __invert__(self):
        return PeriodicSet(not self.even_tail, not self.odd_tail, self.diff)


@dataclass(frozen=True, slots=True)
class FinCof:
    """A finite or cofinite subset of N (per-row slices of the fan)."""

    cofinite: bool
    core: frozenset[int]

    def __post_init__(self):
        if any(x < 0 for x in self.core):
            raise UnrepresentableSet("negative positions are not points")

    @classmethod
    def empty(cls) -> "FinCof":
        return cls(False, frozenset())

    @classmethod
    def full(cls) -> "FinCof":
        return cls(True, frozenset())

    @classmethod
    def of(cls, *xs: int) -> "FinCof":
        return cls(False, frozenset(xs))

    @classmethod
    def tail(cls, start: int) -> "FinCof":
        return cls(True, frozenset(range(start)))

    def contains(self, x: int) -> bool:
        return (x in self.core) != self.cofinite

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.core

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    @property
    def is_infinite(self) -> bool:
        return self.cofinite

    def subset_of(self, other: "FinCof") -> bool:
        return (self - other).is_empty

    def meets(self, other: "FinCof") -> bool:
        return not (self & other).is_empty

    def infinitely_meets(self, other: "FinCof") -> bool:
        return (self & other).is_infinite

    def stability_bound(self) -> int:
        return max(self.core, default=-1) + 1

    def truncate(self, k: int) -> frozenset[int]:
        return frozenset(x for x in range(k + 1) if self.contains(x))

    def __and__(self, other: "FinCof") -> "FinCof":
        if not self.cofinite and not other.cofinite:
            return FinCof(False, self.core & other.core)
        if self.cofinite and other.cofinite:
            return FinCof(True, self.core | other.core)
        if self.cofinite:
            return FinCof(False, other.core - self.core)
        return FinCof(False, self.core - other.core)

    def __or__(self, other: "FinCof") -> "FinCof":
        return ~((~self) & (~other))

    def __sub__(self, other: "FinCof") -> "FinCof":
        return self & ~other

    def __invert__(self) -> "FinCof":
        return FinCof(not self.cofinite, self.core)


@dataclass(frozen=True, slots=True)
class PrimeSet:
    """Representable subset of the spoke carrier {apex} + N."""

    apex: bool
    part: PeriodicSet

    @classmethod
    def empty(cls) -> "PrimeSet":
        return cls(False, PeriodicSet.empty())

    @classmethod
    def full(cls) -> "PrimeSet":
        return cls(True, PeriodicSet.full())

    @classmethod
    def of_points(cls, *points: int) -> "PrimeSet":
        return cls(APEX in points,
                   PeriodicSet.of(*[p for p in points if p != APEX]))

    @classmethod
    def cofinite_without(cls, *points: int) -> "PrimeSet":
        return cls(APEX not in points,
                   PeriodicSet.cofinite_without(
                       *[p for p in points if p != APEX]))

    @classmethod
    def even_half(cls) -> "PrimeSet":
        return cls(False, PeriodicSet.evens())

    @classmethod
    def odd_half(cls) -> "PrimeSet":
        return cls(False, PeriodicSet.odds())

    def contains(self, p: int) -> bool:
        return self.apex if p == APEX else self.part.contains(p)

    @property
    def is_empty(self) -> bool:
        return not self.apex and self.part.is_empty

    @property
    def is_finite(self) -> bool:
        return self.part.is_finite

    @property
    def is_infinite(self) -> bool:
        return self.part.is_infinite

    def subset_of(self, other: "PrimeSet") -> bool:
        return (not self.apex or other.apex) and self.part.subset_of(other.part)

    def meets(self, other: "PrimeSet") -> bool:
        return (self.apex and other.apex) or self.part.meets(other.part)

    def infinitely_meets(self, other: "PrimeSet") -> bool:
        return self.part.infinitely_meets(other.part)

    def stability_bound(self) -> int:
        return self.part.stability_bound()

    def truncate(self, k: int) -> frozenset[int]:
        out = set(self.part.truncate(k))
        if self.apex:
            out.add(APEX)
        return frozenset(out)

    def __and__(self, other):
        return PrimeSet(self.apex and other.apex, self.part & other.part)

    def __or__(self, other):
        return PrimeSet(self.apex or other.apex, self.part | other.part)

    def __sub__(self, other):
        return PrimeSet(self.apex and not other.apex, self.part - other.part)

    def __invert__(self):
        return PrimeSet(not self.apex, ~self.part)


@dataclass(frozen=True, slots=True)
class FanSet:
    """Representable subset of the fan carrier {apex} + rows x positions.

    ``overrides`` pins a FinCof slice for finitely many rows; every other
    row carries the uniform ``default`` slice.
    """

    apex: bool
    default: FinCof
    overrides: tuple[tuple[int, FinCof], ...]

    def __post_init__(self):
        rows = [r for r, _ in self.overrides]
        if sorted(set(rows)) != rows or any(r < 0 for r in rows):
            raise UnrepresentableSet("override rows must be sorted, unique")

    @classmethod
    def build(cls, apex: bool, default: FinCof,
              overrides: dict[int, FinCof]) -> "FanSet":
        canon = tuple(sorted(
            (r, s) for r, s in overrides.items() if s != default))
        return cls(apex, default, canon)

    @classmethod
    def empty(cls) -> "FanSet":
        return cls.build(False, FinCof.empty(), {})

    @classmethod
    def full(cls) -> "FanSet":
        return cls.build(True, FinCof.full(), {})

    def slice_of(self, row: int) -> FinCof:
        for r, s in self.overrides:
            if r == row:
                return s
        return self.default

    def override_rows(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.overrides)

    def contains(self, p) -> bool:
        if p == APEX:
            return self.apex
        row, pos = p
        return self.slice_of(row).contains(pos)

    @property
    def is_empty(self) -> bool:
        return (not self.apex and self.default.is_empty
                and all(s.is_empty for _, s in self.overrides))

    @property
    def is_infinite(self) -> bool:
        return (not self.default.is_empty
                or any(s.is_infinite for _, s in self.overrides))

    @property
    def is_finite(self) -> bool:
        return not self.is_infinite

    def subset_of(self, other: "FanSet") -> bool:
        if self.apex and not other.apex:
            return False
        if not self.default.subset_of(other.default):
            return False
        rows = {r for r, _ in self.overrides} | {r for r, _ in other.overrides}
        return all(self.slice_of(r).subset_of(other.slice_of(r))
                   for r in rows)

    def meets(self, other: "FanSet") -> bool:
        return not (self & other).is_empty

    def infinitely_meets(self, other: "FanSet") -> bool:
        return (self & other).is_infinite

    def stability_bound(self) -> int:
        bound = self.default.stability_bound()
        for r, s in self.overrides:
            bound = max(bound, r + 1, s.stability_bound())
        return bound

    def truncate(self, k: int) -> frozenset:
        out = set()
        if self.apex:
            out.add(APEX)
        for n in range(k + 1):
            s = self.slice_of(n)
            for j in range(k + 1):
                if s.contains(j):
                    out.add((n, j))
        return frozenset(out)

    def _zip_slices(self, other: "FanSet", slice_op, flag_op) -> "FanSet":
        rows = {r for r, _ in self.overrides} | {r for r, _ in other.overrides}
        return FanSet.build(
            flag_op(self.apex, other.apex),
            slice_op(self.default, other.default),
            {r: slice_op(self.slice_of(r), other.slice_of(r)) for r in rows})

    def __and__(self, other):
        return self._zip_slices(other, lambda a, b: a & b,
                                lambda a, b: a and b)

    def __or__(self, other):
        return self._zip_slices(other, lambda a, b: a | b,
                                lambda a, b: a or b)

    def __sub__(self, other):
        return self._zip_slices(other, lambda a, b: a - b,
                                lambda a, b: a and not b)

    def __invert__(self):
        return FanSet.build(
            not self.apex, ~self.default,
            {r: ~s for r, s in self.overrides})


def fan_row(n: int) -> FanSet:
    """The full row X_n = {(n, j) : j in N}."""
    return FanSet.build(False, FinCof.empty(), {n: FinCof.full()})


def fan_anchor(n: int) -> FanSet:
    """The singleton of the row anchor x_n = (n, 0)."""
    return FanSet.build(False, FinCof.empty(), {n: FinCof.of(0)})


def fan_apex() -> FanSet:
    return FanSet.build(True, FinCof.empty(), {})


def fan_spine() -> FanSet:
    """X_infinity = {apex} + all anchors: the uniform slice {0}."""
    return FanSet.build(True, FinCof.of(0), {})


def fan_points(*points) -> FanSet:
    rows: dict[int, set[int]] = {}
    apex = False
    for p in points:
        if p == APEX:
            apex = True
        else:
            rows.setdefault(p[0], set()).add(p[1])
    return FanSet.build(apex, FinCof.empty(),
                        {r: FinCof(False, frozenset(ps))
                         for r, ps in rows.items()})


def window_points_prime(k: int) -> Iterator[int]:
    yield APEX
    yield from range(k + 1)


def window_points_fan(k: int) -> Iterator:
    yield APEX
    for n in range(k + 1):
        for j in range(k + 1):
            yield (n, j)
