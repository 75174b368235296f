"""Adherence-determined reflectors and the finite coreflectors.

A reflector here is the generic operator

    lim' ^F  =  intersection of adh ^H  over class filters ^H meshing ^F

instantiated at four filter classes: closed principal filters of the
argument space (the topologizer T), principal filters (the pretopologizer
S0), countably based filters (the paratopologizer S1) and all filters (the
pseudotopologizer S).  On a finite carrier the last three classes contain
exactly the same concrete filters; the selectors keep distinct enumeration
code paths and the collapse is a tested theorem, not an assumption.

The closed-principal class mentions the space's own closed sets, so T is
iterated to a fixed point (one application already lands on the topology;
the loop is the honest formulation).  topologize() is the independent
open-set construction used as an oracle against reflect(F0_CLOSED, .).

Coreflectors Seq (sequentially based), I1 (countable character) and K
(locally compactoid) are implemented from their filter-class definitions;
that they all equal the identity on finite carriers is again a tested
theorem.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .families import Carrier, InvariantViolation, ValidationError, bits_of
from .spaces import (
    Convergence,
    adherence_table,
    closed_masks,
    finer,
    min_open_table,
)


class Selector(enum.Enum):
    """Filter-class selector for adherence-determined reflection."""

    F0_CLOSED = "F0_CLOSED"
    F0 = "F0"
    F1 = "F1"
    F_ALL = "F"


def _principal_masks(carrier: Carrier) -> tuple[int, ...]:
    """Bases of all non-degenerate principal filters."""
    return tuple(range(1, carrier.full + 1))


def _countably_based_masks(carrier: Carrier) -> tuple[int, ...]:
    """Bases of all countably based filters.

    A countable base on a finite carrier is a descending chain of sets that
    stabilizes, so each such filter is the principal filter of its minimum.
    """
    return tuple(range(1, carrier.full + 1))


def _all_filter_masks(carrier: Carrier) -> tuple[int, ...]:
    """Bases of all non-degenerate filters.

    Every filter on a finite carrier attains its intersection, hence is
    principal; the enumeration is by minimum member.
    """
    return tuple(range(1, carrier.full + 1))


def _closed_principal_masks(conv: Convergence) -> tuple[int, ...]:
    return tuple(m for m in closed_masks(conv) if m)


def class_filter_masks(sel: Selector, conv: Convergence) -> tuple[int, ...]:
    """Concrete filter bases of the selector class at this space."""
    if sel is Selector.F0_CLOSED:
        return _closed_principal_masks(conv)
    if sel is Selector.F0:
        return _principal_masks(conv.carrier)
    if sel is Selector.F1:
        return _countably_based_masks(conv.carrier)
    if sel is Selector.F_ALL:
        return _all_filter_masks(conv.carrier)
    raise ValidationError([f"unknown selector {sel!r}"])


def _adh_determined_step(sel: Selector, conv: Convergence) -> Convergence:
    """One application of the adherence-determined operator."""
    carrier = conv.carrier
    adh = adherence_table(conv)
    klass = class_filter_masks(sel, conv)
    table = [0] * (carrier.full + 1)
    for f in range(1, carrier.full + 1):
        acc = carrier.full
        for h in klass:
            if h & f:
                acc &= adh[h]
        table[f] = acc
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def reflect(sel: Selector, conv: Convergence) -> Convergence:
    """The reflection of ``conv`` under the selector's operator."""
    cur = conv
    while True:
        nxt = _adh_determined_step(sel, cur)
        if nxt.table == cur.table:
            return nxt
        cur = nxt


@lru_cache(maxsize=None)
def topologize(conv: Convergence) -> Convergence:
    """Topological reflection via open sets: x is a limit of ^A exactly when
    every open set containing x includes A.  Must agree with
    reflect(F0_CLOSED, .) bit-exactly."""
    carrier = conv.carrier
    nbhd = min_open_table(conv)
    table = [0] * (carrier.full + 1)
    for a in range(1, carrier.full + 1):
        table[a] = sum(1 << i for i in carrier.points() if a & ~nbhd[i] == 0)
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def pretopologize(conv: Convergence) -> Convergence:
    return reflect(Selector.F0, conv)


@lru_cache(maxsize=None)
def paratopologize(conv: Convergence) -> Convergence:
    return reflect(Selector.F1, conv)


@lru_cache(maxsize=None)
def pseudotopologize(conv: Convergence) -> Convergence:
    return reflect(Selector.F_ALL, conv)


# ---------------------------------------------------------------------------
# coreflectors
# ---------------------------------------------------------------------------

def _sequential_filter_masks(carrier: Carrier) -> tuple[int, ...]:
    """Bases of all sequential filters on a finite carrier.

    A sequential filter is the cofinite filter of a countable set centered
    at a subset; with the carrier finite, (B/A)_0 = ^A for any finite B, so
    the sequential filters are exactly the principal ones.
    """
    return tuple(range(1, carrier.full + 1))


def _is_compactoid_mask(conv: Convergence, k: int) -> bool:
    """{K} compact at the whole space: every filter meshing K has adherent
    points."""
    if k == 0:
        return False
    adh = adherence_table(conv)
    return all(adh[h] for h in range(1, conv.carrier.full + 1) if h & k)


@lru_cache(maxsize=None)
def seq_coreflect(conv: Convergence) -> Convergence:
    """Coarsest sequentially based convergence finer than the input:
    limits through sequential subfilters only."""
    carrier = conv.carrier
    table = [0] * (carrier.full + 1)
    seqs = _sequential_filter_masks(carrier)
    for a in range(1, carrier.full + 1):
        acc = 0
        for e in seqs:
            # ^e coarser-or-equal ^a  <=>  a <= e
            if a & ~e == 0:
                acc |= conv.table[e]
        table[a] = acc
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def countable_character_coreflect(conv: Convergence) -> Convergence:
    """Limits through countably based subfilters only."""
    carrier = conv.carrier
    table = [0] * (carrier.full + 1)
    cbs = _countably_based_masks(carrier)
    for a in range(1, carrier.full + 1):
        acc = 0
        for e in cbs:
            if a & ~e == 0:
                acc |= conv.table[e]
        table[a] = acc
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def locally_compactoid_coreflect(conv: Convergence) -> Convergence:
    """Keep a limit only when the filter contains a compactoid member."""
    carrier = conv.carrier
    table = [0] * (carrier.full + 1)
    for a in range(1, carrier.full + 1):
        has_compactoid_member = any(
            _is_compactoid_mask(conv, k)
            for k in range(1, carrier.full + 1) if a & ~k == 0)
        table[a] = conv.table[a] if has_compactoid_member else 0
    return Convergence(carrier, tuple(table))


# ---------------------------------------------------------------------------
# handles
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FunctorHandle:
    tag: str
    kind: str  # reflector | coreflector | identity

    def __call__(self, conv: Convergence) -> Convergence:
        return _APPLY[self.tag](conv)

    @property
    def selector(self) -> Selector:
        try:
            return _REFLECTOR_SELECTOR[self.tag]
        except KeyError:
            raise ValidationError(
                [f"{self.tag} is not an adherence-determined reflector"]) from None


_APPLY = {
    "T": topologize,
    "S0": pretopologize,
    "S1": paratopologize,
    "S": pseudotopologize,
    "I": lambda conv: conv,
    "Seq": seq_coreflect,
    "I1": countable_character_coreflect,
    "K": locally_compactoid_coreflect,
}

_REFLECTOR_SELECTOR = {
    "T": Selector.F0_CLOSED,
    "S0": Selector.F0,
    "S1": Selector.F1,
    "S": Selector.F_ALL,
}

T = FunctorHandle("T", "reflector")
S0 = FunctorHandle("S0", "reflector")
S1 = FunctorHandle("S1", "reflector")
S = FunctorHandle("S", "reflector")
I = FunctorHandle("I", "identity")
SEQ = FunctorHandle("Seq", "coreflector")
I1 = FunctorHandle("I1", "coreflector")
K = FunctorHandle("K", "coreflector")

HANDLES = {h.tag: h for h in (T, S0, S1, S, I, SEQ, I1, K)}
REFLECTORS = (T, S0, S1, S)
COREFLECTORS = (SEQ, I1, K)


def handle(tag: str) -> FunctorHandle:
    try:
        return HANDLES[tag]
    except KeyError:
        raise ValidationError(
            [f"unknown functor {tag!r}; choose from {sorted(HANDLES)}"]) from None


# ---------------------------------------------------------------------------
# class-membership predicates
# ---------------------------------------------------------------------------

def is_topology(conv: Convergence) -> bool:
    return topologize(conv).table == conv.table


def is_pretopology(conv: Convergence) -> bool:
    return pretopologize(conv).table == conv.table


def is_pseudotopology(conv: Convergence) -> bool:
    """Fixed point of S; cross-checked against the ultrafilter formula
    lim F = intersection of lim U over ultrafilters U above F."""
    by_fixed_point = pseudotopologize(conv).table == conv.table
    table = conv.table
    full = conv.carrier.full
    by_ultrafilters = True
    for a in range(1, full + 1):
        acc = full
        for i in bits_of(a):
            acc &= table[1 << i]
        if acc != table[a]:
            by_ultrafilters = False
            break
    if by_fixed_point != by_ultrafilters:
        raise InvariantViolation(
            "pseudotopology tests disagree: "
            f"fixed-point {by_fixed_point}, ultrafilter {by_ultrafilters}")
    return by_fixed_point


# ---------------------------------------------------------------------------
# law checking
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class LawReport:
    functor: str
    checked: int = 0
    failures: list[str] = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures


def _continuous_maps(src: Convergence, dst: Convergence,
                     maps: Iterable) -> set:
    from .maps import MapContext, continuous  # local: avoid import cycle
    out = set()
    for f in maps:
        if continuous(MapContext(f, src, dst)):
            out.add(f)
    return out


def check_functor_laws(h: FunctorHandle, convs: list[Convergence],
                       maps: Iterable = ()) -> LawReport:
    """Verify isotone, idempotent, contractive/expansive, and (when maps are
    supplied) functoriality on the given sample."""
    report = LawReport(h.tag)
    maps = list(maps)
    for c in convs:
        hc = h(c)
        report.checked += 1
        if h(hc).table != hc.table:
            report.failures.append(f"{h.tag} not idempotent on {c!r}")
        if h.kind in ("reflector", "identity") and not finer(c, hc):
            report.failures.append(f"{h.tag} not contractive on {c!r}")
        if h.kind in ("coreflector", "identity") and not finer(hc, c):
            report.failures.append(f"{h.tag} not expansive on {c!r}")
    for c1 in convs:
        for c2 in convs:
            if c1.carrier != c2.carrier:
                continue
            report.checked += 1
            if finer(c1, c2) and not finer(h(c1), h(c2)):
                report.failures.append(
                    f"{h.tag} not isotone on a pair over {c1.carrier.labels}")
    if maps:
        from .maps import MapContext, continuous
        for c1 in convs:
            for c2 in convs:
                for f in maps:
                    if (f.source != c1.carrier or f.target != c2.carrier):
                        continue
                    report.checked += 1
                    if continuous(MapContext(f, c1, c2)) and not continuous(
                            MapContext(f, h(c1), h(c2))):
                        report.failures.append(
                            f"{h.tag} not functorial on a map "
                            f"{c1.carrier.labels}->{c2.carrier.labels}")
    return report
