"""Finite convergence spaces.

A convergence on a carrier X assigns to each nonempty subset A (standing
for the principal filter of A) the set lim ^A of its limit points, subject
to two axioms:

  centered:  x in lim ^{x}
  antitone:  B <= A  ==>  lim ^A <= lim ^B

(the second is the principal face of isotony: ^A is a subfamily of ^B
exactly when B <= A).  The table is a dense tuple indexed by subset mask,
so limits, adherences and the lattice operations are O(1)-ish bit work.

The empty set is excluded from the table domain: filters here are
non-degenerate, and nothing in the calculus ever asks for lim ^0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .families import (
    Carrier,
    CarrierMismatch,
    CapExceeded,
    DegenerateFilter,
    FiniteFilter,
    InvariantViolation,
    SetFamily,
    Subset,
    ValidationError,
    bits_of,
    complement_family,
)

MAX_PRODUCT = 16


@dataclass(frozen=True, slots=True)
class Convergence:
    """carrier + total limit table over nonempty subset masks."""

    carrier: Carrier
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != (1 << self.carrier.size):
            raise ValidationError(["limit table must cover every subset mask"])

    @classmethod
    def make(cls, carrier: Carrier, table: Iterable[int]) -> "Convergence":
        """Validate and build; raises ValidationError listing every violation."""
        table = tuple(table)
        violations = validate_table(carrier, table)
        if violations:
            raise ValidationError(violations)
        return cls(carrier, table)

    @classmethod
    def from_limits(cls, carrier: Carrier,
                    limits: Mapping[frozenset[str] | tuple[str, ...], Iterable[str]]
                    ) -> "Convergence":
        """Build from a {subset-of-labels: limit-labels} mapping."""
        table = [0] * (1 << carrier.size)
        seen = set()
        for key, val in limits.items():
            mask = carrier.mask_of(key)
            table[mask] = carrier.mask_of(val)
            seen.add(mask)
        missing = [m for m in range(1, carrier.full + 1) if m not in seen]
        if missing:
            raise ValidationError(
                [f"missing limit entry for {set(carrier.labels_of(m))}"
                 for m in missing])
        return cls.make(carrier, table)

    def lim(self, mask: int) -> int:
        return self.table[mask]

    def limit(self, f: FiniteFilter) -> Subset:
        if f.carrier != self.carrier:
            raise CarrierMismatch("filter lives on a different carrier")
        if f.degenerate:
            raise DegenerateFilter("the degenerate filter has no limit")
        return Subset(self.carrier, self.table[f.base])

    def __repr__(self):
        cells = ", ".join(
            f"{set(self.carrier.labels_of(m)) or '{}'}->"
            f"{set(self.carrier.labels_of(self.table[m])) or '{}'}"
            for m in range(1, self.carrier.full + 1))
        return f"Convergence[{cells}]"


def validate_table(carrier: Carrier, table: tuple[int, ...]) -> list[str]:
    """Report every violated axiom instance; empty list means valid."""
    out = []
    full = carrier.full
    if len(table) != full + 1:
        return [f"table has {len(table)} entries, expected {full + 1}"]
    for m in range(1, full + 1):
        if not 0 <= table[m] <= full:
            out.append(
                f"limit of {set(carrier.labels_of(m))} is not a subset")
    if out:
        return out
    for i in carrier.points():
        if not table[1 << i] >> i & 1:
            out.append(f"centered axiom violated at point {carrier.labels[i]}")
    for a in range(1, full + 1):
        for b in range(1, full + 1):
            # b proper nonempty subset of a
            if b & ~a == 0 and b != a and table[a] & ~table[b]:
                out.append(
                    "antitone axiom violated: "
                    f"lim^{set(carrier.labels_of(a))} exceeds "
                    f"lim^{set(carrier.labels_of(b))}")
    return out


# ---------------------------------------------------------------------------
# adherence / openness, mask level
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def adherence_table(conv: Convergence) -> tuple[int, ...]:
    """adh[H] for every mask H: the union of limits over masks meeting H."""
    full = conv.carrier.full
    table = conv.table
    out = [0] * (full + 1)
    for h in range(1, full + 1):
        acc = 0
        for k in range(1, full + 1):
            if k & h:
                acc |= table[k]
        out[h] = acc
    return tuple(out)


def adherence_mask(conv: Convergence, fam_masks: Iterable[int]) -> int:
    """Adherence of an arbitrary family: union of lim^H over H meshing it."""
    fam = list(fam_masks)
    if not fam:
        # vacuous meshing: every filter qualifies
        return adherence_table(conv)[conv.carrier.full]
    if len(fam) == 1:
        return adherence_table(conv)[fam[0]] if fam[0] else 0
    full = conv.carrier.full
    acc = 0
    for h in range(1, full + 1):
        if all(h & a for a in fam):
            acc |= conv.table[h]
    return acc


@lru_cache(maxsize=None)
def open_masks(conv: Convergence) -> tuple[int, ...]:
    """All open masks: O is open iff O meeting lim^A forces A <= O."""
    full = conv.carrier.full
    table = conv.table
    out = []
    for o in range(full + 1):
        if all(not (o & table[a]) or a & ~o == 0 for a in range(1, full + 1)):
            out.append(o)
    return tuple(out)


@lru_cache(maxsize=None)
def closed_masks(conv: Convergence) -> tuple[int, ...]:
    full = conv.carrier.full
    return tuple(sorted(full & ~o for o in open_masks(conv)))


@lru_cache(maxsize=None)
def min_open_table(conv: Convergence) -> tuple[int, ...]:
    """Per point, the smallest open set containing it (opens are cap-closed)."""
    full = conv.carrier.full
    opens = open_masks(conv)
    out = []
    for i in conv.carrier.points():
        acc = full
        for o in opens:
            if o >> i & 1:
                acc &= o
        out.append(acc)
    return tuple(out)


def closure_mask(conv: Convergence, mask: int) -> int:
    """Least closed superset; computed two ways and cross-checked."""
    best = conv.carrier.full
    for c in closed_masks(conv):
        if mask & ~c == 0 and c & ~best == 0:
            best = c
    # independent route: least fixed point of set adherence above `mask`
    adh = adherence_table(conv)
    cur = mask
    while True:
        nxt = adh[cur] | cur if cur else cur
        if nxt == cur:
            break
        cur = nxt
    if cur != best:
        raise InvariantViolation(
            f"closure mismatch: scan {best:#x} vs adherence lfp {cur:#x}")
    return best


# ---------------------------------------------------------------------------
# public, Subset/SetFamily level
# ---------------------------------------------------------------------------

def is_open(conv: Convergence, subset: Subset) -> bool:
    return subset.bits in open_masks(conv)


def is_closed(conv: Convergence, subset: Subset) -> bool:
    return subset.bits in closed_masks(conv)


def open_sets(conv: Convergence) -> SetFamily:
    return SetFamily(conv.carrier, frozenset(open_masks(conv)))


def closed_sets(conv: Convergence) -> SetFamily:
    return SetFamily(conv.carrier, frozenset(closed_masks(conv)))


def interior_mask(conv: Convergence, mask: int) -> int:
    acc = 0
    for o in open_masks(conv):
        if o & ~mask == 0:
            acc |= o
    return acc


def closure(conv: Convergence, subset: Subset) -> Subset:
    return Subset(conv.carrier, closure_mask(conv, subset.bits))


def adherence(conv: Convergence, fam: SetFamily | Subset) -> Subset:
    """Adherence of a family; a bare subset A means the family {A}."""
    if isinstance(fam, Subset):
        fam = SetFamily(conv.carrier, frozenset({fam.bits}))
    if fam.carrier != conv.carrier:
        raise CarrierMismatch("family lives on a different carrier")
    return Subset(conv.carrier, adherence_mask(conv, fam.masks))


def inherence(conv: Convergence, fam: SetFamily) -> Subset:
    """Complement-dual of adherence: inh P = (adh P_c)^c."""
    comp = complement_family(fam)
    return ~adherence(conv, comp)


def is_cover(conv: Convergence, fam: SetFamily, target: Subset) -> bool:
    """Cover test; the three equivalent clauses are each computed and must
    agree (filter clause, inherence clause, complement-adherence clause)."""
    if fam.carrier != conv.carrier or target.carrier != conv.carrier:
        raise CarrierMismatch("cover query parts on different carriers")
    full = conv.carrier.full
    by_filters = all(
        any(h & ~p == 0 for p in fam.masks)
        for h in range(1, full + 1)
        if target.bits & conv.table[h])
    inh = inherence(conv, fam)
    by_inherence = target.bits & ~inh.bits == 0
    adh_c = adherence_mask(conv, complement_family(fam).masks)
    by_adherence = adh_c & target.bits == 0
    if not by_filters == by_inherence == by_adherence:
        raise InvariantViolation(
            f"cover clauses disagree: {by_filters}/{by_inherence}/{by_adherence}")
    return by_filters


def neighborhood_filter(conv: Convergence, label: str) -> FiniteFilter:
    """Up-set of the intersection of all open sets containing the point."""
    i = conv.carrier.index(label)
    return FiniteFilter(conv.carrier, min_open_table(conv)[i])


def vicinity_filter(conv: Convergence, label: str) -> FiniteFilter:
    """The infimum of all principal filters converging to the point: the
    up-set of the union of the sets A with x in lim ^A.  It converges to x
    exactly when the convergence is pretopological at x."""
    i = conv.carrier.index(label)
    acc = 0
    for a in range(1, conv.carrier.full + 1):
        if conv.table[a] >> i & 1:
            acc |= a
    return FiniteFilter(conv.carrier, acc)


# ---------------------------------------------------------------------------
# lattice of convergences
# ---------------------------------------------------------------------------

def _common_carrier(convs: list[Convergence]) -> Carrier:
    if not convs:
        raise ValidationError(["sup/inf need at least one convergence"])
    carrier = convs[0].carrier
    for c in convs[1:]:
        if c.carrier != carrier:
            raise CarrierMismatch("lattice operands on different carriers")
    return carrier


def sup(convs: Iterable[Convergence]) -> Convergence:
    """Pointwise intersection of limit tables (the finest lower bound of
    limits = the supremum in the finer-than order)."""
    convs = list(convs)
    carrier = _common_carrier(convs)
    table = [0] * (carrier.full + 1)
    for m in range(1, carrier.full + 1):
        acc = carrier.full
        for c in convs:
            acc &= c.table[m]
        table[m] = acc
    return Convergence(carrier, tuple(table))


def inf(convs: Iterable[Convergence]) -> Convergence:
    """Pointwise union of limit tables."""
    convs = list(convs)
    carrier = _common_carrier(convs)
    table = [0] * (carrier.full + 1)
    for m in range(1, carrier.full + 1):
        acc = 0
        for c in convs:
            acc |= c.table[m]
        table[m] = acc
    return Convergence(carrier, tuple(table))


def finer(c1: Convergence, c2: Convergence) -> bool:
    """c1 >= c2: every limit set of c1 is inside the matching one of c2."""
    if c1.carrier != c2.carrier:
        raise CarrierMismatch("comparing convergences on different carriers")
    return all(c1.table[m] & ~c2.table[m] == 0
               for m in range(1, c1.carrier.full + 1))


def product(c1: Convergence, c2: Convergence) -> Convergence:
    """Product convergence: componentwise limits of the projected filters."""
    n1, n2 = c1.carrier.size, c2.carrier.size
    if n1 * n2 > MAX_PRODUCT:
        raise CapExceeded(f"product carrier {n1 * n2} exceeds {MAX_PRODUCT}")
    labels = tuple(f"({a},{b})" for a in c1.carrier.labels
                   for b in c2.carrier.labels)
    carrier = Carrier(labels)
    # pair (i, j) sits at bit i*n2 + j
    full = carrier.full
    table = [0] * (full + 1)
    for m in range(1, full + 1):
        p1 = p2 = 0
        for bit in bits_of(m):
            p1 |= 1 << bit // n2
            p2 |= 1 << bit % n2
        l1, l2 = c1.table[p1], c2.table[p2]
        acc = 0
        for i in bits_of(l1):
            for j in bits_of(l2):
                acc |= 1 << (i * n2 + j)
        table[m] = acc
    return Convergence(carrier, tuple(table))


def project_mask(m: int, n2: int, which: int) -> int:
    """Projection of a product mask to factor 0 or 1."""
    out = 0
    for bit in bits_of(m):
        out |= 1 << (bit // n2 if which == 0 else bit % n2)
    return out


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def discrete(carrier: Carrier) -> Convergence:
    """lim ^{x} = {x}; bigger sets converge nowhere."""
    table = [0] * (carrier.full + 1)
    for i in carrier.points():
        table[1 << i] = 1 << i
    return Convergence(carrier, tuple(table))


def indiscrete(carrier: Carrier) -> Convergence:
    """Every filter converges to every point."""
    table = [carrier.full] * (carrier.full + 1)
    table[0] = 0
    return Convergence(carrier, tuple(table))


def pretopology_from_vicinities(carrier: Carrier,
                                vicinity: Mapping[str, Iterable[str]]
                                ) -> Convergence:
    """lim ^A = {x : A <= V(x)}.  Requires x in V(x) for every point."""
    vmasks = [0] * carrier.size
    for label, vs in vicinity.items():
        vmasks[carrier.index(label)] = carrier.mask_of(vs)
    violations = [
        f"centered axiom violated at point {carrier.labels[i]}"
        for i in carrier.points() if not vmasks[i] >> i & 1]
    missing = set(carrier.labels) - set(vicinity)
    violations += [f"vicinity map misses point {m}" for m in sorted(missing)]
    if violations:
        raise ValidationError(violations)
    table = [0] * (carrier.full + 1)
    for a in range(1, carrier.full + 1):
        table[a] = sum(
            1 << i for i in carrier.points() if a & ~vmasks[i] == 0)
    return Convergence(carrier, tuple(table))


def topology_from_opens(carrier: Carrier,
                        opens: Iterable[Subset | int | Iterable[str]]
                        ) -> Convergence:
    """Build the convergence of a topology given its open-set system."""
    masks = set()
    for o in opens:
        if isinstance(o, Subset):
            masks.add(o.bits)
        elif isinstance(o, int):
            masks.add(o)
        else:
            masks.add(carrier.mask_of(o))
    violations = []
    if 0 not in masks or carrier.full not in masks:
        violations.append("open system must contain the empty set and the carrier")
    for a in masks:
        for b in masks:
            if a | b not in masks or a & b not in masks:
                violations.append("open system not closed under union/intersection")
                break
        else:
            continue
        break
    if violations:
        raise ValidationError(violations)
    nbhd = []
    for i in carrier.points():
        acc = carrier.full
        for o in masks:
            if o >> i & 1:
                acc &= o
        nbhd.append(acc)
    table = [0] * (carrier.full + 1)
    for a in range(1, carrier.full + 1):
        table[a] = sum(1 << i for i in carrier.points() if a & ~nbhd[i] == 0)
    return Convergence(carrier, tuple(table))
