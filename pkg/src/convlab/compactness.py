"""Compactness of families at families, compact relations, the
characteristic convergence, and the finite fragment of completeness.

A family A is compact at a family B (for a filter class) when every class
filter meshing A has an adherence meshing B.  Compactoid means compact at
the whole space.  A relation R from (W, theta) to (Z, sigma) is compact
when for every filter converging to w, every class filter on Z meshing the
image filter has an adherence meeting R(w); the class is read at sigma
(so the closed-class selector means sigma-closed principal filters).

On a finite carrier every filter has adherent points, so every space is
compact and the completeness number is 0; completeness_number_finite
verifies the premise rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import (
    CarrierMismatch,
    FiniteFilter,
    FiniteRelation,
    SetFamily,
    Subset,
    bits_of,
)
from .functors import Selector, class_filter_masks
from .spaces import Convergence, adherence_table


@dataclass(frozen=True, slots=True)
class CompactnessQuery:
    conv: Convergence
    at_family: SetFamily      # the family tested for compactness
    relative_to: SetFamily    # the family it should be compact at
    selector: Selector

    def __post_init__(self):
        if (self.at_family.carrier != self.conv.carrier
                or self.relative_to.carrier != self.conv.carrier):
            raise CarrierMismatch("compactness query parts on one carrier")


def _meshes_family(base: int, masks) -> bool:
    return all(base & m for m in masks)


def is_compact_at(q: CompactnessQuery) -> bool:
    """Every class filter meshing the first family has adherence meshing
    the second."""
    adh = adherence_table(q.conv)
    a_masks = q.at_family.masks
    b_masks = q.relative_to.masks
    for c in class_filter_masks(q.selector, q.conv):
        if _meshes_family(c, a_masks) and not _meshes_family(adh[c], b_masks):
            return False
    return True


def compact_at_sets(conv: Convergence, a: Subset, b: Subset,
                    sel: Selector = Selector.F_ALL) -> bool:
    """Set-level compactness: wrap into singleton families."""
    return is_compact_at(CompactnessQuery(
        conv,
        SetFamily(conv.carrier, frozenset({a.bits})),
        SetFamily(conv.carrier, frozenset({b.bits})),
        sel))


def is_compactoid_filter(conv: Convergence, f: FiniteFilter,
                         sel: Selector = Selector.F_ALL) -> bool:
    """Compact at the whole space."""
    return is_compact_at(CompactnessQuery(
        conv,
        f.as_family(),
        SetFamily(conv.carrier, frozenset({conv.carrier.full})),
        sel))


def is_relation_compact(rel: FiniteRelation, theta: Convergence,
                        sigma: Convergence, sel: Selector) -> bool:
    if rel.source != theta.carrier or rel.target != sigma.carrier:
        raise CarrierMismatch("relation endpoints do not match the spaces")
    adh = adherence_table(sigma)
    klass = class_filter_masks(sel, sigma)
    for a in range(1, theta.carrier.full + 1):
        lims = theta.table[a]
        if not lims:
            continue
        img = rel.image_mask(a)
        if not img:
            # image family contains the empty set; nothing meshes it
            continue
        for w in bits_of(lims):
            rw = rel.rows[w]
            for j in klass:
                if j & img and not rw & adh[j]:
                    return False
    return True


def characteristic(conv: Convergence) -> Convergence:
    """All-or-nothing limits: the whole space when the original filter
    converges somewhere, empty otherwise.  Centeredness is inherited from
    the original space (singleton filters always converge)."""
    full = conv.carrier.full
    table = [0] * (full + 1)
    for a in range(1, full + 1):
        table[a] = full if conv.table[a] else 0
    return Convergence(conv.carrier, tuple(table))


@dataclass(frozen=True, slots=True)
class CheckedProposition:
    holds: bool
    witness: dict | None


def image_of_compact(rel: FiniteRelation, theta: Convergence,
                     sigma: Convergence, fam: SetFamily, at: Subset,
                     sel: Selector) -> CheckedProposition:
    """If the relation is class-compact and the family is class-compact at
    the set, the image family must be class-compact at the relational
    image.  Returns the hypothesis/conclusion record; a witness signals a
    failed implication (none is expected)."""
    if fam.carrier != theta.carrier or at.carrier != theta.carrier:
        raise CarrierMismatch("family and base set live on the source")
    rel_ok = is_relation_compact(rel, theta, sigma, sel)
    fam_ok = is_compact_at(CompactnessQuery(
        theta, fam, SetFamily(theta.carrier, frozenset({at.bits})), sel))
    if not (rel_ok and fam_ok):
        return CheckedProposition(True, None)  # hypothesis empty
    image_fam = SetFamily(
        sigma.carrier, frozenset(rel.image_mask(m) for m in fam.masks))
    target = SetFamily(
        sigma.carrier, frozenset({rel.image_mask(at.bits)}))
    ok = is_compact_at(CompactnessQuery(sigma, image_fam, target, sel))
    if ok:
        return CheckedProposition(True, None)
    return CheckedProposition(False, {
        "family": [list(s) for s in fam],
        "at": list(at),
    })


def completeness_number_finite(conv: Convergence) -> int:
    """0, after verifying the space is compact (every filter adherent)."""
    adh = adherence_table(conv)
    for h in range(1, conv.carrier.full + 1):
        if not adh[h]:
            raise AssertionError(
                "finite carrier with a non-adherent filter cannot happen")
    return 0
