"""Exhaustive generation of convergences, pretopologies, pseudotopologies
and topologies on small carriers, plus predicate-driven counterexample
search.

Enumeration strategy per class:

  convergence     per point, the downsets of the nonempty-subset poset
                  that contain the singleton (one downset = the sets whose
                  principal filter converges to the point); the space is
                  the product of independent per-point choices.
  pretopology     vicinity maps V(x) containing x; lim ^A = {x : A <= V(x)}.
  pseudotopology  same concrete parameterization: on a finite carrier a
                  pseudotopology is determined by its point-filter limits,
                  which is the vicinity data again.
  topology        brute force over open-set systems (the independent
                  oracle for the class counts).

Streams are duplicate-free and deterministically ordered; caps are n <= 3
for general convergences and n <= 4 for the other classes (seeded sampling
is the escape hatch for larger n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .families import CapExceeded, Carrier, CarrierMap, ValidationError
from .spaces import Convergence, topology_from_opens
from .utils import parallel_map

CONVERGENCE_CAP = 3
PRETOPOLOGY_CAP = 4

CLASSES = ("convergence", "pseudotopology", "pretopology", "topology")


@dataclass(frozen=True, slots=True)
class EnumerationSpec:
    size: int
    klass: str
    seed: int | None = None
    count: int | None = None

    def __post_init__(self):
        if self.klass not in CLASSES:
            raise ValidationError(
                [f"unknown class {self.klass!r}; choose from {CLASSES}"])


def default_carrier(n: int) -> Carrier:
    return Carrier(tuple("abcdefghijklmnop"[:n]))


@lru_cache(maxsize=None)
def point_downsets(n: int, i: int) -> tuple[int, ...]:
    """Downsets of the nonempty-subset poset of an n-carrier containing the
    singleton of point i, encoded as bitsets over masks (bit m = mask m in
    the downset).  Ascending order."""
    full = (1 << n) - 1
    singleton = 1 << i
    out = []
    for cand in range(1 << (full + 1)):
        if not cand >> singleton & 1 or cand & 1:
            continue  # must contain {i}; bit 0 (the empty set) stays clear
        ok = True
        for m in range(1, full + 1):
            if cand >> m & 1:
                sub = (m - 1) & m
                while sub:
                    if not cand >> sub & 1:
                        ok = False
                        break
                    sub = (sub - 1) & m
                if not ok:
                    break
        if ok:
            out.append(cand)
    return tuple(out)


def _conv_from_downsets(carrier: Carrier, choice: tuple[int, ...]) -> Convergence:
    full = carrier.full
    table = [0] * (full + 1)
    for a in range(1, full + 1):
        table[a] = sum(1 << i for i in carrier.points()
                       if choice[i] >> a & 1)
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def all_convergences(carrier: Carrier) -> tuple[Convergence, ...]:
    if carrier.size > CONVERGENCE_CAP:
        raise CapExceeded(
            f"general convergences are enumerated up to n={CONVERGENCE_CAP}")
    n = carrier.size
    downsets = [point_downsets(n, i) for i in carrier.points()]
    out = []
    idx = [0] * n
    while True:
        out.append(_conv_from_downsets(
            carrier, tuple(downsets[i][idx[i]] for i in range(n))))
        k = n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < len(downsets[k]):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return tuple(out)


def _pretopology_from_vmasks(carrier: Carrier, vmasks: tuple[int, ...]) -> Convergence:
    full = carrier.full
    table = [0] * (full + 1)
    for a in range(1, full + 1):
        table[a] = sum(1 << i for i in carrier.points()
                       if a & ~vmasks[i] == 0)
    return Convergence(carrier, tuple(table))


@lru_cache(maxsize=None)
def all_pretopologies(carrier: Carrier) -> tuple[Convergence, ...]:
    if carrier.size > PRETOPOLOGY_CAP:
        raise CapExceeded(
            f"pretopologies are enumerated up to n={PRETOPOLOGY_CAP}")
    n = carrier.size
    out = []
    vmask_options = [
        [v for v in range(carrier.full + 1) if v >> i & 1]
        for i in range(n)]
    idx = [0] * n
    while True:
        out.append(_pretopology_from_vmasks(
            carrier, tuple(vmask_options[i][idx[i]] for i in range(n))))
        k = n - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < len(vmask_options[k]):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return tuple(out)


def all_pseudotopologies(carrier: Carrier) -> tuple[Convergence, ...]:
    """Finite carriers: pseudotopologies are exactly the pretopologies
    (point-filter limits determine both); same deterministic stream."""
    return all_pretopologies(carrier)


@lru_cache(maxsize=None)
def all_open_systems(carrier: Carrier) -> tuple[frozenset[int], ...]:
    """All open-set systems (families containing {} and X, closed under
    union and intersection), brute force over proper nonempty masks."""
    if carrier.size > PRETOPOLOGY_CAP:
        raise CapExceeded(
            f"topologies are enumerated up to n={PRETOPOLOGY_CAP}")
    full = carrier.full
    proper = [m for m in range(1, full)]
    out = []
    for pick in range(1 << len(proper)):
        opens = {0, full}
        for k, m in enumerate(proper):
            if pick >> k & 1:
                opens.add(m)
        if all(a | b in opens and a & b in opens
               for a in opens for b in opens):
            out.append(frozenset(opens))
    return tuple(out)


@lru_cache(maxsize=None)
def all_topologies(carrier: Carrier) -> tuple[Convergence, ...]:
    return tuple(topology_from_opens(carrier, opens)
                 for opens in all_open_systems(carrier))


def random_convergence(carrier: Carrier, rng: random.Random) -> Convergence:
    """A uniformly seeded (not uniformly distributed) valid table: random
    per-point downsets."""
    n = carrier.size
    choice = []
    for i in carrier.points():
        options = point_downsets(n, i)
        choice.append(options[rng.randrange(len(options))])
    return _conv_from_downsets(carrier, tuple(choice))


def sample_convergences(carrier: Carrier, count: int,
                        seed: int) -> tuple[Convergence, ...]:
    rng = random.Random(seed)
    return tuple(random_convergence(carrier, rng) for _ in range(count))


def enumerate_spaces(spec: EnumerationSpec,
                     workers: int | None = None) -> tuple[Convergence, ...]:
    """Materialize the stream; with several workers the parameter grid is
    chunked and rebuilt in index order, so the result is identical."""
    carrier = default_carrier(spec.size)
    if spec.count is not None:
        if spec.seed is None:
            raise ValidationError(["sampling needs a seed"])
        return sample_convergences(carrier, spec.count, spec.seed)
    if spec.klass == "convergence":
        stream = all_convergences(carrier)
    elif spec.klass in ("pretopology", "pseudotopology"):
        stream = all_pretopologies(carrier)
    else:
        stream = all_topologies(carrier)
    if workers is not None and workers > 1:
        # rebuild from tables in parallel; order-preserving by construction
        rebuilt = parallel_map(_identity_conv, stream, workers=workers)
        return tuple(rebuilt)
    return stream


def _identity_conv(conv: Convergence) -> Convergence:
    return conv


def count_spaces(spec: EnumerationSpec) -> int:
    return len(enumerate_spaces(spec))


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def surjections(source: Carrier, target: Carrier) -> tuple[CarrierMap, ...]:
    """All surjections, ordered by mapping tuple."""
    out = []
    n, m = source.size, target.size
    for code in range(m ** n):
        mapping = []
        c = code
        for _ in range(n):
            mapping.append(c % m)
            c //= m
        if len(set(mapping)) == m:
            out.append(CarrierMap(source, target, tuple(mapping)))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class SearchResult:
    predicate: str
    witness: dict | None
    examined: int

    @property
    def exhausted(self) -> bool:
        return self.witness is None


@dataclass(frozen=True, slots=True)
class SearchEntry:
    description: str
    candidates: Callable[[], Iterator]
    test: Callable[[object], bool]
    serialize: Callable[[object], dict]


def _context_candidates(src_n: int, dst_n: int):
    """Deterministic (map, source, target) stream over full universes."""
    from .maps import MapContext
    src_c = default_carrier(src_n)
    dst_c = Carrier(tuple("pqrs"[:dst_n]))
    maps = surjections(src_c, dst_c)
    if src_n <= CONVERGENCE_CAP:
        sources = all_convergences(src_c)
    else:
        sources = all_topologies(src_c)
    targets = all_convergences(dst_c)

    def gen():
        for f in maps:
            for xi in sources:
                for tau in targets:
                    yield MapContext(f, xi, tau)
    return gen


def _serialize_context(ctx) -> dict:
    from .io import convergence_to_doc
    return {
        "map": {lab: ctx.f(lab) for lab in ctx.f.source.labels},
        "source": convergence_to_doc(ctx.source),
        "target": convergence_to_doc(ctx.target),
    }


def _flag_test(want: dict[str, bool]) -> Callable:
    from .maps import classify

    def test(ctx) -> bool:
        report = classify(ctx)
        return all(getattr(report, k) == v for k, v in want.items())
    return test


def _topology_final_candidates(src_n: int, dst_n: int):
    from .maps import final_convergence

    src_c = default_carrier(src_n)
    dst_c = Carrier(tuple("pqrs"[:dst_n]))
    maps = surjections(src_c, dst_c)
    tops = all_topologies(src_c)

    def gen():
        for f in maps:
            for xi in tops:
                yield (f, xi, final_convergence(f, xi))
    return gen


def _final_not_topology(cand) -> bool:
    from .functors import is_topology
    return not is_topology(cand[2])


def _serialize_final(cand) -> dict:
    from .io import convergence_to_doc
    f, xi, fxi = cand
    return {
        "map": {lab: f(lab) for lab in f.source.labels},
        "source": convergence_to_doc(xi),
        "final": convergence_to_doc(fxi),
    }


def _closed_image_candidates():
    from .maps import MapContext, continuous
    gen0 = _context_candidates(3, 2)

    def gen():
        for ctx in gen0():
            if continuous(ctx):
                yield ctx
    return gen


def _closed_image_not_closed(ctx) -> bool:
    from .spaces import closed_masks
    closed_t = set(closed_masks(ctx.target))
    return any(ctx.f.image_mask(c) not in closed_t
               for c in closed_masks(ctx.source))


PREDICATES: dict[str, SearchEntry] = {}


def _register_flag_predicate(name: str, description: str,
                             want: dict[str, bool],
                             src_n: int = 3, dst_n: int = 2):
    PREDICATES[name] = SearchEntry(
        description, _context_candidates(src_n, dst_n),
        _flag_test(want), _serialize_context)


def _bijection_candidates(n: int):
    """Bijections over (pretopology, topology) pairs: the home of the
    quotient-but-not-hereditarily-quotient pattern.  On a 2-point target
    the two classes provably coincide (a 2-point pretopology is a topology
    and openness is a pretopological invariant), so the hunt needs equal
    3-point carriers."""
    from .maps import MapContext
    carrier = default_carrier(n)
    maps = [f for f in surjections(carrier, carrier) if f.is_bijective()]
    sources = all_pretopologies(carrier)
    targets = all_topologies(carrier)

    def gen():
        for f in maps:
            for xi in sources:
                for tau in targets:
                    yield MapContext(f, xi, tau)
    return gen


PREDICATES["quotient_not_hereditarily_quotient"] = SearchEntry(
    "quotient surjection that is not hereditarily quotient",
    _bijection_candidates(3),
    _flag_test({"quotient": True, "hereditarily_quotient": False}),
    _serialize_context)
_register_flag_predicate(
    "closed_not_adherent",
    "closed surjection that is not adherent",
    {"closed": True, "adherent": False})
_register_flag_predicate(
    "quotient_not_closed",
    "quotient surjection that is not closed",
    {"quotient": True, "closed": False})
_register_flag_predicate(
    "almost_open_not_open",
    "almost open surjection that is not open",
    {"almost_open": True, "open": False})
_register_flag_predicate(
    "biquotient_not_almost_open",
    "biquotient surjection that is not almost open",
    {"biquotient": True, "almost_open": False})
_register_flag_predicate(
    "biquotient_not_perfect",
    "biquotient surjection that is not perfect",
    {"biquotient": True, "perfect": False})
_register_flag_predicate(
    "hereditarily_quotient_not_biquotient",
    "collapses at finite scale: expected exhausted",
    {"hereditarily_quotient": True, "biquotient": False}, src_n=2, dst_n=2)
_register_flag_predicate(
    "perfect_not_closed",
    "impossible by the implication ladder: expected exhausted",
    {"perfect": True, "closed": False}, src_n=2, dst_n=2)

PREDICATES["topology_final_not_topology"] = SearchEntry(
    "topology whose final convergence is not a topology (4 -> 3)",
    _topology_final_candidates(4, 3), _final_not_topology, _serialize_final)
PREDICATES["topology_final_not_topology_3to2"] = SearchEntry(
    "same hunt at 3 -> 2; provably exhausted (2-point pretopologies are "
    "topologies and finality onto 2 points preserves pretopologies)",
    _topology_final_candidates(3, 2), _final_not_topology, _serialize_final)
PREDICATES["continuous_image_of_closed_not_closed"] = SearchEntry(
    "continuous surjection and a closed set with non-closed image",
    _closed_image_candidates(), _closed_image_not_closed, _serialize_context)


@dataclass(frozen=True, slots=True)
class SearchTask:
    predicate: str
    limit: int | None = None

    def __post_init__(self):
        if self.predicate not in PREDICATES:
            raise ValidationError(
                [f"unknown predicate {self.predicate!r}; "
                 f"choose from {sorted(PREDICATES)}"])


def search(task: SearchTask) -> SearchResult:
    """First witness in the deterministic candidate order, or exhaustion
    with the number of examined candidates."""
    entry = PREDICATES[task.predicate]
    examined = 0
    for cand in entry.candidates():
        examined += 1
        if entry.test(cand):
            return SearchResult(task.predicate, entry.serialize(cand), examined)
        if task.limit is not None and examined >= task.limit:
            break
    return SearchResult(task.predicate, None, examined)
