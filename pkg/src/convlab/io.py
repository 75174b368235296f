"""JSON interchange.

Subsets serialize as sorted label arrays, families as arrays of subsets,
filters as their base subset.  A convergence document is

    {"points": ["a", "b"], "lim": {"a": ["a"], "b": ["b"], "a,b": []}}

with one entry per nonempty subset, keyed by the comma-joined sorted label
list.  The pretopology shorthand

    {"vicinity": {"a": ["a", "b"], ...}}

is accepted and expanded through lim ^A = {x : A <= V(x)}.  A map document
is {"map": {"<source label>": "<target label>"}}.
"""

from __future__ import annotations

import json
from typing import Any

from .families import Carrier, CarrierMap, SetFamily, Subset, ValidationError
from .spaces import Convergence, pretopology_from_vicinities, validate_table


def subset_key(carrier: Carrier, mask: int) -> str:
    return ",".join(sorted(carrier.labels_of(mask)))


def subset_to_doc(s: Subset) -> list[str]:
    return sorted(s.labels())


def family_to_doc(fam: SetFamily) -> list[list[str]]:
    return sorted(sorted(m.labels()) for m in fam.members())


def convergence_to_doc(conv: Convergence) -> dict[str, Any]:
    lim = {}
    for m in range(1, conv.carrier.full + 1):
        lim[subset_key(conv.carrier, m)] = sorted(
            conv.carrier.labels_of(conv.table[m]))
    return {"points": list(conv.carrier.labels), "lim": lim}


def _carrier_from_doc(doc: dict) -> Carrier:
    points = doc.get("points")
    if points is None and "vicinity" in doc:
        points = list(doc["vicinity"])
    if not isinstance(points, list) or not all(
            isinstance(p, str) for p in points):
        raise ValidationError(['"points" must be a list of strings'])
    return Carrier(tuple(points))


def convergence_from_doc(doc: dict) -> Convergence:
    """Parse and fully validate; raises ValidationError with one entry per
    problem (schema first, then every violated axiom instance)."""
    if not isinstance(doc, dict):
        raise ValidationError(["document must be a JSON object"])
    carrier = _carrier_from_doc(doc)
    if "vicinity" in doc:
        vic = doc["vicinity"]
        problems = [
            f"vicinity of {p!r} must be a list of labels"
            for p, v in vic.items()
            if not isinstance(v, list)]
        if problems:
            raise ValidationError(problems)
        return pretopology_from_vicinities(
            carrier, {p: tuple(v) for p, v in vic.items()})
    lim = doc.get("lim")
    if not isinstance(lim, dict):
        raise ValidationError(['document needs a "lim" table or "vicinity" map'])
    table = [0] * (carrier.full + 1)
    seen = set()
    problems = []
    for key, val in lim.items():
        labels = [s for s in key.split(",") if s]
        try:
            mask = carrier.mask_of(labels)
        except KeyError as exc:
            problems.append(f"lim key {key!r}: {exc.args[0]}")
            continue
        if mask == 0:
            problems.append("lim key for the empty set is not allowed")
            continue
        try:
            table[mask] = carrier.mask_of(val)
        except (KeyError, TypeError):
            problems.append(f"lim value for {key!r} must be a list of labels")
            continue
        seen.add(mask)
    for m in range(1, carrier.full + 1):
        if m not in seen:
            problems.append(
                f"missing lim entry for {subset_key(carrier, m) or '{}'}")
    if problems:
        raise ValidationError(problems)
    problems = validate_table(carrier, tuple(table))
    if problems:
        raise ValidationError(problems)
    return Convergence(carrier, tuple(table))


def map_from_doc(doc: dict, source: Carrier, target: Carrier) -> CarrierMap:
    if not isinstance(doc, dict) or not isinstance(doc.get("map"), dict):
        raise ValidationError(['map document needs a "map" object'])
    return CarrierMap.of(source, target, doc["map"])


def family_from_doc(doc: Any, carrier: Carrier) -> SetFamily:
    if not isinstance(doc, list) or not all(isinstance(x, list) for x in doc):
        raise ValidationError(["family document must be an array of arrays"])
    return SetFamily.of(carrier, *[tuple(x) for x in doc])


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError([f"{path}: malformed JSON ({exc})"]) from None


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
