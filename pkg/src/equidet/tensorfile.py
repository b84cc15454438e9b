"""JSON tensor files.

A file holds one force system or one configuration:

    {
      "r": 2, "d": 2, "q": 4,
      "kind": "forces",                    // or "configuration"
      "entries": [
        {"idx": [1, 2], "vec": ["3", "-1/2"]},
        ...
      ]
    }

Scalars are strings, either decimal integers or "p/q" with a positive
denominator, so exact values survive any JSON parser.  Index tuples are
strictly increasing, 1-based, of length r; duplicates are rejected and
missing tuples mean the zero vector.  Serialization is canonical: entries
in colex order, zero vectors omitted, scalars in lowest terms.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .tensors import ForceSystem, VectorConfiguration

_SCALAR_RE = re.compile(r"-?\d+(/\d+)?\Z")


def parse_scalar(text) -> Fraction:
    """Exact scalar from a decimal-integer or p/q string."""
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"bad scalar {text!r}: expected an integer or p/q string")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"bad scalar {text!r}: zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_scalar(x) -> str:
    return str(Fraction(x))


def tensor_from_json(doc):
    """Build a ForceSystem or VectorConfiguration from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise ValueError("tensor file must be a JSON object")
    for field in ("r", "d", "q", "kind", "entries"):
        if field not in doc:
            raise ValueError(f"missing field {field!r}")
    r, d, q = doc["r"], doc["d"], doc["q"]
    for name, value in (("r", r), ("d", d), ("q", q)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"field {name!r} must be a positive integer, got {value!r}")
    kind = doc["kind"]
    if kind not in ("forces", "configuration"):
        raise ValueError(f"kind must be 'forces' or 'configuration', got {kind!r}")
    if not isinstance(doc["entries"], list):
        raise ValueError("entries must be a list")
    entries = {}
    for item in doc["entries"]:
        if not isinstance(item, dict) or "idx" not in item or "vec" not in item:
            raise ValueError(f"bad entry {item!r}: expected {{'idx': ..., 'vec': ...}}")
        idx = item["idx"]
        if (
            not isinstance(idx, list)
            or len(idx) != r
            or any(not isinstance(i, int) or isinstance(i, bool) for i in idx)
        ):
            raise ValueError(f"bad idx {idx!r}: expected {r} integers")
        key = tuple(idx)
        if key in entries:
            raise ValueError(f"duplicate idx {key}")
        vec = item["vec"]
        if not isinstance(vec, list) or len(vec) != d:
            raise ValueError(f"bad vec for idx {key}: expected {d} scalars")
        entries[key] = tuple(parse_scalar(x) for x in vec)
    # tuple validity (increasing, within 1..q) is enforced by the constructors
    if kind == "forces":
        return ForceSystem(r, d, q, entries)
    return VectorConfiguration(r, d, q, entries)


def tensor_to_json(obj) -> dict:
    """Canonical JSON document for a ForceSystem or VectorConfiguration."""
    if isinstance(obj, ForceSystem):
        kind, stored = "forces", obj.canonical
    elif isinstance(obj, VectorConfiguration):
        kind, stored = "configuration", obj.entries
    else:
        raise ValueError(f"cannot serialize {type(obj).__name__}")
    keys = sorted(stored, key=lambda t: t[::-1])
    return {
        "r": obj.r,
        "d": obj.d,
        "q": obj.q,
        "kind": kind,
        "entries": [
            {"idx": list(key), "vec": [format_scalar(x) for x in stored[key]]}
            for key in keys
        ],
    }


def load_tensor(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return tensor_from_json(doc)


def dump_tensor(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tensor_to_json(obj), fh, indent=2)
        fh.write("\n")
