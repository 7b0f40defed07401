"""JSON function documents: ``{"points": [{"re": .., "im": .., "mult": ..}, ...]}``."""

from __future__ import annotations

import json
import math

from .core import RationalFunction, WeightedPoint
from .errors import DocumentError, DuplicateLocationError


def function_to_document(f: RationalFunction) -> dict:
    return {
        "points": [
            {"re": p.location.real, "im": p.location.imag, "mult": p.multiplicity}
            for p in f.points
        ]
    }


def serialize_function_document(f: RationalFunction) -> str:
    # json writes floats with repr, which round-trips doubles exactly
    return json.dumps(function_to_document(f), indent=2) + "\n"


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"expected a number, got {type(value).__name__}", where)
    value = float(value)
    if not math.isfinite(value):
        raise DocumentError("non-finite coordinate", where)
    return value


def document_to_function(doc) -> RationalFunction:
    if not isinstance(doc, dict) or "points" not in doc:
        raise DocumentError("document must be an object with a 'points' list", "$")
    pts = doc["points"]
    if not isinstance(pts, list):
        raise DocumentError("'points' must be a list", "points")
    out = []
    seen = {}
    for i, entry in enumerate(pts):
        where = f"points[{i}]"
        if not isinstance(entry, dict):
            raise DocumentError("each point must be an object", where)
        for key in ("re", "im", "mult"):
            if key not in entry:
                raise DocumentError(f"missing field '{key}'", where)
        re = _number(entry["re"], f"{where}.re")
        im = _number(entry["im"], f"{where}.im")
        mult = entry["mult"]
        if isinstance(mult, bool) or not isinstance(mult, (int, float)) or mult != int(mult):
            raise DocumentError("'mult' must be an integer", f"{where}.mult")
        if int(mult) == 0:
            raise DocumentError("zero multiplicity", f"{where}.mult")
        z = complex(re, im)
        if z in seen:
            raise DocumentError(
                f"duplicate location ({re!r}, {im!r}); first seen at points[{seen[z]}]",
                where,
            )
        seen[z] = i
        out.append(WeightedPoint(z, int(mult)))
    try:
        return RationalFunction(tuple(out))
    except DuplicateLocationError as exc:  # pragma: no cover - caught above
        raise DocumentError(str(exc)) from exc


def parse_function_document(text: str) -> RationalFunction:
    """Parse a UTF-8 JSON function document.

    Errors carry a position: ``line:col`` for malformed JSON, a field path such
    as ``points[2].mult`` for schema violations.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc.msg}", f"line {exc.lineno}:{exc.colno}") from exc
    return document_to_function(doc)
