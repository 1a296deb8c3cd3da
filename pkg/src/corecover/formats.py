"""Arrangement file format and string codecs.

The on-disk format is a small UTF-8 JSON document:

    {"dim": n, "normals": [[...d integer rows of length n...]],
     "lifts": ["p/q" or "p", ...], "name": "optional"}

Lifts are exact rationals written in lowest terms with positive denominator;
they are parsed strictly (a non-reduced or malformed entry is rejected with
the offending index). Pattern strings use one character per hyperplane over
the alphabet z / w / 0 / *; sign strings use + / -.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd

from .arrangement import Arrangement
from .errors import ParseError
from .stability import Status

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")

_PATTERN_CHARS = {
    "z": Status.Z,
    "w": Status.W,
    "0": Status.ZERO,
    "*": Status.BOTH,
}


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" in lowest terms with q > 0."""
    if not isinstance(text, str):
        raise ParseError("rational values must be strings")
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den != 1 and gcd(abs(num), den) != 1:
        raise ParseError(f"rational {text!r} is not in lowest terms")
    return Fraction(num, den)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_arrangement(data) -> Arrangement:
    """Parse arrangement file bytes or text, enforcing all invariants."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    allowed = {"dim", "normals", "lifts", "name"}
    for key in doc:
        if key not in allowed:
            raise ParseError(f"unexpected key: {key}")
    for key in ("dim", "normals", "lifts"):
        if key not in doc:
            raise ParseError(f"missing key: {key}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer")
    normals = doc["normals"]
    if not isinstance(normals, list) or not normals:
        raise ParseError("normals must be a nonempty array")
    for i, row in enumerate(normals):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"normal {i + 1} must be an array of length {dim}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"normal {i + 1} has a non-integer entry")
    lifts_raw = doc["lifts"]
    if not isinstance(lifts_raw, list):
        raise ParseError("lifts must be an array")
    if len(lifts_raw) != len(normals):
        raise ParseError("lifts length does not match normals")
    lifts = []
    for i, text in enumerate(lifts_raw):
        try:
            lifts.append(parse_rational(text))
        except ParseError:
            raise ParseError(f"bad lift {i + 1}") from None
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string")
    try:
        return Arrangement(
            dim,
            tuple(tuple(row) for row in normals),
            tuple(lifts),
            name=name,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_arrangement(arr: Arrangement) -> str:
    """Canonical file form: fixed key order, lifts in lowest terms."""
    doc = {
        "dim": arr.n,
        "normals": [list(u) for u in arr.normals],
        "lifts": [format_rational(lift) for lift in arr.lifts],
    }
    if arr.name is not None:
        doc["name"] = arr.name
    return json.dumps(doc, indent=2) + "\n"


def parse_pattern(text: str, d: int):
    """One character per hyperplane: z, w, 0 or *."""
    if len(text) != d:
        raise ParseError(f"pattern has length {len(text)}, expected {d}")
    out = []
    for pos, ch in enumerate(text):
        status = _PATTERN_CHARS.get(ch)
        if status is None:
            raise ParseError(
                f"unknown pattern character {ch!r} at position {pos + 1}"
            )
        out.append(status)
    return tuple(out)


def format_pattern(pattern) -> str:
    return "".join(status.value for status in pattern)


def parse_sign_vector(text: str, d: int) -> tuple:
    if len(text) != d:
        raise ParseError(f"sign string has length {len(text)}, expected {d}")
    out = []
    for pos, ch in enumerate(text):
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ParseError(f"unknown sign character {ch!r} at position {pos + 1}")
    return tuple(out)


def format_sign_vector(eps) -> str:
    return "".join("+" if e == 1 else "-" for e in eps)
