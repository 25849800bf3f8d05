"""JSON wire formats: functions, rationals, weight vectors.

Rationals travel as exact "p/q" (or integer "p") strings; decimals are
rejected everywhere so no precision is ever lost in transit.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .core import PartialBooleanFn, check_arity, mask_to_string, string_to_mask
from .errors import SchemaError
from .feasibility import FeasibilityResult, WeightVector

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise SchemaError(f"bad rational literal {text!r}: expected 'p' or 'p/q'")
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    return str(value)


def _parse_mask_list(items: Any, n: int, field: str) -> list[int]:
    if not isinstance(items, list) or any(not isinstance(s, str) for s in items):
        raise SchemaError(f"{field!r} must be a list of bitstrings")
    seen = set()
    masks = []
    for s in items:
        if s in seen:
            raise SchemaError(f"duplicate bitstring {s!r} in {field!r}")
        seen.add(s)
        masks.append(string_to_mask(s, n))
    return masks


def function_from_dict(data: Any) -> PartialBooleanFn:
    if not isinstance(data, dict):
        raise SchemaError("function JSON must be an object")
    missing = {"n", "ones", "zeros"} - set(data)
    if missing:
        raise SchemaError(f"function JSON missing fields: {sorted(missing)}")
    n = data["n"]
    if not isinstance(n, int):
        raise SchemaError(f"'n' must be an integer, got {n!r}")
    check_arity(n)
    ones = _parse_mask_list(data["ones"], n, "ones")
    zeros = _parse_mask_list(data["zeros"], n, "zeros")
    return PartialBooleanFn(n, ones=ones, zeros=zeros)


def function_to_dict(f: PartialBooleanFn) -> dict:
    return {
        "n": f.n,
        "ones": [mask_to_string(m, f.n) for m in f.ones],
        "zeros": [mask_to_string(m, f.n) for m in f.zeros],
    }


def load_function(path: str) -> PartialBooleanFn:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as err:
            raise SchemaError(f"{path}: invalid JSON ({err})") from err
    return function_from_dict(data)


def witness_from_dict(data: Any) -> WeightVector:
    if not isinstance(data, dict) or "z" not in data:
        raise SchemaError("witness JSON must be an object with a 'z' array")
    if not isinstance(data["z"], list):
        raise SchemaError("'z' must be a list of rational strings")
    z = tuple(parse_rational(v) for v in data["z"])
    w = WeightVector(z)
    if "z0" in data and parse_rational(data["z0"]) != w.z0:
        raise SchemaError("'z0' does not equal 1 - sum(z)")
    return w


def witness_to_dict(w: WeightVector) -> dict:
    return {"z0": format_rational(w.z0), "z": [format_rational(v) for v in w.z]}


def load_witness(path: str) -> WeightVector:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as err:
            raise SchemaError(f"{path}: invalid JSON ({err})") from err
    return witness_from_dict(data)


def result_to_dict(result: FeasibilityResult) -> dict:
    out: dict = {"feasible": result.feasible}
    if result.feasible:
        out["witness"] = witness_to_dict(result.witness)
    else:
        out["certificate"] = [format_rational(m) for m in result.certificate.multipliers]
    return out
