"""
JSON, plain-text and LaTeX renderings of series.

JSON layout::

    {"order": n, "basis": "words" | "rnested" | "bch", "anchor": "first" | "last" | null,
     "terms": [{"perm": [...]} | {"indices": [...]} | {"word": "XY..."}, ...]}

with every term carrying ``"coeff": {"num": "<int>", "den": "<int>"}`` and terms
listed in lexicographic order of their labels.
"""
from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .magnus import RNestedCombination
from .perm import Combination

_COEFF = {
    "type": "object",
    "properties": {
        "num": {"type": "string", "pattern": "^-?[0-9]+$"},
        "den": {"type": "string", "pattern": "^[1-9][0-9]*$"},
    },
    "required": ["num", "den"],
    "additionalProperties": False,
}
_INTS = {"type": "array", "items": {"type": "integer", "minimum": 1}}

SERIES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 0},
        "basis": {"enum": ["words", "rnested", "bch"]},
        "anchor": {"enum": ["first", "last", None]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "perm": _INTS,
                    "indices": _INTS,
                    "word": {"type": "string", "pattern": "^[XY]*$"},
                    "coeff": _COEFF,
                },
                "required": ["coeff"],
                "oneOf": [{"required": ["perm"]}, {"required": ["indices"]}, {"required": ["word"]}],
                "additionalProperties": False,
            },
        },
    },
    "required": ["order", "basis", "anchor", "terms"],
    "additionalProperties": False,
}


def rational_to_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def series_to_json(x, order: int | None = None, basis: str | None = None) -> dict:
    """
    JSON-ready dictionary for a word combination, a right-nested combination or a BCH word combination.
    """
    if isinstance(x, RNestedCombination):
        return {
            "order": x.order,
            "basis": "rnested",
            "anchor": x.anchor,
            "terms": [{"indices": list(k), "coeff": rational_to_json(c)} for k, c in x.sorted_items()],
        }
    if not isinstance(x, Combination):
        raise TypeError(f"cannot serialize {type(x).__name__}")
    is_bch = basis == "bch" or any(isinstance(k, str) for k in x)
    n = x.grade if order is None else order
    if is_bch:
        terms = [{"word": k, "coeff": rational_to_json(c)} for k, c in x.sorted_items()]
        return {"order": n, "basis": "bch", "anchor": None, "terms": terms}
    terms = [{"perm": list(k), "coeff": rational_to_json(c)} for k, c in x.sorted_items()]
    return {"order": n, "basis": "words", "anchor": None, "terms": terms}


def series_from_json(obj: dict):
    validate_series(obj)
    basis = obj["basis"]
    if basis == "rnested":
        terms = Combination((tuple(t["indices"]), rational_from_json(t["coeff"])) for t in obj["terms"])
        return RNestedCombination(obj["order"], obj["anchor"], terms)
    key = "word" if basis == "bch" else "perm"
    conv = str if basis == "bch" else tuple
    return Combination((conv(t[key]), rational_from_json(t["coeff"])) for t in obj["terms"])


def validate_series(obj: dict) -> None:
    jsonschema.validate(obj, SERIES_SCHEMA)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _label_text(key) -> str:
    if isinstance(key, str):
        return key
    return "A(" + " ".join(map(str, key)) + ")"


def _join(pieces: list[tuple[Fraction, str]], fmt_coeff) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (c, label) in enumerate(pieces):
        mag = abs(c)
        body = label if mag == 1 else f"{fmt_coeff(mag)} {label}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _frac_latex(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _pieces(x) -> list[tuple[Fraction, str]]:
    if isinstance(x, RNestedCombination):
        return [(c, "A[" + ",".join(map(str, k)) + "]") for k, c in x.sorted_items()]
    return [(c, _label_text(k)) for k, c in x.sorted_items()]


def to_text(x) -> str:
    """
    Exact one-line rendering with ``p/q`` coefficients.

    >>> from magnus_perm.magnus import omega_rnested
    >>> to_text(omega_rnested(2))
    '-1/2 A[2,1]'
    """
    return _join(_pieces(x), _frac_text)


def to_latex(x) -> str:
    r"""
    LaTeX rendering, e.g. ``\frac{1}{3} A(1 2 3) - \frac{1}{6} A(1 3 2) ...``.
    """
    pieces = []
    for c, label in _pieces(x):
        if label.startswith("A(") or label.startswith("A["):
            label = label.replace(" ", r"\,") if label.startswith("A(") else label.replace(",", ", ")
        pieces.append((c, label))
    return _join(pieces, _frac_latex)
