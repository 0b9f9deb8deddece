from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from magnus_perm.bch import bch_words
from magnus_perm.magnus import omega_rnested, omega_word
from magnus_perm.perm import Combination
from magnus_perm.serialize import (
    rational_from_json,
    rational_to_json,
    series_from_json,
    series_to_json,
    to_latex,
    to_text,
    validate_series,
)


@pytest.mark.parametrize(
    "series",
    [omega_word(3), omega_word(5), omega_rnested(4, "first"), omega_rnested(4, "last"), bch_words(4)],
    ids=["w3", "w5", "r4f", "r4l", "bch4"],
)
def test_round_trip(series):
    doc = series_to_json(series)
    validate_series(doc)
    assert series_from_json(doc) == series


def test_schema_rejects_malformed():
    doc = series_to_json(omega_word(2))
    doc["terms"][0]["coeff"]["den"] = "0"
    with pytest.raises(jsonschema.ValidationError):
        validate_series(doc)
    with pytest.raises(jsonschema.ValidationError):
        validate_series({"order": 2, "basis": "words", "anchor": None, "terms": [{"coeff": {"num": "1", "den": "2"}}]})


@given(st.fractions())
def test_rational_json(q):
    assert rational_from_json(rational_to_json(q)) == q


def test_text_forms():
    assert to_text(omega_rnested(2)) == "-1/2 A[2,1]"
    assert to_text(omega_rnested(3)) == "-1/6 A[2,3,1] + 1/3 A[3,2,1]"
    assert to_text(omega_word(3)) == (
        "1/3 A(1 2 3) - 1/6 A(1 3 2) - 1/6 A(2 1 3) - 1/6 A(2 3 1) - 1/6 A(3 1 2) + 1/3 A(3 2 1)"
    )
    assert to_text(bch_words(1)) == "X + Y"
    assert to_text(bch_words(2)) == "1/2 XY - 1/2 YX"
    assert to_text(Combination()) == "0"


def test_latex_forms():
    assert to_latex(omega_word(2)) == r"\frac{1}{2} A(1\,2) - \frac{1}{2} A(2\,1)"
    assert to_latex(omega_rnested(3)) == r"-\frac{1}{6} A[2, 3, 1] + \frac{1}{3} A[3, 2, 1]"
    assert to_latex(Combination({(1,): Fraction(2)})) == "2 A(1)"
