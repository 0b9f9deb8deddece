from fractions import Fraction as F

import numpy as np
import pytest

from magnus_perm.bch import bch_words, bracket, evaluate_words
from magnus_perm.magnus import ResourceLimitError
from magnus_perm.perm import Combination

from oracles import bch_grade, random_small


def test_low_grades():
    assert bch_words(1) == Combination({"X": 1, "Y": 1})
    assert bch_words(2) == F(1, 2) * bracket("XY")


def test_grade_three_bracket_form():
    want = F(1, 12) * bracket("XXY") + F(1, 12) * bracket("YYX")
    assert bch_words(3) == want


def test_grade_four_is_single_bracket():
    # Z_4 = -1/24 [Y,[X,[X,Y]]]
    assert bch_words(4) == F(-1, 24) * bracket("YXXY")


@pytest.mark.parametrize("n", range(1, 7))
def test_routes_agree(n):
    assert bch_words(n, "words") == bch_words(n, "rnested")


@pytest.mark.parametrize("n", range(2, 7))
def test_words_are_homogeneous_and_traceless_in_letters(n):
    z = bch_words(n)
    assert z.grade == n
    assert sum(z.values()) == 0


def test_bracket_expansion():
    assert bracket("X") == Combination({"X": 1})
    assert bracket("XX") == Combination()
    assert bracket("XYX") == Combination({"XYX": 2, "XXY": -1, "YXX": -1})


def test_unknown_route_and_cap():
    with pytest.raises(ValueError):
        bch_words(2, "nope")
    with pytest.raises(ResourceLimitError):
        bch_words(10)


@pytest.mark.parametrize("seed", [0, 1])
def test_against_matrix_logarithm(seed):
    rng = np.random.default_rng(seed)
    X, Y = random_small(rng, 3, 0.1), random_small(rng, 3, 0.1)
    for n in range(1, 6):
        got = evaluate_words(bch_words(n), X, Y)
        assert np.linalg.norm(got - bch_grade(X, Y, n)) <= 1e-10


def test_commuting_letters_truncate():
    X = np.diag([0.1, -0.05, 0.02])
    Y = np.diag([0.03, 0.04, -0.01])
    assert np.allclose(evaluate_words(bch_words(1), X, Y), X + Y)
    for n in range(2, 6):
        assert np.linalg.norm(evaluate_words(bch_words(n), X, Y)) < 1e-15
