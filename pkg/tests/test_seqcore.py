from fractions import Fraction

import pytest

from tmpascal import sturmian_increment, sturmian_letter, thue_morse, thue_morse_prefix

from oracles import parity_sign


def test_listed_prefix():
    assert thue_morse_prefix(8) == [-1, 1, 1, -1, 1, -1, -1, 1]


def test_first_and_eighth_terms():
    assert thue_morse(0) == -1
    assert thue_morse(7) == 1


def test_prefix_seed_letter():
    assert thue_morse_prefix(1) == [-1]


def test_doubling_recurrence():
    for n in range(1 << 16):
        assert thue_morse(2 * n) == thue_morse(n)
        assert thue_morse(2 * n + 1) == -thue_morse(n)


def test_substitution_matches_bit_parity():
    prefix = thue_morse_prefix(1 << 12)
    for i, sign in enumerate(prefix):
        assert sign == thue_morse(i) == parity_sign(i)


def test_partial_sums_stay_in_unit_band():
    # Running sums of the signs only ever visit -1, 0, +1.
    total = 0
    for n in range(1 << 16):
        assert total in (-1, 0, 1)
        total += thue_morse(n)
    assert total in (-1, 0, 1)


def test_rejects_negative_index():
    with pytest.raises(ValueError):
        thue_morse(-1)
    with pytest.raises(ValueError):
        thue_morse_prefix(0)


def test_letter_examples_slope_two_thirds():
    alpha = Fraction(2, 3)
    assert sturmian_letter(alpha, 0) == 0
    assert sturmian_letter(alpha, 1) == 1


def test_letter_zero_slope():
    for n in range(50):
        assert sturmian_letter(0, n) == 0


def test_increment_examples():
    alpha = Fraction(2, 3)
    assert sturmian_increment(alpha, 0) == Fraction(2, 3)
    assert sturmian_increment(alpha, 1) == Fraction(-1, 3)
    for n in range(20):
        assert sturmian_increment(1, n) == 0


def test_alpha_outside_unit_interval_rejected():
    for bad in (Fraction(-1, 2), Fraction(3, 2)):
        with pytest.raises(ValueError):
            sturmian_letter(bad, 0)
        with pytest.raises(ValueError):
            sturmian_increment(bad, 0)


@pytest.mark.parametrize("alpha", [Fraction(2, 3), Fraction(1, 7), Fraction(5, 8), Fraction(610, 987)])
def test_increment_sums_telescope_to_fractional_part(alpha):
    total = Fraction(0)
    for k in range(1, 2001):
        total += sturmian_increment(alpha, k - 1)
        assert total == k * alpha - (k * alpha.numerator // alpha.denominator)


def test_letter_is_word_letter():
    # The letters over one denominator period sum to the numerator.
    alpha = Fraction(3, 11)
    letters = [sturmian_letter(alpha, n) for n in range(11)]
    assert set(letters) <= {0, 1}
    assert sum(letters) == 3
