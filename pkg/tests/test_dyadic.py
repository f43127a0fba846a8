from fractions import Fraction

import pytest

from tmpascal import Dyadic


def every_small_value():
    for mantissa in range(-12, 13):
        for exponent in range(0, 5):
            yield Dyadic(mantissa, exponent)


def test_canonical_form_is_unique():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(4, 2).mantissa == 1
    assert Dyadic(6, 1) == Dyadic(3, 0)
    assert Dyadic(0, 7).exponent == 0
    assert Dyadic(2, 0).mantissa == 2  # even integers keep exponent 0
    seen = {}
    for d in every_small_value():
        key = d.as_fraction()
        if key in seen:
            assert (d.mantissa, d.exponent) == seen[key]
        seen[key] = (d.mantissa, d.exponent)


def test_rejects_negative_exponent():
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_arithmetic_matches_fractions():
    values = list(every_small_value())
    for a in values[:: 7]:
        for b in values[:: 5]:
            fa, fb = a.as_fraction(), b.as_fraction()
            assert (a + b).as_fraction() == fa + fb
            assert (a - b).as_fraction() == fa - fb
            assert (a * b).as_fraction() == fa * fb
            assert (a < b) == (fa < fb)
            assert (a <= b) == (fa <= fb)
            assert (a == b) == (fa == fb)


def test_int_mixing():
    x = Dyadic(3, 1)
    assert x + 1 == Dyadic(5, 1)
    assert 1 + x == Dyadic(5, 1)
    assert 2 * x == Dyadic(3, 0)
    assert x - 2 == Dyadic(-1, 1)
    assert 2 - x == Dyadic(1, 1)
    assert x < 2 and x > 1


def test_times_pow2_both_directions():
    x = Dyadic(3, 2)  # 3/4
    assert x.times_pow2(2) == Dyadic(3)
    assert x.times_pow2(3) == Dyadic(6)
    assert x.times_pow2(-1) == Dyadic(3, 3)
    assert x.times_pow2(0) == x


def test_floor_times_pow2():
    assert Dyadic(5, 3).floor_times_pow2(3) == 5
    assert Dyadic(5, 3).floor_times_pow2(2) == 2
    assert Dyadic(-5, 3).floor_times_pow2(2) == -3  # floors toward -inf
    assert Dyadic(7, 0).floor_times_pow2(0) == 7
    for d in every_small_value():
        for bits in range(0, 4):
            assert d.floor_times_pow2(bits) == (d.as_fraction() * 2 ** bits).__floor__()


def test_parse_and_str_round_trip():
    for text, want in [
        ("-1/8", Dyadic(-1, 3)),
        ("0", Dyadic(0)),
        ("7", Dyadic(7)),
        ("3/2^4", Dyadic(3, 4)),
        (" 5/4 ", Dyadic(5, 2)),
        ("-3/16", Dyadic(-3, 4)),
    ]:
        assert Dyadic.parse(text) == want
    for d in every_small_value():
        assert Dyadic.parse(str(d)) == d


def test_parse_rejects_junk():
    for bad in ("", "x", "1/3", "1/0", "1/-2", "2^3", "1/2^-1", "1.5"):
        with pytest.raises(ValueError):
            Dyadic.parse(bad)


def test_of_coercions():
    assert Dyadic.of(3) == Dyadic(3)
    assert Dyadic.of(Fraction(5, 8)) == Dyadic(5, 3)
    assert Dyadic.of("5/8") == Dyadic(5, 3)
    assert Dyadic.of(Dyadic(1, 1)) == Dyadic(1, 1)
    with pytest.raises(ValueError):
        Dyadic.of(Fraction(1, 3))
    with pytest.raises(TypeError):
        Dyadic.of(0.5)


def test_str_expands_power_of_two():
    assert str(Dyadic(-11, 5)) == "-11/32"
    assert str(Dyadic(4)) == "4"
    assert float(Dyadic(-11, 5)) == -0.34375


def test_is_integer_and_bool():
    assert Dyadic(6).is_integer
    assert not Dyadic(1, 1).is_integer
    assert not Dyadic(0)
    assert Dyadic(1, 4)
