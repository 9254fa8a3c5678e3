import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import comb, poly, rational_coefficients
from skewgrowth import RationalForm, TruncatedSeries, expand_rational, invert_truncated, mul_truncated
from skewgrowth.series import InversionReport, SeriesOverflow, poly_mul, poly_pow

small = st.integers(-50, 50)


def series(min_len=1, max_len=8, unit=False):
    coeffs = st.lists(small, min_size=min_len, max_size=max_len)
    if unit:
        return st.builds(lambda c0, rest: TruncatedSeries((c0, *rest)), st.sampled_from([1, -1]), st.lists(small, max_size=max_len))
    return coeffs.map(lambda c: TruncatedSeries(tuple(c)))


def test_basic_ops():
    a = TruncatedSeries.of([1, 2, 3])
    b = TruncatedSeries.of([1, -1], 4)
    assert (a + b).coefficients == (2, 1, 3)
    assert (a * b).coefficients == (1, 1, 1)
    assert (a - a).coefficients == (0, 0, 0)
    assert TruncatedSeries.one(3).is_one()
    assert invert_truncated(TruncatedSeries.of([1, -1], 5)).coefficients == (1,) * 6


def test_pretty():
    assert TruncatedSeries.of([1, -3, 2, 0, 1]).pretty() == "1 - 3t + 2t^2 + t^4 + O(t^5)"
    assert TruncatedSeries.of([0, 0]).pretty() == "0 + O(t^2)"


def test_expand_rational_binomial():
    # 1/(1-t)^3 = sum C(k+2, 2) t^k
    s = expand_rational(RationalForm((1,), poly_pow((1, -1), 3)), 10)
    assert list(s.coefficients) == [comb(k + 2, 2) for k in range(11)]


@pytest.mark.parametrize(
    "num, den",
    [
        ((1, -1, 1), tuple(poly(*[[1, -1]] * 4))),
        (tuple(poly(*[[1, -1]] * 4)), (1, -1, 1)),
        ((1, -2, 1), (1, 0, -1)),
        ((1, -2, 1), (1, 0, 0, -1)),
        ((2, 3), (-1, 1)),
    ],
)
def test_expand_rational_matches_fraction_oracle(num, den):
    assert list(expand_rational(RationalForm(num, den), 12).coefficients) == rational_coefficients(num, den, 12)


def test_expand_rational_times_denominator_is_numerator():
    num, den = (1, -1, 1), poly_pow((1, -1), 4)
    s = expand_rational(RationalForm(num, den), 9)
    back = mul_truncated(s, TruncatedSeries.of(den, 9))
    assert list(back.coefficients) == list(num) + [0] * 7


def test_poly_helpers():
    assert poly_mul((1, 1), (1, -1)) == (1, 0, -1)
    assert poly_pow((1, 1), 4) == (1, 4, 6, 4, 1)
    assert poly_pow((1, 1), 0) == (1,)


def test_mixed_truncation_takes_minimum():
    a, b = TruncatedSeries.of([1, 1, 1, 1]), TruncatedSeries.of([1, 1])
    assert (a * b).truncation == 1
    assert (a + b).truncation == 1


def test_json_round_trip_and_validation():
    s = TruncatedSeries.of([1, -3, 2])
    assert TruncatedSeries.from_json(s.to_json()) == s
    assert s.to_json() == {"truncation": 2, "coefficients": [1, -3, 2]}
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"truncation": 1, "coefficients": [1, 2.5]})
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"truncation": 3, "coefficients": [1]})


def test_overflow_is_reported():
    big = TruncatedSeries.of([2**62, 2**62])
    with pytest.raises(SeriesOverflow):
        big + big
    with pytest.raises(SeriesOverflow):
        TruncatedSeries.of([2**63])


def test_non_unit_inverse_rejected():
    with pytest.raises(ValueError):
        invert_truncated(TruncatedSeries.of([2, 1]))
    with pytest.raises(ValueError):
        expand_rational(RationalForm((1,), (3, 1)), 4)


def test_inversion_report_first_failure():
    P = TruncatedSeries.of([1, 1, 1, 1])
    N = TruncatedSeries.of([1, -1, 0, 1])
    rep = InversionReport("x", 3, P, N)
    assert not rep.passed and rep.first_failing_degree == 3
    assert InversionReport("x", 3, P, TruncatedSeries.of([1, -1, 0, 0])).passed


@settings(max_examples=80, deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    d = a.truncation
    assert a * TruncatedSeries.one(d) == a


@settings(max_examples=80, deadline=None)
@given(series(unit=True))
def test_inverse_property(a):
    assert (a * invert_truncated(a)).is_one()
    assert invert_truncated(invert_truncated(a)) == a


@settings(max_examples=60, deadline=None)
@given(series(max_len=5), st.lists(st.integers(-3, 3), max_size=4), st.integers(0, 8))
def test_expand_rational_property(num, den_tail, d):
    den = (1, *den_tail)
    got = expand_rational(RationalForm(num.coefficients, den), d)
    assert list(got.coefficients) == rational_coefficients(num.coefficients, den, d)
