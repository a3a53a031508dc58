import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicpart.series import (
    EtaQuotientSpec,
    IntegerSeries,
    NonUnitError,
    ResidueSeries,
    euler_factor,
    expand,
    expand_mod,
    expand_reference,
    invert,
    mul,
    parse_eta_spec,
    pow_,
    reduce,
    theta_signed,
)

from oracles import count_colored_partitions, count_partitions, geometric_inverse, literal_euler_product, poly_mul


def S(*coeffs):
    return IntegerSeries(coeffs)


def test_euler_factor_examples():
    assert list(euler_factor(1, 7)) == literal_euler_product(1, 7) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert list(euler_factor(2, 7)) == [1, 0, -1, 0, -1, 0, 0, 0]
    assert list(euler_factor(5, 0)) == [1]
    with pytest.raises(ValueError):
        euler_factor(0, 3)


@pytest.mark.parametrize("delta", [1, 2, 3, 5, 11])
def test_euler_factor_matches_literal_product(delta):
    assert list(euler_factor(delta, 200)) == literal_euler_product(delta, 200)


def test_mul_examples():
    assert list(mul(S(1, 1, 1), S(1, 0, 0))) == [1, 1, 1]
    assert list(mul(S(1, -1), S(1, 1))) == [1, 0]
    e = euler_factor(1, 6)
    assert list(mul(e, invert(e))) == [1, 0, 0, 0, 0, 0, 0]


def test_mul_truncates_to_smaller_order():
    assert mul(S(1, 2, 3, 4), S(1, 1)).order == 1
    assert list(S(1, 2, 3) + S(5, 5)) == [6, 7]


def test_invert_examples():
    assert list(invert(euler_factor(1, 6))) == [count_partitions(n) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert list(invert(S(1))) == [1]
    assert list(invert(S(-1, 1))) == [-1, -1]
    with pytest.raises(NonUnitError):
        invert(S(2, 0, 0))


def test_expand_examples():
    p2 = parse_eta_spec("1:-1,2:-1")
    assert list(expand(p2, 5)) == [count_colored_partitions(n, 2) for n in range(6)] == [1, 1, 3, 4, 9, 12]
    assert expand(parse_eta_spec("1:1"), 7) == euler_factor(1, 7)


def test_expand_mod11_reduction():
    g = reduce(expand(parse_eta_spec("1:10,2:-1,11:-1"), 50), 11)
    # independent route: p2 as a product of two geometric-series inverses
    p2 = [1] + [0] * 50
    for n in range(1, 51):
        p2 = poly_mul(p2, geometric_inverse(n, 50), 50)
        if n % 2 == 0:
            p2 = poly_mul(p2, geometric_inverse(n, 50), 50)
    assert list(g) == [c % 11 for c in p2]


@pytest.mark.parametrize("text", ["1:-1,2:-1", "1:10,2:-1,11:-1", "1:-4,2:-4,3:3,6:3", "2:3,3:-2", "1:5"])
def test_expand_agrees_with_literal_power_route(text):
    spec = parse_eta_spec(text)
    assert expand(spec, 60) == expand_reference(spec, 60)


def test_expand_independent_of_factor_order():
    a = EtaQuotientSpec(((1, 3), (2, -2), (5, -1)), 10)
    b = IntegerSeries.one(80)
    for d, r in reversed(a.terms):
        b = mul(b, pow_(euler_factor(d, 80), r))
    assert expand(a, 80) == b


def test_theta_signed():
    assert list(theta_signed(9)) == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]
    assert list(theta_signed(0)) == [1]
    prod = IntegerSeries.one(12)
    for n in range(1, 13):
        num = [0] * 13
        num[0], num[n] = 1, -1
        den = [0] * 13
        den[0], den[n] = 1, 1
        prod = mul(mul(prod, IntegerSeries(num)), invert(IntegerSeries(den)))
    assert theta_signed(12) == prod


def test_reduce():
    assert list(reduce(S(5, -1, 12), 11)) == [5, 10, 1]
    assert list(reduce(S(0, 0), 3)) == [0, 0]
    assert reduce(invert(euler_factor(1, 6)), 5)[4] == 0
    with pytest.raises(ValueError):
        reduce(S(1), 1)


def test_residue_series_validation():
    with pytest.raises(ValueError):
        ResidueSeries(5, (5,))
    with pytest.raises(ValueError):
        ResidueSeries(1, (0,))
    with pytest.raises(NonUnitError):
        ResidueSeries(6, (2, 1)).invert()


def test_parse_eta_spec():
    spec = parse_eta_spec(" 1 : 10 , 2:-1,11:-1, 22:0 ")
    assert spec.as_dict() == {1: 10, 2: -1, 11: -1}
    assert spec.level == 22
    assert str(spec) == "1:10,2:-1,11:-1"
    assert parse_eta_spec("").terms == ()
    for bad in ("1:2:3", "x:1", "1:1,1:2", "0:1"):
        with pytest.raises(ValueError):
            parse_eta_spec(bad)
    with pytest.raises(ValueError):
        parse_eta_spec("3:1", level=2)


# ring laws ---------------------------------------------------------------

small_int = st.integers(min_value=-50, max_value=50)


@st.composite
def series_triples(draw, unit=False):
    order = draw(st.integers(min_value=0, max_value=64))
    make = lambda: IntegerSeries(draw(st.lists(small_int, min_size=order + 1, max_size=order + 1)))
    return make(), make(), make()


@settings(max_examples=40, deadline=None)
@given(series_triples())
def test_ring_laws(abc):
    a, b, c = abc
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_int, min_size=0, max_size=64), st.sampled_from([1, -1]))
def test_inverse_law(tail, lead):
    a = IntegerSeries((lead, *tail))
    one = IntegerSeries.one(a.order)
    assert mul(a, invert(a)) == one
    assert mul(invert(a), a) == one
    assert invert(invert(a)) == a


@pytest.mark.parametrize("order", [0, 1, 50, 200])
def test_binomial_reduction_mod_11(order):
    lhs = reduce(pow_(euler_factor(1, order), 11), 11)
    rhs = reduce(euler_factor(11, order), 11)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(series_triples(), st.sampled_from([3, 5, 7, 11]), st.integers(min_value=0, max_value=6))
def test_reduce_commutes_with_mul_and_pow(abc, u, e):
    a, b, _ = abc
    assert reduce(mul(a, b), u) == reduce(a, u) * reduce(b, u)
    assert reduce(pow_(a, e), u) == reduce(a, u) ** e


@pytest.mark.parametrize("u", [3, 5, 7, 11, 2**31 - 1, 2**61 - 1])
def test_expand_mod_matches_integer_expansion(u):
    spec = parse_eta_spec("1:10,2:-1,11:-1")
    assert expand_mod(spec, 300, u) == reduce(expand(spec, 300), u)


def test_residue_division_and_negative_power():
    a = reduce(expand(parse_eta_spec("1:3,2:-1"), 40), 7)
    e = reduce(euler_factor(1, 40), 7)
    assert (a / e) * e == a
    assert e ** -2 == reduce(pow_(euler_factor(1, 40), -2), 7)
