import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rrcablocks.exactnum import (
    Cyclotomic,
    LinearExponent,
    MultiPoly,
    cyclo_canonicalize,
    cyclo_invert,
    cyclotomic_polynomial,
    euler_phi,
    parse_cyclotomic,
    poly_is_t_divisible,
    rational,
)

from conftest import cyclotomics, to_complex

x = sympy.Symbol("x")


def sympy_phi(n):
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()))


@pytest.mark.parametrize(
    "order, expected",
    [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1))],
)
def test_cyclotomic_polynomial_examples(order, expected):
    assert cyclotomic_polynomial(order) == expected


@pytest.mark.parametrize("order", range(1, 61))
def test_cyclotomic_polynomial_matches_sympy(order):
    assert cyclotomic_polynomial(order) == sympy_phi(order)
    assert euler_phi(order) == int(sympy.totient(order))


def test_rationals_are_reduced():
    q = rational("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert rational(0).denominator == 1
    assert rational(Fraction(10, 15)) == Fraction(2, 3)


def test_canonicalize_examples():
    assert cyclo_canonicalize([0, 0, 1], 4) == Cyclotomic(4, [-1, 0])
    assert cyclo_canonicalize([0, 0, 1], 3) == Cyclotomic(3, [-1, -1])
    assert cyclo_canonicalize([], 5).is_zero()


@given(st.integers(1, 12), st.lists(st.integers(-9, 9), max_size=30))
def test_canonicalize_idempotent_and_numerically_faithful(order, raw):
    a = cyclo_canonicalize(raw, order)
    assert len(a.coeffs) == euler_phi(order)
    assert cyclo_canonicalize(list(a.coeffs), order) == a
    z = sympy.exp(2 * sympy.pi * sympy.I / order)
    expect = complex(sympy.N(sum(c * z**k for k, c in enumerate(raw)), 30))
    assert abs(to_complex(a) - expect) < 1e-8


@given(st.integers(1, 12), st.lists(st.integers(-5, 5), max_size=15), st.lists(st.integers(-5, 5), max_size=15))
def test_canonicalize_is_a_ring_homomorphism(order, p, q):
    prod = [0] * (len(p) + len(q))
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            prod[i + j] += a * b
    total = [(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(max(len(p), len(q)))]
    P, Q = cyclo_canonicalize(p, order), cyclo_canonicalize(q, order)
    assert cyclo_canonicalize(prod, order) == P * Q
    assert cyclo_canonicalize(total, order) == P + Q


def test_invert_examples():
    assert cyclo_invert(Cyclotomic.one(4)) == 1
    assert cyclo_invert(Cyclotomic.zeta(4)) == -Cyclotomic.zeta(4)
    one_minus = 1 - Cyclotomic.zeta(3)
    assert cyclo_invert(one_minus) == (2 + Cyclotomic.zeta(3)) / 3
    assert cyclo_invert(one_minus) == (1 - Cyclotomic.zeta(3, 2)) / 3


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclo_invert(Cyclotomic.zero(5))
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.one(3) / 0


@settings(max_examples=150)
@given(st.data())
def test_field_axioms(data):
    order = data.draw(st.integers(1, 12))
    a, b, c = (data.draw(cyclotomics(order)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    if not a.is_zero():
        assert a * cyclo_invert(a) == 1
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6


@pytest.mark.parametrize("order", range(1, 13))
def test_zeta_to_the_order_is_one(order):
    z = Cyclotomic.zeta(order)
    assert z**order == 1
    assert z ** (-1) * z == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_roots_of_unity_sum_to_zero(p):
    total = Cyclotomic.zero(p)
    for k in range(p):
        total = total + Cyclotomic.zeta(p, k)
    assert total.is_zero()


def test_mixed_orders_embed_into_lcm():
    i = Cyclotomic.zeta(4)
    w = Cyclotomic.zeta(3)
    prod = i * w
    assert prod.order == 12
    assert prod == Cyclotomic.zeta(12, 7)
    assert Cyclotomic.zeta(2) == -1


@pytest.mark.parametrize(
    "text, order, expected",
    [
        ("1/2 + z - 3*z^2", 5, Cyclotomic(5, ["1/2", 1, -3, 0])),
        ("z^4", 4, Cyclotomic.one(4)),
        ("-z", 3, -Cyclotomic.zeta(3)),
        ("7", 1, Cyclotomic.from_rational(7)),
        ("z^-1", 6, Cyclotomic.zeta(6, 5)),
    ],
)
def test_parse(text, order, expected):
    assert parse_cyclotomic(text, order) == expected


@pytest.mark.parametrize("text", ["", "z^", "1/0", "2*", "x", "1 2", "1/-2", "z*z"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_cyclotomic(text, 4)


@given(cyclotomics())
def test_text_and_json_roundtrip(a):
    assert parse_cyclotomic(str(a), a.order) == a
    data = json.loads(json.dumps(a.to_json()))
    assert set(data) == {"order", "coeffs"}
    assert Cyclotomic.from_json(data) == a


def test_hash_agrees_with_equality_within_an_order():
    a = Cyclotomic(6, [1, 2])
    b = parse_cyclotomic("1 + 2*z", 6)
    assert a == b and hash(a) == hash(b)
    assert len({a, b, Cyclotomic.one(6)}) == 2


VARS = ("t", "kappa", "c1")


def test_t_divisibility_examples():
    t = MultiPoly.variable(VARS, "t")
    k = MultiPoly.variable(VARS, "kappa")
    c1 = MultiPoly.variable(VARS, "c1")
    assert poly_is_t_divisible(t * k + t * t)
    assert not poly_is_t_divisible(t + c1)
    assert poly_is_t_divisible(MultiPoly(VARS))


def _random_poly(rng, terms=4):
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, 2) for _ in VARS)
        out[exps] = Cyclotomic(3, [rng.randint(-3, 3), rng.randint(-3, 3)])
    return MultiPoly(VARS, out)


def test_multipoly_arithmetic_agrees_with_evaluation():
    rng = random.Random(5)
    for _ in range(100):
        p, q = _random_poly(rng), _random_poly(rng)
        point = {v: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for v in VARS}
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
        assert (p - q).evaluate(point) == p.evaluate(point) - q.evaluate(point)


def test_multipoly_stores_no_zero_terms():
    t = MultiPoly.variable(VARS, "t")
    assert (t - t).terms == {}
    assert MultiPoly(VARS, {(1, 0, 0): 0}).terms == {}


def test_substitute_scaled():
    t = MultiPoly.variable(VARS, "t")
    k = MultiPoly.variable(VARS, "kappa")
    p = t * k + k
    q = p.substitute_scaled({"t": (-1, "t"), "kappa": (2, "c1")})
    c1 = MultiPoly.variable(VARS, "c1")
    assert q == t * c1 * -2 + c1 * 2


def test_linear_exponent():
    e = LinearExponent(-1, (1, 1))
    assert str(e) == "H1 + H2 - kappa"
    assert LinearExponent.from_json(e.to_json()) == e
    assert LinearExponent(0, (0,)) == LinearExponent(0, [0])
    assert str(LinearExponent(0, (0, 0))) == "0"
    assert hash(LinearExponent(2, (1,))) == hash(LinearExponent(2, (1,)))
