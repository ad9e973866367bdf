import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bsymbol.algebra import (
    Poly,
    cyclotomic_cosets,
    expand_factors,
    factor_xn_minus_1,
    field_new,
    field_of_size,
    format_elements,
    is_irreducible,
    multiplicative_order,
    parse_elements,
    poly_period,
)

SMALL_Q = (2, 3, 4, 5, 7, 8, 9)


def test_field_axioms(field):
    q = field.q
    e = np.arange(q)
    add, mul = field.add_table, field.mul_table
    assert (add[0] == e).all() and (mul[1] == e).all()
    assert (add == add.T).all() and (mul == mul.T).all()
    a, b, c = np.meshgrid(e, e, e, indexing="ij")
    assert (add[add[a, b], c] == add[a, add[b, c]]).all()
    assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
    assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()
    assert (add[e, field.neg_table] == 0).all()
    assert (mul[e[1:], field.inv_table[1:]] == 1).all()
    assert (field.sub_table == add[e[:, None], field.neg_table[None, :]]).all()


def test_primitive_element_generates(field):
    g, seen, x = field.primitive, set(), 1
    for _ in range(field.q - 1):
        x = field.mul(x, g)
        seen.add(x)
    assert seen == set(range(1, field.q))


def test_characteristic(field):
    for a in range(field.q):
        acc = 0
        for _ in range(field.p):
            acc = field.add(acc, a)
        assert acc == 0


def test_tables_are_read_only():
    f = field_of_size(4)
    with pytest.raises(ValueError):
        f.mul_table[1, 1] = 0


@pytest.mark.parametrize("p,m", [(4, 1), (1, 1), (2, 5), (17, 1), (3, 3)])
def test_field_rejects_unsupported(p, m):
    with pytest.raises(ValueError):
        field_new(p, m)


def test_field_of_size_rejects_non_prime_power():
    for q in (0, 1, 6, 10, 12, 15, 32):
        with pytest.raises(ValueError):
            field_of_size(q)


def test_element_strings_round_trip():
    f2, f16 = field_of_size(2), field_of_size(16)
    assert parse_elements(f2, "1101") == (1, 1, 0, 1)
    assert format_elements(f16, parse_elements(f16, "1,15,0,12")) == "1,15,0,12"
    for text in ("12", "1a", "2"):
        with pytest.raises(ValueError):
            parse_elements(f2, text)
    with pytest.raises(ValueError):
        parse_elements(f16, "3,16")


def test_poly_text_format():
    f = field_of_size(2)
    g = Poly.parse(f, "1101")
    assert g.degree == 3 and str(g) == "1101"
    assert g == Poly.const(f, 1) + Poly.x(f) + Poly.x(f) * Poly.x(f) * Poly.x(f)
    assert str(Poly.parse(field_of_size(13), "1,12,0,3")) == "1,12,0,3"


poly_strategy = st.integers(min_value=0, max_value=3**7)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_Q), st.integers(0, 10**6), st.integers(1, 10**6))
def test_division_identity(q, ka, kb):
    f = field_of_size(q)
    a, b = Poly.from_key(f, ka), Poly.from_key(f, kb)
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL_Q), st.integers(1, 10**5), st.integers(1, 10**5), st.integers(1, 10**5))
def test_ring_laws(q, ka, kb, kc):
    f = field_of_size(q)
    a, b, c = (Poly.from_key(f, k) for k in (ka, kb, kc))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly(f, ())
    g = a.gcd(b)
    assert g.divides(a) and g.divides(b) and g.is_monic


def _brute_irreducible(h: Poly) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = h.field
    for d in range(1, h.degree // 2 + 1):
        for low in itertools.product(range(f.q), repeat=d):
            if h % Poly(f, tuple(low) + (1,)) == Poly(f, ()):
                return False
    return True


def _brute_period(h: Poly) -> int:
    f = h.field
    e = 1
    while not h.divides(Poly.xn_minus_1(f, e)):
        e += 1
    return e


@pytest.mark.parametrize("q", SMALL_Q)
def test_factorization_of_xn_minus_1(q):
    f = field_of_size(q)
    for n in range(1, 17):
        factors = factor_xn_minus_1(n, f)
        assert expand_factors(factors) == Poly.xn_minus_1(f, n)
        keys = [h.key() for h, _ in factors]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        for h, _ in factors:
            assert h.is_monic and h.degree >= 1
            if h.degree <= 4 or q == 2:
                assert _brute_irreducible(h)
            assert is_irreducible(h)


def test_factorization_binary_seven():
    f = field_of_size(2)
    assert [(str(h), m) for h, m in factor_xn_minus_1(7, f)] == [("11", 1), ("1101", 1), ("1011", 1)]


def test_factorization_repeated_roots():
    f = field_of_size(3)
    got = [(str(h), m) for h, m in factor_xn_minus_1(6, f)]
    assert got == [("11", 3), ("21", 3)]
    f2 = field_of_size(2)
    assert [(str(h), m) for h, m in factor_xn_minus_1(12, f2)] == [("11", 4), ("111", 4)]


@pytest.mark.parametrize("q,n", [(2, 7), (2, 15), (3, 8), (4, 5), (5, 12), (2, 21), (9, 10)])
def test_factor_count_matches_cosets(q, n):
    f = field_of_size(q)
    cosets = cyclotomic_cosets(n, q)
    factors = factor_xn_minus_1(n, f)
    assert sorted(len(c) for c in cosets) == sorted(h.degree for h, _ in factors)


@pytest.mark.parametrize("q,n", [(2, 15), (3, 13), (4, 21), (5, 8)])
def test_cyclotomic_cosets_partition(q, n):
    cosets = cyclotomic_cosets(n, q)
    flat = sorted(x for c in cosets for x in c)
    assert flat == list(range(n))
    for c in cosets:
        assert {(x * q) % n for x in c} == set(c)
        assert len(c) == multiplicative_order(q, n // np.gcd(n, c[0]))


def test_periods():
    f = field_of_size(2)
    for h, _ in factor_xn_minus_1(15, f):
        if h.degree >= 1:
            assert poly_period(h) == _brute_period(h)
    assert [poly_period(Poly.parse(f, s)) for s in ("1101", "11001", "11111")] == [7, 15, 5]
    f3 = field_of_size(3)
    for h, _ in factor_xn_minus_1(13, f3):
        assert poly_period(h) == _brute_period(h)
