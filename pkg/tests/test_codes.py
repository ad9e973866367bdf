import math

import numpy as np
import pytest

from bsymbol.algebra import Poly, factor_xn_minus_1, field_of_size
from bsymbol.codes import (
    BudgetExceeded,
    CyclicCode,
    LinearCode,
    b_consecutive_independent,
    cyclic_divisors,
    cyclic_from_gen,
    enumerate_cyclic_codes,
    irreducible_cyclic,
    parse_descriptor,
    simplex,
    transform_code,
)
from bsymbol.hierarchy import b_symbol_profile


def hamming():
    return cyclic_from_gen(7, Poly.parse(field_of_size(2), "1101"))


def test_hamming_parameters():
    c = hamming()
    assert (c.n, c.k, c.size) == (7, 4, 16)
    assert c.descriptor == "q=2;n=7;g=1101"
    assert str(c.h) == "11101"


def test_rejects_non_divisor():
    f = field_of_size(2)
    with pytest.raises(ValueError):
        CyclicCode(7, Poly.parse(f, "111"))
    with pytest.raises(ValueError):
        CyclicCode(7, Poly.xn_minus_1(f, 7))


def test_generator_is_made_monic():
    f = field_of_size(3)
    c = CyclicCode(4, Poly.parse(f, "22"))
    assert str(c.g) == "11"


def test_codeword_order_and_range():
    c = parse_descriptor("q=3;n=8;g=2101")
    words = c.codewords()
    assert words.shape == (3**c.k, 8)
    assert not words[0].any()
    for idx in (1, 3, 9, 3**c.k - 1):
        msg = [(idx // 3**i) % 3 for i in range(c.k)]
        assert (words[idx] == c.encode(msg)).all()
    assert (c.codeword_range(5, 40) == words[5:40]).all()
    assert (np.vstack(list(c.iter_codeword_chunks(7))) == words).all()
    assert len({w.tobytes() for w in words}) == words.shape[0]


def test_codeword_budget():
    c = parse_descriptor("q=2;n=15;g=11")
    with pytest.raises(BudgetExceeded) as exc:
        c.codewords(max_codewords=1000)
    assert exc.value.cap == 1000 and exc.value.needed == 2**14


@pytest.mark.parametrize("q,n", [(2, 7), (2, 9), (3, 8), (4, 5), (5, 4), (3, 6)])
def test_cyclic_codes_closed_under_shift(q, n):
    f = field_of_size(q)
    for c in enumerate_cyclic_codes(n, f):
        words = c.codewords()
        for w in words[:: max(1, len(words) // 8)]:
            shifted = np.roll(w, 1)
            assert c.contains(shifted)
            assert LinearCode.contains(c, shifted)


@pytest.mark.parametrize("q,n", [(2, 7), (2, 15), (3, 8), (4, 9), (2, 12)])
def test_enumeration_counts_divisors(q, n):
    f = field_of_size(q)
    total = math.prod(m + 1 for _, m in factor_xn_minus_1(n, f))
    gens = [str(g) for g in cyclic_divisors(n, f)]
    assert len(gens) == len(set(gens)) == total
    codes = list(enumerate_cyclic_codes(n, f, include_trivial=True))
    assert len(codes) == total - 1
    assert len(list(enumerate_cyclic_codes(n, f))) == total - 2
    assert all(1 <= c.k <= n for c in codes)


def test_seven_binary_codes_of_length_seven():
    f = field_of_size(2)
    assert len(list(enumerate_cyclic_codes(7, f, include_trivial=True))) == 7


@pytest.mark.parametrize("text", ["q=2;n=7;g=1101", "q=16;n=5;g=1,1", "q=3;n=4;G=0111,1012"])
def test_descriptor_round_trip(text):
    c = parse_descriptor(text)
    assert parse_descriptor(c.descriptor).descriptor == c.descriptor
    assert (parse_descriptor(c.descriptor).G == c.G).all()


@pytest.mark.parametrize("text", ["q=2;n=7", "n=7;g=11", "q=6;n=5;g=11", "q=2;n=7;g=12", "q=2;n=3;G=11,11"])
def test_bad_descriptors(text):
    with pytest.raises(ValueError):
        parse_descriptor(text)


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3), (4, 2), (5, 2), (3, 2), (4, 3)])
def test_simplex_columns_are_projective_points(q, k):
    c = simplex(q, k)
    n = (q**k - 1) // (q - 1)
    assert (c.n, c.k) == (n, k)
    f = c.field
    reps = set()
    for col in c.G.T:
        lead = int(col[np.flatnonzero(col)[0]])
        reps.add(tuple(f.mul_table[f.inv_table[lead], col]))
    assert len(reps) == n
    assert c.is_cyclic == (math.gcd(n, q - 1) == 1)


def test_simplex_constant_weight():
    for q, k in [(2, 4), (3, 3), (4, 2), (3, 2)]:
        words = simplex(q, k).codewords()[1:]
        assert set(np.count_nonzero(words, axis=1)) == {q ** (k - 1)}


def test_irreducible_cyclic_instance():
    ic = irreducible_cyclic(4, 2, 3)
    assert (ic.code.n, ic.code.k) == (5, 2)
    assert ic.hypotheses_hold
    assert ic.gcd_n_delta_is_1 == ic.gcd_period_delta_is_1


def test_irreducible_cyclic_flags_failing_hypotheses():
    ic = irreducible_cyclic(2, 4, 3)
    assert (ic.code.n, ic.code.k) == (5, 4)
    assert not ic.delta_divides_q_minus_1 and not ic.hypotheses_hold
    with pytest.raises(ValueError):
        irreducible_cyclic(2, 3, 2)


def test_irreducible_cyclic_parity_check_period():
    from bsymbol.algebra import poly_period

    for q, k, delta in [(2, 3, 1), (3, 2, 2), (4, 2, 3), (3, 3, 2), (5, 2, 4)]:
        ic = irreducible_cyclic(q, k, delta)
        assert ic.code.h.degree == k
        assert poly_period(ic.code.h) == ic.code.n


@pytest.mark.parametrize("q,n", [(2, 9), (3, 8), (4, 5), (2, 15)])
def test_consecutive_independence_holds_for_cyclic(q, n):
    for c in enumerate_cyclic_codes(n, field_of_size(q)):
        for b in range(1, c.k + 1):
            assert b_consecutive_independent(c, b)
        assert not b_consecutive_independent(c, c.k + 1)


def test_consecutive_independence_can_fail():
    f = field_of_size(2)
    c = LinearCode(f, [[1, 1, 0, 0], [0, 0, 1, 1]])
    res = b_consecutive_independent(c, 2)
    assert not res and "position 0" in res.reason
    assert b_consecutive_independent(c, 1)


def test_transform_code_is_left_shift_after_scaling():
    c = parse_descriptor("q=3;n=8;g=2101")
    diag = np.array([1, 2, 2, 1, 1, 2, 1, 2])
    t = transform_code(c, diag, 3)
    w = c.codewords()[5]
    expected = np.roll(c.field.mul_table[w, diag], -3)
    assert t.contains(expected)
    assert b_symbol_profile(t) == b_symbol_profile(c)
    with pytest.raises(ValueError):
        transform_code(c, np.zeros(8, dtype=int), 1)
