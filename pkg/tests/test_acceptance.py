"""End-to-end acceptance checks; each test prints one PASS/FAIL line in the summary."""

import math

import numpy as np
import pytest

from bsymbol.algebra import field_of_size
from bsymbol.bounds import check_shu, lower_bounds_db
from bsymbol.codes import b_consecutive_independent, enumerate_cyclic_codes, irreducible_cyclic, parse_descriptor, simplex
from bsymbol.explorer import SearchSpec, run_conjecture_search, run_theorem_harness, verify_certificate, write_reports
from bsymbol.hierarchy import b_symbol_profile, generalized_hierarchy, ghw_column, ghw_subcode
from bsymbol.metrics import (
    all_zero_rows,
    b_support,
    b_support_sizes,
    run_census_batch,
    run_distribution,
    shift_matrix,
    span_multiset,
    span_weight_sums,
    span_weight_profile,
    w_b_batch,
    w_b_direct,
    w_b_from_census,
    w_b_from_runs,
    weight_profile,
)

GRID_QS = (2, 3)
GRID_N_MAX = 15
GRID_K_MAX = 8
WORDS_PER_FIELD = 10_000


def random_words(q, count, rng):
    """``count`` words over GF(q) with lengths 1..24 and densities from sparse to full."""
    lengths = rng.integers(1, 25, size=count)
    out = []
    for n in range(1, 25):
        m = int((lengths == n).sum())
        if not m:
            continue
        density = rng.choice([0.05, 0.2, 0.5, 1.0], size=(m, 1))
        mask = rng.random((m, n)) < density
        out.append(np.where(mask, rng.integers(1, q, size=(m, n)), 0))
    return out


def grid_codes():
    for q in GRID_QS:
        f = field_of_size(q)
        for n in range(2, GRID_N_MAX + 1):
            for code in enumerate_cyclic_codes(n, f):
                if code.k <= GRID_K_MAX:
                    yield code


@pytest.fixture(scope="module")
def grid_harness():
    return run_theorem_harness(SearchSpec(qs=GRID_QS, n_max=GRID_N_MAX, k_max=GRID_K_MAX, sample_seed=2024))


def test_criterion_1_method_agreement():
    rng = np.random.default_rng(1)
    for q in (2, 3, 4, 5):
        f = field_of_size(q)
        total = 0
        for W in random_words(q, WORDS_PER_FIELD, rng):
            N, n = W.shape
            total += N
            census = run_census_batch(W)
            zero = all_zero_rows(W)
            dists = [run_distribution(w) for w in W.tolist()]
            counted = span_weight_profile(W, f)
            for b in range(1, n + 1):
                direct = w_b_batch(W, b)
                assert (w_b_from_census(census, b, zero) == direct).all()
                runs = np.array([w_b_from_runs(d, b) for d in dists])
                assert (runs == direct).all()
                assert (b_support_sizes(W, b) == direct).all()
                for w, expected in zip(W[:20].tolist(), direct[:20]):
                    assert len(b_support(w, b)) == expected
                assert (counted[:, b - 1] == direct * q ** (b - 1) * (q - 1)).all()
                if q**b <= 256:
                    assert (span_weight_sums(W, b, f) == counted[:, b - 1]).all()
            for w in W[:3].tolist():
                assert [w_b_direct(w, b) for b in range(1, n + 1)] == weight_profile(np.array([w]))[0].tolist()
        assert total == WORDS_PER_FIELD


def test_criterion_2_worked_examples():
    d = run_distribution([0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0])
    assert d[2] == 1 and d[3] == 2 and sum(d.counts.values()) == 3
    f = field_of_size(2)
    v2 = span_multiset([1, 0, 1, 0], 2, f)
    assert sorted(v2) == [(0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 1, 1, 1)]
    assert shift_matrix([1, 0, 1, 0], 3, f).rank == 2
    v3 = span_multiset([1, 0, 1, 0], 3, f)
    assert sorted(v3) == sorted(v2 * 2)


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (2, 5), (3, 3), (4, 2)])
def test_criterion_3_simplex_formulas(q, k):
    code = simplex(q, k)
    n = (q**k - 1) // (q - 1)
    assert code.n == n
    expected = [(q - 1) * q ** (k - 2 - i) if i <= k - 2 else (1 if i == k - 1 else 0) for i in range(1, n + 1)]
    census = run_census_batch(code.codewords()[1:])[:, 1:]
    assert (census == np.array(expected)).all()
    prof = b_symbol_profile(code)
    for b in range(1, k):
        num = (q**b - 1) * q**k
        den = q**b * (q - 1)
        assert num % den == 0 and prof[b - 1] == num // den


def test_criterion_4_irreducible_cyclic_instance():
    ic = irreducible_cyclic(4, 2, 3)
    code = ic.code
    assert (code.n, code.k, code.q) == (5, 2, 4) and ic.hypotheses_hold
    census = run_census_batch(code.codewords()[1:])
    assert (census == census[0]).all()
    assert b_symbol_profile(code)[0] == (4**1 - 1) * 4**2 // (4**1 * 3) == 4
    for k in (3, 4, 5):
        assert set(map(tuple, irreducible_cyclic(2, k, 1).code.codewords())) == set(map(tuple, simplex(2, k).codewords()))
    for q, k in ((3, 2), (3, 3), (4, 2), (5, 2)):
        ic = irreducible_cyclic(q, k, 1)
        census = run_census_batch(ic.code.codewords()[1:])
        assert (census == census[0]).all()
        prof = b_symbol_profile(ic.code)
        for b in range(1, k):
            assert prof[b - 1] == (q**b - 1) * q**k // q**b


def test_criterion_5_ghw_cross_validation():
    count = 0
    for code in grid_codes():
        for r in range(1, code.k + 1):
            assert ghw_subcode(code, r) == ghw_column(code, r), (code.descriptor, r)
            count += 1
    assert count > 1000


def test_criterion_6_db_at_least_ghw(grid_harness):
    records, summary = grid_harness
    assert summary["violations"] == 0 and summary["skipped"] == 0
    compared = 0
    for rec in records:
        for b in range(1, rec["k"] + 1):
            assert rec["b_symbol"][b - 1] >= rec["generalized"][b - 1]
            compared += 1
    assert compared == summary["checks"]["db_at_least_ghw"]
    ham = parse_descriptor("q=2;n=7;g=1101")
    assert b_symbol_profile(ham)[1] == generalized_hierarchy(ham).values[1] == 5


def test_criterion_7_triangle_and_shape(grid_harness):
    records, summary = grid_harness
    assert summary["violations"] == 0
    assert summary["checks"]["triangle"] > 0 and summary["checks"]["hierarchy_shape"] == len(records)
    for rec in records:
        d, k, n = rec["b_symbol"], rec["k"], rec["n"]
        assert rec["theta"] == k - 1
        assert all(a < b for a, b in zip(d[:k], d[1:k])) and d[0] > 0
        assert all(v == n for v in d[k - 1:])
    rng = np.random.default_rng(7)
    for q in (2, 3, 4, 5):
        for W in random_words(q, 2000, rng):
            prof = weight_profile(W)
            n = W.shape[1]
            for b in range(1, n):
                for m in range(1, n - b + 1):
                    wb, wm, wbm = prof[:, b - 1], prof[:, m - 1], prof[:, b + m - 1]
                    hyp = (wb > 0) & (wb <= n - m) & (wm > 0) & (wm <= n - b)
                    ok = (np.maximum(wb + m, wm + b) <= wbm) & (wbm <= np.minimum(wb + wm, n))
                    assert (ok | ~hyp).all()


def test_criterion_8_bound_suite(grid_harness):
    records, summary = grid_harness
    assert summary["violations"] == 0
    checks = summary["checks"]
    for name in ("generalized_singleton", "bsymbol_singleton", "generalized_griesmer", "weight_sum_identity",
                 "db_upper_average", "length_lower_tb_plus_s", "length_lower_b_divides_k",
                 "db_ratio", "db_ratio_ceil", "db_ceil_of_sum", "db_sum_of_ceil"):
        assert checks[name] > 0
    assert "weight_sum_identity:inapplicable" not in checks
    assert checks["weight_sum_identity"] == checks["consecutive_independence"]
    ham = parse_descriptor("q=2;n=7;g=1101")
    d = b_symbol_profile(ham)
    total = int(weight_profile(ham.codewords())[:, 1].sum())
    reps = {r.bound_id: r for r in check_shu(ham, 2, d[1], total, b_consecutive_independent(ham, 2))}
    reps.update({r.bound_id: r for r in lower_bounds_db(ham, 2, d)})
    assert total == 84 and reps["weight_sum_identity"].tight
    assert reps["db_upper_average"].rhs == 5 and reps["db_upper_average"].tight
    assert reps["db_sum_of_ceil"].rhs == 5 and reps["db_sum_of_ceil"].tight


def test_criterion_9_conjecture_search():
    for q, n_max in ((2, 20), (3, 14)):
        verdict, records = run_conjecture_search(SearchSpec(qs=(q,), n_max=n_max))
        assert verdict["pairs_skipped"] == 0
        assert verdict["pairs_examined"] == verdict["grid_pairs"] > 0
        for cert in verdict["counterexamples"]:
            check = verify_certificate(cert)
            assert check["d_b_matches"] and check["holds"] is False
        for rec in records:
            for skip in rec["skipped"]:
                assert skip["reason"]
        print(q, verdict["verdict"], verdict["pairs_examined"])


def test_criterion_10_determinism(tmp_path):
    for mode in ("search", "harness"):
        blobs = set()
        for run, jobs in enumerate((1, 1, 2, 3)):
            spec = SearchSpec(qs=(2, 3), n_max=9, jobs=jobs, sample_seed=11, b_policy="all")
            if mode == "search":
                _, records = run_conjecture_search(spec)
            else:
                records, _ = run_theorem_harness(spec)
            path, _ = write_reports(records, tmp_path / f"{mode}-{run}.jsonl")
            blobs.add(path.read_bytes())
        assert len(blobs) == 1
