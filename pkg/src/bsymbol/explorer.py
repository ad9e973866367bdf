"""Batch sweeps over cyclic code families.

Two sweeps are provided.  :func:`run_theorem_harness` recomputes every
identity and bound on each code and collects violations (there should be
none).  :func:`run_conjecture_search` checks the conjectured b-symbol
Griesmer bound and keeps explicit accounting of what was examined and what
was skipped.  Records are plain dicts so they serialise straight to JSON.
"""

from __future__ import annotations

import csv
import json
import logging
import zlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path

import numpy as np

from .algebra import field_of_size
from .bounds import (
    BoundReport,
    check_bsymbol_singleton_code,
    check_conjecture,
    check_cyclic_full_length,
    check_generalized_griesmer,
    check_generalized_singleton,
    check_mds_relations,
    check_shu,
    check_upper_vs_lower,
    lower_bounds_db,
)
from .codes import (
    MAX_CODEWORDS,
    MAX_SUBSPACES,
    BudgetExceeded,
    CyclicCode,
    b_consecutive_independent,
    check_codeword_budget,
    cyclic_divisors,
    parse_descriptor,
    transform_code,
)
from .hierarchy import (
    check_bsymbol_shape,
    code_theta,
    generalized_hierarchy,
    orbit_representatives,
)
from .linalg import prefix_ranks
from .metrics import (
    all_zero_rows,
    run_census_batch,
    span_weight_sums,
    span_weight_profile,
    span_work,
    weight_profile,
)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2

B_POLICIES = ("nontrivial", "divisors", "all")


@dataclass(frozen=True)
class SearchSpec:
    """Grid and budgets for a sweep.

    ``b_policy`` selects the ``b`` values the conjecture is evaluated at:
    ``nontrivial`` (``b | k`` with ``1 < b < k``), ``divisors`` (every
    ``b | k``) or ``all`` (every ``1 <= b <= k``; non-divisors are reported
    as inapplicable).
    """

    qs: tuple[int, ...] = (2,)
    n_min: int = 2
    n_max: int = 20
    k_values: tuple[int, ...] | None = None
    k_max: int | None = None
    b_policy: str = "nontrivial"
    include_trivial: bool = False
    max_codewords: int = MAX_CODEWORDS
    max_subspaces: int = MAX_SUBSPACES
    max_span_work: int = 2**27
    with_ghw: bool = True
    proposition_max_b: int = 8
    dp_samples: int = 2
    sample_seed: int = 0
    jobs: int = 1
    fault: dict | None = None

    def __post_init__(self):
        if self.b_policy not in B_POLICIES:
            raise ValueError(f"b_policy must be one of {B_POLICIES}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.max_codewords < 1 or self.max_subspaces < 1:
            raise ValueError("budgets must be positive")
        for q in self.qs:
            field_of_size(q)

    def b_values(self, k: int) -> list[int]:
        if self.b_policy == "all":
            return list(range(1, k + 1))
        divs = [b for b in range(1, k + 1) if k % b == 0]
        if self.b_policy == "divisors":
            return divs
        return [b for b in divs if 1 < b < k]

    def to_dict(self) -> dict:
        return asdict(self)


def code_tasks(spec: SearchSpec) -> list[tuple[int, int, int, str]]:
    """``(n, q, divisor_index, g)`` for every code in the grid, in sweep order."""
    tasks = []
    for n in range(max(spec.n_min, 2), spec.n_max + 1):
        for q in spec.qs:
            field = field_of_size(q)
            for idx, g in enumerate(cyclic_divisors(n, field)):
                k = n - g.degree
                if k == 0 or (k == n and not spec.include_trivial):
                    continue
                if spec.k_values is not None and k not in spec.k_values:
                    continue
                if spec.k_max is not None and k > spec.k_max:
                    continue
                tasks.append((n, q, idx, str(g)))
    return tasks


def _build(task) -> CyclicCode:
    n, q, _idx, g = task
    return parse_descriptor(f"q={q};n={n};g={g}")


def _fault_delta(spec: SearchSpec, code, b: int) -> int:
    f = spec.fault
    if f and f.get("code") == code.descriptor and f.get("b") == b:
        return int(f.get("delta", -1))
    return 0


def _profile_with_fault(spec: SearchSpec, code, profile) -> list[int]:
    return [d + _fault_delta(spec, code, b) for b, d in enumerate(profile, start=1)]


def _base_record(task, code) -> dict:
    n, q, idx, g = task
    return {"code": code.descriptor, "q": q, "n": n, "k": code.k, "divisor_index": idx}


# ----------------------------------------------------------------------------
# Theorem harness


class _Tally:
    def __init__(self):
        self.counts: Counter = Counter()
        self.violations: list[dict] = []

    def check(self, theorem: str, ok, detail=None, count: int | None = None):
        ok_arr = np.asarray(ok, dtype=bool)
        self.counts[theorem] += int(ok_arr.size if count is None else count)
        if not ok_arr.all():
            bad = {"theorem": theorem}
            if detail is not None:
                bad.update(detail() if callable(detail) else detail)
            self.violations.append(bad)

    def report(self, theorem: str, rep: BoundReport):
        if not rep.applicable:
            self.counts[theorem + ":inapplicable"] += 1
            return
        self.counts[theorem] += 1
        if rep.violated:
            self.violations.append({"theorem": theorem, "report": rep.to_dict()})


def _word_list(words, rows) -> list[list[int]]:
    return [[int(v) for v in words[i]] for i in rows]


def _check_words(t: _Tally, code, words, prof, spec: SearchSpec):
    """Vector-level identities over every nonzero codeword."""
    N, n = words.shape
    census = run_census_batch(words)
    zero = all_zero_rows(words)
    i_idx = np.arange(n + 1)
    for b in range(1, n + 1):
        wts = np.where((i_idx >= b) & (i_idx <= n - 1), i_idx - b + 1, 0)
        from_runs = n - census @ wts
        from_runs = np.where(zero, 0, from_runs)
        ok = from_runs == prof[:, b - 1]
        t.check("runs_formula", ok, lambda: {"b": b, "words": _word_list(words, np.flatnonzero(~ok)[:3])})
        long_runs = census[:, b:n].sum(axis=1)
        ok = prof[:, b - 1] >= b * long_runs
        t.check("long_run_lower_bound", ok, lambda: {"b": b})
        w1 = prof[:, 0]
        hyp = (w1 > 0) & (w1 <= n - (b - 1))
        ok = ~hyp | ((w1 + b - 1 <= prof[:, b - 1]) & (prof[:, b - 1] <= b * w1))
        t.check("hamming_sandwich", ok, lambda: {"b": b}, count=int(hyp.sum()))
        if b < n:
            wb, wb1 = prof[:, b - 1], prof[:, b]
            hyp = (wb > 0) & (wb < n)
            ok = ~hyp | (wb1 >= wb + 1)
            t.check("monotone_step", ok, lambda: {"b": b}, count=int(hyp.sum()))

    for b in range(1, n):
        for m in range(1, n - b + 1):
            wb, wm, wbm = prof[:, b - 1], prof[:, m - 1], prof[:, b + m - 1]
            hyp = (wb > 0) & (wb <= n - m) & (wm > 0) & (wm <= n - b)
            lo = np.maximum(wb + m, wm + b)
            hi = np.minimum(wb + wm, n)
            ok = ~hyp | ((lo <= wbm) & (wbm <= hi))
            t.check("triangle", ok, lambda: {"b": b, "m": m}, count=int(hyp.sum()))

    for b in range(2, min(n, spec.proposition_max_b) + 1):
        wb = prof[:, b - 1]
        hyp = (wb > 0) & (wb < n)
        for parts in _partitions(b):
            if len(parts) < 2:
                continue
            lo = np.max(np.stack([prof[:, p - 1] + b - p for p in parts]), axis=0)
            hi = np.minimum(np.sum(np.stack([prof[:, p - 1] for p in parts]), axis=0), n)
            ok = ~hyp | ((lo <= wb) & (wb <= hi))
            t.check("composition", ok, lambda: {"b": b, "parts": list(parts)}, count=int(hyp.sum()))

    _, inverse = np.unique(census, axis=0, return_inverse=True)
    inverse = inverse.ravel()
    first = np.full(inverse.max() + 1, -1)
    first[inverse[::-1]] = np.arange(N)[::-1]
    ok = np.all(prof == prof[first[inverse]], axis=1)
    t.check("equal_runs_equal_weights", ok, count=int(first.size))


def _partitions(b: int, largest: int | None = None):
    largest = b if largest is None else largest
    if b == 0:
        yield ()
        return
    for first in range(min(b, largest), 0, -1):
        for rest in _partitions(b - first, first):
            yield (first,) + rest


def _check_representatives(t: _Tally, code, words, prof, d_values, ghw, spec):
    """Rank-based lemmas and the span-average identity on shift/scale orbit representatives."""
    N, n = words.shape
    q, k = code.q, code.k
    if q**n < 2**62:
        reps = orbit_representatives(words, q, scale=True)
    else:
        reps = np.arange(N)
    rw = words[reps]
    rprof = prof[reps]
    ranks = np.array([prefix_ranks([np.roll(w, -j) for j in range(n)], code.field) for w in rw])

    counted = span_weight_profile(rw, code.field, k)
    for b in range(1, k + 1):
        # list every coefficient tuple when cheap enough, otherwise rely on counting
        sums = counted[:, b - 1]
        if span_work(rw, b, q) <= spec.max_span_work:
            listed = span_weight_sums(rw, b, code.field)
            t.check("span_listing_matches_count", listed == sums, {"b": b})
        ok = sums == rprof[:, b - 1] * q ** (b - 1) * (q - 1)
        t.check("span_average", ok, lambda: {"b": b, "words": _word_list(rw, np.flatnonzero(~ok)[:3])})

    for b in range(1, n + 1):
        rho = ranks[:, b - 1]
        deg = rho < b
        if deg.any():
            ok = rprof[deg, b - 1] == rprof[np.flatnonzero(deg), rho[deg] - 1]
            t.check("rank_deficient_shortcut", ok, lambda: {"b": b})
        d_b = d_values[b - 1]
        if d_b < n:
            achieving = rprof[:, b - 1] == d_b
            ok = rho[achieving] == b
            t.check("min_weight_full_rank", ok, lambda: {"b": b, "d_b": d_b}, count=int(achieving.sum()))
        if ghw is not None and code.is_cyclic and b <= k:
            bound = np.array(ghw)[rho - 1]
            ok = rprof[:, b - 1] >= bound
            t.check("weight_vs_ghw_of_rank", ok, lambda: {"b": b})


def _dp_samples(code, spec: SearchSpec, profile) -> list[dict]:
    seed = [spec.sample_seed, zlib.crc32(code.descriptor.encode())]
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(spec.dp_samples):
        diag = rng.integers(1, code.q, size=code.n)
        shift = int(rng.integers(0, code.n))
        other = transform_code(code, diag, shift)
        words = other.codewords(spec.max_codewords)[1:]
        other_prof = tuple(int(v) for v in weight_profile(words).min(axis=0))
        out.append({"diag": diag.tolist(), "shift": shift, "profile": list(other_prof),
                    "ok": other_prof == tuple(profile)})
    return out


def analyze_code_harness(task, spec: SearchSpec) -> dict:
    code = _build(task)
    rec = _base_record(task, code)
    skipped: list[dict] = []
    t = _Tally()
    try:
        words = code.codewords(spec.max_codewords)[1:]
    except BudgetExceeded as exc:
        rec.update(skipped=[{"what": "all checks", "reason": str(exc)}], checks={}, violations=[])
        return rec
    n, k, q = code.n, code.k, code.q
    prof = weight_profile(words)
    true_profile = [int(v) for v in prof.min(axis=0)]
    d_values = _profile_with_fault(spec, code, true_profile)
    theta = code_theta(code, spec.max_codewords)

    ghw = None
    if spec.with_ghw:
        try:
            ghw_sub = list(generalized_hierarchy(code, "subcode", spec.max_subspaces).values)
            ghw_col = list(generalized_hierarchy(code, "column", spec.max_subspaces).values)
            t.check("ghw_algorithms_agree", [ghw_sub == ghw_col],
                    {"subcode": ghw_sub, "column": ghw_col}, count=k)
            ghw = ghw_sub
        except BudgetExceeded as exc:
            skipped.append({"what": "generalized hierarchy", "reason": str(exc)})

    rec["b_symbol"] = d_values
    rec["theta"] = theta
    rec["generalized"] = ghw

    _check_words(t, code, words, prof, spec)
    _check_representatives(t, code, words, prof, d_values, ghw, spec)

    t.check("hierarchy_shape", [check_bsymbol_shape(d_values, n, theta)], {"values": d_values, "theta": theta})
    t.check("cyclic_theta", [theta == k - 1], {"theta": theta, "k": k})
    for s in _dp_samples(code, spec, true_profile):
        t.check("diag_perm_invariance", [s["ok"]], s)
    for b in range(k, n + 1):
        t.report("cyclic_db_equals_n", check_cyclic_full_length(code, b, d_values[b - 1]))
    if ghw is not None:
        t.check("hamming_anchor", [d_values[0] == ghw[0]], {"d_1": d_values[0], "ghw_1": ghw[0]})
        t.check("full_length_anchor", [d_values[k - 1] == ghw[k - 1] == n],
                {"d_k": d_values[k - 1], "ghw_k": ghw[k - 1]})
        for b in range(1, k + 1):
            t.check("db_at_least_ghw", [d_values[b - 1] >= ghw[b - 1]],
                    {"b": b, "d_b": d_values[b - 1], "ghw_b": ghw[b - 1]})
        for r in range(1, k + 1):
            for rep in check_generalized_singleton(code, r, ghw[r - 1]):
                t.report(rep.bound_id, rep)
            for rep in check_generalized_griesmer(code, r, ghw):
                t.report(rep.bound_id, rep)
    for b in range(1, n + 1):
        t.report("bsymbol_singleton", check_bsymbol_singleton_code(code, b, d_values[b - 1]))
    for rep in check_mds_relations(code, d_values, ghw):
        t.report(rep.bound_id, rep)
    for b in range(1, k + 1):
        indep = b_consecutive_independent(code, b)
        t.check("consecutive_independence", [bool(indep)], {"b": b, "reason": indep.reason})
        weight_sum = int(prof[:, b - 1].sum())
        for rep in check_shu(code, b, d_values[b - 1], weight_sum, indep):
            t.report(rep.bound_id, rep)
        for rep in lower_bounds_db(code, b, d_values):
            t.report(rep.bound_id, rep)
        if indep:
            t.report("upper_not_below_lower", check_upper_vs_lower(code, b, d_values[0]))

    rec["conjecture"] = [check_conjecture(code, b, d_values[b - 1]).to_dict()
                         for b in range(1, k + 1) if k % b == 0]
    rec["checks"] = dict(sorted(t.counts.items()))
    rec["violations"] = t.violations
    rec["skipped"] = skipped
    return rec


def _run_tasks(fn, tasks, spec: SearchSpec) -> list[dict]:
    if spec.jobs == 1 or len(tasks) <= 1:
        return [fn(task, spec) for task in tasks]
    with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
        return list(pool.map(fn, tasks, [spec] * len(tasks)))


def run_theorem_harness(spec: SearchSpec) -> tuple[list[dict], dict]:
    """Check every identity and bound on each code of the grid.

    The sweep stops after the first code with a violation; its record carries
    the failing checks.
    """
    tasks = code_tasks(spec)
    records = []
    halted_at = None
    if spec.jobs == 1:
        for task in tasks:
            rec = analyze_code_harness(task, spec)
            records.append(rec)
            if rec["violations"]:
                halted_at = rec["code"]
                break
    else:
        for rec in _run_tasks(analyze_code_harness, tasks, spec):
            records.append(rec)
            if rec["violations"]:
                halted_at = rec["code"]
                break
    totals: Counter = Counter()
    for rec in records:
        totals.update(rec.get("checks", {}))
    summary = {
        "mode": "harness",
        "codes": len(records),
        "codes_in_grid": len(tasks),
        "checks": dict(sorted(totals.items())),
        "violations": sum(len(r["violations"]) for r in records),
        "skipped": sum(len(r["skipped"]) for r in records),
        "halted_at": halted_at,
        "conjecture_counterexamples": sum(
            1 for r in records for c in r.get("conjecture", []) if c["holds"] is False),
    }
    return records, summary


# ----------------------------------------------------------------------------
# Conjecture search


CHUNK = 1 << 18


def min_profile(code, max_codewords: int = MAX_CODEWORDS) -> list[int]:
    """``(d_1, ..., d_n)``; large codes are scanned in codeword-range chunks to bound memory."""
    check_codeword_budget(code, max_codewords)
    if code.size <= CHUNK:
        return [int(v) for v in weight_profile(code.codewords(max_codewords)[1:]).min(axis=0)]
    best = np.full(code.n, code.n, dtype=np.int64)
    for start in range(1, code.size, CHUNK):
        np.minimum(best, weight_profile(code.codeword_range(start, start + CHUNK)).min(axis=0), out=best)
    return best.tolist()


def analyze_code_conjecture(task, spec: SearchSpec) -> dict:
    code = _build(task)
    rec = _base_record(task, code)
    bs = spec.b_values(code.k)
    try:
        profile = min_profile(code, spec.max_codewords)
    except BudgetExceeded as exc:
        rec.update(b_symbol=None, pairs=[], skipped=[{"b": b, "reason": str(exc)} for b in bs])
        return rec
    d_values = _profile_with_fault(spec, code, profile)
    rec["b_symbol"] = d_values
    rec["pairs"] = [check_conjecture(code, b, d_values[b - 1]).to_dict() for b in bs]
    rec["skipped"] = []
    if spec.with_ghw:
        try:
            rec["generalized"] = list(generalized_hierarchy(code, "subcode", spec.max_subspaces).values)
        except BudgetExceeded as exc:
            rec["generalized"] = None
            rec["skipped"].append({"what": "generalized hierarchy", "reason": str(exc)})
    return rec


def run_conjecture_search(spec: SearchSpec) -> tuple[dict, list[dict]]:
    """Evaluate the conjectured bound on every ``(code, b)`` pair of the grid."""
    tasks = code_tasks(spec)
    records = _run_tasks(analyze_code_conjecture, tasks, spec)
    counterexamples = [p["certificate"] for r in records for p in r["pairs"] if p["holds"] is False]
    examined = sum(1 for r in records for p in r["pairs"] if p["applicable"])
    inapplicable = sum(1 for r in records for p in r["pairs"] if not p["applicable"])
    skipped = sum(1 for r in records for s in r["skipped"] if "b" in s)
    tight = sum(1 for r in records for p in r["pairs"] if p["tight"])
    verdict = {
        "mode": "conjecture",
        "verdict": "counterexample" if counterexamples else "no-counterexample",
        "counterexamples": counterexamples,
        "codes": len(records),
        "pairs_examined": examined,
        "pairs_inapplicable": inapplicable,
        "pairs_skipped": skipped,
        "pairs_tight": tight,
        "grid_pairs": sum(len(spec.b_values(_build(t).k)) for t in tasks),
    }
    return verdict, records


def verify_certificate(cert: dict, max_codewords: int = MAX_CODEWORDS) -> dict:
    """Recompute a conjecture certificate from its code descriptor alone."""
    code = parse_descriptor(cert["code"])
    b = int(cert["b"])
    words = code.codewords(max_codewords)[1:]
    d_b = int(weight_profile(words)[:, b - 1].min())
    rep = check_conjecture(code, b, d_b)
    return {"d_b": d_b, "d_b_matches": d_b == cert["d_b"], "holds": rep.holds,
            "sum": rep.rhs, "n": code.n}


# ----------------------------------------------------------------------------
# Output


def _join(values) -> str:
    return "" if values is None else " ".join(str(v) for v in values)


def _conjecture_cell(rec: dict) -> str:
    items = rec.get("pairs", rec.get("conjecture", []))
    cells = []
    for p in items:
        b = p["params"]["b"]
        if not p["applicable"]:
            cells.append(f"b{b}=n/a")
        elif p["holds"] is False:
            cells.append(f"b{b}=VIOLATED")
        else:
            cells.append(f"b{b}={'tight' if p['tight'] else 'holds'}")
    return " ".join(cells)


CSV_HEADER = ["code", "q", "n", "k", "d_hierarchy", "ghw_hierarchy", "conjecture"]


def write_reports(records, path) -> tuple[Path, Path]:
    """Write JSON lines to ``path`` and a CSV summary next to it (``.csv``)."""
    path = Path(path)
    csv_path = path.with_suffix(".csv") if path.suffix != ".csv" else path.with_suffix(".summary.csv")
    try:
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        with csv_path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for rec in records:
                k = rec["k"]
                d = rec.get("b_symbol")
                writer.writerow([rec["code"], rec["q"], rec["n"], k,
                                 _join(d[:k] if d else None), _join(rec.get("generalized")),
                                 _conjecture_cell(rec)])
    except OSError as exc:
        raise OSError(f"cannot write reports to {path}: {exc}") from exc
    return path, csv_path
