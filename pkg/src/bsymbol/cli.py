"""Command-line front end.

Data goes to stdout (JSON by default, ``--format table`` for people);
diagnostics go to stderr.  Exit status: 0 when every check holds, 2 when a
violation or conjecture counterexample is found, 1 on operational errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import __version__
from .algebra import field_of_size, format_elements, parse_elements
from .bounds import (
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
    b_consecutive_independent,
    irreducible_cyclic,
    parse_descriptor,
    simplex,
)
from .explorer import (
    B_POLICIES,
    EXIT_COUNTEREXAMPLE,
    EXIT_ERROR,
    EXIT_OK,
    SearchSpec,
    run_conjecture_search,
    run_theorem_harness,
    write_reports,
)
from .hierarchy import b_symbol_hierarchy, b_symbol_profile, generalized_hierarchy
from .metrics import b_support, run_distribution, w_b_direct, w_b_from_runs, w_b_via_span, weight_profile

log = logging.getLogger("bsymbol")

B_HELP = ("window length b: the b-symbol weight counts the cyclic windows "
          "(x_i, ..., x_{i+b-1}) that are not all zero")
R_HELP = "subcode dimension r: the r-th generalized Hamming weight is the smallest support of an r-dimensional subcode"
DELTA_HELP = "index Delta: the code has length n = (q^k - 1) / Delta; Delta must divide q^k - 1"
DESCRIPTOR_HELP = ("code descriptor 'q=<int>;n=<int>;g=<poly>' (cyclic) or "
                   "'q=<int>;n=<int>;G=<row>,<row>,...' (linear); polynomial coefficients "
                   "ascend by degree, one digit each for q <= 10, comma separated for q > 10")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for counterexamples
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class CommandFailed(Exception):
    pass


def _emit(args, payload, table_rows=None):
    if args.format == "table" and table_rows is not None:
        for row in table_rows:
            print(row)
    else:
        print(json.dumps(payload, sort_keys=True))


# ----------------------------------------------------------------------------
# weight


def cmd_weight(args) -> int:
    field = field_of_size(args.q)
    word = parse_elements(field, args.word)
    if not word:
        raise ValueError("empty word")
    b = args.b
    if not 1 <= b <= len(word):
        raise ValueError(f"b={b} outside 1..{len(word)}")
    methods = {
        "direct": lambda: w_b_direct(word, b),
        "runs": lambda: w_b_from_runs(run_distribution(word), b),
        "support": lambda: len(b_support(word, b)),
        "span": lambda: w_b_via_span(word, b, field),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    values = {m: methods[m]() for m in chosen}
    if len(set(values.values())) != 1:
        raise CommandFailed(f"methods disagree: {values}")
    value = next(iter(values.values()))
    payload = {"q": args.q, "word": format_elements(field, word), "b": b,
               "method": args.method, "w_b": value}
    _emit(args, payload, [str(value)])
    return EXIT_OK


# ----------------------------------------------------------------------------
# hierarchy


def cmd_hierarchy(args) -> int:
    code = parse_descriptor(args.code)
    out = {"code": code.descriptor, "n": code.n, "k": code.k, "cyclic": code.is_cyclic}
    rows = [f"code {code.descriptor}  [n={code.n}, k={code.k}]"]
    bsym = ghw = None
    if args.metric in ("bsymbol", "both"):
        bsym = b_symbol_hierarchy(code, full=args.full, max_codewords=args.max_codewords)
        out["b_symbol"] = bsym.to_dict()
        rows.append("b-symbol     " + " ".join(map(str, bsym.values)) + f"   (theta={bsym.theta})")
    if args.metric in ("ghw", "both"):
        ghw = generalized_hierarchy(code, args.ghw_method, args.max_subspaces)
        out["generalized"] = ghw.to_dict()
        rows.append("generalized  " + " ".join(map(str, ghw.values)))
    if code.is_cyclic and bsym is not None and ghw is not None:
        d1, dk = bsym.values[0], bsym.values[code.k - 1]
        anchors = {"d1_equals_ghw1": d1 == ghw.values[0],
                   "dk_equals_ghwk_equals_n": dk == ghw.values[-1] == code.n}
        out["anchors"] = anchors
        rows.append(" ".join(f"{k}={v}" for k, v in anchors.items()))
    _emit(args, out, rows)
    return EXIT_OK


# ----------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    code = parse_descriptor(args.code)
    k, n = code.k, code.n
    bs = args.b or []
    rs = args.r or []
    if not bs and not rs:
        bs = list(range(1, k + 1))
        rs = list(range(1, k + 1))
    for b in bs:
        if not 1 <= b <= n:
            raise ValueError(f"b={b} outside 1..{n}")
    for r in rs:
        if not 1 <= r <= k:
            raise ValueError(f"r={r} outside 1..{k}")
    words = code.codewords(args.max_codewords)[1:]
    prof = weight_profile(words)
    d_values = [int(v) for v in prof.min(axis=0)]
    reports = []
    ghw = None
    if rs:
        ghw = list(generalized_hierarchy(code, "subcode", args.max_subspaces).values)
        for r in rs:
            reports += check_generalized_singleton(code, r, ghw[r - 1])
            reports += check_generalized_griesmer(code, r, ghw)
    for b in bs:
        reports.append(check_bsymbol_singleton_code(code, b, d_values[b - 1]))
        if code.is_cyclic and b >= k:
            reports.append(check_cyclic_full_length(code, b, d_values[b - 1]))
        if b <= k:
            indep = b_consecutive_independent(code, b)
            reports += check_shu(code, b, d_values[b - 1], int(prof[:, b - 1].sum()), indep)
            reports += lower_bounds_db(code, b, d_values)
            if indep:
                reports.append(check_upper_vs_lower(code, b, d_values[0]))
            reports.append(check_conjecture(code, b, d_values[b - 1]))
    if bs:
        reports += check_mds_relations(code, d_values, ghw)
    if args.format == "table":
        for rep in reports:
            params = ",".join(f"{k}={v}" for k, v in rep.params.items() if k in ("b", "r", "t"))
            state = "n/a" if not rep.applicable else ("tight" if rep.tight else ("holds" if rep.holds else "VIOLATED"))
            print(f"{rep.bound_id:28s} {params:12s} {rep.lhs!s:>8} {rep.relation} {rep.rhs!s:<8} {state}")
    else:
        for rep in reports:
            print(json.dumps(rep.to_dict(), sort_keys=True))
    return EXIT_COUNTEREXAMPLE if any(rep.violated for rep in reports) else EXIT_OK


# ----------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    if args.family == "simplex":
        code = simplex(args.q, args.k, args.max_codewords)
        out = {"code": code.descriptor, "n": code.n, "k": code.k, "cyclic": code.is_cyclic}
    else:
        if args.delta is None:
            raise ValueError("irreducible needs --delta")
        ic = irreducible_cyclic(args.q, args.k, args.delta)
        code = ic.code
        out = {"code": code.descriptor, "n": code.n, "k": code.k, "cyclic": True,
               "delta": ic.delta, "hypotheses_hold": ic.hypotheses_hold,
               "delta_divides_q_minus_1": ic.delta_divides_q_minus_1,
               "gcd_n_delta_is_1": ic.gcd_n_delta_is_1,
               "gcd_period_delta_is_1": ic.gcd_period_delta_is_1}
    if args.with_distances:
        out["b_symbol"] = list(b_symbol_profile(code, args.max_codewords))
    _emit(args, out, [f"{key}: {val}" for key, val in out.items()])
    return EXIT_OK


# ----------------------------------------------------------------------------
# search / harness


def _spec(args, **extra) -> SearchSpec:
    return SearchSpec(
        qs=tuple(args.q or [2]),
        n_min=args.n_min,
        n_max=args.n_max,
        k_values=tuple(args.k) if args.k else None,
        b_policy=args.b_policy,
        max_codewords=args.max_codewords,
        max_subspaces=args.max_subspaces,
        with_ghw=not args.no_ghw,
        jobs=args.jobs,
        **extra,
    )


def _finish(args, records, summary, failed: bool) -> int:
    if args.out:
        jsonl, csv_path = write_reports(records, args.out)
        log.info("wrote %s and %s", jsonl, csv_path)
        if args.format == "table":
            for key, val in summary.items():
                if isinstance(val, dict):
                    for sub, cnt in val.items():
                        print(f"{key}.{sub}: {cnt}")
                else:
                    print(f"{key}: {val}")
        else:
            print(json.dumps(summary, sort_keys=True))
    else:
        for rec in records:
            print(json.dumps(rec, sort_keys=True, separators=(",", ":")))
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_search(args) -> int:
    spec = _spec(args)
    start = time.perf_counter()
    verdict, records = run_conjecture_search(spec)
    log.info("search over %d codes took %.2fs", len(records), time.perf_counter() - start)
    return _finish(args, records, verdict, verdict["verdict"] == "counterexample")


def cmd_harness(args) -> int:
    spec = _spec(args, sample_seed=args.sample_seed, dp_samples=args.dp_samples)
    start = time.perf_counter()
    records, summary = run_theorem_harness(spec)
    log.info("harness over %d codes took %.2fs", len(records), time.perf_counter() - start)
    if summary["violations"]:
        log.error("violation found in %s", summary["halted_at"])
    return _finish(args, records, summary,
                   bool(summary["violations"] or summary["conjecture_counterexamples"]))


# ----------------------------------------------------------------------------
# parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(p):
    p.add_argument("--format", choices=("json", "table"), default="json",
                   help="stdout format (default: json)")
    p.add_argument("--max-codewords", type=_positive, default=MAX_CODEWORDS,
                   help=f"refuse to enumerate codes with more than this many codewords (default: {MAX_CODEWORDS})")
    p.add_argument("--max-subspaces", type=_positive, default=MAX_SUBSPACES,
                   help=("refuse generalized-weight computations needing more than this many "
                         f"subspaces (default: {MAX_SUBSPACES})"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bsymbol", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("weight", help="b-symbol weight of a single word")
    p.add_argument("--q", type=int, required=True, help="field size (prime power <= 16)")
    p.add_argument("--word", required=True,
                   help="word as element codes; one digit each for q <= 10, comma separated above")
    p.add_argument("--b", type=_positive, required=True, help=B_HELP)
    p.add_argument("--method", choices=("direct", "runs", "support", "span", "all"), default="all",
                   help=("direct: count nonzero windows; runs: zero-run census formula; "
                         "support: size of the union of b shifted supports; span: average weight "
                         "over all combinations of the word and its b-1 shifts; all: every "
                         "method, failing if they disagree (default)"))
    _add_common(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("hierarchy", help="b-symbol and generalized weight hierarchies of a code")
    p.add_argument("code", help=DESCRIPTOR_HELP)
    p.add_argument("--metric", choices=("bsymbol", "ghw", "both"), default="both",
                   help="bsymbol: d_b for each window length b; ghw: generalized Hamming weights for each r")
    p.add_argument("--full", action="store_true",
                   help="for cyclic codes also list d_b for b > k (always n)")
    p.add_argument("--ghw-method", choices=("subcode", "column", "both"), default="subcode",
                   help="subcode: minimise support over r-dim subcodes; column: maximise generator "
                        "columns inside (k-r)-dim message subspaces; both: run and compare")
    _add_common(p)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("bounds", help="evaluate every bound on a code")
    p.add_argument("code", help=DESCRIPTOR_HELP)
    p.add_argument("--b", type=_positive, action="append", help=B_HELP + " (repeatable)")
    p.add_argument("--r", type=_positive, action="append", help=R_HELP + " (repeatable)")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="build a simplex or irreducible cyclic code")
    p.add_argument("family", choices=("simplex", "irreducible"))
    p.add_argument("--q", type=int, required=True, help="field size (prime power <= 16)")
    p.add_argument("--k", type=_positive, required=True, help="dimension k")
    p.add_argument("--delta", type=_positive, help=DELTA_HELP)
    p.add_argument("--with-distances", action="store_true", help="also list d_1..d_n")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    for name, func, helptext in (
        ("search", cmd_search, "search cyclic codes for counterexamples to the b-symbol Griesmer bound"),
        ("harness", cmd_harness, "check every identity and bound on all cyclic codes of a grid"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--q", type=int, action="append",
                       help="field size; repeat for several fields (default: 2)")
        p.add_argument("--n-min", type=int, default=2, help="smallest length (default: 2)")
        p.add_argument("--n-max", type=int, default=20, help="largest length (default: 20)")
        p.add_argument("--k", type=_positive, action="append", help="only codes of this dimension (repeatable)")
        p.add_argument("--b-policy", choices=B_POLICIES, default="nontrivial",
                       help=("window lengths b at which the conjectured bound is evaluated: "
                             "nontrivial = b | k with 1 < b < k (default); divisors = every b | k; "
                             "all = every b <= k, non-divisors reported as inapplicable"))
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes (output is identical for any value)")
        p.add_argument("--out", help="write JSON lines here and a CSV summary beside it; "
                                     "without it records go to stdout")
        p.add_argument("--no-ghw", action="store_true", help="skip generalized Hamming weights")
        if name == "harness":
            p.add_argument("--sample-seed", type=int, default=0,
                           help="seed for the random scalings and shifts of the invariance check")
            p.add_argument("--dp-samples", type=int, default=2,
                           help="random scaling+shift transforms tried per code (default: 2)")
        _add_common(p)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CommandFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (ValueError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
