"""
Sweeping for counterexamples
============================

Runs the conjectured bound over every binary cyclic code up to length 16
and the theorem harness over a smaller grid, then writes the reports.
"""

import sys
import tempfile
from collections import Counter
from pathlib import Path

from bsymbol import SearchSpec, run_conjecture_search, run_theorem_harness, write_reports

verdict, records = run_conjecture_search(SearchSpec(qs=(2,), n_max=16))
print(verdict["verdict"], f"({verdict['pairs_examined']} pairs, {verdict['pairs_tight']} tight)")

slack = Counter()
for rec in records:
    for pair in rec["pairs"]:
        slack[pair["lhs"] - pair["rhs"]] += 1
print("slack n - sum:", dict(sorted(slack.items())))

tight = [(r["code"], p["params"]["b"]) for r in records for p in r["pairs"] if p["tight"]]
print("tight pairs:", tight)

_, summary = run_theorem_harness(SearchSpec(qs=(2, 3), n_max=8))
print("harness:", summary["codes"], "codes,", sum(summary["checks"].values()), "checks,",
      summary["violations"], "violations")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp()) / "sweep.jsonl"
jsonl, csv_path = write_reports(records, out)
print("wrote", jsonl, "and", csv_path)
