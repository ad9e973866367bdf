"""
Every bound on one code
=======================

The [7,4] Hamming code at window length 2 meets most of the bounds with
equality, which makes it a good sanity anchor.
"""

import numpy as np

from bsymbol import parse_descriptor
from bsymbol.bounds import check_conjecture, check_shu, lower_bounds_db
from bsymbol.codes import b_consecutive_independent
from bsymbol.hierarchy import b_symbol_profile
from bsymbol.metrics import weight_profile

code = parse_descriptor("q=2;n=7;g=1101")
d = b_symbol_profile(code)
b = 2

total = int(weight_profile(code.codewords())[:, b - 1].sum())
print("sum of w_2 over the code:", total)

reports = check_shu(code, b, d[b - 1], total, b_consecutive_independent(code, b))
reports += lower_bounds_db(code, b, d)
reports.append(check_conjecture(code, b, d[b - 1]))
for rep in reports:
    mark = "tight" if rep.tight else "holds" if rep.holds else "VIOLATED"
    print(f"  {rep.bound_id:28s} {rep.lhs:>4} {rep.relation} {rep.rhs:<4} {mark}")

print("terms of the conjectured bound:", reports[-1].certificate["terms"])
print("all tight:", np.all([r.tight for r in reports if r.bound_id != "db_ratio"]))
