"""
Two hierarchies of a cyclic code
================================

b-symbol distances next to generalized Hamming weights, for a few
familiar codes, and the irreducible cyclic family with a single zero-run
pattern.
"""

from bsymbol import b_symbol_hierarchy, generalized_hierarchy, irreducible_cyclic, parse_descriptor, simplex
from bsymbol.metrics import run_census_batch

codes = {
    "Hamming [7,4]_2": parse_descriptor("q=2;n=7;g=1101"),
    "simplex [7,3]_2": simplex(2, 3),
    "simplex [13,3]_3": simplex(3, 3),
    "Reed-Solomon [4,2]_5": parse_descriptor("q=5;n=4;g=231"),
}

for name, code in codes.items():
    d = b_symbol_hierarchy(code)
    ghw = generalized_hierarchy(code, "both")
    print(f"{name:22s} {code.descriptor:18s} d_b={list(d.values)}  ghw={list(ghw.values)}  theta={d.theta}")

# Every nonzero codeword of these codes shares one zero-run census.
for q, k, delta in [(4, 2, 3), (3, 3, 2), (2, 4, 1)]:
    ic = irreducible_cyclic(q, k, delta)
    census = run_census_batch(ic.code.codewords()[1:])
    single = bool((census == census[0]).all())
    print(f"q={q} k={k} delta={delta}: [{ic.code.n},{k}] hypotheses={ic.hypotheses_hold} "
          f"single census={single} d_b={list(b_symbol_hierarchy(ic.code).values)}")
