"""
Reading a word through a sliding window
=======================================

Each route to the b-symbol weight of a single word, side by side.
"""

import numpy as np

from bsymbol import b_support, field_of_size, run_distribution, w_b_direct, w_b_from_runs, w_b_via_span
from bsymbol.metrics import shift_matrix, span_multiset

word = [0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0]
gf2 = field_of_size(2)

# the zero runs of the word, read cyclically
runs = run_distribution(word)
print("zero runs (length: count):", runs.counts)

print(" b  windows  runs  support  span")
for b in range(1, len(word) + 1):
    print(f"{b:2d}  {w_b_direct(word, b):7d}  {w_b_from_runs(runs, b):4d}  "
          f"{len(b_support(word, b)):7d}  {w_b_via_span(word, b, gf2):4d}")

# shifts of 1010 are dependent: three shifts only span a plane,
# so every combination shows up twice
c = [1, 0, 1, 0]
print("rank of 3 shifts of 1010:", shift_matrix(c, 3, gf2).rank)
print("combinations of 2 shifts:", sorted("".join(map(str, v)) for v in span_multiset(c, 2, gf2)))

# weights grow by at least one per extra window position until they hit n
rng = np.random.default_rng(3)
w = rng.integers(1, 3, size=12) * (rng.random(12) < 0.4)
print("random ternary word", "".join(map(str, w)), "->", [w_b_direct(w, b) for b in range(1, 13)])
