"""Reproduce the minimum crossing numbers of monotone drawings of K_n.

The branch-and-bound search proves mon-cr(K_n) = Z(n) for small n by
exhausting the space of simple signatures, and counts the switching
classes among the minima.  n = 7 takes a second or two; n = 8 takes around
half a minute and reproduces the classes row 1, 1, 5, 3.
"""

import time

from monosig import SearchConfig, min_crossing_search, minimal_classes, zeta
from monosig.classify import is_two_page
from monosig.search import count_valid

print("== how many valid signatures are there? ==")
print(f"{'n':>2} {'semisimple':>11} {'simple':>8} {'pseudolinear':>13}")
for n in range(3, 7):
    print(f"{n:>2} {count_valid(n, 'semisimple'):>11} "
          f"{count_valid(n, 'simple'):>8} {count_valid(n, 'pseudolinear'):>13}")
print()

print("== minimum crossings over simple monotone drawings ==")
print(f"{'n':>2} {'minimum':>8} {'Z(n)':>5} {'minima':>7} {'classes':>8} {'time':>7}")
for n in (5, 6, 7):
    t0 = time.time()
    result = min_crossing_search(SearchConfig(n=n, mode="minimize"))
    print(f"{n:>2} {result.minimum:>8} {zeta(n):>5} "
          f"{len(result.minimal_signatures):>7} {result.class_count:>8} "
          f"{time.time() - t0:>6.1f}s")
print()
print("(run with n=8 to see minimum 18 in 3 classes, about half a minute;")
print(" n=9 and n=10 reproduce 510 and 38 classes but are long runs, gated")
print(" behind --long in the command-line interface)")
print()

result = min_crossing_search(SearchConfig(n=7, mode="minimize"))
print("== the five minimal classes of K_7 ==")
for idx, group in enumerate(minimal_classes(result), start=1):
    two_page = any(is_two_page(s) for s in group)
    print(f"class {idx}: {len(group):>4} signatures, "
          f"contains a 2-page drawing: {two_page}, rep {group[0].signs}")
