"""
Distinct involutions have distinct Kostant-Kumar polynomials.

Pass a type and a rank on the command line, e.g. ``python3 03_distinct_polynomials.py C 3``.
Rank 4 takes several seconds.
"""

import sys
from collections import Counter

from kkpoly.nilhecke import d
from kkpoly.root_system import build
from kkpoly.weyl import enumerate_involutions, length

kind, n = (sys.argv[1], int(sys.argv[2])) if len(sys.argv) > 2 else ("C", 3)
rs = build(kind, n)

values = {}
for s in enumerate_involutions(rs):
    values[s] = d(s).value
    print(f"{str(s):>14}  l={length(s):<2} {values[s]}")

clash = [p for p, k in Counter(values.values()).items() if k > 1]
print(f"{len(values)} involutions, {len(set(values.values()))} distinct polynomials,"
      f" {len(clash)} collisions")
