"""Reproduce the reference hole counts on the standard benchmark graphs.

Pass --slow to include the three large instances (several minutes total).
"""

import sys

from chordless import Enumeration, from_spec

CASES = [
    ("cycle:100", 1),
    ("wheel:100", 1),
    ("kbip:8,8", 784),
    ("grid:4,10", 1823),
    ("grid:5,6", 749),
    ("grid:6,6", 3436),
    ("grid:5,10", 52620),
]
if "--slow" in sys.argv:
    CASES += [("kbip:50,50", 1_500_625), ("grid:6,10", 800_139), ("grid:7,10", 8_136_453)]

# warm the JIT so the first row is not charged for compilation
Enumeration(from_spec("grid:3,3")).count()
Enumeration(from_spec("grid:3,3"), algorithm="bfs").count()

print(f"{'graph':<12}{'|T|':>8}{'holes':>11}{'dfs ms':>10}{'bfs ms':>10}  ok")
for spec, expected in CASES:
    g = from_spec(spec)
    dfs = Enumeration(g, algorithm="dfs").count()
    bfs = Enumeration(g, algorithm="bfs").count()
    ok = dfs.cycles_ge4 == bfs.cycles_ge4 == expected
    print(f"{spec:<12}{dfs.num_triplets:>8}{dfs.cycles_ge4:>11}"
          f"{dfs.runtime_ms:>10.1f}{bfs.runtime_ms:>10.1f}  {'yes' if ok else 'NO'}")
