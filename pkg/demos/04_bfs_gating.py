"""What the breadth-first gate buys.

Before extending a path the BFS variant checks that the path's tip can still
reach its start through vertices that would keep the cycle chordless. On
dense random graphs most paths die early, and the gate cuts them off before
any recursion happens.
"""

from chordless import Enumeration, gen_gnp, pruned_bfs, build_graph, Labeling

# A tiny case first: 0-1-2-3-4 with the chord 1-3.
g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
ell = Labeling.from_order([1, 0, 3, 2, 4])
pi = pruned_bfs(g, ell, [0, 1, 3])
print("path 0-1-3 can close:", pi.defined(3))

print(f"\n{'p':>5}{'holes':>9}{'dfs frames':>12}{'bfs frames':>12}{'gated':>8}{'dead':>6}")
for p in (0.1, 0.2, 0.35, 0.5):
    g = gen_gnp(40, p, seed=7)
    dfs = Enumeration(g, algorithm="dfs").count()
    bfs = Enumeration(g, algorithm="bfs").count()
    assert dfs.cycles_ge4 == bfs.cycles_ge4
    print(f"{p:>5}{dfs.cycles_ge4:>9}{dfs.recursions:>12}{bfs.recursions - bfs.pruned:>12}"
          f"{bfs.pruned:>8}{bfs.dead_ends:>6}")
