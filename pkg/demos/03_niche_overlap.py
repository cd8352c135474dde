"""Holes in a competition graph.

Two predators compete when they share a prey. A chordless cycle of length
four or more in the resulting graph is a ring of competitors with no
shortcut, which is what ecologists look for when testing whether a food
web's niche space is one-dimensional.
"""

from chordless import FoodWeb, drop_isolated, enumerate_dfs, niche_overlap

# predator prey, one feeding link per line
WEB = """
hawk    mouse
hawk    vole
owl     vole
owl     shrew
fox     shrew
fox     rabbit
stoat   rabbit
stoat   mouse
heron   frog
heron   fish
otter   fish
"""

fw = FoodWeb.from_text(WEB)
g = drop_isolated(niche_overlap(fw, "predator-to-prey"))
print("competitors:", ", ".join(g.names))
print("overlaps:", ", ".join(f"{g.names[u]}-{g.names[v]}" for u, v in g.edges()))

holes = []
enumerate_dfs(g, sink=lambda c: len(c) > 3 and holes.append(c))
for cyc in holes:
    print("hole:", " -> ".join(g.names[v] for v in cyc))
