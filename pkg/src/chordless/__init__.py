"""Enumeration of chordless cycles (induced cycles) in undirected graphs."""

from .bfs import PredecessorMap, pruned_bfs
from .enumeration import (
    EnumStats,
    Enumeration,
    block_neighbors,
    cc_visit,
    chordless_cycles,
    enumerate_bfs,
    enumerate_dfs,
    unblock_neighbors,
)
from .foodweb import FoodWeb, niche_overlap
from .generators import (
    from_spec,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_gnp,
    gen_grid,
    gen_path,
    gen_random_tree,
    gen_wheel,
)
from .graph import Graph, GraphError, build_graph, drop_isolated
from .io import ParseError, format_edgelist, parse_dimacs, parse_edgelist
from .labeling import Labeling, degree_labeling
from .oracle import is_chordless_cycle, oracle_enumerate
from .report import RunReport
from .seeding import Triplet, canonicalize_cycle, triplets

__version__ = "0.1.0"
