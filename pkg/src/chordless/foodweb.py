"""Food webs and their niche-overlap (competition) graphs."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .graph import Graph, build_graph
from .io import parse_arcs

__all__ = ["FoodWeb", "niche_overlap", "DIRECTIONS"]

DIRECTIONS = ("predator-to-prey", "prey-to-predator")


@dataclass(frozen=True)
class FoodWeb:
    """Directed feeding relation over named species.

    ``arcs`` are ``(source, target)`` index pairs as they appear in the data;
    which end is the predator is decided by the ``direction`` given to
    :func:`niche_overlap`. Self-arcs are rejected, duplicates removed.
    """

    species: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.species)
        clean = []
        for a, b in self.arcs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"arc ({a}, {b}) references an unknown species")
            if a == b:
                raise ValueError(f"self-arc on species {self.species[a]!r}")
            clean.append((int(a), int(b)))
        object.__setattr__(self, "species", tuple(self.species))
        object.__setattr__(self, "arcs", tuple(dict.fromkeys(clean)))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[str, str]]) -> FoodWeb:
        ids: dict[str, int] = {}
        arcs = [(ids.setdefault(a, len(ids)), ids.setdefault(b, len(ids))) for a, b in pairs]
        return cls(tuple(ids), tuple(arcs))

    @classmethod
    def from_text(cls, text: str) -> FoodWeb:
        names, arcs = parse_arcs(text)
        return cls(tuple(names), tuple(arcs))


def niche_overlap(fw: FoodWeb, direction: str = "predator-to-prey") -> Graph:
    """Undirected graph joining every two species that share a prey.

    Parameters
    ----------
    fw : FoodWeb
    direction : {"predator-to-prey", "prey-to-predator"}
        Orientation of ``fw.arcs``.

    Every species stays in the result, including those with no competitor;
    see :func:`~chordless.graph.drop_isolated`.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    n = len(fw.species)
    eats = np.zeros((n, n), dtype=np.int64)
    for a, b in fw.arcs:
        if direction == "predator-to-prey":
            eats[a, b] = 1
        else:
            eats[b, a] = 1
    shared = eats @ eats.T
    iu, ju = np.nonzero(np.triu(shared, 1))
    return build_graph(n, np.stack([iu, ju], axis=1), fw.species, max_vertices=None)
