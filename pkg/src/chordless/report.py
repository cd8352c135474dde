"""Machine-readable run summaries."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .enumeration import EnumStats
from .graph import Graph

__all__ = ["RunReport"]


@dataclass
class RunReport:
    n: int
    m: int
    num_triplets: int
    triangles: int
    holes: int
    longest_path: int
    visits: int
    recursions: int
    runtime_ms: float
    algorithm: str

    @classmethod
    def from_stats(cls, g: Graph, stats: EnumStats, algorithm: str) -> RunReport:
        return cls(
            n=g.n,
            m=g.m,
            num_triplets=stats.num_triplets,
            triangles=stats.triangles,
            holes=stats.cycles_ge4,
            longest_path=stats.longest_path,
            visits=stats.visits,
            recursions=stats.recursions,
            runtime_ms=round(stats.runtime_ms, 3),
            algorithm=algorithm,
        )

    @property
    def total(self) -> int:
        return self.holes + self.triangles

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)
