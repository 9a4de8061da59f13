"""
Simple graphs on the vertex set [n].
"""
from typing import FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Edge = Tuple[int, int]


class Graph(BaseModel):
    """Simple graph on [n] with edges stored as ordered pairs (i, j), i < j."""

    model_config = ConfigDict(frozen=True)

    n: int
    edges: FrozenSet[Edge] = frozenset()

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, v):
        normalized = set()
        for edge in v:
            i, j = (int(x) for x in edge)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return frozenset(normalized)

    @model_validator(mode="after")
    def validate_vertices(self) -> "Graph":
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for i, j in self.edges:
            if not (1 <= i and j <= self.n):
                raise ValueError(f"edge {(i, j)} outside [{self.n}]")
        return self

    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def neighbours_below(self, vertex: int) -> Tuple[int, ...]:
        """Neighbours with a smaller label."""
        return tuple(i for i, j in self.sorted_edges() if j == vertex)
