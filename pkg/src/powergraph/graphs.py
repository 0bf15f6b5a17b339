"""Undirected simple graphs and the ground-truth power / enhanced power graph builders."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .groups import FiniteGroup, contains_cyclic

__all__ = [
    "Graph",
    "power_graph",
    "enhanced_power_graph",
    "is_complete",
    "universal_vertices",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count-1``.

    ``adjacency[v]`` is the frozenset of neighbours of ``v``.  Use
    :meth:`from_edges` to build one; the constructor checks symmetry,
    irreflexivity and index range.
    """

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        adj = tuple(frozenset(int(u) for u in nbrs) for nbrs in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        n = self.vertex_count
        if n < 0 or len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} entries for {n} vertices")
        for v, nbrs in enumerate(adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbour {u} of vertex {v} out of range")
                if v not in adj[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for {n} vertices")
            adj[a].add(b)
            adj[b].add(a)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        everyone = frozenset(range(n))
        return cls(n, tuple(everyone - {v} for v in range(n)))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    def __len__(self) -> int:
        return self.vertex_count

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted."""
        return sorted((a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b)

    def iter_non_edges(self) -> Iterator[tuple[int, int]]:
        for a, b in combinations(range(self.vertex_count), 2):
            if b not in self.adjacency[a]:
                yield a, b

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.vertex_count == other.vertex_count and all(
            mine <= theirs for mine, theirs in zip(self.adjacency, other.adjacency)
        )

    def union(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.vertex_count, [*self.edges(), *edges])

    def difference(self, other: Graph) -> frozenset[tuple[int, int]]:
        """Edges of ``self`` missing from ``other``."""
        return self.edge_set() - other.edge_set()


def power_graph(G: FiniteGroup, *, method: str = "membership") -> Graph:
    """``a ~ b`` iff one of ``<a>``, ``<b>`` contains the other."""
    n = G.order
    edges = [
        (a, b)
        for a, b in combinations(range(n), 2)
        if contains_cyclic(G, a, b, method=method) or contains_cyclic(G, b, a, method=method)
    ]
    return Graph.from_edges(n, edges)


def enhanced_power_graph(G: FiniteGroup) -> Graph:
    """``a ~ b`` iff some ``<c>`` contains both; brute force over every ``c``."""
    n = G.order
    adj: list[set[int]] = [set() for _ in range(n)]
    for sub in set(G.cyclic_subgroups):
        for a in sub:
            adj[a] |= sub
    for a in range(n):
        adj[a].discard(a)
    return Graph(n, tuple(frozenset(s) for s in adj))


def is_complete(X: Graph) -> bool:
    n = X.vertex_count
    return all(len(nbrs) == n - 1 for nbrs in X.adjacency)


def universal_vertices(X: Graph) -> frozenset[int]:
    n = X.vertex_count
    return frozenset(v for v, nbrs in enumerate(X.adjacency) if len(nbrs) == n - 1)
