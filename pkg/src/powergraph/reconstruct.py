"""Build the enhanced power graph and the difference graph from a power graph alone.

Nothing here looks at a group.  The input is assumed to be the power graph
of some finite group; on other graphs the procedure still runs and returns
*a* graph, but the result means nothing (see ``ReconstructionReport.certified``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .graphs import Graph, is_complete, universal_vertices
from .twins import TwinCounts, twin_counts

__all__ = [
    "COMPLETE",
    "CYCLIC_NON_PRIME_POWER",
    "NON_CYCLIC",
    "ReconstructionReport",
    "DifferenceGraph",
    "classify_input",
    "find_witness",
    "decide_pair",
    "reconstruct_enhanced",
    "difference_graph_from_power",
]

COMPLETE = "complete"
CYCLIC_NON_PRIME_POWER = "cyclic-non-prime-power"
NON_CYCLIC = "non-cyclic"


@dataclass(frozen=True)
class ReconstructionReport:
    input_class: str
    universal_count: int
    added_edges: tuple[tuple[int, int], ...]
    output: Graph
    # first witness vertex found for each added edge (non-cyclic inputs only)
    witnesses: dict[tuple[int, int], int] = field(default_factory=dict)
    twin_counts: TwinCounts | None = None
    # the input is never checked to be a genuine power graph
    certified: bool = False


class DifferenceGraph(NamedTuple):
    graph: Graph
    # original vertex index of each surviving vertex
    vertices: tuple[int, ...]


def classify_input(X: Graph) -> str:
    if is_complete(X):
        return COMPLETE
    if len(universal_vertices(X)) > 2:
        return CYCLIC_NON_PRIME_POWER
    return NON_CYCLIC


def find_witness(X: Graph, T: TwinCounts, a: int, b: int) -> int | None:
    """Smallest common neighbour ``c`` certifying ``a ~ b`` in the enhanced graph.

    With ``N_a == N_b == k`` the witness needs ``N_c > k``; otherwise
    ``N_c >= max(N_a, N_b)``.
    """
    if a == b:
        raise ValueError("a and b must be distinct")
    if X.has_edge(a, b):
        raise ValueError(f"{a} and {b} are already adjacent")
    na, nb = T[a], T[b]
    threshold = na + 1 if na == nb else max(na, nb)
    for c in sorted(X.adjacency[a] & X.adjacency[b]):
        if T[c] >= threshold:
            return c
    return None


def decide_pair(X: Graph, T: TwinCounts, a: int, b: int) -> bool:
    return find_witness(X, T, a, b) is not None


def reconstruct_enhanced(X: Graph) -> tuple[Graph, ReconstructionReport]:
    n = X.vertex_count
    kind = classify_input(X)
    n_universal = len(universal_vertices(X))

    if kind == COMPLETE:
        return X, ReconstructionReport(kind, n_universal, (), X)

    if kind == CYCLIC_NON_PRIME_POWER:
        Y = Graph.complete(n)
        added = tuple(X.iter_non_edges())
        return Y, ReconstructionReport(kind, n_universal, added, Y)

    T = twin_counts(X)
    witnesses = {}
    for a, b in X.iter_non_edges():
        c = find_witness(X, T, a, b)
        if c is not None:
            witnesses[(a, b)] = c
    added = tuple(sorted(witnesses))
    Y = X.union(added)
    return Y, ReconstructionReport(kind, n_universal, added, Y, witnesses, T)


def difference_graph_from_power(X: Graph) -> DifferenceGraph:
    """Added edges of the reconstruction, with isolated vertices dropped."""
    _, report = reconstruct_enhanced(X)
    kept = sorted({v for edge in report.added_edges for v in edge})
    new_index = {v: i for i, v in enumerate(kept)}
    edges = [(new_index[a], new_index[b]) for a, b in report.added_edges]
    return DifferenceGraph(Graph.from_edges(len(kept), edges), tuple(kept))
