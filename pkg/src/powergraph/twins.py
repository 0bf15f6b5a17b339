"""Closed twins and the twin-counting function of a graph.

``N_v`` is one more than the number of closed twins of ``v``.  The
graph-only computation (:func:`twin_counts`) is what reconstruction uses;
:func:`formula_twin_counts` evaluates the closed-form values from the group
itself and serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph
from .groups import (
    FiniteGroup,
    cyclic_subgroup_poset,
    euler_phi,
    is_cyclic_group,
    is_generalized_quaternion,
    is_prime_power,
)

__all__ = [
    "TwinCounts",
    "FormulaCounts",
    "NOT_COVERED",
    "closed_twins",
    "twin_counts",
    "formula_twin_counts",
    "check_monotonicity",
]

# formula value for vertices the closed form does not determine
NOT_COVERED = None


@dataclass(frozen=True)
class TwinCounts:
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.counts)
        if any(not 1 <= c <= n for c in self.counts):
            raise ValueError("twin counts must lie in [1, n]")

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


@dataclass(frozen=True)
class FormulaCounts:
    """Closed-form twin counts; entries are ``NOT_COVERED`` where no formula applies."""

    counts: tuple[int | None, ...]

    def __getitem__(self, v: int) -> int | None:
        return self.counts[v]

    def __len__(self) -> int:
        return len(self.counts)

    def covered(self) -> list[int]:
        return [v for v, c in enumerate(self.counts) if c is not NOT_COVERED]

    @property
    def coverage(self) -> float:
        return len(self.covered()) / len(self.counts) if self.counts else 1.0


def closed_twins(X: Graph, a: int) -> frozenset[int]:
    if not 0 <= a < X.vertex_count:
        raise IndexError(f"vertex {a} out of range")
    na = X.adjacency[a]
    return frozenset(b for b in na if na - {b} == X.adjacency[b] - {a})


def twin_counts(X: Graph) -> TwinCounts:
    return TwinCounts(tuple(len(closed_twins(X, v)) + 1 for v in range(X.vertex_count)))


def formula_twin_counts(G: FiniteGroup) -> FormulaCounts:
    n = G.order
    orders = G.orders
    e = G.identity

    if is_cyclic_group(G):
        if n == 1 or is_prime_power(n):
            return FormulaCounts((n,) * n)
        top = euler_phi(n) + 1
        return FormulaCounts(tuple(top if d in (1, n) else euler_phi(d) for d in orders))

    # elements lying properly inside a cyclic subgroup of non-prime-power order
    inside_npp: set[int] = set()
    for sub, d in zip(G.cyclic_subgroups, orders):
        if d > 1 and not is_prime_power(d):
            inside_npp |= {a for a in sub if orders[a] < d}

    counts: list[int | None] = []
    for a, d in enumerate(orders):
        if a == e:
            counts.append(2 if is_generalized_quaternion(G) else 1)
        elif not is_prime_power(d) or a in inside_npp:
            counts.append(euler_phi(d))
        else:
            counts.append(NOT_COVERED)
    return FormulaCounts(tuple(counts))


def check_monotonicity(
    G: FiniteGroup, X: Graph, T: TwinCounts | Sequence[int]
) -> list[tuple[int, int]]:
    """Pairs ``(h, k)`` with ``<h> ⊆ <k>`` but ``N_h > N_k``.

    Only meaningful for non-cyclic groups; a cyclic ``G`` raises ``ValueError``.
    """
    if is_cyclic_group(G):
        raise ValueError("monotonicity is only asserted for non-cyclic groups")
    if X.vertex_count != G.order or len(T) != G.order:
        raise ValueError("graph and counts must match the group order")
    poset = cyclic_subgroup_poset(G)
    idx = poset.index_of
    violations = []
    for h in range(G.order):
        for k in range(G.order):
            if poset.contains(idx[h], idx[k]) and T[h] > T[k]:
                violations.append((h, k))
    return violations
