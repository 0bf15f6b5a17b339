"""End-to-end invariant checks over catalog groups.

Every check returns ``None`` on success or a message naming the first
counterexample.  :func:`verify_entry` runs the whole pipeline for one group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .catalog import CatalogEntry
from .graphs import Graph, enhanced_power_graph, is_complete, power_graph, universal_vertices
from .groups import (
    FiniteGroup,
    CyclicSubgroupPoset,
    cyclic_subgroup_poset,
    contains_cyclic,
    euler_phi,
    generators_of_cyclic,
    is_cyclic_group,
    is_generalized_quaternion,
    is_prime_power,
    make_group,
    prime_power_base,
)
from .reconstruct import difference_graph_from_power, reconstruct_enhanced, ReconstructionReport
from .twins import (
    FormulaCounts,
    TwinCounts,
    check_monotonicity,
    closed_twins,
    formula_twin_counts,
    twin_counts,
)

__all__ = ["Pipeline", "GroupResult", "build_pipeline", "verify_entry", "CHECKS"]


@dataclass
class Pipeline:
    """All artifacts computed for one group."""

    entry: CatalogEntry | None
    group: FiniteGroup
    poset: CyclicSubgroupPoset
    power: Graph
    enhanced: Graph
    twins: TwinCounts
    formula: FormulaCounts
    reconstructed: Graph
    report: ReconstructionReport


def build_pipeline(G: FiniteGroup, entry: CatalogEntry | None = None) -> Pipeline:
    X = power_graph(G)
    Y, report = reconstruct_enhanced(X)
    return Pipeline(
        entry,
        G,
        cyclic_subgroup_poset(G),
        X,
        enhanced_power_graph(G),
        twin_counts(X),
        formula_twin_counts(G),
        Y,
        report,
    )


def is_eppo(G: FiniteGroup) -> bool:
    return all(d == 1 or is_prime_power(d) for d in G.orders)


# -- group core ---------------------------------------------------------------


def check_generator_counts(p: Pipeline) -> str | None:
    G = p.group
    for a in range(G.order):
        got = len(generators_of_cyclic(G, a))
        if got != euler_phi(G.orders[a]):
            return f"|gen(<{a}>)| = {got}, phi({G.orders[a]}) = {euler_phi(G.orders[a])}"
    return None


def check_lagrange(p: Pipeline) -> str | None:
    G = p.group
    for a, d in enumerate(G.orders):
        if G.order % d:
            return f"order {d} of element {a} does not divide {G.order}"
    return None


def check_totient(p: Pipeline) -> str | None:
    sizes = p.poset.orders()
    for s, t in sorted(p.poset.inclusion):
        h, k = sizes[s], sizes[t]
        if euler_phi(h) > euler_phi(k):
            return f"phi({h}) > phi({k}) for nested subgroups {s} < {t}"
        if euler_phi(h) == euler_phi(k) and k not in (h, 2 * h):
            return f"phi({h}) == phi({k}) but {k} is neither {h} nor {2 * h}"
    return None


def check_poset(p: Pipeline) -> str | None:
    G, P = p.group, p.poset
    if len(set(P.subgroups)) != len(P.subgroups):
        return "duplicate subgroups in poset"
    for s, (sub, rep) in enumerate(zip(P.subgroups, P.representatives)):
        if G.cyclic_subgroups[rep] != sub:
            return f"subgroup {s} is not generated by its representative {rep}"
    trivial = P.index_of[G.identity]
    for t in range(len(P)):
        if t != trivial and (trivial, t) not in P.inclusion:
            return f"trivial subgroup not below subgroup {t}"
    for s, t in P.inclusion:
        if s == t or (t, s) in P.inclusion:
            return f"inclusion not strict at ({s}, {t})"
        for u in range(len(P)):
            if (t, u) in P.inclusion and (s, u) not in P.inclusion:
                return f"inclusion not transitive at ({s}, {t}, {u})"
    return None


def check_containment_methods(p: Pipeline) -> str | None:
    G = p.group
    for a in range(G.order):
        for b in range(G.order):
            if contains_cyclic(G, a, b) != contains_cyclic(G, a, b, method="sets"):
                return f"containment methods disagree on ({a}, {b})"
    return None


def check_product_orders(p: Pipeline) -> str | None:
    spec = p.entry.spec if p.entry else None
    if spec is None or spec.family != "direct-product":
        return None
    factors = [make_group(f) for f in spec.factors]
    sizes = [f.order for f in factors]
    for a in range(p.group.order):
        coords = []
        rest = a
        for m in reversed(sizes):
            coords.append(rest % m)
            rest //= m
        coords.reverse()
        expected = math.lcm(*(f.orders[c] for f, c in zip(factors, coords)))
        if p.group.orders[a] != expected:
            return f"element {a}: order {p.group.orders[a]}, lcm of components {expected}"
    return None


# -- graph core -----------------------------------------------------------------


def check_power_in_enhanced(p: Pipeline) -> str | None:
    missing = p.power.difference(p.enhanced)
    return f"power edge {min(missing)} missing from enhanced graph" if missing else None


def check_identity_universal(p: Pipeline) -> str | None:
    e = p.group.identity
    for name, X in (("power", p.power), ("enhanced", p.enhanced)):
        if e not in universal_vertices(X):
            return f"identity not universal in {name} graph"
    return None


def check_divisibility_adjacency(p: Pipeline) -> str | None:
    G, X = p.group, p.power
    for sub in set(G.cyclic_subgroups):
        for a, b in combinations(sorted(sub), 2):
            da, db = G.orders[a], G.orders[b]
            if (db % da == 0 or da % db == 0) and not X.has_edge(a, b):
                return f"{a}, {b} in a common cyclic subgroup with dividing orders but not adjacent"
    return None


def check_power_graph_methods(p: Pipeline) -> str | None:
    if power_graph(p.group, method="sets") != p.power:
        return "power graph differs between containment methods"
    return None


def check_universal_count(p: Pipeline) -> str | None:
    G, X = p.group, p.power
    u = len(universal_vertices(X))
    n = G.order
    cyclic = is_cyclic_group(G)
    if cyclic and (n == 1 or is_prime_power(n)):
        expected = n
    elif cyclic:
        expected = 1 + euler_phi(n)
    elif is_generalized_quaternion(G):
        expected = 2
    else:
        expected = 1
    if u != expected:
        return f"|U| = {u}, expected {expected}"
    if p.entry is not None and p.entry.expected_universal not in (None, u):
        return f"|U| = {u}, catalog says {p.entry.expected_universal}"
    if not is_complete(X) and u == 1 and cyclic:
        return "incomplete power graph with |U| = 1 from a cyclic group"
    return None


def check_catalog_flags(p: Pipeline) -> str | None:
    e, G = p.entry, p.group
    if e is None:
        return None
    if e.order is not None and e.order != G.order:
        return f"constructed order {G.order}, catalog says {e.order}"
    for flag, actual in (
        ("cyclic", is_cyclic_group(G)),
        ("eppo", is_eppo(G)),
        ("generalized_quaternion", is_generalized_quaternion(G)),
    ):
        want = getattr(e, flag)
        if want is not None and want != actual:
            return f"catalog flag {flag}={want} but the table gives {actual}"
    return None


# -- twin analysis --------------------------------------------------------------


def check_twin_symmetry(p: Pipeline) -> str | None:
    X = p.power
    twins = [closed_twins(X, v) for v in range(X.vertex_count)]
    for a, tw in enumerate(twins):
        for b in tw:
            if a not in twins[b]:
                return f"{b} is a closed twin of {a} but not conversely"
    return None


def check_generator_lower_bound(p: Pipeline) -> str | None:
    G, T = p.group, p.twins
    for a in range(G.order):
        if euler_phi(G.orders[a]) > T[a]:
            return f"phi({G.orders[a]}) > N_{a} = {T[a]}"
    return None


def check_same_subgroup_equal(p: Pipeline) -> str | None:
    G, T = p.group, p.twins
    first: dict[frozenset[int], int] = {}
    for a, sub in enumerate(G.cyclic_subgroups):
        b = first.setdefault(sub, a)
        if T[a] != T[b]:
            return f"<{a}> == <{b}> but N differs ({T[a]} vs {T[b]})"
    return None


def check_formula_agreement(p: Pipeline) -> str | None:
    for v in p.formula.covered():
        if p.formula[v] != p.twins[v]:
            return f"vertex {v}: formula {p.formula[v]}, graph {p.twins[v]}"
    return None


def check_non_prime_power_exact(p: Pipeline) -> str | None:
    G, T = p.group, p.twins
    if is_cyclic_group(G):
        return None
    for a, d in enumerate(G.orders):
        if d > 1 and not is_prime_power(d) and T[a] != euler_phi(d):
            return f"element {a} of order {d}: N = {T[a]}, phi = {euler_phi(d)}"
    return None


def check_universal_twin_count(p: Pipeline) -> str | None:
    U = universal_vertices(p.power)
    for u in U:
        if p.twins[u] != len(U):
            return f"universal vertex {u}: N = {p.twins[u]}, |U| = {len(U)}"
    return None


def check_prime_power_twins(p: Pipeline) -> str | None:
    G = p.group
    for h, d in enumerate(G.orders):
        base = prime_power_base(d)
        if base is None:
            continue
        for k in closed_twins(p.power, h):
            dk = G.orders[k]
            if dk != 1 and prime_power_base(dk) != base:
                return f"twin {k} (order {dk}) of {h} (order {d}) is not a {base}-power"
    return None


def check_monotonic(p: Pipeline) -> str | None:
    if is_cyclic_group(p.group):
        return None
    bad = check_monotonicity(p.group, p.power, p.twins)
    if bad:
        h, k = bad[0]
        return f"<{h}> in <{k}> but N_{h} = {p.twins[h]} > N_{k} = {p.twins[k]}"
    return None


# -- reconstruction ---------------------------------------------------------------


def check_oracle_equivalence(p: Pipeline) -> str | None:
    if p.reconstructed == p.enhanced:
        return None
    extra = p.reconstructed.difference(p.enhanced)
    missing = p.enhanced.difference(p.reconstructed)
    pair = min(extra | missing)
    side = "spurious" if pair in extra else "missing"
    return f"{side} edge {pair}; {len(extra)} spurious, {len(missing)} missing"


def check_report(p: Pipeline) -> str | None:
    r, X = p.report, p.power
    added = set(r.added_edges)
    if added & X.edge_set():
        return "report adds an edge already in the input"
    if r.output.edge_set() != X.edge_set() | added:
        return "output edges != input edges + added edges"
    if not X.is_subgraph_of(p.reconstructed):
        return "reconstruction dropped an input edge"
    return None


def check_witnesses(p: Pipeline) -> str | None:
    r, X = p.report, p.power
    if r.twin_counts is None:
        return None
    T = r.twin_counts
    for (a, b), c in r.witnesses.items():
        if not (X.has_edge(a, c) and X.has_edge(b, c)):
            return f"witness {c} of ({a}, {b}) is not a common neighbour"
        need = T[a] + 1 if T[a] == T[b] else max(T[a], T[b])
        if T[c] < need:
            return f"witness {c} of ({a}, {b}) has N = {T[c]} < {need}"
    return None


def check_difference(p: Pipeline) -> str | None:
    diff = difference_graph_from_power(p.power)
    expected = p.enhanced.difference(p.power)
    got = {(diff.vertices[a], diff.vertices[b]) for a, b in diff.graph.edges()}
    if got != expected:
        return f"difference graph has {len(got)} edges, expected {len(expected)}"
    if any(diff.graph.degree(v) == 0 for v in range(diff.graph.vertex_count)):
        return "difference graph keeps an isolated vertex"
    if (diff.graph.vertex_count == 0) != is_eppo(p.group):
        return f"difference graph empty={diff.graph.vertex_count == 0}, EPPO={is_eppo(p.group)}"
    return None


CHECKS: dict[str, Callable[[Pipeline], str | None]] = {
    "generator-counts": check_generator_counts,
    "lagrange": check_lagrange,
    "totient-lemma": check_totient,
    "poset": check_poset,
    "containment-methods": check_containment_methods,
    "product-orders": check_product_orders,
    "power-in-enhanced": check_power_in_enhanced,
    "identity-universal": check_identity_universal,
    "divisibility-adjacency": check_divisibility_adjacency,
    "power-graph-methods": check_power_graph_methods,
    "universal-count": check_universal_count,
    "catalog-flags": check_catalog_flags,
    "twin-symmetry": check_twin_symmetry,
    "generator-lower-bound": check_generator_lower_bound,
    "same-subgroup-equality": check_same_subgroup_equal,
    "formula-agreement": check_formula_agreement,
    "non-prime-power-exact": check_non_prime_power_exact,
    "universal-twin-count": check_universal_twin_count,
    "prime-power-twins": check_prime_power_twins,
    "monotonicity": check_monotonic,
    "oracle-equivalence": check_oracle_equivalence,
    "report-consistency": check_report,
    "witnesses": check_witnesses,
    "difference-graph": check_difference,
}


@dataclass
class GroupResult:
    name: str
    order: int
    failures: dict[str, str] = field(default_factory=dict)
    coverage: float = 1.0
    identity_twins: int = 1
    added_edges: int = 0
    input_class: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_entry(entry: CatalogEntry) -> GroupResult:
    G = make_group(entry.spec)
    p = build_pipeline(G, entry)
    result = GroupResult(
        entry.name,
        G.order,
        coverage=p.formula.coverage,
        identity_twins=p.twins[G.identity],
        added_edges=len(p.report.added_edges),
        input_class=p.report.input_class,
    )
    for name, check in CHECKS.items():
        msg = check(p)
        if msg is not None:
            result.failures[name] = msg
    return result
