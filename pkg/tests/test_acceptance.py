"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict, shown in the pytest terminal
summary.  Run ``python tests/test_acceptance.py`` to print the verdicts
without pytest.
"""

import time
from itertools import combinations

import pytest

from conftest import FIGURE_DOTTED, FIGURE_TO_D6, figure_graph
from powergraph.catalog import default_catalog
from powergraph.graphs import enhanced_power_graph, power_graph, universal_vertices
from powergraph.groups import (
    cyclic_subgroup_poset,
    euler_phi,
    generators_of_cyclic,
    is_cyclic_group,
    is_prime_power,
    make_group,
    parse_spec,
    prime_power_base,
)
from powergraph.reconstruct import difference_graph_from_power, reconstruct_enhanced
from powergraph.twins import NOT_COVERED, check_monotonicity, closed_twins, formula_twin_counts, twin_counts

MAX_ORDER = 48
ORACLE_SECONDS = 10.0
PROPERTY_SECONDS = 30.0

VERDICTS: list[str] = []


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    VERDICTS.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def groups():
    return [(entry, make_group(entry.spec)) for entry in default_catalog(MAX_ORDER)]


def test_1_oracle_equivalence():
    entries = default_catalog(MAX_ORDER)
    start = time.perf_counter()
    discrepancies = {}
    for entry in entries:
        G = make_group(entry.spec)
        Y, _ = reconstruct_enhanced(power_graph(G))
        E = enhanced_power_graph(G)
        bad = Y.difference(E) | E.difference(Y)
        if bad:
            discrepancies[entry.name] = len(bad)
    elapsed = time.perf_counter() - start
    ok = len(entries) >= 40 and not discrepancies and elapsed < ORACLE_SECONDS
    record(1, "oracle equivalence", ok,
           f"{len(entries)} groups, {sum(discrepancies.values())} edge discrepancies, {elapsed:.2f}s")
    assert len(entries) >= 40
    assert discrepancies == {}
    assert elapsed < ORACLE_SECONDS


def test_2_figure_golden():
    X = figure_graph()
    counts = twin_counts(X).counts
    Y, report = reconstruct_enhanced(X)
    added = [(a + 1, b + 1) for a, b in report.added_edges]
    # the figure is the power graph of the dihedral group of order 12
    D6 = power_graph(make_group(parse_spec("dihedral 6")))
    m = FIGURE_TO_D6
    same = D6.edge_set() == {tuple(sorted((m[a], m[b]))) for a, b in X.edges()}
    ok = counts == (1,) * 8 + (2,) * 4 and added == FIGURE_DOTTED and same
    record(2, "figure golden test", ok, f"N = {counts}, added {added}")
    assert counts == (1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2)
    assert added == [(8, 9), (8, 10)]
    assert same


def expected_universal(spec):
    fam, n = spec.family, spec.param
    if fam == "cyclic":
        return n if n == 1 or is_prime_power(n) else 1 + euler_phi(n)
    if fam == "generalized-quaternion":
        return 2
    return 1


def test_3_universal_vertex_classification(groups):
    wrong = {}
    seen_npp = []
    for entry, G in groups:
        u = len(universal_vertices(power_graph(G)))
        if u != expected_universal(entry.spec):
            wrong[entry.name] = u
        if entry.spec.family == "cyclic" and entry.order > 1 and not is_prime_power(entry.order):
            seen_npp.append(entry.order)
    want_npp = [n for n in range(6, MAX_ORDER + 1) if not is_prime_power(n)]
    ok = not wrong and seen_npp == want_npp
    record(3, "universal-vertex classification", ok, f"{len(groups)} groups, mismatches {wrong}")
    assert seen_npp == want_npp
    assert wrong == {}


def test_4_formula_oracle(groups):
    mismatches = {}
    coverage = {}
    for entry, G in groups:
        F = formula_twin_counts(G)
        T = twin_counts(power_graph(G))
        coverage[entry.name] = F.coverage
        bad = [v for v in F.covered() if F[v] != T[v]]
        if bad:
            mismatches[entry.name] = bad
    Q8 = make_group(parse_spec("q 3"))
    FQ = formula_twin_counts(Q8)
    q8_ok = all(FQ[a] is NOT_COVERED for a in range(1, 8)) and FQ[0] == 2
    ok = not mismatches and q8_ok
    partial = ", ".join(f"{k}:{v:.2f}" for k, v in coverage.items() if v < 1)
    record(4, "formula oracle", ok, f"partial coverage {partial}")
    assert mismatches == {}
    assert q8_ok


def test_5_monotonicity(groups):
    checked = 0
    violations = {}
    for entry, G in groups:
        if is_cyclic_group(G):
            continue
        X = power_graph(G)
        bad = check_monotonicity(G, X, twin_counts(X))
        checked += 1
        if bad:
            violations[entry.name] = bad[:3]
    ok = checked > 0 and not violations
    record(5, "monotonicity", ok, f"{checked} non-cyclic groups, violations {violations}")
    assert violations == {}


def test_6_totient_lemma(groups):
    pairs = 0
    failures = []
    for entry, G in groups:
        P = cyclic_subgroup_poset(G)
        for s, t in P.inclusion:
            H, K = P.subgroups[s], P.subgroups[t]
            gh = len(generators_of_cyclic(G, P.representatives[s]))
            gk = len(generators_of_cyclic(G, P.representatives[t]))
            pairs += 1
            if gh > gk or (gh == gk and len(K) not in (len(H), 2 * len(H))):
                failures.append((entry.name, len(H), len(K)))
    ok = not failures
    record(6, "totient lemma", ok, f"{pairs} inclusion pairs, failures {failures[:3]}")
    assert failures == []


def test_7_eppo_difference(groups):
    wrong = []
    n_eppo = 0
    for entry, G in groups:
        eppo = all(d == 1 or is_prime_power(d) for d in G.orders)
        n_eppo += eppo
        empty = difference_graph_from_power(power_graph(G)).graph.vertex_count == 0
        if empty != eppo:
            wrong.append(entry.name)
    ok = not wrong
    record(7, "EPPO / difference graph", ok, f"{n_eppo} EPPO groups of {len(groups)}, mismatches {wrong}")
    assert wrong == []


def test_8_property_suite(groups):
    start = time.perf_counter()
    failures = {}

    def fail(prop, name):
        failures.setdefault(prop, name)

    for entry, G in groups:
        X = power_graph(G)
        T = twin_counts(X)
        twins = [closed_twins(X, v) for v in range(G.order)]
        first = {}
        for a in range(G.order):
            if any(a not in twins[b] for b in twins[a]):
                fail("twin symmetry", entry.name)
            d = G.orders[a]
            if euler_phi(d) > T[a]:
                fail("generator lower bound", entry.name)
            b = first.setdefault(G.cyclic_subgroups[a], a)
            if T[a] != T[b]:
                fail("same-subgroup equality", entry.name)
            p = prime_power_base(d)
            if p is not None and any(
                G.orders[k] > 1 and prime_power_base(G.orders[k]) != p for k in twins[a]
            ):
                fail("prime-power twin restriction", entry.name)
        for sub in set(G.cyclic_subgroups):
            for a, b in combinations(sorted(sub), 2):
                da, db = G.orders[a], G.orders[b]
                if (da % db == 0 or db % da == 0) and not X.has_edge(a, b):
                    fail("divisibility adjacency", entry.name)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < PROPERTY_SECONDS
    record(8, "property suite", ok, f"{len(groups)} groups, {elapsed:.2f}s, failures {failures}")
    assert failures == {}
    assert elapsed < PROPERTY_SECONDS


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
