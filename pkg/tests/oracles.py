"""Brute-force reference computations, written directly from the definitions.

Nothing here imports the library's arithmetic; only the raw Cayley table is used.
"""

import math
from itertools import combinations


def phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def prime_power(n):
    """``(True, p)`` when n = p^k, k >= 1; ``(False, None)`` otherwise."""
    if n < 2:
        return False, None
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    return (True, primes[0]) if len(primes) == 1 else (False, None)


def order(table, a, e=0):
    x, d = a, 1
    while x != e:
        x = int(table[x][a])
        d += 1
    return d


def powers(table, a, e=0):
    out = {e}
    x = a
    while x != e:
        out.add(x)
        x = int(table[x][a])
    return out


def power_adjacent(table, a, b):
    """One of a, b is a power of the other."""
    return a in powers(table, b) or b in powers(table, a)


def power_edges(table):
    n = len(table)
    return {(a, b) for a, b in combinations(range(n), 2) if power_adjacent(table, a, b)}


def enhanced_edges(table):
    n = len(table)
    subs = [powers(table, c) for c in range(n)]
    return {
        (a, b) for a, b in combinations(range(n), 2) if any(a in s and b in s for s in subs)
    }


def neighbourhoods(n, edges):
    nb = [set() for _ in range(n)]
    for a, b in edges:
        nb[a].add(b)
        nb[b].add(a)
    return nb


def closed_twin_set(n, edges, a):
    nb = neighbourhoods(n, edges)
    return {b for b in nb[a] if nb[a] - {b} == nb[b] - {a}}


def twin_numbers(n, edges):
    nb = neighbourhoods(n, edges)
    return [1 + sum(1 for b in nb[a] if nb[a] - {b} == nb[b] - {a}) for a in range(n)]
