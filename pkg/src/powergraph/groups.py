"""Finite groups as Cayley tables, family constructors and cyclic-subgroup arithmetic.

Elements are the integers ``0 .. n-1``; element 0 is always the identity for
groups built by :func:`make_group`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "GroupSpec",
    "GroupError",
    "CyclicSubgroupPoset",
    "FAMILIES",
    "make_group",
    "parse_spec",
    "element_order",
    "cyclic_subgroup",
    "generators_of_cyclic",
    "cyclic_subgroup_poset",
    "contains_cyclic",
    "euler_phi",
    "is_prime_power",
    "prime_power_base",
    "is_cyclic_group",
    "is_generalized_quaternion",
]

# above this the exhaustive associativity check gets expensive (n**3 table lookups)
ASSOCIATIVITY_CHECK_LIMIT = 256


class GroupError(ValueError):
    """Invalid group parameters or a table that is not a group."""


# -- number theory ----------------------------------------------------------


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def prime_power_base(n: int) -> int | None:
    """Return ``p`` when ``n == p**k`` with ``k >= 1``, else ``None``.

    ``n == 1`` gives ``None``: the identity is always handled separately.
    """
    if n < 1:
        raise ValueError(f"prime_power_base needs n >= 1, got {n}")
    if n == 1:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def is_prime_power(n: int) -> bool:
    return prime_power_base(n) is not None


# -- the group type ---------------------------------------------------------


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of the product of elements ``i`` and ``j``.
    Construction validates closure, the identity law, the Latin-square
    property and (up to :data:`ASSOCIATIVITY_CHECK_LIMIT` elements)
    associativity.
    """

    table: np.ndarray
    identity: int = 0
    labels: tuple[str, ...] | None = None
    name: str = "G"

    def __post_init__(self) -> None:
        table = _readonly(self.table)
        object.__setattr__(self, "table", table)
        _validate_table(table, self.identity)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != table.shape[0]:
                raise GroupError(f"{len(labels)} labels for a group of order {table.shape[0]}")
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.identity == other.identity and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.identity, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise IndexError(f"element {a} out of range for group of order {self.order}")
        return int(a)

    @cached_property
    def _powers(self) -> tuple[tuple[int, ...], ...]:
        # powers[a] = (a, a^2, ..., e); its length is the order of a
        out = []
        for a in range(self.order):
            seq = [a]
            x = a
            while x != self.identity:
                x = int(self.table[x, a])
                seq.append(x)
            out.append(tuple(seq))
        return tuple(out)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self._powers)

    @cached_property
    def cyclic_subgroups(self) -> tuple[frozenset[int], ...]:
        """``cyclic_subgroups[a]`` is the element set of ``<a>``."""
        return tuple(frozenset(p) for p in self._powers)


def _validate_table(table: np.ndarray, identity: int) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise GroupError(f"table must be a non-empty square array, got shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries must lie in [0, n)")
    if not 0 <= identity < n:
        raise GroupError(f"identity {identity} out of range")
    ar = np.arange(n)
    if not (np.array_equal(table[identity], ar) and np.array_equal(table[:, identity], ar)):
        raise GroupError(f"element {identity} is not a two-sided identity")
    expected = ar
    rows_ok = np.all(np.sort(table, axis=1) == expected, axis=1)
    if not rows_ok.all():
        raise GroupError(f"row {int(np.argmin(rows_ok))} is not a permutation")
    cols_ok = np.all(np.sort(table, axis=0) == expected[:, None], axis=0)
    if not cols_ok.all():
        raise GroupError(f"column {int(np.argmin(cols_ok))} is not a permutation")
    if n <= ASSOCIATIVITY_CHECK_LIMIT:
        # (ij)k vs i(jk) for all triples
        left = table[table]  # left[i, j, k] = table[table[i, j], k]
        right = table[:, table]  # right[i, j, k] = table[i, table[j, k]]
        bad = np.argwhere(left != right)
        if bad.size:
            i, j, k = (int(x) for x in bad[0])
            raise GroupError(f"not associative at ({i}, {j}, {k})")


# -- element arithmetic -----------------------------------------------------


def element_order(G: FiniteGroup, a: int) -> int:
    d = G.orders[G._check(a)]
    assert G.order % d == 0, "element order must divide the group order"
    return d


def cyclic_subgroup(G: FiniteGroup, a: int) -> frozenset[int]:
    return G.cyclic_subgroups[G._check(a)]


def generators_of_cyclic(G: FiniteGroup, a: int) -> frozenset[int]:
    """Elements ``b`` of ``<a>`` with ``<b> == <a>``."""
    a = G._check(a)
    d = G.orders[a]
    powers = G._powers[a]  # powers[k-1] == a^k
    return frozenset(powers[k - 1] for k in range(1, d + 1) if math.gcd(k, d) == 1)


def contains_cyclic(G: FiniteGroup, a: int, b: int, *, method: str = "membership") -> bool:
    """Test ``<a> ⊆ <b>``.

    ``"membership"`` uses divisibility of orders plus ``a in <b>``;
    ``"sets"`` compares the full element sets.
    """
    if method == "membership":
        return G.orders[b] % G.orders[a] == 0 and a in G.cyclic_subgroups[b]
    if method == "sets":
        return G.cyclic_subgroups[a] <= G.cyclic_subgroups[b]
    raise ValueError(f"unknown method {method!r}")


def is_cyclic_group(G: FiniteGroup) -> bool:
    return G.order in G.orders


def is_generalized_quaternion(G: FiniteGroup) -> bool:
    """Structural test: order ``2**k``, non-cyclic, exactly one involution."""
    n = G.order
    if n < 8 or n & (n - 1):
        return False
    return not is_cyclic_group(G) and G.orders.count(2) == 1


@dataclass(frozen=True)
class CyclicSubgroupPoset:
    subgroups: tuple[frozenset[int], ...]
    representatives: tuple[int, ...]
    inclusion: frozenset[tuple[int, int]]
    # subgroup index of <a> for every element a
    index_of: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def orders(self) -> list[int]:
        return [len(s) for s in self.subgroups]

    def contains(self, s: int, t: int) -> bool:
        """Subgroup ``s`` is contained in subgroup ``t`` (not necessarily properly)."""
        return s == t or (s, t) in self.inclusion


def cyclic_subgroup_poset(G: FiniteGroup) -> CyclicSubgroupPoset:
    unique = {}
    for a, sub in enumerate(G.cyclic_subgroups):
        unique.setdefault(sub, a)  # smallest generating index wins
    subs = sorted(unique, key=lambda s: (len(s), sorted(s)))
    pos = {s: i for i, s in enumerate(subs)}
    inclusion = frozenset(
        (i, j)
        for i, s in enumerate(subs)
        for j, t in enumerate(subs)
        if len(s) < len(t) and s < t
    )
    return CyclicSubgroupPoset(
        subgroups=tuple(subs),
        representatives=tuple(unique[s] for s in subs),
        inclusion=inclusion,
        index_of=tuple(pos[s] for s in G.cyclic_subgroups),
    )


# -- constructors -----------------------------------------------------------

FAMILIES = {
    "cyclic": "cyclic",
    "c": "cyclic",
    "z": "cyclic",
    "dihedral": "dihedral",
    "d": "dihedral",
    "generalized-quaternion": "generalized-quaternion",
    "quaternion": "generalized-quaternion",
    "q": "generalized-quaternion",
    "symmetric": "symmetric",
    "s": "symmetric",
    "direct-product": "direct-product",
    "product": "direct-product",
    "external-table": "external-table",
    "table": "external-table",
}


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of a group.

    ``param`` is the family integer: ``n`` for ``cyclic(n)`` (order n),
    ``dihedral(n)`` (order 2n), ``symmetric(n)`` (order n!) and the exponent
    for ``generalized-quaternion(n)`` (order 2**n).  Direct products use
    ``factors``; external tables use ``path``.
    """

    family: str
    param: int | None = None
    factors: tuple[GroupSpec, ...] = ()
    path: str | None = None

    def __post_init__(self) -> None:
        family = FAMILIES.get(self.family.lower())
        if family is None:
            raise GroupError(f"unknown group family {self.family!r}")
        object.__setattr__(self, "family", family)
        if family in ("cyclic", "dihedral", "symmetric"):
            if self.param is None or self.param < 1:
                raise GroupError(f"{family} needs n >= 1, got {self.param}")
        elif family == "generalized-quaternion":
            if self.param is None or self.param < 3:
                raise GroupError(f"generalized-quaternion needs exponent n >= 3, got {self.param}")
        elif family == "direct-product":
            if not self.factors:
                raise GroupError("direct-product needs at least one factor")
            object.__setattr__(self, "factors", tuple(self.factors))
        elif family == "external-table" and not self.path:
            raise GroupError("external-table needs a file path")

    @property
    def name(self) -> str:
        if self.family == "cyclic":
            return f"C{self.param}"
        if self.family == "dihedral":
            return f"D{self.param}"
        if self.family == "generalized-quaternion":
            return f"Q{2 ** self.param}"
        if self.family == "symmetric":
            return f"S{self.param}"
        if self.family == "direct-product":
            return "x".join(f.name for f in self.factors)
        return f"table:{self.path}"

    @property
    def order(self) -> int | None:
        """Order implied by the parameters (``None`` for external tables)."""
        if self.family == "cyclic":
            return self.param
        if self.family == "dihedral":
            return 2 * self.param
        if self.family == "generalized-quaternion":
            return 2**self.param
        if self.family == "symmetric":
            return math.factorial(self.param)
        if self.family == "direct-product":
            orders = [f.order for f in self.factors]
            return None if None in orders else math.prod(orders)
        return None


def parse_spec(tokens: str | Sequence[str]) -> GroupSpec:
    """Parse ``"cyclic 6"``, ``"q 3"``, ``"product cyclic:2 cyclic:4"`` or ``"table PATH"``.

    Factors of a product are written ``family:n``.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    tokens = list(tokens)
    if not tokens:
        raise GroupError("empty group spec")
    head, rest = tokens[0], tokens[1:]
    if ":" in head and not rest:
        head, _, arg = head.partition(":")
        rest = [arg]
    family = FAMILIES.get(head.lower())
    if family is None:
        raise GroupError(f"unknown group family {head!r}")
    if family == "direct-product":
        return GroupSpec(family, factors=tuple(parse_spec(t) for t in rest))
    if family == "external-table":
        if len(rest) != 1:
            raise GroupError("external-table takes exactly one path")
        return GroupSpec(family, path=rest[0])
    if len(rest) != 1:
        raise GroupError(f"{family} takes exactly one integer parameter")
    try:
        n = int(rest[0])
    except ValueError:
        raise GroupError(f"{family} parameter must be an integer, got {rest[0]!r}") from None
    return GroupSpec(family, n)


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _cyclic(n: int) -> FiniteGroup:
    ar = np.arange(n)
    table = (ar[:, None] + ar[None, :]) % n
    labels = ["e"] + [_power_label("a", k) for k in range(1, n)]
    return FiniteGroup(table, labels=tuple(labels), name=f"C{n}")


def _dihedral(n: int) -> FiniteGroup:
    # index i + n*j  <->  r^i s^j,  s r = r^-1 s
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        i, a = x % n, x // n
        for y in range(size):
            j, b = y % n, y // n
            rot = (i + (j if a == 0 else -j)) % n
            table[x, y] = rot + n * ((a + b) % 2)
    labels = []
    for x in range(size):
        i, a = x % n, x // n
        word = _power_label("r", i) + ("s" if a else "")
        labels.append(word or "e")
    return FiniteGroup(table, labels=tuple(labels), name=f"D{n}")


def _dicyclic(exponent: int) -> FiniteGroup:
    # <x, y | x^m = e, y^2 = x^(m/2), y^-1 x y = x^-1>,  m = 2^(exponent-1)
    m = 2 ** (exponent - 1)
    half = m // 2
    size = 2 * m
    table = np.empty((size, size), dtype=np.int64)
    for u in range(size):
        i, a = u % m, u // m
        for v in range(size):
            j, b = v % m, v // m
            if a == 0:
                table[u, v] = (i + j) % m + m * b
            elif b == 0:
                table[u, v] = (i - j) % m + m
            else:
                table[u, v] = (i - j + half) % m
    labels = []
    for u in range(size):
        i, a = u % m, u // m
        word = _power_label("x", i) + ("y" if a else "")
        labels.append(word or "e")
    return FiniteGroup(table, labels=tuple(labels), name=f"Q{size}")


def _symmetric(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))  # identity first
    index = {p: k for k, p in enumerate(perms)}
    size = len(perms)
    table = np.empty((size, size), dtype=np.int64)
    for x, p in enumerate(perms):
        for y, q in enumerate(perms):
            # (p*q)(i) = p(q(i))
            table[x, y] = index[tuple(p[q[i]] for i in range(n))]
    labels = tuple(_cycle_notation(p) for p in perms)
    return FiniteGroup(table, labels=labels, name=f"S{n}")


def _cycle_notation(p: tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + ",".join(cyc) + ")")
    return "".join(cycles) or "e"


def direct_product(groups: Sequence[FiniteGroup], name: str | None = None) -> FiniteGroup:
    """Direct product; element ``(g_1, ..., g_k)`` is indexed in row-major order."""
    if not groups:
        raise GroupError("direct product needs at least one factor")
    sizes = [g.order for g in groups]
    n = math.prod(sizes)
    coords = np.array(list(np.ndindex(*sizes)), dtype=np.int64).reshape(n, len(groups))
    comps = [
        g.table[np.ix_(coords[:, k], coords[:, k])] for k, g in enumerate(groups)
    ]
    table = np.ravel_multi_index(tuple(comps), sizes)
    labels = tuple(
        "(" + ",".join(g.label(int(c)) for g, c in zip(groups, row)) + ")" for row in coords
    )
    identity = int(np.ravel_multi_index(tuple(g.identity for g in groups), sizes))
    if identity != 0:
        raise GroupError("direct product factors must have identity 0")
    return FiniteGroup(table, labels=labels, name=name or "x".join(g.name for g in groups))


def make_group(spec: GroupSpec) -> FiniteGroup:
    if spec.family == "cyclic":
        return _cyclic(spec.param)
    if spec.family == "dihedral":
        return _dihedral(spec.param)
    if spec.family == "generalized-quaternion":
        return _dicyclic(spec.param)
    if spec.family == "symmetric":
        return _symmetric(spec.param)
    if spec.family == "direct-product":
        return direct_product([make_group(f) for f in spec.factors], name=spec.name)
    if spec.family == "external-table":
        from .io import read_cayley_csv

        return read_cayley_csv(spec.path)
    raise GroupError(f"unsupported family {spec.family!r}")
