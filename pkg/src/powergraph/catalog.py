"""The default catalog of test groups and their expected properties.

Expected flags are derived from the family parameters alone, never from the
constructed tables, so they can serve as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .groups import FAMILIES, GroupSpec, euler_phi, is_prime_power, prime_power_base

__all__ = ["CatalogEntry", "known_properties", "default_catalog", "DEFAULT_MAX_ORDER"]

DEFAULT_MAX_ORDER = 48

_PRODUCTS = [(2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 3)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: GroupSpec
    order: int
    cyclic: bool | None
    eppo: bool | None
    generalized_quaternion: bool | None
    # |U(P(G))|, when derivable from the parameters
    expected_universal: int | None


def _cyclic_universal(n: int) -> int:
    return n if n == 1 or is_prime_power(n) else 1 + euler_phi(n)


def _cyclic_factor_orders(spec: GroupSpec) -> list[int] | None:
    if spec.family == "cyclic":
        return [spec.param]
    if spec.family == "direct-product":
        out: list[int] = []
        for f in spec.factors:
            sub = _cyclic_factor_orders(f)
            if sub is None:
                return None
            out.extend(sub)
        return out
    return None


def known_properties(spec: GroupSpec) -> tuple[bool | None, bool | None, bool | None, int | None]:
    """``(cyclic, eppo, generalized_quaternion, expected |U|)`` from parameters; ``None`` = unknown."""
    fam, n = spec.family, spec.param
    if fam == "cyclic":
        return True, n == 1 or is_prime_power(n), False, _cyclic_universal(n)
    if fam == "dihedral":
        if n <= 1:
            return True, True, False, 2
        return False, is_prime_power(n), False, 1
    if fam == "generalized-quaternion":
        return False, True, True, 2
    if fam == "symmetric":
        if n <= 2:
            order = math.factorial(n)
            return True, True, False, order
        return False, n <= 4, False, 1
    if fam == "direct-product":
        orders = _cyclic_factor_orders(spec)
        if orders is None:
            return None, None, None, None
        orders = [m for m in orders if m > 1]
        cyclic = all(math.gcd(a, b) == 1 for a, b in combinations(orders, 2))
        bases = {prime_power_base(m) for m in orders}
        eppo = len(bases) <= 1 and None not in bases
        total = math.prod(orders)
        universal = _cyclic_universal(total) if cyclic else 1
        # a non-cyclic abelian group is never generalized quaternion
        return cyclic, eppo, False, universal
    return None, None, None, None


def _entry(spec: GroupSpec) -> CatalogEntry:
    cyclic, eppo, gq, u = known_properties(spec)
    return CatalogEntry(spec.name, spec, spec.order, cyclic, eppo, gq, u)


def default_catalog(
    max_order: int = DEFAULT_MAX_ORDER, families: Iterable[str] | None = None
) -> list[CatalogEntry]:
    """Catalog entries of order at most ``max_order``, optionally restricted by family."""
    specs: list[GroupSpec] = []
    specs += [GroupSpec("cyclic", n) for n in range(1, max_order + 1)]
    # dihedral(1), dihedral(2) duplicate C2 and C2xC2
    specs += [GroupSpec("dihedral", n) for n in range(3, max_order // 2 + 1)]
    specs += [GroupSpec("generalized-quaternion", k) for k in range(3, max_order.bit_length())]
    specs += [GroupSpec("symmetric", n) for n in (3, 4, 5) if math.factorial(n) <= max_order]
    specs += [
        GroupSpec("direct-product", factors=tuple(GroupSpec("cyclic", m) for m in ms))
        for ms in _PRODUCTS
    ]
    wanted = None
    if families is not None:
        wanted = set()
        for f in families:
            canon = FAMILIES.get(f.lower())
            if canon is None:
                raise ValueError(f"unknown family {f!r}")
            wanted.add(canon)
    return [
        _entry(s)
        for s in specs
        if s.order <= max_order and (wanted is None or s.family in wanted)
    ]
