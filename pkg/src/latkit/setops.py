"""Pointwise operations and the three order relations on subsets.

Empty-set behaviour follows the literal quantifier reading: set_le is
vacuously true whenever either side is empty; set_le1 fails only when the
left side is nonempty and the right empty; set_le2 dually.
"""

from __future__ import annotations

from .core import Lattice


def set_join(lat: Lattice, a: frozenset, b: frozenset) -> frozenset:
    return frozenset(lat.join(x, y) for x in a for y in b)


def set_meet(lat: Lattice, a: frozenset, b: frozenset) -> frozenset:
    return frozenset(lat.meet(x, y) for x in a for y in b)


def set_le(lat: Lattice, a: frozenset, b: frozenset) -> bool:
    """Every member of a is below every member of b."""
    return all(lat.leq(x, y) for x in a for y in b)


def set_le1(lat: Lattice, a: frozenset, b: frozenset) -> bool:
    """Every member of a is below some member of b."""
    return all(any(lat.leq(x, y) for y in b) for x in a)


def set_le2(lat: Lattice, a: frozenset, b: frozenset) -> bool:
    """Every member of b is above some member of a."""
    return all(any(lat.leq(x, y) for x in a) for y in b)


def singleton(a: int) -> frozenset:
    return frozenset((a,))


def is_singleton_of(s: frozenset, a: int) -> bool:
    return len(s) == 1 and a in s
