"""Builtin lattices, generic constructions, and a small-lattice enumerator.

The enumerator produces every bounded lattice on n elements up to
isomorphism. It walks naturally labeled posets (element ids respect the
order) by choosing each element's strict down-set, pruning branches
where some pair has no meet; a finite poset with a top in which all
binary meets exist is a lattice. Duplicate isomorphs are removed through
the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complementation import satisfies_dblplus_identity
from .core import (ELEMENT_CAP, Lattice, canonical_key, is_complemented,
                   is_distributive, is_modular)
from .errors import InvalidParameter, SizeCapExceeded

ENUM_CAP = 7

TAG_PREDICATES = {
    "complemented": is_complemented,
    "modular": is_modular,
    "distributive": is_distributive,
    "dblplus_identity": satisfies_dblplus_identity,
}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    lattice: Lattice
    tags: frozenset


def tags_of(lat: Lattice) -> frozenset:
    return frozenset(t for t, pred in TAG_PREDICATES.items() if pred(lat))


def entry_for(name: str, lat: Lattice) -> CorpusEntry:
    return CorpusEntry(name, lat, tags_of(lat))


# -- constructions -----------------------------------------------------

def make_chain(k: int) -> Lattice:
    if k < 1:
        raise InvalidParameter(f"chain length must be positive, got {k}")
    if k > ELEMENT_CAP:
        raise SizeCapExceeded(f"chain length {k} exceeds the {ELEMENT_CAP} element cap")
    if k == 1:
        labels = ["0"]
    else:
        labels = ["0"] + [f"m{i}" for i in range(1, k - 1)] + ["1"]
    ups = [sum(1 << j for j in range(i, k)) for i in range(k)]
    return Lattice(labels, ups, name=f"chain:{k}")


def make_boolean(k: int) -> Lattice:
    """Powerset of k atoms; elements are labeled by k-bit strings."""
    if k < 1:
        raise InvalidParameter(f"boolean exponent must be positive, got {k}")
    n = 1 << k
    if n > ELEMENT_CAP:
        raise SizeCapExceeded(f"2^{k} elements exceed the {ELEMENT_CAP} element cap")
    labels = [format(i, f"0{k}b") for i in range(n)]
    ups = [sum(1 << j for j in range(n) if i & j == i) for i in range(n)]
    return Lattice(labels, ups, name=f"B:{k}")


def make_Mn(n: int) -> Lattice:
    """Bounds plus n pairwise incomparable atoms."""
    if n < 2:
        raise InvalidParameter(f"diamond width must be at least 2, got {n}")
    if n + 2 > ELEMENT_CAP:
        raise SizeCapExceeded(f"{n + 2} elements exceed the {ELEMENT_CAP} element cap")
    labels = ["0"] + [f"a{i}" for i in range(1, n + 1)] + ["1"]
    top = n + 1
    ups = [(1 << (n + 2)) - 1]
    ups += [(1 << i) | (1 << top) for i in range(1, n + 1)]
    ups.append(1 << top)
    return Lattice(labels, ups, name=f"M:{n}")


def make_N5() -> Lattice:
    return Lattice.from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        name="N5")


def make_M3() -> Lattice:
    return Lattice.from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        name="M3")


def make_fig2() -> Lattice:
    """Twelve elements: four atom/coatom rails a-g, b-h, c-i, d-j, a
    second bottom cover e under all coatoms, and a second top cover f
    over all atoms."""
    labels = ["0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"]
    covers = [("0", x) for x in "abcde"]
    covers += [(x, "f") for x in "abcd"]
    covers += [("e", y) for y in "ghij"]
    covers += [("a", "g"), ("b", "h"), ("c", "i"), ("d", "j")]
    covers += [("f", "1")] + [(y, "1") for y in "ghij"]
    return Lattice.from_covers(labels, covers, name="fig2")


def direct_product(l1: Lattice, l2: Lattice) -> Lattice:
    n1, n2 = l1.n, l2.n
    if n1 * n2 > ELEMENT_CAP:
        raise SizeCapExceeded(
            f"product would have {n1 * n2} elements, cap is {ELEMENT_CAP}")
    labels = [f"{l1.label(i)}.{l2.label(j)}" for i in l1.elements for j in l2.elements]
    ups = []
    for i in l1.elements:
        for j in l2.elements:
            m = 0
            for x in l1.elements:
                if not l1.leq(i, x):
                    continue
                for y in l2.elements:
                    if l2.leq(j, y):
                        m |= 1 << (x * n2 + y)
            ups.append(m)
    name = f"({l1.name or '?'})x({l2.name or '?'})"
    return Lattice(labels, ups, name=name)


# -- enumeration -------------------------------------------------------

def _lattice_from_downs(downs: list[int], n: int) -> Lattice:
    ups = [1 << i for i in range(n)]
    for j in range(n):
        for i in range(n):
            if downs[j] >> i & 1:
                ups[i] |= 1 << j
    labels = [f"x{i}" for i in range(n)]
    return Lattice(labels, ups)


def enumerate_lattices(n: int, filters: frozenset = frozenset(),
                       cap: int = ENUM_CAP) -> list[Lattice]:
    """All bounded lattices on n elements up to isomorphism, optionally
    keeping only those carrying every requested tag."""
    if n < 1:
        raise InvalidParameter(f"element count must be positive, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"enumeration capped at {cap} elements, got {n}")
    unknown = set(filters) - set(TAG_PREDICATES)
    if unknown:
        raise InvalidParameter(f"unknown tags: {sorted(unknown)}")
    if n == 1:
        return []

    downs = [0] * n
    full = (1 << n) - 1
    out: list[Lattice] = []
    seen: set = set()

    def meet_exists(j: int, k: int) -> bool:
        # Common strict lower bounds of j and the new element k must have
        # a greatest member; j itself not below k here.
        common = (downs[j] | (1 << j)) & downs[k]
        if common.bit_count() <= 1:
            return common != 0
        probe = common
        while probe:
            t = probe.bit_length() - 1
            if common & ~(downs[t] | (1 << t)) == 0:
                return True
            probe ^= 1 << t
        return False

    def place(k: int):
        if k == n:
            lat = _lattice_from_downs(downs, n)
            key = canonical_key(lat)
            if key not in seen:
                seen.add(key)
                out.append(lat)
            return
        if k == n - 1:
            choices = [full ^ (1 << k)]
        else:
            base = 1  # everything sits above the bottom
            pool = [j for j in range(1, k)]
            choices = []

            def grow(idx: int, mask: int):
                if idx == len(pool):
                    choices.append(mask)
                    return
                j = pool[idx]
                if downs[j] & ~mask == 0:
                    grow(idx + 1, mask | (1 << j))
                grow(idx + 1, mask)

            grow(0, base)
        for m in choices:
            downs[k] = m
            if all(m >> j & 1 or meet_exists(j, k) for j in range(k)):
                place(k + 1)
        downs[k] = 0

    place(1)

    preds = [TAG_PREDICATES[t] for t in sorted(filters)]
    if preds:
        out = [lat for lat in out if all(p(lat) for p in preds)]
    return out


# -- naming and the default corpus -------------------------------------

def named_lattice(name: str) -> Lattice:
    """Resolve a corpus name: N5, M3, fig2, M:n, B:k, chain:k."""
    token = name.strip()
    low = token.lower()
    if low == "n5":
        return make_N5()
    if low == "m3":
        return make_M3()
    if low == "fig2":
        return make_fig2()
    head, sep, tail = token.partition(":")
    if sep:
        try:
            k = int(tail)
        except ValueError:
            raise InvalidParameter(f"bad numeric suffix in lattice name {name!r}") from None
        kind = head.lower()
        if kind == "m":
            return make_Mn(k)
        if kind == "b":
            return make_boolean(k)
        if kind == "chain":
            return make_chain(k)
    raise InvalidParameter(
        f"unknown lattice name {name!r}; expected N5, M3, fig2, M:n, B:k, or chain:k")


def default_corpus(enum_max: int = 6) -> list[CorpusEntry]:
    """Named lattices plus every complemented lattice with at most
    enum_max elements, deduplicated up to isomorphism."""
    entries: list[CorpusEntry] = []
    seen: set = set()

    def add(name: str, lat: Lattice):
        key = canonical_key(lat)
        if key in seen:
            return
        seen.add(key)
        entries.append(entry_for(name, lat))

    add("N5", make_N5())
    add("M3", make_M3())
    add("fig2", make_fig2())
    for n in range(2, 7):
        add(f"M:{n}", make_Mn(n))
    for k in range(1, 5):
        add(f"B:{k}", make_boolean(k))
    for n in range(2, enum_max + 1):
        for i, lat in enumerate(enumerate_lattices(n, frozenset(("complemented",)))):
            add(f"enum{n}.{i}", lat)
    return entries
