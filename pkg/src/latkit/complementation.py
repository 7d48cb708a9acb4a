"""The set-valued complement operator and its closure structure.

For an element a, plus({a}) collects every complement of a; for a subset A
it collects the common complements of all members. The operator is the
polarity of the relation "x complements y", so A -> plus(A) is an antitone
Galois connection: A is contained in double_plus(A), plus is inclusion
reversing, and plus(double_plus(A)) == plus(A). Sets fixed by double_plus
are called closed; they form a complete ortholattice under inclusion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    Lattice,
    find_n5_through_bounds,
    format_element_set,
    is_antichain,
    is_complemented,
    is_convex,
    is_modular,
)
from .report import CheckResult, PropertyReport
from .setops import set_le1


def complement_sets(lat: Lattice) -> tuple[frozenset, ...]:
    """Per-element complement sets, memoised on the lattice."""
    def compute():
        out = []
        for a in lat.elements:
            out.append(frozenset(
                x for x in lat.elements
                if lat.join(a, x) == lat.top and lat.meet(a, x) == lat.bottom))
        return tuple(out)
    return lat.memo("complement_sets", compute)


def complements(lat: Lattice, a: int) -> frozenset:
    return complement_sets(lat)[a]


def plus(lat: Lattice, a: frozenset) -> frozenset:
    """Common complements of all members; the whole carrier for empty input."""
    if not a:
        return lat.universe
    cs = complement_sets(lat)
    items = iter(sorted(a))
    acc = cs[next(items)]
    for x in items:
        if not acc:
            break
        acc = acc & cs[x]
    return acc


def double_plus(lat: Lattice, a: frozenset) -> frozenset:
    return plus(lat, plus(lat, a))


def is_closed(lat: Lattice, a: frozenset) -> bool:
    return double_plus(lat, a) == a


def satisfies_dblplus_identity(lat: Lattice) -> bool:
    """True when double_plus({x}) == {x} for every element."""
    def compute():
        return all(double_plus(lat, frozenset((x,))) == frozenset((x,))
                   for x in lat.elements)
    return lat.memo("dblplus_identity", compute)


def dblplus_injective(lat: Lattice) -> bool:
    """True when x -> double_plus({x}) is injective."""
    def compute():
        seen = {}
        for x in lat.elements:
            key = double_plus(lat, frozenset((x,)))
            if key in seen:
                return False
            seen[key] = x
        return True
    return lat.memo("dblplus_injective", compute)


def find_closed_element_in_dblplus(lat: Lattice, a: int) -> int | None:
    """Some b in double_plus({a}) with double_plus({b}) == {b}, found by
    walking descending double_plus sets; None when no such b exists."""
    cur = a
    seen = set()
    while cur not in seen:
        seen.add(cur)
        dp = double_plus(lat, frozenset((cur,)))
        if dp == frozenset((cur,)):
            return cur
        rest = sorted(dp - {cur})
        if not rest:
            return None
        cur = rest[0]
    for b in sorted(double_plus(lat, frozenset((a,)))):
        if double_plus(lat, frozenset((b,))) == frozenset((b,)):
            return b
    return None


# -- closed sets and the closure lattice -------------------------------

def closed_sets(lat: Lattice) -> tuple[frozenset, ...]:
    """All closed subsets, via intersection closure of the per-element
    complement sets seeded with the full carrier (which is plus(empty))."""
    def compute():
        fam = {lat.universe}
        for g in complement_sets(lat):
            fam |= {g & s for s in fam}
            fam.add(g)
        return tuple(sorted(fam, key=lambda s: (len(s), sorted(s))))
    return lat.memo("closed_sets", compute)


@dataclass(frozen=True)
class ClosureReport:
    """The lattice of closed sets: tables are indexed by position in
    closed; orthocomplement maps each index to the index of its plus."""
    closed: tuple[frozenset, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    orthocomplement: tuple[int, ...]
    violations: tuple[str, ...]


def closure_lattice(lat: Lattice) -> ClosureReport:
    cs = closed_sets(lat)
    index = {s: i for i, s in enumerate(cs)}
    k = len(cs)
    fmt = lambda s: format_element_set(lat, s)

    violations: list[str] = []
    for s in cs:
        if double_plus(lat, s) != s:
            violations.append(f"family member not closed: {fmt(s)}")

    ortho = []
    for s in cs:
        p = plus(lat, s)
        if p not in index:
            violations.append(f"orthocomplement escapes the family: {fmt(s)}")
            ortho.append(-1)
        else:
            ortho.append(index[p])

    meet = [[0] * k for _ in range(k)]
    join = [[0] * k for _ in range(k)]
    for i, s in enumerate(cs):
        for j, t in enumerate(cs):
            m = s & t
            if m not in index:
                violations.append(f"intersection escapes the family: {fmt(s)}, {fmt(t)}")
                meet[i][j] = -1
            else:
                meet[i][j] = index[m]
            u = double_plus(lat, s | t)
            if u not in index:
                violations.append(f"closure of union escapes the family: {fmt(s)}, {fmt(t)}")
                join[i][j] = -1
            else:
                join[i][j] = index[u]
                if not (s <= u and t <= u):
                    violations.append(f"join not an upper bound: {fmt(s)}, {fmt(t)}")

    # Join must be the least closed upper bound, meet the greatest lower.
    for i, s in enumerate(cs):
        for j, t in enumerate(cs):
            u = cs[join[i][j]]
            m = cs[meet[i][j]]
            for w in cs:
                if s <= w and t <= w and not u <= w:
                    violations.append(f"join not least: {fmt(s)}, {fmt(t)}")
                    break
                if w <= s and w <= t and not w <= m:
                    violations.append(f"meet not greatest: {fmt(s)}, {fmt(t)}")
                    break

    full = index.get(lat.universe)
    empty = index.get(frozenset())
    if full is None or empty is None:
        violations.append("family lacks empty set or full carrier")
    for i, s in enumerate(cs):
        o = ortho[i]
        if o < 0:
            continue
        if ortho[o] != i:
            violations.append(f"orthocomplement not involutive: {fmt(s)}")
        if meet[i][o] != empty:
            violations.append(f"set meets its orthocomplement: {fmt(s)}")
        if join[i][o] != full:
            violations.append(f"set does not join to full with orthocomplement: {fmt(s)}")
        for j, t in enumerate(cs):
            if s <= t and not cs[ortho[j]] <= cs[o]:
                violations.append(f"orthocomplement not antitone: {fmt(s)}, {fmt(t)}")

    return ClosureReport(cs, tuple(tuple(r) for r in meet),
                         tuple(tuple(r) for r in join),
                         tuple(ortho), tuple(violations))


# -- quantified checks -------------------------------------------------

def _mask_set(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def check_galois_laws(lat: Lattice, exhaustive_limit: int = 6,
                      sample_pairs: int = 10000, seed: int = 0) -> PropertyReport:
    """The Galois-connection laws of plus, over all subset pairs when the
    lattice is small enough, otherwise over seeded random pairs."""
    n = lat.n
    if n <= exhaustive_limit:
        subsets = [_mask_set(m) for m in range(1 << n)]
        pairs = [(a, b) for a in subsets for b in subsets]
    else:
        rng = random.Random(seed)
        top_mask = (1 << n) - 1
        subsets = None
        pairs = [(_mask_set(rng.randint(0, top_mask)), _mask_set(rng.randint(0, top_mask)))
                 for _ in range(sample_pairs)]

    pmap: dict[frozenset, frozenset] = {}

    def pl(s: frozenset) -> frozenset:
        try:
            return pmap[s]
        except KeyError:
            v = pmap[s] = plus(lat, s)
            return v

    fmt = lambda s: format_element_set(lat, s)
    ext_ok, ext_wit = True, None
    triple_ok, triple_wit = True, None
    disj_ok, disj_wit = True, None
    anti_ok, anti_wit = True, None
    adj_ok, adj_wit = True, None

    singles = {a for a, _ in pairs} | {b for _, b in pairs}
    for a in sorted(singles, key=lambda s: (len(s), sorted(s))):
        p = pl(a)
        dp = pl(p)
        if ext_ok and not a <= dp:
            ext_ok, ext_wit = False, f"A={fmt(a)}"
        if triple_ok and pl(dp) != p:
            triple_ok, triple_wit = False, f"A={fmt(a)}"
        if disj_ok and p & dp:
            disj_ok, disj_wit = False, f"A={fmt(a)}"

    for a, b in pairs:
        if anti_ok and a <= b and not pl(b) <= pl(a):
            anti_ok, anti_wit = False, f"A={fmt(a)} B={fmt(b)}"
        if adj_ok and (a <= pl(b)) != (b <= pl(a)):
            adj_ok, adj_wit = False, f"A={fmt(a)} B={fmt(b)}"
        if not anti_ok and not adj_ok:
            break

    mode = "exhaustive" if subsets is not None else f"{sample_pairs} sampled pairs"
    return PropertyReport(f"galois laws ({mode})", (
        CheckResult("A contained in A++", ext_ok, ext_wit),
        CheckResult("A+++ equals A+", triple_ok, triple_wit),
        CheckResult("A+ disjoint from A++", disj_ok, disj_wit),
        CheckResult("A within B implies B+ within A+", anti_ok, anti_wit),
        CheckResult("A within B+ iff B within A+", adj_ok, adj_wit),
    ))


def check_complement_sets(lat: Lattice) -> PropertyReport:
    """Order-theoretic facts about the per-element complement sets."""
    asserted = is_complemented(lat)
    fmt = lambda s: format_element_set(lat, s)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        sa = frozenset((a,))
        if a not in double_plus(lat, sa) or plus(lat, double_plus(lat, sa)) != plus(lat, sa):
            ok, wit = False, f"a={lat.labels[a]}"
            break
    res.append(CheckResult("a in a++ and a+++ = a+", ok, wit, asserted))

    all_antichains = all(is_antichain(lat, complements(lat, a)) for a in lat.elements)
    pentagon = find_n5_through_bounds(lat)
    ok = all_antichains == (pentagon is None)
    wit = None
    if not ok:
        found = "none" if pentagon is None else ",".join(lat.labels[i] for i in pentagon)
        wit = f"antichains={all_antichains} pentagon={found}"
    res.append(CheckResult("all a+ antichains iff no pentagon through bounds",
                           ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        if not is_convex(lat, complements(lat, a)):
            ok, wit = False, f"a={lat.labels[a]} a+={fmt(complements(lat, a))}"
            break
    res.append(CheckResult("every a+ convex", ok, wit, asserted))

    inj = dblplus_injective(lat)
    ident = satisfies_dblplus_identity(lat)
    ok = inj or not ident
    res.append(CheckResult("identity for x++ requires injectivity",
                           ok, None if ok else f"injective={inj} identity={ident}",
                           asserted))
    return PropertyReport("complement set structure", tuple(res))


def _nonempty_plus_family(lat: Lattice) -> set[frozenset]:
    """All plus(A) for nonempty A: intersection closure of the a+ sets."""
    fam: set[frozenset] = set()
    for g in complement_sets(lat):
        fam |= {g & s for s in fam}
        fam.add(g)
    return fam


def check_modular_antichains(lat: Lattice) -> PropertyReport:
    """In a complemented modular lattice every plus set of a nonempty
    input, and every double_plus of an element, is an antichain."""
    asserted = is_complemented(lat) and is_modular(lat)
    fmt = lambda s: format_element_set(lat, s)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        if not is_antichain(lat, complements(lat, a)):
            ok, wit = False, f"a={lat.labels[a]} a+={fmt(complements(lat, a))}"
            break
    res.append(CheckResult("every a+ an antichain", ok, wit, asserted))

    ok, wit = True, None
    for s in sorted(_nonempty_plus_family(lat), key=lambda s: (len(s), sorted(s))):
        if not is_antichain(lat, s):
            ok, wit = False, f"A+={fmt(s)}"
            break
    res.append(CheckResult("A+ an antichain for every nonempty A", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        dp = double_plus(lat, frozenset((a,)))
        if not is_antichain(lat, dp):
            ok, wit = False, f"a={lat.labels[a]} a++={fmt(dp)}"
            break
    res.append(CheckResult("every a++ an antichain", ok, wit, asserted))
    return PropertyReport("antichain structure", tuple(res))


def check_order_reversal(lat: Lattice) -> PropertyReport:
    """Three order-reversal statements and their entailments: the first
    implies the second, and the second and third are equivalent."""
    asserted = is_complemented(lat)
    from .setops import set_join, set_meet

    def stmt1():
        for x in lat.elements:
            for y in lat.elements:
                px = complements(lat, x)
                py = complements(lat, y)
                target = plus(lat, frozenset((lat.meet(x, y),)))
                if not set_le1(lat, set_join(lat, px, py), target):
                    return False, f"x={lat.labels[x]} y={lat.labels[y]}"
        return True, None

    def stmt2():
        for x in lat.elements:
            for y in lat.elements:
                if lat.leq(x, y) and not set_le1(lat, complements(lat, y), complements(lat, x)):
                    return False, f"x={lat.labels[x]} y={lat.labels[y]}"
        return True, None

    def stmt3():
        for x in lat.elements:
            for y in lat.elements:
                left = plus(lat, frozenset((lat.join(x, y),)))
                right = set_meet(lat, complements(lat, x), complements(lat, y))
                if not set_le1(lat, left, right):
                    return False, f"x={lat.labels[x]} y={lat.labels[y]}"
        return True, None

    s1, w1 = stmt1()
    s2, w2 = stmt2()
    s3, w3 = stmt3()
    return PropertyReport("order reversal", (
        CheckResult("(x^y)+ absorbs x+ v y+ pointwise", s1, w1, asserted=False),
        CheckResult("x below y reverses complement sets", s2, w2, asserted=False),
        CheckResult("(x v y)+ below x+ ^ y+ pointwise", s3, w3, asserted=False),
        CheckResult("first statement implies second", (not s1) or s2,
                    None if ((not s1) or s2) else f"s1 holds, s2 fails at {w2}", asserted),
        CheckResult("second and third equivalent", s2 == s3,
                    None if s2 == s3 else f"s2={s2} s3={s3}", asserted),
    ))


def check_dblplus_characterization(lat: Lattice) -> PropertyReport:
    """In a complemented modular lattice, the identity double_plus({x}) ==
    {x} holds exactly when every y in x++ admits z in y+ with
    (x v y) ^ z == 0 or (x ^ y) v z == 1."""
    hyp = is_complemented(lat) and is_modular(lat)
    ident = satisfies_dblplus_identity(lat)

    cond = True
    wit = None
    for x in lat.elements:
        for y in sorted(double_plus(lat, frozenset((x,)))):
            if any(lat.meet(lat.join(x, y), z) == lat.bottom
                   or lat.join(lat.meet(x, y), z) == lat.top
                   for z in complements(lat, y)):
                continue
            cond = False
            wit = f"x={lat.labels[x]} y={lat.labels[y]}"
            break
        if not cond:
            break

    return PropertyReport("double complement characterization", (
        CheckResult("identity x++ = {x} holds", ident, None, asserted=False),
        CheckResult("splitting condition holds", cond, wit, asserted=False),
        CheckResult("identity iff splitting condition", ident == cond,
                    None if ident == cond else f"identity={ident} condition={cond}",
                    hyp),
    ))


def check_descending_chains(lat: Lattice) -> PropertyReport:
    """Every element's double_plus contains a closed singleton when the
    double complement map is injective."""
    asserted = is_complemented(lat) and dblplus_injective(lat)
    ok, wit = True, None
    for a in lat.elements:
        b = find_closed_element_in_dblplus(lat, a)
        if b is None:
            ok, wit = False, f"a={lat.labels[a]}"
            break
        if b not in double_plus(lat, frozenset((a,))):
            ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} escapes a++"
            break
    return PropertyReport("descending chains", (
        CheckResult("a++ contains a closed singleton", ok, wit, asserted),
    ))
