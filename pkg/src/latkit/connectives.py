"""Unsharp implication and conjunction built from the complement operator.

implies(a, b) is the set a+ v (a ^ b): all complements of a, each joined
with the meet of a and b. odot(a, b) is b ^ (a v b+). Both produce sets
because complements are not unique; on subsets they act pointwise through
set_join/set_meet. "implies(a, b) is true" always means the set equals
the singleton of the top element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complementation import complements, double_plus, plus
from .core import Lattice, format_element_set, is_complemented, is_modular
from .report import CheckResult, PropertyReport
from .setops import set_join, set_le, set_le1, set_le2, set_meet


def implies(lat: Lattice, a: int, b: int) -> frozenset:
    m = lat.meet(a, b)
    return frozenset(lat.join(x, m) for x in complements(lat, a))


def odot(lat: Lattice, a: int, b: int) -> frozenset:
    return frozenset(lat.meet(b, lat.join(a, x)) for x in complements(lat, b))


def implies_sets(lat: Lattice, a: frozenset, b: frozenset) -> frozenset:
    return set_join(lat, plus(lat, a), set_meet(lat, a, b))


def odot_sets(lat: Lattice, a: frozenset, b: frozenset) -> frozenset:
    return set_meet(lat, b, set_join(lat, a, plus(lat, b)))


def implies_union(lat: Lattice, x: int, s: frozenset) -> frozenset:
    """implies from an element into a set: the union over the members."""
    out: set[int] = set()
    for t in s:
        out |= implies(lat, x, t)
    return frozenset(out)


def implies_table(lat: Lattice) -> tuple[tuple[frozenset, ...], ...]:
    def compute():
        return tuple(tuple(implies(lat, a, b) for b in lat.elements)
                     for a in lat.elements)
    return lat.memo("implies_table", compute)


def odot_table(lat: Lattice) -> tuple[tuple[frozenset, ...], ...]:
    def compute():
        return tuple(tuple(odot(lat, a, b) for b in lat.elements)
                     for a in lat.elements)
    return lat.memo("odot_table", compute)


@dataclass(frozen=True)
class OpTable:
    """Row-operand-first operation table: entries[x][y] == x op y."""
    op: str
    entries: tuple[tuple[frozenset, ...], ...]


def op_table(lat: Lattice, which: str) -> OpTable:
    if which == "implies":
        return OpTable("implies", implies_table(lat))
    if which == "odot":
        return OpTable("odot", odot_table(lat))
    raise ValueError(f"unknown operation {which!r}")


def is_minimal_in_dblplus(lat: Lattice, a: int) -> bool:
    return not any(lat.lt(y, a) for y in double_plus(lat, frozenset((a,))))


def is_mn_shaped(lat: Lattice) -> bool:
    """True for a bounded antichain of two or more atoms that are also
    coatoms (the diamond family)."""
    middles = [x for x in lat.elements if x not in (lat.bottom, lat.top)]
    if len(middles) < 2:
        return False
    return all(lat.down_set(m) == {lat.bottom, m} and lat.up_set(m) == {m, lat.top}
               for m in middles)


_TOP = lambda lat: frozenset((lat.top,))


def check_implication_laws(lat: Lattice) -> PropertyReport:
    """Elementary implication laws on a complemented lattice, plus an
    informational survey of converse failures for the second law."""
    asserted = is_complemented(lat)
    it = implies_table(lat)
    fmt = lambda s: format_element_set(lat, s)
    top = _TOP(lat)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        if it[a][lat.bottom] != complements(lat, a) or it[lat.top][a] != frozenset((a,)):
            ok, wit = False, f"a={lat.labels[a]}"
            break
    res.append(CheckResult("a->0 = a+ and 1->a = {a}", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            if lat.leq(a, b) and it[a][b] != top:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("a below b gives a->b = {1}", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        dp = double_plus(lat, frozenset((a,)))
        for b in lat.elements:
            if (it[a][b] == top) != (lat.meet(a, b) in dp):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("a->b = {1} iff a^b in a++", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        ca = complements(lat, a)
        for b in ca:
            if it[a][b] != ca:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("b complements a gives a->b = a+", ok, wit, asserted))

    ok, wit = True, None
    for b in lat.elements:
        for c in lat.elements:
            if not lat.leq(b, c):
                continue
            for a in lat.elements:
                if not (set_le1(lat, it[a][b], it[a][c])
                        and set_le2(lat, it[a][b], it[a][c])):
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("b below c makes a->b below a->c (both set orders)",
                           ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        dp = double_plus(lat, frozenset((a,)))
        if not all(lat.meet(x, y) in dp for x in dp for y in dp):
            continue
        for b in lat.elements:
            if it[a][b] != top:
                continue
            for c in lat.elements:
                if it[a][c] == top and it[a][lat.meet(b, c)] != top:
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("meet-closed a++ makes true consequents meet-stable",
                           ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        dpa = double_plus(lat, frozenset((a,)))
        for b in lat.elements:
            if dpa <= double_plus(lat, frozenset((b,))) and it[a][b] == top:
                if it[b][a] != top:
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                    break
        if not ok:
            break
    res.append(CheckResult("a++ within b++ and a->b = {1} force b->a = {1}",
                           ok, wit, asserted))

    converse = None
    for a in lat.elements:
        for b in lat.elements:
            if it[a][b] == top and not lat.leq(a, b):
                converse = f"a={lat.labels[a]} b={lat.labels[b]}: a->b = {{1}} without a below b"
                break
        if converse:
            break
    res.append(CheckResult("converse failures of the truth law exist",
                           converse is not None, converse, asserted=False))
    return PropertyReport("implication laws", tuple(res))


def check_minimal_dblplus(lat: Lattice) -> PropertyReport:
    """a is minimal in a++ exactly when implication from a is the order:
    a->x = {1} iff a below x, for every x."""
    asserted = is_complemented(lat)
    it = implies_table(lat)
    top = _TOP(lat)
    ok, wit = True, None
    for a in lat.elements:
        minimal = is_minimal_in_dblplus(lat, a)
        order_like = all((it[a][x] == top) == lat.leq(a, x) for x in lat.elements)
        if minimal != order_like:
            ok, wit = False, f"a={lat.labels[a]} minimal={minimal} order_like={order_like}"
            break
    return PropertyReport("minimality in a++", (
        CheckResult("minimal in a++ iff a->x truth matches order", ok, wit, asserted),
    ))


def check_modus_laws(lat: Lattice) -> PropertyReport:
    """Modus ponens and tollens and the stability laws of implication on a
    complemented modular lattice."""
    asserted = is_complemented(lat) and is_modular(lat)
    it = implies_table(lat)
    fmt = lambda s: format_element_set(lat, s)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            got = set_meet(lat, frozenset((a,)), it[a][b])
            if got != frozenset((lat.meet(a, b),)):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} got={fmt(got)}"
                break
        if not ok:
            break
    res.append(CheckResult("modus ponens: a ^ (a->b) = {a^b}", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        pa = complements(lat, a)
        for b in lat.elements:
            pb = complements(lat, b)
            if not set_le(lat, pa, pb):
                continue
            if set_meet(lat, it[a][b], pb) != pa:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("modus tollens: a+ below b+ gives (a->b) ^ b+ = a+",
                           ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            for c in it[a][b]:
                if it[a][c] != it[a][b]:
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("value stability: c in a->b gives a->c = a->b",
                           ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            if implies_sets(lat, frozenset((a,)), it[a][b]) != it[a][b]:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("self application: a->(a->b) = a->b", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        pa = complements(lat, a)
        for b in lat.elements:
            if set_le(lat, pa, frozenset((b,))) and it[a][b] != frozenset((b,)):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("absorbed antecedent: a+ below b gives a->b = {b}",
                           ok, wit, asserted))
    return PropertyReport("modus laws", tuple(res))


def check_implication_meet_link(lat: Lattice) -> PropertyReport:
    """Links between implication truth and meets below a threshold on a
    complemented modular lattice."""
    asserted = is_complemented(lat) and is_modular(lat)
    it = implies_table(lat)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            for c in lat.elements:
                if set_le1(lat, frozenset((a,)), it[b][c]) and not lat.leq(lat.meet(a, b), c):
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("a below b->c pointwise forces a^b below c", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            m = lat.meet(a, b)
            for c in lat.elements:
                if (lat.leq(m, c)) != set_le1(lat, frozenset((m,)), it[b][c]):
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("a^b below c iff a^b below b->c pointwise", ok, wit, asserted))
    return PropertyReport("implication meet link", tuple(res))


def check_diamond_residuation(lat: Lattice) -> PropertyReport:
    """On the diamond family the implication has a three-way case form and
    witnesses full residuation: a^b below c iff a below b->c pointwise."""
    asserted = is_mn_shaped(lat)
    it = implies_table(lat)
    top = _TOP(lat)
    res = []

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            if lat.leq(a, b):
                expected = top
            elif a == lat.top:
                expected = frozenset((b,))
            else:
                expected = complements(lat, a)
            if it[a][b] != expected:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("case form: {1} / {b} / a+", ok, wit, asserted))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            m = lat.meet(a, b)
            for c in lat.elements:
                if lat.leq(m, c) != set_le1(lat, frozenset((a,)), it[b][c]):
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("residuation: a^b below c iff a below b->c pointwise",
                           ok, wit, asserted))
    return PropertyReport("diamond residuation", tuple(res))


def check_conjunction_laws(lat: Lattice) -> PropertyReport:
    """Laws of the unsharp conjunction; the last group needs modularity."""
    comp = is_complemented(lat)
    modular = comp and is_modular(lat)
    ot = odot_table(lat)
    fmt = lambda s: format_element_set(lat, s)
    res = []

    zero = frozenset((lat.bottom,))
    ok, wit = True, None
    for a in lat.elements:
        if ot[lat.bottom][a] != zero or ot[a][lat.bottom] != zero:
            ok, wit = False, f"a={lat.labels[a]}"
            break
    res.append(CheckResult("0 absorbs: 0(.)a = a(.)0 = {0}", ok, wit, comp))

    ok, wit = True, None
    for a in lat.elements:
        if ot[lat.top][a] != frozenset((a,)) or ot[a][lat.top] != frozenset((a,)):
            ok, wit = False, f"a={lat.labels[a]}"
            break
    res.append(CheckResult("1 is a unit: 1(.)a = a(.)1 = {a}", ok, wit, comp))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            m = frozenset((lat.meet(a, b),))
            if not (set_le(lat, m, ot[a][b]) and set_le(lat, ot[a][b], frozenset((b,)))):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} got={fmt(ot[a][b])}"
                break
            if lat.leq(b, a) and ot[a][b] != frozenset((b,)):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]}"
                break
        if not ok:
            break
    res.append(CheckResult("a^b below a(.)b below b; b below a collapses to {b}",
                           ok, wit, comp))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            if not lat.leq(a, b):
                continue
            for c in lat.elements:
                if not (set_le1(lat, ot[a][c], ot[b][c])
                        and set_le2(lat, ot[a][c], ot[b][c])):
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("a below b makes a(.)c below b(.)c (both set orders)",
                           ok, wit, comp))

    ok, wit = True, None
    for a in lat.elements:
        if ot[a][a] != frozenset((a,)):
            ok, wit = False, f"a={lat.labels[a]} got={fmt(ot[a][a])}"
            break
    res.append(CheckResult("idempotence: a(.)a = {a}", ok, wit, comp))

    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            if lat.leq(a, b) != (ot[a][b] == frozenset((a,))):
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} got={fmt(ot[a][b])}"
                break
            if odot_sets(lat, ot[a][b], frozenset((b,))) != ot[a][b]:
                ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} reapplication moved"
                break
        if not ok:
            break
    res.append(CheckResult("a below b iff a(.)b = {a}; (a(.)b)(.)b = a(.)b",
                           ok, wit, modular))
    return PropertyReport("conjunction laws", tuple(res))


def check_adjointness(lat: Lattice) -> PropertyReport:
    """a(.)b below {c} iff {a} below b->c, over all triples."""
    asserted = is_complemented(lat) and is_modular(lat)
    it = implies_table(lat)
    ot = odot_table(lat)
    ok, wit = True, None
    for a in lat.elements:
        for b in lat.elements:
            for c in lat.elements:
                left = set_le(lat, ot[a][b], frozenset((c,)))
                right = set_le(lat, frozenset((a,)), it[b][c])
                if left != right:
                    ok, wit = False, f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    return PropertyReport("adjointness", (
        CheckResult("a(.)b below c iff a below b->c", ok, wit, asserted),
    ))
