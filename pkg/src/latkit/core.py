"""Finite bounded lattices: construction, order queries, structural predicates.

Elements are dense integer ids 0..n-1; labels are presentation only. The
order is stored as one bitmask row per element and meet/join as full n x n
tables, so every query after construction is a table lookup. Construction
validates the poset axioms, locates the bounds and computes the tables;
violations raise the matching subclass of LatticeError.
"""

from __future__ import annotations

from .errors import (
    CycleDetected,
    InvalidParameter,
    NoBounds,
    NotALattice,
    ParseError,
    TrivialLattice,
)
from .report import CheckResult, PropertyReport

# Subsets of lattice elements are plain frozensets of ids.
ElementSet = frozenset

# Practical ceiling for subset-quantified work; callers that enumerate
# subsets refuse larger inputs instead of silently degrading.
ELEMENT_CAP = 64


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """Immutable finite bounded lattice.

    Instances are built from an explicit order (tuple of up-set bitmasks)
    or via :meth:`from_covers`. Derived data computed by other modules is
    memoised on the instance through :meth:`memo`; the structure itself
    never changes after __init__.
    """

    __slots__ = ("n", "labels", "name", "bottom", "top",
                 "_up", "_down", "_meet", "_join", "_covers", "_memo")

    def __init__(self, labels, up_masks, name: str = ""):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n == 0:
            raise InvalidParameter("a lattice needs at least one element")
        if len(set(labels)) != n:
            raise InvalidParameter("duplicate element labels")
        up = tuple(int(m) for m in up_masks)
        if len(up) != n:
            raise InvalidParameter("order rows do not match label count")
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise InvalidParameter("order row references unknown element")
            if not up[i] >> i & 1:
                raise InvalidParameter("order is not reflexive")
        for i in range(n):
            m = up[i]
            for j in _bits(m):
                if j != i and up[j] >> i & 1:
                    raise InvalidParameter("order is not antisymmetric")
                if up[j] & ~m:
                    raise InvalidParameter("order is not transitive")

        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        down = tuple(down)

        bottoms = [i for i in range(n) if up[i] == full]
        tops = [i for i in range(n) if down[i] == full]
        if not bottoms or not tops:
            raise NoBounds("order has no unique minimum or maximum")
        bottom, top = bottoms[0], tops[0]
        if bottom == top:
            raise TrivialLattice("bottom equals top")

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                common = down[a] & down[b]
                g = -1
                for c in _bits(common):
                    if down[c] & common == common:
                        g = c
                        break
                if g < 0:
                    raise NotALattice(
                        f"elements {labels[a]!r}, {labels[b]!r} have no meet",
                        pair=(a, b))
                meet[a][b] = g
                common = up[a] & up[b]
                g = -1
                for c in _bits(common):
                    if up[c] & common == common:
                        g = c
                        break
                if g < 0:
                    raise NotALattice(
                        f"elements {labels[a]!r}, {labels[b]!r} have no join",
                        pair=(a, b))
                join[a][b] = g

        covers = []
        for i in range(n):
            for j in _bits(up[i] ^ (1 << i)):
                between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((i, j))

        self.n = n
        self.labels = labels
        self.name = name
        self.bottom = bottom
        self.top = top
        self._up = up
        self._down = down
        self._meet = tuple(tuple(r) for r in meet)
        self._join = tuple(tuple(r) for r in join)
        self._covers = tuple(sorted(covers))
        self._memo = {}

    # -- construction ------------------------------------------------

    @classmethod
    def from_covers(cls, labels, covers, name: str = "") -> "Lattice":
        """Build from a Hasse diagram given as (lower, upper) label pairs."""
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise InvalidParameter("duplicate element labels")
        index = {lab: i for i, lab in enumerate(labels)}
        succ = [set() for _ in range(n)]
        for lo, hi in covers:
            if lo not in index:
                raise InvalidParameter(f"cover references unknown element {lo!r}")
            if hi not in index:
                raise InvalidParameter(f"cover references unknown element {hi!r}")
            if lo == hi:
                raise CycleDetected(f"cover {lo!r} < {hi!r} is a self-loop")
            succ[index[lo]].add(index[hi])

        # Kahn topological sort doubles as the cycle check.
        indeg = [0] * n
        for i in range(n):
            for j in succ[i]:
                indeg[j] += 1
        queue = [i for i in range(n) if indeg[i] == 0]
        topo = []
        while queue:
            i = queue.pop()
            topo.append(i)
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(topo) != n:
            cyc = sorted(labels[i] for i in range(n) if indeg[i] > 0)
            raise CycleDetected(f"cover relation has a cycle through {', '.join(cyc)}")

        up = [1 << i for i in range(n)]
        for i in reversed(topo):
            for j in succ[i]:
                up[i] |= up[j]
        return cls(labels, up, name=name)

    # -- queries -----------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def universe(self) -> frozenset:
        return self.memo("universe", lambda: frozenset(range(self.n)))

    def leq(self, a: int, b: int) -> bool:
        return bool(self._up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self._up[a] >> b & 1)

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def label(self, a: int) -> str:
        return self.labels[a]

    def id_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameter(f"no element labelled {label!r}") from None

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges as (lower, upper) id pairs, sorted."""
        return self._covers

    def up_set(self, a: int) -> frozenset:
        return frozenset(_bits(self._up[a]))

    def down_set(self, a: int) -> frozenset:
        return frozenset(_bits(self._down[a]))

    def up_mask(self, a: int) -> int:
        return self._up[a]

    def down_mask(self, a: int) -> int:
        return self._down[a]

    def memo(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = fn()
            return value

    def __repr__(self) -> str:
        tag = self.name or f"{self.n} elements"
        return f"<Lattice {tag}>"


def format_element_set(lat: Lattice, s: frozenset) -> str:
    """Render a subset: label concatenation when every label is one
    character, otherwise comma-separated braces. Empty set renders as ∅."""
    if not s:
        return "∅"
    labs = [lat.labels[i] for i in sorted(s)]
    if all(len(x) == 1 for x in lat.labels):
        return "".join(labs)
    return "{" + ",".join(labs) + "}"


# -- text format -----------------------------------------------------

def parse_lattice_text(text: str) -> Lattice:
    """Parse the lattice text format:

        lattice <name>
        elements: 0 a b c 1
        covers: 0<a a<c c<1 0<b b<1

    '#' starts a comment; elements:/covers: lines may repeat.
    """
    name = None
    elements: list[str] = []
    seen: set[str] = set()
    covers: list[tuple[str, str, int]] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "lattice":
            if len(tokens) != 2:
                raise ParseError("expected exactly one name after 'lattice'", ln)
            if name is not None:
                raise ParseError("duplicate 'lattice' line", ln)
            name = tokens[1]
        elif head == "elements:":
            for t in tokens[1:]:
                if "<" in t:
                    raise ParseError(f"element name may not contain '<': {t!r}", ln)
                if t in seen:
                    raise ParseError(f"duplicate element {t!r}", ln)
                seen.add(t)
                elements.append(t)
        elif head == "covers:":
            for t in tokens[1:]:
                parts = t.split("<")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ParseError(f"cover must look like lower<upper: {t!r}", ln)
                covers.append((parts[0], parts[1], ln))
        else:
            raise ParseError(f"unknown directive {head!r}", ln)
    if name is None:
        raise ParseError("missing 'lattice <name>' line", 1)
    if not elements:
        raise ParseError("no elements declared", 1)
    for lo, hi, ln in covers:
        if lo not in seen:
            raise ParseError(f"cover references unknown element {lo!r}", ln)
        if hi not in seen:
            raise ParseError(f"cover references unknown element {hi!r}", ln)
    return Lattice.from_covers(elements, [(lo, hi) for lo, hi, _ in covers], name=name)


def load_lattice_file(path: str) -> Lattice:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lattice_text(fh.read())


# -- predicates ------------------------------------------------------

def is_modular(lat: Lattice) -> bool:
    """a <= b implies a v (x ^ b) == (a v x) ^ b for all x."""
    def compute():
        for a in lat.elements:
            for b in _bits(lat._up[a]):
                for x in lat.elements:
                    if lat._join[a][lat._meet[x][b]] != lat._meet[lat._join[a][x]][b]:
                        return False
        return True
    return lat.memo("is_modular", compute)


def is_distributive(lat: Lattice) -> bool:
    def compute():
        for x in lat.elements:
            for y in lat.elements:
                for z in lat.elements:
                    if lat._meet[x][lat._join[y][z]] != lat._join[lat._meet[x][y]][lat._meet[x][z]]:
                        return False
        return True
    return lat.memo("is_distributive", compute)


def is_complemented(lat: Lattice) -> bool:
    def compute():
        for a in lat.elements:
            if not any(lat._join[a][x] == lat.top and lat._meet[a][x] == lat.bottom
                       for x in lat.elements):
                return False
        return True
    return lat.memo("is_complemented", compute)


def is_antichain(lat: Lattice, s: frozenset) -> bool:
    items = sorted(s)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if lat.leq(a, b) or lat.leq(b, a):
                return False
    return True


def is_convex(lat: Lattice, s: frozenset) -> bool:
    for a in s:
        for b in s:
            if not lat.leq(a, b):
                continue
            between = lat._up[a] & lat._down[b]
            for d in _bits(between):
                if d not in s:
                    return False
    return True


def find_n5_through_bounds(lat: Lattice):
    """First (bottom, e, f, g, top) pentagon with e < f and g a common
    complement of both, scanning e, f, g in ascending id order."""
    bot, top = lat.bottom, lat.top
    for e in lat.elements:
        if e == bot or e == top:
            continue
        for f in lat.elements:
            if f == bot or f == top or not lat.lt(e, f):
                continue
            for g in lat.elements:
                if g in (bot, top, e, f):
                    continue
                if (lat._join[e][g] == top and lat._join[f][g] == top
                        and lat._meet[e][g] == bot and lat._meet[f][g] == bot):
                    return (bot, e, f, g, top)
    return None


def find_n5_sublattice(lat: Lattice):
    """First pentagon sublattice anywhere: {z, e, f, g, o} with e < f,
    g incomparable to both, common meet z and common join o."""
    for e in lat.elements:
        for f in lat.elements:
            if not lat.lt(e, f):
                continue
            for g in lat.elements:
                if lat.leq(e, g) or lat.leq(g, e) or lat.leq(f, g) or lat.leq(g, f):
                    continue
                z = lat._meet[e][g]
                if lat._meet[f][g] != z:
                    continue
                o = lat._join[e][g]
                if lat._join[f][g] != o:
                    continue
                return (z, e, f, g, o)
    return None


def check_lattice_axioms(lat: Lattice) -> PropertyReport:
    """Cross-check the precomputed tables against the order relation."""
    res = []

    def first_fail(pred, what):
        for a in lat.elements:
            for b in lat.elements:
                if not pred(a, b):
                    return CheckResult(what, False,
                                       f"a={lat.labels[a]} b={lat.labels[b]}")
        return CheckResult(what, True)

    res.append(first_fail(lambda a, b: lat._meet[a][b] == lat._meet[b][a],
                          "meet commutative"))
    res.append(first_fail(lambda a, b: lat._join[a][b] == lat._join[b][a],
                          "join commutative"))
    res.append(first_fail(
        lambda a, b: lat._meet[a][lat._join[a][b]] == a and lat._join[a][lat._meet[a][b]] == a,
        "absorption"))
    res.append(first_fail(
        lambda a, b: lat.leq(a, b) == (lat._meet[a][b] == a) == (lat._join[a][b] == b),
        "order agrees with meet/join"))

    ok = True
    wit = None
    for a in lat.elements:
        for b in lat.elements:
            for c in lat.elements:
                if (lat._meet[lat._meet[a][b]][c] != lat._meet[a][lat._meet[b][c]]
                        or lat._join[lat._join[a][b]][c] != lat._join[a][lat._join[b][c]]):
                    ok = False
                    wit = f"a={lat.labels[a]} b={lat.labels[b]} c={lat.labels[c]}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.append(CheckResult("associativity", ok, wit))
    res.append(CheckResult(
        "bounds", lat._meet[lat.bottom][lat.top] == lat.bottom
        and lat._join[lat.bottom][lat.top] == lat.top))
    return PropertyReport("lattice axioms", tuple(res))


# -- isomorphism -----------------------------------------------------

def _wl_colors(lat: Lattice) -> list[int]:
    """Order-invariant element colouring: degree/height start, refined by
    cover-neighbour colour multisets until stable."""
    n = lat.n
    cov_up = [[] for _ in range(n)]
    cov_dn = [[] for _ in range(n)]
    for lo, hi in lat.covers():
        cov_up[lo].append(hi)
        cov_dn[hi].append(lo)

    topo = sorted(lat.elements, key=lambda i: bin(lat._down[i]).count("1"))
    height = [0] * n
    for i in topo:
        height[i] = max((height[j] + 1 for j in cov_dn[i]), default=0)
    depth = [0] * n
    for i in reversed(topo):
        depth[i] = max((depth[j] + 1 for j in cov_up[i]), default=0)

    keys = [(bin(lat._down[i]).count("1"), bin(lat._up[i]).count("1"),
             len(cov_dn[i]), len(cov_up[i]), height[i], depth[i])
            for i in range(n)]
    ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
    color = [ranks[k] for k in keys]
    while True:
        keys = [(color[i],
                 tuple(sorted(color[j] for j in cov_dn[i])),
                 tuple(sorted(color[j] for j in cov_up[i])))
                for i in range(n)]
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if new == color:
            return color
        color = new


def canonical_key(lat: Lattice):
    """Canonical form: the minimal order-matrix bit string over all
    permutations compatible with the colour classes. Equal keys mean
    isomorphic lattices."""
    def compute():
        n = lat.n
        color = _wl_colors(lat)
        posrank = sorted(color)
        byrank: dict[int, list[int]] = {}
        for i, c in enumerate(color):
            byrank.setdefault(c, []).append(i)

        best: list[int] | None = None
        cur: list[int] = []
        placed: list[int] = []
        used = [False] * n
        up = lat._up

        def dfs(p: int):
            nonlocal best
            if p == n:
                if best is None or cur < best:
                    best = list(cur)
                return
            for e in byrank[posrank[p]]:
                if used[e]:
                    continue
                tok = 0
                for q in placed:
                    tok = tok << 1 | (up[q] >> e & 1)
                    tok = tok << 1 | (up[e] >> q & 1)
                cur.append(tok)
                if best is None or cur <= best[:p + 1]:
                    used[e] = True
                    placed.append(e)
                    dfs(p + 1)
                    placed.pop()
                    used[e] = False
                cur.pop()

        dfs(0)
        return (n, tuple(posrank), tuple(best))
    return lat.memo("canonical_key", compute)


def is_isomorphic(a: Lattice, b: Lattice) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)
