"""Bounded finite lattices presented by their cover relations.

Elements are the integers 0..n-1.  The indexing must be a linear
extension of the order: i < j for every cover pair (i, j), element 0 is
the unique bottom and element n-1 is the unique top.  The order relation
and the meet and join tables are precomputed at construction, so all
queries afterwards are table lookups.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class LatticeError(Exception):
    """Base class for structural errors raised by this package."""


class BadIndexOrder(LatticeError):
    """A cover pair violates 0 <= i < j < n."""


class NotReduced(LatticeError):
    """The cover list repeats a pair or contains a transitively implied one."""


class NotBounded(LatticeError):
    """The cover relation has more than one minimal or maximal element."""


class NotALattice(LatticeError):
    """Some pair of elements has no unique meet or join."""


class NotComparable(LatticeError):
    """An operation required a <= b for elements that are incomparable."""


class NotAnEdge(LatticeError):
    """The given pair is not a cover pair of the lattice."""


class TooLarge(LatticeError):
    """A guarded exhaustive operation was asked to exceed its size limit."""


class NotASublattice(LatticeError):
    """The given element set is not closed under meet and join."""


class UnknownName(LatticeError):
    """No named constructor matches the requested name."""


class BadParameter(LatticeError):
    """A constructor parameter is out of range or of the wrong shape."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ElementSets:
    """The standard element classes of a bounded lattice.

    jir/mir hold the join/meet irreducible elements (exactly one lower,
    resp. upper, cover); jr/mr hold the reducible ones (two or more).
    The bottom belongs to neither jir nor jr, the top to neither mir nor
    mr.  nar holds the elements comparable with every element.
    """

    jir: frozenset[int]
    jr: frozenset[int]
    mir: frozenset[int]
    mr: frozenset[int]
    nar: frozenset[int]


class Lattice:
    """Immutable bounded lattice with O(1) order, meet and join lookups."""

    __slots__ = ("n", "covers", "up", "down", "lc", "uc",
                 "meet_table", "join_table", "_canon")

    def __init__(self, n, covers, up, down, lc, uc, meet_table, join_table):
        # Internal constructor; use from_covers, which validates.
        self.n = n
        self.covers = covers
        self.up = up          # up[x] = bitmask of {y : x <= y}, including x
        self.down = down
        self.lc = lc          # lc[x] = tuple of lower covers of x
        self.uc = uc
        self.meet_table = meet_table
        self.join_table = join_table
        self._canon = None

    # -- basic queries --------------------------------------------------

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.n - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """The prime intervals, i.e. the cover pairs."""
        return self.covers

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return self.lc[x]

    def upper_covers(self, x: int) -> tuple[int, ...]:
        return self.uc[x]

    def is_edge(self, x: int, y: int) -> bool:
        return y in self.uc[x]

    def is_chain(self) -> bool:
        return all(len(self.uc[x]) == 1 for x in range(self.n - 1))

    def element_sets(self) -> ElementSets:
        full = (1 << self.n) - 1
        jir = frozenset(x for x in range(self.n) if len(self.lc[x]) == 1)
        jr = frozenset(x for x in range(self.n) if len(self.lc[x]) >= 2)
        mir = frozenset(x for x in range(self.n) if len(self.uc[x]) == 1)
        mr = frozenset(x for x in range(self.n) if len(self.uc[x]) >= 2)
        nar = frozenset(x for x in range(self.n)
                        if self.up[x] | self.down[x] == full)
        return ElementSets(jir=jir, jr=jr, mir=mir, mr=mr, nar=nar)

    def width(self) -> int:
        """Size of a largest antichain (clique search on incomparability)."""
        full = (1 << self.n) - 1
        inc = [~(self.up[x] | self.down[x]) & full for x in range(self.n)]
        best = 0

        def rec(cand: int, size: int) -> None:
            nonlocal best
            if size + cand.bit_count() <= best:
                return
            if not cand:
                best = size
                return
            low = cand & -cand
            v = low.bit_length() - 1
            rec(cand & inc[v], size + 1)
            rec(cand ^ low, size)

        rec(full, 0)
        return best

    # -- derived lattices ------------------------------------------------

    def dual(self) -> "Lattice":
        """Order reversal, relabeled by i -> n-1-i to keep indices ascending."""
        n = self.n
        pairs = [(n - 1 - j, n - 1 - i) for (i, j) in self.covers]
        return from_covers(n, pairs)

    def interval(self, a: int, b: int) -> "Lattice":
        """The sublattice [a, b], reindexed by the order of parent indices."""
        if not self.leq(a, b):
            raise NotComparable(f"{a} <= {b} fails, interval is empty")
        elems = sorted(_bits(self.up[a] & self.down[b]))
        pos = {e: k for k, e in enumerate(elems)}
        pairs = [(pos[i], pos[j]) for (i, j) in self.covers
                 if i in pos and j in pos]
        return from_covers(len(elems), pairs)

    # -- isomorphism -----------------------------------------------------

    def canonical_form(self) -> tuple[tuple[int, int], ...]:
        """Canonical cover list: equal for exactly the isomorphic lattices."""
        if self._canon is None:
            self._canon = canonical_poset_covers(self.n, self.covers)
        return self._canon

    def is_isomorphic(self, other: "Lattice") -> bool:
        if self.n != other.n or len(self.covers) != len(other.covers):
            return False
        return self.canonical_form() == other.canonical_form()

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        # Labeled equality.  Use is_isomorphic for equality up to relabeling.
        return (isinstance(other, Lattice)
                and self.n == other.n and self.covers == other.covers)

    def __hash__(self) -> int:
        return hash((self.n, self.covers))

    def __reduce__(self):
        return (from_covers, (self.n, self.covers))

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, covers={list(self.covers)})"


def from_covers(n: int, covers: Iterable[tuple[int, int]]) -> Lattice:
    """Validate a cover list and build the lattice it presents.

    The list must be the exact transitive reduction of a bounded lattice
    order on 0..n-1, with i < j in every pair.  Violations raise
    BadIndexOrder, NotReduced, NotBounded or NotALattice.
    """
    if n < 1:
        raise BadIndexOrder(f"need at least one element, got n={n}")
    pairs: list[tuple[int, int]] = []
    for pair in covers:
        i, j = pair
        if not (0 <= i < j < n):
            raise BadIndexOrder(f"cover pair ({i},{j}) violates 0 <= i < j < {n}")
        pairs.append((i, j))
    if len(set(pairs)) != len(pairs):
        seen = set()
        for p in pairs:
            if p in seen:
                raise NotReduced(f"cover pair {p} is listed twice")
            seen.add(p)
    pairs.sort()

    lc = [[] for _ in range(n)]
    uc = [[] for _ in range(n)]
    for (i, j) in pairs:
        uc[i].append(j)
        lc[j].append(i)

    up = [1 << x for x in range(n)]
    for x in range(n - 1, -1, -1):
        for y in uc[x]:
            up[x] |= up[y]
    down = [1 << x for x in range(n)]
    for x in range(n):
        for y in lc[x]:
            down[x] |= down[y]

    for (i, j) in pairs:
        between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
        if between:
            z = next(_bits(between))
            raise NotReduced(f"cover pair ({i},{j}) is implied via element {z}")

    bottoms = [x for x in range(n) if down[x] == 1 << x]
    if len(bottoms) != 1:
        raise NotBounded(f"minimal elements {bottoms}, need exactly one")
    tops = [x for x in range(n) if up[x] == 1 << x]
    if len(tops) != 1:
        raise NotBounded(f"maximal elements {tops}, need exactly one")

    meet_table = [[0] * n for _ in range(n)]
    join_table = [[0] * n for _ in range(n)]
    for x in range(n):
        meet_table[x][x] = x
        join_table[x][x] = x
        for y in range(x + 1, n):
            common = down[x] & down[y]
            maxima = [z for z in _bits(common) if up[z] & common == 1 << z]
            if len(maxima) != 1:
                raise NotALattice(f"elements {x} and {y} have no unique meet")
            meet_table[x][y] = meet_table[y][x] = maxima[0]
            common = up[x] & up[y]
            minima = [z for z in _bits(common) if down[z] & common == 1 << z]
            if len(minima) != 1:
                raise NotALattice(f"elements {x} and {y} have no unique join")
            join_table[x][y] = join_table[y][x] = minima[0]

    return Lattice(
        n=n,
        covers=tuple(pairs),
        up=tuple(up),
        down=tuple(down),
        lc=tuple(tuple(v) for v in lc),
        uc=tuple(tuple(v) for v in uc),
        meet_table=tuple(tuple(row) for row in meet_table),
        join_table=tuple(tuple(row) for row in join_table),
    )


def sublattice_of(lat: Lattice, elems: Iterable[int]) -> Lattice:
    """The sublattice induced on elems, reindexed by parent index order.

    Raises NotASublattice unless elems is nonempty and closed under the
    meet and join of the parent lattice.
    """
    sel = sorted(set(elems))
    if not sel:
        raise NotASublattice("a sublattice cannot be empty")
    for x in sel:
        if not (0 <= x < lat.n):
            raise NotASublattice(f"element {x} is out of range")
    inside = set(sel)
    for a in sel:
        for b in sel:
            if lat.meet_table[a][b] not in inside:
                raise NotASublattice(
                    f"meet of {a} and {b} is {lat.meet_table[a][b]}, outside the set")
            if lat.join_table[a][b] not in inside:
                raise NotASublattice(
                    f"join of {a} and {b} is {lat.join_table[a][b]}, outside the set")
    pos = {e: k for k, e in enumerate(sel)}
    mask = 0
    for e in sel:
        mask |= 1 << e
    pairs = []
    for a in sel:
        for b in sel:
            if a < b and lat.leq(a, b):
                strictly_between = lat.up[a] & lat.down[b] & mask & ~(1 << a) & ~(1 << b)
                if not strictly_between:
                    pairs.append((pos[a], pos[b]))
    return from_covers(len(sel), pairs)


def canonical_poset_covers(
    n: int, covers: Sequence[tuple[int, int]]
) -> tuple[tuple[int, int], ...]:
    """Lexicographically least relabeling of an ascending cover DAG.

    Works for any finite poset given by its cover pairs with i < j.  Two
    inputs produce the same output exactly when they are isomorphic.

    Elements are assigned positions bottom up.  Candidate positions are
    restricted by an iterated neighborhood refinement of the invariant
    (height, depth, degrees, ideal sizes); since comparable elements
    always differ in height, every class-ordered placement is a linear
    extension and no extra bookkeeping is needed.  Among placements the
    cover matrix, read column by column with the first row as the most
    significant bit, is minimized by branch and bound.  Candidates whose
    strict up and down sets coincide are automorphic twins, so only one
    of them is tried per node.
    """
    if n == 1:
        return ()
    lc = [[] for _ in range(n)]
    uc = [[] for _ in range(n)]
    for (i, j) in covers:
        uc[i].append(j)
        lc[j].append(i)

    up = [1 << x for x in range(n)]
    for x in range(n - 1, -1, -1):
        for y in uc[x]:
            up[x] |= up[y]
    down = [1 << x for x in range(n)]
    for x in range(n):
        for y in lc[x]:
            down[x] |= down[y]

    height = [0] * n
    for x in range(n):
        for y in lc[x]:
            height[x] = max(height[x], height[y] + 1)
    depth = [0] * n
    for x in range(n - 1, -1, -1):
        for y in uc[x]:
            depth[x] = max(depth[x], depth[y] + 1)

    keys = [(height[x], depth[x], len(lc[x]), len(uc[x]),
             down[x].bit_count(), up[x].bit_count()) for x in range(n)]
    ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
    color = [ranks[k] for k in keys]
    while True:
        keys = [(height[x], color[x],
                 tuple(sorted(color[y] for y in lc[x])),
                 tuple(sorted(color[y] for y in uc[x]))) for x in range(n)]
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        refined = [ranks[k] for k in keys]
        if len(ranks) == len(set(color)):
            break
        color = refined
    color = refined

    by_color = sorted(range(n), key=lambda x: color[x])
    pos_color = [color[x] for x in by_color]
    members: dict[int, list[int]] = {}
    for x in range(n):
        members.setdefault(color[x], []).append(x)

    order_of = [-1] * n
    cols: list[int] = []
    best: list[int] | None = None
    sdown = [down[x] ^ (1 << x) for x in range(n)]
    sup = [up[x] ^ (1 << x) for x in range(n)]

    def rec(k: int) -> None:
        nonlocal best
        if k == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        scored = []
        seen = set()
        for e in members[pos_color[k]]:
            if order_of[e] >= 0:
                continue
            sig = (sdown[e], sup[e])
            if sig in seen:
                continue
            seen.add(sig)
            v = 0
            for i in lc[e]:
                v |= 1 << (k - 1 - order_of[i])
            scored.append((v, e))
        scored.sort()
        for v, e in scored:
            cols.append(v)
            if best is not None and cols > best[: k + 1]:
                cols.pop()
                break
            order_of[e] = k
            rec(k + 1)
            order_of[e] = -1
            cols.pop()

    rec(0)
    assert best is not None
    out = []
    for k in range(1, n):
        v = best[k]
        for p in range(k):
            if v >> (k - 1 - p) & 1:
                out.append((p, k))
    return tuple(sorted(out))
