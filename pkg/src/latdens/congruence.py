"""Congruences of a finite lattice and their exact dyadic density.

A congruence is stored as a partition of the element set.  The whole
congruence lattice is never materialized for counting: the distinct
principal congruences of the edges below join-irreducible elements form
a small poset whose down-closed subsets are counted instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .lattice import Lattice, NotAnEdge, TooLarge, _bits


@total_ordering
@dataclass(frozen=True)
class Density:
    """Exact dyadic rational num / 2**exp in (0, 1], kept normalized.

    Normalized means num is odd or exp is zero, so field equality is
    value equality.  Lattice densities are always of this shape: the
    congruence count over 2**(n-1).
    """

    num: int
    exp: int

    def __post_init__(self):
        if self.num <= 0:
            raise ValueError(f"density numerator must be positive, got {self.num}")
        if self.exp < 0:
            raise ValueError(f"density exponent must be >= 0, got {self.exp}")
        num, exp = self.num, self.exp
        while num % 2 == 0 and exp > 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __lt__(self, other: "Density") -> bool:
        return self.num << other.exp < other.num << self.exp

    def __mul__(self, other: "Density") -> "Density":
        return Density(self.num * other.num, self.exp + other.exp)

    def halved(self) -> "Density":
        return Density(self.num, self.exp + 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def exact_str(self) -> str:
        """Round-trippable normalized form, e.g. '13/2^7'."""
        return f"{self.num}/2^{self.exp}"

    @classmethod
    def parse(cls, text: str) -> "Density":
        num, _, rest = text.partition("/2^")
        return cls(int(num), int(rest))

    def over64_str(self) -> str:
        """The value scaled to denominator 64, e.g. '32/64' or '6.5/64'.

        The scaled numerator is dyadic, so its decimal expansion is exact.
        """
        if self.exp <= 6:
            return f"{self.num << (6 - self.exp)}/64"
        d = self.exp - 6
        digits = str(self.num * 5 ** d).rjust(d + 1, "0")
        return f"{digits[:-d]}.{digits[-d:]}/64"

    def __str__(self) -> str:
        return self.exact_str()


class Congruence:
    """A lattice congruence as a normalized partition of 0..n-1.

    block[i] is the id of the class of element i, ids numbered by first
    occurrence, so equal partitions have equal tuples.
    """

    __slots__ = ("block",)

    def __init__(self, labels: Iterable[int]):
        remap: dict[int, int] = {}
        out = []
        for v in labels:
            if v not in remap:
                remap[v] = len(remap)
            out.append(remap[v])
        self.block = tuple(out)

    @property
    def n(self) -> int:
        return len(self.block)

    @property
    def num_blocks(self) -> int:
        return len(set(self.block))

    def collapses(self, x: int, y: int) -> bool:
        return self.block[x] == self.block[y]

    def refines(self, other: "Congruence") -> bool:
        """True iff self <= other in Con L (every class fits in one of other's)."""
        image: dict[int, int] = {}
        for mine, theirs in zip(self.block, other.block):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def blocks(self) -> tuple[frozenset[int], ...]:
        out: dict[int, set[int]] = {}
        for x, b in enumerate(self.block):
            out.setdefault(b, set()).add(x)
        return tuple(frozenset(out[b]) for b in sorted(out))

    def is_identity(self) -> bool:
        return self.num_blocks == self.n

    def is_all(self) -> bool:
        return self.num_blocks <= 1

    def join(self, other: "Congruence") -> "Congruence":
        """Partition join: transitive closure of the union of both."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for labels in (self.block, other.block):
            first: dict[int, int] = {}
            for x, b in enumerate(labels):
                if b in first:
                    parent[find(x)] = find(first[b])
                else:
                    first[b] = x
        return Congruence(find(x) for x in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, Congruence) and self.block == other.block

    def __hash__(self) -> int:
        return hash(self.block)

    def __repr__(self) -> str:
        parts = ["".join(str(x) for x in sorted(blk)) for blk in self.blocks()]
        return f"Congruence({'|'.join(parts)})"


def _require_edge(lat: Lattice, edge: tuple[int, int]) -> tuple[int, int]:
    a, b = edge
    if not (0 <= a < lat.n and 0 <= b < lat.n and lat.is_edge(a, b)):
        raise NotAnEdge(f"({a},{b}) is not a cover pair of this lattice")
    return a, b


def principal_congruence(lat: Lattice, a: int, b: int) -> Congruence:
    """Least congruence collapsing a and b.

    Worklist closure: whenever two classes merge through a pair (x, y),
    the translated pairs (x op z, y op z) are queued for both operations.
    Translates of further pairs inside a class follow by transitivity, so
    queuing only the merging pairs is enough.
    """
    n = lat.n
    if not (0 <= a < n and 0 <= b < n):
        raise NotAnEdge(f"elements ({a},{b}) out of range")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    meet = lat.meet_table
    join = lat.join_table
    work = [(a, b)]
    while work:
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        mx, my = meet[x], meet[y]
        jx, jy = join[x], join[y]
        for z in range(n):
            if mx[z] != my[z]:
                work.append((mx[z], my[z]))
            if jx[z] != jy[z]:
                work.append((jx[z], jy[z]))
    return Congruence(find(x) for x in range(n))


def is_congruence(lat: Lattice, partition) -> bool:
    """Direct check that a partition is a congruence.

    partition is a length-n sequence of block labels (a Congruence is
    accepted).  Checks compatibility of every collapsed pair with meet
    and join against every element, and convexity of every block.  Slow
    on purpose: this is the oracle the fast counting is tested against.
    """
    labels = list(partition.block) if isinstance(partition, Congruence) else list(partition)
    n = lat.n
    if len(labels) != n:
        return False
    meet = lat.meet_table
    join = lat.join_table
    for x in range(n):
        for y in range(x + 1, n):
            if labels[x] != labels[y]:
                continue
            for z in range(n):
                if labels[meet[x][z]] != labels[meet[y][z]]:
                    return False
                if labels[join[x][z]] != labels[join[y][z]]:
                    return False
            if lat.leq(x, y):
                for z in _bits(lat.up[x] & lat.down[y]):
                    if labels[z] != labels[x]:
                        return False
    return True


def foot(lat: Lattice, a: int, b: int) -> frozenset[int]:
    """Minimal elements of the down-set difference of an edge (a, b).

    Every member is join-irreducible, and the jipair of any member
    generates the same principal congruence as (a, b).
    """
    _require_edge(lat, (a, b))
    diff = lat.down[b] & ~lat.down[a]
    return frozenset(z for z in _bits(diff) if lat.down[z] & diff == 1 << z)


def jipair(lat: Lattice, x: int) -> tuple[int, int]:
    """The edge (unique lower cover of x, x) of a join-irreducible x."""
    lcs = lat.lc[x]
    if len(lcs) != 1:
        raise NotAnEdge(f"element {x} has {len(lcs)} lower covers, need exactly 1")
    return (lcs[0], x)


def nu_leq(lat: Lattice, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Edge quasiorder: does con(e1) <= con(e2) hold?

    Equivalent to e1 being collapsed by the principal congruence of e2.
    """
    x, y = _require_edge(lat, e1)
    _require_edge(lat, e2)
    return principal_congruence(lat, *e2).collapses(x, y)


def gratzer_reachable(lat: Lattice, target: tuple[int, int],
                      source: tuple[int, int]) -> bool:
    """Edge reachability by perspectivity steps, shrinking after each hop.

    One step from an edge (x, y): pick any interval [c, d] perspective to
    [x, y] upward (y join c = d, y meet c = x) or downward (d join x = y,
    d meet x = c), then continue from any edge inside [c, d].  The empty
    sequence counts, so every edge reaches itself.  Agrees with nu_leq of
    (target, source); the two are cross-checked in the test suite.
    """
    source = _require_edge(lat, source)
    target = _require_edge(lat, target)
    n = lat.n
    meet = lat.meet_table
    join = lat.join_table
    seen = {source}
    queue = [source]
    while queue:
        if target in seen:
            return True
        x, y = queue.pop()
        spans = []
        for c in range(n):
            if meet[y][c] == x:
                spans.append((c, join[y][c]))
        for d in range(n):
            if join[d][x] == y:
                spans.append((meet[d][x], d))
        for c, d in spans:
            if (c, d) == (x, y):
                continue
            inside = lat.up[c] & lat.down[d]
            for edge in lat.covers:
                if edge in seen:
                    continue
                p, q = edge
                if inside >> p & 1 and inside >> q & 1:
                    seen.add(edge)
                    queue.append(edge)
    return target in seen


@dataclass(frozen=True)
class JirConPoset:
    """Poset of the distinct principal congruences of jipair edges.

    representatives[i] is the least edge (lexicographically) generating
    the i-th congruence; leq[i][j] means congruence i is below j.  Its
    down-closed subsets are in bijection with the congruences of the
    lattice, which is how con_count works.
    """

    representatives: tuple[tuple[int, int], ...]
    congruences: tuple[Congruence, ...]
    leq: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def down_masks(self) -> tuple[int, ...]:
        m = self.size
        return tuple(
            sum(1 << j for j in range(m) if self.leq[j][i]) for i in range(m)
        )


def jir_con_poset(lat: Lattice) -> JirConPoset:
    by_con: dict[Congruence, tuple[int, int]] = {}
    for x in sorted(lat.element_sets().jir):
        edge = jipair(lat, x)
        theta = principal_congruence(lat, *edge)
        if theta not in by_con or edge < by_con[theta]:
            by_con[theta] = edge
    items = sorted(by_con.items(), key=lambda kv: kv[1])
    cons = tuple(theta for theta, _ in items)
    reps = tuple(edge for _, edge in items)
    leq = tuple(
        tuple(ci.refines(cj) for cj in cons) for ci in cons
    )
    return JirConPoset(representatives=reps, congruences=cons, leq=leq)


def count_ideals(poset) -> int:
    """Number of down-closed subsets of a finite poset.

    Accepts a JirConPoset or a sequence of down-set bitmasks (mask i
    holds the elements <= i, including i).  Splits on one element per
    step, memoizing on the remaining-element mask: the ideals containing
    x are the ideals with the down-set of x removed, the others are the
    ideals with its up-set removed.
    """
    masks = poset.down_masks if isinstance(poset, JirConPoset) else tuple(poset)
    m = len(masks)
    ups = [0] * m
    for i in range(m):
        for j in range(m):
            if masks[j] >> i & 1:
                ups[i] |= 1 << j
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        x = max(_bits(mask), key=lambda v: ((masks[v] | ups[v]) & mask).bit_count())
        r = rec(mask & ~masks[x]) + rec(mask & ~ups[x])
        memo[mask] = r
        return r

    return rec((1 << m) - 1)


def con_count(lat: Lattice) -> int:
    """|Con L|, counted as ideals of the principal congruence poset."""
    return count_ideals(jir_con_poset(lat))


def cd(lat: Lattice) -> Density:
    """Congruence density: |Con L| over 2**(n-1), exactly."""
    return Density(con_count(lat), lat.n - 1)


def all_congruences(lat: Lattice, limit: int = 10) -> list[Congruence]:
    """Materialize Con L, one partition per ideal of the jipair poset.

    Guarded: the result can have up to 2**(n-1) entries, so lattices with
    n past the limit raise TooLarge.
    """
    if lat.n > limit:
        raise TooLarge(f"n={lat.n} exceeds the limit {limit} for materializing Con L")
    poset = jir_con_poset(lat)
    masks = poset.down_masks
    m = poset.size
    identity = Congruence(range(lat.n))
    out = []
    for sub in range(1 << m):
        if any(masks[i] & ~sub for i in _bits(sub)):
            continue
        theta = identity
        for i in _bits(sub):
            theta = theta.join(poset.congruences[i])
        out.append(theta)
    out.sort(key=lambda c: c.block)
    return out
