"""Glued sums, edge gluings, and the chain-free core of a lattice.

A glued sum stacks one lattice on top of another, identifying the top of
the lower with the bottom of the upper.  An edge gluing overlaps the two
in a shared two-element edge instead.  The cut points of the canonical
decomposition are read off the elements comparable with everything.
"""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import Lattice, LatticeError, from_covers, _bits, sublattice_of


class NotATopEdge(LatticeError):
    """The left gluing edge must be a cover pair ending at the top."""


class NotABottomEdge(LatticeError):
    """The right gluing edge must be a cover pair starting at the bottom."""


class Singleton(LatticeError):
    """The one-element lattice has no glued-sum decomposition."""


class NotACoreLattice(LatticeError):
    """The operation is only defined for lattices without chain summands."""


def top_edges(lat: Lattice) -> tuple[tuple[int, int], ...]:
    """Cover pairs whose upper end is the top, in ascending order."""
    return tuple((x, lat.top) for x in sorted(lat.lc[lat.top]))


def bottom_edges(lat: Lattice) -> tuple[tuple[int, int], ...]:
    """Cover pairs whose lower end is the bottom, in ascending order."""
    return tuple((lat.bottom, y) for y in sorted(lat.uc[lat.bottom]))


def glued_sum(lower: Lattice, upper: Lattice) -> Lattice:
    """Stack upper on lower, identifying lower's top with upper's bottom.

    The result has |lower| + |upper| - 1 elements; summing with the
    one-element lattice changes nothing.
    """
    shift = lower.n - 1
    pairs = list(lower.covers)
    pairs.extend((i + shift, j + shift) for (i, j) in upper.covers)
    return from_covers(lower.n + upper.n - 1, pairs)


def edge_gluing(lower: Lattice, top_edge: tuple[int, int],
                upper: Lattice, bottom_edge: tuple[int, int]) -> Lattice:
    """Overlap the two lattices in one shared edge.

    top_edge = (x, top of lower) is identified with bottom_edge =
    (bottom of upper, y): x with upper's bottom and lower's top with y.
    The remaining elements of upper are appended after lower's, in their
    own index order, so the result stays a linear extension.  The result
    has |lower| + |upper| - 2 elements and is validated on construction.
    """
    x, t = top_edge
    if t != lower.top or not lower.is_edge(x, t):
        raise NotATopEdge(f"({x},{t}) is not an edge ending at the top {lower.top}")
    z, y = bottom_edge
    if z != upper.bottom or not upper.is_edge(z, y):
        raise NotABottomEdge(f"({z},{y}) is not an edge starting at the bottom")

    relabel = {0: x, y: lower.top}
    nxt = lower.n
    for e in range(1, upper.n):
        if e != y:
            relabel[e] = nxt
            nxt += 1
    pairs = set(lower.covers)
    pairs.update((relabel[i], relabel[j]) for (i, j) in upper.covers)
    return from_covers(lower.n + upper.n - 2, sorted(pairs))


@dataclass(frozen=True)
class GluedSumDecomposition:
    """Cut points 0 = u_0 < ... < u_h = top and the summand intervals.

    summands[i] is the interval [u_i, u_{i+1}] as its own lattice.  Each
    summand is either a chain (a maximal run of covers among the
    all-comparable elements) or has no all-comparable elements besides
    its endpoints.
    """

    cut_points: tuple[int, ...]
    summands: tuple[Lattice, ...]


def canonical_decomposition(lat: Lattice) -> GluedSumDecomposition:
    """Split the lattice into glued-sum summands at its cut points.

    The elements comparable with everything form a chain through bottom
    and top.  A maximal run of consecutive covers inside that chain is
    collapsed into a single chain summand; between two neighbors that do
    not cover each other lies one summand with a nonempty interior and no
    other all-comparable elements.  Raises Singleton for n = 1.
    """
    if lat.n == 1:
        raise Singleton("no decomposition for the one-element lattice")
    nar = sorted(lat.element_sets().nar)
    cuts = [nar[0]]
    i = 0
    while i + 1 < len(nar):
        j = i + 1
        if lat.is_edge(nar[i], nar[j]):
            while j + 1 < len(nar) and lat.is_edge(nar[j], nar[j + 1]):
                j += 1
        cuts.append(nar[j])
        i = j
    summands = tuple(lat.interval(cuts[k], cuts[k + 1])
                     for k in range(len(cuts) - 1))
    return GluedSumDecomposition(cut_points=tuple(cuts), summands=summands)


@dataclass(frozen=True)
class CoreResult:
    """The chain-free core and the classes of its summands.

    core is the glued sum of the non-chain summands, the one-element
    lattice when there are none.  summand_classes is the multiset of
    their canonical forms, as a sorted tuple.
    """

    core: Lattice
    summand_classes: tuple[tuple[tuple[int, int], ...], ...]


def core(lat: Lattice) -> CoreResult:
    """Drop the chain summands; the density only depends on what is left."""
    if lat.n == 1:
        return CoreResult(core=lat, summand_classes=())
    keep = [s for s in canonical_decomposition(lat).summands if not s.is_chain()]
    if not keep:
        return CoreResult(core=from_covers(1, ()), summand_classes=())
    merged = keep[0]
    for s in keep[1:]:
        merged = glued_sum(merged, s)
    classes = tuple(sorted(s.canonical_form() for s in keep))
    return CoreResult(core=merged, summand_classes=classes)


def is_core_lattice(lat: Lattice) -> bool:
    """True when no summand is a chain, so the lattice equals its core.

    The one-element lattice counts as a core lattice.
    """
    if lat.n == 1:
        return True
    nar = sorted(lat.element_sets().nar)
    return not any(lat.is_edge(a, b) for a, b in zip(nar, nar[1:]))


def rgsiso(first: Lattice, second: Lattice) -> bool:
    """Equality of summand class multisets, for core lattices only.

    Two core lattices are related exactly when their glued-sum summands
    can be matched up to isomorphism, order ignored.  Non-core inputs
    raise NotACoreLattice.
    """
    for lat in (first, second):
        if not is_core_lattice(lat):
            raise NotACoreLattice(
                f"lattice with covers {list(lat.covers)} has a chain summand")
    return core(first).summand_classes == core(second).summand_classes


def dismantle_chain(lat: Lattice, elems) -> bool:
    """Can the lattice shrink onto the given sublattice one element at a time?

    Every intermediate step must remain a sublattice, so a removed
    element must not be the meet or the join of two surviving elements.
    elems must induce a sublattice (NotASublattice otherwise).  The
    search backtracks over removal orders, memoizing dead states.
    """
    sublattice_of(lat, elems)
    target = 0
    for e in set(elems):
        target |= 1 << e
    dead: set[int] = set()

    def removable(mask: int, x: int) -> bool:
        rest = mask & ~(1 << x)
        for a in _bits(rest):
            meets = lat.meet_table[a]
            joins = lat.join_table[a]
            for b in _bits(rest & ~((1 << (a + 1)) - 1)):
                if meets[b] == x or joins[b] == x:
                    return False
        return True

    def rec(mask: int) -> bool:
        if mask == target:
            return True
        if mask in dead:
            return False
        for x in _bits(mask & ~target):
            if removable(mask, x) and rec(mask & ~(1 << x)):
                return True
        dead.add(mask)
        return False

    return rec((1 << lat.n) - 1)
