"""Shared test utilities: slow oracles and randomized constructions."""

from __future__ import annotations

import random
from typing import Iterator

from latdens import Lattice, from_covers


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of range(n) as a restricted growth string.

    Entry i is the block label of element i and labels appear in first
    occurrence order, so each partition shows up exactly once.  The
    count of emitted strings is the n-th Bell number.
    """
    if n == 0:
        yield ()
        return
    code = [0] * n

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(code)
            return
        for label in range(used + 1):
            code[i] = label
            yield from rec(i + 1, max(used, label + 1))

    yield from rec(1, 1)


def random_relabel(lat: Lattice, rng: random.Random) -> Lattice:
    """Relabel along a random linear extension of the cover order."""
    pending = {x: set() for x in range(lat.n)}
    for a, b in lat.covers:
        pending[b].add(a)
    ready = sorted(x for x in range(lat.n) if not pending[x])
    new = {}
    for i in range(lat.n):
        x = ready.pop(rng.randrange(len(ready)))
        new[x] = i
        for y, below in pending.items():
            below.discard(x)
            if y not in new and not below and y not in ready:
                ready.append(y)
    covers = sorted((new[a], new[b]) for a, b in lat.covers)
    return from_covers(lat.n, tuple(covers))


def _removable(lat: Lattice, alive: set[int], x: int) -> bool:
    others = [y for y in alive if y != x]
    for i, u in enumerate(others):
        for v in others[i + 1:]:
            if lat.meet(u, v) == x or lat.join(u, v) == x:
                return False
    return True


def random_sublattice(lat: Lattice, rng: random.Random,
                      max_removals: int) -> set[int]:
    """Shrink the element set by repeatedly dropping a removable element.

    An element is removable when no surviving pair meets or joins to it,
    so the survivors stay closed under meet and join at every step and
    the removal order is a one-at-a-time dismantling sequence.
    """
    alive = set(range(lat.n))
    for _ in range(max_removals):
        inner = [x for x in alive if x not in (lat.bottom, lat.top)]
        rng.shuffle(inner)
        for x in inner:
            if _removable(lat, alive, x):
                alive.discard(x)
                break
        else:
            break
    return alive


def brute_force_congruences(lat: Lattice):
    """All congruences of lat by filtering every set partition."""
    from latdens import Congruence, is_congruence

    return [Congruence(p) for p in set_partitions(lat.n)
            if is_congruence(lat, p)]
