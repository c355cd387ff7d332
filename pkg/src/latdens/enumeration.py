"""Exhaustive census of small lattices and census-wide verification.

The census is grown size by size through meet-semilattices: removing the
top of an n-element lattice leaves an (n-1)-element meet-semilattice,
and capping a meet-semilattice with a new top is the inverse, so the two
isomorphism problems coincide.  Semilattices in turn are grown one
maximal element at a time along a linear extension, with canonical
relabeling to drop duplicates at every step.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .congruence import Density, cd, con_count
from .lattice import (BadParameter, Lattice, LatticeError, TooLarge, _bits,
                      canonical_poset_covers, from_covers)

#: all_lattices refuses bigger sizes unless max_n raises the limit.
DEFAULT_MAX_N = 9

#: Census sizes for up to ten elements; the values are well known.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222,
                9: 1078, 10: 5994}


def _masks(k: int, covers) -> tuple[list[int], list[int]]:
    """Down and up bitmasks (self included) of an ascending cover DAG."""
    down = [1 << x for x in range(k)]
    for i, j in sorted(covers):
        down[j] |= down[i]
    up = [1 << x for x in range(k)]
    for i, j in sorted(covers, reverse=True):
        up[i] |= up[j]
    return down, up


@lru_cache(maxsize=None)
def _meet_semilattices(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Canonical cover lists of all k-element meet-semilattices.

    A new maximal element is attached to each (k-1)-element semilattice
    over every nonempty cover antichain c.  Writing d for the union of
    the down-sets of c, the new meets exist exactly when d meets the
    down-set of every old element outside d in a set with a greatest
    element; old meets are untouched since nothing is added below.
    """
    if k == 1:
        return ((),)
    m = k - 1
    out: set[tuple[tuple[int, int], ...]] = set()
    for covers in _meet_semilattices(m):
        down, up = _masks(m, covers)
        sups = [up[x] ^ (1 << x) for x in range(m)]
        for cmask in range(1, 1 << m):
            members = list(_bits(cmask))
            if any(down[c] & cmask != 1 << c for c in members):
                continue
            dmask = 0
            for c in members:
                dmask |= down[c]
            ok = True
            for x in range(m):
                if dmask >> x & 1:
                    continue
                t = dmask & down[x]
                found = 0
                for z in _bits(t):
                    if not t & sups[z]:
                        found += 1
                        if found > 1:
                            break
                if found != 1:
                    ok = False
                    break
            if ok:
                child = covers + tuple((c, m) for c in members)
                out.add(canonical_poset_covers(k, child))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[Lattice, ...]:
    if n == 1:
        return (from_covers(1, ()),)
    lats = []
    for covers in _meet_semilattices(n - 1):
        down, up = _masks(n - 1, covers)
        maxima = [x for x in range(n - 1) if up[x] == 1 << x]
        lats.append(from_covers(n, covers + tuple((x, n - 1) for x in maxima)))
    lats.sort(key=lambda lat: lat.canonical_form())
    return tuple(lats)


def _census_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"census-{n:02d}.txt")


def _read_census(cache_dir: str, n: int) -> tuple[Lattice, ...] | None:
    try:
        with open(_census_path(cache_dir, n), encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError:
        return None
    lats = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        pairs = [] if line == "-" else \
            [tuple(int(v) for v in tok.split("-")) for tok in line.split()]
        lats.append(from_covers(n, pairs))
    return tuple(lats) if lats else None


def _write_census(cache_dir: str, n: int, lats: tuple[Lattice, ...]) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    with open(_census_path(cache_dir, n), "w", encoding="ascii") as fh:
        fh.write(f"# lattices with {n} elements, one cover list per line\n")
        for lat in lats:
            line = " ".join(f"{i}-{j}" for (i, j) in lat.covers)
            fh.write((line or "-") + "\n")


def all_lattices(n: int, max_n: int | None = None,
                 cache_dir: str | None = None) -> tuple[Lattice, ...]:
    """Every lattice with n elements, one per isomorphism class.

    The result is sorted by canonical form.  Sizes above max_n (default
    DEFAULT_MAX_N) raise TooLarge since the census grows fast.  With
    cache_dir the census is stored as plain text and reused.
    """
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise TooLarge(f"census of size {n} exceeds the limit {cap}")
    if cache_dir is not None:
        cached = _read_census(cache_dir, n)
        if cached is not None:
            return cached
    lats = _census(n)
    if cache_dir is not None:
        _write_census(cache_dir, n, lats)
    return lats


def slow_all_lattices(n: int) -> tuple[Lattice, ...]:
    """Reference census: try every ascending cover list on 0..n-1.

    Exponential in n*(n-1)/2 candidate lists; meant only to cross-check
    all_lattices on very small sizes.
    """
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if n == 1:
        return (from_covers(1, ()),)
    allpairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: dict[tuple[tuple[int, int], ...], Lattice] = {}
    for mask in range(1 << len(allpairs)):
        lcnt = [0] * n
        ucnt = [0] * n
        for b in _bits(mask):
            i, j = allpairs[b]
            ucnt[i] += 1
            lcnt[j] += 1
        # Ascending labels force bottom 0 and top n-1, so every other
        # element needs a cover on each side.  This only skips losers.
        if any(lcnt[x] == 0 for x in range(1, n)):
            continue
        if any(ucnt[x] == 0 for x in range(n - 1)):
            continue
        try:
            lat = from_covers(n, [allpairs[b] for b in _bits(mask)])
        except LatticeError:
            continue
        seen.setdefault(lat.canonical_form(), lat)
    return tuple(seen[form] for form in sorted(seen))


# -- largest densities ---------------------------------------------------


def lcd(n: int, k: int, max_n: int | None = None,
        cache_dir: str | None = None) -> Density | None:
    """The k-th largest distinct congruence density on n elements.

    None when fewer than k distinct densities occur.  Gluing a chain on
    top never changes the density, so the answer is the same over
    lattices with at most n elements.
    """
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    if k < 1:
        raise BadParameter(f"need k >= 1, got {k}")
    distinct = {cd(lat) for lat in all_lattices(n, max_n=max_n,
                                                cache_dir=cache_dir)}
    ordered = sorted(distinct, reverse=True)
    return ordered[k - 1] if k <= len(ordered) else None


@lru_cache(maxsize=1)
def _pinned_lcd() -> dict[tuple[int, int], Density | None]:
    # Closed forms for lcd, used as the oracle by verify_lcd.  None
    # records a pair pinned as undefined.
    pins: dict[tuple[int, int], Density | None] = {}
    for n in range(1, 13):
        pins[(n, 1)] = Density(1, 0)
        if n >= 4:
            pins[(n, 2)] = Density(1, 1)
        if n >= 5:
            pins[(n, 3)] = Density(5, 4)
        if n >= 6:
            pins[(n, 4)] = Density(1, 2)
            pins[(n, 5)] = Density(7, 5)
        if n >= 7:
            pins[(n, 6)] = Density(11, 6)
            pins[(n, 7)] = Density(5, 5)
        for k in range(8, n + 1):
            pins[(n, k)] = Density((1 << (k - 4)) + 3, k - 1)
    pins[(1, 2)] = None
    pins[(2, 2)] = None
    pins[(3, 2)] = None
    pins[(4, 3)] = None
    pins[(8, 9)] = Density(1, 3)
    pins[(8, 10)] = Density(7, 6)
    pins[(8, 11)] = Density(13, 7)
    for n in range(9, 13):
        pins[(n, n + 1)] = Density(1, 3)
        pins[(n, n + 2)] = Density(7, 6)
        pins[(n, n + 3)] = Density(13, 7)
        pins[(n, n + 4)] = Density(25, 8)
    return pins


def expected_lcd(n: int, k: int) -> Density | None:
    """The pinned value of lcd(n, k).

    Returns the closed-form Density, or None where the value is pinned
    as undefined.  Pairs outside the pinned table raise BadParameter.
    """
    try:
        return _pinned_lcd()[(n, k)]
    except KeyError:
        raise BadParameter(f"no pinned value for lcd({n}, {k})") from None


# -- verification suites -------------------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification suite over the census."""

    suite: str
    checked: int
    failures: tuple[str, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "ok" if self.ok else f"FAILED ({len(self.failures)})"
        return f"verify {self.suite}: {self.checked} checks, {state}"


def verify_counts(max_n: int = 8, oracle_max: int = 6,
                  cache_dir: str | None = None) -> VerifyReport:
    """Census sizes against the known counts, and against the slow census.

    The brute-force cross-check runs for sizes up to oracle_max; it gets
    expensive very quickly.
    """
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        lats = all_lattices(n, max_n=n, cache_dir=cache_dir)
        if n in KNOWN_COUNTS:
            checked += 1
            if len(lats) != KNOWN_COUNTS[n]:
                failures.append(
                    f"census({n}) has {len(lats)} classes, known {KNOWN_COUNTS[n]}")
        if n <= oracle_max:
            checked += 1
            fast = [lat.canonical_form() for lat in lats]
            slow = [lat.canonical_form() for lat in slow_all_lattices(n)]
            if fast != slow:
                failures.append(
                    f"census({n}) disagrees with the brute-force census")
    return VerifyReport("counts", checked, tuple(failures))


def verify_lcd(max_n: int = 8, cache_dir: str | None = None) -> VerifyReport:
    """lcd against every pinned closed form with n <= max_n."""
    checked = 0
    failures = []
    for (n, k) in sorted(_pinned_lcd()):
        if n > max_n:
            continue
        expected = expected_lcd(n, k)
        got = lcd(n, k, max_n=n, cache_dir=cache_dir)
        checked += 1
        if got != expected:
            failures.append(f"lcd({n},{k}) = {got}, pinned {expected}")
    return VerifyReport("lcd", checked, tuple(failures))


def _degree_histograms(lat: Lattice) -> tuple[list[int], list[int]]:
    ups = sorted(len(lat.uc[x]) for x in range(lat.n))
    downs = sorted(len(lat.lc[x]) for x in range(lat.n))
    return ups, downs


def verify_jm(max_n: int = 8, cache_dir: str | None = None) -> VerifyReport:
    """Above 6/64 the up and down cover degree histograms agree.

    Also checks sharpness: the catalog lattice r6 sits exactly at 6/64
    with differing histograms, so the bound cannot be raised.
    """
    from .catalog import THRESHOLD, r6

    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for lat in all_lattices(n, max_n=n, cache_dir=cache_dir):
            if cd(lat) <= THRESHOLD:
                continue
            checked += 1
            ups, downs = _degree_histograms(lat)
            if ups != downs:
                failures.append(
                    f"degree histograms differ above 6/64: covers={lat.covers}")
    witness = r6()
    checked += 1
    if cd(witness) != THRESHOLD:
        failures.append(f"r6 has cd {cd(witness)}, expected exactly 6/64")
    checked += 1
    ups, downs = _degree_histograms(witness)
    if ups == downs:
        failures.append("r6 degree histograms agree, sharpness witness broken")
    notes = ("sharpness: r6 sits at 6/64 exactly with 3 join- and "
             "4 meet-irreducibles",)
    return VerifyReport("jm", checked, tuple(failures), notes)


def _main_check(lat: Lattice) -> str | None:
    # Worker for verify_main, module level so process pools can pickle it.
    from .catalog import cross_check, matching_labels

    report = cross_check(lat)
    problems = list(report.problems)
    labels = matching_labels(lat)
    if len(labels) > 1:
        names = ",".join(label.label for label in labels)
        problems.append(f"matches several classes: {names}")
    if not problems:
        return None
    return f"n={lat.n} covers={lat.covers}: " + "; ".join(problems)


def verify_main(max_n: int = 8, jobs: int = 1,
                cache_dir: str | None = None) -> VerifyReport:
    """Classify the whole census and cross-check every label.

    Confirms that a class label appears exactly when the density is
    above 6/64, that the label pins the exact density, and that no
    lattice matches two classes.
    """
    lats: list[Lattice] = []
    for n in range(1, max_n + 1):
        lats.extend(all_lattices(n, max_n=n, cache_dir=cache_dir))
    if jobs > 1:
        chunk = max(1, len(lats) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_main_check, lats, chunksize=chunk))
    else:
        results = [_main_check(lat) for lat in lats]
    failures = tuple(line for line in results if line is not None)
    return VerifyReport("main", len(lats), failures)


def verify_freese(max_n: int = 8, cache_dir: str | None = None) -> VerifyReport:
    """Congruence count at most 2^(n-1), with equality only for chains."""
    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for lat in all_lattices(n, max_n=n, cache_dir=cache_dir):
            checked += 1
            count = con_count(lat)
            bound = 1 << (lat.n - 1)
            if count > bound:
                failures.append(f"count {count} beats {bound}: covers={lat.covers}")
            elif (count == bound) != lat.is_chain():
                failures.append(
                    f"equality holds iff chain fails: covers={lat.covers}")
    return VerifyReport("freese", checked, tuple(failures))


def verify_width_conjecture(max_n: int = 8,
                            cache_dir: str | None = None) -> VerifyReport:
    """Scan for cd above the bound cd(m(width)); a failure is a finding."""
    from .catalog import m

    checked = 0
    failures = []
    for n in range(1, max_n + 1):
        for lat in all_lattices(n, max_n=n, cache_dir=cache_dir):
            checked += 1
            if cd(lat) > cd(m(lat.width())):
                failures.append(
                    f"cd {cd(lat)} beats the width bound: covers={lat.covers}")
    return VerifyReport("width-conjecture", checked, tuple(failures))
