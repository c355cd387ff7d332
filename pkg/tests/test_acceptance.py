"""Acceptance suite.

One test_cN block per criterion; the conftest hook condenses the
results into one ACCEPTANCE line per criterion at the end of the run.
Everything asserts exact rational equality.  Criteria marked optional
in the brief are gated behind LATDENS_SLOW / LATDENS_N9 so the default
run stays fast.
"""

from __future__ import annotations

import os
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from latdens import (
    THRESHOLD,
    Density,
    all_lattices,
    b4,
    bottom_edges,
    c2xc3,
    cd,
    chain,
    circle,
    circle_members,
    classify,
    con_count,
    core,
    dismantle_chain,
    edge_gluing,
    fig3,
    fig5,
    foot,
    glued_sum,
    gratzer_reachable,
    is_congruence,
    jipair,
    lcd,
    m,
    n5,
    n55,
    n6,
    n6p,
    nu_leq,
    principal_congruence,
    r6,
    slow_all_lattices,
    sublattice_of,
    top_edges,
    verify_freese,
    verify_jm,
    verify_lcd,
    verify_main,
    verify_width_conjecture,
)
from helpers import random_sublattice, set_partitions

RUN_SLOW = os.environ.get("LATDENS_SLOW") == "1"
RUN_N9 = os.environ.get("LATDENS_N9") == "1"


# --- criterion 1: the density table ---------------------------------------

def _circle_density(n: int) -> Density:
    return Density(2 ** (n - 4) + 3, n - 1)


def _all_edge_gluings(lower, upper):
    for te in top_edges(lower):
        for be in bottom_edges(upper):
            yield edge_gluing(lower, te, upper, be)


def test_c1_density_table_all_17_classes():
    start = time.monotonic()
    rows = [
        ("E1", chain(7), Density(1, 0)),
        ("E2", b4(), Density(1, 1)),
        ("E3", n5(), Density(5, 4)),
        ("E4", c2xc3(), Density(1, 2)),
        ("E5", glued_sum(b4(), b4()), Density(1, 2)),
        ("C2", m(3), Density(1, 3)),
        ("C4", n55(), Density(7, 6)),
    ]
    for member in circle_members(6):
        rows.append(("E6", member, Density(7, 5)))
    for member in circle_members(7):
        rows.append(("E7", member, Density(11, 6)))
    for size in range(8, 12):
        for member in circle_members(size):
            rows.append(("E10", member, _circle_density(size)))
    for lower, upper in ((b4(), n5()), (n5(), b4())):
        for glued in _all_edge_gluings(lower, upper):
            rows.append(("E8", glued, Density(5, 5)))
    rows.append(("E9", glued_sum(b4(), n5()), Density(5, 5)))
    rows.append(("E9", glued_sum(n5(), b4()), Density(5, 5)))
    for i in range(1, 6):
        rows.append(("C3", fig3(i), Density(1, 3)))
    for member in circle_members(6):
        rows.append(("C5", glued_sum(b4(), member), Density(7, 6)))
        rows.append(("C5", glued_sum(member, b4()), Density(7, 6)))
    for i in range(1, 7):
        rows.append(("C6", fig5(i), Density(7, 6)))
    for glued in _all_edge_gluings(n5(), n5()):
        rows.append(("C7", glued, Density(13, 7)))
    rows.append(("C8", glued_sum(n5(), n5()), Density(25, 8)))

    seen = set()
    for label, lat, expected in rows:
        seen.add(label)
        assert cd(lat) == expected, (label, lat.covers)
        got = classify(lat)
        assert got.label == label, (label, got, lat.covers)
        assert got.expected_cd == expected
        if label in ("E6", "E7", "E10"):
            assert got.parameter == lat.n
    assert len(seen) == 17
    assert time.monotonic() - start < 1.0


# --- criterion 2: the six-element witness at the threshold ------------------

def test_c2_sharpness_witness():
    start = time.monotonic()
    lat = r6()
    assert con_count(lat) == 3
    assert cd(lat) == Density(3, 5)
    assert cd(lat).as_fraction() == Fraction(3, 32)
    sets = lat.element_sets()
    assert len(sets.jir) == 3
    assert len(sets.mir) == 4
    hits = [cand for cand in all_lattices(6)
            if len(cand.element_sets().jir) == 3
            and len(cand.element_sets().mir) == 4
            and con_count(cand) == 3]
    assert len(hits) == 1
    assert hits[0].is_isomorphic(lat)
    assert time.monotonic() - start < 1.0


# --- criterion 3: gluing a six-circle and a five-circle ---------------------

def test_c3_double_circle_gluing():
    start = time.monotonic()
    checked = 0
    for six in circle_members(6):
        for five in circle_members(5):
            pairs = [(six, five), (five, six)]
            for lower, upper in pairs:
                for lat in _all_edge_gluings(lower, upper):
                    assert lat.n == 9
                    assert con_count(lat) == 19
                    assert cd(lat) == Density(19, 8)
                    assert cd(lat).over64_str() == "4.75/64"
                    checked += 1
    assert checked >= 8
    assert time.monotonic() - start < 1.0


# --- criterion 4: the census ------------------------------------------------

EXPECTED_COUNTS = (1, 1, 1, 2, 5, 15, 53, 222)


def test_c4_census_counts():
    start = time.monotonic()
    for n, expected in enumerate(EXPECTED_COUNTS, start=1):
        assert sum(1 for _ in all_lattices(n)) == expected
    assert time.monotonic() - start < 120.0


def test_c4_census_against_slow_oracle():
    for n in range(1, 7):
        fast = {lat.canonical_form() for lat in all_lattices(n)}
        slow = {lat.canonical_form() for lat in slow_all_lattices(n)}
        assert fast == slow


@pytest.mark.skipif(not RUN_SLOW, reason="set LATDENS_SLOW=1 to run the "
                    "seven-element slow oracle")
def test_c4_census_against_slow_oracle_n7():
    fast = {lat.canonical_form() for lat in all_lattices(7)}
    slow = {lat.canonical_form() for lat in slow_all_lattices(7)}
    assert fast == slow


# --- criterion 5: the largest-density table ---------------------------------

def test_c5_lcd_table():
    report = verify_lcd(8)
    assert report.ok, report.failures
    # pinned rows, spot checked directly
    assert lcd(4, 2) == Density(1, 1)
    assert lcd(5, 3) == Density(5, 4)
    assert lcd(6, 4) == Density(1, 2)
    assert lcd(6, 5) == Density(7, 5)
    assert lcd(7, 6) == Density(11, 6)
    assert lcd(7, 7) == Density(5, 5)
    assert lcd(8, 8) == Density(19, 7)
    # tail rows at n = 8
    assert lcd(8, 9) == Density(1, 3)
    assert lcd(8, 10) == Density(7, 6)
    assert lcd(8, 11) == Density(13, 7)
    # undefined cells stay undefined
    assert lcd(3, 2) is None
    assert lcd(4, 3) is None


@pytest.mark.skipif(not RUN_N9, reason="set LATDENS_N9=1 to check the "
                    "nine-element tail of the table")
def test_c5_lcd_tail_n9():
    assert lcd(9, 10) == Density(1, 3)
    assert lcd(9, 11) == Density(7, 6)
    assert lcd(9, 12) == Density(13, 7)
    assert lcd(9, 13) == Density(25, 8)


# --- criterion 6: classification round-trip ---------------------------------

ABOVE_THRESHOLD_DENSITIES = {
    Density(1, 0), Density(1, 1), Density(5, 4), Density(1, 2),
    Density(7, 5), Density(11, 6), Density(5, 5), Density(19, 7),
    Density(1, 3), Density(7, 6), Density(13, 7),
}


def test_c6_round_trip_full_census():
    report = verify_main(8)
    assert report.ok, report.failures[:5]
    above = {cd(lat) for n in range(1, 9) for lat in all_lattices(n)
             if cd(lat) > THRESHOLD}
    assert above == ABOVE_THRESHOLD_DENSITIES


@pytest.mark.skipif(not RUN_N9, reason="set LATDENS_N9=1 to rerun the "
                    "round-trip over the nine-element census")
def test_c6_round_trip_n9():
    report = verify_main(9)
    assert report.ok, report.failures[:5]


# --- criterion 7: degree profiles above the threshold -----------------------

def test_c7_degree_profile_balance():
    report = verify_jm(8)
    assert report.ok, report.failures[:5]
    assert any("r6" in note for note in report.notes)
    # independent restatement: per-k cover-degree histograms must agree
    for n in range(2, 9):
        for lat in all_lattices(n):
            if cd(lat) > THRESHOLD:
                down = Counter(len(lat.lower_covers(x)) for x in range(lat.n))
                up = Counter(len(lat.upper_covers(x)) for x in range(lat.n))
                assert down == up, lat.covers


# --- criterion 8: property suites -------------------------------------------

def test_c8_freese_bound():
    report = verify_freese(8)
    assert report.ok, report.failures[:5]
    for n in range(1, 7):
        for lat in all_lattices(n):
            count = con_count(lat)
            bound = 2 ** (lat.n - 1)
            assert count <= bound
            assert (count == bound) == lat.is_chain()


def test_c8_core_density_invariance():
    for n in range(1, 9):
        for lat in all_lattices(n):
            assert cd(core(lat).core) == cd(lat), lat.covers


def test_c8_glued_sum_multiplicativity():
    rng = random.Random(20260817)
    pool = [b4(), n5(), m(3), n6(), n6p(), n55(), c2xc3(), r6(),
            chain(2), chain(3), chain(5), circle(7, 1)]
    for _ in range(200):
        parts = [rng.choice(pool) for _ in range(rng.randint(2, 4))]
        total = parts[0]
        expected = cd(parts[0])
        for part in parts[1:]:
            total = glued_sum(total, part)
            expected = expected * cd(part)
        assert cd(total) == expected


def test_c8_reachability_matches_nu():
    for n in range(2, 8):
        for lat in all_lattices(n):
            for e1 in lat.edges:
                for e2 in lat.edges:
                    assert gratzer_reachable(lat, e1, e2) == \
                        nu_leq(lat, e1, e2), (lat.covers, e1, e2)


def test_c8_brute_force_congruence_count():
    for n in range(1, 8):
        for lat in all_lattices(n):
            brute = sum(1 for p in set_partitions(lat.n)
                        if is_congruence(lat, p))
            assert brute == con_count(lat), lat.covers


def test_c8_foot_edges_generate_the_same_congruence():
    for n in range(2, 9):
        for lat in all_lattices(n):
            jir = lat.element_sets().jir
            for a, b in lat.edges:
                theta = principal_congruence(lat, a, b)
                feet = foot(lat, a, b)
                assert feet and feet <= jir
                for witness in feet:
                    edge = jipair(lat, witness)
                    assert principal_congruence(lat, *edge) == theta


def test_c8_dismantle_monotonicity():
    rng = random.Random(31741)
    pool = [lat for n in range(5, 9) for lat in all_lattices(n)]
    done = 0
    while done < 100:
        lat = rng.choice(pool)
        alive = random_sublattice(lat, rng, max_removals=rng.randint(1, 3))
        if len(alive) == lat.n:
            continue
        assert dismantle_chain(lat, alive)
        sub = sublattice_of(lat, alive)
        assert cd(lat) <= cd(sub), (lat.covers, sorted(alive))
        done += 1


def test_c8_edge_gluing_halving_dichotomy():
    for host in (b4(), n5(), c2xc3()):
        half = cd(host).halved()
        for k in range(4, 8):
            for member in circle_members(k):
                for lower, upper in ((host, member), (member, host)):
                    for glued in _all_edge_gluings(lower, upper):
                        value = cd(glued)
                        assert value <= half
                        assert (value == half) == (k == 4), \
                            (host.covers, k, glued.covers)


# --- criterion 9: width-bound scan -------------------------------------------

def test_c9_width_bound_scan():
    report = verify_width_conjecture(8)
    # a violation would be a finding to report, but none is expected
    assert report.ok, report.failures[:5]
