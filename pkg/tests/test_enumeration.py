"""Census generation, the density table, and the verification suites."""

from __future__ import annotations

import pytest

from latdens import (
    BadParameter,
    DEFAULT_MAX_N,
    Density,
    KNOWN_COUNTS,
    TooLarge,
    all_lattices,
    b4,
    cd,
    chain,
    expected_lcd,
    lcd,
    slow_all_lattices,
    verify_counts,
    verify_freese,
    verify_jm,
    verify_lcd,
    verify_main,
    verify_width_conjecture,
)


def test_counts_match_the_known_sequence():
    for n in range(1, 9):
        assert sum(1 for _ in all_lattices(n)) == KNOWN_COUNTS[n]


def test_small_cases_are_the_expected_lattices():
    assert list(all_lattices(1)) == [chain(1)]
    assert list(all_lattices(2)) == [chain(2)]
    assert list(all_lattices(3)) == [chain(3)]
    four = list(all_lattices(4))
    assert len(four) == 2
    assert any(lat.is_chain() for lat in four)
    assert any(lat.is_isomorphic(b4()) for lat in four)


def test_emitted_lattices_are_canonical_and_distinct():
    for n in range(1, 9):
        forms = [lat.canonical_form() for lat in all_lattices(n)]
        assert len(forms) == len(set(forms))
        for lat in all_lattices(n):
            assert lat.covers == lat.canonical_form()


def test_slow_oracle_agrees():
    for n in range(1, 6):
        fast = {lat.canonical_form() for lat in all_lattices(n)}
        slow = {lat.canonical_form() for lat in slow_all_lattices(n)}
        assert fast == slow


def test_size_guards():
    with pytest.raises(TooLarge):
        all_lattices(DEFAULT_MAX_N + 1)
    with pytest.raises(BadParameter):
        all_lattices(0)


def test_cap_override_and_cache_round_trip(tmp_path):
    cache = str(tmp_path)
    first = list(all_lattices(6, cache_dir=cache))
    assert len(first) == 15
    files = list(tmp_path.iterdir())
    assert files, "census file should have been written"
    second = list(all_lattices(6, cache_dir=cache))
    assert first == second


def test_lcd_values():
    assert lcd(1, 1) == Density(1, 0)
    assert lcd(4, 2) == Density(1, 1)
    assert lcd(5, 4) == Density(1, 3)
    assert lcd(6, 8) == Density(1, 4)
    assert lcd(3, 2) is None
    assert lcd(4, 3) is None
    assert lcd(8, 23) is None


def test_expected_lcd_pinned_rows():
    assert expected_lcd(5, 1) == Density(1, 0)
    assert expected_lcd(6, 4) == Density(1, 2)
    assert expected_lcd(8, 8) == Density(19, 7)
    assert expected_lcd(3, 2) is None
    assert expected_lcd(4, 3) is None
    with pytest.raises(BadParameter):
        expected_lcd(6, 9)
    with pytest.raises(BadParameter):
        expected_lcd(5, 4)


def test_verify_suites_smoke():
    assert verify_counts(max_n=5, oracle_max=5).ok
    assert verify_lcd(5).ok
    assert verify_jm(5).ok
    assert verify_main(5).ok
    assert verify_freese(5).ok
    assert verify_width_conjecture(5).ok


def test_verify_main_parallel_agrees():
    serial = verify_main(6)
    parallel = verify_main(6, jobs=2)
    assert serial.ok and parallel.ok
    assert serial.checked == parallel.checked


def test_verify_report_summary_shape():
    report = verify_jm(5)
    text = report.summary()
    assert "jm" in text
    assert "ok" in text
