"""Line-oriented lattice documents."""

from __future__ import annotations

import pytest

from latdens import (
    BadIndexOrder,
    LatParseError,
    b4,
    circle,
    format_lat,
    n5,
    parse_lat,
    read_lat,
)


def test_round_trip():
    for lat in (b4(), n5(), circle(8, 2)):
        assert parse_lat(format_lat(lat)) == lat


def test_comments_and_blank_lines_are_skipped():
    text = """
    # a pentagon
    5

    0 1  # short side
    0 2
    1 4
    2 3
    3 4
    """
    assert parse_lat(text) == n5()


def test_comment_argument_survives_the_round_trip():
    text = format_lat(b4(), comment="two atoms\nunder one top")
    assert text.startswith("# two atoms\n# under one top\n4\n")
    assert parse_lat(text) == b4()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(LatParseError, match="line 2"):
        parse_lat("4\n0 x\n")
    with pytest.raises(LatParseError, match="line 1"):
        parse_lat("4 4\n0 1\n")
    with pytest.raises(LatParseError, match="line 3"):
        parse_lat("# size\n4\n0 1 2\n")
    with pytest.raises(LatParseError, match="element count"):
        parse_lat("# nothing here\n")


def test_semantic_errors_surface_from_validation():
    with pytest.raises(BadIndexOrder):
        parse_lat("3\n0 1\n2 1\n")


def test_read_lat(tmp_path):
    target = tmp_path / "pentagon.lat"
    target.write_text(format_lat(n5(), comment="round trip"))
    assert read_lat(str(target)) == n5()
