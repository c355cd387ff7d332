"""Plain-text serialization of lattices.

The format is line oriented.  A '#' starts a comment running to the end
of its line and blank lines are skipped.  The first data line holds the
element count alone; every further data line holds one cover pair as
two integers.  Syntax problems raise LatParseError with the line
number; whether the pairs form a lattice is judged by from_covers, so
its errors surface unchanged.
"""
from __future__ import annotations

from .lattice import Lattice, from_covers


class LatParseError(Exception):
    """The text does not scan as a lattice document."""


def parse_lat(text: str) -> Lattice:
    """Parse a lattice document into a validated lattice."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise LatParseError(
                f"line {lineno}: non-integer token in {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise LatParseError(
                    f"line {lineno}: the first data line must hold the "
                    f"element count alone")
            n = values[0]
        elif len(values) != 2:
            raise LatParseError(
                f"line {lineno}: expected a cover pair, got "
                f"{len(values)} numbers")
        else:
            pairs.append((values[0], values[1]))
    if n is None:
        raise LatParseError("no data lines, expected an element count")
    return from_covers(n, pairs)


def format_lat(lat: Lattice, comment: str | None = None) -> str:
    """Render a lattice as a document that parse_lat reads back."""
    lines = []
    if comment:
        lines += [f"# {part}".rstrip() for part in comment.splitlines()]
    lines.append(str(lat.n))
    lines += [f"{i} {j}" for (i, j) in lat.covers]
    return "\n".join(lines) + "\n"


def read_lat(path: str) -> Lattice:
    """Parse the lattice document stored at path."""
    with open(path, encoding="utf-8") as fh:
        return parse_lat(fh.read())
