"""A small expression language for assembling lattices.

Grammar, whitespace insensitive:

    expr ::= name
           | name '(' int {',' int} ')'
           | 'gsum' '(' expr ',' expr ')'
           | 'eglue' '(' expr ',' int ',' expr ',' int ')'

Plain names go to the catalog.  gsum stacks its second operand on top
of its first; eglue overlaps them in an edge, the first index picking a
top edge of the left operand and the second a bottom edge of the right
one, both 0-based in ascending edge order.
"""
from __future__ import annotations

import re

from .catalog import catalog
from .lattice import Lattice
from .structure import bottom_edges, edge_gluing, glued_sum, top_edges


class ExprError(Exception):
    """The build expression is malformed."""


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|-?\d+|[(),]")


class _Scanner:
    def __init__(self, text: str):
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            match = _TOKEN.match(text, pos)
            if match is None:
                raise ExprError(f"bad character {text[pos]!r} at offset {pos}")
            self.tokens.append((match.group(), pos))
            pos = match.end()
        self.at = 0

    def peek(self) -> str | None:
        if self.at < len(self.tokens):
            return self.tokens[self.at][0]
        return None

    def take(self) -> tuple[str, int]:
        if self.at >= len(self.tokens):
            raise ExprError("unexpected end of expression")
        token = self.tokens[self.at]
        self.at += 1
        return token

    def expect(self, want: str) -> None:
        token, pos = self.take()
        if token != want:
            raise ExprError(f"expected {want!r} at offset {pos}, got {token!r}")


def _int(scanner: _Scanner) -> int:
    token, pos = scanner.take()
    try:
        return int(token)
    except ValueError:
        raise ExprError(
            f"expected an integer at offset {pos}, got {token!r}") from None


def _expr(scanner: _Scanner) -> Lattice:
    token, pos = scanner.take()
    if token == "gsum":
        scanner.expect("(")
        lower = _expr(scanner)
        scanner.expect(",")
        upper = _expr(scanner)
        scanner.expect(")")
        return glued_sum(lower, upper)
    if token == "eglue":
        scanner.expect("(")
        lower = _expr(scanner)
        scanner.expect(",")
        i = _int(scanner)
        scanner.expect(",")
        upper = _expr(scanner)
        scanner.expect(",")
        j = _int(scanner)
        scanner.expect(")")
        tes = top_edges(lower)
        if not 0 <= i < len(tes):
            raise ExprError(f"top edge index {i} out of range 0..{len(tes) - 1}")
        bes = bottom_edges(upper)
        if not 0 <= j < len(bes):
            raise ExprError(
                f"bottom edge index {j} out of range 0..{len(bes) - 1}")
        return edge_gluing(lower, tes[i], upper, bes[j])
    if not (token[0].isalpha() or token[0] == "_"):
        raise ExprError(
            f"expected a lattice expression at offset {pos}, got {token!r}")
    params = []
    if scanner.peek() == "(":
        scanner.take()
        params.append(_int(scanner))
        while scanner.peek() == ",":
            scanner.take()
            params.append(_int(scanner))
        scanner.expect(")")
    return catalog(token, *params)


def build(text: str) -> Lattice:
    """Evaluate a build expression to a lattice."""
    scanner = _Scanner(text)
    lat = _expr(scanner)
    if scanner.at != len(scanner.tokens):
        token, pos = scanner.tokens[scanner.at]
        raise ExprError(f"unexpected {token!r} at offset {pos}")
    return lat
