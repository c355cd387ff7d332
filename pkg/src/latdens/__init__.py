"""Congruence counting, densities, and structure of small finite lattices."""

from .lattice import (BadIndexOrder, BadParameter, ElementSets, Lattice,
                      LatticeError, NotALattice, NotAnEdge, NotASublattice,
                      NotBounded, NotComparable, NotReduced, TooLarge,
                      UnknownName, canonical_poset_covers, from_covers,
                      sublattice_of)
from .congruence import (Congruence, Density, JirConPoset, all_congruences,
                         cd, con_count, count_ideals, foot, gratzer_reachable,
                         is_congruence, jipair, jir_con_poset, nu_leq,
                         principal_congruence)
from .structure import (CoreResult, GluedSumDecomposition, NotABottomEdge,
                        NotACoreLattice, NotATopEdge, Singleton,
                        bottom_edges, canonical_decomposition, core,
                        dismantle_chain, edge_gluing, glued_sum,
                        is_core_lattice, rgsiso, top_edges)
from .catalog import (CATALOG_HELP, THRESHOLD, ClassLabel, CrossCheckReport,
                      b4, c2xc3, catalog, chain, circle, circle_members,
                      classify, cross_check, fig3, fig3_members, fig5,
                      fig5_members, m, matching_labels, n5, n6, n6p, n55, r6)
from .enumeration import (DEFAULT_MAX_N, KNOWN_COUNTS, VerifyReport,
                          all_lattices, expected_lcd, lcd, slow_all_lattices,
                          verify_counts, verify_freese, verify_jm, verify_lcd,
                          verify_main, verify_width_conjecture)
from .latfile import LatParseError, format_lat, parse_lat, read_lat
from .buildexpr import ExprError, build

__version__ = "0.1.0"

__all__ = [
    "BadIndexOrder", "BadParameter", "CATALOG_HELP", "ClassLabel",
    "Congruence", "CoreResult", "CrossCheckReport", "DEFAULT_MAX_N",
    "Density", "ElementSets", "ExprError", "GluedSumDecomposition",
    "JirConPoset", "KNOWN_COUNTS", "LatParseError", "Lattice",
    "LatticeError", "NotABottomEdge", "NotACoreLattice", "NotALattice",
    "NotAnEdge", "NotASublattice", "NotATopEdge", "NotBounded",
    "NotComparable", "NotReduced", "Singleton", "THRESHOLD", "TooLarge",
    "UnknownName", "VerifyReport", "all_congruences", "all_lattices", "b4",
    "bottom_edges", "build", "c2xc3", "canonical_decomposition",
    "canonical_poset_covers", "catalog", "cd", "chain", "circle",
    "circle_members", "classify", "con_count", "core", "count_ideals",
    "cross_check", "dismantle_chain", "edge_gluing", "expected_lcd", "fig3",
    "fig3_members", "fig5", "fig5_members", "foot", "format_lat",
    "from_covers", "glued_sum", "gratzer_reachable", "is_congruence",
    "is_core_lattice", "jipair", "jir_con_poset", "lcd", "m",
    "matching_labels", "n5", "n6", "n6p", "n55", "nu_leq", "parse_lat",
    "principal_congruence", "r6", "read_lat", "rgsiso", "slow_all_lattices",
    "sublattice_of", "top_edges", "verify_counts", "verify_freese",
    "verify_jm", "verify_lcd", "verify_main", "verify_width_conjecture",
]
