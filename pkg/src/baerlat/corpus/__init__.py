"""Generators, fixtures, the MLAT format and exhaustive enumeration."""

from .enumeration import MAX_N, EnumerationConfig, enumerate_structures, lattices_of_size
from .generators import (FIXTURES, LatticeSpecifier, diamond_m3, fixture, gen_boolean,
                         gen_chain, gen_meet_mult, gen_zn, one_element, product)
from .mlat import emit_dot, emit_mlat, parse_mlat, read_mlat, write_mlat

__all__ = [
    "MAX_N", "EnumerationConfig", "enumerate_structures", "lattices_of_size",
    "FIXTURES", "LatticeSpecifier", "diamond_m3", "fixture", "gen_boolean", "gen_chain",
    "gen_meet_mult", "gen_zn", "one_element", "product",
    "emit_dot", "emit_mlat", "parse_mlat", "read_mlat", "write_mlat",
]
