"""
kkpoly: Kostant-Kumar polynomials of Weyl group involutions.

Signed permutations for types A, B and C, Bruhat order by rank matrices, an
exact nil-Hecke ring, Borel coadjoint orbits, and verification suites that
sweep small ranks.
"""

from .root_system import Kind, Root, RootSystem, build
from .weyl import (
    GroupElement, bruhat_leq, enumerate_involutions, from_word, identity, length,
    parse_perm, rank_matrix, reduced_word,
)
from .exactalg import Polynomial, RationalFunction
from .nilhecke import c, d, x_of
from .coadjoint import orbit_dim

__version__ = "0.1.0"

__all__ = [
    "Kind", "Root", "RootSystem", "build", "GroupElement", "bruhat_leq",
    "enumerate_involutions", "from_word", "identity", "length", "parse_perm",
    "rank_matrix", "reduced_word", "Polynomial", "RationalFunction", "c", "d", "x_of",
    "orbit_dim",
]
