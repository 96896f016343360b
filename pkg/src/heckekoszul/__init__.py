"""Exact computations around the Iwahori-Matsumoto involution and linear Koszul duality.

The Hecke side lives in :mod:`.hecke` (Bernstein basis over Z[v, v^-1]); the
dg side in :mod:`.dgcore`, :mod:`.koszul` and :mod:`.convolution`.
"""

from .hecke import HeckeElt, im, iota, k_im, render, verify_relations
from .laurent import LaurentPoly
from .rootdata import RootDatum

__version__ = "0.1.0"

__all__ = ["HeckeElt", "LaurentPoly", "RootDatum", "im", "iota", "k_im", "render", "verify_relations"]
