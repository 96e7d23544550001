"""Exact nilradical homology of finite-dimensional representations.

The package computes Lie algebra homology and cohomology of the
nilradical of a parabolic acting on an explicitly constructed
irreducible module, entirely over exact rationals, and checks the
result against the combinatorial multiplicity-one prediction indexed
by Weyl group elements.  A separate predictor handles the homology of
regular standard modules of connected complex reductive groups via
chains of simple roots.
"""

from .chevalley import ChevalleyAlgebra, bracket, build_chevalley
from .complexflag import (ChainOfSimpleRoots, CharacterParam,
                          StandardModulePrediction, chi_w, codim,
                          enumerate_chains, predict_standard, validate_chain)
from .errors import (ChainRejected, InvalidParameter, NhlabError,
                     ResourceLimitExceeded)
from .koszul import (HomologyTable, KoszulComplex, build_complex, check_duality,
                     cohomology, homology)
from .kostant import KostantPrediction, compare, predict_borel, predict_parabolic
from .repbuilder import (GModule, VermaSlice, build_irrep, gram_matrix,
                         weight_multiplicities, weyl_dimension)
from .rootsys import (InfinitesimalCharacter, ParabolicSubset, Root, RootSystem,
                      Weight, WeylElement, act, build_root_system, coset_reps,
                      dominantize, infinitesimal_character_equal,
                      is_antidominant_regular_integral, is_regular, length,
                      longest_element, pairing, parabolic, reflect,
                      weyl_elements)

__version__ = "0.1.0"

__all__ = [
    "ChainOfSimpleRoots", "CharacterParam", "ChainRejected",
    "ChevalleyAlgebra", "GModule", "HomologyTable", "InfinitesimalCharacter",
    "InvalidParameter", "KostantPrediction", "KoszulComplex", "NhlabError",
    "ParabolicSubset", "ResourceLimitExceeded", "Root", "RootSystem",
    "StandardModulePrediction", "VermaSlice", "Weight", "WeylElement",
    "act", "bracket", "build_chevalley", "build_complex", "build_irrep",
    "build_root_system", "check_duality", "chi_w", "codim", "cohomology",
    "compare", "coset_reps", "dominantize", "enumerate_chains",
    "gram_matrix", "homology", "infinitesimal_character_equal",
    "is_antidominant_regular_integral", "is_regular", "length",
    "longest_element", "pairing", "parabolic", "predict_borel",
    "predict_parabolic", "predict_standard", "reflect", "validate_chain",
    "weight_multiplicities", "weyl_dimension", "weyl_elements",
]
