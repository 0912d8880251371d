"""Exact Links-Gould invariant LG(q, p) of braids and (1,1)-tangle networks."""
from .ring import (LaurentPoly, NotYFree, RingElem, Substitution, canonical_string,
                   is_inversion_symmetric, is_palindromic, substitute)
from .rmatrix import build_caps_cups, build_sigma, build_sigma_inv, numeric_projector_check
from .tangle import (BraidWord, Chirality, braid_network, detect_chirality, eval_braid, close_to_tangle,
                     lg_invariant, lg_of_network, reflect)
from .tensor import ContractionNetwork, MalformedNetwork, Tensor, contract

__all__ = [
    "BraidWord", "Chirality", "ContractionNetwork", "braid_network", "LaurentPoly", "MalformedNetwork",
    "NotYFree", "RingElem", "Substitution", "Tensor", "build_caps_cups", "build_sigma",
    "build_sigma_inv", "canonical_string", "close_to_tangle", "contract", "detect_chirality",
    "eval_braid", "is_inversion_symmetric", "is_palindromic", "lg_invariant", "lg_of_network",
    "numeric_projector_check", "reflect", "substitute",
]
