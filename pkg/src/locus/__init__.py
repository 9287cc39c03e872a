"""Exact algebra over localizations of polynomial rings at prime ideals."""

from .coeff import GF, QQ, FieldElem, PrimeField, RationalField
from .complex import ChainComplex, PruningMap, betti_ranks, prune_complex, prune_diff, prune_unit, tensor_to_local
from .groebner import GroebnerBasis, buchberger, groebner_ideal, groebner_module, modulo_base, normal_form, \
    resolve_base, syz_base
from .invariants import LengthCapExceeded, hilbert_samuel_function, length_of, multiplicity_at
from .localring import Fraction, LocalRing, lift_up, lift_up_matrix, promote
from .matrix import Matrix, MutableMatrix
from .modules import Ideal, Module, mingens, minimal_presentation, presentation, resolution, syz, syz_local
from .poly import PolyRing, Polynomial

__version__ = "0.1.0"

__all__ = [
    "betti_ranks", "buchberger", "ChainComplex", "FieldElem", "Fraction", "GF", "groebner_ideal",
    "groebner_module", "GroebnerBasis", "hilbert_samuel_function", "Ideal", "length_of", "LengthCapExceeded",
    "lift_up", "lift_up_matrix", "LocalRing", "Matrix", "mingens", "minimal_presentation", "Module",
    "modulo_base", "multiplicity_at", "MutableMatrix", "normal_form", "Polynomial", "PolyRing",
    "presentation", "PrimeField", "promote", "prune_complex", "prune_diff", "prune_unit", "PruningMap", "QQ",
    "RationalField", "resolution", "resolve_base", "syz", "syz_base", "syz_local", "tensor_to_local",
]
