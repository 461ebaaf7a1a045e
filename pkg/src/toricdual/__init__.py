"""Exact tests for higher-order selfduality of projective toric embeddings."""

__version__ = "0.1.0"

from .config import LatticeConfiguration, dimension, homogenize, normalize_lattice, validate
from .dualdim import crosscheck_characterizations, dual_dimension
from .osculation import hilbert_function, jet_matrix
from .selfdual import SelfdualVerdict, classify, knap_check

__all__ = [
    "LatticeConfiguration",
    "SelfdualVerdict",
    "classify",
    "crosscheck_characterizations",
    "dimension",
    "dual_dimension",
    "hilbert_function",
    "homogenize",
    "jet_matrix",
    "knap_check",
    "normalize_lattice",
    "validate",
]
