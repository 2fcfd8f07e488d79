"""A_alpha spectra, dissociation numbers and brute-force checks of the extremal results."""
from .graph import Graph, GraphError
from .graph6 import decode, encode
from .spectral import index, alpha_matrix
from .dissociation import dissociation_number, dissociation_tau

__version__ = "0.1.0"
