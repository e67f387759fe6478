"""Matching energy of small graphs: exact matching counts, spectra, extremal families
and exhaustive verification of minimality claims."""

from .graph import (Graph, GraphClass, GraphError, are_isomorphic, canonical_key, classify,
                    cycle_structure, delete_edge, delete_vertices, diameter, disjoint_union,
                    from_edge_list)
from .matching import IntPolynomial, MatchingCache, matching_polynomial, matching_vector
from .order import Outcome, QuasiOrderResult, compare_coeff, compare_matching
from .spectral import (CharPoly, EnergyReport, Method, char_poly, eigenvalues, graph_energy,
                       matching_energy, me, tre)

__version__ = "0.1.0"
