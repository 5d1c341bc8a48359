"""Cycle decompositions of tensor products of complete graphs.

Deciders say whether a product splits into k-cycles, constructors build
the decomposition, ``verify`` checks any claimed decomposition edge by edge,
and ``solve`` is an exhaustive search used as an independent check.
"""
from .base import (c4_knn_minus_factor, c4_table_c3xk4, mixed_triangles_quads,
                   steiner_triples, triangles_km_minus_factor)
from .errors import (BadColumn, BadCycle, BadOrder, BudgetExceeded,
                     CycleDecompositionError, InvalidFamily, NotApplicable,
                     NotDecomposable, VerificationFailed)
from .formats import dumps, loads, parse_family, read_decomposition, write_decomposition
from .graphs import (Complete, CompleteBipartite, CompleteBipartiteMinusFactor,
                     CompleteMinusFactor, Cycle, EdgeSet, Explicit, Tensor, materialize)
from .products import (Verdict, construct, construct_c4_kmxkn,
                       construct_c6_km_minus_factor_xkn, construct_c6_kmxkn, decide,
                       decide_c4_kmxkn, decide_c6_km_minus_factor_xkn, decide_c6_kmxkn)
from .solver import SearchBudget, SolveOutcome, count_all, solve
from .verify import Certificate, Decomposition, canonicalize, verify

__version__ = "0.1.0"
