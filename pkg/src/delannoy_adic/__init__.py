"""Exact computations for the Delannoy adic (Bratteli-Vershik) system."""
from .diagram import FinitePath, Move, Vertex, VertexKind, compare_paths, dim_between, max_path, min_path
from .errors import (
    DelannoyError,
    DomainError,
    IterationCapExceeded,
    MaximalPath,
    MinimalPath,
    NotDivisible,
    ResourceLimit,
    TruncationExhausted,
)
from .numbers import binom, delannoy, delannoy_closed_forms, gf_truncation, nicomachus_count
from .vershik import coding_sequence, orbit_enumerate, predecessor, successor

__version__ = "0.1.0"
