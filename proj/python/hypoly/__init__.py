"""Exact hypergraph polynomials."""

from ._core import (
    BudgetExceeded,
    Hypergraph,
    InexactDivision,
    MalformedDocument,
    Poly,
    SchemaViolation,
    ValidationError,
    chromatic,
    chromatic_count,
    coboundary,
    covering,
    cycle,
    cycle_xi,
    hyperstar,
    hyperstar_chromatic,
    matching,
    path,
    path_xi,
    potts,
    section,
    sunflower,
    transversal,
    tutte,
    verify,
    xi,
    xi_classic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
