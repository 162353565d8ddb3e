"""Simplicial complexes, chain complexes, quotients and cup products."""

from .chains import CellComplex, ChainComplex, HomologyResult, invariant_factors, simplicial_chain_complex
from .complex import (
    SimplicialComplex,
    antipodal_map,
    barycentric_subdivision,
    complex_from_json,
    complex_to_json,
    cross_polytope_boundary,
    cycle,
    disjoint_union,
    empty_complex,
    join,
    order_complex_from_up,
    point,
    rp2_six_vertex,
    simplex,
    simplex_boundary,
    suspension,
    torus_seven_vertex,
    wedge,
)
from .cup import NotACocycleError, cup_powers, cup_square_power
from .quotient import ActionInvalidError, Quotient, SimplicialAction, quotient_by_action

__all__ = [name for name in dir() if not name.startswith("_")]
