"""Finite posets, order complexes, symmetric joins and diagrams of spaces."""

from .diagram import (
    DiagramInvalidError,
    SpaceDiagram,
    cone_diagram,
    constant_diagram,
    hocolim,
    suspension_diagram,
)
from .poset import (
    AntichainError,
    FinitePoset,
    HCFReport,
    PosetError,
    SizeGuardError,
    antichain_poset,
    boolean_lattice,
    chain_poset,
    exp_poset,
    hcf_quotient_check,
    order_complex,
    partition_lattice,
)
from .symjoin import BooleanSphereReport, hcf4_model, sphere_homology, sym_join

__all__ = [name for name in dir() if not name.startswith("_")]
