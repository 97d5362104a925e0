"""Workbench for Metropolis-Rota and cubic implication algebras."""

from .boolean import PrincipalFilter, Universe, principal_filter
from .interval import Interval
from .signed import SignedSet
from .table import (ABSENT, FiniteStructure, StructureError, filter_structure,
                    interval_structure, signed_structure)

__all__ = [
    "ABSENT", "FiniteStructure", "Interval", "PrincipalFilter", "SignedSet",
    "StructureError", "Universe", "filter_structure", "interval_structure",
    "principal_filter", "signed_structure",
]
