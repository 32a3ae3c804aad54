"""Exact combinatorial models of interval configuration spaces.

The package builds finite cell complexes for a family of interval and line
configuration models, decorates them with bar-style group structure, checks
the algebraic laws the models satisfy, and compares filtration schedules
against enumerated censuses.  All arithmetic is exact (integers and
fractions); all cells are canonical nested tuples.
"""

from .complexes import (Cell, CellComplex, check_refinement,
                        euler_characteristic, f_vector, homology_mod2)

__all__ = ["Cell", "CellComplex", "check_refinement",
           "euler_characteristic", "f_vector", "homology_mod2"]

__version__ = "0.1.0"
