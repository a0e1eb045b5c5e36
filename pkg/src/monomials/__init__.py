"""Exact-arithmetic computations with monomial ideals and their blowup algebras.

Everything is computed over exact integers and rationals: monomial ideal
arithmetic, covering polyhedra and Rees cones, Hilbert bases, integral
closures of powers, symbolic powers and resurgence, Ehrhart interpolation,
and evaluation codes over small finite fields.
"""

from monomials.errors import (
    BudgetExceededError,
    InternalConsistencyError,
    NonPointedConeError,
    PreconditionError,
)
from monomials.core import (
    Clutter,
    Graph,
    MonomialIdeal,
    UNIT,
    ZERO,
    alexander_dual,
    colon_monomial,
    covering_number,
    has_packing_property,
    ideal_power,
    is_konig,
    matching_number,
    minimal_generating_set,
    minor,
)

__all__ = [
    "BudgetExceededError",
    "InternalConsistencyError",
    "NonPointedConeError",
    "PreconditionError",
    "Clutter",
    "Graph",
    "MonomialIdeal",
    "UNIT",
    "ZERO",
    "alexander_dual",
    "colon_monomial",
    "covering_number",
    "has_packing_property",
    "ideal_power",
    "is_konig",
    "matching_number",
    "minimal_generating_set",
    "minor",
]

__version__ = "0.1.0"
