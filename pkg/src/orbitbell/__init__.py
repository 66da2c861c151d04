"""Bell-functional bounds for finite-group orbits of measurement settings."""

from .groups import (
    FiniteGroupRep,
    NonOrthogonalGenerator,
    OrderExceeded,
    close_under_multiplication,
    oh_rep,
    s4_irrep,
    verify_orthogonality,
    z4_rep,
)
from .orbits import (
    GramMatrix,
    NonUnitInitialVector,
    Orbit,
    StabilizerMismatch,
    canonical_solid,
    generate_orbit,
    gram,
    orbit_from_json,
    orbit_to_json,
    reflect_y,
    stabilizer_order,
    vertex_sets_equal,
)
from .bounds import (
    BoundResult,
    BudgetExceeded,
    ClassicalOrbitDecomposition,
    DimensionMismatch,
    Strategy,
    classical_bound,
    classical_bound_oracle,
    classify_classical_vectors,
    evaluate_strategies,
    phi_plus_quantum_value,
    quantum_value,
    quantum_value_closed_form,
)
from .z4 import (
    DegenerateOrbit,
    z4_classical_closed_form,
    z4_minimize_classical,
    z4_orbit,
    z4_quantum_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
