"""Quantum states of an electron confined between grounded conducting planes.

The image-charge potential of the two planes forms a symmetric double well
with a closed digamma expression; a Chebyshev collocation discretization
with Dirichlet truncation turns the Schrodinger problem into a dense
eigenproblem.  Submodules:

- ``special_functions``: digamma and the Euler-Mascheroni constant
- ``potential``: closed, truncated-series and first-image potentials
- ``spectral``: collocation grids, differentiation matrices, quadrature
- ``solver``: Hamiltonian assembly and dense eigensolution
- ``analysis``: box limits, quantum defects, tunneling splitting
- ``cli``: the ``imagewell`` command
"""

from .analysis import (
    DefectRecord,
    SplittingRecord,
    SweepPoint,
    analytic_splitting,
    default_order,
    defect_table,
    energy_sweep,
    image_state_energy,
    pib_energy,
    quantum_defect,
    single_plane_ground,
    splitting_sweep,
)
from .potential import (
    ConvergenceTable,
    PotentialForm,
    PotentialModel,
    convergence_table,
    potential_closed,
    potential_closed_centered,
    potential_first_image,
    potential_series,
)
from .solver import (
    EigenSolution,
    Parity,
    SpectralHamiltonian,
    assemble,
    eigensolve,
    solve,
)
from .special_functions import EULER_GAMMA, digamma
from .spectral import (
    ChebyshevGrid,
    DerivativeOrder,
    SecondDerivativeConstruction,
    SpectralOperator,
    build_grid,
    clenshaw_curtis_weights,
    first_derivative_matrix,
    second_derivative_interior,
)

__version__ = "1.0.0"

__all__ = [
    "EULER_GAMMA",
    "ChebyshevGrid",
    "ConvergenceTable",
    "DefectRecord",
    "DerivativeOrder",
    "EigenSolution",
    "Parity",
    "PotentialForm",
    "PotentialModel",
    "SecondDerivativeConstruction",
    "SpectralHamiltonian",
    "SpectralOperator",
    "SplittingRecord",
    "SweepPoint",
    "analytic_splitting",
    "assemble",
    "build_grid",
    "clenshaw_curtis_weights",
    "convergence_table",
    "default_order",
    "defect_table",
    "digamma",
    "eigensolve",
    "energy_sweep",
    "first_derivative_matrix",
    "image_state_energy",
    "pib_energy",
    "potential_closed",
    "potential_closed_centered",
    "potential_first_image",
    "potential_series",
    "quantum_defect",
    "second_derivative_interior",
    "single_plane_ground",
    "solve",
    "splitting_sweep",
    "__version__",
]
