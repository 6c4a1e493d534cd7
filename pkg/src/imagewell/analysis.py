"""Derived quantities: box limits, quantum defects, image states, splitting.

Small-L spectra approach the particle-in-a-box ladder E = (pi*N/L)**2 / 2;
large-L spectra collapse onto near-degenerate pairs at the single-plane
image-state energies -1/(32 n**2).  The quantum defect measures how far a
level sits from its box value, and the tunneling splitting of the lowest
pair is compared against the surface-integral estimate built from the
single-plane ground state.
"""

import math
from dataclasses import dataclass

import numpy as np

from .solver import solve


@dataclass(frozen=True)
class DefectRecord:
    """Energy and quantum defect for one level; defect is NaN when E <= 0."""

    N: int
    energy: float
    defect: float


@dataclass(frozen=True)
class SplittingRecord:
    """Numeric and analytic splitting of the lowest pair at one separation.

    ``resolvable`` is False when the computed gap is below the degeneracy
    floor (1e-12 relative), where the eigensolver cannot separate the pair.
    """

    L: float
    M: int
    dE_numeric: float
    dE_analytic: float
    resolvable: bool


@dataclass(frozen=True)
class SweepPoint:
    """Lowest energies at one separation, for energy-vs-L studies."""

    L: float
    M: int
    energies: np.ndarray


def pib_energy(N, L):
    """Ideal particle-in-a-box level: E_N = (pi*N/L)**2 / 2."""
    if N < 1:
        raise ValueError(f"quantum number must be >= 1, got {N}")
    if L <= 0.0:
        raise ValueError(f"box length must be > 0, got {L}")
    return 0.5 * (math.pi * N / L) ** 2


def image_state_energy(n):
    """Bound-state energy of an electron on a single grounded plane: -1/(32 n**2)."""
    if n < 1:
        raise ValueError(f"level index must be >= 1, got {n}")
    return -1.0 / (32.0 * n * n)


def quantum_defect(energy, N, L):
    """Defect delta with E = (pi*(N - delta)/L)**2 / 2, i.e. N - (L/pi)*sqrt(2E).

    Only defined for E > 0 (bound image states have no box analogue).
    """
    if energy <= 0.0:
        raise ValueError(f"quantum defect needs a positive energy, got {energy}")
    return N - (L / math.pi) * math.sqrt(2.0 * energy)


def single_plane_ground(x):
    """Normalized ground state against a single plane: psi(x) = (x/4) exp(-x/4)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("single-plane ground state is defined for x >= 0")
    v = 0.25 * x * np.exp(-0.25 * x)
    return float(v) if v.ndim == 0 else v


def analytic_splitting(L):
    """Tunneling splitting estimate 2*psi0(L/2)*psi0'(L/2) = (L/16)e^(-L/4)(1 - L/8).

    Signed value; it crosses zero at L = 8, so compare magnitudes against
    numeric splittings.
    """
    if L <= 0.0:
        raise ValueError(f"separation must be > 0, got {L}")
    return (L / 16.0) * math.exp(-L / 4.0) * (1.0 - L / 8.0)


def default_order(L):
    """Grid order adequate for the lowest pair at separation L (capped at 2000)."""
    return min(2000, max(100, int(math.ceil(20.0 * math.sqrt(L)))))


def defect_table(L, M, N_max, potential=None):
    """Energies and quantum defects for levels 1..N_max at separation L.

    Levels with E <= 0 get a NaN defect.  N_max beyond the trusted count
    M/2 is allowed (the wild defect fluctuations there are themselves a
    useful diagnostic) but those rows approximate nothing.
    """
    sol = solve(M, L, n_states=N_max, potential=potential)
    records = []
    for i, e in enumerate(sol.energies):
        n = i + 1
        d = quantum_defect(e, n, L) if e > 0.0 else math.nan
        records.append(DefectRecord(N=n, energy=float(e), defect=d))
    return records


def splitting_sweep(L_values, M=None):
    """Numeric vs analytic splitting of the lowest pair across separations."""
    records = []
    for L in L_values:
        m = default_order(L) if M is None else int(M)
        sol = solve(m, L, n_states=2)
        gap = float(sol.energies[1] - sol.energies[0])
        records.append(SplittingRecord(
            L=float(L),
            M=m,
            dE_numeric=gap,
            dE_analytic=analytic_splitting(L),
            resolvable=gap > 1e-12 * abs(float(sol.energies[0])),
        ))
    return records


def energy_sweep(L_values, n_states, M=None):
    """Lowest n_states energies at each separation in L_values."""
    points = []
    for L in L_values:
        m = default_order(L) if M is None else int(M)
        sol = solve(m, L, n_states=n_states)
        points.append(SweepPoint(L=float(L), M=m, energies=sol.energies))
    return points
