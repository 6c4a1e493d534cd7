"""Spectral Hamiltonian assembly and dense eigensolution.

The Hamiltonian on the interior collocation nodes is

    H = -1/2 * D2_interior + diag(V(x_interior, L))

with the potential evaluated on the symmetric interval (-L/2, L/2).  The
Dirichlet truncation makes the matrix nonsymmetric, so it is treated as a
general real eigenproblem: eigenvalues are sorted by real part, imaginary
parts are recorded (they should be at rounding level) and eigenvectors are
kept in the collocation representation.  Only about the lowest M/2
eigenvalues approximate the continuous spectrum; that rule of thumb is
exposed as ``trusted_count``.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .potential import potential_closed_centered
from .spectral import (
    ChebyshevGrid,
    SecondDerivativeConstruction,
    build_grid,
    clenshaw_curtis_weights,
    second_derivative_interior,
)

#: Relative max_imag level above which a solution is flagged (not rejected).
IMAG_WARN_FACTOR = 1e-8
#: Pair gap below 1e-12*|E| means the eigensolver may return arbitrary
#: mixtures of the two states, so their parities are reported as MIXED.
DEGENERATE_GAP_FACTOR = 1e-12
#: Components below this fraction of the peak are ignored when sign-fixing.
_SIGN_EPS = 1e-8
#: Relative mismatch below which a state is classified even or odd.
_PARITY_TOL = 1e-6


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class SpectralHamiltonian:
    matrix: np.ndarray
    grid: ChebyshevGrid
    L: float
    M: int


@dataclass(frozen=True)
class EigenSolution:
    """Sorted eigenvalues with normalized, boundary-padded eigenvectors.

    ``states[k]`` holds the k-th wavefunction on the full M+1 node grid
    (zeros at both walls), normalized to unit probability under
    Clenshaw-Curtis quadrature and sign-fixed so its first significant
    component is positive.  ``max_imag`` is the largest imaginary part
    discarded across the whole spectrum; ``imag_warning`` flags when it is
    not negligible against the spectral range.
    """

    L: float
    M: int
    energies: np.ndarray
    max_imag: float
    imag_warning: bool
    states: np.ndarray
    parities: tuple[Parity, ...]
    trusted_count: int
    grid: ChebyshevGrid

    def to_json_dict(self):
        return {
            "L": self.L,
            "M": self.M,
            "trusted_count": self.trusted_count,
            "max_imag": self.max_imag,
            "imag_warning": self.imag_warning,
            "energies": self.energies.tolist(),
            "parities": [p.value for p in self.parities],
            "x": self.grid.scaled_nodes.tolist(),
            "states": self.states.tolist(),
        }


def assemble(M, L, potential=None):
    """Build the interior spectral Hamiltonian for plane separation L.

    ``potential`` may be swapped out (signature ``f(x, L) -> array`` on the
    symmetric interval) to solve a different well on the same grid; the
    default is the closed-form image potential.  The zero-potential hook
    recovers the particle in a box.
    """
    M = int(M)
    if M < 4:
        raise ValueError(f"need M >= 4 for a meaningful interior problem, got {M}")
    if potential is None:
        potential = potential_closed_centered
    grid = build_grid(M, L)
    d2 = second_derivative_interior(grid, SecondDerivativeConstruction.SQUARED_FIRST)
    H = -0.5 * d2.matrix
    x_int = grid.scaled_nodes[1:M]
    H[np.diag_indices_from(H)] += np.asarray(potential(x_int, grid.L), dtype=float)
    return SpectralHamiltonian(matrix=H, grid=grid, L=grid.L, M=M)


def _interior_vectors(vals, vecs, n_states):
    """Real interior eigenvectors for the lowest n_states eigenvalues.

    Complex conjugate pairs (possible for near-degenerate untrusted states)
    are split into their real and imaginary parts, which span the same
    invariant subspace.
    """
    out = np.empty((n_states, vecs.shape[0]))
    k = 0
    while k < n_states:
        lam = vals[k]
        if lam.imag != 0.0 and k + 1 < len(vals) and vals[k + 1] == lam.conjugate():
            out[k] = vecs[:, k].real
            if k + 1 < n_states:
                out[k + 1] = vecs[:, k].imag
            k += 2
        else:
            out[k] = vecs[:, k].real
            k += 1
    return out


def _classify_parity(state):
    rev = state[::-1]
    scale = np.linalg.norm(state)
    if np.linalg.norm(state - rev) <= _PARITY_TOL * scale:
        return Parity.EVEN
    if np.linalg.norm(state + rev) <= _PARITY_TOL * scale:
        return Parity.ODD
    return Parity.MIXED


def eigensolve(H, n_states):
    """Lowest n_states eigenpairs of an assembled Hamiltonian.

    Uses the dense LAPACK general real eigensolver (Hessenberg + shifted
    QR); non-convergence surfaces as numpy.linalg.LinAlgError.  Requires
    1 <= n_states <= M-1.
    """
    n_states = int(n_states)
    if not 1 <= n_states <= H.M - 1:
        raise ValueError(f"n_states must be in [1, M-1] = [1, {H.M - 1}], got {n_states}")

    vals, vecs = np.linalg.eig(H.matrix)
    order = np.argsort(vals.real, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]

    max_imag = float(np.abs(vals.imag).max())
    spectral_range = float(vals.real.max() - vals.real.min())
    energies = vals.real[:n_states].copy()

    grid = H.grid
    weights = clenshaw_curtis_weights(grid)
    states = np.zeros((n_states, H.M + 1))
    states[:, 1:H.M] = _interior_vectors(vals, vecs, n_states)
    for psi in states:
        psi /= np.sqrt(weights @ (psi * psi))
        significant = np.nonzero(np.abs(psi) > _SIGN_EPS * np.abs(psi).max())[0]
        if psi[significant[0]] < 0.0:
            psi *= -1.0

    parities = [_classify_parity(psi) for psi in states]
    for i in range(n_states - 1):
        if energies[i + 1] - energies[i] < DEGENERATE_GAP_FACTOR * abs(energies[i]):
            parities[i] = parities[i + 1] = Parity.MIXED

    energies.flags.writeable = False
    states.flags.writeable = False
    return EigenSolution(
        L=H.L,
        M=H.M,
        energies=energies,
        max_imag=max_imag,
        imag_warning=max_imag > IMAG_WARN_FACTOR * spectral_range,
        states=states,
        parities=tuple(parities),
        trusted_count=H.M // 2,
        grid=grid,
    )


def solve(M, L, n_states, potential=None):
    """Assemble and eigensolve in one step."""
    return eigensolve(assemble(M, L, potential=potential), n_states)
