"""Chebyshev collocation grids and differentiation matrices.

Nodes are the Chebyshev extrema cos(j*pi/M), j = 0..M, ordered descending
from +1 to -1 and scaled to the physical interval [-L/2, L/2].  They are
built from the shifted-sine form sin(pi*(M - 2j)/(2M)) and mirrored about
the centre so that nodes[j] == -nodes[M-j] holds bit for bit; downstream
parity classification relies on that exactness.

Homogeneous Dirichlet boundary conditions are imposed by truncation:
``second_derivative_interior`` returns the (M-1)x(M-1) block of the second
derivative acting on the interior nodes only.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np


class DerivativeOrder(Enum):
    FIRST = 1
    SECOND = 2


class SecondDerivativeConstruction(Enum):
    """How the second-derivative matrix is formed."""

    #: Square the full first-derivative matrix, then truncate.
    SQUARED_FIRST = "squared_first"
    #: Explicit closed-form entries for the interior block (O(M^2) and the
    #: numerically steadier route; kept as a cross-check of the default).
    EXPLICIT_SECOND = "explicit_second"


@dataclass(frozen=True)
class ChebyshevGrid:
    """M+1 collocation nodes on [-1, 1] and their scaling to [-L/2, L/2]."""

    M: int
    L: float
    nodes: np.ndarray         # reference interval, descending from +1 to -1
    scaled_nodes: np.ndarray  # (L/2) * nodes


@dataclass(frozen=True)
class SpectralOperator:
    """Dense differentiation matrix with its construction metadata."""

    order: DerivativeOrder
    matrix: np.ndarray
    size: int
    construction: SecondDerivativeConstruction | None
    interior_only: bool


def _frozen(a):
    a.flags.writeable = False
    return a


def build_grid(M, L):
    """Chebyshev extrema grid of polynomial order M scaled to length L.

    Needs M >= 2 so at least one interior node exists.
    """
    M = int(M)
    if M < 2:
        raise ValueError(f"grid order M must be >= 2, got {M}")
    if L <= 0.0:
        raise ValueError(f"domain length L must be > 0, got {L}")
    j = np.arange(M // 2 + 1)
    upper = np.sin(np.pi * ((M - 2 * j) / (2.0 * M)))
    nodes = np.empty(M + 1)
    nodes[: M // 2 + 1] = upper
    nodes[M - j] = -upper  # mirror: exact antisymmetry by construction
    if M % 2 == 0:
        nodes[M // 2] = 0.0
    return ChebyshevGrid(M=M, L=float(L), nodes=_frozen(nodes),
                         scaled_nodes=_frozen((L / 2.0) * nodes))


def first_derivative_matrix(grid):
    """Full (M+1)x(M+1) first-derivative matrix on the scaled grid.

    Off-diagonal entries are (c_i/c_j)(-1)^(i+j)/(x_i - x_j) with c = 2 at
    the endpoints and 1 inside; each diagonal entry is the negated sum of
    the rest of its row, so the matrix kills constants exactly.
    """
    M = grid.M
    c = np.ones(M + 1)
    c[0] = c[M] = 2.0
    c[1::2] *= -1.0
    dx = grid.nodes[:, None] - grid.nodes[None, :]
    D = np.outer(c, 1.0 / c) / (dx + np.eye(M + 1))
    D[np.diag_indices_from(D)] -= D.sum(axis=1)
    D *= 2.0 / grid.L
    return SpectralOperator(order=DerivativeOrder.FIRST, matrix=_frozen(D),
                            size=M + 1, construction=None, interior_only=False)


def _explicit_second_interior(grid):
    """Interior block of the second-derivative matrix from explicit formulas."""
    M = grid.M
    xi = grid.nodes[1:M]
    eye = np.eye(M - 1)
    num = xi[:, None] ** 2 + xi[:, None] * xi[None, :] - 2.0
    den = (1.0 - xi[:, None] ** 2) * (xi[:, None] - xi[None, :] + eye) ** 2
    i = np.arange(1, M)
    sign = (-1.0) ** (i[:, None] + i[None, :])
    D2 = sign * num / den
    one_m_x2 = 1.0 - xi * xi
    D2[np.diag_indices_from(D2)] = -(((M * M - 1) * one_m_x2 + 3.0)
                                     / (3.0 * one_m_x2 * one_m_x2))
    return D2


def second_derivative_interior(grid, construction=SecondDerivativeConstruction.SQUARED_FIRST):
    """(M-1)x(M-1) second-derivative matrix on the interior scaled nodes.

    Rows and columns for the boundary nodes are dropped, which is exactly
    the homogeneous-Dirichlet truncation.  Both constructions agree to
    ~1e-12 elementwise; SQUARED_FIRST is the default.
    """
    if construction is SecondDerivativeConstruction.SQUARED_FIRST:
        D = first_derivative_matrix(grid).matrix
        D2 = (D @ D)[1:grid.M, 1:grid.M]
    elif construction is SecondDerivativeConstruction.EXPLICIT_SECOND:
        D2 = _explicit_second_interior(grid) * (2.0 / grid.L) ** 2
    else:
        raise ValueError(f"unknown second-derivative construction: {construction!r}")
    return SpectralOperator(order=DerivativeOrder.SECOND, matrix=_frozen(D2),
                            size=grid.M - 1, construction=construction,
                            interior_only=True)


def clenshaw_curtis_weights(grid):
    """Quadrature weights over [-L/2, L/2] for samples on the full grid.

    Standard Clenshaw-Curtis weights for the Chebyshev extrema, in the same
    descending node order as the grid.  Exact for polynomials through
    degree M; used downstream to normalize wavefunctions.
    """
    M = grid.M
    theta = np.pi * np.arange(M + 1) / M
    w = np.zeros(M + 1)
    v = np.ones(M - 1)
    inner = theta[1:M]
    if M % 2 == 0:
        w[0] = w[M] = 1.0 / (M * M - 1)
        for k in range(1, M // 2):
            v -= 2.0 * np.cos(2.0 * k * inner) / (4.0 * k * k - 1)
        v -= np.cos(M * inner) / (M * M - 1)
    else:
        w[0] = w[M] = 1.0 / (M * M)
        for k in range(1, (M - 1) // 2 + 1):
            v -= 2.0 * np.cos(2.0 * k * inner) / (4.0 * k * k - 1)
    w[1:M] = 2.0 * v / M
    return _frozen(w * (grid.L / 2.0))
