"""Chebyshev collocation machinery: nodes, derivatives, quadrature.

Spectral differentiation is exact on polynomials up to the grid order and
converges geometrically on smooth functions; Clenshaw-Curtis weights turn
samples on the same nodes into an integral.  Both are the building blocks
of the Hamiltonian downstream.
"""

import numpy as np

from imagewell import (
    SecondDerivativeConstruction,
    build_grid,
    clenshaw_curtis_weights,
    first_derivative_matrix,
    second_derivative_interior,
)

grid = build_grid(16, 2.0)
D = first_derivative_matrix(grid).matrix
x = grid.scaled_nodes

print("node symmetry is exact by construction:")
print(f"  x[3] = {x[3]:+.16f}, x[13] = {x[13]:+.16f}, "
      f"bitwise mirrored: {x[3] == -x[13]}")

print("\nfirst-derivative accuracy on [-1, 1], M = 16:")
for label, f, df in [
    ("x^3      ", x**3, 3 * x**2),
    ("x^16     ", x**16, 16 * x**15),
    ("exp(x)   ", np.exp(x), np.exp(x)),
    ("sin(3x)  ", np.sin(3 * x), 3 * np.cos(3 * x)),
]:
    print(f"  {label} max error {np.abs(D @ f - df).max():.3e}")

print("\nsecond derivative with Dirichlet truncation (interior nodes only):")
g = build_grid(24, 2.0)
op = second_derivative_interior(g).matrix
xi = g.scaled_nodes[1:-1]
f = np.cos(np.pi * xi / 2.0)  # vanishes at the boundary
print(f"  cos(pi x/2): max |D2 f + (pi/2)^2 f| = "
      f"{np.abs(op @ f + (np.pi / 2) ** 2 * f).max():.3e}")

sq = second_derivative_interior(g, SecondDerivativeConstruction.SQUARED_FIRST)
ex = second_derivative_interior(g, SecondDerivativeConstruction.EXPLICIT_SECOND)
rel = np.abs(sq.matrix - ex.matrix) / np.abs(ex.matrix)
print(f"  squared-D vs explicit formulas: max elementwise rel diff {rel.max():.3e}")

w = clenshaw_curtis_weights(g)
print("\nClenshaw-Curtis quadrature on [-1, 1], M = 24:")
print(f"  integral of 1    : {w.sum():.15f}   (exact 2)")
print(f"  integral of x^2  : {w @ g.scaled_nodes ** 2:.15f}   (exact 2/3)")
print(f"  integral of cos x: {w @ np.cos(g.scaled_nodes):.15f}   "
      f"(exact {2 * np.sin(1.0):.15f})")
