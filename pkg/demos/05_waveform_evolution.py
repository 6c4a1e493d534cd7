"""How the lowest pair morphs from box states into wall-bound image states.

At L = 1 the ground state is a single central hump and the first excited
state one full sine period, as in a rigid box.  By L = 100 both have become
symmetric/antisymmetric combinations of states clinging to either plane:
amplitude drains from the centre to the walls while the parities stay
even/odd (until the pair is numerically degenerate).
"""

import numpy as np

from imagewell import clenshaw_curtis_weights, solve


def edge_weight(sol, k):
    """Probability in the outer quarters of the gap for state k."""
    w = clenshaw_curtis_weights(sol.grid)
    x = sol.grid.scaled_nodes
    outer = np.abs(x) > sol.L / 4.0
    return (w * sol.states[k] ** 2) @ outer


def interior_nodes(sol, k):
    psi = sol.states[k]
    core = psi[np.abs(psi) > 1e-9 * np.abs(psi).max()]
    return int(np.sum(np.diff(np.sign(core)) != 0))


print(f"{'L':>6} {'E1':>14} {'E2':>14} {'parities':>12} "
      f"{'nodes':>6} {'edge prob psi1':>15}")
for L in (1.0, 20.0, 40.0, 100.0):
    sol = solve(max(100, int(20 * np.sqrt(L))), L, n_states=2)
    parities = f"{sol.parities[0].value}/{sol.parities[1].value}"
    nodes = f"{interior_nodes(sol, 0)},{interior_nodes(sol, 1)}"
    print(f"{L:6.1f} {sol.energies[0]:14.6e} {sol.energies[1]:14.6e} "
          f"{parities:>12} {nodes:>6} {edge_weight(sol, 0):15.3f}")

print("\nedge probability of the ground state climbs toward 1 as the planes "
      "separate: the electron localizes on the walls, split evenly by parity.")
