"""Tunneling splitting of the lowest pair versus the analytic estimate.

The double well's even/odd ground pair is split by tunneling through the
central barrier.  The surface-formula estimate built from the single-plane
ground state, dE = (L/16) exp(-L/4) (1 - L/8), tracks the computed
splitting up to a modest constant factor; dividing out the polynomial
prefactor exposes the exp(-L/4) decay.
"""

import numpy as np

from imagewell import splitting_sweep

L_values = [20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0]
records = splitting_sweep(L_values)

print(f"{'L':>5} {'M':>5} {'dE numeric':>14} {'|dE analytic|':>14} {'ratio':>7}")
for r in records:
    ratio = r.dE_numeric / abs(r.dE_analytic)
    print(f"{r.L:5.0f} {r.M:5d} {r.dE_numeric:14.6e} "
          f"{abs(r.dE_analytic):14.6e} {ratio:7.3f}")

L = np.array([r.L for r in records])
gaps = np.array([r.dE_numeric for r in records])
raw_slope = np.polyfit(L, np.log(gaps), 1)[0]
prefactor = (L / 16.0) * np.abs(1.0 - L / 8.0)
rate = -np.polyfit(L, np.log(gaps / prefactor), 1)[0]
print(f"\nraw log-slope of the numeric splitting : {raw_slope:+.4f} per Bohr")
print(f"decay rate with the prefactor divided out: {rate:.4f}  (estimate: 0.25)")
print("the polynomial prefactor flattens the raw slope; the exponential "
      "factor itself matches exp(-L/4) closely.")
