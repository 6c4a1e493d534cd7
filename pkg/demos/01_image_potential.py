"""The image-charge potential in its three forms.

An electron between two grounded planes sees the infinite ladder of its
own image charges.  The paired image sum has a closed digamma form; this
script shows how slowly the raw series crawls toward it, and how much of
the difference from the nearest-images-only potential is just the
screening constant 2*gamma/(4L).
"""

import numpy as np

from imagewell import (
    EULER_GAMMA,
    convergence_table,
    potential_closed,
    potential_first_image,
)

L = 1.0

print(f"closed form at the midpoint: {potential_closed(L / 2, L):+.10f}")
print(f"-ln(2)/L                   : {-np.log(2.0) / L:+.10f}")

print("\ntruncated pair series at x = L/2 (note ~1/n_terms^2 convergence):")
table = convergence_table(0.5 * L, L, [20, 200, 2000, 20000])
for n, v in table.rows:
    print(f"  {n:>6d} terms  {v:+.10f}   error {v - table.closed_form:+.3e}")
print(f"  closed        {table.closed_form:+.10f}")

print("\nclosed form vs first image generation across the gap:")
print(f"  {'x/L':>5} {'closed':>12} {'first image':>12} {'gap - 2g/4L':>12}")
for a in (0.05, 0.25, 0.5, 0.75, 0.95):
    x = a * L
    vc = potential_closed(x, L)
    vf = potential_first_image(x, L)
    residual = vc - vf - EULER_GAMMA / (2.0 * L)
    print(f"  {a:5.2f} {vc:12.6f} {vf:12.6f} {residual:12.6f}")
print("\nthe ladder beyond the first images mostly adds the constant "
      f"2*gamma/(4L) = {EULER_GAMMA / (2.0 * L):.6f}, raising the barrier.")
