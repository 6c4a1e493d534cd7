"""Two limits of one spectrum: particle in a box and bound image states.

At small separation the walls dominate and levels sit just below the ideal
box ladder (the quantum defect measures how far).  At large separation the
electron binds to either plane and the spectrum collapses onto
near-degenerate pairs at -1/(32 n^2).  In between, only about half of the
matrix eigenvalues can be trusted; the defect series makes the breakdown
visible without rerunning at higher order.
"""

from imagewell import defect_table, image_state_energy, pib_energy, solve

print("small box, L = 1 (M = 100): levels vs the ideal box ladder")
print(f"  {'N':>2} {'energy':>14} {'box value':>14} {'defect':>10}")
for rec in defect_table(1.0, 100, 10):
    print(f"  {rec.N:>2} {rec.energy:14.8f} {pib_energy(rec.N, 1.0):14.8f} "
          f"{rec.defect:10.7f}")

print("\ntrust diagnostic: the defect decays smoothly, then fluctuates")
records = defect_table(1.0, 100, 65)
window = records[44:]
wobbles = [r.N for prev, r in zip(window, window[1:]) if r.defect >= prev.defect]
print(f"  first non-monotone defect steps (M/2 = 50): N = {wobbles[:5]}")

print("\nwide gap, L = 10000 (M = 600): near-degenerate image-state pairs")
sol = solve(600, 10000.0, n_states=10)
print(f"  {'n':>2} {'calculated':>22} {'limit -1/(32 n^2)':>18}")
for i, e in enumerate(sol.energies):
    print(f"  {i + 1:>2} {e:22.15e} {image_state_energy(i // 2 + 1):18.10f}")
gap = sol.energies[1] - sol.energies[0]
print(f"  lowest pair gap: {gap:.2e} (degenerate to solver resolution; "
      f"parities: {sol.parities[0].value}, {sol.parities[1].value})")
