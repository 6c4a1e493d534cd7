import math

import numpy as np
import pytest

from imagewell.analysis import (
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
from imagewell.solver import solve


def zero_potential(x, L):
    return np.zeros_like(np.asarray(x, dtype=float))


def test_pib_energy_values():
    assert pib_energy(1, 1.0) == pytest.approx(math.pi**2 / 2.0, rel=1e-15)
    assert pib_energy(2, 1.0) == pytest.approx(2.0 * math.pi**2, rel=1e-15)
    assert pib_energy(3, 2.0) == pytest.approx(9.0 * math.pi**2 / 8.0, rel=1e-15)
    with pytest.raises(ValueError):
        pib_energy(0, 1.0)
    with pytest.raises(ValueError):
        pib_energy(1, 0.0)


def test_image_state_energies():
    assert image_state_energy(1) == -0.03125
    assert image_state_energy(2) == -0.0078125
    assert image_state_energy(3) == pytest.approx(-0.0034722, abs=5e-8)
    with pytest.raises(ValueError):
        image_state_energy(0)


def test_quantum_defect_published_rows():
    assert quantum_defect(4.0122415062, 1, 1.0) == pytest.approx(0.0983071, abs=1e-7)
    assert quantum_defect(18.467338037, 2, 1.0) == pytest.approx(0.0655065, abs=1e-7)
    assert quantum_defect(0.5 * math.pi**2, 1, 1.0) == pytest.approx(0.0, abs=1e-15)


def test_quantum_defect_rejects_bound_states():
    with pytest.raises(ValueError, match="positive"):
        quantum_defect(-0.03125, 1, 10000.0)


def test_defect_round_trip():
    # the box formula at N - delta reproduces the input energy
    for energy, n in ((4.0122415062, 1), (491.40879397, 10)):
        d = quantum_defect(energy, n, 1.0)
        back = 0.5 * (math.pi * (n - d)) ** 2
        assert back == pytest.approx(energy, rel=1e-12)


def test_single_plane_ground_shape():
    assert single_plane_ground(0.0) == 0.0
    assert single_plane_ground(4.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    with pytest.raises(ValueError):
        single_plane_ground(-1.0)


def test_single_plane_ground_normalized():
    # Gauss-Legendre quadrature on [0, 160]; the tail beyond is ~1e-35
    nodes, weights = np.polynomial.legendre.leggauss(300)
    x = 80.0 * (nodes + 1.0)
    w = 80.0 * weights
    assert w @ single_plane_ground(x) ** 2 == pytest.approx(1.0, abs=1e-10)


def test_analytic_splitting_values():
    assert analytic_splitting(8.0) == 0.0
    assert analytic_splitting(4.0) == pytest.approx(0.25 * math.exp(-1.0) * 0.5, rel=1e-15)
    assert analytic_splitting(4.0) == pytest.approx(0.0459849, abs=1e-7)
    with pytest.raises(ValueError):
        analytic_splitting(0.0)


def test_analytic_splitting_matches_surface_formula():
    # 2 psi0(L/2) psi0'(L/2) with the derivative taken by central differences
    L = 20.0
    h = 1e-6
    dpsi = (single_plane_ground(L / 2 + h) - single_plane_ground(L / 2 - h)) / (2 * h)
    want = 2.0 * single_plane_ground(L / 2) * dpsi
    assert analytic_splitting(L) == pytest.approx(want, abs=1e-8)


def test_default_order_rule():
    assert default_order(1.0) == 100
    assert default_order(60.0) == 155
    assert default_order(1e6) == 2000


def test_splitting_sweep_small_box():
    (rec,) = splitting_sweep([1.0], M=100)
    assert rec.M == 100
    assert rec.dE_numeric == pytest.approx(14.455096530800002, rel=1e-8)
    assert rec.resolvable
    assert rec.dE_analytic == analytic_splitting(1.0)


def test_splitting_positive_and_decaying():
    records = splitting_sweep([10.0, 20.0, 40.0, 60.0, 80.0], M=180)
    gaps = [r.dE_numeric for r in records]
    assert all(g > 0.0 for g in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_defect_table_matches_quantum_defect():
    records = defect_table(1.0, 100, 10)
    assert [r.N for r in records] == list(range(1, 11))
    for r in records:
        assert r.defect == pytest.approx(quantum_defect(r.energy, r.N, 1.0), abs=1e-14)
    defects = [r.defect for r in records]
    assert all(a > b for a, b in zip(defects, defects[1:]))


def test_defect_table_zero_potential_hook():
    for r in defect_table(1.0, 60, 10, potential=zero_potential):
        assert abs(r.defect) <= 1e-10


def test_defect_table_negative_energies_marked():
    records = defect_table(200.0, 283, 4)
    assert all(r.energy < 0.0 for r in records)
    assert all(math.isnan(r.defect) for r in records)


def test_energy_sweep_consistency():
    (point,) = energy_sweep([1.0], n_states=3, M=100)
    sol = solve(100, 1.0, n_states=3)
    np.testing.assert_array_equal(point.energies, sol.energies)
    assert point.M == 100 and point.L == 1.0
