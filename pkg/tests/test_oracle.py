"""Grid eigensolver, quadrature, root scan and self-consistent iteration."""
from __future__ import annotations

import math

import numpy as np
import pytest

from isospectra.errors import GridTooCoarse, NoConvergence, ToleranceNotMet
from isospectra.nonrel import OscillatorParams, energy, wavefunction
from isospectra.oracle import (
    Grid,
    OracleMethod,
    OracleReport,
    dirac_selfconsistent,
    fd_eigenvalues,
    ode_residual,
    quadrature,
    scan_roots,
)
from isospectra.rel import (
    DiracParams,
    Symmetry,
    pseudospin_energy_residual,
    spin_energy_residual,
)

FAST_GRID = Grid(1e-4, 20.0, 8000)


def spin_params(g, cs):
    return DiracParams(g=g, sym_constant=cs, branch=Symmetry.SPIN)


# ---------------------------------------------------------------- grid


def test_grid_geometry():
    g = Grid(0.5, 2.5, 101)
    assert g.spacing == pytest.approx(0.02, abs=1e-15)
    pts = g.points()
    assert pts[0] == 0.5 and pts[-1] == 2.5 and pts.size == 101
    gh = g.halved_spacing()
    assert gh.n_points == 201
    assert gh.spacing == pytest.approx(0.5 * g.spacing, rel=1e-15)
    gc = g.doubled_cutoff()
    assert gc.x_min == 1.0 and gc.n_points == 101


def test_grid_validates():
    with pytest.raises(ValueError):
        Grid(x_min=0.0)
    with pytest.raises(ValueError):
        Grid(x_min=2.0, x_max=1.0)
    with pytest.raises(ValueError):
        Grid(n_points=99)
    with pytest.raises(ValueError):
        Grid(n_points=100.5)


def test_report_validates():
    with pytest.raises(ValueError):
        OracleReport((), Grid(), (), OracleMethod.FINITE_DIFFERENCE)
    with pytest.raises(ValueError):
        OracleReport((1.0, 2.0), Grid(), (1e-6,), OracleMethod.FINITE_DIFFERENCE)
    with pytest.raises(ValueError):
        OracleReport((2.0, 1.0), Grid(), (1e-6, 1e-6), OracleMethod.FINITE_DIFFERENCE)
    with pytest.raises(ValueError):
        OracleReport((1.0,), Grid(), (0.0,), OracleMethod.FINITE_DIFFERENCE)


# ------------------------------------------------- finite differences


def test_fd_matches_closed_form_ladder():
    p = OscillatorParams(g=2.0)
    rep = fd_eigenvalues(p.potential, 4, FAST_GRID)
    assert rep.method is OracleMethod.FINITE_DIFFERENCE
    for n, e in enumerate(rep.eigenvalues):
        assert abs(e - energy(n, p).value) <= rep.richardson_error[n]
    assert rep.eigenvalues == pytest.approx((2.5, 4.5, 6.5, 8.5), abs=1e-4)


def test_fd_harmonic_half_line_gives_odd_ladder():
    # Dirichlet wall at the origin keeps only the odd full-line states
    rep = fd_eigenvalues(lambda x: 0.5 * x**2, 3, FAST_GRID)
    for k, e in enumerate(rep.eigenvalues):
        assert abs(e - (2.0 * k + 1.5)) <= rep.richardson_error[k]


def test_fd_stronger_barrier():
    p = OscillatorParams(g=6.0)
    rep = fd_eigenvalues(p.potential, 3, FAST_GRID)
    assert rep.eigenvalues == pytest.approx((3.5, 5.5, 7.5), abs=1e-4)


def test_fd_rejects_bad_input():
    p = OscillatorParams()
    with pytest.raises(ValueError):
        fd_eigenvalues(p.potential, 0, FAST_GRID)
    with pytest.raises(ValueError):
        fd_eigenvalues(p.potential, 900, FAST_GRID)
    with pytest.raises(ValueError):
        fd_eigenvalues(p.potential, 2, FAST_GRID, mass=-1.0)
    with pytest.raises(ValueError):
        fd_eigenvalues(lambda x: np.where(x < 1.0, np.inf, 0.0), 2, FAST_GRID)


def test_fd_coarse_grid_detected():
    p = OscillatorParams(g=2.0)
    with pytest.raises(GridTooCoarse):
        fd_eigenvalues(p.potential, 2, Grid(1e-4, 20.0, 500))


def test_fd_accepts_scalar_only_potential():
    rep = fd_eigenvalues(lambda x: 0.5 * float(x) ** 2 + 1.0 / float(x) ** 2, 1, FAST_GRID)
    assert rep.eigenvalues[0] == pytest.approx(2.5, abs=1e-4)


# ----------------------------------------------------------- quadrature


def test_quadrature_exact_on_cubics():
    assert quadrature(lambda x: x * x, 0.0, 1.0, tol=1e-12) == 1.0 / 3.0
    assert quadrature(lambda x: x**3 - 2.0 * x, -1.0, 2.0, tol=1e-12) == pytest.approx(0.75, abs=1e-14)


def test_quadrature_ground_state_norm():
    p = OscillatorParams(g=2.0)
    val = quadrature(lambda x: wavefunction(0, p, x) ** 2 if x > 0 else 0.0, 0.0, math.inf)
    assert val == pytest.approx(1.0, abs=1e-10)


def test_quadrature_gamma_integral():
    val = quadrature(lambda z: z**1.5 * math.exp(-z), 0.0, math.inf, tol=1e-11)
    assert val == pytest.approx(math.gamma(2.5), abs=1e-10)


def test_quadrature_semi_infinite_gaussian():
    val = quadrature(lambda x: math.exp(-x * x), 0.0, math.inf, tol=1e-12)
    assert val == pytest.approx(0.5 * math.sqrt(math.pi), abs=1e-12)


def test_quadrature_unreachable_tolerance():
    with pytest.raises(ToleranceNotMet):
        quadrature(lambda x: 1.0 / x, 1e-300, 1.0, tol=1e-10)


def test_quadrature_needs_decay_for_infinite_limit():
    with pytest.raises(ToleranceNotMet):
        quadrature(lambda x: 1.0, 0.0, math.inf)


def test_quadrature_rejects_bad_window():
    with pytest.raises(ValueError):
        quadrature(lambda x: x, math.inf, 1.0)
    with pytest.raises(ValueError):
        quadrature(lambda x: x, 1.0, 1.0)
    with pytest.raises(ValueError):
        quadrature(lambda x: x, 0.0, 1.0, tol=0.0)


# ------------------------------------------------------------ root scan


def test_scan_finds_lowest_spin_level():
    p = spin_params(0.5, 0.0)
    roots = scan_roots(lambda e: spin_energy_residual(e, 0, p), 1e-9, 50.0, 400)
    assert len(roots) == 1
    assert roots[0] == pytest.approx(2.5509859806747426, abs=1e-9)


def test_scan_finds_lowest_pseudospin_level():
    p = DiracParams(g=2.0, sym_constant=0.0, branch=Symmetry.PSEUDOSPIN)
    roots = scan_roots(lambda e: pseudospin_energy_residual(e, 1, p), 1.0 + 1e-9, 50.0, 400)
    assert len(roots) == 1
    assert roots[0] == pytest.approx(3.2918405183876533, abs=1e-9)


def test_scan_rootless_window():
    assert scan_roots(lambda x: x * x + 1.0, -5.0, 5.0, 100) == []


def test_scan_exact_grid_hit():
    assert scan_roots(lambda x: x * x - 4.0, 0.0, 5.0, 5) == [2.0]


def test_scan_multiple_roots():
    roots = scan_roots(math.sin, 0.5, 7.0, 50)
    assert len(roots) == 2
    assert roots[0] == pytest.approx(math.pi, abs=1e-9)
    assert roots[1] == pytest.approx(2.0 * math.pi, abs=1e-9)


def test_scan_rejects_bad_input():
    with pytest.raises(ValueError):
        scan_roots(math.sin, 2.0, 1.0, 10)
    with pytest.raises(ValueError):
        scan_roots(math.sin, 0.0, 1.0, 1)


# -------------------------------------------------- self-consistency


@pytest.mark.parametrize(
    "n,g,cs,target",
    [
        (0, 2.0, 0.0, 3.1503636),
        (2, 6.0, 2.0, 6.4867680),
        (0, 0.5, 0.0, 2.5509860),
    ],
)
def test_selfconsistent_matches_tabulated(n, g, cs, target):
    rep = dirac_selfconsistent(n, spin_params(g, cs))
    assert rep.method is OracleMethod.SELF_CONSISTENT
    assert abs(rep.eigenvalues[0] - target) <= max(1e-6, rep.richardson_error[0])


def test_selfconsistent_rejects_bad_input():
    with pytest.raises(ValueError):
        dirac_selfconsistent(0, DiracParams(branch=Symmetry.PSEUDOSPIN))
    with pytest.raises(ValueError):
        dirac_selfconsistent(-1, spin_params(2.0, 0.0))
    with pytest.raises(ValueError):
        dirac_selfconsistent(50, spin_params(2.0, 0.0), Grid(1e-4, 20.0, 400))


# --------------------------------------------------------- ode residual


def test_ode_residual_gaussian():
    grid = Grid(0.3, 3.0, 2001)
    f = np.exp(-0.5 * grid.points() ** 2)
    assert ode_residual(f, lambda x: x * x - 1.0, grid) <= 1e-6


def test_ode_residual_detects_wrong_coefficient():
    grid = Grid(0.3, 3.0, 2001)
    f = np.exp(-0.5 * grid.points() ** 2)
    assert ode_residual(f, lambda x: x * x - 1.1, grid) >= 1e-2


def test_ode_residual_zero_function():
    grid = Grid(0.3, 3.0, 2001)
    assert ode_residual(np.zeros(grid.n_points), lambda x: x, grid) == 0.0


def test_ode_residual_rejects_bad_samples():
    grid = Grid(0.3, 3.0, 2001)
    with pytest.raises(ValueError):
        ode_residual(np.zeros(5), lambda x: x, grid)
    bad = np.zeros(grid.n_points)
    bad[3] = np.nan
    with pytest.raises(ValueError):
        ode_residual(bad, lambda x: x, grid)
