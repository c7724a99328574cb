"""Cross-validation suites tying the analytic and numerical routes together.

Each suite returns a list of CheckResult rows (name, measured value,
bound, pass flag). The helpers underneath are plain functions so the
test suite and the command line can share one implementation and one
set of bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import golden, nonrel, oracle, rel
from .specfun import hermite, kummer_1f1, laguerre, laguerre_derivative, log_gamma

__all__ = [
    "CheckResult",
    "SUITE_NAMES",
    "run_suites",
    "suite_identities",
    "suite_orthonormality",
    "suite_ode",
    "suite_oracle",
    "suite_tables",
    "suite_duality",
    "suite_limits",
]

_ODE_GRID = oracle.Grid(x_min=0.3, x_max=3.0, n_points=2001)


@dataclass(frozen=True)
class CheckResult:
    """One validation row; ``direction`` records which way the bound cuts."""

    check: str
    value: float
    bound: float
    passed: bool

    def as_dict(self) -> dict:
        return {"check": self.check, "value": self.value, "bound": self.bound, "pass": self.passed}


def _at_most(check: str, value: float, bound: float) -> CheckResult:
    return CheckResult(check=check, value=float(value), bound=float(bound), passed=bool(value <= bound))


def _at_least(check: str, value: float, bound: float) -> CheckResult:
    return CheckResult(check=check, value=float(value), bound=float(bound), passed=bool(value >= bound))


# ---------------------------------------------------------------- identities

def kummer_laguerre_deviation(n_max: int = 20) -> float:
    """Worst mismatch between the Laguerre recurrence and the series route.

    L_n^(a)(z) equals binom(n+a, n) 1F1(-n; a+1; z); the two sides are
    computed by unrelated algorithms. Normalized by max(1, |L|).
    """
    worst = 0.0
    zs = np.linspace(0.0, 30.0, 100)
    for alpha in (0.5, 1.5, 2.5):
        for n in range(n_max + 1):
            ln_binom = log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0) - log_gamma(alpha + 1.0)
            binom = math.exp(ln_binom)
            lag = laguerre(n, alpha, zs)
            for z, lv in zip(zs, lag):
                series = binom * kummer_1f1(-float(n), alpha + 1.0, float(z))
                worst = max(worst, abs(lv - series) / max(1.0, abs(lv)))
    return worst


def laguerre_recurrence_deviation() -> float:
    """Defect of the three-term recurrence evaluated from scratch at each order."""
    worst = 0.0
    zs = np.linspace(0.0, 30.0, 50)
    for alpha in (0.5, 1.5, 2.5):
        for n in range(1, 20):
            lo = laguerre(n - 1, alpha, zs)
            mid = laguerre(n, alpha, zs)
            hi = laguerre(n + 1, alpha, zs)
            resid = (n + 1) * hi - (2 * n + 1 + alpha - zs) * mid + (n + alpha) * lo
            scale = np.maximum(1.0, np.abs(hi))
            worst = max(worst, float(np.max(np.abs(resid) / scale)))
    return worst


def hermite_parity_deviation() -> float:
    worst = 0.0
    ys = np.linspace(0.0, 4.0, 41)
    for n in range(13):
        plus = hermite(n, ys)
        minus = hermite(n, -ys)
        sign = -1.0 if n % 2 else 1.0
        worst = max(worst, float(np.max(np.abs(minus - sign * plus) / np.maximum(1.0, np.abs(plus)))))
    return worst


def log_gamma_recurrence_deviation() -> float:
    worst = 0.0
    for x in np.linspace(0.5, 25.0, 99):
        lhs = log_gamma(float(x) + 1.0)
        rhs = log_gamma(float(x)) + math.log(float(x))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst


def laguerre_derivative_fd_deviation() -> float:
    """Derivative rule against a central difference of the recurrence route."""
    worst = 0.0
    h = 1e-6
    for n, alpha, z in ((1, 0.5, 1.0), (4, 1.5, 0.7), (6, 2.5, 3.0), (3, 0.5, 12.0)):
        exact = laguerre_derivative(n, alpha, z)
        fd = (laguerre(n, alpha, z + h) - laguerre(n, alpha, z - h)) / (2.0 * h)
        worst = max(worst, abs(exact - fd) / max(1.0, abs(exact)))
    return worst


def suite_identities() -> list[CheckResult]:
    return [
        _at_most("laguerre-kummer-agreement", kummer_laguerre_deviation(), 1e-12),
        _at_most("laguerre-recurrence", laguerre_recurrence_deviation(), 1e-12),
        _at_most("hermite-parity", hermite_parity_deviation(), 1e-13),
        _at_most("log-gamma-recurrence", log_gamma_recurrence_deviation(), 1e-13),
        _at_most("laguerre-derivative-fd", laguerre_derivative_fd_deviation(), 1e-8),
    ]


# ------------------------------------------------------------ orthonormality

def _sq_on_half_line(func):
    def integrand(x: float) -> float:
        return 0.0 if x <= 0.0 else float(func(x)) ** 2

    return integrand


def _product_on_half_line(fa, fb):
    def integrand(x: float) -> float:
        return 0.0 if x <= 0.0 else float(fa(x)) * float(fb(x))

    return integrand


def nonrel_orthonormality_deviation(g: float, n_max: int = 6) -> float:
    p = nonrel.OscillatorParams(g=g)
    funcs = [lambda x, n=n: nonrel.wavefunction(n, p, x) for n in range(n_max + 1)]
    worst = 0.0
    for i in range(n_max + 1):
        for j in range(i, n_max + 1):
            val = oracle.quadrature(_product_on_half_line(funcs[i], funcs[j]), 0.0, math.inf, tol=1e-11)
            target = 1.0 if i == j else 0.0
            worst = max(worst, abs(val - target))
    return worst


def harmonic_normalization_deviation(n_max: int = 6) -> float:
    p = nonrel.OscillatorParams()
    worst = 0.0
    for n in range(n_max + 1):
        # |psi|^2 is even, so the full-line norm is twice the half-line one
        half = oracle.quadrature(lambda x, n=n: float(nonrel.harmonic_wavefunction(n, p, x)) ** 2, 0.0, math.inf, tol=1e-11)
        worst = max(worst, abs(2.0 * half - 1.0))
    return worst


def radial3d_normalization_deviation() -> float:
    p = nonrel.OscillatorParams()
    worst = 0.0
    for l in range(4):
        for n in range(4):
            val = oracle.quadrature(_sq_on_half_line(lambda r, n=n, l=l: nonrel.oscillator3d_radial(n, l, p, r)), 0.0, math.inf, tol=1e-11)
            worst = max(worst, abs(val - 1.0))
    return worst


def spin_upper_normalization_deviation(g: float = 2.0, sym_constant: float = 0.0, n_max: int = 4) -> float:
    p = rel.DiracParams(g=g, sym_constant=sym_constant, branch=rel.Symmetry.SPIN)
    worst = 0.0
    for n in range(n_max + 1):
        e_val = rel.solve_spin_energy(n, p).value
        val = oracle.quadrature(_sq_on_half_line(lambda x, n=n: rel.spin_upper_spinor(n, p, e_val, x)), 0.0, math.inf, tol=1e-11)
        worst = max(worst, abs(val - 1.0))
    return worst


def pseudospin_lower_normalization_deviation() -> float:
    worst = 0.0
    for g, sym_constant, n_max in ((2.0, 0.0, 3), (6.0, -13.0, 2)):
        p = rel.DiracParams(g=g, sym_constant=sym_constant, branch=rel.Symmetry.PSEUDOSPIN)
        for n in range(n_max + 1):
            e_val = rel.solve_pseudospin_energy(n, p).value
            val = oracle.quadrature(_sq_on_half_line(lambda x, n=n: rel.pseudospin_lower_spinor(n, p, e_val, x)), 0.0, math.inf, tol=1e-11)
            worst = max(worst, abs(val - 1.0))
    return worst


def suite_orthonormality() -> list[CheckResult]:
    rows = [
        _at_most(f"nonrel-orthonormality-g{g:g}", nonrel_orthonormality_deviation(g), 1e-9)
        for g in (0.5, 2.0, 6.0)
    ]
    rows.append(_at_most("harmonic-normalization", harmonic_normalization_deviation(), 1e-9))
    rows.append(_at_most("radial3d-normalization", radial3d_normalization_deviation(), 1e-9))
    rows.append(_at_most("spin-upper-normalization", spin_upper_normalization_deviation(), 1e-9))
    rows.append(_at_most("pseudospin-lower-normalization", pseudospin_lower_normalization_deviation(), 1e-9))
    return rows


# ------------------------------------------------------------------ ode

def nonrel_ode_residual(n: int, g: float = 2.0, detune: float = 0.0) -> float:
    """Grid defect of the half-line eigenfunction, optionally detuned."""
    p = nonrel.OscillatorParams(g=g)
    d = nonrel.derive(p)
    e_val = nonrel.energy(n, p).value + detune
    eps = 2.0 * p.mass * e_val / p.hbar**2
    samples = nonrel.wavefunction(n, p, _ODE_GRID.points())

    def coefficient(x):
        return d.beta**2 * x**2 + d.alpha / x**2 - eps

    return oracle.ode_residual(samples, coefficient, _ODE_GRID)


def spin_ode_residual(n: int = 0, g: float = 2.0, sym_constant: float = 0.0) -> float:
    p = rel.DiracParams(g=g, sym_constant=sym_constant, branch=rel.Symmetry.SPIN)
    e_val = rel.solve_spin_energy(n, p).value
    d = rel.spin_derived(p, e_val)
    samples = rel.spin_upper_spinor(n, p, e_val, _ODE_GRID.points())

    def coefficient(x):
        return d.constant_term + d.energy_weight * p.potential(x)

    return oracle.ode_residual(samples, coefficient, _ODE_GRID)


def pseudospin_ode_residual(n: int = 1, g: float = 2.0, sym_constant: float = 0.0) -> float:
    p = rel.DiracParams(g=g, sym_constant=sym_constant, branch=rel.Symmetry.PSEUDOSPIN)
    e_val = rel.solve_pseudospin_energy(n, p).value
    d = rel.pseudospin_derived(p, e_val)
    samples = rel.pseudospin_lower_spinor(n, p, e_val, _ODE_GRID.points())

    def coefficient(x):
        return d.constant_term - d.energy_weight * p.potential(x)

    return oracle.ode_residual(samples, coefficient, _ODE_GRID)


def suite_ode() -> list[CheckResult]:
    return [
        _at_most("nonrel-ode-residual-n0", nonrel_ode_residual(0), 1e-6),
        _at_most("nonrel-ode-residual-n3", nonrel_ode_residual(3), 1e-6),
        _at_least("nonrel-ode-detuned-at-least", nonrel_ode_residual(0, detune=0.1), 1e-2),
        _at_most("spin-ode-residual", spin_ode_residual(), 1e-6),
        _at_most("pseudospin-ode-residual", pseudospin_ode_residual(), 1e-6),
    ]


# --------------------------------------------------------------- oracle

def fd_oracle_stats(gs=(0.5, 2.0, 6.0), count: int = 6) -> dict[str, float]:
    """Agreement of the grid eigensolver with the closed-form ladder.

    Returns the worst |difference| / estimate ratio, the worst error
    estimate, and the worst deviation of the measured convergence order
    from 2 on a spacing ladder.
    """
    worst_ratio = 0.0
    worst_estimate = 0.0
    for g in gs:
        p = nonrel.OscillatorParams(g=g)
        report = oracle.fd_eigenvalues(p.potential, count=count)
        for n in range(count):
            exact = nonrel.energy(n, p).value
            diff = abs(report.eigenvalues[n] - exact)
            worst_ratio = max(worst_ratio, diff / report.richardson_error[n])
            worst_estimate = max(worst_estimate, report.richardson_error[n])

    worst_order_dev = 0.0
    # coarse enough that the h^2 term dominates the h-independent inner
    # wall contribution, which for the softest barrier reaches ~1e-7
    sizes = (4000, 8000, 16000)
    for g in gs:
        p = nonrel.OscillatorParams(g=g)
        exact = nonrel.energy(0, p).value
        errs = []
        spacings = []
        for m in sizes:
            grid = oracle.Grid(n_points=m)
            rep = oracle.fd_eigenvalues(p.potential, count=1, grid=grid)
            errs.append(abs(rep.eigenvalues[0] - exact))
            spacings.append(grid.spacing)
        slope = float(np.polyfit(np.log(spacings), np.log(errs), 1)[0])
        worst_order_dev = max(worst_order_dev, abs(slope - 2.0))
    return {"ratio": worst_ratio, "estimate": worst_estimate, "order_dev": worst_order_dev}


def selfconsistent_ratio(n_max: int = 3) -> float:
    """Worst |self-consistent - root-solved| / max(1e-6, estimate) over the spin table."""
    worst = 0.0
    for col in golden.TABLE1_COLUMNS:
        p = golden.spin_params(col)
        for n in range(n_max + 1):
            solved = rel.solve_spin_energy(n, p).value
            rep = oracle.dirac_selfconsistent(n, p)
            bound = max(1e-6, rep.richardson_error[0])
            worst = max(worst, abs(rep.eigenvalues[0] - solved) / bound)
    return worst


def root_uniqueness_defect() -> float:
    """How far any table cell is from having exactly one residual root.

    Scans each cell's admissible window with 400 uniform cells; the
    defect is |number of roots - 1|, so anything nonzero is a failure.
    """
    worst = 0
    for col in golden.TABLE1_COLUMNS:
        p = golden.spin_params(col)
        lo = max(p.rest_energy, col.sym_constant - p.rest_energy)
        for n in range(golden.N_LEVELS):
            roots = oracle.scan_roots(lambda e: rel.spin_energy_residual(e, n, p), lo, 50.0, 400)
            worst = max(worst, abs(len(roots) - 1))
    for col in golden.TABLE2_COLUMNS:
        p = golden.pseudospin_params(col)
        lo = p.rest_energy + col.sym_constant
        for n in range(golden.N_LEVELS):
            roots = oracle.scan_roots(lambda e: rel.pseudospin_energy_residual(e, n, p), lo, 50.0, 400)
            worst = max(worst, abs(len(roots) - 1))
    return float(worst)


def xmin_sensitivity_ratio(gs=(0.5, 2.0, 6.0), count: int = 2) -> float:
    """Inner-wall sensitivity against the reported error estimate.

    For x_min = 1e-3 and 1e-4, the eigenvalue shift from pushing the
    wall in by a decade must stay inside the coarser run's estimate.
    """
    worst = 0.0
    for g in gs:
        p = nonrel.OscillatorParams(g=g)
        reports = {
            xm: oracle.fd_eigenvalues(p.potential, count=count, grid=oracle.Grid(x_min=xm))
            for xm in (1e-3, 1e-4, 1e-5)
        }
        for coarse, fine in ((1e-3, 1e-4), (1e-4, 1e-5)):
            for n in range(count):
                shift = abs(reports[coarse].eigenvalues[n] - reports[fine].eigenvalues[n])
                worst = max(worst, shift / reports[coarse].richardson_error[n])
    return worst


def quadrature_gamma_deviation() -> float:
    val = oracle.quadrature(lambda z: z**1.5 * math.exp(-z) if z > 0.0 else 0.0, 0.0, math.inf, tol=1e-12)
    return abs(val - math.gamma(2.5))


def suite_oracle() -> list[CheckResult]:
    stats = fd_oracle_stats()
    return [
        _at_most("fd-agreement-ratio", stats["ratio"], 1.0),
        _at_most("fd-error-estimate", stats["estimate"], 1e-5),
        _at_most("fd-convergence-order-dev", stats["order_dev"], 0.2),
        _at_most("selfconsistent-agreement-ratio", selfconsistent_ratio(), 1.0),
        _at_most("root-uniqueness-defect", root_uniqueness_defect(), 0.5),
        _at_most("xmin-sensitivity-ratio", xmin_sensitivity_ratio(), 1.0),
        _at_most("quadrature-gamma", quadrature_gamma_deviation(), 1e-10),
    ]


# --------------------------------------------------------------- tables

def suite_tables() -> list[CheckResult]:
    dev1 = golden.max_deviation(golden.compute_table1(), golden.TABLE1_REFERENCE)
    dev2 = golden.max_deviation(golden.compute_table2(), golden.TABLE2_REFERENCE)
    return [
        _at_most("table1-deviation", dev1, 5e-7),
        _at_most("table2-deviation", dev2, 5e-7),
    ]


# --------------------------------------------------------------- duality

def duality_deviation(gs=(2.0, 6.0), n_max: int = 10) -> float:
    """Spin/pseudospin ladder correspondence.

    A spin problem with symmetry constant c maps onto the pseudospin
    problem with constant c - 4 M c^2, its levels shifted down by
    exactly twice the rest energy. Natural units, c = 2 here.
    """
    worst = 0.0
    for g in gs:
        spin = rel.DiracParams(g=g, sym_constant=2.0, branch=rel.Symmetry.SPIN)
        pseudo = rel.DiracParams(g=g, sym_constant=-2.0, branch=rel.Symmetry.PSEUDOSPIN)
        for n in range(n_max + 1):
            e_spin = rel.solve_spin_energy(n, spin).value
            e_pseudo = rel.solve_pseudospin_energy(n, pseudo).value
            worst = max(worst, abs(e_spin - e_pseudo - 2.0 * spin.rest_energy))
    return worst


def kg_spin_deviation(gs=(0.5, 2.0, 6.0), n_max: int = 10) -> float:
    """Klein-Gordon levels against the zero-constant spin branch."""
    worst = 0.0
    for g in gs:
        p = rel.DiracParams(g=g, sym_constant=0.0, branch=rel.Symmetry.SPIN)
        for n in range(n_max + 1):
            e_kg = rel.klein_gordon_energy(n, p).value
            e_spin = rel.solve_spin_energy(n, p).value
            worst = max(worst, abs(e_kg - e_spin))
    return worst


def map_check_worst() -> float:
    worst = 0.0
    for g, sym_constant, n in ((2.0, 0.0, 0), (6.0, -2.0, 3), (0.5, 0.0, 1)):
        p = rel.DiracParams(g=g, sym_constant=sym_constant, branch=rel.Symmetry.PSEUDOSPIN)
        worst = max(worst, rel.pseudospin_map_check(n, p))
    return worst


def suite_duality() -> list[CheckResult]:
    return [
        _at_most("duality-shift", duality_deviation(), 1e-9),
        _at_most("kg-spin-equality", kg_spin_deviation(), 1e-10),
        _at_most("pseudospin-map-agreement", map_check_worst(), 1e-10),
    ]


# --------------------------------------------------------------- limits

def limit_slope_devs(n_values=(0, 1, 2), g: float = 2.0, c_values=(10.0, 100.0, 1000.0)) -> list[float]:
    """|slope + 2| of log-deviation vs log-c for each level."""
    devs = []
    for n in n_values:
        p = rel.DiracParams(g=g, branch=rel.Symmetry.SPIN)
        deviations = rel.nonrel_limit_check(n, p, c_values)
        slope = float(np.polyfit(np.log(c_values), np.log(deviations), 1)[0])
        devs.append(abs(slope + 2.0))
    return devs


def limit_monotone_defect(n_values=(0, 1, 2), g: float = 2.0, c_values=(10.0, 100.0, 1000.0)) -> float:
    worst = 0.0
    for n in n_values:
        p = rel.DiracParams(g=g, branch=rel.Symmetry.SPIN)
        deviations = rel.nonrel_limit_check(n, p, c_values)
        if any(b >= a for a, b in zip(deviations, deviations[1:])):
            worst = 1.0
    return worst


def level_spacing_deviation(gs=(0.0, 0.5, 2.0, 6.0), n_max: int = 9) -> float:
    worst = 0.0
    for g in gs:
        p = nonrel.OscillatorParams(g=g)
        for n in range(n_max + 1):
            diff = nonrel.energy(n + 1, p).value - nonrel.energy(n, p).value
            worst = max(worst, abs(diff - 2.0 * p.hbar * p.omega))
    return worst


def harmonic_reduction_deviation(n_max: int = 10) -> float:
    """g -> 0 reduces the ladder to the odd half-line harmonic levels."""
    p = nonrel.OscillatorParams(g=0.0)
    worst = 0.0
    for n in range(n_max + 1):
        worst = max(worst, abs(nonrel.energy(n, p).value - (2.0 * n + 1.5)))
    return worst


def suite_limits() -> list[CheckResult]:
    slope_devs = limit_slope_devs()
    return [
        _at_most("nonrel-limit-slope-dev", max(slope_devs), 0.2),
        _at_most("nonrel-limit-monotone-defect", limit_monotone_defect(), 0.5),
        _at_most("level-spacing", level_spacing_deviation(), 1e-14),
        _at_most("harmonic-reduction-g0", harmonic_reduction_deviation(), 0.0),
    ]


SUITE_NAMES = ("identities", "orthonormality", "ode", "oracle", "tables", "duality", "limits")

_SUITES = {
    "identities": suite_identities,
    "orthonormality": suite_orthonormality,
    "ode": suite_ode,
    "oracle": suite_oracle,
    "tables": suite_tables,
    "duality": suite_duality,
    "limits": suite_limits,
}


def run_suites(names) -> list[CheckResult]:
    """Run the named suites (or all of them for the name "all") in order."""
    if isinstance(names, str):
        names = [names]
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITE_NAMES)
        elif name in _SUITES:
            expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {('all',) + SUITE_NAMES}")
    rows: list[CheckResult] = []
    for name in expanded:
        rows.extend(_SUITES[name]())
    return rows
