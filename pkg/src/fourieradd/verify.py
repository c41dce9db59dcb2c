"""Verification sweeps shared by the command line and the test suite."""

from __future__ import annotations

import numpy as np

from .arithmetic import (
    ConstAdderSpec,
    DraperAdderSpec,
    const_adder_circuit,
    draper_adder_circuit,
)
from .circuits import run_circuit
from .dense import (
    CheckReport,
    check_modularity,
    check_phase_adder_equivalence,
    circuit_to_matrix,
)
from .statevector import basis_state

DEFAULT_TOL = 1e-10
MODULAR_MATRIX_TOL = 1e-12  # pinned separately; not subject to the tolerance override

SUITES = ("const", "draper", "equivalence", "modularity", "all")


def verify_const_adder(n_max: int, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    """Exhaustive sweep of |a> + c for every a, c in [0, 2**N), one report per width.

    The error is the larger of the infidelity with the expected basis state
    and the probability mass left off target, so norm drift cannot hide.
    """
    reports = []
    for n in range(1, n_max + 1):
        dim = 1 << n
        worst, worst_c = 0.0, 0
        for c in range(dim):
            circuit = const_adder_circuit(ConstAdderSpec(n, c))
            for a in range(dim):
                state = basis_state(n, a)
                run_circuit(circuit, state)
                amplitudes = state.amplitudes
                on_target = abs(amplitudes[(a + c) % dim]) ** 2
                off_target = float(np.vdot(amplitudes, amplitudes).real) - on_target
                error = max(1.0 - on_target, off_target)
                if error > worst:
                    worst, worst_c = error, c
        reports.append(CheckReport("const-adder-exhaustive", n, worst_c, worst, worst < tol))
    return reports


def verify_draper(n_max: int, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    """Exhaustive sweep of |a, b> to |a, a+b mod 2**N> over both registers.

    The c field of each report holds the packed joint input a + 2**N * b
    where the worst error occurred.
    """
    reports = []
    for n in range(1, n_max + 1):
        dim = 1 << n
        circuit = draper_adder_circuit(DraperAdderSpec(n))
        worst, worst_input = 0.0, 0
        for b in range(dim):
            for a in range(dim):
                state = basis_state(2 * n, a + dim * b)
                run_circuit(circuit, state)
                amplitudes = state.amplitudes
                on_target = abs(amplitudes[a + dim * ((a + b) % dim)]) ** 2
                off_target = float(np.vdot(amplitudes, amplitudes).real) - on_target
                error = max(1.0 - on_target, off_target)
                if error > worst:
                    worst, worst_input = error, a + dim * b
        reports.append(CheckReport("register-adder-exhaustive", n, worst_input, worst, worst < tol))
    return reports


def verify_equivalence(
    n_max: int, samples: int = 20, seed: int = 0, tol: float = DEFAULT_TOL
) -> list[CheckReport]:
    """Tensor-vs-diagonal equivalence for random constants, one report per width."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    reports = []
    for n in range(1, n_max + 1):
        dim = 1 << n
        worst: CheckReport | None = None
        for c in rng.integers(0, 4 * dim, size=samples):
            report = check_phase_adder_equivalence(n, int(c), tol=tol)
            if worst is None or report.max_error > worst.max_error:
                worst = report
        reports.append(worst)
    return reports


def verify_modularity(n_max: int, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    """Wraparound behaviour: out-of-range columns, and constants shifted by 2**N."""
    reports = []
    for n in range(1, n_max + 1):
        dim = 1 << n
        worst: CheckReport | None = None
        for x in range(4 * dim):
            report = check_modularity(n, x, tol=tol)
            if worst is None or report.max_error > worst.max_error:
                worst = report
        reports.append(worst)
        # shifting the constant by 2**N must leave the realized operator untouched
        worst_error, worst_c = -1.0, 0
        for c in (0, 1, dim // 2, dim - 1):
            lhs = circuit_to_matrix(const_adder_circuit(ConstAdderSpec(n, c)))
            rhs = circuit_to_matrix(const_adder_circuit(ConstAdderSpec(n, c + dim)))
            error = float(np.max(np.abs(lhs - rhs)))
            if error > worst_error:
                worst_error, worst_c = error, c
        reports.append(
            CheckReport(
                "modular-constant-shift", n, worst_c, worst_error, worst_error < MODULAR_MATRIX_TOL
            )
        )
    return reports


def run_suite(
    suite: str, n_max: int, seed: int = 0, tol: float = DEFAULT_TOL
) -> list[CheckReport]:
    """Run one named suite (or all of them) and return every report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    if n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    reports: list[CheckReport] = []
    if suite in ("const", "all"):
        reports.extend(verify_const_adder(n_max, tol=tol))
    if suite in ("draper", "all"):
        reports.extend(verify_draper(n_max, tol=tol))
    if suite in ("equivalence", "all"):
        reports.extend(verify_equivalence(n_max, seed=seed, tol=tol))
    if suite in ("modularity", "all"):
        reports.extend(verify_modularity(n_max, tol=tol))
    return reports
