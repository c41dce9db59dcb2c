"""Dense reference layer: closed-form matrices and brute-force checks.

Everything here is built straight from defining formulas, independent of
the gate kernels, so circuits and matrices can be checked against each
other. Matrices have 4**N entries, so the layer is capped at
DENSE_MAX_QUBITS qubits.

Integer exponents of omega = exp(2*pi*i / 2**N) are reduced mod 2**N
before the complex exponential is evaluated. The reduction is exact for
integers and keeps the argument small, so no precision is lost to huge
products.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, run_circuit
from .statevector import basis_state

DENSE_MAX_QUBITS = 12
DEFAULT_CHECK_TOL = 1e-10


def _require_dense(n_qubits: int) -> None:
    if not 1 <= n_qubits <= DENSE_MAX_QUBITS:
        raise ValueError(
            f"dense layer supports 1..{DENSE_MAX_QUBITS} qubits, got {n_qubits}"
        )


def dft_matrix(n_qubits: int) -> np.ndarray:
    """Unitary with entry (j, k) = omega**(j*k) / sqrt(2**N)."""
    _require_dense(n_qubits)
    dim = 1 << n_qubits
    indices = np.arange(dim, dtype=np.int64)
    exponents = np.outer(indices, indices) % dim
    return np.exp((2j * np.pi / dim) * exponents) / math.sqrt(dim)


def phase_adder_matrix(n_qubits: int, constant: int) -> np.ndarray:
    """Diagonal matrix with entry (j, j) = omega**(j*c)."""
    _require_dense(n_qubits)
    dim = 1 << n_qubits
    reduced = constant % dim
    indices = np.arange(dim, dtype=np.int64)
    exponents = (indices * reduced) % dim
    return np.diag(np.exp((2j * np.pi / dim) * exponents))


def permutation_add_matrix(n_qubits: int, constant: int) -> np.ndarray:
    """Classical ground truth: entry (j, k) is 1 exactly when j = k + c mod 2**N."""
    _require_dense(n_qubits)
    dim = 1 << n_qubits
    reduced = constant % dim
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    columns = np.arange(dim)
    matrix[(columns + reduced) % dim, columns] = 1.0
    return matrix


def circuit_to_matrix(circuit: Circuit) -> np.ndarray:
    """Brute-force unitary of a circuit: column k is the circuit run on |k>."""
    _require_dense(circuit.n_qubits)
    dim = 1 << circuit.n_qubits
    matrix = np.empty((dim, dim), dtype=np.complex128)
    for column in range(dim):
        state = basis_state(circuit.n_qubits, column)
        run_circuit(circuit, state)
        matrix[:, column] = state.amplitudes
    return matrix


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one numeric check.

    The c field holds whichever parameter was swept: the adder constant,
    the out-of-range column index, or the basis input where the worst
    error occurred.
    """

    check: str
    n_qubits: int
    c: int
    max_error: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n_qubits,
            "c": self.c,
            "max_error": self.max_error,
            "pass": self.passed,
        }


def check_phase_adder_equivalence(
    n_qubits: int, constant: int, tol: float = DEFAULT_CHECK_TOL
) -> CheckReport:
    """Tensor-product form of the Fourier-basis adder against its diagonal form.

    Builds the product of the N single-qubit rotations factor by factor,
    most significant qubit leftmost, and compares it with
    diag(omega**(j*c)). While accumulating, every intermediate matrix must
    split into blocks where the lower-right equals the upper-left times
    omega**(c * 2**(m-1)), the phase the newly absorbed qubit contributes;
    that per-step block error is folded into the reported max_error.
    """
    _require_dense(n_qubits)
    dim = 1 << n_qubits
    reduced = constant % dim  # shifts of 2**N change each rotation by a full number of turns

    def rotation(theta: float) -> np.ndarray:
        return np.array([[1.0, 0.0], [0.0, cmath.exp(1j * theta)]], dtype=np.complex128)

    tensor = rotation(reduced * math.pi / (1 << (n_qubits - 1)))
    max_error = 0.0
    for t in range(2, n_qubits + 1):
        tensor = np.kron(rotation(reduced * math.pi / (1 << (n_qubits - t))), tensor)
        half = tensor.shape[0] // 2
        step_phase = cmath.exp(2j * math.pi * ((reduced * (1 << (t - 1))) % dim) / dim)
        block_error = np.max(
            np.abs(tensor[half:, half:] - step_phase * tensor[:half, :half])
        )
        max_error = max(max_error, float(block_error))
    diagonal = phase_adder_matrix(n_qubits, constant)
    max_error = max(max_error, float(np.max(np.abs(tensor - diagonal))))
    return CheckReport("phase-adder-equivalence", n_qubits, constant, max_error, max_error < tol)


def check_modularity(n_qubits: int, x: int, tol: float = DEFAULT_CHECK_TOL) -> CheckReport:
    """The inverse transform of the Fourier column for any x >= 0 lands on |x mod 2**N>.

    x may exceed 2**N by any amount; the column only depends on x mod 2**N
    because integer omega exponents wrap exactly.
    """
    _require_dense(n_qubits)
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    dim = 1 << n_qubits
    column = np.array(
        [cmath.exp(2j * math.pi * ((j * x) % dim) / dim) for j in range(dim)],
        dtype=np.complex128,
    ) / math.sqrt(dim)
    result = dft_matrix(n_qubits).conj().T @ column
    infidelity = 1.0 - float(abs(result[x % dim]) ** 2)
    return CheckReport("modularity", n_qubits, x, infidelity, infidelity < tol)
