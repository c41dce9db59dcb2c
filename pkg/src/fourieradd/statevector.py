"""In-place statevector kernel over little-endian basis indices.

A register of N qubits holds 2**N complex amplitudes, indexed by the
integer value of the basis state. Qubit t (1-based) stores bit (t - 1)
of the index, so qubit 1 is the least significant and qubit t carries
basis weight 2**(t - 1).

Gates mutate the amplitude array in place through reshaped views that
expose the relevant bits as their own axes; no 2**N x 2**N matrix is
ever formed here. Nothing renormalizes behind the caller's back: if an
operation drifted the norm, that is a bug the tests must surface.

State interchange format (JSON):

    {"n": N, "amplitudes": [[re, im], ...]}    # 2**N entries, index order
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-10
SQRT1_2 = math.sqrt(0.5)


@dataclass
class StateVector:
    """Dense amplitude vector of an N-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits}")
        self.amplitudes = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected 2**{self.n_qubits} = {1 << self.n_qubits} amplitudes, "
                f"got shape {self.amplitudes.shape}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def copy(self) -> StateVector:
        return StateVector(self.n_qubits, self.amplitudes.copy())


def basis_state(n_qubits: int, value: int) -> StateVector:
    """One-hot state |value> on an n_qubits register."""
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits}")
    dim = 1 << n_qubits
    if not 0 <= value < dim:
        raise ValueError(f"value {value} out of range: expected 0 <= value < 2**{n_qubits} = {dim}")
    amplitudes = np.zeros(dim, dtype=np.complex128)
    amplitudes[value] = 1.0
    return StateVector(n_qubits, amplitudes)


def superposition_state(n_qubits: int, terms) -> StateVector:
    """Weighted superposition from (value, weight) pairs.

    Weights are taken exactly as given; they must already be normalized
    (sum of squared magnitudes 1 within NORM_TOL), and values must be
    distinct and in range.
    """
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits}")
    dim = 1 << n_qubits
    amplitudes = np.zeros(dim, dtype=np.complex128)
    seen: set[int] = set()
    norm_sq = 0.0
    for value, weight in terms:
        if not 0 <= value < dim:
            raise ValueError(f"value {value} out of range: expected 0 <= value < 2**{n_qubits} = {dim}")
        if value in seen:
            raise ValueError(f"duplicate basis value {value}")
        seen.add(value)
        amplitudes[value] = weight
        norm_sq += abs(weight) ** 2
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(
            f"weights are not normalized: sum of squared magnitudes is {norm_sq!r}, "
            f"expected 1 within {NORM_TOL}"
        )
    return StateVector(n_qubits, amplitudes)


def _check_qubit(n_qubits: int, index: int, name: str = "target") -> None:
    if not 1 <= index <= n_qubits:
        raise ValueError(f"{name} qubit {index} out of range [1, {n_qubits}]")


def _split_view(amplitudes: np.ndarray, target: int) -> np.ndarray:
    # axes: (higher bits, target bit, lower bits); slices along the middle
    # axis are views, so writes land in the original array
    return amplitudes.reshape(-1, 2, 1 << (target - 1))


def _pair_view(amplitudes: np.ndarray, lo: int, hi: int) -> np.ndarray:
    # axes: (top bits, hi bit, middle bits, lo bit, low bits) with lo < hi
    return amplitudes.reshape(-1, 2, 1 << (hi - lo - 1), 2, 1 << (lo - 1))


def apply_hadamard(state: StateVector, target: int) -> None:
    """Map the target-bit pair (a0, a1) to ((a0+a1), (a0-a1)) / sqrt(2)."""
    _check_qubit(state.n_qubits, target)
    view = _split_view(state.amplitudes, target)
    clear = view[:, 0, :].copy()
    set_ = view[:, 1, :].copy()
    view[:, 0, :] = (clear + set_) * SQRT1_2
    view[:, 1, :] = (clear - set_) * SQRT1_2


def apply_phase(state: StateVector, target: int, theta: float) -> None:
    """Multiply every amplitude whose target bit is set by exp(i*theta)."""
    _check_qubit(state.n_qubits, target)
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    view = _split_view(state.amplitudes, target)
    view[:, 1, :] *= cmath.exp(1j * theta)


def apply_controlled_phase(state: StateVector, control: int, target: int, theta: float) -> None:
    """Multiply amplitudes with both the control and target bits set by exp(i*theta).

    The action is symmetric in (control, target).
    """
    _check_qubit(state.n_qubits, control, "control")
    _check_qubit(state.n_qubits, target, "target")
    if control == target:
        raise ValueError("control and target must differ")
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")
    lo, hi = sorted((control, target))
    view = _pair_view(state.amplitudes, lo, hi)
    view[:, 1, :, 1, :] *= cmath.exp(1j * theta)


def apply_swap(state: StateVector, qubit_a: int, qubit_b: int) -> None:
    """Exchange the two qubits: amplitudes at indices differing only in those bits trade places."""
    _check_qubit(state.n_qubits, qubit_a, "qubit_a")
    _check_qubit(state.n_qubits, qubit_b, "qubit_b")
    if qubit_a == qubit_b:
        raise ValueError("swap qubits must differ")
    lo, hi = sorted((qubit_a, qubit_b))
    view = _pair_view(state.amplitudes, lo, hi)
    held = view[:, 0, :, 1, :].copy()
    view[:, 0, :, 1, :] = view[:, 1, :, 0, :]
    view[:, 1, :, 0, :] = held


def fidelity(state_a: StateVector, state_b: StateVector) -> float:
    """Squared magnitude of the overlap <a|b>."""
    if state_a.n_qubits != state_b.n_qubits:
        raise ValueError(
            f"register sizes differ: {state_a.n_qubits} vs {state_b.n_qubits} qubits"
        )
    return float(abs(np.vdot(state_a.amplitudes, state_b.amplitudes)) ** 2)


def state_to_dict(state: StateVector) -> dict:
    """Serializable form following the documented state schema."""
    return {
        "n": state.n_qubits,
        "amplitudes": [[float(z.real), float(z.imag)] for z in state.amplitudes],
    }


def state_from_dict(data) -> StateVector:
    """Parse and validate the state schema; rejects non-normalized inputs."""
    if not isinstance(data, dict):
        raise ValueError("state document must be a JSON object")
    if set(data) != {"n", "amplitudes"}:
        raise ValueError('state document must have exactly the fields "n" and "amplitudes"')
    n_qubits = data["n"]
    if not isinstance(n_qubits, int) or isinstance(n_qubits, bool) or n_qubits < 1:
        raise ValueError(f'"n" must be a positive integer, got {n_qubits!r}')
    entries = data["amplitudes"]
    dim = 1 << n_qubits
    if not isinstance(entries, list) or len(entries) != dim:
        raise ValueError(f'"amplitudes" must be a list of 2**{n_qubits} = {dim} entries')
    amplitudes = np.empty(dim, dtype=np.complex128)
    for index, entry in enumerate(entries):
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(part, (int, float)) and not isinstance(part, bool) for part in entry)
        ):
            raise ValueError(f"amplitude {index} must be a [re, im] pair of numbers")
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"amplitude {index} is not finite")
        amplitudes[index] = complex(re, im)
    state = StateVector(n_qubits, amplitudes)
    norm_sq = state.norm_sq()
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(
            f"state is not normalized: sum of squared magnitudes is {norm_sq!r}, "
            f"expected 1 within {NORM_TOL}"
        )
    return state
