"""Gate-list circuits and the transform between basis weight and phase.

A circuit is an ordered gate list over qubits 1..N. Gates apply left to
right, so the unitary of a circuit is the right-to-left product of its
gate matrices. Circuits are treated as immutable once built; helpers
like concat and inverse always return new objects.

Circuit interchange format (JSON):

    {"n": N, "gates": [{"kind": "h", "target": 1},
                       {"kind": "phase", "target": 2, "angle": 0.5},
                       {"kind": "cphase", "control": 2, "target": 1, "angle": 1.5707963267948966},
                       {"kind": "swap", "target": 1, "other": 2}]}
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .statevector import (
    StateVector,
    apply_controlled_phase,
    apply_hadamard,
    apply_phase,
    apply_swap,
)

HADAMARD = "h"
PHASE = "phase"
CONTROLLED_PHASE = "cphase"
SWAP = "swap"
GATE_KINDS = (HADAMARD, PHASE, CONTROLLED_PHASE, SWAP)


@dataclass(frozen=True)
class Gate:
    """One primitive operation: a kind plus the qubits and angle it needs.

    control is set exactly for "cphase", other exactly for "swap", and
    angle (radians) exactly for "phase" and "cphase".
    """

    kind: str
    target: int
    control: int | None = None
    other: int | None = None
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.target < 1:
            raise ValueError(f"target qubit must be >= 1, got {self.target}")
        if (self.control is not None) != (self.kind == CONTROLLED_PHASE):
            raise ValueError(f"control is required for {CONTROLLED_PHASE!r} and forbidden otherwise")
        if (self.other is not None) != (self.kind == SWAP):
            raise ValueError(f"other is required for {SWAP!r} and forbidden otherwise")
        needs_angle = self.kind in (PHASE, CONTROLLED_PHASE)
        if needs_angle != (self.angle is not None):
            raise ValueError("angle is required for phase kinds and forbidden otherwise")
        if needs_angle and not math.isfinite(self.angle):
            raise ValueError(f"angle must be finite, got {self.angle}")
        if self.control is not None and (self.control < 1 or self.control == self.target):
            raise ValueError(f"control qubit {self.control} invalid for target {self.target}")
        if self.other is not None and (self.other < 1 or self.other == self.target):
            raise ValueError(f"swap qubits must be distinct and >= 1, got {self.target} and {self.other}")


def hadamard(target: int) -> Gate:
    return Gate(HADAMARD, target)


def phase(target: int, angle: float) -> Gate:
    return Gate(PHASE, target, angle=float(angle))


def cphase(control: int, target: int, angle: float) -> Gate:
    return Gate(CONTROLLED_PHASE, target, control=control, angle=float(angle))


def swap(target: int, other: int) -> Gate:
    return Gate(SWAP, target, other=other)


@dataclass
class Circuit:
    """Ordered gate list over a fixed register width."""

    n_qubits: int
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits}")
        self.gates = tuple(self.gates)
        for gate in self.gates:
            for qubit in (gate.target, gate.control, gate.other):
                if qubit is not None and qubit > self.n_qubits:
                    raise ValueError(
                        f"gate {gate} addresses qubit {qubit}, register has {self.n_qubits}"
                    )

    def __len__(self) -> int:
        return len(self.gates)


def qft_circuit(n_qubits: int) -> Circuit:
    """Circuit whose unitary is the discrete Fourier transform on basis integers.

    Construction: for each target from the most significant qubit down, one
    Hadamard followed by controlled phases of angle 2*pi/2**l from every less
    significant qubit s, where l = target - s + 1. A closing swap network
    reverses qubit order, which lines the result up with the matrix whose
    (j, k) entry is exp(2*pi*i*j*k / 2**N) / sqrt(2**N).
    """
    if n_qubits < 1:
        raise ValueError(f"n_qubits must be a positive integer, got {n_qubits}")
    gates: list[Gate] = []
    for target in range(n_qubits, 0, -1):
        gates.append(hadamard(target))
        for source in range(target - 1, 0, -1):
            gates.append(cphase(source, target, 2.0 * math.pi / (1 << (target - source + 1))))
    for low in range(1, n_qubits // 2 + 1):
        gates.append(swap(low, n_qubits + 1 - low))
    return Circuit(n_qubits, tuple(gates))


def inverse_qft_circuit(n_qubits: int) -> Circuit:
    """The reverse transform: qft_circuit reversed with every angle negated."""
    return inverse(qft_circuit(n_qubits))


def run_circuit(circuit: Circuit, state: StateVector) -> None:
    """Apply the gates in list order, mutating the state in place."""
    if circuit.n_qubits != state.n_qubits:
        raise ValueError(
            f"circuit is over {circuit.n_qubits} qubit(s), state has {state.n_qubits}"
        )
    for gate in circuit.gates:
        if gate.kind == HADAMARD:
            apply_hadamard(state, gate.target)
        elif gate.kind == PHASE:
            apply_phase(state, gate.target, gate.angle)
        elif gate.kind == CONTROLLED_PHASE:
            apply_controlled_phase(state, gate.control, gate.target, gate.angle)
        else:
            apply_swap(state, gate.target, gate.other)


def concat(first: Circuit, second: Circuit) -> Circuit:
    """Circuit that runs first, then second."""
    if first.n_qubits != second.n_qubits:
        raise ValueError(
            f"register sizes differ: {first.n_qubits} vs {second.n_qubits} qubits"
        )
    return Circuit(first.n_qubits, first.gates + second.gates)


def inverse(circuit: Circuit) -> Circuit:
    """Reversed gate order with negated angles; Hadamard and swap are self-inverse."""
    inverted: list[Gate] = []
    for gate in reversed(circuit.gates):
        if gate.angle is None:
            inverted.append(gate)
        elif gate.kind == PHASE:
            inverted.append(phase(gate.target, -gate.angle))
        else:
            inverted.append(cphase(gate.control, gate.target, -gate.angle))
    return Circuit(circuit.n_qubits, tuple(inverted))


def shift_qubits(circuit: Circuit, offset: int, n_qubits_total: int) -> Circuit:
    """Remap a circuit onto a wider register, moving every qubit index up by offset."""
    if offset < 0:
        raise ValueError(f"offset must be >= 0, got {offset}")
    moved = tuple(
        Gate(
            gate.kind,
            gate.target + offset,
            None if gate.control is None else gate.control + offset,
            None if gate.other is None else gate.other + offset,
            gate.angle,
        )
        for gate in circuit.gates
    )
    return Circuit(n_qubits_total, moved)


def circuit_to_dict(circuit: Circuit) -> dict:
    """Serializable form following the documented circuit schema."""
    gates = []
    for gate in circuit.gates:
        entry: dict = {"kind": gate.kind}
        if gate.control is not None:
            entry["control"] = gate.control
        entry["target"] = gate.target
        if gate.other is not None:
            entry["other"] = gate.other
        if gate.angle is not None:
            entry["angle"] = gate.angle
        gates.append(entry)
    return {"n": circuit.n_qubits, "gates": gates}


def circuit_from_dict(data) -> Circuit:
    """Parse and validate the circuit schema."""
    if not isinstance(data, dict):
        raise ValueError("circuit document must be a JSON object")
    if set(data) != {"n", "gates"}:
        raise ValueError('circuit document must have exactly the fields "n" and "gates"')
    n_qubits = data["n"]
    if not isinstance(n_qubits, int) or isinstance(n_qubits, bool) or n_qubits < 1:
        raise ValueError(f'"n" must be a positive integer, got {n_qubits!r}')
    raw_gates = data["gates"]
    if not isinstance(raw_gates, list):
        raise ValueError('"gates" must be a list')
    gates: list[Gate] = []
    for position, entry in enumerate(raw_gates):
        if not isinstance(entry, dict):
            raise ValueError(f"gate {position} must be an object")
        kind = entry.get("kind")
        if kind not in GATE_KINDS:
            raise ValueError(f"gate {position} has unknown kind {kind!r}")
        allowed = {"kind", "target"}
        if kind == CONTROLLED_PHASE:
            allowed |= {"control", "angle"}
        elif kind == PHASE:
            allowed.add("angle")
        elif kind == SWAP:
            allowed.add("other")
        if set(entry) != allowed:
            raise ValueError(
                f"gate {position} ({kind}) must have exactly the fields {sorted(allowed)}"
            )
        target = entry["target"]
        if not isinstance(target, int) or isinstance(target, bool):
            raise ValueError(f"gate {position} target must be an integer")
        if kind == HADAMARD:
            gates.append(hadamard(target))
            continue
        if kind == SWAP:
            other = entry["other"]
            if not isinstance(other, int) or isinstance(other, bool):
                raise ValueError(f"gate {position} other must be an integer")
            gates.append(swap(target, other))
            continue
        angle = entry["angle"]
        if not isinstance(angle, (int, float)) or isinstance(angle, bool):
            raise ValueError(f"gate {position} angle must be a number")
        if kind == PHASE:
            gates.append(phase(target, angle))
        else:
            control = entry["control"]
            if not isinstance(control, int) or isinstance(control, bool):
                raise ValueError(f"gate {position} control must be an integer")
            gates.append(cphase(control, target, angle))
    return Circuit(n_qubits, tuple(gates))
