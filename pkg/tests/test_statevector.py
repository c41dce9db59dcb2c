import math

import numpy as np
import pytest

from fourieradd import (
    StateVector,
    apply_controlled_phase,
    apply_hadamard,
    apply_phase,
    apply_swap,
    basis_state,
    fidelity,
    state_from_dict,
    state_to_dict,
    superposition_state,
)

SQRT1_2 = math.sqrt(0.5)


def random_state(n_qubits, seed):
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(1 << n_qubits) + 1j * rng.standard_normal(1 << n_qubits)
    return StateVector(n_qubits, amps / np.linalg.norm(amps))


class TestBasisState:
    def test_single_qubit_zero(self):
        assert np.array_equal(basis_state(1, 0).amplitudes, [1, 0])

    def test_two_qubits_three(self):
        assert np.array_equal(basis_state(2, 3).amplitudes, [0, 0, 0, 1])

    def test_value_out_of_range_names_bound(self):
        with pytest.raises(ValueError, match=r"0 <= value < 2\*\*3 = 8"):
            basis_state(3, 8)

    def test_negative_value(self):
        with pytest.raises(ValueError):
            basis_state(2, -1)

    def test_width_must_be_positive(self):
        with pytest.raises(ValueError):
            basis_state(0, 0)


class TestSuperpositionState:
    def test_two_terms(self):
        state = superposition_state(2, [(1, SQRT1_2), (2, SQRT1_2)])
        # weights are stored exactly as given
        assert state.amplitudes[1] == SQRT1_2
        assert state.amplitudes[2] == SQRT1_2
        assert state.amplitudes[0] == 0 and state.amplitudes[3] == 0

    def test_single_term_matches_basis_state(self):
        state = superposition_state(3, [(5, 1.0)])
        assert np.array_equal(state.amplitudes, basis_state(3, 5).amplitudes)

    def test_complex_weights(self):
        state = superposition_state(1, [(0, 0.6), (1, 0.8j)])
        assert state.amplitudes[1] == 0.8j

    def test_norm_error_reports_norm(self):
        with pytest.raises(ValueError, match=r"1\.17"):
            superposition_state(2, [(0, 0.6), (3, 0.9)])

    def test_duplicate_value_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            superposition_state(2, [(1, SQRT1_2), (1, SQRT1_2)])

    def test_value_out_of_range(self):
        with pytest.raises(ValueError):
            superposition_state(1, [(2, 1.0)])


class TestHadamard:
    def test_on_zero(self):
        state = basis_state(1, 0)
        apply_hadamard(state, 1)
        np.testing.assert_allclose(state.amplitudes, [SQRT1_2, SQRT1_2], atol=1e-15)

    def test_on_one_gives_minus(self):
        state = basis_state(1, 1)
        apply_hadamard(state, 1)
        np.testing.assert_allclose(state.amplitudes, [SQRT1_2, -SQRT1_2], atol=1e-15)

    def test_acts_on_named_qubit_only(self):
        # |10> has qubit 2 set; a Hadamard on qubit 1 spreads over indices 2 and 3
        state = basis_state(2, 2)
        apply_hadamard(state, 1)
        np.testing.assert_allclose(state.amplitudes, [0, 0, SQRT1_2, SQRT1_2], atol=1e-15)

    def test_twice_is_identity(self):
        state = random_state(4, seed=11)
        before = state.amplitudes.copy()
        apply_hadamard(state, 3)
        apply_hadamard(state, 3)
        assert np.max(np.abs(state.amplitudes - before)) < 1e-12

    def test_target_out_of_range(self):
        with pytest.raises(ValueError, match=r"\[1, 2\]"):
            apply_hadamard(basis_state(2, 0), 3)


class TestPhase:
    def test_pi_flips_sign_of_set_bit(self):
        state = basis_state(1, 1)
        apply_phase(state, 1, math.pi)
        np.testing.assert_allclose(state.amplitudes, [0, -1], atol=1e-15)

    def test_leaves_clear_bit_alone(self):
        state = basis_state(1, 0)
        apply_phase(state, 1, 1.234)
        assert state.amplitudes[0] == 1.0

    def test_quarter_turn(self):
        state = superposition_state(1, [(0, SQRT1_2), (1, SQRT1_2)])
        apply_phase(state, 1, math.pi / 2)
        np.testing.assert_allclose(state.amplitudes, [SQRT1_2, SQRT1_2 * 1j], atol=1e-15)

    def test_touches_exactly_the_set_bit_stratum(self):
        state = random_state(5, seed=7)
        before = state.amplitudes.copy()
        target = 3
        apply_phase(state, target, 0.77)
        mask = (np.arange(32) >> (target - 1)) & 1
        # untouched amplitudes are bitwise identical, touched ones all moved
        assert np.array_equal(state.amplitudes[mask == 0], before[mask == 0])
        assert np.all(state.amplitudes[mask == 1] != before[mask == 1])

    def test_rejects_non_finite_angle(self):
        with pytest.raises(ValueError):
            apply_phase(basis_state(1, 0), 1, math.inf)


class TestControlledPhase:
    def test_acts_only_when_both_bits_set(self):
        state = basis_state(2, 3)
        apply_controlled_phase(state, 1, 2, math.pi)
        np.testing.assert_allclose(state.amplitudes, [0, 0, 0, -1], atol=1e-15)

    def test_skips_control_clear(self):
        state = basis_state(2, 2)  # target bit set, control bit clear
        apply_controlled_phase(state, 1, 2, math.pi)
        assert state.amplitudes[2] == 1.0

    def test_symmetric_in_control_and_target(self):
        base = random_state(4, seed=3)
        one, two = base.copy(), base.copy()
        apply_controlled_phase(one, 2, 4, 0.9)
        apply_controlled_phase(two, 4, 2, 0.9)
        assert np.array_equal(one.amplitudes, two.amplitudes)

    def test_control_equals_target_rejected(self):
        with pytest.raises(ValueError, match="differ"):
            apply_controlled_phase(basis_state(2, 0), 1, 1, 0.5)

    def test_control_out_of_range(self):
        with pytest.raises(ValueError, match="control"):
            apply_controlled_phase(basis_state(2, 0), 5, 1, 0.5)


class TestSwap:
    def test_exchanges_bits(self):
        state = basis_state(2, 1)
        apply_swap(state, 1, 2)
        assert np.array_equal(state.amplitudes, basis_state(2, 2).amplitudes)

    def test_fixed_point_when_bits_equal(self):
        state = basis_state(2, 3)
        apply_swap(state, 1, 2)
        assert state.amplitudes[3] == 1.0

    def test_distant_qubits(self):
        state = basis_state(3, 4)
        apply_swap(state, 1, 3)
        assert np.array_equal(state.amplitudes, basis_state(3, 1).amplitudes)

    def test_same_qubit_rejected(self):
        with pytest.raises(ValueError):
            apply_swap(basis_state(2, 0), 2, 2)


class TestFidelity:
    def test_identical_states(self):
        assert fidelity(basis_state(3, 5), basis_state(3, 5)) == 1.0

    def test_orthogonal_states(self):
        assert fidelity(basis_state(3, 5), basis_state(3, 6)) == 0.0

    def test_half_overlap(self):
        plus = superposition_state(1, [(0, SQRT1_2), (1, SQRT1_2)])
        assert abs(fidelity(basis_state(1, 0), plus) - 0.5) < 1e-15

    def test_stays_in_unit_range(self):
        for seed in range(10):
            state = random_state(3, seed)
            value = fidelity(state, state)
            assert 0.0 <= value <= 1.0 + 1e-12

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError, match="differ"):
            fidelity(basis_state(2, 0), basis_state(3, 0))


def test_norm_preserved_under_long_random_sequence():
    rng = np.random.default_rng(99)
    state = random_state(12, seed=5)
    for _ in range(60):
        kind = rng.integers(0, 4)
        target = int(rng.integers(1, 13))
        second = int(rng.integers(1, 12))
        second = second if second < target else second + 1
        if kind == 0:
            apply_hadamard(state, target)
        elif kind == 1:
            apply_phase(state, target, float(rng.uniform(-6, 6)))
        elif kind == 2:
            apply_controlled_phase(state, second, target, float(rng.uniform(-6, 6)))
        else:
            apply_swap(state, target, second)
    assert abs(state.norm_sq() - 1.0) < 1e-10
    assert np.all(np.isfinite(state.amplitudes.real))
    assert np.all(np.isfinite(state.amplitudes.imag))


class TestStateVectorType:
    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="2\\*\\*2"):
            StateVector(2, np.zeros(3, dtype=np.complex128))

    def test_rejects_nonpositive_width(self):
        with pytest.raises(ValueError):
            StateVector(0, np.zeros(1, dtype=np.complex128))

    def test_copy_is_independent(self):
        state = basis_state(2, 1)
        clone = state.copy()
        apply_swap(state, 1, 2)
        assert clone.amplitudes[1] == 1.0


class TestStateJson:
    def test_round_trip_is_bitwise(self):
        state = random_state(3, seed=21)
        back = state_from_dict(state_to_dict(state))
        assert back.n_qubits == 3
        assert np.array_equal(back.amplitudes, state.amplitudes)

    def test_shape_of_document(self):
        doc = state_to_dict(basis_state(1, 1))
        assert doc == {"n": 1, "amplitudes": [[0.0, 0.0], [1.0, 0.0]]}

    def test_rejects_wrong_entry_count(self):
        with pytest.raises(ValueError, match="entries"):
            state_from_dict({"n": 2, "amplitudes": [[1.0, 0.0]]})

    def test_rejects_non_normalized(self):
        with pytest.raises(ValueError, match="not normalized"):
            state_from_dict({"n": 1, "amplitudes": [[0.5, 0.0], [0.5, 0.0]]})

    def test_rejects_bad_pair(self):
        with pytest.raises(ValueError, match="pair"):
            state_from_dict({"n": 1, "amplitudes": [[1.0], [0.0, 0.0]]})

    def test_rejects_missing_field(self):
        with pytest.raises(ValueError, match="fields"):
            state_from_dict({"amplitudes": [[1.0, 0.0], [0.0, 0.0]]})

    def test_rejects_extra_field(self):
        with pytest.raises(ValueError, match="fields"):
            state_from_dict({"n": 1, "amplitudes": [[1.0, 0.0], [0.0, 0.0]], "note": 1})
