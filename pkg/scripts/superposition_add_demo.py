"""Add a constant to a three-branch superposition and print both states.

Usage: python3 scripts/superposition_add_demo.py [--n 3] [--const 5]
"""

import argparse
import math

from fourieradd import apply_const_add, superposition_state


def print_state(label, state):
    print(label)
    probabilities = state.probabilities()
    for index in range(state.dim):
        if probabilities[index] < 1e-12:
            continue
        amplitude = state.amplitudes[index]
        print(f"  |{index}>  amp=({amplitude.real:+.4f}{amplitude.imag:+.4f}j)  p={probabilities[index]:.4f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3, help="register width in qubits")
    parser.add_argument("--const", type=int, default=5, help="constant to add")
    args = parser.parse_args()

    dim = 1 << args.n
    weight = 1.0 / math.sqrt(3.0)
    values = (0, 1, dim - 1)
    state = superposition_state(args.n, [(value, weight) for value in values])

    print_state(f"input: equal superposition of {values}", state)
    apply_const_add(state, args.const)
    expected = tuple((value + args.const) % dim for value in values)
    print_state(f"after adding {args.const} (expect branches at {expected})", state)


if __name__ == "__main__":
    main()
