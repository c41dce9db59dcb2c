"""Print the operation-count table for both adders.

Usage: python3 scripts/complexity_table.py [--n-max 12]

Each row is recomputed from freshly built circuits and cross-checked
against the closed forms N*N+2N and N(N+1)/2 before printing.
"""

import argparse

from fourieradd import complexity_table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=12, help="largest register width")
    args = parser.parse_args()

    rows = complexity_table(args.n_max)
    print(f"{'N':>3}  {'T_const':>8}  {'T_draper_inner':>15}  {'swaps':>6}")
    for row in rows:
        print(
            f"{row.n_qubits:>3}  {row.const_adder_ops:>8}  "
            f"{row.register_adder_inner_ops:>15}  {row.swaps_per_transform:>6}"
        )


if __name__ == "__main__":
    main()
