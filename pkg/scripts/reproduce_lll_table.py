#!/usr/bin/env python3
"""Recompute the minimal color count for each published parameter row and
print the resulting upper-bound fractions side by side."""
from fractions import Fraction

from dominator.lll import TABLE1_ROWS, LllParams, minimal_colors


def main():
    print(f"{'delta':>5} {'Delta':>5} {'a':>2} {'b':>2} {'N':>3} "
          f"{'bound':>6} {'e*P*Delta^2':>22}")
    for row in TABLE1_ROWS:
        rep = minimal_colors(LllParams(*row))
        bound = Fraction(rep.minimal_N - 1, rep.minimal_N)
        print(f"{row[0]:>5} {row[1]:>5} {row[2]:>2} {row[3]:>2} "
              f"{rep.minimal_N:>3} {str(bound):>6} "
              f"{float(rep.condition_value):>22.18f}")


if __name__ == "__main__":
    main()
