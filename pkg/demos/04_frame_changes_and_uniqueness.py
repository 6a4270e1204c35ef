#!/usr/bin/env python3
"""Frame changes, and testing uniqueness claims empirically.

A solution is only meaningful up to the symmetries of the frame: basis
changes that preserve the bracket relations and keep T diagonal.  The probe
samples such changes, re-solves in each new frame, pulls the solutions back,
and checks that the constant c and (where claimed) the metric are invariant.
"""
import numpy as np

from prescribed_ricci import (check_milnor_frame, probe,
                              sample_diagonal_preserving_changes)

print("Admissible changes depend on the degeneracy of T.")
print("Distinct components on SO3 admit only sign flips:")
for M in sample_diagonal_preserving_changes("so3", (3.0, 2.0, 1.0), 3, rng=2):
    print(np.round(M, 6), "\n")

print("An equal pair admits a circle of rotations inside the pair:")
M = sample_diagonal_preserving_changes("so3", (3.0, 1.0, 1.0), 1, rng=3)[0]
print(np.round(M, 6))
print("bracket-preserving:", check_milnor_frame("so3", M))

print("\nOn SL2 the balanced family tensor admits a non-compact set of")
print("changes (rotations, hyperbolic boosts, and swap branches):")
M = sample_diagonal_preserving_changes("sl2", (-1.0, -1.0, 1.0), 1, rng=7)[0]
print(np.round(M, 6))
print("bracket-preserving:", check_milnor_frame("sl2", M))

print("\nProbe reports across 16 sampled frames:")
for name, T in (("so3", (3.0, 2.0, 1.0)),
                ("so3", (10.0, -1.0, -1.0)),
                ("sl2", (-3.0, -2.0, 1.0)),
                ("e11", (0.0, 0.0, -2.0)),
                ("h3", (1.0, -1.0, -2.0)),
                ("e2", (0.0, 0.0, 0.0))):
    rep = probe(name, T, n=16, rng=11)
    c_text = ("c unconstrained" if rep.c_unconstrained
              else f"c spread {rep.c_spread:.2e}")
    print(f"  {name:<4} T={T}: {rep.base_kind:<13} {c_text}, "
          f"metrics match: {rep.metric_match}, "
          f"violations: {len(rep.violations)}")
