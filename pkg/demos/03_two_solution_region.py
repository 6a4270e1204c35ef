#!/usr/bin/env python3
"""Mapping the two-solution region for mixed-signature tensors on SO3.

With T1 > 0 fixed and T2, T3 < 0, solvability is governed by the cubic
2p^3 + (T1+T2+T3)p^2 - T1 T2 T3 on the interval (-T1, 0): its value at the
interior critical point decides between two solutions (positive), none
(negative), and a double-root boundary in between (a single solution).
"""
import numpy as np

from prescribed_ricci import solve

T1 = 10.0
n = 48
t2s = np.linspace(-2.0, -0.02, n)
t3s = np.linspace(-2.0, -0.02, n)

SYMBOL = {"TwoSolutions": "2", "Unique": "1", "NoSolution": "."}

print(f"T1 = {T1}, T2 horizontal in [-2, 0), T3 vertical in [-2, 0)")
print("2 = two solutions, 1 = one (double root), . = none\n")
for t3 in t3s[::-1]:
    row = "".join(SYMBOL[solve("so3", (T1, t2, t3)).kind] for t2 in t2s)
    print(f"  {t3:6.2f} |{row}")
print("          " + "-" * n)

print("\nAlong the segment T = (t, -1, -1) the transition sits exactly at")
print("t = 8, where the cubic 2p^3 + (t-2)p^2 - t develops a double root:\n")
for t in (6.0, 7.9, 8.0, 8.1, 12.0):
    out = solve("so3", (t, -1.0, -1.0))
    cs = ", ".join(f"{s.c:.6f}" for s in out.solutions)
    extra = f"  c = {{{cs}}}" if cs else ""
    print(f"  t = {t:5.2f}: {out.kind}{extra}")
