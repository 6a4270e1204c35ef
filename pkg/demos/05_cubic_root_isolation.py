#!/usr/bin/env python3
"""Certified cubic root isolation on open intervals.

The solver's hard cases reduce to locating roots of a cubic inside an open
interval, including the delicate double-root boundary between the
two-solution and no-solution regimes.  The isolator splits at critical
points, brackets sign changes, polishes with safeguarded Newton, and detects
multiplicity at critical points instead of trusting closed forms.
"""
import math

import numpy as np

from prescribed_ricci import CubicPoly, roots_in_interval

print("Two roots inside (-10, 0), from 2p^3 + 8p^2 - 10 = 2(p-1)(p^2+5p+5):")
rep = roots_in_interval(CubicPoly((2, 8, 0, -10)), -10.0, 0.0)
for r, m in zip(rep.roots, rep.multiplicities):
    print(f"  p = {r:.15f}  multiplicity {m}")
print(f"  exact: (-5 - sqrt5)/2 = {(-5 - math.sqrt(5)) / 2:.15f}")
print(f"         (-5 + sqrt5)/2 = {(-5 + math.sqrt(5)) / 2:.15f}")

print("\nHalf-line query (0, inf) on 2p^3 + 3p^2 - 1 = (p+1)^2 (2p-1):")
rep = roots_in_interval(CubicPoly((2, 3, 0, -1)), 0.0, math.inf)
print(f"  roots: {rep.roots}, multiplicities: {rep.multiplicities}")

print("\nDouble and triple roots are reported with their multiplicity:")
rep = roots_in_interval(CubicPoly(tuple(2 * np.poly([2.0, 2.0, -1.0]))),
                        -math.inf, math.inf)
print(f"  2(p-2)^2(p+1):  roots {rep.roots}, mult {rep.multiplicities}")
rep = roots_in_interval(CubicPoly((1.0, 0.0, 0.0, 0.0)), -1.0, 1.0)
print(f"  p^3:            roots {rep.roots}, mult {rep.multiplicities}")

print("\nRoots exactly on the boundary of the open interval are excluded:")
poly = CubicPoly(tuple(2 * np.poly([0.0, 2.0, -2.0])))
print(f"  roots of 2p(p-2)(p+2) in (0, 1.9):   {roots_in_interval(poly, 0.0, 1.9).roots}")
print(f"  roots of 2p(p-2)(p+2) in (-1.9, 1.9): {roots_in_interval(poly, -1.9, 1.9).roots}")

print("\nRecovery accuracy on 2000 random planted cubics:")
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(2000):
    while True:
        roots = np.sort(rng.uniform(-10, 10, size=3))
        if np.min(np.diff(roots)) > 1e-2:
            break
    rep = roots_in_interval(CubicPoly(tuple(2 * np.poly(roots))),
                            -math.inf, math.inf)
    worst = max(worst, float(np.max(np.abs(np.array(rep.roots) - roots))))
print(f"  worst absolute error: {worst:.2e}")
