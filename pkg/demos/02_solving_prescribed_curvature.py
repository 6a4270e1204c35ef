#!/usr/bin/env python3
"""Solving Ric(g) = c T across every outcome class.

Given diagonal components T = (T1, T2, T3) of a prescribed tensor in a
bracket frame, the solver decides solvability and constructs all solutions:
a unique metric, exactly two metrics with different constants, a family on a
linear constraint with one fixed constant, a family with the constant left
free, or nothing.  Every output is certified against both curvature routes.
"""
import numpy as np

from prescribed_ricci import GROUPS, certify, solve

CASES = [
    ("SO3", (1.0, 1.0, 1.0), "isotropic tensor: the round metric, c = 2"),
    ("SO3", (3.0, 2.0, 1.0), "positive-definite: always one solution"),
    ("SO3", (10.0, -1.0, -1.0), "mixed signature: two genuinely different c"),
    ("SO3", (4.0, -1.0, -1.0), "mixed signature outside the solvable band"),
    ("SO3", (1.0, 0.0, 0.0), "rank one: a family with v1 = v2 + v3, c = 8/T1"),
    ("SL2", (2.0, -1.0, -1.0), "one positive direction dominating"),
    ("SL2", (-1.0, -1.0, 1.0), "the balanced family: v3 = v1 + v2, c = 8/T3"),
    ("SL2", (-2.0, 0.0, 0.0), "two zeros: family with c = -8/T1"),
    ("E2", (0.0, 0.0, 0.0), "flat metrics: any c works on v1 = v2"),
    ("E2", (2.0, -1.0, -1.0), "unique via the closed form"),
    ("E11", (0.0, 0.0, -2.0), "family with c = -8/T3"),
    ("H3", (1.0, -1.0, -1.0), "the Heisenberg closed form, c = 2 T1/(T2 T3)"),
    ("R3", (0.0, 0.0, 1.0), "flat group, nonzero tensor: impossible"),
]

for name, T, story in CASES:
    out = solve(GROUPS[name], T)
    print(f"{name} T={T}  ->  {out.kind}   [{out.case_label}]")
    print(f"    {story}")
    for sol in out.solutions:
        cert = certify(name, sol.metric.v, sol.c, T)
        print(f"    v = {np.round(sol.metric.v, 8)}  c = {sol.c:.8f}  "
              f"residual = {max(cert.residual_closed_form, cert.residual_oracle):.1e}")
    if out.family is not None:
        f = out.family
        constraint = f.constraint or "no constraint"
        c_text = f"c = {f.c:.6g}" if f.c is not None else "c unconstrained"
        print(f"    family: {constraint}, {c_text}; "
              f"sample v = {np.round(f.sample.metric.v, 8)}")
    for t in out.traces:
        print(f"    cubic trace: p = {t.p:.12f}, q = {t.q:.12f}"
              + (f"  (double root)" if t.multiplicity == 2 else ""))
    for note in out.notes:
        print(f"    note: {note}")
    print()
