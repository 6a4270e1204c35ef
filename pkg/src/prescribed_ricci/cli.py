"""Command-line front end.

Subcommands: solve, certify, classify, sweep, oracle-ricci, plus batch for a
jobs file with one JSON job per line.  Output is either human-readable text
records or json-lines; numbers are printed with 17 significant digits so that
records round-trip exactly.  Exit codes: 0 success (NoSolution is a normal
answer), 2 malformed input, 3 certification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .curvature import ricci_diagonal, ricci_koszul
from .diagonalize import symmetric_from_upper
from .groups import as_group, group_from_name, structure_constants
from .solver import SolverConfig, classify_signature, solve
from .verify import certify

__all__ = ["main"]

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_CERT_FAILURE = 3

COMMANDS = ("solve", "certify", "classify", "sweep", "oracle-ricci")


class InputError(Exception):
    """Malformed input; the message names the offending field."""


# ---------------------------------------------------------------------------
# Serialization: deterministic records with 17-significant-digit floats
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _to_json(value) -> str:
    if isinstance(value, dict):
        inner = ",".join(f"{json.dumps(k)}:{_to_json(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in value) + "]"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt(value)
    if value is None:
        return "null"
    return json.dumps(value)


def _flatten(record: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            lines.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            if value and isinstance(value[0], dict):
                for i, item in enumerate(value):
                    lines.extend(_flatten(item, prefix=f"{name}[{i}]."))
            else:
                joined = ",".join(_fmt(v) if isinstance(v, (float, np.floating))
                                  else str(v) for v in value)
                lines.append(f"{name}: {joined}")
        elif isinstance(value, (bool, np.bool_)):
            lines.append(f"{name}: {'true' if value else 'false'}")
        elif isinstance(value, (float, np.floating)):
            lines.append(f"{name}: {_fmt(value)}")
        elif value is None:
            lines.append(f"{name}: none")
        else:
            lines.append(f"{name}: {value}")
    return lines


class Reporter:
    def __init__(self, fmt: str, out_path: str | None):
        self.fmt = fmt
        self.out_path = out_path
        self.lines: list[str] = []

    def emit(self, record: dict):
        if self.fmt == "json-lines":
            self.lines.append(_to_json(record))
        else:
            self.lines.extend(_flatten(record))
            self.lines.append("")

    def flush(self):
        text = "\n".join(self.lines)
        if text and not text.endswith("\n"):
            text += "\n"
        if self.out_path:
            with open(self.out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Field parsing
# ---------------------------------------------------------------------------

def _parse_triple(text: str, fieldname: str) -> tuple[float, float, float]:
    parts = [p for p in str(text).replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise InputError(f"field {fieldname!r}: expected three comma-separated "
                         f"numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise InputError(f"field {fieldname!r}: non-numeric entry in {text!r}")


def _parse_range(text: str, fieldname: str) -> tuple[float, float]:
    if ".." not in str(text):
        raise InputError(f"field {fieldname!r}: expected lo..hi, got {text!r}")
    lo_s, hi_s = str(text).split("..", 1)
    try:
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise InputError(f"field {fieldname!r}: non-numeric bound in {text!r}")
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InputError(f"field {fieldname!r}: bounds must be finite, got {text!r}")
    if not lo < hi:
        raise InputError(f"field {fieldname!r}: need lo < hi, got {text!r}")
    return lo, hi


def _group_or_fail(name: str):
    try:
        return group_from_name(name)
    except ValueError as exc:
        raise InputError(f"field 'group': {exc}")


def _resolve_group(args):
    name = getattr(args, "group_flag", None) or args.group
    if name is None:
        raise InputError("field 'group': give the group positionally or via "
                         "--group (so3, sl2, e2, e11, h3, r3)")
    return _group_or_fail(name)


# ---------------------------------------------------------------------------
# Record builders
# ---------------------------------------------------------------------------

def _solution_record(group, T, sol) -> dict:
    cert = certify(group, sol.metric.v, sol.c, T)
    return {"v": list(sol.metric.v), "c": sol.c,
            "residual": max(cert.residual_closed_form, cert.residual_oracle),
            "pass": cert.passed}


def _solve_record(group, T, cfg) -> dict:
    outcome = solve(group, T, cfg)
    record = {"command": "solve", "group": group.name.lower(), "T": list(T),
              "kind": outcome.kind, "case_label": outcome.case_label}
    record["solutions"] = [_solution_record(group, T, s) for s in outcome.solutions]
    if outcome.family is not None:
        fam = outcome.family
        record["family"] = {
            "constraint": fam.constraint if fam.constraint else "none",
            "c_fixed": fam.c,
            "sample": _solution_record(group, T, fam.sample),
        }
    else:
        record["family"] = None
    record["traces"] = [{"p": t.p, "q": t.q, "multiplicity": t.multiplicity}
                        for t in outcome.traces]
    if outcome.notes:
        record["notes"] = list(outcome.notes)
    return record


def _record_all_passed(record: dict) -> bool:
    ok = True
    for sol in record.get("solutions", []):
        ok = ok and sol.get("pass", False)
    fam = record.get("family")
    if fam is not None:
        ok = ok and fam["sample"].get("pass", False)
    return ok


# ---------------------------------------------------------------------------
# Subcommand runners
# ---------------------------------------------------------------------------

def _run_solve(args, reporter) -> int:
    group = _resolve_group(args)
    T = _parse_triple(args.T, "T")
    cfg = SolverConfig(root_tol=args.tol) if args.tol else None
    record = _solve_record(group, T, cfg)
    reporter.emit(record)
    return EXIT_OK if _record_all_passed(record) else EXIT_CERT_FAILURE


def _run_certify(args, reporter) -> int:
    if args.from_file:
        return _certify_from_file(args, reporter)
    if args.T is None or args.v is None or args.c is None:
        raise InputError("field 'v'/'c'/'T': certify needs --T, --v and --c "
                         "(or --from FILE)")
    group = _resolve_group(args)
    T = _parse_triple(args.T, "T")
    v = _parse_triple(args.v, "v")
    try:
        cert = certify(group, v, float(args.c), T)
    except ValueError as exc:
        raise InputError(f"field 'v': {exc}")
    reporter.emit({"command": "certify", "group": group.name.lower(),
                   "T": list(T), "v": list(v), "c": float(args.c),
                   "residual_closed_form": cert.residual_closed_form,
                   "residual_oracle": cert.residual_oracle,
                   "normalized": cert.normalized, "pass": cert.passed})
    return EXIT_OK if cert.passed else EXIT_CERT_FAILURE


def _certify_from_file(args, reporter) -> int:
    ok = True
    checked = 0
    try:
        with open(args.from_file, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(f"field 'from': cannot read {args.from_file!r}: {exc}")
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"field 'from': line {lineno} is not valid JSON: {exc}")
        if record.get("command") != "solve":
            continue
        group = _group_or_fail(record.get("group", ""))
        T = record.get("T")
        if not isinstance(T, list) or len(T) != 3:
            raise InputError(f"field 'T': line {lineno} needs a 3-component T")
        claims = [(s["v"], s["c"]) for s in record.get("solutions", [])]
        fam = record.get("family")
        if fam is not None:
            claims.append((fam["sample"]["v"], fam["sample"]["c"]))
        for v, c in claims:
            cert = certify(group, v, c, T)
            checked += 1
            ok = ok and cert.passed
            reporter.emit({"command": "certify", "group": group.name.lower(),
                           "T": list(map(float, T)), "v": list(map(float, v)),
                           "c": float(c),
                           "residual_closed_form": cert.residual_closed_form,
                           "residual_oracle": cert.residual_oracle,
                           "normalized": cert.normalized, "pass": cert.passed})
    reporter.emit({"command": "certify-summary", "checked": checked,
                   "all_passed": ok})
    return EXIT_OK if ok else EXIT_CERT_FAILURE


def _run_classify(args, reporter) -> int:
    group = _resolve_group(args)
    T = _parse_triple(args.T, "T")
    label = classify_signature(group, T)
    reporter.emit({"command": "classify", "group": group.name.lower(),
                   "T": list(T), "case_label": label})
    return EXIT_OK


def _grid_axis(fixed, rng_text, steps, name):
    if fixed is not None and rng_text is not None:
        raise InputError(f"field {name!r}: give either a fixed value or a range")
    if fixed is not None:
        try:
            return [float(fixed)]
        except ValueError:
            raise InputError(f"field {name!r}: non-numeric value {fixed!r}")
    if rng_text is not None:
        lo, hi = _parse_range(rng_text, name)
        # half-open grid [lo, hi): lo + k*(hi-lo)/steps, k = 0..steps-1
        return [lo + k * (hi - lo) / steps for k in range(steps)]
    raise InputError(f"field {name!r}: sweep needs --{name} or --{name}-range")


def _run_sweep(args, reporter) -> int:
    group = _resolve_group(args)
    steps = args.steps
    if steps < 1:
        raise InputError("field 'steps': must be a positive integer")
    axes = [
        _grid_axis(args.T1, args.T1_range, steps, "T1"),
        _grid_axis(args.T2, args.T2_range, steps, "T2"),
        _grid_axis(args.T3, args.T3_range, steps, "T3"),
    ]
    counts: dict[str, int] = {}
    kind_counts: dict[str, int] = {}
    for t1 in axes[0]:
        for t2 in axes[1]:
            for t3 in axes[2]:
                T = (t1, t2, t3)
                outcome = solve(group, T)
                label = outcome.case_label
                counts[label] = counts.get(label, 0) + 1
                kind_counts[outcome.kind] = kind_counts.get(outcome.kind, 0) + 1
                record = {"command": "sweep-point", "T": list(T),
                          "kind": outcome.kind, "case_label": label}
                if outcome.solutions:
                    record["c"] = [s.c for s in outcome.solutions]
                elif outcome.family is not None and outcome.family.c is not None:
                    record["c"] = [outcome.family.c]
                reporter.emit(record)
    reporter.emit({"command": "sweep-summary", "group": group.name.lower(),
                   "points": len(axes[0]) * len(axes[1]) * len(axes[2]),
                   "by_case": dict(sorted(counts.items())),
                   "by_kind": dict(sorted(kind_counts.items()))})
    return EXIT_OK


def _run_oracle_ricci(args, reporter) -> int:
    group = _resolve_group(args)
    if (args.v is None) == (args.g is None):
        raise InputError("field 'v'/'g': oracle-ricci needs exactly one of "
                         "--v v1,v2,v3 or --g six upper-triangle entries")
    sc = structure_constants(group)
    if args.v is not None:
        v = _parse_triple(args.v, "v")
        if min(v) <= 0:
            raise InputError("field 'v': metric components must be positive")
        ric_cf = ricci_diagonal(group, v)
        ric_k = ricci_koszul(sc, np.diag(v))
        reporter.emit({"command": "oracle-ricci", "group": group.name.lower(),
                       "v": list(v),
                       "ricci_closed_form": [float(t) for t in ric_cf],
                       "ricci_koszul": [[float(t) for t in row] for row in ric_k]})
        return EXIT_OK
    parts = [p for p in str(args.g).replace(" ", "").split(",") if p]
    if len(parts) != 6:
        raise InputError(f"field 'g': expected 6 upper-triangle entries, got "
                         f"{len(parts)}")
    try:
        gram = symmetric_from_upper([float(p) for p in parts])
    except ValueError as exc:
        raise InputError(f"field 'g': {exc}")
    try:
        ric_k = ricci_koszul(sc, gram)
    except ValueError as exc:
        raise InputError(f"field 'g': {exc}")
    reporter.emit({"command": "oracle-ricci", "group": group.name.lower(),
                   "g": [float(p) for p in parts],
                   "ricci_koszul": [[float(t) for t in row] for row in ric_k]})
    return EXIT_OK


def _run_batch(args, reporter) -> int:
    try:
        with open(args.jobs, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(f"field 'jobs': cannot read {args.jobs!r}: {exc}")
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            job = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"field 'jobs': line {lineno} is not valid JSON: {exc}")
        command = job.get("command")
        if command not in COMMANDS:
            raise InputError(f"field 'command': line {lineno}: unknown command "
                             f"{command!r}; expected one of {COMMANDS}")
        if command == "solve":
            group = _group_or_fail(job.get("group", ""))
            T = job.get("T")
            if not isinstance(T, list) or len(T) != 3:
                raise InputError(f"field 'T': line {lineno} needs 3 components")
            record = _solve_record(group, tuple(map(float, T)), None)
            reporter.emit(record)
            if not _record_all_passed(record):
                status = EXIT_CERT_FAILURE
        elif command == "classify":
            group = _group_or_fail(job.get("group", ""))
            T = job.get("T")
            if not isinstance(T, list) or len(T) != 3:
                raise InputError(f"field 'T': line {lineno} needs 3 components")
            label = classify_signature(group, tuple(map(float, T)))
            reporter.emit({"command": "classify", "group": group.name.lower(),
                           "T": list(map(float, T)), "case_label": label})
        elif command == "certify":
            group = _group_or_fail(job.get("group", ""))
            for key in ("T", "v", "c"):
                if key not in job:
                    raise InputError(f"field {key!r}: missing on line {lineno}")
            cert = certify(group, tuple(map(float, job["v"])), float(job["c"]),
                           tuple(map(float, job["T"])))
            reporter.emit({"command": "certify", "group": group.name.lower(),
                           "T": list(map(float, job["T"])),
                           "v": list(map(float, job["v"])), "c": float(job["c"]),
                           "residual_closed_form": cert.residual_closed_form,
                           "residual_oracle": cert.residual_oracle,
                           "normalized": cert.normalized, "pass": cert.passed})
            if not cert.passed:
                status = EXIT_CERT_FAILURE
        else:
            raise InputError(f"field 'command': line {lineno}: {command!r} is "
                             f"not supported in batch files")
    return status


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prescribed-ricci",
        description="Solve, certify and classify the prescribed Ricci "
                    "curvature problem on 3D unimodular Lie groups.")
    parser.add_argument("--format", choices=("text", "json-lines"),
                        default="text", help="output record format")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write records to PATH instead of stdout")
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed recorded for reproducibility")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve Ric(g) = c T for one tensor")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_flag", default=None)
    p.add_argument("--T", required=True, help="T1,T2,T3")
    p.add_argument("--tol", type=float, default=None, help="cubic root tolerance")

    p = sub.add_parser("certify", help="certify a claimed (v, c) or a solve "
                                       "record file")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_flag", default=None)
    p.add_argument("--T", default=None, help="T1,T2,T3")
    p.add_argument("--v", default=None, help="v1,v2,v3")
    p.add_argument("--c", default=None, type=float)
    p.add_argument("--from", dest="from_file", default=None, metavar="FILE",
                   help="json-lines solve output to re-check")

    p = sub.add_parser("classify", help="name the matched existence-condition row")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_flag", default=None)
    p.add_argument("--T", required=True, help="T1,T2,T3")

    p = sub.add_parser("sweep", help="classify a grid of tensors")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_flag", default=None)
    p.add_argument("--T1", default=None)
    p.add_argument("--T1-range", dest="T1_range", default=None, metavar="LO..HI")
    p.add_argument("--T2", default=None)
    p.add_argument("--T2-range", dest="T2_range", default=None, metavar="LO..HI")
    p.add_argument("--T3", default=None)
    p.add_argument("--T3-range", dest="T3_range", default=None, metavar="LO..HI")
    p.add_argument("--steps", type=int, default=10,
                   help="points per ranged axis; ranges are half-open [lo, hi)")

    p = sub.add_parser("oracle-ricci", help="Ricci tensor of a given metric")
    p.add_argument("group", nargs="?", default=None)
    p.add_argument("--group", dest="group_flag", default=None)
    p.add_argument("--v", default=None, help="diagonal metric v1,v2,v3")
    p.add_argument("--g", default=None,
                   help="full symmetric metric, 6 upper-triangle entries "
                        "g11,g12,g13,g22,g23,g33")

    p = sub.add_parser("batch", help="run jobs from a file, one JSON job per line")
    p.add_argument("jobs", metavar="FILE")

    return parser


_RUNNERS = {
    "solve": _run_solve,
    "certify": _run_certify,
    "classify": _run_classify,
    "sweep": _run_sweep,
    "oracle-ricci": _run_oracle_ricci,
    "batch": _run_batch,
}


_VALUE_FLAGS = {"--T", "--v", "--g", "--c", "--group", "--T1", "--T2", "--T3",
                "--T1-range", "--T2-range", "--T3-range", "--tol", "--steps",
                "--seed", "--out", "--format", "--from"}


def _fuse_values(argv: list[str]) -> list[str]:
    """Join value flags with their argument so values like -3,-2,1 survive
    argparse's leading-dash heuristics."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_fuse_values(list(argv)))
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return EXIT_BAD_INPUT if exc.code not in (0,) else 0
    reporter = Reporter(args.format, args.out)
    try:
        status = _RUNNERS[args.command](args, reporter)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    reporter.flush()
    return status


if __name__ == "__main__":
    raise SystemExit(main())
