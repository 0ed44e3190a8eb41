"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
and parse errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import fieldlab as fl
from . import representation as rep
from . import suites
from . import transforms as tr
from .algebra import Sedeon, SedeonDomainError, basis_element, mul, random_sedeon

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class ExpressionError(UsageError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


_FACTOR = re.compile(r"\s*([+\-−]?)(?:(1|i)|e([0-3])(?:a([0-3]))?|a([0-3]))\s*")


def parse_expression(expr: str) -> list[Sedeon]:
    """Split ``"e1*a2*-i"`` style input into sedeon factors."""
    factors = []
    pos = 0
    while True:
        m = _FACTOR.match(expr, pos)
        if not m or m.end() == m.start():
            raise ExpressionError(f"expected a factor, found {expr[pos:pos + 8]!r}", pos)
        sign = -1 if m.group(1) in ("-", "−") else 1
        if m.group(2) == "1":
            value = Sedeon.scalar(sign)
        elif m.group(2) == "i":
            value = Sedeon.scalar(sign * 1j)
        elif m.group(3) is not None:
            value = sign * basis_element(int(m.group(3)), int(m.group(4) or 0))
        else:
            value = sign * basis_element(0, int(m.group(5)))
        factors.append(value)
        pos = m.end()
        if pos == len(expr):
            return factors
        if expr[pos] != "*":
            raise ExpressionError(f"expected '*', found {expr[pos]!r}", pos)
        pos += 1


def eval_expression(expr: str) -> Sedeon:
    out = Sedeon.scalar(1.0)
    for f in parse_expression(expr):
        out = mul(out, f)
    return out


def _floats(text: str, count: int, what: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {count} comma-separated numbers") from None
    if len(values) != count or not all(math.isfinite(v) for v in values):
        raise UsageError(f"{what} must be {count} comma-separated finite numbers")
    return values


def _load_amplitude(source: str, seed: int, kernel: tuple | None = None) -> Sedeon:
    if source == "kernel":
        amp, _ = fl.dirac_null_vector(*kernel)
        return amp
    if source == "random":
        return random_sedeon(np.random.default_rng(seed))
    if source == "one":
        return Sedeon.scalar(1.0)
    text = source if source.lstrip().startswith("[") else None
    if text is None:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read amplitude file {source!r}: {exc}") from None
    try:
        return Sedeon.from_json(json.loads(text))
    except (ValueError, TypeError, SedeonDomainError) as exc:
        raise UsageError(f"malformed sedeon JSON: {exc}") from None


def _emit(obj, out, indent: int | None = 2) -> None:
    json.dump(obj, out, indent=indent)
    out.write("\n")


def _format_checks(checks: Sequence[suites.Check], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([c.to_json() for c in checks], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(checks[0].to_json()) if checks else ["check"], lineterminator="\n")
        writer.writeheader()
        for c in checks:
            writer.writerow(c.to_json())
        return buf.getvalue()
    lines = []
    for c in checks:
        tag = "AUDIT" if c.audit else ("PASS" if c.passed else "FAIL")
        lines.append(f"{tag:5} {c.suite}.{c.name}  measured={c.measured:.3e}  tol={c.tolerance:.1e}  {c.detail}".rstrip())
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_verify(args, out) -> int:
    try:
        cfg = suites.SuiteConfig(args.suite, args.seed, args.samples, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = suites.run_suite(cfg)
    out.write(_format_checks(checks, cfg.output_format))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


def cmd_eval(args, out) -> int:
    _emit(eval_expression(args.expr).to_json(), out, indent=None)
    return EXIT_OK


def cmd_planewave(args, out) -> int:
    if args.mass < 0 or not math.isfinite(args.mass):
        raise UsageError("mass must be a finite non-negative number")
    kvec = np.array(_floats(args.k, 3, "--k"))
    params = fl.WaveOperatorParams(args.mass, args.c)
    if args.omega == "auto":
        omega = fl.on_shell_omega(kvec, params)
    else:
        omega = _floats(args.omega, 1, "--omega")[0]
    amp = _load_amplitude(args.amplitude, args.seed, (omega, kvec, params))
    mode = fl.PlaneWaveField(amp, omega, kvec)
    scale = max(1.0, (omega**2 / args.c**2 + float(kvec @ kvec) + args.mass**2) * amp.max_abs())
    tol = fl.ANALYTIC_TOL * scale
    zero = Sedeon.zero()
    report = (
        fl.second_order_residual(mode, zero, params, tol)
        + fl.first_order_residual(fl.field_intensities(mode, params), zero, params, tol)
        + fl.dirac_residual(mode, params, tol)
    )
    _emit(
        {
            "mass": args.mass,
            "omega": omega,
            "k": kvec.tolist(),
            "klein_gordon_factor": fl.klein_gordon_factor(omega, kvec, params),
            "reports": report.to_json(),
        },
        out,
    )
    return EXIT_OK if report.passed else EXIT_FAIL


_AXES = {"x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0), "z": (0.0, 0.0, 1.0)}


def cmd_boost(args, out) -> int:
    t, x, y, z = _floats(args.event, 4, "--event")
    try:
        boost = tr.Boost.from_velocity(args.beta, _AXES[args.axis])
        event = tr.EventVector(t, np.array([x, y, z]), args.c)
    except SedeonDomainError as exc:
        raise UsageError(str(exc)) from None
    t_new, r_new = tr.boost_event(event, boost)
    t_ref, r_ref = tr.boost_event_textbook(event, args.beta, _AXES[args.axis])
    dev = max(abs(t_new - t_ref), float(np.max(np.abs(r_new - r_ref))))
    scale = max(1.0, abs(t_ref), float(np.max(np.abs(r_ref))))
    s_before = tr.event_sedeon(event)
    s_after = tr.lorentz_transform(s_before, boost)
    _emit(
        {
            "beta": args.beta,
            "rapidity": boost.rapidity,
            "t": t_new,
            "r": r_new.tolist(),
            "textbook": {"t": t_ref, "r": r_ref.tolist()},
            "interval_before": tr.interval(s_before).real,
            "interval_after": tr.interval(s_after).real,
            "max_deviation": dev,
            "pass": dev <= 1e-12 * scale,
        },
        out,
    )
    return EXIT_OK if dev <= 1e-12 * scale else EXIT_FAIL


def cmd_tables(args, out) -> int:
    rows = []
    ok = True
    for x, y, got, want in suites.table_products():
        if args.basis and not (x[0] == args.basis and y[0] == args.basis):
            continue
        match = got == want
        ok &= match
        rows.append({"left": x, "right": y, "product": got.to_json(), "text": suites.describe(got), "pass": match})
    _emit(rows, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rep(args, out) -> int:
    m = re.fullmatch(r"([ea])([0-3])", args.element)
    if not m:
        raise UsageError(f"element must look like eN or aK with N, K in 0..3, got {args.element!r}")
    kind, idx = m.group(1), int(m.group(2))
    if kind == "e":
        small, unit = rep.unit_matrix_e(idx), basis_element(idx, 0)
    else:
        small, unit = rep.unit_matrix_a(idx), basis_element(0, idx)
    _emit(
        {
            "element": args.element,
            "matrix4": rep.matrix_to_json(small),
            "matrix16": rep.matrix_to_json(rep.left_regular_matrix(unit)),
        },
        out,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sedeon", description="Sedeon algebra verification harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all", choices=suites.SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--format", default="json", choices=("json", "csv", "text"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate a product of basis symbols, e.g. 'e1*a2*e3'")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("planewave", help="residual reports for a single plane-wave mode")
    p.add_argument("--mass", type=float, default=0.0, help="mass coefficient mc/hbar")
    p.add_argument("--k", required=True, help="wave vector kx,ky,kz")
    p.add_argument("--omega", required=True, help="angular frequency or 'auto' for the on-shell value")
    p.add_argument("--amplitude", default="one", help="'one', 'random', 'kernel' (null vector of the first-order operator), a JSON file, or inline JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=1.0)
    p.set_defaults(func=cmd_planewave)

    p = sub.add_parser("boost", help="boost an event four-vector")
    p.add_argument("--beta", type=float, required=True, help="v/c")
    p.add_argument("--axis", choices=tuple(_AXES), default="x")
    p.add_argument("--event", required=True, help="t,x,y,z")
    p.add_argument("--c", type=float, default=1.0)
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("tables", help="products of the six generating units")
    p.add_argument("--basis", choices=("e", "a"))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("rep", help="matrix representation of a unit")
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_rep)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"sedeon: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
