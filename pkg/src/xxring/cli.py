"""Command-line interface: ``xxring <command> ...`` or ``python -m xxring``.

Exit codes: 0 success, 1 verification failure or numerical range error,
2 usage error, 3 I/O error.
"""

import argparse
import sys
import time

from .criticality import NoTransition, phase_scan, solve_T1, solve_T2
from .entanglement import wootters_concurrence
from .ring import (
    RingParams,
    analytic_spectrum,
    flip_field,
    ground_state_limit,
    reduced_pair_state,
    thermal_state_oracle,
)
from .sweep import QUANTITIES, SweepSpec, evaluate_point, load_config, write_sweep
from .teleport import CLASSICAL_LIMIT, average_fidelity_of_resource, input_state, run_protocol
from .verify import GRIDS, run_oracle_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
TABLE_TOL = 1e-4

# published critical temperatures, units of |J|
TABLE_I = (
    (0.1, 0.234194), (0.3, 0.332167), (0.6, 0.414045), (1.0, 0.476533), (1.3, 0.504831),
    (2.0, 0.538225), (7.0, 0.554639), (9.0, 0.554641), (10.0, 0.554641), (100.0, 0.554641),
)
TABLE_II = (
    (0.0, 1.27136, 1.27136), (0.6, 1.27457, 1.17224), (0.8, 1.27686, 1.08726),
    (1.0, 1.27959, 0.965516), (1.2, 1.28263, 0.795176), (1.4, 1.28585, 0.578739),
    (1.6, 1.28916, 0.368014), (1.8, 1.29246, 0.182056), (1.9, 1.29408, 0.0910239),
    (2.0, 1.29567, 0.0), (10.0, 1.32628, None), (15.0, 1.32639, None),
    (16.0, 1.32639, None), (100.0, 1.32639, None),
)


class UsageError(Exception):
    pass


def _unit(J, units):
    return abs(J) if units == "J" and J != 0 else 1.0


def _quantities(text):
    qs = tuple(q.strip() for q in text.split(",") if q.strip())
    bad = [q for q in qs if q not in QUANTITIES]
    if bad or not qs:
        raise argparse.ArgumentTypeError(f"quantities must be a comma list from {', '.join(QUANTITIES)}")
    return qs


def cmd_spectrum(args, out):
    scale = _unit(args.J, args.units)
    spec = analytic_spectrum(RingParams(args.J, args.B * scale, 1.0))
    levels = sorted(spec.levels, key=lambda lv: (lv.energy, lv.label))
    print(f"{'level':<6} {'energy':>14}", file=out)
    for lv in levels:
        print(f"{lv.label:<6} {lv.energy / scale + 0.0:>14.12g}", file=out)
    return EXIT_OK


def _oracle_values(J, B, T, quantities, theta):
    """Independent numerical values for the ``--verify`` column."""
    if T == 0:
        chi = ground_state_limit(J, abs(B))
        if B < 0:
            chi = flip_field(chi)
    else:
        chi = thermal_state_oracle(RingParams.from_temperature(J, B, T))
    vals = {}
    fid = None
    for q in quantities:
        if q == "concurrence":
            vals[q] = wootters_concurrence(reduced_pair_state(chi))
        elif q in ("avg_fidelity", "advantage"):
            if fid is None:
                fid = average_fidelity_of_resource(chi)
            vals[q] = fid if q == "avg_fidelity" else fid > CLASSICAL_LIMIT
        elif q == "probabilities":
            outcomes = run_protocol(input_state(theta, 0.0), chi)
            vals.update({f"p{o.j}": o.probability for o in outcomes})
    return vals


def _show(x):
    if isinstance(x, bool) or type(x).__name__ == "bool_":
        return str(bool(x)).lower()
    return f"{x:.12g}"


def cmd_point(args, out):
    if args.T < 0:
        raise UsageError("--T must be >= 0 (0 selects the exact zero-temperature branches)")
    scale = _unit(args.J, args.units)
    J, B, T = args.J, args.B * scale, args.T * scale
    values = evaluate_point(J, B, T, args.q, args.theta)
    oracle = _oracle_values(J, B, T, args.q, args.theta) if args.verify else {}
    for key, value in values.items():
        line = f"{key} = {_show(value)}"
        if args.verify:
            ref = oracle[key]
            if isinstance(value, (bool,)) or type(value).__name__ == "bool_":
                line += f"  oracle = {_show(ref)}  agree = {str(bool(value) == bool(ref)).lower()}"
            else:
                line += f"  oracle = {_show(ref)}  diff = {abs(value - ref):.3g}"
        print(line, file=out)
    return EXIT_OK


def cmd_critical(args, out):
    if args.J == 0:
        raise UsageError("--J must be nonzero")
    B = args.eta * abs(args.J) if args.eta is not None else args.B * _unit(args.J, args.units)
    if B < 0:
        raise UsageError("critical temperatures are tabulated for B >= 0")
    scale = 1.0 if args.units == "J" else abs(args.J)
    rows = [("T1", solve_T1, True), ("T2", solve_T2, args.J < 0)]
    for name, solver, applicable in rows:
        if not applicable:
            print(f"{name} = none  (no advantage region for J > 0)", file=out)
            continue
        try:
            res = solver(args.J, B, args.tol)
        except NoTransition as exc:
            print(f"{name} = none  ({exc})", file=out)
            continue
        lo, hi = res.bracket
        print(
            f"{name} = {res.value * scale:.12g}  residual = {res.residual:.3g}  "
            f"bracket = [{lo * scale:.6g}, {hi * scale:.6g}]  iterations = {res.iterations}",
            file=out,
        )
    return EXIT_OK


def _cell(computed, published):
    if published is None and computed is None:
        return "-", "-", "", True
    if computed is None or published is None:
        shown = "-" if computed is None else f"{computed:.6f}"
        return shown, "-" if published is None else f"{published:g}", "FAIL", False
    diff = abs(computed - published)
    ok = diff <= TABLE_TOL
    return f"{computed:.6f}", f"{published:g}", f"{diff:.1e}" + ("" if ok else " FAIL"), ok


def cmd_tables(args, out):
    all_ok = True
    print("Table I  (J > 0, B = eta J): T1 / J", file=out)
    print(f"{'eta':>6} {'computed':>10} {'published':>10} {'|diff|':>10}", file=out)
    for (eta, pub), row in zip(TABLE_I, phase_scan(1.0, [e for e, _ in TABLE_I], args.tol)):
        c, p, d, ok = _cell(row.T1, pub)
        all_ok &= ok
        print(f"{eta:>6g} {c:>10} {p:>10} {d:>10}", file=out)
    print("", file=out)
    print("Table II  (J < 0, B = -eta J): T1, T2 / |J|", file=out)
    print(f"{'eta':>6} {'T1':>10} {'published':>10} {'|diff|':>10} {'T2':>10} {'published':>10} {'|diff|':>10}", file=out)
    for (eta, pub1, pub2), row in zip(TABLE_II, phase_scan(-1.0, [r[0] for r in TABLE_II], args.tol)):
        c1, p1, d1, ok1 = _cell(row.T1, pub1)
        c2, p2, d2, ok2 = _cell(row.T2, pub2)
        all_ok &= ok1 and ok2
        print(f"{eta:>6g} {c1:>10} {p1:>10} {d1:>10} {c2:>10} {p2:>10} {d2:>10}", file=out)
    print("", file=out)
    print("PASS" if all_ok else "FAIL", file=out)
    return EXIT_OK if all_ok else EXIT_FAIL


def _sweep_spec(args):
    cfg = load_config(args.config) if args.config else {}

    def pick(flag, key, default=None):
        return flag if flag is not None else cfg.get(key, default)

    J = pick(args.J, "J")
    if J is None:
        raise UsageError("sweep needs --J (flag or config)")
    B_range = args.B_range or (cfg.get("B_start"), cfg.get("B_stop"), cfg.get("B_count"))
    T_range = args.T_range or (cfg.get("T_start"), cfg.get("T_stop"), cfg.get("T_count"))
    if None in B_range or None in T_range:
        raise UsageError("sweep needs --B-range and --T-range (flags or config)")
    return SweepSpec(
        J=J,
        B_range=B_range,
        T_range=T_range,
        quantities=pick(args.q, "quantities", ("concurrence", "avg_fidelity")),
        output_format=pick(args.format, "format", "csv"),
        output_path=pick(args.out, "out", "-"),
        units=pick(args.units, "units", "J"),
        theta=pick(args.theta, "theta", 0.0),
    )


def cmd_sweep(args, out):
    try:
        spec = _sweep_spec(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = write_sweep(spec)
    if text is not None:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    start = time.perf_counter()
    reports = run_oracle_suites(GRIDS[args.grid], perturb=args.perturb)
    elapsed = time.perf_counter() - start
    ok = True
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{rep.name:<14} max deviation {rep.max_deviation:.3e}  (tol {rep.tolerance:.0e})  {status}", file=out)
        for p, dev in rep.failures[:5]:
            print(f"    at J={p.J:g} B={p.B:g} beta={p.beta:g}: deviation {dev:.3e}", file=out)
        ok &= rep.passed
    print(f"{'PASS' if ok else 'FAIL'}  ({args.grid} grid, {elapsed:.2f} s)", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="xxring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_T=False):
        p.add_argument("--J", type=float, default=-1.0, help="coupling (default -1)")
        p.add_argument("--B", type=float, default=0.0, help="field")
        if need_T:
            p.add_argument("--T", type=float, required=True, help="temperature; 0 for the exact limit")
        p.add_argument("--units", choices=("J", "absolute"), default="J",
                       help="read fields and temperatures in units of |J| (default) or as given")

    p = sub.add_parser("spectrum", help="analytic energy levels")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("point", help="concurrence / fidelity at one parameter point")
    common(p, need_T=True)
    p.add_argument("--q", type=_quantities, default=("concurrence", "avg_fidelity", "advantage"))
    p.add_argument("--theta", type=float, default=0.0, help="input polar angle for probabilities")
    p.add_argument("--verify", action="store_true", help="also print independent oracle values")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("critical", help="critical temperatures T1 and T2")
    common(p)
    p.add_argument("--eta", type=float, help="field ratio, B = eta |J|; overrides --B")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("tables", help="recompute the published critical-temperature tables")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sweep", help="grid of quantities over (B, T)")
    p.add_argument("--config", help="key = value (or JSON) file; flags override it")
    p.add_argument("--J", type=float)
    p.add_argument("--B-range", type=float, nargs=3, metavar=("START", "STOP", "COUNT"))
    p.add_argument("--T-range", type=float, nargs=3, metavar=("START", "STOP", "COUNT"))
    p.add_argument("--q", type=_quantities)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--units", choices=("J", "absolute"))
    p.add_argument("--theta", type=float)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="closed forms vs. numerical oracles")
    p.add_argument("--grid", choices=sorted(GRIDS), default="standard")
    p.add_argument("--perturb", type=float, default=0.0,
                   help="offset added to the closed-form average fidelity (harness self-test)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"xxring {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"xxring {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"xxring {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OverflowError, ArithmeticError) as exc:
        print(f"xxring {args.command}: numerical error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
