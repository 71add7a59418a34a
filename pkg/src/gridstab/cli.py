"""Command-line frontend.

Exit codes: 0 success, 1 usage or invalid input, 2 unparsable grid file,
3 numerical failure, 4 an experiment found a counterexample.
"""

import argparse
import contextlib
import csv
import io
import json
import sys

import numpy as np

from . import circulant, experiments, gridfile, swing
from .coupling import CouplingConstants
from .errors import GridStabError, ParseError
from .grid import generate_named, NAMED_KINDS
from .pipeline import analyze

EXIT_COUNTEREXAMPLE = 4


def fmt(x):
    # adding 0.0 turns -0.0 into 0.0 so output never shows "-0"
    return format(float(x) + 0.0, ".12g")


def _cx(z):
    return {"re": fmt(z.real), "im": fmt(z.imag)}


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _matrix_text(m):
    rows = []
    for row in np.atleast_2d(m):
        if np.iscomplexobj(row):
            rows.append("  ".join(f"{fmt(z.real)}{'+' if z.imag >= 0 else '-'}{fmt(abs(z.imag))}j"
                                  for z in row))
        else:
            rows.append("  ".join(fmt(x) for x in row))
    return "\n".join("  " + r for r in rows)


def cmd_analyze(args):
    g = gridfile.load(args.grid)
    res = analyze(g, CouplingConstants(kappa=args.kappa), method=args.method)
    rep = res.report
    with _output(args.out) as out:
        if args.format == "json":
            doc = {
                "n_generators": g.n_generators,
                "n_loads": g.n_loads,
                "y0": [[_cx(z) for z in row] for row in res.y0.matrix],
                "y": [[_cx(z) for z in row] for row in res.y],
                "p": [[fmt(x) for x in row] for row in res.p],
                "spectrum": [fmt(x) for x in rep.spectrum],
                "zero_mode": fmt(rep.zero_mode_value),
                "alpha2": fmt(rep.alpha2),
                "verdict": rep.verdict.value,
            }
            json.dump(doc, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["quantity", "index", "value"])
            for i, x in enumerate(rep.spectrum):
                w.writerow(["eigenvalue", i, fmt(x)])
            w.writerow(["zero_mode", "", fmt(rep.zero_mode_value)])
            w.writerow(["alpha2", "", fmt(rep.alpha2)])
            w.writerow(["verdict", "", rep.verdict.value])
        else:
            out.write(f"generators: {g.n_generators}  loads: {g.n_loads}\n")
            out.write(f"Y0:\n{_matrix_text(res.y0.matrix)}\n")
            out.write(f"Y (reduced):\n{_matrix_text(res.y)}\n")
            out.write(f"P:\n{_matrix_text(res.p)}\n")
            out.write("spectrum: " + " ".join(fmt(x) for x in rep.spectrum) + "\n")
            out.write(f"alpha2: {fmt(rep.alpha2)}\nverdict: {rep.verdict.value}\n")
    return 0


def cmd_gen(args):
    g = generate_named(args.kind, args.n, args.k, edge_admittance=complex(0, args.b))
    with _output(args.out) as out:
        out.write(gridfile.dumps(g))
    return 0


def cmd_circulant(args):
    points = circulant.circulant_sweep(args.n_max)
    with _output(args.out) as out:
        circulant.write_sweep_csv(points, out)
    return 0


def cmd_fit(args):
    try:
        with open(args.input) as fh:
            pts = circulant.read_sweep_csv(fh)
    except (OSError, KeyError, ValueError) as exc:
        raise ParseError(f"cannot read sweep CSV {args.input}: {exc}") from exc
    surf = circulant.quadratic_fit(pts)
    doc = {
        "monomials": list(circulant.MONOMIALS),
        "coefficients": [fmt(c) for c in surf.coefficients],
        "r2": fmt(surf.r2),
        "points": len(pts),
    }
    with _output(args.out) as out:
        json.dump(doc, out, indent=2)
        out.write("\n")
    return 0


def _summary(report, label):
    sys.stderr.write(f"{label}: {report.instances} instances, "
                     f"{report.violation_count} violations -> {report.verdict}\n")
    return EXIT_COUNTEREXAMPLE if report.counterexample_found else 0


def cmd_trees(args):
    report = experiments.tree_diameter_experiment(args.n)
    with _output(args.out) as out:
        experiments.write_tree_csv(report.records, out)
    return _summary(report, f"tree diameter conjecture, n={args.n}")


def cmd_cycles(args):
    report = experiments.cycle_addition_experiment(gridfile.load(args.tree))
    with _output(args.out) as out:
        experiments.write_cycle_csv(report.records, out)
    return _summary(report, "cycle length conjecture")


def cmd_join(args):
    res = experiments.best_join_edge(gridfile.load(args.t1), gridfile.load(args.t2))
    with _output(args.out) as out:
        experiments.write_join_csv(res, out)
    b = res.best
    sys.stderr.write(f"best edge {b.edge}: alpha2={fmt(b.alpha2)} diameter={b.diameter}; "
                     f"center edge {res.center_edge}; "
                     f"argmax alpha2 minimises diameter: {res.argmax_is_min_diameter}\n")
    return 0


def cmd_simulate(args):
    g = gridfile.load(args.grid)
    p = analyze(g, CouplingConstants(kappa=args.kappa)).p
    pulse = swing.Pulse(args.target, args.magnitude, args.t_on, args.t_off)
    cfg = swing.SimConfig(args.gamma, args.dt, args.t_end, pulse)
    traj = swing.simulate(p, cfg)
    with _output(args.out) as out:
        swing.write_trajectory_csv(traj, out)
    verdict = swing.divergence_detect(traj)
    ripple = swing.ripple_metric(traj) if traj.diverged_at is None else float("inf")
    sys.stderr.write(f"response: {verdict.value}  ripple: {fmt(ripple)}\n")
    return 0


def build_parser():
    parser = _Parser(prog="gridstab", description="Steady-state stability of uniform grids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="alpha2 and verdict for a grid file")
    p.add_argument("grid")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--method", choices=("schur", "iterative"), default="schur")
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="write a named topology as a grid file")
    p.add_argument("--kind", choices=NAMED_KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--b", type=float, default=-1.0, help="edge susceptance (default -1)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("circulant", help="closed-form vs numeric alpha2 sweep (CSV)")
    p.add_argument("--n-max", type=int, default=19)
    p.add_argument("--out")
    p.set_defaults(func=cmd_circulant)

    p = sub.add_parser("fit", help="quadratic surface fit of a sweep CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("trees", help="tree diameter conjecture over all labeled trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("cycles", help="cycle length conjecture for one tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("join", help="best single edge joining two trees")
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("simulate", help="linearised swing response (trajectory CSV)")
    p.add_argument("--grid", required=True)
    p.add_argument("--gamma", type=float, default=0.2)
    p.add_argument("--dt", type=float, default=1e-3)
    p.add_argument("--t-end", type=float, default=13.0)
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--magnitude", type=float, default=1.0)
    p.add_argument("--t-on", type=float, default=3.0)
    p.add_argument("--t-off", type=float, default=3.1)
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GridStabError as exc:
        sys.stderr.write(f"gridstab: {type(exc).__name__}: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
