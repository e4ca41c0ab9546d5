"""``shiftlab`` command line: check a graph, run sweeps, plot sweep CSVs.

Exit codes: 0 success (or shift-enabled for ``check``), 1 not shift-enabled,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .edgelist import read_edge_list
from .errors import ParameterError, ShiftLabError
from .exact import is_shift_enabled_exact
from .graph import Exponential, Gaussian, UnitWeight
from .montecarlo import DEFAULT_TRIALS, MODELS, SIGNED_MODES, ExperimentConfig, run_sweep
from .plot import PlotSpec, plot_csv
from .shift import ShiftKind
from .spectral import DEFAULT_TOL, Reason, _symmetric_shift, eigenvalues_symmetric, is_shift_enabled

EXIT_OK, EXIT_NOT_ENABLED, EXIT_USAGE = 0, 1, 2

_FLAG = {"signed_mode": "--signed-mode", "tol_rel": "--tol"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_range(text: str, integer: bool):
    """``start:stop[:step]`` (stop included when hit), ``a,b,c``, or a scalar."""
    text = str(text).strip()
    conv = int if integer else float
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) not in (2, 3):
                raise ValueError
            start, stop = float(parts[0]), float(parts[1])
            step = float(parts[2]) if len(parts) == 3 else 1.0
            if step <= 0 or stop < start:
                raise ValueError
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            vals = [start + i * step for i in range(count)]
            if integer:
                if not all(float(v).is_integer() for v in vals):
                    raise ValueError
                return [int(v) for v in vals]
            return [round(v, 12) for v in vals]
        if "," in text:
            return [conv(float(v)) if integer else conv(v) for v in text.split(",")]
        value = float(text)
        if integer and not value.is_integer():
            raise ValueError
        return conv(value)
    except ValueError:
        kind = "integer" if integer else "number"
        raise ValueError(f"expected a {kind}, a list a,b,c or a range start:stop[:step], got {text!r}") from None


def _kind(value):
    try:
        return ShiftKind.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser():
    parser = _Parser(prog="shiftlab", description="Shift-enabled graph analysis.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    kinds = ", ".join(k.value for k in ShiftKind)

    p = sub.add_parser("check", help="classify one edge-list graph")
    p.add_argument("path", help="edge-list file")
    p.add_argument("--kind", type=_kind, default=ShiftKind.LAPLACIAN, help=f"shift matrix ({kinds})")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative eigenvalue-gap tolerance")
    p.add_argument("--exact", action="store_true", help="exact square-free test (integer matrices)")

    p = sub.add_parser("sweep", help="Monte Carlo sweep to CSV")
    p.add_argument("--config", help="JSON file with flag values (command-line flags win)")
    p.add_argument("--model", choices=sorted(MODELS))
    p.add_argument("--n", help="vertex count (int, list or range)")
    p.add_argument("--m", help="er-gnm: edge count; ba: edges per new vertex")
    p.add_argument("--p", help="er-gnp edge probability")
    p.add_argument("--k", help="ws neighbors per side (degree 2k)")
    p.add_argument("--beta", help="ws rewiring probability")
    p.add_argument("--m0", help="ba initial vertex count")
    p.add_argument("--weights", choices=("unit", "exponential", "gaussian"))
    p.add_argument("--rate", type=float, help="exponential rate (default 1)")
    p.add_argument("--mean", type=float, help="gaussian mean (default 0)")
    p.add_argument("--std", type=float, help="gaussian standard deviation (default 1)")
    p.add_argument("--signed-mode", dest="signed_mode", choices=SIGNED_MODES)
    p.add_argument("--kind", type=_kind, help=f"shift matrix ({kinds}); default laplacian, signed for signed modes")
    p.add_argument("--trials", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, help="worker processes (default: SHIFTLAB_THREADS or all cores)")
    p.add_argument("--out", "-o", help="output CSV path (default stdout)")
    p.add_argument("--progress", action="store_true", help="per-point status on stderr")

    p = sub.add_parser("plot", help="render a sweep CSV as SVG")
    p.add_argument("csv", help="sweep CSV")
    p.add_argument("--out", "-o", required=True, help="output SVG path")
    p.add_argument("--x", default="param_value")
    p.add_argument("--y", default="p_hat")
    p.add_argument("--no-band", action="store_true", help="omit the confidence band")
    p.add_argument("--group", help="column that splits rows into series (default: auto)")
    p.add_argument("--title")
    p.add_argument("--xlabel")
    p.add_argument("--ylabel")
    return parser


def cmd_check(args, out=None):
    out = out or sys.stdout
    g = read_edge_list(args.path)
    kind = args.kind
    if args.exact:
        verdict = is_shift_enabled_exact(g, kind)
    else:
        verdict = is_shift_enabled(g, kind, args.tol)
    spec = verdict.spectrum or eigenvalues_symmetric(_symmetric_shift(g, kind))
    print("verdict:", "shift-enabled" if verdict.enabled else "not shift-enabled", file=out)
    print("reason:", verdict.reason.value, file=out)
    print("kind:", kind.value, file=out)
    print("n:", g.n, file=out)
    print("edges:", g.num_edges, file=out)
    print("min_gap:", f"{spec.min_gap:.9g}", file=out)
    if verdict.reason is Reason.REPEATED_EIGENVALUE:
        print("repeated_value:", f"{verdict.value:.9g}", file=out)
    elif not verdict.enabled and spec.gap_index is not None:
        (_, _), (a, b) = spec.closest_pair()
        print("closest_pair:", f"{a:.9g} {b:.9g}", file=out)
    return EXIT_OK if verdict.enabled else EXIT_NOT_ENABLED


def _sweep_config(args) -> tuple[ExperimentConfig, int | None]:
    opts = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                opts = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--config: cannot read {args.config}: {exc}") from None
        if not isinstance(opts, dict):
            raise UsageError("--config: expected a JSON object")
        opts = {k.replace("-", "_"): v for k, v in opts.items()}
    for key, value in vars(args).items():
        if value is not None and key not in ("command", "config"):
            opts[key] = value

    model = opts.get("model")
    if model not in MODELS:
        raise UsageError("--model: required, one of " + ", ".join(sorted(MODELS)))
    params = {}
    for name, integer in MODELS[model].items():
        if opts.get(name) is None:
            raise UsageError(f"--{name}: required for model {model}")
        raw = opts[name]
        try:
            params[name] = parse_range(raw, integer) if isinstance(raw, str) else raw
        except ValueError as exc:
            raise UsageError(f"--{name}: {exc}") from None
    for name in ("n", "m", "p", "k", "beta", "m0"):
        if name not in MODELS[model] and opts.get(name) is not None:
            raise UsageError(f"--{name}: not a parameter of model {model}")

    wname = opts.get("weights", "unit")
    try:
        if wname == "unit":
            weights = UnitWeight()
        elif wname == "exponential":
            weights = Exponential(opts.get("rate", 1.0))
        elif wname == "gaussian":
            weights = Gaussian(opts.get("mean", 0.0), opts.get("std", 1.0))
        else:
            raise UsageError(f"--weights: unknown distribution {wname!r}")
    except ShiftLabError as exc:
        flag = "--rate" if wname == "exponential" else "--std"
        raise UsageError(f"{flag}: {exc}") from None

    signed_mode = opts.get("signed_mode", "none")
    kind = opts.get("kind")
    if kind is None:
        kind = ShiftKind.SIGNED_LAPLACIAN if signed_mode != "none" else ShiftKind.LAPLACIAN
    try:
        kind = ShiftKind.parse(kind)
    except ValueError as exc:
        raise UsageError(f"--kind: {exc}") from None
    try:
        cfg = ExperimentConfig(
            model,
            params,
            weights=weights,
            signed_mode=signed_mode,
            shift_kind=kind,
            trials=opts.get("trials", DEFAULT_TRIALS),
            tol_rel=opts.get("tol", DEFAULT_TOL),
            seed=opts.get("seed", 0),
        )
    except ParameterError as exc:
        raise UsageError(f"{_FLAG.get(exc.param, '--' + exc.param)}: {exc}") from None
    return cfg, opts.get("workers")


def cmd_sweep(args, out=None):
    out = out or sys.stdout
    cfg, workers = _sweep_config(args)

    def report(row, done, total):
        print(
            f"[{done}/{total}] {row.param_name}={row.param_value:g} "
            f"p_hat={row.p_hat:.4f} errors={row.errors}",
            file=sys.stderr,
            flush=True,
        )

    result = run_sweep(cfg, workers=workers, progress=report if args.progress else None)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            result.to_csv(fh)
    else:
        result.to_csv(out)
    return EXIT_OK


def cmd_plot(args, out=None):
    spec = PlotSpec(
        csv_path=args.csv,
        output=args.out,
        x=args.x,
        y=args.y,
        band=None if args.no_band else ("ci_low", "ci_high"),
        group=args.group,
        title=args.title,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
    )
    plot_csv(spec)
    return EXIT_OK


_COMMANDS = {"check": cmd_check, "sweep": cmd_sweep, "plot": cmd_plot}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
    except (ShiftLabError, OSError) as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
