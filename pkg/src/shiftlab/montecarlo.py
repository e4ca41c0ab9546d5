"""Monte Carlo estimation of the shift-enabled probability over parameter sweeps.

Trial ``t`` of sweep point ``i`` draws everything from one stream seeded by
``(cfg.seed, i, t)``, and per-point tallies are integer sums, so the output
does not depend on the number of worker processes or on completion order.
"""

from __future__ import annotations

import csv
import io
import math
import os
from collections.abc import Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, ShiftLabError
from .graph import (
    SignedUnit,
    UnitWeight,
    WeightDistribution,
    apply_weights,
    derive_seed,
    gen_ba,
    gen_er_gnm,
    gen_er_gnp,
    gen_ws,
    is_connected,
    sign_by_partition,
)
from .shift import ShiftKind
from .spectral import DEFAULT_TOL, is_shift_enabled

__all__ = [
    "DEFAULT_TRIALS",
    "MODELS",
    "SIGNED_MODES",
    "CSV_COLUMNS",
    "ExperimentConfig",
    "SweepRow",
    "SweepResult",
    "wilson_interval",
    "resolve_workers",
    "run_point",
    "run_sweep",
    "read_sweep_csv",
]

DEFAULT_TRIALS = 10_000
Z_95 = 1.959964

# parameter names in generator order; True marks integer parameters
MODELS = {
    "er-gnm": {"n": True, "m": True},
    "er-gnp": {"n": True, "p": False},
    "ws": {"n": True, "k": True, "beta": False},
    "ba": {"n": True, "m0": True, "m": True},
}
SIGNED_MODES = ("none", "balanced", "unbalanced")

CSV_COLUMNS = (
    "model,n,param_name,param_value,m_mean,shift_kind,weights,signed_mode,"
    "trials,successes,errors,p_hat,ci_low,ci_high,tol_rel,seed"
).split(",")


def _generate(model, point, rng):
    if model == "er-gnm":
        return gen_er_gnm(point["n"], point["m"], rng)
    if model == "er-gnp":
        return gen_er_gnp(point["n"], point["p"], rng)
    if model == "ws":
        return gen_ws(point["n"], point["k"], point["beta"], rng)
    return gen_ba(point["n"], point["m0"], point["m"], rng)


def _check_point(model, point):
    n = point["n"]
    if n < 1:
        raise ParameterError("n", f"n must be >= 1, got {n}")
    if model == "er-gnm":
        if not 0 <= point["m"] <= n * (n - 1) // 2:
            raise ParameterError("m", f"m={point['m']} outside [0, {n * (n - 1) // 2}] for n={n}")
    elif model == "er-gnp":
        if not 0.0 <= point["p"] <= 1.0:
            raise ParameterError("p", f"p={point['p']} outside [0, 1]")
    elif model == "ws":
        if n < 3:
            raise ParameterError("n", f"ws needs n >= 3, got {n}")
        if not 1 <= point["k"] <= (n - 1) // 2:
            raise ParameterError("k", f"k={point['k']} outside [1, {(n - 1) // 2}] for n={n}")
        if not 0.0 <= point["beta"] <= 1.0:
            raise ParameterError("beta", f"beta={point['beta']} outside [0, 1]")
    else:
        if not 1 <= point["m0"] <= n:
            raise ParameterError("m0", f"m0={point['m0']} outside [1, n={n}]")
        if not 1 <= point["m"] <= point["m0"]:
            raise ParameterError("m", f"m={point['m']} outside [1, m0={point['m0']}]")


def _coerce(name, value, integer):
    if integer:
        if isinstance(value, float) and not value.is_integer():
            raise ParameterError(name, f"{name} must be an integer, got {value}")
        return int(value)
    return float(value)


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: a model, its parameters, weighting, shift matrix and trial budget.

    ``params`` maps every parameter of ``model`` to a scalar, except at most
    one which maps to a sequence of values: the sweep axis.

    >>> cfg = ExperimentConfig("er-gnm", {"n": 20, "m": range(0, 191, 2)}, trials=100)
    >>> cfg.sweep_param, len(cfg.sweep_values)
    ('m', 96)
    """

    model: str
    params: Mapping
    weights: WeightDistribution = field(default_factory=UnitWeight)
    signed_mode: str = "none"
    shift_kind: ShiftKind = ShiftKind.LAPLACIAN
    trials: int = DEFAULT_TRIALS
    tol_rel: float = DEFAULT_TOL
    seed: int = 0
    sweep_param: str = field(init=False)
    sweep_values: tuple = field(init=False)

    def __post_init__(self):
        if self.model not in MODELS:
            raise ParameterError("model", f"unknown model {self.model!r} (choose from {', '.join(MODELS)})")
        spec = MODELS[self.model]
        missing = [k for k in spec if k not in self.params]
        extra = [k for k in self.params if k not in spec]
        if missing:
            raise ParameterError(missing[0], f"model {self.model} needs parameter {missing[0]}")
        if extra:
            raise ParameterError(extra[0], f"model {self.model} takes no parameter {extra[0]}")
        fixed, axis = {}, None
        for name, integer in spec.items():
            value = self.params[name]
            if isinstance(value, (Sequence, range, np.ndarray)) and not isinstance(value, str):
                if axis is not None:
                    raise ParameterError(
                        name, f"only one parameter may be swept ({axis[0]} and {name} given)"
                    )
                values = tuple(_coerce(name, v, integer) for v in value)
                if not values:
                    raise ParameterError(name, f"sweep over {name} is empty")
                axis = (name, values)
            else:
                fixed[name] = _coerce(name, value, integer)
        name, values = axis if axis else ("n", (fixed["n"],))
        fixed.pop(name, None)
        object.__setattr__(self, "params", dict(fixed))
        object.__setattr__(self, "sweep_param", name)
        object.__setattr__(self, "sweep_values", values)
        object.__setattr__(self, "shift_kind", ShiftKind.parse(self.shift_kind))
        if self.signed_mode not in SIGNED_MODES:
            raise ParameterError("signed_mode", f"signed_mode must be one of {SIGNED_MODES}, got {self.signed_mode!r}")
        if self.signed_mode != "none" and not isinstance(self.weights, UnitWeight):
            raise ParameterError("weights", "signed modes assign ±1 weights; leave weights as unit")
        if int(self.trials) < 1:
            raise ParameterError("trials", f"trials must be >= 1, got {self.trials}")
        object.__setattr__(self, "trials", int(self.trials))
        if not self.tol_rel > 0:
            raise ParameterError("tol_rel", f"tol_rel must be positive, got {self.tol_rel}")
        if not 0 <= int(self.seed) < 2**64:
            raise ParameterError("seed", f"seed must be a 64-bit unsigned integer, got {self.seed}")
        for point in self.points():
            _check_point(self.model, point)

    def points(self) -> list[dict]:
        order = MODELS[self.model]
        out = []
        for value in self.sweep_values:
            point = dict(self.params)
            point[self.sweep_param] = value
            out.append({k: point[k] for k in order})
        return out


def wilson_interval(successes: int, trials: int, z: float = Z_95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1 or not 0 <= successes <= trials:
        raise ShiftLabError(f"need 0 <= successes <= trials, got {successes}/{trials}")
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    centre = (p + z2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials * trials)) / denom
    low = 0.0 if successes == 0 else min(p, max(0.0, centre - half))
    high = 1.0 if successes == trials else max(p, min(1.0, centre + half))
    return low, high


@dataclass(frozen=True)
class SweepRow:
    index: int
    point: dict
    param_name: str
    param_value: float
    trials: int
    successes: int
    errors: int
    edge_total: int
    disconnected: int

    @property
    def n(self) -> int:
        return self.point["n"]

    @property
    def p_hat(self) -> float:
        return self.successes / self.trials

    @property
    def ci(self) -> tuple[float, float]:
        return wilson_interval(self.successes, self.trials)

    @property
    def ci_low(self) -> float:
        return self.ci[0]

    @property
    def ci_high(self) -> float:
        return self.ci[1]

    @property
    def m_mean(self) -> float:
        return self.edge_total / self.trials

    @property
    def disconnect_fraction(self) -> float:
        return self.disconnected / self.trials


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{x:.9g}"


@dataclass(frozen=True)
class SweepResult:
    config: ExperimentConfig
    rows: tuple[SweepRow, ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    @property
    def p_hat(self) -> np.ndarray:
        return np.array([r.p_hat for r in self.rows])

    def csv_records(self) -> list[list[str]]:
        cfg = self.config
        weights = cfg.weights.label if cfg.signed_mode == "none" else "signed"
        out = []
        for r in self.rows:
            out.append(
                [
                    cfg.model,
                    str(r.n),
                    r.param_name,
                    _fmt(r.param_value),
                    _fmt(r.m_mean),
                    cfg.shift_kind.value,
                    weights,
                    cfg.signed_mode,
                    str(r.trials),
                    str(r.successes),
                    str(r.errors),
                    _fmt(r.p_hat),
                    _fmt(r.ci_low),
                    _fmt(r.ci_high),
                    _fmt(cfg.tol_rel),
                    str(cfg.seed),
                ]
            )
        return out

    def to_csv(self, fh=None, header: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(CSV_COLUMNS)
        writer.writerows(self.csv_records())
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text


def read_sweep_csv(path) -> list[dict]:
    """Rows of a sweep CSV as dicts of strings (header required)."""
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _sample(cfg: ExperimentConfig, point: dict, rng: np.random.Generator):
    g = _generate(cfg.model, point, rng)
    if cfg.signed_mode == "balanced":
        return sign_by_partition(g, rng.random(g.n) < 0.5)
    if cfg.signed_mode == "unbalanced":
        return apply_weights(g, SignedUnit(), rng)
    if not isinstance(cfg.weights, UnitWeight):
        return apply_weights(g, cfg.weights, rng)
    return g


def _run_chunk(cfg: ExperimentConfig, index: int, start: int, stop: int):
    point = cfg.points()[index]
    successes = errors = edges = disconnected = 0
    for t in range(start, stop):
        rng = np.random.default_rng(derive_seed(cfg.seed, index, t))
        g = _sample(cfg, point, rng)
        edges += g.num_edges
        connected = is_connected(g)
        if not connected:
            disconnected += 1
        try:
            if is_shift_enabled(g, cfg.shift_kind, cfg.tol_rel, connected).enabled:
                successes += 1
        except ShiftLabError:
            errors += 1
    return index, successes, errors, edges, disconnected


def _row(cfg, index, tally):
    successes, errors, edges, disconnected = tally
    point = cfg.points()[index]
    return SweepRow(
        index=index,
        point=point,
        param_name=cfg.sweep_param,
        param_value=point[cfg.sweep_param],
        trials=cfg.trials,
        successes=successes,
        errors=errors,
        edge_total=edges,
        disconnected=disconnected,
    )


def run_point(cfg: ExperimentConfig, index: int) -> SweepRow:
    """Run every trial of sweep point ``index`` in the calling process."""
    if not 0 <= index < len(cfg.sweep_values):
        raise ShiftLabError(f"point index {index} outside 0..{len(cfg.sweep_values) - 1}")
    _, *tally = _run_chunk(cfg, index, 0, cfg.trials)
    return _row(cfg, index, tally)


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: explicit value, else ``SHIFTLAB_THREADS``, else all cores."""
    if workers is None:
        raw = os.environ.get("SHIFTLAB_THREADS", "").strip()
        try:
            workers = int(raw) if raw else 0
        except ValueError:
            raise ShiftLabError(f"SHIFTLAB_THREADS must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ShiftLabError(f"worker count must be >= 0, got {workers}")
    return workers or os.cpu_count() or 1


def run_sweep(cfg: ExperimentConfig, workers: int | None = None, progress=None, chunk: int = 500) -> SweepResult:
    """Evaluate every sweep point.

    ``progress``, if given, is called as ``progress(row, done, total)`` once
    each point finishes. With more than one worker, chunks of ``chunk``
    trials run in separate processes.
    """
    workers = resolve_workers(workers)
    npts = len(cfg.sweep_values)
    tallies = {i: [0, 0, 0, 0] for i in range(npts)}
    if workers == 1:
        rows = []
        for i in range(npts):
            rows.append(run_point(cfg, i))
            if progress:
                progress(rows[-1], i + 1, npts)
        return SweepResult(cfg, tuple(rows))

    tasks = [
        (i, s, min(s + chunk, cfg.trials)) for i in range(npts) for s in range(0, cfg.trials, chunk)
    ]
    remaining = {i: 0 for i in range(npts)}
    for i, _, _ in tasks:
        remaining[i] += 1
    done = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_chunk, cfg, *task) for task in tasks]
        for fut in as_completed(futures):
            index, *tally = fut.result()
            acc = tallies[index]
            for k, v in enumerate(tally):
                acc[k] += v
            remaining[index] -= 1
            if remaining[index] == 0:
                done += 1
                if progress:
                    progress(_row(cfg, index, acc), done, npts)
    return SweepResult(cfg, tuple(_row(cfg, i, tallies[i]) for i in range(npts)))
