"""Experiment harness: grid sweeps, replicate loops, and report emission.

Experiments are described by a flat dotted-key config (``gen.n = 1200``,
``test.orig.method = rcit``, ...) or built programmatically.  Every replicate
seed derives from (master seed, grid index, replicate index), so methods under
comparison see identical datasets and whole reports reproduce bit-for-bit.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product

import numpy as np

from . import __version__
from .cit import CITestSpec, DataTriple, run_cit
from .combine import CLASSICAL_METHODS, clamp_pvalues, combine_classical, combine_stable
from .datagen import PnlConfig, gen_pnl, gen_random_dag, simulate_scm
from .discovery import (make_cit_tester, make_dsep_oracle, make_ensemble_tester,
                        pc_skeleton, skeleton_metrics, skeleton_of_graph)
from .ensemble import EnsembleConfig, _subset_seed, ecit, partition, runtime_profile
from .errors import CitkitError, ConfigError, DataError
from .stable import StableParams

__all__ = [
    "ExperimentConfig", "MethodSpec", "MetricsReport", "ReportRow",
    "run_experiment", "parse_config_text", "build_experiment",
    "load_csv", "load_data_triple", "emit_report", "read_report_csv",
]

KINDS = ("type1", "power", "runtime", "alpha_ablation", "nk_ablation",
         "combiner_compare", "pc_bench")

_GEN_KEYS = ("n", "d_z", "z_dist", "noise_dist", "noise_df", "beta_x", "p_edge", "d")


@dataclass(frozen=True)
class MethodSpec:
    """One test under comparison: a base CIT, optionally wrapped in an ensemble."""

    label: str
    method: str = "kcit"
    ensemble: EnsembleConfig | None = None
    options: dict = field(default_factory=dict)

    def base_spec(self, seed: int) -> CITestSpec:
        return CITestSpec(method=self.method, seed=seed, **self.options)


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    grid: dict
    methods: tuple
    reps: int = 200
    level: float = 0.05
    seed: int = 0
    out: str | None = None
    alphas: tuple = ()
    nks: tuple = ()
    max_cond: int = 3
    threads: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"unknown experiment kind {self.kind!r}; choose from {KINDS}")
        if self.reps < 1:
            raise ConfigError(f"replicate count must be >= 1, got {self.reps}")
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")
        if not (0.0 < self.level < 1.0):
            raise ConfigError(f"level must lie in (0,1), got {self.level}")
        for key in self.grid:
            if key not in _GEN_KEYS:
                raise ConfigError(f"unknown generator grid key {key!r}")
        if self.kind == "alpha_ablation" and not self.alphas:
            raise ConfigError("alpha_ablation needs a non-empty alphas list")
        if self.kind == "nk_ablation" and not self.nks:
            raise ConfigError("nk_ablation needs a non-empty nks list")
        if self.kind not in ("runtime", "pc_bench") and not self.methods \
                and self.kind not in ("alpha_ablation", "combiner_compare"):
            raise ConfigError(f"{self.kind} needs at least one test.<label>.method entry")

    def grid_points(self):
        keys = sorted(self.grid)
        lists = [v if isinstance(v, (list, tuple)) else [v] for v in (self.grid[k] for k in keys)]
        return [dict(zip(keys, combo)) for combo in product(*lists)]


@dataclass(frozen=True)
class ReportRow:
    config_id: str
    method: str
    metric: str
    value: float
    stderr: float
    elapsed_ms: float


@dataclass(frozen=True)
class MetricsReport:
    header: dict
    rows: tuple


def _fingerprint(point: dict) -> str:
    return ",".join(f"{k}={point[k]}" for k in sorted(point))


def _rep_seed(master: int, grid_index: int, rep: int) -> int:
    return int(np.random.SeedSequence((master, grid_index, rep)).generate_state(1, np.uint64)[0])


def _pnl_config(point: dict, hypothesis: str, seed: int) -> PnlConfig:
    kwargs = {k: v for k, v in point.items() if k in
              ("n", "d_z", "z_dist", "noise_dist", "noise_df", "beta_x")}
    return PnlConfig(hypothesis=hypothesis, seed=seed, **kwargs)


def _run_method(data: DataTriple, ms: MethodSpec, seed: int):
    if ms.ensemble is None:
        return run_cit(data, ms.base_spec(seed))
    return ecit(data, ms.base_spec(0), replace(ms.ensemble, seed=seed))


def _binomial_se(rate: float, n: int) -> float:
    return math.sqrt(rate * (1.0 - rate) / n)


def _map_replicates(config: ExperimentConfig, one):
    """Apply ``one(rep)`` over all replicates, threaded when asked.

    Results stay in replicate order either way, so aggregation is identical
    whatever the execution interleaving.  ``one`` returns a value or a
    CitkitError; more than 10% errors abort the grid point.
    """
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(one, range(config.reps)))
    else:
        results = [one(rep) for rep in range(config.reps)]
    failures = [r for r in results if isinstance(r, CitkitError)]
    if len(failures) > 0.1 * config.reps:
        raise DataError(f"{len(failures)} of {config.reps} replicates failed; "
                        f"first failure: {failures[0]}")
    return [r for r in results if not isinstance(r, CitkitError)]


def replicate_decisions(config: ExperimentConfig, hypothesis: str, point: dict,
                        grid_index: int = 0):
    """Per-replicate rejection indicators per method, on shared datasets.

    Returns (decisions, elapsed) where decisions maps method label to a
    list of 0/1 rejections in replicate order — the paired records behind
    the aggregated rates, used for sign/McNemar-style comparisons.
    """

    def one(rep):
        seed = _rep_seed(config.seed, grid_index, rep)
        data = gen_pnl(_pnl_config(point, hypothesis, seed))
        try:
            return {ms.label: _run_method(data, ms, seed) for ms in config.methods}
        except CitkitError as exc:
            return exc

    decisions = {ms.label: [] for ms in config.methods}
    elapsed = {ms.label: [] for ms in config.methods}
    for outs in _map_replicates(config, one):
        for label, out in outs.items():
            decisions[label].append(int(out.p <= config.level))
            elapsed[label].append(out.elapsed)
    return decisions, elapsed


def _rate_rows(config: ExperimentConfig, hypothesis: str, metric: str):
    rows = []
    for gi, point in enumerate(config.grid_points()):
        decisions, elapsed = replicate_decisions(config, hypothesis, point, gi)
        for ms in config.methods:
            dec = decisions[ms.label]
            if not dec:
                raise DataError(f"all replicates failed at grid point {_fingerprint(point)}")
            rate = float(np.mean(dec))
            rows.append(ReportRow(_fingerprint(point), ms.label, metric, rate,
                                  _binomial_se(rate, len(dec)),
                                  1000.0 * float(np.median(elapsed[ms.label]))))
    return rows


def _runtime_rows(config: ExperimentConfig):
    sizes = sorted({int(p["n"]) for p in config.grid_points()})
    rows = []
    for ms in config.methods:
        base = ms.base_spec(config.seed)
        profile = runtime_profile(base, ms.ensemble, sizes, seed=config.seed)
        for n, med in profile:
            rows.append(ReportRow(f"n={n}", ms.label, "runtime_s", med, 0.0, 1000.0 * med))
    return rows


def subtest_pvalue_sets(config: ExperimentConfig, hypothesis: str, ms: MethodSpec,
                        point: dict, grid_index: int = 0):
    """Per-replicate raw subtest p-value vectors for combiner comparisons.

    Seeds follow the same derivation as :func:`ecit`, so combining these
    vectors reproduces exactly what the ensemble itself would report.
    """
    if ms.ensemble is None:
        raise ConfigError("subtest p-value sweeps need an ensemble method")

    def one(rep):
        seed = _rep_seed(config.seed, grid_index, rep)
        data = gen_pnl(_pnl_config(point, hypothesis, seed))
        try:
            subs = partition(data, replace(ms.ensemble, seed=seed))
            return np.array([run_cit(sub, replace(ms.base_spec(0),
                                                  seed=_subset_seed(seed, k))).p
                             for k, sub in enumerate(subs)])
        except CitkitError as exc:
            return exc

    return _map_replicates(config, one)


def _alpha_rows(config: ExperimentConfig):
    ms = config.methods[0] if config.methods else MethodSpec(
        label="ekcit", method="kcit", ensemble=EnsembleConfig(n_k=400))
    if ms.ensemble is None:
        raise ConfigError("alpha_ablation compares ensemble variants; give the method an nk or K")
    rows = []
    for gi, point in enumerate(config.grid_points()):
        for hypothesis, metric in (("H0", "type1_rate"), ("H1", "power")):
            sets = subtest_pvalue_sets(config, hypothesis, ms, point, gi)
            for alpha in config.alphas:
                params = StableParams(float(alpha), 0.0, 1.0, 0.0)
                t0 = time.perf_counter()
                rej = [combine_stable(clamp_pvalues(ps, epsilon=ms.ensemble.epsilon),
                                      params).p_combined <= config.level for ps in sets]
                dt = (time.perf_counter() - t0) / max(len(sets), 1)
                rate = float(np.mean(rej))
                rows.append(ReportRow(_fingerprint(point), f"{ms.label}@alpha={alpha:g}",
                                      metric, rate, _binomial_se(rate, len(rej)), 1000.0 * dt))
    return rows


def _nk_rows(config: ExperimentConfig):
    base_ms = config.methods[0] if config.methods else MethodSpec(label="ekcit", method="kcit")
    rows = []
    for gi, point in enumerate(config.grid_points()):
        for nk in config.nks:
            for alpha in (1.75, 2.0):
                ens = EnsembleConfig(n_k=int(nk), params=StableParams(alpha, 0.0, 1.0, 0.0))
                ms = MethodSpec(label=f"{base_ms.label}@nk={nk},alpha={alpha:g}",
                                method=base_ms.method, ensemble=ens, options=base_ms.options)
                sub = replace(config, methods=(ms,))
                rows.extend(_rate_rows(sub, "H1", "power"))
        orig = MethodSpec(label=f"{base_ms.method}-orig", method=base_ms.method,
                          options=base_ms.options)
        sub = replace(config, methods=(orig,))
        rows.extend(_rate_rows(sub, "H1", "power"))
    return rows


def _combiner_rows(config: ExperimentConfig):
    ms = config.methods[0] if config.methods else MethodSpec(
        label="ekcit", method="kcit", ensemble=EnsembleConfig(n_k=400))
    if ms.ensemble is None:
        raise ConfigError("combiner_compare needs an ensemble method (set nk or K)")
    combiners = ("ours",) + tuple(m for m in CLASSICAL_METHODS if m != "liptak")
    rows = []
    for gi, point in enumerate(config.grid_points()):
        for hypothesis, metric in (("H0", "type1_rate"), ("H1", "power")):
            sets = subtest_pvalue_sets(config, hypothesis, ms, point, gi)
            for name in combiners:
                rej = []
                t0 = time.perf_counter()
                for ps in sets:
                    clamped = clamp_pvalues(ps, epsilon=ms.ensemble.epsilon)
                    if name == "ours":
                        p = combine_stable(clamped, ms.ensemble.params).p_combined
                    else:
                        p = combine_classical(name, clamped).p_combined
                    rej.append(p <= config.level)
                dt = (time.perf_counter() - t0) / max(len(sets), 1)
                rate = float(np.mean(rej))
                rows.append(ReportRow(_fingerprint(point), name, metric, rate,
                                      _binomial_se(rate, len(rej)), 1000.0 * dt))
    return rows


def _pc_rows(config: ExperimentConfig):
    rows = []
    for gi, point in enumerate(config.grid_points()):
        d = int(point.get("d", 8))
        n = int(point.get("n", 2000))
        p_edge = float(point.get("p_edge", 0.3))
        noise = point.get("noise_dist", "laplace")
        noise_df = float(point.get("noise_df", 4.0))
        for g in range(config.reps):
            seed = _rep_seed(config.seed, gi, g)
            graph = gen_random_dag(d, p_edge, seed=seed)
            truth = skeleton_of_graph(graph)
            scm = simulate_scm(graph, n, noise_dist=noise, seed=seed, noise_df=noise_df)
            for ms in config.methods:
                t0 = time.perf_counter()
                if ms.method == "oracle":
                    tester = make_dsep_oracle(graph)
                    max_cond = d - 2
                elif ms.ensemble is not None:
                    tester = make_ensemble_tester(scm.values, ms.base_spec(seed),
                                                  replace(ms.ensemble, seed=seed))
                    max_cond = config.max_cond
                else:
                    tester = make_cit_tester(scm.values, ms.base_spec(seed))
                    max_cond = config.max_cond
                est = pc_skeleton(scm.values if ms.method != "oracle" else None,
                                  tester, level=config.level, max_cond=max_cond,
                                  d=d)
                _, _, f1, shd = skeleton_metrics(est, truth)
                dt = 1000.0 * (time.perf_counter() - t0)
                cid = f"{_fingerprint(point)},graph={g}"
                rows.append(ReportRow(cid, ms.label, "f1", float(f1), 0.0, dt))
                rows.append(ReportRow(cid, ms.label, "shd", float(shd), 0.0, dt))
    return rows


def run_experiment(config: ExperimentConfig) -> MetricsReport:
    """Run the configured sweep and aggregate a deterministic report."""
    handlers = {
        "type1": lambda: _rate_rows(config, "H0", "type1_rate"),
        "power": lambda: _rate_rows(config, "H1", "power"),
        "runtime": lambda: _runtime_rows(config),
        "alpha_ablation": lambda: _alpha_rows(config),
        "nk_ablation": lambda: _nk_rows(config),
        "combiner_compare": lambda: _combiner_rows(config),
        "pc_bench": lambda: _pc_rows(config),
    }
    rows = handlers[config.kind]()
    header = {
        "kind": config.kind,
        "seed": config.seed,
        "reps": config.reps,
        "level": config.level,
        "version": __version__,
        "partition_policy": next((ms.ensemble.partition_policy for ms in config.methods
                                  if ms.ensemble is not None), "shuffle"),
    }
    return MetricsReport(header=header, rows=tuple(rows))


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------

def _parse_value(raw: str):
    raw = raw.strip()
    if "," in raw:
        return [_parse_value(tok) for tok in raw.split(",") if tok.strip()]
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            pass
    return raw


def parse_config_text(text: str) -> dict:
    """Flat dotted-key config: one ``key = value`` per line, ``#`` comments."""
    flat = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"config line {lineno}: expected 'key = value', got {body!r}")
        key, _, raw = body.partition("=")
        flat[key.strip()] = _parse_value(raw)
    return flat


def _parse_noise(token):
    if isinstance(token, str) and ":" in token:
        dist, _, df = token.partition(":")
        return dist, float(df)
    return token, None


def _build_methods(flat: dict):
    groups: dict = {}
    for key, value in flat.items():
        if not key.startswith("test."):
            continue
        parts = key.split(".")
        if len(parts) != 3:
            raise ConfigError(f"method keys look like test.<label>.<field>, got {key!r}")
        groups.setdefault(parts[1], {})[parts[2]] = value
    methods = []
    for label in sorted(groups):
        fields = dict(groups[label])
        method = fields.pop("method", "kcit")
        ens_kwargs = {}
        if "nk" in fields:
            ens_kwargs["n_k"] = int(fields.pop("nk"))
        if "K" in fields:
            ens_kwargs["K"] = int(fields.pop("K"))
        if "alpha" in fields:
            ens_kwargs["params"] = StableParams(float(fields.pop("alpha")), 0.0, 1.0, 0.0)
        for name in ("partition_policy", "remainder_policy", "epsilon"):
            if name in fields:
                ens_kwargs[name] = fields.pop(name)
        ensemble = EnsembleConfig(**ens_kwargs) if ens_kwargs else None
        options = {k: v for k, v in fields.items()}
        methods.append(MethodSpec(label=label, method=method, ensemble=ensemble,
                                  options=options))
    return tuple(methods)


def build_experiment(flat: dict) -> ExperimentConfig:
    """Turn a flat dotted-key mapping into a validated ExperimentConfig."""
    flat = dict(flat)
    kind = flat.pop("kind", None)
    if kind is None:
        raise ConfigError("config needs a 'kind' entry")
    grid = {}
    for key in list(flat):
        if key.startswith("gen."):
            name = key[4:]
            value = flat.pop(key)
            if name == "noise":
                dists = value if isinstance(value, list) else [value]
                parsed = [_parse_noise(v) for v in dists]
                grid["noise_dist"] = [p[0] for p in parsed]
                dfs = [p[1] for p in parsed if p[1] is not None]
                if dfs:
                    if len(dfs) != len(parsed):
                        raise ConfigError("mixing df'd and df-less noise specs in one grid")
                    grid["noise_df"] = dfs if len(dfs) > 1 else dfs[0]
                if len(grid["noise_dist"]) == 1:
                    grid["noise_dist"] = grid["noise_dist"][0]
            else:
                grid[name] = value
    methods = _build_methods(flat)
    for key in list(flat):
        if key.startswith("test."):
            flat.pop(key)
    kwargs = {}
    for name in ("reps", "level", "seed", "max_cond", "threads"):
        if name in flat:
            kwargs[name] = flat.pop(name)
    if "alphas" in flat:
        v = flat.pop("alphas")
        kwargs["alphas"] = tuple(v) if isinstance(v, list) else (v,)
    if "nks" in flat:
        v = flat.pop("nks")
        kwargs["nks"] = tuple(v) if isinstance(v, list) else (v,)
    out = flat.pop("out", None)
    if flat:
        raise ConfigError(f"unknown config keys: {sorted(flat)}")
    return ExperimentConfig(kind=kind, grid=grid, methods=methods, out=out, **kwargs)


# ---------------------------------------------------------------------------
# CSV ingestion and report emission
# ---------------------------------------------------------------------------

def load_csv(path):
    """Numeric CSV with a header row -> (matrix, column names).

    Any non-numeric or non-finite cell raises a DataError naming the cell.
    """
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise DataError(f"cannot open {path}: {exc}") from exc
    with fh:
        try:
            reader = csv.reader(fh)
            header = next(reader, None)
            if not header:
                raise DataError(f"{path}: empty file, expected a header row")
            rows = []
            for rownum, cells in enumerate(reader, start=2):
                if len(cells) != len(header):
                    raise DataError(f"{path}: row {rownum} has {len(cells)} cells, "
                                    f"expected {len(header)}")
                parsed = []
                for name, cell in zip(header, cells):
                    try:
                        v = float(cell)
                    except ValueError:
                        raise DataError(f"{path}: row {rownum}, column {name!r}: "
                                        f"non-numeric cell {cell!r}") from None
                    if not math.isfinite(v):
                        raise DataError(f"{path}: row {rownum}, column {name!r}: "
                                        f"non-finite cell {cell!r}")
                    parsed.append(v)
                rows.append(parsed)
        except UnicodeDecodeError as exc:
            raise DataError(f"{path}: not valid UTF-8: {exc}") from exc
    if not rows:
        raise DataError(f"{path}: no data rows")
    return np.array(rows, dtype=float), [h.strip() for h in header]


def load_data_triple(path, x, y, z=()):
    """Load a CSV and slice named columns into a DataTriple."""
    matrix, names = load_csv(path)
    index = {name: i for i, name in enumerate(names)}
    missing = [c for c in (x, y, *z) if c not in index]
    if missing:
        raise DataError(f"{path}: missing columns {missing}; available: {names}")
    zcols = [index[c] for c in z]
    return DataTriple(matrix[:, [index[x]]], matrix[:, [index[y]]],
                      matrix[:, zcols] if zcols else None)


_CSV_HEADER = ("config_id", "method", "metric", "value", "stderr", "elapsed_ms")


def emit_report(report: MetricsReport, fmt: str = "csv", path=None) -> str:
    """Serialize a report; returns the text and optionally writes it to path."""
    if not report.rows:
        raise ConfigError("refusing to emit an empty report")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_HEADER)
        for r in report.rows:
            writer.writerow([r.config_id, r.method, r.metric,
                             repr(r.value), repr(r.stderr), repr(r.elapsed_ms)])
        text = buf.getvalue()
    elif fmt == "json":
        payload = {"header": report.header,
                   "rows": [{"config_id": r.config_id, "method": r.method,
                             "metric": r.metric, "value": r.value,
                             "stderr": r.stderr, "elapsed_ms": r.elapsed_ms}
                            for r in report.rows]}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        raise ConfigError(f"unknown report format {fmt!r}; use csv or json")
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise DataError(f"cannot write report to {path}: {exc}") from exc
    return text


def read_report_csv(path) -> list:
    """Parse a report CSV back into ReportRow records."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != _CSV_HEADER:
            raise DataError(f"{path}: unexpected report header {header}")
        return [ReportRow(c, m, met, float(v), float(se), float(ms))
                for c, m, met, v, se, ms in reader]
