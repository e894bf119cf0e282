"""Seeded, parallelizable Monte Carlo sweeps over (model, K) cells.

One trial samples a fresh graph, deletes a fresh uniform node set, and
records connectivity, the number of survivors outside the largest component,
and the component count.  Per-trial seeds come from the documented mixer in
:mod:`kout.seeding`, so a sweep's output is a pure function of its config
and identical at any worker count or execution order.

The CSV contract (header below, LF line endings, UTF-8) is the interface
consumed by plotting and downstream tooling; floats are written with
``repr`` so files are byte-identical across runs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import json
import os

import numpy as np

from .analysis import components
from .deletion import DeletionSpec, delete_uniform
from .errors import InvalidParameterError, SweepError
from .graphs import sample_er, sample_kout
from .seeding import cell_prefixes, check_seed, fold_word

__all__ = [
    "ExperimentConfig",
    "TrialResult",
    "SweepRow",
    "SweepResult",
    "run_trial",
    "run_sweep",
    "compare_er",
    "CSV_HEADER",
]

CSV_HEADER = (
    "model,n,k,gamma,trials,master_seed,prob_connected,mean_outside_giant,"
    "max_outside_giant,p95_outside_giant,mean_components,prob_giant_within_lambda"
)

_CHUNK = 128  # fixed trial chunk; must not depend on worker count


@dataclass
class ExperimentConfig:
    model: str  # "kout" | "er" | "both"
    n: int
    k_values: list[int]
    deletion: DeletionSpec  # template; per-trial seeds are derived
    trials: int
    master_seed: int
    lam: int | None = None

    def validate(self) -> None:
        if self.model not in ("kout", "er", "both"):
            raise InvalidParameterError(f"unknown model: {self.model!r}")
        if self.n < 2:
            raise InvalidParameterError(f"n must be >= 2, got {self.n}")
        if not self.k_values:
            raise InvalidParameterError("k_values must be nonempty")
        if len(set(self.k_values)) != len(self.k_values):
            raise InvalidParameterError("k_values must be distinct")
        for k in self.k_values:
            if not 1 <= k <= self.n - 1:
                raise InvalidParameterError(f"k={k} outside [1, n-1]")
        if self.trials < 1:
            raise InvalidParameterError(f"trials must be >= 1, got {self.trials}")
        if self.lam is not None and self.lam < 1:
            raise InvalidParameterError(f"lambda must be >= 1, got {self.lam}")
        check_seed(self.master_seed)
        self.deletion.realized_gamma(self.n)  # validates mode and value

    @classmethod
    def from_json(cls, doc: dict) -> "ExperimentConfig":
        """Parse the sweep config file format (unknown fields rejected)."""
        allowed = {"model", "n", "k_values", "deletion", "trials", "master_seed", "lambda"}
        extra = set(doc) - allowed
        if extra:
            raise InvalidParameterError(f"unknown config fields: {sorted(extra)}")
        missing = allowed - {"lambda"} - set(doc)
        if missing:
            raise InvalidParameterError(f"missing config fields: {sorted(missing)}")
        dele = doc["deletion"]
        if set(dele) != {"mode", "value"}:
            raise InvalidParameterError('deletion must have exactly "mode" and "value"')
        cfg = cls(
            model=doc["model"],
            n=int(doc["n"]),
            k_values=[int(k) for k in doc["k_values"]],
            deletion=DeletionSpec(mode=dele["mode"], value=dele["value"]),
            trials=int(doc["trials"]),
            master_seed=int(doc["master_seed"]),
            lam=None if doc.get("lambda") is None else int(doc["lambda"]),
        )
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path: str) -> "ExperimentConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


@dataclass
class TrialResult:
    connected: bool
    outside_giant: int
    component_count: int


@dataclass
class SweepRow:
    model: str
    n: int
    k: int
    gamma: int
    trials: int
    master_seed: int
    prob_connected: float
    mean_outside_giant: float
    max_outside_giant: int
    p95_outside_giant: float
    mean_components: float
    prob_giant_within_lambda: float | None

    def csv_line(self) -> str:
        last = "" if self.prob_giant_within_lambda is None else repr(self.prob_giant_within_lambda)
        return ",".join(
            [
                self.model,
                str(self.n),
                str(self.k),
                str(self.gamma),
                str(self.trials),
                str(self.master_seed),
                repr(self.prob_connected),
                repr(self.mean_outside_giant),
                str(self.max_outside_giant),
                repr(self.p95_outside_giant),
                repr(self.mean_components),
                last,
            ]
        )


@dataclass
class SweepResult:
    rows: list[SweepRow]

    def csv_text(self) -> str:
        return "\n".join([CSV_HEADER] + [row.csv_line() for row in self.rows]) + "\n"

    def write_csv(self, path: str) -> None:
        with open(path, "wb") as fh:
            fh.write(self.csv_text().encode("utf-8"))


def run_trial(
    model: str, n: int, k_or_p: float, deletion: DeletionSpec, graph_seed: int
) -> TrialResult:
    """Sample one graph, delete, and analyze; pure in its arguments.

    ``deletion.seed`` must already be set (it is a separate stream from the
    graph seed, so a graph can be re-deleted reproducibly).
    """
    if model == "kout":
        graph = sample_kout(n, int(k_or_p), graph_seed)
    elif model == "er":
        graph = sample_er(n, float(k_or_p), graph_seed)
    else:
        raise InvalidParameterError(f"unknown model: {model!r}")
    summary = components(delete_uniform(graph, deletion))
    return TrialResult(
        connected=summary.connected,
        outside_giant=summary.outside_giant,
        component_count=summary.component_count,
    )


def _run_chunk(args) -> tuple:
    """Worker task: trials [start, start+count) of one (model, k) cell."""
    model, n, k, mode, value, master_seed, start, count = args
    connected = np.zeros(count, dtype=bool)
    outside = np.zeros(count, dtype=np.int64)
    comps = np.zeros(count, dtype=np.int64)
    gamma = DeletionSpec(mode=mode, value=value).realized_gamma(n)
    k_or_p = k if model == "kout" else 2.0 * k / n
    graph_prefix, del_prefix = cell_prefixes(master_seed, model, n, k, gamma)
    for i in range(count):
        graph_seed = fold_word(graph_prefix, start + i)
        del_seed = fold_word(del_prefix, start + i)
        res = run_trial(model, n, k_or_p, DeletionSpec(mode="count", value=gamma, seed=del_seed), graph_seed)
        connected[i] = res.connected
        outside[i] = res.outside_giant
        comps[i] = res.component_count
    return start, connected, outside, comps


def _aggregate_cell(
    model: str, config: ExperimentConfig, k: int, gamma: int, chunks: list[tuple]
) -> SweepRow:
    chunks.sort(key=lambda c: c[0])
    connected = np.concatenate([c[1] for c in chunks])
    outside = np.concatenate([c[2] for c in chunks])
    comps = np.concatenate([c[3] for c in chunks])
    trials = config.trials
    lam = config.lam
    return SweepRow(
        model=model,
        n=config.n,
        k=k,
        gamma=gamma,
        trials=trials,
        master_seed=config.master_seed,
        prob_connected=int(connected.sum()) / trials,
        mean_outside_giant=float(outside.mean()),
        max_outside_giant=int(outside.max()),
        p95_outside_giant=float(np.percentile(outside, 95)),
        mean_components=float(comps.mean()),
        # strict inequality: fewer than lam survivors outside the giant
        prob_giant_within_lambda=None if lam is None else int((outside < lam).sum()) / trials,
    )


def _cell_list(config: ExperimentConfig) -> list[tuple[str, int]]:
    if config.model == "both":
        return [(m, k) for k in config.k_values for m in ("kout", "er")]
    return [(config.model, k) for k in config.k_values]


def run_sweep(config: ExperimentConfig, workers: int | None = None) -> SweepResult:
    """Run trials for every (model, k) cell of the config.

    Trials are split into fixed-size chunks distributed over ``workers``
    processes (``None`` = all cores, 1 = inline); output is identical for
    any worker count.
    """
    config.validate()
    gamma = config.deletion.realized_gamma(config.n)
    cells = _cell_list(config)
    tasks = []
    for model, k in cells:
        for start in range(0, config.trials, _CHUNK):
            count = min(_CHUNK, config.trials - start)
            tasks.append(
                (
                    model,
                    config.n,
                    k,
                    config.deletion.mode,
                    config.deletion.value,
                    config.master_seed,
                    start,
                    count,
                )
            )

    results: dict[tuple[str, int], list[tuple]] = {(m, k): [] for m, k in cells}
    if workers is None:
        workers = os.cpu_count() or 1

    def fail(task, exc):
        return SweepError(f"cell model={task[0]} k={task[2]} gamma={gamma}: {exc}")

    if workers <= 1 or len(tasks) == 1:
        for task in tasks:
            try:
                out = _run_chunk(task)
            except Exception as exc:
                raise fail(task, exc) from exc
            results[(task[0], task[2])].append(out)
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            futures = [(pool.submit(_run_chunk, task), task) for task in tasks]
            for future, task in futures:
                try:
                    out = future.result()
                except Exception as exc:
                    raise fail(task, exc) from exc
                results[(task[0], task[2])].append(out)

    rows = [
        _aggregate_cell(model, config, k, gamma, results[(model, k)]) for model, k in cells
    ]
    return SweepResult(rows=rows)


def compare_er(config: ExperimentConfig, workers: int | None = None) -> SweepResult:
    """Paired K-out vs Erdos-Renyi sweep: for each k, an er cell at
    p = 2k/n shares the kout cell's deletion realizations per trial index."""
    if config.model != "both":
        raise InvalidParameterError('compare_er requires model == "both"')
    return run_sweep(config, workers=workers)
