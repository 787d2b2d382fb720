"""Seeded Monte-Carlo studies over random deployments.

Each experiment sweeps one parameter over freshly generated fields and
reduces the per-realization outcomes into one record per sweep point
(or per curve step). Every random draw is keyed by
``child_seed(base_seed, <labels>)``, and results are reduced in task
order, so reports are byte-identical for a given configuration no matter
how many worker processes run the realizations.

Experiments
-----------

* ``coverage_curve``: covered fraction of the segment after each greedy
  step, frontier selection vs. plain maximum-coverage selection.
* ``intersection_sweep``: selection sizes of the two greedies per field
  size, plus where their coverage curves meet.
* ``k_barrier``: selection sizes of ``k_oga`` vs. the k-disjoint-paths
  benchmark for several coverage multiplicities.
* ``single_failure``: for every selected sensor, the cost of mending its
  failure locally (``logm``) vs. re-selecting from scratch.
* ``multi_gap``: the same comparison when several selected sensors fail
  at once.
"""

from __future__ import annotations

import json
import time
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .algorithms import find_gaps, k_oga, logm, oga, oga_continuous
from .baselines import build_barrier_graph, greedy_max_coverage, k_disjoint_paths
from .deployment import RNG_ALGORITHM, DeploymentSpec, child_seed, generate
from .model import (
    Domain,
    ParameterError,
    SensorField,
    coverage_fraction,
    discretize,
)

EXPERIMENTS = (
    "coverage_curve",
    "intersection_sweep",
    "k_barrier",
    "single_failure",
    "multi_gap",
)

_NEG = float("-inf")


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment run: what to sweep, over what deployments, how often.

    ``deployment`` is the template; its ``n`` and ``seed`` are overridden
    per sweep point and realization, except for ``multi_gap`` where the
    sweep values are failure counts and ``deployment.n`` is used as is.
    """

    experiment: str
    deployment: DeploymentSpec
    sweep: tuple[int, ...]
    realizations: int = 1
    base_seed: int = 0
    k_values: tuple[int, ...] = (2, 4)
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ParameterError(
                f"unknown experiment {self.experiment!r}; "
                f"expected one of {', '.join(EXPERIMENTS)}"
            )
        object.__setattr__(self, "sweep", tuple(int(x) for x in self.sweep))
        object.__setattr__(self, "k_values", tuple(int(k) for k in self.k_values))
        if not self.sweep:
            raise ParameterError("sweep must not be empty")
        if any(x < 1 for x in self.sweep):
            raise ParameterError(f"sweep values must be >= 1, got {self.sweep}")
        if self.realizations < 1:
            raise ParameterError(f"realizations must be >= 1, got {self.realizations}")
        if self.base_seed < 0:
            raise ParameterError(f"base_seed must be >= 0, got {self.base_seed}")
        if not self.k_values or any(k < 1 for k in self.k_values):
            raise ParameterError(f"k_values must be >= 1, got {self.k_values}")
        if self.jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {self.jobs}")

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "deployment": self.deployment.to_dict(),
            "sweep": list(self.sweep),
            "realizations": self.realizations,
            "base_seed": self.base_seed,
            "k_values": list(self.k_values),
            "jobs": self.jobs,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        known = {
            "experiment",
            "deployment",
            "sweep",
            "realizations",
            "base_seed",
            "k_values",
            "jobs",
        }
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown experiment fields: {sorted(unknown)}")
        missing = [k for k in ("experiment", "deployment", "sweep") if k not in data]
        if missing:
            raise ParameterError(f"experiment config needs fields: {missing}")
        dep = data["deployment"]
        if isinstance(dep, dict):
            dep = DeploymentSpec.from_dict(dep)
        return cls(
            experiment=data["experiment"],
            deployment=dep,
            sweep=tuple(data["sweep"]),
            realizations=int(data.get("realizations", 1)),
            base_seed=int(data.get("base_seed", 0)),
            k_values=tuple(data.get("k_values", (2, 4))),
            jobs=int(data.get("jobs", 1)),
        )


@dataclass(frozen=True)
class ExperimentReport:
    """Tabular experiment outcome plus the configuration that produced it.

    ``wall_time_s`` is measured but kept out of serialized output unless
    explicitly requested, and the worker count never appears in it, so
    runs of the same configuration produce byte-identical files no
    matter when or how parallel they were.
    """

    config: ExperimentConfig
    columns: tuple[str, ...]
    records: tuple[dict, ...]
    metadata: dict
    wall_time_s: float | None = None

    def csv_text(self) -> str:
        lines = [",".join(self.columns)]
        for rec in self.records:
            cells = []
            for name in self.columns:
                value = rec[name]
                if value is None:
                    cells.append("")
                elif isinstance(value, bool):
                    cells.append(str(int(value)))
                elif isinstance(value, int):
                    cells.append(str(value))
                else:
                    cells.append(format(float(value), ".10g"))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_dict(self, include_timing: bool = False) -> dict:
        config = self.config.to_dict()
        del config["jobs"]
        out = {
            "config": config,
            "metadata": dict(self.metadata),
            "columns": list(self.columns),
            "records": [dict(r) for r in self.records],
        }
        if include_timing and self.wall_time_s is not None:
            out["wall_time_s"] = self.wall_time_s
        return out

    def json_text(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"

    def write(
        self,
        path: str | Path,
        fmt: str = "csv",
        include_timing: bool = False,
    ) -> None:
        if fmt == "csv":
            text = self.csv_text()
        elif fmt == "json":
            text = self.json_text(include_timing)
        else:
            raise ParameterError(f"format must be 'csv' or 'json', got {fmt!r}")
        Path(path).write_text(text, encoding="utf-8")


def _pmap(fn: Callable, tasks: Sequence, jobs: int) -> list:
    """map() preserving task order, optionally over worker processes."""
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    chunk = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=chunk))


def prefix_coverage(field: SensorField, selected_ids, domain: Domain) -> list[float]:
    """Covered fraction after each real selected sensor, starting at 0.

    Virtual gap sensors contribute no coverage and add no curve step.
    """
    chosen = []
    curve = [0.0]
    for sid in selected_ids:
        iv = field.interval_of(sid)
        if iv is None:
            continue
        chosen.append(iv)
        curve.append(coverage_fraction(chosen, domain))
    return curve


def curve_intersection(
    first: Sequence[float], second: Sequence[float]
) -> float | None:
    """Fractional step where ``second`` first drops to or below ``first``.

    Both sequences are per-step values starting at step 0; the shorter one
    is held at its final value. The crossing is located by linear
    interpolation between the last step where ``second`` was strictly
    above and the first where it no longer is; None when that never
    happens.
    """

    def at(curve: Sequence[float], i: int) -> float:
        return curve[i] if i < len(curve) else curve[-1]

    top = max(len(first), len(second))
    for i in range(1, top):
        after = at(second, i) - at(first, i)
        if after > 0:
            continue
        before = at(second, i - 1) - at(first, i - 1)
        denom = before - after
        if denom <= 0:
            return float(i)
        return (i - 1) + before / denom
    return None


# --------------------------------------------------------------------------
# fast per-failure evaluation
#
# Removing one sensor from a frontier-greedy selection chain leaves the
# earlier picks covering [a, f] (f = the frontier when the failed sensor
# was picked) and the later picks covering from min(their left endpoints)
# onward, so exactly one hole opens. Mending it and re-running selection
# from scratch both advance a frontier by "furthest reach among intervals
# touching it", which depends only on the frontier position, never on
# tie-breaking among equal reaches. That makes selection *sizes* computable
# by memoized frontier walks over three prefix tables instead of re-running
# the full selector once per failed sensor. ``single_failure_counts`` is
# cross-checked against the plain ``find_gaps`` + ``logm`` + fresh
# ``oga_continuous`` route in the test suite.
# --------------------------------------------------------------------------


class _FrontierWalker:
    """Count-only frontier walks over one field's canonical intervals."""

    def __init__(
        self, field: SensorField, domain: Domain, selected_ids: Sequence[int]
    ) -> None:
        intervals = field.intervals
        self.b = domain[1]
        self.us = [iv.u for iv in intervals]
        self.vs = [iv.v for iv in intervals]
        self.m = len(intervals)
        self.index_of = {iv.sensor_id: i for i, iv in enumerate(intervals)}

        # furthest reach over intervals[0..i], who holds it, and the
        # furthest reach held by any other position
        pref_best: list[float] = []
        pref_arg: list[int] = []
        pref_second: list[float] = []
        best = _NEG
        arg = -1
        second = _NEG
        for i, v in enumerate(self.vs):
            if v > best:
                second = best
                best = v
                arg = i
            elif v > second:
                second = v
            pref_best.append(best)
            pref_arg.append(arg)
            pref_second.append(second)
        self.pref_best = pref_best
        self.pref_arg = pref_arg
        self.pref_second = pref_second

        # first position at or after i whose interval has positive extent
        nxt = [self.m] * (self.m + 1)
        for i in range(self.m - 1, -1, -1):
            nxt[i] = i if self.vs[i] > self.us[i] else nxt[i + 1]
        self.nxt = nxt

        # the mending pool: intervals of sensors outside the selection
        sel = set(selected_ids)
        pool_us: list[float] = []
        pool_vs: list[float] = []
        for iv in intervals:
            if iv.sensor_id not in sel:
                pool_us.append(iv.u)
                pool_vs.append(iv.v)
        self.pool_us = pool_us
        self.pool_vs = pool_vs
        pool_best: list[float] = []
        best = _NEG
        for v in pool_vs:
            if v > best:
                best = v
            pool_best.append(best)
        self.pool_best = pool_best
        pn = len(pool_us)
        pool_nxt = [pn] * (pn + 1)
        for i in range(pn - 1, -1, -1):
            pool_nxt[i] = i if pool_vs[i] > pool_us[i] else pool_nxt[i + 1]
        self.pool_nxt = pool_nxt

        # frontier -> (selections to reach b over all sensors, virtual-free)
        self.memo: dict[float, tuple[int, bool]] = {}

    def count_all(self, f: float) -> tuple[int, bool]:
        """Selections to cover [f, b] over all sensors, memoized."""
        memo = self.memo
        path: list[tuple[float, bool]] = []
        while f < self.b and f not in memo:
            pos = bisect_right(self.us, f)
            best = self.pref_best[pos - 1] if pos else _NEG
            if best > f:
                path.append((f, True))
                f = best
            else:
                p = self.nxt[pos]
                path.append((f, False))
                f = self.us[p] if p < self.m else self.b
        count, clean = memo[f] if f < self.b else (0, True)
        result = (count, clean)
        for frontier, step_clean in reversed(path):
            count += 1
            clean = clean and step_clean
            result = (count, clean)
            memo[frontier] = result
        return result

    def fresh_count(self, f: float, skip: int) -> tuple[int, bool]:
        """Selections to cover [f, b] when interval position ``skip`` is gone.

        Once the frontier passes the skipped interval's right endpoint
        that interval can never win or resume coverage again, so the walk
        continues on the shared all-sensor memo.
        """
        v_skip = self.vs[skip]
        count = 0
        clean = True
        while f < self.b:
            if f >= v_skip:
                tail, tail_clean = self.count_all(f)
                return count + tail, clean and tail_clean
            pos = bisect_right(self.us, f)
            if pos:
                arg = self.pref_arg[pos - 1]
                best = (
                    self.pref_second[pos - 1]
                    if arg == skip
                    else self.pref_best[pos - 1]
                )
            else:
                best = _NEG
            if best > f:
                count += 1
                f = best
            else:
                p = self.nxt[pos]
                if p == skip:
                    p = self.nxt[p + 1]
                count += 1
                clean = False
                f = self.us[p] if p < self.m else self.b
        return count, clean

    def mend_count(self, gap_u: float, gap_v: float) -> tuple[int, bool]:
        """Selections from the pool to cover the gap, as ``logm`` would."""
        count = 0
        clean = True
        g = gap_u
        pn = len(self.pool_us)
        while g < gap_v:
            pos = bisect_right(self.pool_us, g)
            best = self.pool_best[pos - 1] if pos else _NEG
            if best > g:
                count += 1
                g = best
            else:
                p = self.pool_nxt[pos]
                count += 1
                clean = False
                g = min(self.pool_us[p], gap_v) if p < pn else gap_v
        return count, clean


def single_failure_counts(
    field: SensorField, domain: Domain | None = None
) -> list[tuple[int, int, int, bool]] | None:
    """Mended vs. from-scratch selection sizes for every single failure.

    Runs the continuous frontier selection once, then for each selected
    sensor in turn reports ``(failed_id, mended_total, fresh_total,
    clean)``: the total selection size after locating and locally mending
    that sensor's hole, the size of a fresh selection over the surviving
    field, and whether both sides managed without virtual gap sensors.
    Returns None when the initial selection itself is not fully covered.
    """
    if domain is None:
        domain = field.domain
    result = oga_continuous(field, domain, record_trace=True)
    if not result.fully_covered:
        return None
    sel = result.selected_ids
    n_sel = len(sel)
    walker = _FrontierWalker(field, domain, sel)
    frontiers = [step.current_target for step in result.trace]
    sel_idx = [walker.index_of[sid] for sid in sel]

    # leftmost left-endpoint among later picks: coverage resumes there
    resume = [domain[1]] * (n_sel + 1)
    for t in range(n_sel - 1, -1, -1):
        resume[t] = min(walker.us[sel_idx[t]], resume[t + 1])

    out = []
    for t, sid in enumerate(sel):
        f = frontiers[t]
        gap_v = resume[t + 1]
        if gap_v > f:
            mend, mend_clean = walker.mend_count(f, gap_v)
        else:
            mend, mend_clean = 0, True
        tail, fresh_clean = walker.fresh_count(f, sel_idx[t])
        out.append((sid, n_sel - 1 + mend, t + tail, mend_clean and fresh_clean))
    return out


# --------------------------------------------------------------------------
# experiment workers (top level so process pools can pickle them)
# --------------------------------------------------------------------------


def _worker_curves(args: tuple) -> tuple:
    spec_dict, n, r = args
    spec = DeploymentSpec.from_dict(spec_dict)
    field = generate(spec)
    targets = discretize(field)
    frontier = oga(field, targets, record_trace=False)
    plain = greedy_max_coverage(field, targets, record_trace=False)
    oga_curve = prefix_coverage(field, frontier.selected_ids, field.domain)
    greedy_curve = prefix_coverage(field, plain.selected_ids, field.domain)
    return n, r, oga_curve, greedy_curve, frontier.fully_covered


def _worker_intersection(args: tuple) -> tuple:
    n, r, oga_curve, greedy_curve, coverable = _worker_curves(args)
    crossing = curve_intersection(oga_curve, greedy_curve) if coverable else None
    return coverable, len(oga_curve) - 1, len(greedy_curve) - 1, crossing


def _worker_kbarrier(args: tuple) -> tuple:
    spec_dict, n, k, r = args
    spec = DeploymentSpec.from_dict(spec_dict)
    field = generate(spec)
    targets = discretize(field)
    rounds = k_oga(field, targets, k, record_trace=False)
    graph = build_barrier_graph(field, field.domain)
    bench = k_disjoint_paths(graph, k)
    return rounds.count, rounds.fully_covered, bench.count, bench.fully_covered


def _worker_single_failure(args: tuple) -> tuple:
    spec_dict, n, r = args
    spec = DeploymentSpec.from_dict(spec_dict)
    field = generate(spec)
    rows = single_failure_counts(field, field.domain)
    if rows is None:
        return (1, 0, 0, 0, 0, 0, 0, 0)
    failures = zeros = violations = unclean = 0
    total = 0
    low = high = 0
    for _sid, mended_total, fresh_total, clean in rows:
        if not clean:
            unclean += 1
            continue
        diff = mended_total - fresh_total
        if failures == 0:
            low = high = diff
        else:
            low = min(low, diff)
            high = max(high, diff)
        failures += 1
        total += diff
        if diff == 0:
            zeros += 1
        if diff > 1:
            violations += 1
    return (0, failures, total, low, high, zeros, violations, unclean)


def _worker_multi_gap(args: tuple) -> tuple:
    spec_dict, m, r, base_seed = args
    template = DeploymentSpec.from_dict(spec_dict)
    field = None
    selection = None
    real_ids: list[int] = []
    attempt = 0
    for attempt in range(200):
        spec = template.with_(seed=child_seed(base_seed, m, r, attempt, 0))
        field = generate(spec)
        selection = oga_continuous(field, field.domain, record_trace=False)
        if not selection.fully_covered:
            continue
        real_ids = list(selection.selected_ids)
        if len(real_ids) >= m:
            break
    else:
        raise RuntimeError(
            f"no deployment with at least {m} selected sensors in 200 attempts"
        )
    rng = np.random.default_rng(child_seed(base_seed, m, r, attempt, 1))
    failed = sorted(
        int(x) for x in rng.choice(np.asarray(real_ids), size=m, replace=False)
    )
    gaps = find_gaps(selection, failed, field, field.domain)
    mended = logm(
        selection, gaps, field, field.domain, failed_ids=failed, record_trace=False
    )
    fresh = oga_continuous(field.without(failed), field.domain, record_trace=False)
    extra = mended.count - fresh.count
    clean = mended.fully_covered and fresh.fully_covered
    return extra, len(gaps), attempt, clean


# --------------------------------------------------------------------------
# experiment runners
# --------------------------------------------------------------------------


def _sweep_tasks(config: ExperimentConfig) -> list[tuple]:
    tasks = []
    for n in config.sweep:
        for r in range(config.realizations):
            spec = config.deployment.with_(
                n=n, seed=child_seed(config.base_seed, n, r)
            )
            tasks.append((spec.to_dict(), n, r))
    return tasks


def run_coverage_curve(config: ExperimentConfig) -> tuple[tuple, list[dict]]:
    results = _pmap(_worker_curves, _sweep_tasks(config), config.jobs)
    rows = []
    for n, r, oga_curve, greedy_curve, _coverable in results:
        top = max(len(oga_curve), len(greedy_curve))
        for step in range(top):
            rows.append(
                {
                    "n": n,
                    "realization": r,
                    "step": step,
                    "oga_coverage": oga_curve[min(step, len(oga_curve) - 1)],
                    "greedy_coverage": greedy_curve[
                        min(step, len(greedy_curve) - 1)
                    ],
                }
            )
    columns = ("n", "realization", "step", "oga_coverage", "greedy_coverage")
    return columns, rows


def run_intersection_sweep(config: ExperimentConfig) -> tuple[tuple, list[dict]]:
    results = _pmap(_worker_intersection, _sweep_tasks(config), config.jobs)
    rows = []
    per = config.realizations
    for i, n in enumerate(config.sweep):
        chunk = results[i * per : (i + 1) * per]
        coverable = wins = crossed = 0
        oga_total = greedy_total = 0
        crossing_total = 0.0
        for ok, oga_count, greedy_count, crossing in chunk:
            if not ok:
                continue
            coverable += 1
            oga_total += oga_count
            greedy_total += greedy_count
            if oga_count < greedy_count:
                wins += 1
            if crossing is not None:
                crossed += 1
                crossing_total += crossing
        rows.append(
            {
                "n": n,
                "realizations": per,
                "coverable": coverable,
                "oga_mean": oga_total / coverable if coverable else 0.0,
                "greedy_mean": greedy_total / coverable if coverable else 0.0,
                "oga_wins": wins,
                "crossed": crossed,
                "crossing_mean": crossing_total / crossed if crossed else 0.0,
            }
        )
    columns = (
        "n",
        "realizations",
        "coverable",
        "oga_mean",
        "greedy_mean",
        "oga_wins",
        "crossed",
        "crossing_mean",
    )
    return columns, rows


def run_k_barrier(config: ExperimentConfig) -> tuple[tuple, list[dict]]:
    tasks = []
    for n in config.sweep:
        for k in config.k_values:
            for r in range(config.realizations):
                spec = config.deployment.with_(
                    n=n, seed=child_seed(config.base_seed, n, r)
                )
                tasks.append((spec.to_dict(), n, k, r))
    results = _pmap(_worker_kbarrier, tasks, config.jobs)
    rows = []
    per = config.realizations
    i = 0
    for n in config.sweep:
        for k in config.k_values:
            chunk = results[i * per : (i + 1) * per]
            i += 1
            oga_total = sum(c[0] for c in chunk)
            bench_total = sum(c[2] for c in chunk)
            both = [c for c in chunk if c[1] and c[3]]
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "realizations": per,
                    "oga_mean": oga_total / per,
                    "benchmark_mean": bench_total / per,
                    "oga_full_frac": sum(1 for c in chunk if c[1]) / per,
                    "benchmark_full_frac": sum(1 for c in chunk if c[3]) / per,
                    "coverable": len(both),
                    "oga_mean_cov": (
                        sum(c[0] for c in both) / len(both) if both else None
                    ),
                    "benchmark_mean_cov": (
                        sum(c[2] for c in both) / len(both) if both else None
                    ),
                }
            )
    columns = (
        "n",
        "k",
        "realizations",
        "oga_mean",
        "benchmark_mean",
        "oga_full_frac",
        "benchmark_full_frac",
        "coverable",
        "oga_mean_cov",
        "benchmark_mean_cov",
    )
    return columns, rows


def run_single_failure(config: ExperimentConfig) -> tuple[tuple, list[dict]]:
    results = _pmap(_worker_single_failure, _sweep_tasks(config), config.jobs)
    rows = []
    per = config.realizations
    for i, n in enumerate(config.sweep):
        chunk = results[i * per : (i + 1) * per]
        skipped = sum(c[0] for c in chunk)
        failures = sum(c[1] for c in chunk)
        total = sum(c[2] for c in chunk)
        lows = [c[3] for c in chunk if c[1]]
        highs = [c[4] for c in chunk if c[1]]
        zeros = sum(c[5] for c in chunk)
        violations = sum(c[6] for c in chunk)
        unclean = sum(c[7] for c in chunk)
        rows.append(
            {
                "n": n,
                "realizations": per,
                "skipped": skipped,
                "failures": failures,
                "unclean": unclean,
                "mean_diff": total / failures if failures else 0.0,
                "min_diff": min(lows) if lows else 0,
                "max_diff": max(highs) if highs else 0,
                "frac_zero": zeros / failures if failures else 0.0,
                "violations": violations,
            }
        )
    columns = (
        "n",
        "realizations",
        "skipped",
        "failures",
        "unclean",
        "mean_diff",
        "min_diff",
        "max_diff",
        "frac_zero",
        "violations",
    )
    return columns, rows


def run_multi_gap(config: ExperimentConfig) -> tuple[tuple, list[dict]]:
    spec_dict = config.deployment.to_dict()
    tasks = [
        (spec_dict, m, r, config.base_seed)
        for m in config.sweep
        for r in range(config.realizations)
    ]
    results = _pmap(_worker_multi_gap, tasks, config.jobs)
    rows = []
    per = config.realizations
    for i, m in enumerate(config.sweep):
        chunk = results[i * per : (i + 1) * per]
        resamples = sum(c[2] for c in chunk)
        unclean = sum(1 for c in chunk if not c[3])
        clean = [(c[0], c[1]) for c in chunk if c[3]]
        extras = [c[0] for c in clean]
        gaps = [c[1] for c in clean]
        bound = 2 * m - 1
        rows.append(
            {
                "m": m,
                "realizations": per,
                "resamples": resamples,
                "unclean": unclean,
                "mean_gaps": sum(gaps) / len(clean) if clean else 0.0,
                "mean_extra": sum(extras) / len(clean) if clean else 0.0,
                "min_extra": min(extras) if extras else 0,
                "max_extra": max(extras) if extras else 0,
                "violations": sum(1 for e in extras if e > bound),
            }
        )
    columns = (
        "m",
        "realizations",
        "resamples",
        "unclean",
        "mean_gaps",
        "mean_extra",
        "min_extra",
        "max_extra",
        "violations",
    )
    return columns, rows


_RUNNERS = {
    "coverage_curve": run_coverage_curve,
    "intersection_sweep": run_intersection_sweep,
    "k_barrier": run_k_barrier,
    "single_failure": run_single_failure,
    "multi_gap": run_multi_gap,
}


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    start = time.perf_counter()
    columns, rows = _RUNNERS[config.experiment](config)
    wall = time.perf_counter() - start
    metadata = {
        "package": "barriercover",
        "rng": RNG_ALGORITHM,
        "seed_scheme": "seed_sequence(base_seed, labels...)",
    }
    return ExperimentReport(
        config=config,
        columns=tuple(columns),
        records=tuple(rows),
        metadata=metadata,
        wall_time_s=wall,
    )


def default_config(
    experiment: str, *, base_seed: int = 0, jobs: int = 1
) -> ExperimentConfig:
    """The stock configuration for each experiment."""
    if experiment == "coverage_curve":
        return ExperimentConfig(
            experiment=experiment,
            deployment=DeploymentSpec(n=30, width=1000.0, radius=10.0, fov=90.0),
            sweep=(30, 300, 3000),
            realizations=1,
            base_seed=base_seed,
            jobs=jobs,
        )
    if experiment == "intersection_sweep":
        return ExperimentConfig(
            experiment=experiment,
            deployment=DeploymentSpec(n=30, width=1000.0, radius=10.0, fov=90.0),
            sweep=(30, 300, 3000),
            realizations=20,
            base_seed=base_seed,
            jobs=jobs,
        )
    if experiment == "k_barrier":
        return ExperimentConfig(
            experiment=experiment,
            deployment=DeploymentSpec(n=50, width=100.0, radius=10.0, fov=45.0),
            sweep=(50, 100, 200),
            realizations=20,
            base_seed=base_seed,
            k_values=(2, 4),
            jobs=jobs,
        )
    if experiment == "single_failure":
        return ExperimentConfig(
            experiment=experiment,
            deployment=DeploymentSpec(
                n=200, width=1000.0, kind="poisson", radius=10.0, fov=45.0
            ),
            sweep=tuple(range(200, 2001, 200)),
            realizations=1000,
            base_seed=base_seed,
            jobs=jobs,
        )
    if experiment == "multi_gap":
        return ExperimentConfig(
            experiment=experiment,
            deployment=DeploymentSpec(
                n=1000, width=100.0, kind="poisson", radius=2.0, fov=45.0
            ),
            sweep=(1, 2, 3, 4, 5, 6),
            realizations=200,
            base_seed=base_seed,
            jobs=jobs,
        )
    raise ParameterError(
        f"unknown experiment {experiment!r}; expected one of {', '.join(EXPERIMENTS)}"
    )
