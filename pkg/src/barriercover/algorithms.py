"""Frontier-advancing greedy selection and local gap mending.

The selectors here solve minimum-cardinality coverage of a line segment
(or of a finite target set on it) by projected sensor intervals:

* ``oga``: left-to-right greedy over discrete targets. At each step it
  considers the sensors covering the current (leftmost uncovered) target
  and picks the one covering the most targets to the right. For interval
  coverage this frontier rule is exact: it returns a minimum-cardinality
  cover.
* ``k_oga``: k rounds of the same rule over the targets still lacking
  coverage multiplicity, yielding a minimum-cardinality k-cover.
* ``oga_continuous``: the same frontier rule on the continuum, picking
  the candidate whose interval reaches furthest right.
* ``find_gaps`` / ``logm``: after some selected sensors fail, locate the
  uncovered stretches and mend each one locally with fresh sensors
  instead of re-running selection from scratch.

Fields with uncoverable stretches are handled by inserting virtual gap
sensors (``augment_with_gap_sensors``) so the main loops never stall; the
virtual ids are reported separately and a selection counts as fully
covered only when no virtual sensor was needed.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field as dc_field
from typing import Collection, Iterable, Mapping, Sequence

from .model import (
    Domain,
    ParameterError,
    ProjectedInterval,
    SensorField,
    TargetSet,
    complement_segments,
)


@dataclass(frozen=True)
class SelectionStep:
    """One greedy step: where the frontier was, who competed, who won.

    ``current_target`` and ``reach`` are target indices for the discrete
    selectors and x coordinates for the continuous ones. ``candidate_ids``
    is empty only when the step inserted a virtual gap sensor on the fly.
    """

    current_target: float
    candidate_ids: tuple[int, ...]
    chosen_id: int
    reach: float


@dataclass(frozen=True)
class SelectionResult:
    """Ordered selection with its trace and virtual-gap-sensor ledger."""

    selected_ids: tuple[int, ...]
    virtual_ids: tuple[int, ...] = ()
    virtual_spans: Mapping[int, tuple[float, float]] = dc_field(default_factory=dict)
    trace: tuple[SelectionStep, ...] = ()
    fully_covered: bool = True
    comparisons: int = 0

    def __post_init__(self) -> None:
        if len(set(self.selected_ids)) != len(self.selected_ids):
            raise ParameterError("selected_ids must not contain duplicates")
        if not set(self.virtual_ids) <= set(self.selected_ids):
            raise ParameterError("virtual_ids must be a subset of selected_ids")

    @property
    def count(self) -> int:
        return len(self.selected_ids)

    def to_dict(self) -> dict:
        return {
            "selected": list(self.selected_ids),
            "virtual": list(self.virtual_ids),
            "count": self.count,
            "fully_covered": self.fully_covered,
            "trace": [
                {
                    "current_target": s.current_target,
                    "candidate_ids": list(s.candidate_ids),
                    "chosen_id": s.chosen_id,
                    "reach": s.reach,
                }
                for s in self.trace
            ],
            "virtual_spans": {
                str(vid): list(span) for vid, span in self.virtual_spans.items()
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SelectionResult":
        trace = tuple(
            SelectionStep(
                current_target=s["current_target"],
                candidate_ids=tuple(s.get("candidate_ids", ())),
                chosen_id=s["chosen_id"],
                reach=s["reach"],
            )
            for s in data.get("trace", ())
        )
        return cls(
            selected_ids=tuple(data["selected"]),
            virtual_ids=tuple(data.get("virtual", ())),
            virtual_spans={
                int(k): (float(v[0]), float(v[1]))
                for k, v in data.get("virtual_spans", {}).items()
            },
            trace=trace,
            fully_covered=bool(data.get("fully_covered", True)),
        )


@dataclass(frozen=True)
class Gap:
    """A maximal uncovered stretch left behind by failed sensors."""

    u: float
    v: float
    failed_ids: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if not self.u < self.v:
            raise ParameterError(f"gap needs u < v, got [{self.u}, {self.v}]")


def augment_with_gap_sensors(
    field: SensorField, targets: TargetSet, k: int
) -> SensorField:
    """Add virtual sensors so every target can reach coverage multiplicity k.

    For each maximal run of consecutive targets whose coverage count is
    below k, as many virtual sensors as the worst deficiency in the run
    are added, each spanning exactly from the run's first target to its
    last. Fields that already admit a full k-cover come back unchanged.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    xs = targets.xs
    m = len(xs)
    if m == 0:
        return field
    cov = [0] * (m + 1)
    for iv in field.intervals:
        lo = bisect_left(xs, iv.u)
        hi = bisect_right(xs, iv.v)
        if lo < hi:
            cov[lo] += 1
            cov[hi] -= 1
    for i in range(1, m):
        cov[i] += cov[i - 1]
    spans: list[tuple[float, float]] = []
    i = 0
    while i < m:
        if cov[i] >= k:
            i += 1
            continue
        j = i
        worst = cov[i]
        while j + 1 < m and cov[j + 1] < k:
            j += 1
            worst = min(worst, cov[j])
        spans.extend([(xs[i], xs[j])] * (k - worst))
        i = j + 1
    augmented, _ = field.with_virtual(spans)
    return augmented


def _select_over_targets(
    intervals: Sequence[ProjectedInterval],
    xs: Sequence[float],
    need: Sequence[int],
    used: set[int],
    record_trace: bool,
) -> tuple[list[int], list[SelectionStep], int]:
    """One greedy pass covering the targets listed in ``need``.

    ``need`` holds sorted indices into ``xs``. Candidates at each step are
    the unused intervals covering the frontier target; the winner covers
    the most needed targets to the right, then the most needed targets in
    total, then has the lowest field index. Raises if a needed target is
    coverable by nothing, which augmentation rules out.
    """
    need_xs = [xs[i] for i in need]
    chosen_ids: list[int] = []
    steps: list[SelectionStep] = []
    comparisons = 0
    pos = 0
    ptr = 0
    active: list[int] = []
    n = len(intervals)
    while pos < len(need_xs):
        x = need_xs[pos]
        while ptr < n and intervals[ptr].u <= x:
            active.append(ptr)
            ptr += 1
        kept: list[int] = []
        best_key: tuple[int, int, int] | None = None
        best_idx = -1
        best_hi = -1
        for idx in active:
            iv = intervals[idx]
            if iv.v < x or iv.sensor_id in used:
                continue
            kept.append(idx)
            comparisons += 1
            hi = bisect_right(need_xs, iv.v)
            right = hi - pos
            total = hi - bisect_left(need_xs, iv.u)
            key = (right, total, -idx)
            if best_key is None or key > best_key:
                best_key = key
                best_idx = idx
                best_hi = hi
        active = kept
        if best_key is None:
            raise RuntimeError(
                f"no sensor covers target at x={x}; field was not augmented"
            )
        chosen = intervals[best_idx]
        if record_trace:
            steps.append(
                SelectionStep(
                    current_target=need[pos],
                    candidate_ids=tuple(
                        sorted(intervals[i].sensor_id for i in kept)
                    ),
                    chosen_id=chosen.sensor_id,
                    reach=need[best_hi - 1],
                )
            )
        chosen_ids.append(chosen.sensor_id)
        used.add(chosen.sensor_id)
        pos = best_hi
    return chosen_ids, steps, comparisons


def k_oga(
    field: SensorField,
    targets: TargetSet,
    k: int,
    *,
    record_trace: bool = True,
) -> SelectionResult:
    """Minimum-cardinality k-coverage of discrete targets.

    Runs k rounds of the frontier greedy. Round s covers the targets whose
    coverage multiplicity from all previous rounds is still below s, using
    only sensors not yet selected; overlap from earlier rounds counts, so
    later rounds can skip incidentally covered targets.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not isinstance(targets, TargetSet):
        targets = TargetSet(tuple(targets))
    if len(targets) == 0:
        raise ParameterError("targets must be non-empty")
    augmented = augment_with_gap_sensors(field, targets, k)
    virtual_all = {s.id: s.span for s in augmented.sensors if s.virtual}
    xs = targets.xs
    m = len(xs)
    cov = [0] * m
    used: set[int] = set()
    selected: list[int] = []
    steps: list[SelectionStep] = []
    comparisons = 0
    for s in range(1, k + 1):
        need = [i for i in range(m) if cov[i] < s]
        if not need:
            continue
        round_ids, round_steps, comps = _select_over_targets(
            augmented.intervals, xs, need, used, record_trace
        )
        comparisons += comps
        steps.extend(round_steps)
        selected.extend(round_ids)
        for sid in round_ids:
            u, v = augmented.span_of(sid)
            lo = bisect_left(xs, u)
            hi = bisect_right(xs, v)
            for i in range(lo, hi):
                cov[i] += 1
    virtual_sel = tuple(sid for sid in selected if sid in virtual_all)
    return SelectionResult(
        selected_ids=tuple(selected),
        virtual_ids=virtual_sel,
        virtual_spans={vid: virtual_all[vid] for vid in virtual_sel},
        trace=tuple(steps),
        fully_covered=not virtual_sel,
        comparisons=comparisons,
    )


def oga(
    field: SensorField,
    targets: TargetSet,
    *,
    record_trace: bool = True,
) -> SelectionResult:
    """Minimum-cardinality coverage of discrete targets (k_oga with k=1)."""
    return k_oga(field, targets, 1, record_trace=record_trace)


def oga_continuous(
    field: SensorField,
    domain: Domain,
    *,
    record_trace: bool = True,
) -> SelectionResult:
    """Minimum-cardinality coverage of the whole segment [a, b].

    Maintains the covered frontier f (initially a). Candidates are the
    intervals with u <= f < v; the winner has the largest v, then the
    largest interval, then the lowest field index. When no candidate
    exists, a virtual sensor is inserted spanning from f to the next point
    where some real interval resumes coverage with positive extent (or to
    b). Stops once f reaches b.
    """
    a, b = domain
    if not a < b:
        raise ParameterError(f"domain needs a < b, got [{a}, {b}]")
    intervals = field.intervals
    n = len(intervals)
    next_vid = field.max_id + 1
    selected: list[int] = []
    virtual_ids: list[int] = []
    virtual_spans: dict[int, tuple[float, float]] = {}
    steps: list[SelectionStep] = []
    comparisons = 0
    f = a
    ptr = 0
    active: list[int] = []
    while f < b:
        while ptr < n and intervals[ptr].u <= f:
            active.append(ptr)
            ptr += 1
        kept: list[int] = []
        best_key: tuple[float, float, int] | None = None
        best_idx = -1
        for idx in active:
            iv = intervals[idx]
            if iv.v <= f:
                continue
            kept.append(idx)
            comparisons += 1
            key = (iv.v, iv.v - iv.u, -idx)
            if best_key is None or key > best_key:
                best_key = key
                best_idx = idx
        active = kept
        if best_key is not None:
            chosen = intervals[best_idx]
            if record_trace:
                steps.append(
                    SelectionStep(
                        current_target=f,
                        candidate_ids=tuple(
                            sorted(intervals[i].sensor_id for i in kept)
                        ),
                        chosen_id=chosen.sensor_id,
                        reach=chosen.v,
                    )
                )
            selected.append(chosen.sensor_id)
            f = chosen.v
        else:
            # coverage resumes at the next interval with positive extent
            q = b
            p = ptr
            while p < n:
                iv = intervals[p]
                if iv.v > iv.u:
                    q = min(iv.u, b)
                    break
                p += 1
            vid = next_vid
            next_vid += 1
            selected.append(vid)
            virtual_ids.append(vid)
            virtual_spans[vid] = (f, q)
            if record_trace:
                steps.append(
                    SelectionStep(
                        current_target=f,
                        candidate_ids=(),
                        chosen_id=vid,
                        reach=q,
                    )
                )
            f = q
    return SelectionResult(
        selected_ids=tuple(selected),
        virtual_ids=tuple(virtual_ids),
        virtual_spans=virtual_spans,
        trace=tuple(steps),
        fully_covered=not virtual_ids,
        comparisons=comparisons,
    )


def _span_of_selected(
    previous: SelectionResult, field: SensorField, sensor_id: int
) -> tuple[float, float]:
    span = field.span_of(sensor_id)
    if span is None:
        span = previous.virtual_spans.get(sensor_id)
    if span is None:
        raise ParameterError(
            f"selected sensor {sensor_id} has no interval in the field "
            "or in the previous result's virtual ledger"
        )
    return span


def find_gaps(
    previous: SelectionResult,
    failed_ids: Collection[int],
    field: SensorField,
    domain: Domain,
) -> list[Gap]:
    """Maximal uncovered stretches after the given selected sensors fail.

    Residual coverage is the union over the surviving previously selected
    sensors (virtual ones keep covering the holes they stand for). Each
    gap records which failed sensors overlap it. Gaps come back sorted
    left to right; adjacent failures merge into one gap.
    """
    failed = set(failed_ids)
    selected = set(previous.selected_ids)
    if not failed <= selected:
        raise ParameterError(
            f"failed ids {sorted(failed - selected)} were never selected"
        )
    surviving = [
        _span_of_selected(previous, field, sid)
        for sid in previous.selected_ids
        if sid not in failed
    ]
    failed_spans = {
        sid: _span_of_selected(previous, field, sid) for sid in sorted(failed)
    }
    gaps = []
    for u, v in complement_segments(surviving, domain):
        touching = frozenset(
            sid for sid, (fu, fv) in failed_spans.items() if fu < v and fv > u
        )
        gaps.append(Gap(u, v, touching))
    return gaps


def logm(
    previous: SelectionResult,
    gaps: Sequence[Gap],
    field: SensorField,
    domain: Domain,
    failed_ids: Collection[int] | None = None,
    *,
    record_trace: bool = True,
) -> SelectionResult:
    """Local gap mending: keep the surviving selection, patch each gap.

    Adopts every surviving previously selected sensor, then walks the gaps
    left to right and runs the continuous frontier rule over the sensors
    not selected previously, from the gap's left edge until its right edge
    is covered. Virtual sensors are inserted only where no usable sensor
    exists. ``failed_ids`` defaults to the union of the gaps' failed sets;
    pass it explicitly when a failed sensor opened no gap at all.
    """
    a, b = domain
    if not a < b:
        raise ParameterError(f"domain needs a < b, got [{a}, {b}]")
    if failed_ids is None:
        failed = set().union(*(g.failed_ids for g in gaps)) if gaps else set()
    else:
        failed = set(failed_ids)
    previously = set(previous.selected_ids)
    if not failed <= previously:
        raise ParameterError(
            f"failed ids {sorted(failed - previously)} were never selected"
        )
    surviving = [sid for sid in previous.selected_ids if sid not in failed]
    selected: list[int] = list(surviving)
    selected_set = set(selected)
    virtual_ids = [sid for sid in surviving if sid in previous.virtual_ids]
    virtual_spans = {sid: previous.virtual_spans[sid] for sid in virtual_ids}
    steps: list[SelectionStep] = []
    comparisons = 0

    pool = [iv for iv in field.intervals if iv.sensor_id not in previously]
    pool_n = len(pool)
    pool_us = [iv.u for iv in pool]
    next_vid = max(field.max_id, max(previously, default=-1)) + 1

    for gap in sorted(gaps, key=lambda g: g.u):
        f = gap.u
        start = bisect_right(pool_us, f)
        active = [i for i in range(start) if pool[i].v > f]
        ptr = start
        while f < gap.v:
            while ptr < pool_n and pool[ptr].u <= f:
                active.append(ptr)
                ptr += 1
            kept: list[int] = []
            best_key: tuple[float, float, int] | None = None
            best_idx = -1
            for idx in active:
                iv = pool[idx]
                if iv.v <= f:
                    continue
                kept.append(idx)
                comparisons += 1
                key = (iv.v, iv.v - iv.u, -idx)
                if best_key is None or key > best_key:
                    best_key = key
                    best_idx = idx
            active = kept
            if best_key is not None:
                chosen = pool[best_idx]
                if record_trace:
                    steps.append(
                        SelectionStep(
                            current_target=f,
                            candidate_ids=tuple(
                                sorted(pool[i].sensor_id for i in kept)
                            ),
                            chosen_id=chosen.sensor_id,
                            reach=chosen.v,
                        )
                    )
                if chosen.sensor_id not in selected_set:
                    selected.append(chosen.sensor_id)
                    selected_set.add(chosen.sensor_id)
                f = chosen.v
            else:
                q = gap.v
                p = ptr
                while p < pool_n:
                    iv = pool[p]
                    if iv.v > iv.u:
                        q = min(iv.u, gap.v)
                        break
                    p += 1
                vid = next_vid
                next_vid += 1
                selected.append(vid)
                selected_set.add(vid)
                virtual_ids.append(vid)
                virtual_spans[vid] = (f, q)
                if record_trace:
                    steps.append(
                        SelectionStep(
                            current_target=f,
                            candidate_ids=(),
                            chosen_id=vid,
                            reach=q,
                        )
                    )
                f = q
    return SelectionResult(
        selected_ids=tuple(selected),
        virtual_ids=tuple(virtual_ids),
        virtual_spans=virtual_spans,
        trace=tuple(steps),
        fully_covered=not virtual_ids,
        comparisons=comparisons,
    )
