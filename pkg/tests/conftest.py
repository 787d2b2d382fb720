"""Shared helpers: field builders, independent oracles, trace checks.

The oracles here are deliberately written as plain double loops without
bisection or bitmasks, so they share no code path with the package and
can certify it.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from barriercover.model import (
    Sensor,
    SensorField,
    TargetSet,
    discretize,
)


def make_field(pairs, domain=None):
    """Field of omni sensors whose projections are exactly the pairs.

    Use dyadic coordinates (integers, halves, quarters) so the midpoint
    and radius arithmetic stays exact in floating point.
    """
    pairs = list(pairs)
    sensors = [
        Sensor.omni(i, (u + v) / 2.0, 0.0, (v - u) / 2.0)
        for i, (u, v) in enumerate(pairs)
    ]
    if domain is None:
        domain = (min(u for u, _ in pairs), max(v for _, v in pairs))
    return SensorField.build(sensors, domain)


def multiplicity(intervals, x):
    return sum(1 for iv in intervals if iv.u <= x <= iv.v)


def covers_targets(intervals, xs, k=1):
    return all(multiplicity(intervals, x) >= k for x in xs)


def union_covers_domain(spans, domain, k=1):
    """Whether the closed spans cover every point of [a, b] at least k deep.

    Checks multiplicity at the midpoint of every elementary sub-interval;
    closed intervals make endpoint multiplicities at least as large as a
    neighbouring cell's, so midpoints decide.
    """
    a, b = domain
    cuts = {a, b}
    for u, v in spans:
        if a < u < b:
            cuts.add(u)
        if a < v < b:
            cuts.add(v)
    xs = sorted(cuts)
    for lo, hi in zip(xs, xs[1:]):
        mid = (lo + hi) / 2.0
        if sum(1 for u, v in spans if u <= mid <= v) < k:
            return False
    return True


def exhaustive_min_kcover(field, targets, k=1):
    """Smallest number of field sensors k-covering all targets, or None.

    Independent reference for the package oracle: size-ordered subset
    enumeration with per-target counting loops.
    """
    xs = list(targets)
    ivs = field.intervals
    for size in range(len(ivs) + 1):
        for combo in combinations(ivs, size):
            if covers_targets(combo, xs, k):
                return size
    return None


def selected_cover_sets(field, result, targets):
    """For each target, the set of selected sensor ids covering it."""
    spans = {}
    for sid in result.selected_ids:
        span = result.virtual_spans.get(sid)
        if span is None:
            span = field.span_of(sid)
        spans[sid] = span
    return [
        frozenset(sid for sid, (u, v) in spans.items() if u <= x <= v)
        for x in targets
    ]


def markov_equality_holds(cover_sets):
    """Selected sensors shared with the next target all cover this one.

    Checks |union(S_0..S_i) & S_{i+1}| == |S_i & S_{i+1}| at every i,
    which holds for interval sensors because covering anything left of
    target i and anything right of it forces covering i itself.
    """
    seen: set = set()
    for i in range(len(cover_sets) - 1):
        seen |= cover_sets[i]
        if len(seen & cover_sets[i + 1]) != len(cover_sets[i] & cover_sets[i + 1]):
            return False
    return True


def random_small_field(rng, n_max=12, width=30.0):
    """Small mixed omni/directional field for oracle-sized instances."""
    n = int(rng.integers(3, n_max + 1))
    sensors = []
    for i in range(n):
        x = float(rng.uniform(0.0, width))
        y = float(rng.uniform(-3.0, 3.0))
        r = float(rng.uniform(0.5, 6.0))
        if rng.uniform() < 0.5:
            sensors.append(Sensor.omni(i, x, y, r))
        else:
            sensors.append(
                Sensor.directional(
                    i,
                    x,
                    y,
                    r,
                    fov=float(rng.uniform(30.0, 360.0)),
                    direction=float(rng.uniform(0.0, 360.0)),
                )
            )
    return SensorField.build(sensors, (0.0, width))


def oracle_instance(seed, *, k=1, n_max=12, max_targets=20):
    """Seeded (field, targets) pair whose targets admit a full k-cover.

    Targets are the discretization midpoints with coverage multiplicity
    at least k; thin or unlucky draws are resampled with a salted seed.
    """
    for attempt in range(200):
        rng = np.random.default_rng([seed, attempt])
        field = random_small_field(rng, n_max=n_max)
        xs = [
            x
            for x in discretize(field)
            if multiplicity(field.intervals, x) >= k
        ]
        if 1 <= len(xs) <= max_targets:
            return field, TargetSet(tuple(xs))
    raise AssertionError(f"no feasible instance for seed {seed}")
