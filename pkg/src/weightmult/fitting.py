"""Search for a down-closed lattice set whose fibers reproduce a weight diagram.

This is a research tool for highest weights with no catalog polytope. The
search visits the bounding-box points in increasing coordinate-sum order and
first tries to include each point (greedy), falling back to depth-first
backtracking within a node budget.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .diagram import WeightDiagram
from .polytope import PointSetPolytope, bounding_box
from .rootsys import RootSystem, Weight

DEFAULT_BUDGET = 200_000


@dataclass
class FitResult:
    success: bool
    polytope: PointSetPolytope | None
    nodes: int
    failed_fiber: tuple[int, ...] | None = None
    message: str = ""


def fit_polytope(oracle: WeightDiagram, rs: RootSystem, budget: int = DEFAULT_BUDGET) -> FitResult:
    lam = Weight.dynkin(oracle.highest)
    caps = bounding_box(rs, lam)
    delta = oracle.delta
    t = rs.t

    pts = sorted(product(*(range(c + 1) for c in caps)), key=lambda v: (sum(v), v))
    index = {v: i for i, v in enumerate(pts)}
    roots = rs.roots_array
    sums = np.asarray(pts, dtype=np.int64) @ roots
    # fiber key = offset from the lowest weight of the weight lam - sum
    fiber_keys = [tuple(int(d - x) for d, x in zip(delta, s)) for s in sums]
    fibers = {k: f for f, k in enumerate(dict.fromkeys(fiber_keys))}
    fiber_of = [fibers[k] for k in fiber_keys]
    quota = [0] * len(fibers)
    for k, f in fibers.items():
        quota[f] = oracle[k]
    remaining = [0] * len(fibers)
    for f in fiber_of:
        remaining[f] += 1

    missing = sorted(k for k, m in oracle.entries.items() if k not in fibers or m > remaining[fibers[k]])
    if missing:
        return FitResult(False, None, 0, missing[0],
                         f"fiber {missing[0]} needs more points than the bounding box offers")

    subs = []
    for v in pts:
        subs.append([index[v[:i] + (x - 1,) + v[i + 1:]] for i, x in enumerate(v) if x > 0])

    n = len(pts)
    count = [0] * len(fibers)
    chosen = [False] * n
    opt = [0] * (n + 1)
    nodes = 0
    deepest = 0
    i = 0

    def undo(k):
        f = fiber_of[k]
        remaining[f] += 1
        if chosen[k]:
            chosen[k] = False
            count[f] -= 1

    while True:
        if i == n:
            points = frozenset(v for v, c in zip(pts, chosen) if c)
            return FitResult(True, PointSetPolytope(t, caps, points, provenance=f"fit:{oracle.highest}"),
                             nodes)
        if nodes >= budget:
            stuck = pts[deepest] if deepest < n else pts[-1]
            key = fiber_keys[index[stuck]]
            return FitResult(False, None, nodes, key, f"node budget {budget} exhausted near fiber {key}")
        f = fiber_of[i]
        if opt[i] == 0:
            opt[i] = 1
            if count[f] < quota[f] and all(chosen[s] for s in subs[i]):
                chosen[i] = True
                count[f] += 1
                remaining[f] -= 1
                nodes += 1
                i += 1
                opt[i] = 0
                deepest = max(deepest, i)
                continue
        if opt[i] == 1:
            opt[i] = 2
            if count[f] + remaining[f] - 1 >= quota[f]:
                remaining[f] -= 1
                nodes += 1
                i += 1
                opt[i] = 0
                deepest = max(deepest, i)
                continue
        opt[i] = 0
        i -= 1
        if i < 0:
            key = fiber_keys[min(deepest, n - 1)]
            return FitResult(False, None, nodes, key, f"search exhausted; fiber {key} unsatisfiable")
        undo(i)
