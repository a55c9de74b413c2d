"""Kostant partition function and Kostant's multiplicity formula."""
from __future__ import annotations

import sys
import threading
from fractions import Fraction

import numpy as np

from .diagram import WeightDiagram
from .errors import MethodUnavailable, WeylGroupTooLarge
from .rootsys import RootSystem, Weight, check_dominant, dynkin_to_root, root_to_dynkin
from .weyl import WeylGroup, generate_weyl_group, weight_box


class PartitionMemo:
    """Memoized partition counts ``P_k(mu)``: ways to write ``mu`` with the first ``k`` roots.

    One memo serves every query on its root system. Lookups and inserts are
    serialized by a lock so a memo can be shared between threads.
    """

    def __init__(self, rs: RootSystem, roots=None):
        self.root_system = rs
        self.roots = tuple(tuple(r) for r in (roots if roots is not None else rs.positive_roots))
        self.table: dict[tuple[int, tuple[int, ...]], int] = {}
        self._lock = threading.RLock()

    def __len__(self):
        return len(self.table)

    def count(self, mu) -> int:
        mu = tuple(int(x) for x in mu)
        if any(x < 0 for x in mu):
            return 0
        with self._lock:
            depth = sum(mu) + len(self.roots) + 100
            if depth > sys.getrecursionlimit():
                sys.setrecursionlimit(depth)
            return self._count(len(self.roots), mu)

    def _count(self, k: int, mu: tuple[int, ...]) -> int:
        if k == 0:
            return 1 if not any(mu) else 0
        key = (k, mu)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        # P_k(mu) = sum_{c >= 0} P_{k-1}(mu - c alpha_k), folded as
        # P_k(mu) = P_{k-1}(mu) + P_k(mu - alpha_k)
        alpha = self.roots[k - 1]
        total = self._count(k - 1, mu)
        rest = tuple(m - a for m, a in zip(mu, alpha))
        if all(x >= 0 for x in rest):
            total += self._count(k, rest)
        self.table[key] = total
        return total


def partition_function(memo: PartitionMemo, mu: Weight | tuple) -> int:
    if isinstance(mu, Weight):
        mu = dynkin_to_root(memo.root_system, mu)
        if not mu.is_integral:
            return 0
        mu = mu.as_ints()
    return memo.count(mu)


class KostantEvaluator:
    """Kostant's alternating sum over the Weyl group for one highest weight.

    For each ``s`` the shift ``s(lam+rho) - (lam+rho)`` is an integer vector
    in simple-root coordinates (never positive), so the partition argument
    for the weight at depth ``d = lam - beta`` is ``shift_s + d``.
    """

    def __init__(self, rs: RootSystem, wg: WeylGroup, lam: Weight, memo: PartitionMemo | None = None):
        self.root_system = rs
        self.labels = check_dominant(rs, lam)
        self.memo = memo if memo is not None else PartitionMemo(rs)
        top = dynkin_to_root(rs, Weight.dynkin([x + 1 for x in self.labels])).coords
        n = rs.rank
        shifts = []
        for w in wg.elements:
            m = w.matrix
            shift = tuple(sum(int(m[i, j]) * top[j] for j in range(n)) - top[i] for i in range(n))
            assert all(isinstance(x, Fraction) and x.denominator == 1 for x in shift)
            shifts.append((w.sign, tuple(int(x) for x in shift)))
        self.shifts = shifts

    def at_depth(self, depth) -> int:
        total = 0
        for sign, shift in self.shifts:
            mu = tuple(s + d for s, d in zip(shift, depth))
            if any(x < 0 for x in mu):
                continue
            total += sign * self.memo.count(mu)
        if total < 0:
            raise ArithmeticError(f"negative Kostant sum {total} at depth {depth}")
        return total


def _require_group(rs: RootSystem, wg: WeylGroup | None) -> WeylGroup:
    if wg is not None:
        return wg
    try:
        return generate_weyl_group(rs)
    except WeylGroupTooLarge as exc:
        raise MethodUnavailable(f"Kostant method unavailable for {rs.algebra}: {exc}") from exc


def kostant_multiplicity(rs: RootSystem, wg: WeylGroup | None, lam: Weight, beta: Weight,
                         memo: PartitionMemo | None = None) -> int:
    wg = _require_group(rs, wg)
    labels = check_dominant(rs, lam)
    b = root_to_dynkin(rs, beta)
    depth = dynkin_to_root(rs, Weight.dynkin(labels) - b)
    if not depth.is_integral:
        return 0
    return KostantEvaluator(rs, wg, lam, memo).at_depth(depth.as_ints())


def _shifted(extent, shift):
    """Slices pairing ``dst[mu]`` with ``src[mu - shift]`` for a nonnegative ``shift``."""
    dst = tuple(slice(s, None) for s in shift)
    src = tuple(slice(0, e + 1 - s) for e, s in zip(extent, shift))
    return dst, src


def partition_table(rs: RootSystem, extent, dtype=np.int64) -> np.ndarray:
    """Dense table of ``P(mu)`` for all ``0 <= mu <= extent``.

    Folds in one root at a time: ``P_k(mu) = sum_c P_{k-1}(mu - c gamma_k)``.
    """
    extent = tuple(int(e) for e in extent)
    table = np.zeros(tuple(e + 1 for e in extent), dtype=dtype)
    table[(0,) * len(extent)] = 1
    for gamma in rs.positive_roots:
        prev = table.copy()
        c = 1
        while all(c * g <= e for g, e in zip(gamma, extent)):
            dst, src = _shifted(extent, tuple(c * g for g in gamma))
            table[dst] += prev[src]
            c += 1
    return table


def _exact_partition_table(rs: RootSystem, extent, headroom: int) -> np.ndarray:
    # float shadow run decides whether int64 is wide enough
    approx = partition_table(rs, extent, dtype=np.float64)
    if float(approx.max()) * headroom < 2.0**62:
        return partition_table(rs, extent)
    return partition_table(rs, extent, dtype=object)


def kostant_diagram(rs: RootSystem, wg: WeylGroup | None, lam: Weight,
                    memo: PartitionMemo | None = None) -> WeightDiagram:
    """Evaluate Kostant's formula at every offset of the weight box.

    Works on a dense partition table: for each Weyl element the term
    ``P(shift_s + d)`` is a shifted slice of the table, so the whole diagram
    is ``|W|`` array additions. ``memo`` is accepted for signature symmetry
    with :func:`kostant_multiplicity` and is not consulted.
    """
    wg = _require_group(rs, wg)
    ev = KostantEvaluator(rs, wg, lam, memo)
    delta = weight_box(rs, lam)
    table = _exact_partition_table(rs, delta, headroom=len(ev.shifts))
    depth_mult = np.zeros_like(table)
    for sign, shift in ev.shifts:
        neg = tuple(-x for x in shift)
        if any(x > e for x, e in zip(neg, delta)):
            continue
        dst, src = _shifted(delta, neg)
        if sign > 0:
            depth_mult[dst] += table[src]
        else:
            depth_mult[dst] -= table[src]
    if (depth_mult < 0).any():
        raise ArithmeticError("negative Kostant sum")
    entries = {}
    for d in zip(*np.nonzero(depth_mult)):
        entries[tuple(int(a - b) for a, b in zip(delta, d))] = int(depth_mult[d])
    return WeightDiagram(rs.algebra, ev.labels, delta, entries, method="kostant")
