"""Multiplicities as lattice-point counts in a polytope of root coefficients.

A point ``v`` of a polytope in ``Z^t`` stands for the combination
``sum_k v_k gamma_k`` of positive roots (simple roots first). For a highest
weight ``lam`` the multiplicity of ``lam - j`` is the number of member
points whose combination equals ``j``: the size of the fiber over ``j``.
Diagrams are then re-keyed by offset from the lowest weight.

Chamber polytopes are transcribed region by region: each region fixes
ranges for a prefix of the coordinates and carries a condition written as
a disjunction of conjunctions of linear inequalities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Protocol

import numpy as np

from .diagram import WeightDiagram
from .errors import NoChamberFormula, ValidationError
from .rootsys import RootSystem, Weight, check_dominant
from .weyl import weight_box

CHUNK_POINTS = 1 << 18


@dataclass(frozen=True)
class Inequality:
    """``sum_i coeffs[i] * v[i] <= bound``."""

    coeffs: tuple[int, ...]
    bound: int

    def holds(self, v) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, v)) <= self.bound

    def mask(self, pts: np.ndarray) -> np.ndarray:
        return pts @ np.asarray(self.coeffs, dtype=np.int64) <= self.bound

    def __str__(self):
        terms = [f"v{i + 1}" if c == 1 else f"{c}*v{i + 1}"
                 for i, c in enumerate(self.coeffs) if c]
        return f"{' + '.join(terms) or '0'} <= {self.bound}"


def sum_le(t: int, indices, bound: int) -> Inequality:
    """``v_a + v_b + ... <= bound`` with 1-based coordinate indices."""
    coeffs = [0] * t
    for i in indices:
        coeffs[i - 1] += 1
    return Inequality(tuple(coeffs), bound)


@dataclass(frozen=True)
class Region:
    box: tuple[tuple[int, int], ...]
    clauses: tuple[tuple[Inequality, ...], ...] = ((),)

    @property
    def is_empty(self) -> bool:
        return any(lo > hi for lo, hi in self.box)

    def in_box(self, v) -> bool:
        return all(lo <= x <= hi for (lo, hi), x in zip(self.box, v))

    def box_mask(self, pts: np.ndarray) -> np.ndarray:
        out = np.ones(len(pts), dtype=bool)
        for i, (lo, hi) in enumerate(self.box):
            out &= (pts[:, i] >= lo) & (pts[:, i] <= hi)
        return out

    def satisfied(self, v) -> bool:
        return any(all(q.holds(v) for q in clause) for clause in self.clauses)

    def condition_mask(self, pts: np.ndarray) -> np.ndarray:
        out = np.zeros(len(pts), dtype=bool)
        for clause in self.clauses:
            c = np.ones(len(pts), dtype=bool)
            for q in clause:
                c &= q.mask(pts)
            out |= c
        return out


class LatticeRegion(Protocol):
    t: int
    caps: tuple[int, ...]

    def contains(self, v) -> bool: ...

    def mask(self, pts: np.ndarray) -> np.ndarray: ...


def _in_caps(caps, v) -> bool:
    return len(v) == len(caps) and all(0 <= x <= c for x, c in zip(v, caps))


@dataclass(frozen=True)
class Polytope:
    t: int
    caps: tuple[int, ...]
    regions: tuple[Region, ...]
    provenance: str = ""

    def __post_init__(self):
        if len(self.caps) != self.t or any(c < 0 for c in self.caps):
            raise ValidationError("caps must be t nonnegative integers")
        object.__setattr__(self, "regions", tuple(r for r in self.regions if not r.is_empty))

    def contains(self, v) -> bool:
        v = tuple(v)
        if not _in_caps(self.caps, v):
            return False
        return any(r.in_box(v) and r.satisfied(v) for r in self.regions)

    def mask(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.int64)
        out = ((pts >= 0) & (pts <= np.asarray(self.caps))).all(axis=1)
        hit = np.zeros(len(pts), dtype=bool)
        for r in self.regions:
            sel = out & r.box_mask(pts)
            if sel.any():
                hit[sel] |= r.condition_mask(pts[sel])
        return hit

    def region_coverage(self) -> tuple[int, int]:
        """(uncovered, multiply covered) counts of prefix points of the cap box."""
        width = max((len(r.box) for r in self.regions), default=0)
        uncovered = doubled = 0
        for prefix in product(*(range(c + 1) for c in self.caps[:width])):
            k = sum(r.in_box(prefix) for r in self.regions)
            uncovered += k == 0
            doubled += k > 1
        return uncovered, doubled


@dataclass(frozen=True)
class PointSetPolytope:
    """A finite lattice set given by its points (what the fitter returns)."""

    t: int
    caps: tuple[int, ...]
    points: frozenset = field(default_factory=frozenset)
    provenance: str = "fit"

    def contains(self, v) -> bool:
        return tuple(v) in self.points

    def mask(self, pts: np.ndarray) -> np.ndarray:
        return np.fromiter((tuple(int(x) for x in p) in self.points for p in pts),
                           dtype=bool, count=len(pts))


def cap_box_size(poly: LatticeRegion) -> int:
    return int(np.prod([c + 1 for c in poly.caps], dtype=object))


def iter_member_chunks(poly: LatticeRegion, chunk: int = CHUNK_POINTS) -> Iterator[np.ndarray]:
    """Yield arrays of member points, scanning the cap box in slabs of at most ``chunk`` points."""
    if isinstance(poly, PointSetPolytope):
        pts = sorted(poly.points)
        for i in range(0, len(pts), chunk):
            yield np.array(pts[i:i + chunk], dtype=np.int64).reshape(-1, poly.t)
        return
    shape = [c + 1 for c in poly.caps]
    split = poly.t
    size = 1
    while split > 0 and size * shape[split - 1] <= chunk:
        split -= 1
        size *= shape[split]
    if split == poly.t:
        tail = np.zeros((1, 0), dtype=np.int64)
    else:
        tail = np.indices(shape[split:], dtype=np.int64).reshape(poly.t - split, -1).T
    for head in product(*(range(s) for s in shape[:split])):
        pts = np.empty((len(tail), poly.t), dtype=np.int64)
        pts[:, :split] = head
        pts[:, split:] = tail
        m = poly.mask(pts)
        if m.any():
            yield pts[m]


def lattice_point_count(poly: LatticeRegion) -> int:
    return sum(len(c) for c in iter_member_chunks(poly))


# --- polytope catalog -------------------------------------------------------

def bounding_box(rs: RootSystem, lam: Weight) -> tuple[int, ...]:
    p = check_dominant(rs, lam)
    m = max(p)
    return tuple(p) + (m,) * (rs.t - rs.rank)


def cube_polytope(rs: RootSystem, s: int) -> Polytope:
    if s < 0:
        raise ValidationError("cube side must be nonnegative")
    return Polytope(rs.t, (s,) * rs.t, (Region(()),), provenance=f"{rs.algebra}:equal")


@dataclass(frozen=True)
class ChamberId:
    algebra: str
    label: str

    def __str__(self):
        return f"{self.algebra}:{self.label}"


CHAMBERS: dict[str, tuple[str, ...]] = {
    "A2": ("p<=q", "q<=p"),
    "B2": ("p<=q", "q<p,2q>=p", "2q<p"),
    "G2": ("(0,q)", "(p,0)"),
}
EQUAL = "equal"


def _a2(p, q, label):
    t = 3
    caps = (p, q, max(p, q))
    if label == "p<=q":
        regions = [
            Region(((0, p), (0, p))),
            Region(((0, p), (p + 1, q)), ((sum_le(t, (1, 2, 3), p + q),),)),
        ]
    else:
        regions = [
            Region(((0, q), (0, q))),
            Region(((q + 1, p), (0, q)), ((sum_le(t, (1, 2, 3), p + q),),)),
        ]
    return caps, regions


def _b2(p, q, label):
    t = 4
    n = max(p, q)
    caps = (p, q, n, n)
    le = lambda idx, b: sum_le(t, idx, b)  # noqa: E731
    if label == "p<=q":
        regions = [
            Region(((0, p), (0, p)), ((le((2, 3, 4), p + q),), (le((3,), p),))),
            Region(((0, p), (p + 1, q)), ((le((2, 3, 4), p + q), le((1, 2, 3), p + q)),)),
        ]
    elif label == "q<p,2q>=p":
        regions = [
            Region(((0, q), (0, 2 * q - p))),
            Region(((0, q), (2 * q - p + 1, q)), ((le((2, 3, 4), p + q),), (le((1, 2, 3), 2 * q),))),
            Region(((q + 1, p), (0, q)), ((le((1, 2, 3), p + q),),)),
        ]
    else:
        regions = [
            Region(((0, q), (0, q)), ((le((2, 3, 4), p + q),), (le((3,), q),))),
            Region(((q + 1, p - q - 1), (0, q)),
                   ((le((2, 3, 4), p + q), le((1, 2, 3), p + q)), (le((3,), q),))),
            Region(((p - q, p), (0, q)), ((le((3,), q),),)),
        ]
    return caps, regions


def _g2(p, q, label):
    t = 6
    n = max(p, q)
    caps = (p, q, n, n, n, n)
    le = lambda idx, b: sum_le(t, idx, b)  # noqa: E731
    if label == "(0,q)":
        cond = (le((3, 4, 5, 6), q), le((2, 3, 4, 5), q))
    else:
        cond = (le((4, 5), p), le((1, 3), p), le((3, 4), p), le((4, 6), p))
    return caps, [Region((), (cond,))]


def chamber_of(rs: RootSystem, lam: Weight) -> ChamberId:
    labels = check_dominant(rs, lam)
    name = str(rs.algebra)
    if len(set(labels)) == 1:
        return ChamberId(name, EQUAL)
    if name == "A2":
        p, q = labels
        return ChamberId(name, "p<=q" if p < q else "q<=p")
    if name == "B2":
        p, q = labels
        if p < q:
            return ChamberId(name, "p<=q")
        return ChamberId(name, "q<p,2q>=p" if 2 * q >= p else "2q<p")
    if name == "G2":
        p, q = labels
        if p == 0:
            return ChamberId(name, "(0,q)")
        if q == 0:
            return ChamberId(name, "(p,0)")
    raise NoChamberFormula(
        f"no closed-form polytope known for {name} highest weight {labels}; "
        "use fit_polytope or another method")


def chamber_polytope(rs: RootSystem, lam: Weight, chamber: ChamberId | None = None) -> Polytope:
    """Polytope for ``lam`` from the catalog.

    ``chamber`` forces a particular formula (used to test that neighbouring
    chambers agree on their common border); by default it is dispatched from
    the labels, equal labels first.
    """
    labels = check_dominant(rs, lam)
    if chamber is None:
        chamber = chamber_of(rs, lam)
    if chamber.label == EQUAL:
        if len(set(labels)) != 1:
            raise ValidationError(f"{labels} does not have equal labels")
        return cube_polytope(rs, labels[0])
    builders = {"A2": _a2, "B2": _b2, "G2": _g2}
    if chamber.algebra != str(rs.algebra) or chamber.label not in CHAMBERS.get(chamber.algebra, ()):
        raise NoChamberFormula(f"unknown chamber {chamber}")
    p, q = labels
    caps, regions = builders[chamber.algebra](p, q, chamber.label)
    return Polytope(rs.t, caps, tuple(regions), provenance=str(chamber))


# --- counting ---------------------------------------------------------------

def local_partition_count(poly: LatticeRegion, rs: RootSystem, j) -> int:
    """Number of member points ``v`` with ``sum_k v_k gamma_k == j`` (pruned DFS).

    For a chamber polytope of ``lam`` this is the multiplicity of ``lam - j``.
    """
    j = tuple(int(x) for x in j)
    if len(j) != rs.rank:
        raise ValidationError("offset has the wrong number of coordinates")
    if any(x < 0 for x in j):
        return 0
    roots = rs.positive_roots
    caps = poly.caps
    t = rs.t
    n = rs.rank
    v = [0] * t
    count = 0

    def descend(k, partial):
        nonlocal count
        if k == t:
            if partial == j and poly.contains(v):
                count += 1
            return
        gamma = roots[k]
        cur = partial
        c = 0
        while c <= caps[k]:
            v[k] = c
            descend(k + 1, cur)
            c += 1
            cur = tuple(a + g for a, g in zip(cur, gamma))
            if any(cur[i] > j[i] for i in range(n)):
                break
        v[k] = 0

    descend(0, (0,) * n)
    return count


def fiber_counts(poly: LatticeRegion, rs: RootSystem, chunk: int = CHUNK_POINTS) -> np.ndarray:
    """Histogram of ``sum_k v_k gamma_k`` over all member points.

    The array covers every reachable sum (shape ``caps @ roots + 1``). Points
    are processed slab by slab and the per-slab counts summed, so the result
    does not depend on ``chunk``.
    """
    roots = rs.roots_array
    reach = np.asarray(poly.caps, dtype=np.int64) @ roots if poly.t else np.zeros(rs.rank, int)
    shape = tuple(int(r) + 1 for r in reach)
    counts = np.zeros(int(np.prod(shape)), dtype=np.int64)
    for pts in iter_member_chunks(poly, chunk):
        js = pts @ roots
        counts += np.bincount(np.ravel_multi_index(js.T, shape), minlength=counts.size)
    return counts.reshape(shape)


def polytope_diagram(rs: RootSystem, poly: LatticeRegion, lam: Weight,
                     chunk: int = CHUNK_POINTS) -> WeightDiagram:
    """Weight diagram of ``lam`` read off the fibers of ``poly``.

    The fiber over ``j`` gives the multiplicity of ``lam - j``, i.e. the
    entry at offset ``delta - j`` from the lowest weight. (The two readings
    coincide whenever ``w0 = -1``; for A2 only the depth reading matches the
    catalog formulas.) Sums that fall outside the weight box are kept, with
    offsets that have a negative coordinate, so that a bad polytope shows up
    as a divergence rather than being silently clipped.
    """
    labels = check_dominant(rs, lam)
    delta = weight_box(rs, lam)
    counts = fiber_counts(poly, rs, chunk)
    entries = {}
    for j in zip(*np.nonzero(counts)):
        entries[tuple(d - int(x) for d, x in zip(delta, j))] = int(counts[j])
    return WeightDiagram(rs.algebra, labels, delta, entries, method="polytope")


def diagram_from_polytope(rs: RootSystem, wg, lam: Weight, chunk: int = CHUNK_POINTS) -> WeightDiagram:
    """Full weight diagram in one pass over the chamber polytope of ``lam``.

    ``wg`` is accepted for interface symmetry with the other methods but not
    needed: the lowest weight is found by simple reflections.
    """
    return polytope_diagram(rs, chamber_polytope(rs, lam), lam, chunk)


# --- structural checks ------------------------------------------------------

def check_statement4(poly: LatticeRegion, rs: RootSystem, lam: Weight) -> bool:
    """Every point supported on the simple roots with ``v_i <= p_i`` is a member."""
    p = check_dominant(rs, lam)
    pts = np.array(list(product(*(range(x + 1) for x in p))), dtype=np.int64)
    full = np.zeros((len(pts), poly.t), dtype=np.int64)
    full[:, :rs.rank] = pts
    return bool(poly.mask(full).all())


def check_statement5(poly: LatticeRegion, rs: RootSystem, lam: Weight) -> bool:
    """``max(p) * e_i`` is a member for every non-simple coordinate ``i``."""
    m = max(check_dominant(rs, lam))
    for i in range(rs.rank, poly.t):
        v = [0] * poly.t
        v[i] = m
        if not poly.contains(v):
            return False
    return True


def membership_array(poly: LatticeRegion) -> np.ndarray:
    shape = tuple(c + 1 for c in poly.caps)
    arr = np.zeros(shape, dtype=bool)
    for pts in iter_member_chunks(poly):
        arr[tuple(pts.T)] = True
    return arr


def check_down_closed(poly: LatticeRegion) -> bool:
    """Members are closed under lowering any positive coordinate by one."""
    if isinstance(poly, PointSetPolytope):
        for v in poly.points:
            for i, x in enumerate(v):
                if x > 0 and v[:i] + (x - 1,) + v[i + 1:] not in poly.points:
                    return False
        return True
    arr = membership_array(poly)
    full = (slice(None),) * arr.ndim
    for axis in range(arr.ndim):
        upper = arr[full[:axis] + (slice(1, None),)]
        lower = arr[full[:axis] + (slice(None, -1),)]
        if (upper & ~lower).any():
            return False
    return True
