"""Explicit enumeration of Weyl groups."""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .errors import ValidationError, WeylGroupTooLarge
from .rootsys import Basis, RootSystem, Weight, check_dominant, dynkin_to_root, root_to_dynkin

DEFAULT_CAP = 2_000_000
CAP_ENV_VAR = "WEIGHTMULT_WEYL_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise ValidationError(f"{CAP_ENV_VAR} must be positive")
    return cap


def classical_order(rs: RootSystem) -> int:
    s, n = rs.algebra.series, rs.rank
    if s == "A":
        return factorial(n + 1)
    if s in "BC":
        return 2**n * factorial(n)
    if s == "D":
        return 2 ** (n - 1) * factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(rs.algebra)]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element acting on simple-root coordinates (column vectors)."""

    word: tuple[int, ...]
    matrix: np.ndarray

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True, eq=False)
class WeylGroup:
    root_system: RootSystem
    elements: tuple[WeylElement, ...]
    longest: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest_element(self) -> WeylElement:
        return self.elements[self.longest]


def simple_reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    m = np.eye(rs.rank, dtype=np.int64)
    m[i, :] -= rs.cartan[:, i]
    return m


def generate_weyl_group(rs: RootSystem, cap: int | None = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Elements are deduplicated by matrix. Words come out reduced because BFS
    reaches each element first at its minimal length.
    """
    if cap is None:
        cap = default_cap()
    if cap <= 0:
        raise ValidationError("cap must be positive")
    expected = classical_order(rs)
    if expected > cap:
        raise WeylGroupTooLarge(cap, expected)

    n = rs.rank
    reflections = [simple_reflection_matrix(rs, i) for i in range(n)]
    ident = np.eye(n, dtype=np.int64)
    elements = [WeylElement((), ident)]
    seen = {ident.tobytes()}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(reflections):
                m = s @ w.matrix
                key = m.tobytes()
                if key in seen:
                    continue
                if len(elements) >= cap:
                    raise WeylGroupTooLarge(cap)
                seen.add(key)
                m.setflags(write=False)
                el = WeylElement((i,) + w.word, m)
                elements.append(el)
                nxt.append(el)
        frontier = nxt
    longest = max(range(len(elements)), key=lambda k: elements[k].length)
    return WeylGroup(rs, tuple(elements), longest)


def apply(rs: RootSystem, w: WeylElement, x: Weight) -> Weight:
    """Act with ``w`` on ``x``; the basis tag of ``x`` is preserved."""
    if len(x) != w.matrix.shape[0]:
        raise ValidationError("rank mismatch")
    xr = dynkin_to_root(rs, x)
    m = w.matrix
    n = len(xr)
    image = Weight.roots(sum(int(m[i, j]) * xr.coords[j] for j in range(n)) for i in range(n))
    return root_to_dynkin(rs, image) if x.basis is Basis.DYNKIN else image


def dominant_conjugate(rs: RootSystem, labels) -> tuple:
    """Reflect Dynkin labels into the dominant chamber (no group enumeration)."""
    lab = list(labels)
    c = rs.cartan
    n = rs.rank
    while True:
        i = next((k for k in range(n) if lab[k] < 0), None)
        if i is None:
            return tuple(lab)
        # s_i(mu) = mu - <mu, alpha_i^vee> alpha_i; Dynkin labels of alpha_i are row i
        a = lab[i]
        for k in range(n):
            lab[k] -= a * int(c[i, k])


def antidominant_conjugate(rs: RootSystem, labels) -> tuple:
    return tuple(-x for x in dominant_conjugate(rs, [-x for x in labels]))


def lowest_weight(rs: RootSystem, wg: WeylGroup | None, lam: Weight) -> Weight:
    """Image of the highest weight under the longest Weyl element, in Dynkin labels.

    Without a group the antidominant conjugate is computed by reflections,
    which is the same weight.
    """
    labels = check_dominant(rs, lam)
    if wg is None:
        return Weight.dynkin(antidominant_conjugate(rs, labels))
    return apply(rs, wg.longest_element, Weight.dynkin(labels))


def weight_box(rs: RootSystem, lam: Weight) -> tuple[int, ...]:
    """Simple-root coordinates of lambda - w0(lambda); always nonnegative integers."""
    labels = check_dominant(rs, lam)
    low = antidominant_conjugate(rs, labels)
    diff = dynkin_to_root(rs, Weight.dynkin(tuple(a - b for a, b in zip(labels, low))))
    out = diff.as_ints()
    assert all(x >= 0 for x in out)
    return out


def offset_to_dynkin(rs: RootSystem, lam: Weight, offset) -> tuple[Fraction, ...]:
    """Dynkin labels of w0(lambda) + sum_i offset_i alpha_i."""
    low = antidominant_conjugate(rs, check_dominant(rs, lam))
    c = rs.cartan
    n = rs.rank
    return tuple(Fraction(low[i] + sum(int(offset[j]) * int(c[j, i]) for j in range(n)))
                 for i in range(n))


def dynkin_to_offset(rs: RootSystem, lam: Weight, beta: Weight) -> tuple[Fraction, ...]:
    """Inverse of :func:`offset_to_dynkin`; may be non-integral."""
    low = antidominant_conjugate(rs, check_dominant(rs, lam))
    diff = root_to_dynkin(rs, beta) - Weight.dynkin(low)
    return dynkin_to_root(rs, diff).coords
