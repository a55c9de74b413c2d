"""Root-system data for the simple Lie algebras.

Conventions
-----------
``cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``.
With this choice the Dynkin labels of a weight ``x`` given in simple-root
coordinates are ``x @ cartan``, and the simple reflection ``s_i`` sends
``alpha_j`` to ``alpha_j - cartan[j][i] * alpha_i``.

Labelings follow Bourbaki except where the reference root tables
need another one:

* B2: alpha_1 long, alpha_2 short (alpha_1 + 2 alpha_2 is a root).
* G2: alpha_1 long, alpha_2 short (alpha_1 + 3 alpha_2 is a root).
* F4: alpha_1, alpha_2 short, alpha_3, alpha_4 long, so the highest root
  is (2, 4, 3, 2).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class AlgebraType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s not in "ABCDEFG" or len(s) != 1:
            raise ValidationError(f"unknown series {s!r}")
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"rank must be a positive integer, got {n!r}")
        if s in _FIXED_RANKS and n not in _FIXED_RANKS[s]:
            raise ValidationError(f"{s}{n} does not exist")
        if s in _MIN_RANK and n < _MIN_RANK[s]:
            raise ValidationError(f"{s}_n requires n >= {_MIN_RANK[s]}, got {n}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValidationError(f"cannot parse algebra type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


class Basis(enum.Enum):
    DYNKIN = "dynkin"
    ROOT = "root"


def _frac_tuple(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Weight:
    """A weight as a coordinate vector tagged with its basis."""

    coords: tuple[Fraction, ...]
    basis: Basis

    def __post_init__(self):
        object.__setattr__(self, "coords", _frac_tuple(self.coords))

    @classmethod
    def dynkin(cls, *labels) -> "Weight":
        if len(labels) == 1 and not isinstance(labels[0], (int, Fraction)):
            labels = tuple(labels[0])
        return cls(labels, Basis.DYNKIN)

    @classmethod
    def roots(cls, *coords) -> "Weight":
        if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
            coords = tuple(coords[0])
        return cls(coords, Basis.ROOT)

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.basis)

    def scale(self, c) -> "Weight":
        return Weight(tuple(c * a for a in self.coords), self.basis)

    def _check_compatible(self, other: "Weight"):
        if other.basis is not self.basis:
            raise ValidationError("cannot combine weights given in different bases")
        if len(other) != len(self):
            raise ValidationError("rank mismatch")

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValidationError(f"weight {self} is not integral")
        return tuple(int(c) for c in self.coords)

    def __str__(self):
        body = ",".join(str(c) for c in self.coords)
        return f"{self.basis.value}({body})"


def cartan_matrix(algebra: AlgebraType) -> np.ndarray:
    s, n = algebra.series, algebra.rank
    a = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, a_ij=-1, a_ji=-1):
        a[i, j] = a_ij
        a[j, i] = a_ji

    if s in "ABCD":
        chain = n - 1 if s == "D" else n
        for i in range(chain - 1):
            link(i, i + 1)
        if s == "B":
            link(n - 2, n - 1, -2, -1)  # alpha_n short
        elif s == "C":
            link(n - 2, n - 1, -1, -2)  # alpha_n long
        elif s == "D":
            link(n - 3, n - 1)
    elif s == "E":
        # Bourbaki: 1-3-4-5-...-n with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif s == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_2 short, alpha_3 long
        link(2, 3)
    elif s == "G":
        link(0, 1, -3, -1)  # alpha_1 long
    return a


def _symmetrizer(cartan: np.ndarray) -> tuple[Fraction, ...]:
    """Half squared lengths of the simple roots, shortest normalized to 1."""
    n = cartan.shape[0]
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i, j] != 0 and d[j] is None:
                # (alpha_i, alpha_j) = cartan[i][j] d_j = cartan[j][i] d_i
                d[j] = d[i] * int(cartan[j, i]) / int(cartan[i, j])
                stack.append(j)
    if any(x is None for x in d):
        raise ValidationError("Dynkin diagram is not connected")
    lo = min(d)
    return tuple(x / lo for x in d)


def _invert_rational(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _generate_positive_roots(cartan: np.ndarray) -> list[tuple[int, ...]]:
    n = cartan.shape[0]
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * int(cartan[j, i]) for j in range(n))
                if pairing >= 0:
                    continue
                image = tuple(b - pairing * (k == i) for k, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    rest = sorted(seen.difference(simple), key=lambda r: (sum(r), tuple(-x for x in r)))
    return simple + rest


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root data of one simple Lie algebra.

    ``positive_roots`` lists the simple roots first (as unit vectors), then
    the remaining positive roots by height, ties broken by decreasing
    lexicographic order.
    """

    algebra: AlgebraType
    cartan: np.ndarray
    positive_roots: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return self.algebra.rank

    @property
    def t(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> Weight:
        return Weight.dynkin([1] * self.rank)

    @cached_property
    def roots_array(self) -> np.ndarray:
        """Positive roots as a (t, n) integer array."""
        return np.array(self.positive_roots, dtype=np.int64)

    @cached_property
    def gram(self) -> np.ndarray:
        """Integer Gram matrix (alpha_i, alpha_j); short roots have length^2 2."""
        d = np.array([int(x) for x in self.symmetrizer], dtype=np.int64)
        return self.cartan * d[np.newaxis, :]

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert_rational(self.cartan.tolist())

    def root_norms(self) -> np.ndarray:
        """(gamma, gamma) for each positive root, as integers."""
        r = self.roots_array
        return np.einsum("ki,ij,kj->k", r, self.gram, r)

    def weight_root_pairings(self, labels: Sequence[int]) -> np.ndarray:
        """(mu, gamma) for every positive root gamma, mu given by Dynkin labels.

        Uses (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2, so the result
        is integral whenever the labels are.
        """
        d = np.array([int(x) for x in self.symmetrizer], dtype=np.int64)
        return self.roots_array @ (np.asarray(labels, dtype=np.int64) * d)

    def __repr__(self):
        return f"RootSystem({self.algebra}, t={self.t})"


_CACHE: dict[AlgebraType, RootSystem] = {}


def build_root_system(algebra: AlgebraType | str) -> RootSystem:
    if isinstance(algebra, str):
        algebra = AlgebraType.parse(algebra)
    rs = _CACHE.get(algebra)
    if rs is None:
        cartan = cartan_matrix(algebra)
        cartan.setflags(write=False)
        rs = RootSystem(
            algebra=algebra,
            cartan=cartan,
            positive_roots=tuple(_generate_positive_roots(cartan)),
            symmetrizer=_symmetrizer(cartan),
        )
        _CACHE[algebra] = rs
    return rs


def _check_rank(rs: RootSystem, w: Weight):
    if len(w) != rs.rank:
        raise ValidationError(f"weight {w} has {len(w)} coordinates, {rs.algebra} needs {rs.rank}")


def dynkin_to_root(rs: RootSystem, w: Weight) -> Weight:
    if w.basis is Basis.ROOT:
        return w
    _check_rank(rs, w)
    inv = rs.cartan_inverse
    n = rs.rank
    # x @ cartan = w  =>  x = w @ cartan^-1
    return Weight.roots(sum(w.coords[i] * inv[i][j] for i in range(n)) for j in range(n))


def root_to_dynkin(rs: RootSystem, w: Weight) -> Weight:
    if w.basis is Basis.DYNKIN:
        return w
    _check_rank(rs, w)
    n = rs.rank
    c = rs.cartan
    return Weight.dynkin(sum(w.coords[j] * int(c[j, i]) for j in range(n)) for i in range(n))


def inner_product(rs: RootSystem, x: Weight, y: Weight) -> Fraction:
    x = dynkin_to_root(rs, x)
    y = dynkin_to_root(rs, y)
    _check_rank(rs, x)
    _check_rank(rs, y)
    g = rs.gram
    n = rs.rank
    return sum((x.coords[i] * int(g[i, j]) * y.coords[j] for i in range(n) for j in range(n)),
               Fraction(0))


def check_dominant(rs: RootSystem, lam: Weight) -> tuple[int, ...]:
    """Return the Dynkin labels of ``lam`` as ints, or raise if not dominant integral."""
    lam = root_to_dynkin(rs, lam)
    _check_rank(rs, lam)
    if not lam.is_integral or any(c < 0 for c in lam.coords):
        raise ValidationError(f"highest weight must be dominant integral, got {lam}")
    return lam.as_ints()


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    labels = check_dominant(rs, lam)
    shifted = rs.weight_root_pairings([x + 1 for x in labels])
    base = rs.weight_root_pairings([1] * rs.rank)
    dim = Fraction(prod(int(x) for x in shifted), prod(int(x) for x in base))
    assert dim.denominator == 1
    return int(dim)
