"""Weight multiplicities by Freudenthal's recursion.

Everything is done in integer arithmetic. A weight below the highest weight
``lam`` is written ``beta = lam - d`` with ``d`` a nonnegative integer
vector in simple-root coordinates ("depth"). Then

    (lam+rho, lam+rho) - (beta+rho, beta+rho) = 2 (lam+rho, d) - (d, d)
    (beta + k gamma, gamma) = (lam, gamma) - (d, gamma) + k (gamma, gamma)

and both right-hand sides are integers because (omega_i, alpha_j) is
``delta_ij (alpha_j, alpha_j) / 2``.
"""
from __future__ import annotations

import numpy as np

from .diagram import WeightDiagram
from .rootsys import (RootSystem, Weight, check_dominant, dynkin_to_root, root_to_dynkin,
                      weyl_dimension)
from .weyl import dominant_conjugate, offset_to_dynkin, weight_box

_INT64_SAFE = 2**62


def _depth_table(rs: RootSystem, labels: tuple[int, ...], extent: tuple[int, ...],
                 dimension_bound: int) -> np.ndarray:
    """Multiplicity of ``lam - d`` for every ``0 <= d <= extent``, shaped ``extent + 1``.

    Dependencies of depth ``d`` all lie at depth ``d - k gamma <= d``, so a
    sub-box is self-contained.
    """
    n = rs.rank
    shape = tuple(e + 1 for e in extent)
    size = int(np.prod(shape))
    pts = np.indices(shape).reshape(n, -1).T.astype(np.int64)
    level = pts.sum(axis=1)

    roots = rs.roots_array
    gram = rs.gram
    norms = rs.root_norms()
    lam_gamma = rs.weight_root_pairings(labels)
    d = np.array([int(x) for x in rs.symmetrizer], dtype=np.int64)
    lam_rho_alpha = (np.asarray(labels, dtype=np.int64) + 1) * d  # (lam+rho, alpha_i)
    d_gamma = pts @ (gram @ roots.T)  # (d, gamma), shape (size, t)
    denom = 2 * (pts @ lam_rho_alpha) - np.einsum("pi,ij,pj->p", pts, gram, pts)

    max_k = max(extent) if extent else 0
    coef_bound = int(np.abs(lam_gamma).max(initial=0)) + int(np.abs(d_gamma).max(initial=0)) \
        + max_k * int(norms.max(initial=0))
    exact = 2 * dimension_bound * coef_bound * rs.t * max(max_k, 1) < _INT64_SAFE
    mult = np.zeros(size, dtype=np.int64 if exact else object)

    order = np.argsort(level, kind="stable")
    bounds = np.searchsorted(level[order], np.arange(level.max() + 2 if size else 1))
    mult[0] = 1  # d = 0 is the highest weight
    for lev in range(1, len(bounds) - 1):
        idx = order[bounds[lev]:bounds[lev + 1]]
        if idx.size == 0:
            continue
        p = pts[idx]
        rhs = np.zeros(idx.size, dtype=mult.dtype)
        for g in range(rs.t):
            gamma = roots[g]
            base = lam_gamma[g] - d_gamma[idx, g]
            for k in range(1, lev // int(gamma.sum()) + 1):
                q = p - k * gamma
                ok = (q >= 0).all(axis=1)
                if not ok.any():
                    break
                src = np.ravel_multi_index(q[ok].T, shape)
                rhs[ok] += mult[src] * (base[ok] + k * norms[g])
        rhs *= 2
        den = denom[idx]
        if (rhs < 0).any():
            raise ArithmeticError("negative right-hand side in Freudenthal recursion")
        zero = den == 0
        # |beta+rho| = |lam+rho| with beta != lam only on the dot-orbit of lam,
        # which is never a weight.
        if (rhs[zero] != 0).any():
            raise ArithmeticError("nonzero numerator over zero denominator")
        safe = np.where(zero, 1, den)
        if (rhs % safe != 0).any():
            raise ArithmeticError("Freudenthal quotient is not an integer")
        mult[idx] = np.where(zero, 0, rhs // safe)
    return mult.reshape(shape)


def freudenthal_diagram(rs: RootSystem, lam: Weight) -> WeightDiagram:
    labels = check_dominant(rs, lam)
    delta = weight_box(rs, lam)
    table = _depth_table(rs, labels, delta, weyl_dimension(rs, lam))
    entries = {}
    for d in zip(*np.nonzero(table)):
        j = tuple(int(a - b) for a, b in zip(delta, d))
        entries[j] = int(table[d])
    return WeightDiagram(rs.algebra, labels, delta, entries, method="freudenthal")


def freudenthal_multiplicity(rs: RootSystem, lam: Weight, beta: Weight) -> int:
    """Multiplicity of a single weight ``beta``.

    ``beta`` is first moved to its dominant conjugate, then only the sub-box
    of depths below it is computed.
    """
    labels = check_dominant(rs, lam)
    b = root_to_dynkin(rs, beta)
    if not b.is_integral:
        return 0
    dom = dominant_conjugate(rs, b.as_ints())
    depth = dynkin_to_root(rs, Weight.dynkin(tuple(x - y for x, y in zip(labels, dom)))).coords
    if any(c.denominator != 1 or c < 0 for c in depth):
        return 0
    depth = tuple(int(c) for c in depth)
    table = _depth_table(rs, labels, depth, weyl_dimension(rs, lam))
    return int(table[depth])


def multiplicity_at_offset(rs: RootSystem, lam: Weight, offset) -> int:
    """Freudenthal multiplicity of the weight ``w0(lam) + sum offset_i alpha_i``."""
    return freudenthal_multiplicity(rs, lam, Weight.dynkin(offset_to_dynkin(rs, lam, offset)))

