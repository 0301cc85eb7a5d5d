"""Parallel redrawings of a polytope 1-skeleton and the tightness test.

A redrawing assigns new positions q_i to the skeleton's vertices so that
every edge stays parallel to the corresponding original edge.  These
constraints are linear: one cross-product scalar per edge in the plane,
the full (rank 2) cross product per edge in space.  The kernel always
contains the translations and the global scaling, so its dimension is at
least d+1; the skeleton is *tight* exactly when nothing else survives,
i.e. when the dimension equals d+1 and every redrawing is a homothety.

Two arithmetic paths: exact rational elimination whenever the positions
are integers/Fractions (the lattice-polytope pipeline), and an SVD rank
with a relative tolerance for irrational catalog solids such as the
icosahedron.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .polytope import LatticePolytope

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Skeleton:
    dim: int
    positions: tuple[tuple, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        if len(set(self.positions)) != len(self.positions):
            raise ValueError("repeated vertex positions")
        for p in self.positions:
            if len(p) != self.dim:
                raise ValueError(f"position {p} does not have dimension {self.dim}")
        n = len(self.positions)
        for s, t in self.edges:
            if s == t:
                raise ValueError(f"edge ({s},{t}) has equal endpoints")
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"edge ({s},{t}) references a missing vertex")
            if all(a == b for a, b in zip(self.positions[s], self.positions[t])):
                raise ValueError(f"edge ({s},{t}) has zero length")


def make_skeleton(dim: int, positions: Sequence[Sequence], edges: Sequence[Sequence[int]]) -> Skeleton:
    return Skeleton(
        dim,
        tuple(tuple(p) for p in positions),
        tuple((int(s), int(t)) for s, t in edges),
    )


def skeleton_from_polytope(poly: LatticePolytope, intrinsic: bool = True) -> Skeleton:
    """1-skeleton of a lattice polytope.

    With ``intrinsic`` the positions are the face-computation coordinates
    (dimension = affine dimension), which is what the tightness verdict
    of a possibly degenerate Newton polytope needs; tightness is invariant
    under the unimodular change of coordinates.
    """
    if poly.affine_dim < 1 or not poly.edges:
        raise ValueError("polytope has no edges; skeleton undefined")
    if poly.affine_dim > 3:
        raise ValueError("skeletons are only built for affine dimension <= 3")
    positions = poly.face_vertices if intrinsic else poly.vertices
    dim = len(positions[0])
    return make_skeleton(dim, positions, poly.edges)


@dataclass(frozen=True)
class RedrawSpace:
    dimension: int
    tight: bool
    arithmetic: str           # "exact" or "approximate"
    constraint_rank: int
    tolerance: float | None = None


def _is_exact(positions) -> bool:
    return all(isinstance(x, (int, Rational)) for p in positions for x in p)


def constraint_rows(skeleton: Skeleton) -> list[list]:
    """Rows of the parallelism system over the d*V position unknowns.

    Unknown layout: vertex v occupies columns v*d .. v*d+d-1.  For d = 1
    every redrawing is parallel, so there are no rows.
    """
    d = skeleton.dim
    n = len(skeleton.positions)
    rows: list[list] = []
    for s, t in skeleton.edges:
        e = [a - b for a, b in zip(skeleton.positions[t], skeleton.positions[s])]
        if d == 2:
            combos = [((0, e[1]), (1, -e[0]))]
        elif d == 3:
            combos = [
                ((1, e[2]), (2, -e[1])),
                ((2, e[0]), (0, -e[2])),
                ((0, e[1]), (1, -e[0])),
            ]
        else:
            combos = []
        for (c1, w1), (c2, w2) in combos:
            row = [0] * (n * d)
            row[t * d + c1] += w1
            row[t * d + c2] += w2
            row[s * d + c1] -= w1
            row[s * d + c2] -= w2
            rows.append(row)
    return rows


def _rank_exact(rows: list[list]) -> int:
    if not rows:
        return 0
    m = [[Fraction(x) for x in row] for row in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        scale = m[rank][col]
        m[rank] = [x / scale for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank_approx(rows: list[list], tolerance: float) -> int:
    if not rows:
        return 0
    mat = np.array([[float(x) for x in row] for row in rows], dtype=float)
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tolerance * sv[0]))


def redraw_space(skeleton: Skeleton, tolerance: float = DEFAULT_TOLERANCE) -> RedrawSpace:
    """Dimension of the space of parallel redrawings and the tightness verdict."""
    if not skeleton.edges:
        raise ValueError("skeleton has no edges")
    d = skeleton.dim
    rows = constraint_rows(skeleton)
    exact = _is_exact(skeleton.positions)
    if exact:
        rank = _rank_exact(rows)
        arithmetic = "exact"
        tol = None
    else:
        rank = _rank_approx(rows, tolerance)
        arithmetic = "approximate"
        tol = tolerance
    dimension = len(skeleton.positions) * d - rank
    if dimension < d + 1:
        raise AssertionError(
            f"redrawing space of dimension {dimension} < {d + 1}: "
            "translations and scaling must always survive"
        )
    return RedrawSpace(dimension, dimension == d + 1, arithmetic, rank, tol)


def is_tight(skeleton: Skeleton, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """True when every parallel redrawing is a homothety."""
    return redraw_space(skeleton, tolerance).tight
