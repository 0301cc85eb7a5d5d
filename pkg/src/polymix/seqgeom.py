"""Geometry of candidate non-mixing tuples.

Three tools: completion of a primitive outward normal to a unimodular
frame whose remaining columns point against it (the coordinate change
that turns an edge functional into a monomial grading), exact monomial
weights along a normal, and a detector that matches a tuple of lattice
points -- up to per-point integer perturbations bounded by K -- against
a parallel redrawing of the Newton polytope of f.

The detector is a verifier on given tuples: it reports the smallest
per-point bound K that works and, when the perturbed points are exactly
homothetic to the polytope, the rational scale and translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .lattice import complete_to_unimodular, int_det, is_primitive, primitive
from .laurent import LaurentPoly
from .polytope import hull

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class UnimodularFrame:
    """Columns v1, v2, ..., vd generating Z^d with v1 . vj < 0 for j >= 2."""

    columns: tuple[IntVec, ...]

    def __post_init__(self):
        d = len(self.columns)
        matrix = [[self.columns[j][i] for j in range(d)] for i in range(d)]
        if abs(int_det(matrix)) != 1:
            raise ValueError("frame is not unimodular")
        for col in self.columns:
            if not is_primitive(col):
                raise ValueError(f"column {col} is not primitive")
        v1 = self.columns[0]
        for col in self.columns[1:]:
            if sum(a * b for a, b in zip(v1, col)) >= 0:
                raise ValueError(f"column {col} does not point against {v1}")


def extend_basis(v1: Sequence[int]) -> UnimodularFrame:
    """Complete a primitive vector to a frame with all other columns against it.

    First extend v1 to a basis of Z^d, then subtract the minimal integer
    multiple of v1 from each remaining column to make its dot product
    with v1 negative; column operations keep the determinant at ±1.
    """
    v1 = tuple(int(x) for x in v1)
    if not is_primitive(v1):
        raise ValueError(f"{v1} is not primitive")
    m = complete_to_unimodular(v1)
    d = len(v1)
    norm_sq = sum(x * x for x in v1)
    cols = [tuple(m[i][j] for i in range(d)) for j in range(d)]
    adjusted = [v1]
    for col in cols[1:]:
        dot = sum(a * b for a, b in zip(v1, col))
        steps = dot // norm_sq + 1  # minimal integer making the dot negative
        adjusted.append(tuple(c - steps * v for c, v in zip(col, v1)))
    return UnimodularFrame(tuple(adjusted))


def monomial_weight(n: Sequence[int], v1: Sequence[int]) -> int:
    """Exact grading of the monomial u^n along the direction v1 (dot product)."""
    if len(n) != len(v1):
        raise ValueError("dimension mismatch")
    return sum(int(a) * int(b) for a, b in zip(n, v1))


@dataclass(frozen=True)
class RedrawMatch:
    """A tuple matched, within perturbations of sup-norm <= K, to N(f).

    ``vertex_assignment[i]`` is the tuple index paired with polytope
    vertex i; perturbations are indexed by tuple position (zero for
    unmatched extras); after adding them, each paired difference is an
    exact positive rational multiple of its polytope edge direction.
    """

    points: tuple[IntVec, ...]
    vertex_assignment: tuple[int, ...]
    pairing: tuple[tuple[tuple[int, int], tuple[int, int]], ...]  # (edge, point pair)
    perturbations: tuple[IntVec, ...]
    K: int
    homothety: tuple[Fraction, tuple[Fraction, ...]] | None
    tuple_index: int | None = None

    @property
    def snapped(self) -> tuple[IntVec, ...]:
        return tuple(
            tuple(a + b for a, b in zip(pt, d))
            for pt, d in zip(self.points, self.perturbations)
        )


def _positive_step(q_from: IntVec, pt: IntVec, dir0: IntVec, cap: int) -> list[int]:
    """Integer steps s >= 1 with q_from + s*dir0 - pt inside the sup-norm cap."""
    lo, hi = 1, None
    for a, p_i, d_i in zip(q_from, pt, dir0):
        if d_i == 0:
            if abs(a - p_i) > cap:
                return []
            continue
        # need -cap <= a + s*d - p <= cap
        low = p_i - a - cap
        high = p_i - a + cap
        if d_i > 0:
            s_lo = -((-low) // d_i)  # ceil(low / d)
            s_hi = high // d_i
        else:
            s_lo = -((-high) // d_i)
            s_hi = low // d_i
        lo = max(lo, s_lo)
        hi = s_hi if hi is None else min(hi, s_hi)
    if hi is None:
        # direction is zero; cannot happen for polytope edges
        return []
    return list(range(lo, hi + 1))


def _homothety_of(
    verts: list[IntVec], positions: list[IntVec]
) -> tuple[Fraction, tuple[Fraction, ...]] | None:
    """Scale and translation with positions = scale*verts + t, if they exist."""
    v0, q0 = verts[0], positions[0]
    scale: Fraction | None = None
    for v, q in zip(verts[1:], positions[1:]):
        dv = [a - b for a, b in zip(v, v0)]
        dq = [a - b for a, b in zip(q, q0)]
        for num, den in zip(dq, dv):
            if den != 0:
                candidate = Fraction(num, den)
                if scale is None:
                    scale = candidate
                elif scale != candidate:
                    return None
            elif num != 0:
                return None
    if scale is None or scale <= 0:
        return None
    t = tuple(Fraction(q) - scale * v for q, v in zip(q0, v0))
    for v, q in zip(verts, positions):
        if any(Fraction(qi) != scale * vi + ti for qi, vi, ti in zip(q, v, t)):
            return None
    return scale, t


def detect_redrawing(
    f: LaurentPoly,
    points: Sequence[Sequence[int]],
    tolerance_K: int,
) -> RedrawMatch | None:
    """Match a tuple of lattice points to a parallel redrawing of N(f).

    Walks the polytope's vertices breadth-first from a fixed root,
    assigning distinct tuple points and integer perturbations of
    sup-norm at most K so that every edge of N(f) is realized by a
    perturbed point pair parallel to it (positively oriented).  Caps are
    tried in increasing order, so the returned K is minimal; the search
    inside a cap is deterministic.
    """
    if tolerance_K < 0:
        raise ValueError("tolerance must be >= 0")
    poly = hull(f.support())
    if poly.affine_dim not in (2, 3):
        raise ValueError(
            f"detector needs a polytope of affine dimension 2 or 3, got {poly.affine_dim}"
        )
    pts = [tuple(int(x) for x in p) for p in points]
    verts = poly.vertices
    v = len(verts)
    if len(pts) < v:
        raise ValueError(f"tuple has {len(pts)} points, polytope has {v} vertices")

    adjacency: dict[int, list[int]] = {i: [] for i in range(v)}
    for a, b in poly.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    order = [0]
    parent: dict[int, int] = {}
    seen = {0}
    qpos = 0
    while qpos < len(order):
        cur = order[qpos]
        qpos += 1
        for nxt in sorted(adjacency[cur]):
            if nxt not in seen:
                seen.add(nxt)
                parent[nxt] = cur
                order.append(nxt)

    dirs = {
        (a, b): primitive(tuple(x - y for x, y in zip(verts[b], verts[a])))
        for a, b in poly.edges
    }
    dirs.update({(b, a): tuple(-x for x in w) for (a, b), w in list(dirs.items())})

    def box(cap: int):
        deltas = product(range(-cap, cap + 1), repeat=poly.dim)
        return sorted(deltas, key=lambda d: (max(abs(x) for x in d), d))

    def search(cap: int) -> tuple[list[int], list[IntVec]] | None:
        assigned: list[int | None] = [None] * v
        position: list[IntVec | None] = [None] * v
        used: set[int] = set()

        def ok_nontree(idx_v: int) -> bool:
            for a, b in poly.edges:
                if assigned[a] is None or assigned[b] is None:
                    continue
                if idx_v not in (a, b) or parent.get(b) == a or parent.get(a) == b:
                    continue
                diff = tuple(x - y for x, y in zip(position[b], position[a]))
                d0 = dirs[(a, b)]
                ratios = {x // y for x, y in zip(diff, d0) if y != 0}
                if any(x != 0 for x, y in zip(diff, d0) if y == 0):
                    return False
                if len(ratios) != 1:
                    return False
                s = ratios.pop()
                if s < 1 or tuple(s * y for y in d0) != diff:
                    return False
            return True

        def place(depth: int) -> bool:
            if depth == v:
                return True
            vx = order[depth]
            if depth == 0:
                for t in range(len(pts)):
                    for delta in box(cap):
                        assigned[vx] = t
                        position[vx] = tuple(a + b for a, b in zip(pts[t], delta))
                        used.add(t)
                        if place(depth + 1):
                            return True
                        used.discard(t)
                        assigned[vx] = None
                        position[vx] = None
                return False
            par = parent[vx]
            d0 = dirs[(par, vx)]
            qa = position[par]
            for t in range(len(pts)):
                if t in used:
                    continue
                # caps are tried in increasing order, so K stays minimal;
                # within a cap the smallest positive multiple wins
                for s in _positive_step(qa, pts[t], d0, cap):
                    assigned[vx] = t
                    position[vx] = tuple(a + s * b for a, b in zip(qa, d0))
                    if ok_nontree(vx):
                        used.add(t)
                        if place(depth + 1):
                            return True
                        used.discard(t)
                    assigned[vx] = None
                    position[vx] = None
            return False

        if place(0):
            return [int(x) for x in assigned], [tuple(p) for p in position]
        return None

    for cap in range(tolerance_K + 1):
        result = search(cap)
        if result is None:
            continue
        assignment, positions = result
        perturbations = [(0,) * poly.dim] * len(pts)
        for vx in range(v):
            t = assignment[vx]
            perturbations[t] = tuple(
                a - b for a, b in zip(positions[vx], pts[t])
            )
        k_used = max(
            (max(abs(x) for x in d) for d in perturbations), default=0
        )
        pairing = tuple(
            ((a, b), (assignment[a], assignment[b])) for a, b in poly.edges
        )
        homothety = _homothety_of(verts, positions)
        return RedrawMatch(
            tuple(pts),
            tuple(assignment),
            pairing,
            tuple(perturbations),
            k_used,
            homothety,
        )
    return None


@dataclass(frozen=True)
class SnappedShape:
    points: tuple[IntVec, ...]
    scale: Fraction
    translation: tuple[Fraction, ...]


def snap_to_homothety(match: RedrawMatch, f: LaurentPoly) -> SnappedShape:
    """Apply the match's perturbations and certify an exact homothety.

    Fails (with "redrawing, not homothety") when the snapped points form
    a genuine parallel redrawing that is not a dilation of N(f) -- which
    can only happen when the polytope is not tight.
    """
    poly = hull(f.support())
    positions = [match.snapped[t] for t in match.vertex_assignment]
    homothety = _homothety_of(poly.vertices, positions)
    if homothety is None:
        raise ValueError("redrawing, not homothety")
    scale, translation = homothety
    return SnappedShape(match.snapped, scale, translation)
