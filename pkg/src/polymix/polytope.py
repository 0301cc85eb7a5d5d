"""Lattice polytopes from polynomial supports, with exact arithmetic.

Vertices are computed in any ambient dimension (convex-combination
membership is an exact rational LP); the full edge/facet structure is
available when the affine dimension is at most 3.  Supports whose affine
hull is lower-dimensional are mapped onto Z^k by a unimodular column
reduction, the faces are computed there, and results are reported in the
original coordinates (normals are pulled back through the same
transform).

No floating point appears anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InternalInconsistencyError
from .exactlp import in_convex_hull
from .lattice import apply_columns, column_reduce, combine_columns, primitive

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    vertex_indices: tuple[int, ...]
    inward_normal: IntVec  # in face-computation coordinates, primitive
    offset: int            # inward_normal . x == offset on the facet


@dataclass
class LatticePolytope:
    dim: int
    affine_dim: int
    vertices: list[IntVec]            # original coordinates
    edges: list[tuple[int, int]]      # index pairs into vertices (i < j)
    facets: list[Facet]               # populated only for affine_dim == 3
    face_vertices: list[IntVec]       # vertices in face-computation coordinates
    _proj_cols: list[list[int]] | None = field(default=None, repr=False)
    _base: IntVec | None = field(default=None, repr=False)
    _edge_facets: dict[tuple[int, int], tuple[int, int]] = field(
        default_factory=dict, repr=False
    )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)


def is_vertex(q: Sequence[int], points: Iterable[Sequence[int]]) -> bool:
    """Is q an extreme point of the set?  Requires q to be a member.

    Decided exactly: q is a vertex iff it is not a convex combination of
    the remaining points (a rational feasibility LP).
    """
    q = tuple(q)
    pts = {tuple(s) for s in points}
    if q not in pts:
        raise ValueError(f"{q} is not a member of the point set")
    return not in_convex_hull(q, sorted(pts - {q}))


def point_in_hull(q: Sequence[int], points: Iterable[Sequence[int]]) -> bool:
    """Exact containment of q in the convex hull of the points."""
    return in_convex_hull(tuple(q), sorted({tuple(s) for s in points}))


def _cross2(o: IntVec, a: IntVec, b: IntVec) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _chain_ccw(points: list[IntVec]) -> list[IntVec]:
    """Monotone chain; strict turns only, so collinear points are dropped.

    Returns the extreme points in counter-clockwise cycle order starting
    at the lexicographic minimum.
    """
    pts = sorted(points)
    lower: list[IntVec] = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[IntVec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _cross3(a: IntVec, b: IntVec) -> IntVec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b) -> IntVec:
    return tuple(x - y for x, y in zip(a, b))


def _facets_3d(verts: list[IntVec]) -> list[Facet]:
    """All supporting planes spanned by vertex triples, grouped by plane."""
    found: dict[tuple[IntVec, int], set[int]] = {}
    m = len(verts)
    for i, j, k in combinations(range(m), 3):
        n = _cross3(_sub(verts[j], verts[i]), _sub(verts[k], verts[i]))
        if n == (0, 0, 0):
            continue
        dots = [_dot(n, _sub(verts[t], verts[i])) for t in range(m)]
        if all(x >= 0 for x in dots):
            inward = n
        elif all(x <= 0 for x in dots):
            inward = tuple(-x for x in n)
        else:
            continue
        inward = primitive(inward)
        c = _dot(inward, verts[i])
        key = (inward, c)
        found.setdefault(key, set()).update(
            t for t in range(m) if _dot(inward, verts[t]) == c
        )
    facets = [
        Facet(tuple(sorted(members)), normal, off)
        for (normal, off), members in found.items()
    ]
    facets.sort(key=lambda f: (f.inward_normal, f.offset))
    return facets


def hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of a non-empty set of lattice points, exactly.

    Vertices are reported in the original coordinates in a deterministic
    order; edges (and facets in the 3-dimensional case) are index pairs
    (sets) into the vertex list.  For affine dimension >= 4 only the
    vertex set is produced.
    """
    pts = sorted({tuple(int(x) for x in s) for s in points})
    if not pts:
        raise ValueError("empty point set has no hull")
    dim = len(pts[0])
    if any(len(s) != dim for s in pts):
        raise ValueError("points have inconsistent dimensions")
    base = pts[0]
    diffs = [_sub(s, base) for s in pts]
    vcols, k = column_reduce(diffs, dim)

    if k == 0:
        return LatticePolytope(dim, 0, [base], [], [], [(0,) * dim])

    if k == dim:
        face_pts = pts
        proj_cols = None
    else:
        face_pts = [apply_columns(vcols, d, k) for d in diffs]
        proj_cols = vcols

    by_face = {fp: orig for fp, orig in zip(face_pts, pts)}

    if k == 1:
        order = sorted(face_pts)
        face_verts = [order[0], order[-1]]
        edges = [(0, 1)]
        facets: list[Facet] = []
    elif k == 2:
        face_verts = _chain_ccw(face_pts)
        v = len(face_verts)
        edges = sorted(tuple(sorted((i, (i + 1) % v))) for i in range(v))
        facets = []
    elif k == 3:
        face_verts = sorted(
            fp for fp in face_pts if not in_convex_hull(fp, [q for q in face_pts if q != fp])
        )
        facets = _facets_3d(face_verts)
        edge_map: dict[tuple[int, int], tuple[int, int]] = {}
        for fi, fj in combinations(range(len(facets)), 2):
            shared = set(facets[fi].vertex_indices) & set(facets[fj].vertex_indices)
            if len(shared) == 2:
                a, b = sorted(shared)
                edge_map[(a, b)] = (fi, fj)
        edges = sorted(edge_map)
        if len(face_verts) - len(edges) + len(facets) != 2:
            raise InternalInconsistencyError(
                "Euler check failed on 3-dimensional hull"
            )
    else:
        face_verts = sorted(
            fp for fp in face_pts if not in_convex_hull(fp, [q for q in face_pts if q != fp])
        )
        edges = []
        facets = []

    vertices = [by_face[fv] for fv in face_verts]
    poly = LatticePolytope(
        dim,
        k,
        vertices,
        list(edges),
        facets,
        list(face_verts),
        proj_cols,
        base if proj_cols is not None else None,
    )
    if k == 3:
        poly._edge_facets = edge_map
    return poly


def _pull_back(poly: LatticePolytope, w: IntVec) -> IntVec:
    """Lift a face-coordinate normal to the original coordinates.

    With V the unimodular column transform and pi(x) the first k entries
    of (x - base) @ V, the functional w . pi(x) equals W . (x - base) for
    W = V[:, :k] @ w; unimodularity keeps W primitive when w is.
    """
    if poly._proj_cols is None:
        return w
    lifted = combine_columns(poly._proj_cols, w, poly.dim)
    return primitive(lifted)


def outward_normal(poly: LatticePolytope, edge: Sequence[int]) -> IntVec:
    """Primitive integer vector orthogonal to the edge, pointing outward.

    The functional x -> x . w is maximized over the polytope exactly on
    the edge.  In the 3-dimensional case the representative is the
    primitive rescaling of the sum of the two adjacent facets' outward
    normals, a vector interior to the edge's normal cone.
    """
    if poly.affine_dim < 2:
        raise ValueError(f"degenerate polytope (affine dimension {poly.affine_dim})")
    if poly.affine_dim > 3:
        raise ValueError("edge normals are only available for affine dimension <= 3")
    key = tuple(sorted(edge))
    if key not in set(poly.edges):
        raise ValueError(f"{key} is not an edge of the polytope")
    i, j = key
    fv = poly.face_vertices

    if poly.affine_dim == 2:
        t = _sub(fv[j], fv[i])
        w = primitive((t[1], -t[0]))
        for m in range(len(fv)):
            s = _dot(w, _sub(fv[m], fv[i]))
            if s > 0:
                w = tuple(-x for x in w)
                break
            if s < 0:
                break
    else:
        fi, fj = poly._edge_facets[key]
        o1 = tuple(-x for x in poly.facets[fi].inward_normal)
        o2 = tuple(-x for x in poly.facets[fj].inward_normal)
        w = primitive(tuple(a + b for a, b in zip(o1, o2)))

    top = _dot(w, fv[i])
    for m, q in enumerate(fv):
        s = _dot(w, q)
        onedge = m in key
        if (onedge and s != top) or (not onedge and s >= top):
            raise InternalInconsistencyError("outward normal fails support check")
    return _pull_back(poly, w)
