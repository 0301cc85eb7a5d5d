"""Exact Haar measures of cylinder events for the shift space of f.

The configurations x: Z^d -> F_p satisfying sum_n c_{f,n} x(m+n) = 0 for
every m form a compact group X; cylinder events fix the values on a
finite window W.  Their Haar measure is always 0 or p^{-m}.

Two computation paths are provided and cross-checked:

* ``exact``  -- the measure-zero/p^{-m} split comes from the projection
  of X onto F_p^W, whose annihilator consists exactly of the window
  polynomials sum lambda_w u^w lying in the ideal <f>.  The projected
  dimension is therefore the rank of the window monomials' residues, a
  few small quotient-ring reductions.  Total and exact for any window.
* ``box``    -- the literal finite-window relaxation: solve the linear
  system on a surrounding box, project its kernel onto the window, and
  grow the box margin until the projected dimension stops dropping for
  two consecutive steps.  Dimensions are monotone non-increasing in the
  margin, so this stabilizes, but the stopping rule is a heuristic and
  the result carries the margin used and a ``stabilized`` flag.

``brute_force_measure`` enumerates every configuration on a small box
and serves as an independent oracle for both paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import gfp
from .budgets import cell_budget, enum_budget
from .errors import BudgetExceededError, InternalInconsistencyError, TrivialQuotientError
from .laurent import ExponentVec, LaurentPoly
from .quotient import monomial_residue

Box = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class CylinderSpec:
    """A finite window with a fixed F_p value at each of its points."""

    window: tuple[ExponentVec, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.window:
            raise ValueError("cylinder window must be non-empty")
        if len(set(self.window)) != len(self.window):
            raise ValueError("cylinder window has repeated points")
        if len(self.window) != len(self.values):
            raise ValueError("window and values have different lengths")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], int]]) -> "CylinderSpec":
        items = sorted((tuple(w), int(v)) for w, v in pairs)
        return cls(tuple(w for w, _ in items), tuple(v for _, v in items))

    def translated(self, shift: Sequence[int]) -> "CylinderSpec":
        return CylinderSpec.from_pairs(
            (tuple(a + b for a, b in zip(w, shift)), v)
            for w, v in zip(self.window, self.values)
        )


@dataclass(frozen=True)
class MeasureResult:
    """Exact measure: zero when ``exponent`` is None, else p^-exponent."""

    p: int
    exponent: int | None
    box_margin_used: int
    stabilized: bool
    method: str

    @property
    def value(self) -> Fraction:
        if self.exponent is None:
            return Fraction(0)
        return Fraction(1, self.p ** self.exponent)

    def value_json(self) -> dict:
        v = self.value
        return {"num": v.numerator, "den": v.denominator}


@dataclass
class SolutionSpace:
    box: tuple[tuple[int, int], ...]
    cells: list[ExponentVec]
    basis: np.ndarray  # one solution per row, entries in {0..p-1}
    dimension: int


def _check_modulus(f: LaurentPoly) -> None:
    if f.is_zero or f.is_monomial:
        raise TrivialQuotientError("shift space needs a non-monomial relation")


def _box_cells(box: Box, dim: int) -> list[ExponentVec]:
    if len(box) != dim:
        raise ValueError(f"box has {len(box)} axes, polynomial has {dim}")
    ranges = []
    for lo, hi in box:
        if lo > hi:
            raise ValueError(f"empty axis range ({lo}, {hi})")
        ranges.append(range(lo, hi + 1))
    cells: list[ExponentVec] = []

    def rec(prefix: tuple[int, ...], axis: int) -> None:
        if axis == dim:
            cells.append(prefix)
            return
        for x in ranges[axis]:
            rec(prefix + (x,), axis + 1)

    rec((), 0)
    return cells


def _constraint_matrix(f: LaurentPoly, box: Box, cells: list[ExponentVec]) -> np.ndarray:
    """One row per translate m with m + S(f) inside the box."""
    index = {c: i for i, c in enumerate(cells)}
    smin = f.min_exponents()
    smax = f.max_exponents()
    spans = []
    for axis, (lo, hi) in enumerate(box):
        spans.append(range(lo - smin[axis], hi - smax[axis] + 1))
    rows = []

    def rec(m: tuple[int, ...], axis: int) -> None:
        if axis == f.dim:
            row = np.zeros(len(cells), dtype=np.int64)
            for n, c in f.terms.items():
                row[index[tuple(a + b for a, b in zip(m, n))]] = c
            rows.append(row)
            return
        for x in spans[axis]:
            rec(m + (x,), axis + 1)

    rec((), 0)
    if not rows:
        return np.zeros((0, len(cells)), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def solution_space(f: LaurentPoly, box: Box) -> SolutionSpace:
    """Basis of the configurations on the box meeting every contained relation."""
    _check_modulus(f)
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    cells = _box_cells(box, f.dim)
    if len(cells) > cell_budget():
        raise BudgetExceededError(
            f"box has {len(cells)} cells, budget is {cell_budget()}"
        )
    matrix = _constraint_matrix(f, box, cells)
    basis = gfp.kernel_basis(matrix, f.p)
    return SolutionSpace(box, cells, basis, basis.shape[0])


def box_projected_dimension(
    f: LaurentPoly, window: Sequence[ExponentVec], box: Box
) -> tuple[int, np.ndarray]:
    """Projected dimension of the box solution space on the window.

    Also returns the restricted basis matrix (rows span the projection)
    so callers can run the membership test.
    """
    space = solution_space(f, box)
    index = {c: i for i, c in enumerate(space.cells)}
    try:
        cols = [index[tuple(w)] for w in window]
    except KeyError as exc:
        raise ValueError(f"window point {exc.args[0]} outside the box") from exc
    restricted = space.basis[:, cols]
    return gfp.rank(restricted, f.p), restricted


# -- exact (duality) path ----------------------------------------------------


def _window_residue_matrix(
    f: LaurentPoly, window: Sequence[ExponentVec]
) -> tuple[np.ndarray, int]:
    """Residues of the window monomials as F_p row vectors.

    The annihilator of the window projection of X is the null space of
    this matrix: lambda annihilates iff sum lambda_w u^w lies in <f>.
    A common monomial shift (a unit) clears negative exponents first.
    """
    window = [tuple(w) for w in window]
    shift = tuple(min(w[i] for w in window) for i in range(f.dim))
    residues = [
        monomial_residue(tuple(a - b for a, b in zip(w, shift)), f) for w in window
    ]
    monomials = sorted({e for r in residues for e in r.terms})
    index = {e: i for i, e in enumerate(monomials)}
    matrix = np.zeros((len(window), max(len(monomials), 1)), dtype=np.int64)
    for row, r in enumerate(residues):
        for e, c in r.terms.items():
            matrix[row, index[e]] = c
    return matrix, len(window)


def _exact_measure(f: LaurentPoly, cyl: CylinderSpec) -> MeasureResult:
    matrix, _ = _window_residue_matrix(f, cyl.window)
    p = f.p
    dim_proj = gfp.rank(matrix, p)
    # annihilating functionals: lambda with lambda^T . matrix = 0
    annihilator = gfp.kernel_basis(matrix.T, p)
    values = np.array([v % p for v in cyl.values], dtype=np.int64)
    consistent = not ((annihilator @ values) % p).any() if annihilator.size else True
    exponent = dim_proj if consistent else None
    return MeasureResult(p, exponent, 0, True, "exact")


# -- box (finite relaxation) path --------------------------------------------


def _box_measure(f: LaurentPoly, cyl: CylinderSpec, initial_margin: int | None) -> MeasureResult:
    p = f.p
    smin, smax = f.min_exponents(), f.max_exponents()
    diameter = max(b - a for a, b in zip(smin, smax))
    margin = max(1, diameter) if initial_margin is None else initial_margin
    wlo = [min(w[i] for w in cyl.window) for i in range(f.dim)]
    whi = [max(w[i] for w in cyl.window) for i in range(f.dim)]

    def box_at(m: int) -> Box:
        return tuple((lo - m, hi + m) for lo, hi in zip(wlo, whi))

    dims: list[int] = []
    restricted = None
    stable = 0
    m = margin
    while True:
        try:
            dim_proj, restricted_now = box_projected_dimension(f, cyl.window, box_at(m))
        except BudgetExceededError:
            if not dims:
                raise
            return _finish_box(f, cyl, dims[-1], restricted, m - 1, False)
        if dims:
            if dim_proj > dims[-1]:
                raise InternalInconsistencyError(
                    "projected dimension grew with the box margin"
                )
            stable = stable + 1 if dim_proj == dims[-1] else 0
        dims.append(dim_proj)
        restricted = restricted_now
        if stable >= 2:
            return _finish_box(f, cyl, dim_proj, restricted, m, True)
        m += 1


def _finish_box(f, cyl, dim_proj, restricted, margin, stabilized) -> MeasureResult:
    p = f.p
    values = np.array([v % p for v in cyl.values], dtype=np.int64)
    consistent = gfp.in_row_space(restricted, values, p)
    exponent = dim_proj if consistent else None
    return MeasureResult(p, exponent, margin, stabilized, "box")


# -- public operations --------------------------------------------------------


def cylinder_measure(
    f: LaurentPoly,
    cyl: CylinderSpec,
    method: str = "exact",
    initial_margin: int | None = None,
) -> MeasureResult:
    """Haar measure of the event {x restricted to the window = values}."""
    _check_modulus(f)
    for w in cyl.window:
        if len(w) != f.dim:
            raise ValueError(f"window point {w} has wrong dimension")
    if method == "exact":
        return _exact_measure(f, cyl)
    if method == "box":
        return _box_measure(f, cyl, initial_margin)
    raise ValueError(f"unknown method {method!r}")


def merge_events(events: Sequence[tuple[Sequence[int], CylinderSpec]]) -> CylinderSpec | None:
    """Union of shifted cylinders; None signals a conflicting overlap."""
    merged: dict[ExponentVec, int] = {}
    for shift, cyl in events:
        moved = cyl.translated(shift)
        for w, v in zip(moved.window, moved.values):
            if w in merged and merged[w] != v:
                return None
            merged[w] = v
    return CylinderSpec.from_pairs(merged.items())


def joint_measure(
    f: LaurentPoly,
    events: Sequence[tuple[Sequence[int], CylinderSpec]],
    method: str = "exact",
) -> MeasureResult:
    """Measure of the intersection of shifted cylinder events.

    The action convention is (alpha^n x)(m) = x(m+n), so the preimage of
    a cylinder on W under alpha^n is the cylinder on W + n with the same
    values.
    """
    _check_modulus(f)
    merged = merge_events(events)
    if merged is None:
        return MeasureResult(f.p, None, 0, True, "merge")
    return cylinder_measure(f, merged, method=method)


@dataclass(frozen=True)
class ExperimentRow:
    k: int
    available: bool
    joint: Fraction | None = None
    product: Fraction | None = None
    gap: Fraction | None = None


def mixing_experiment(
    f: LaurentPoly,
    shape_or_rule: Sequence[Sequence[int]] | Callable[[int], Sequence[Sequence[int]]],
    cylinders: Sequence[CylinderSpec],
    k_range: Iterable[int],
    method: str = "exact",
) -> list[ExperimentRow]:
    """Joint vs product measures along dilations of a shape (or a rule).

    Each row reports the joint measure of the cylinders shifted by
    k * shape (or by the rule's k-th tuple), the product of the single
    measures, and the gap between them.
    """
    rows: list[ExperimentRow] = []
    singles = [cylinder_measure(f, cyl, method=method).value for cyl in cylinders]
    for k in k_range:
        if callable(shape_or_rule):
            shifts = [tuple(v) for v in shape_or_rule(k)]
        else:
            shifts = [tuple(k * x for x in v) for v in shape_or_rule]
        if len(shifts) != len(cylinders):
            raise ValueError("one cylinder per shape point is required")
        try:
            joint = joint_measure(f, list(zip(shifts, cylinders)), method=method).value
        except BudgetExceededError:
            rows.append(ExperimentRow(k, False))
            continue
        product = Fraction(1)
        for s in singles:
            product *= s
        rows.append(ExperimentRow(k, True, joint, product, joint - product))
    return rows


# -- brute-force oracle --------------------------------------------------------


def brute_force_counts(
    f: LaurentPoly, cyl: CylinderSpec, box: Box
) -> tuple[int, int]:
    """(matching, total) configuration counts on the box, by enumeration.

    ``total`` counts configurations satisfying every fully contained
    relation; ``matching`` additionally requires the window assignment.
    Kept deliberately independent of the linear-algebra paths.
    """
    _check_modulus(f)
    p = f.p
    cells = _box_cells(tuple((int(a), int(b)) for a, b in box), f.dim)
    n_cells = len(cells)
    n_configs = p ** n_cells
    if n_configs > enum_budget():
        raise BudgetExceededError(
            f"{n_configs} configurations exceed the enumeration budget {enum_budget()}"
        )
    index = {c: i for i, c in enumerate(cells)}
    for w in cyl.window:
        if tuple(w) not in index:
            raise ValueError(f"window point {w} outside the box")
    matrix = _constraint_matrix(f, tuple(box), cells)
    wcols = np.array([index[tuple(w)] for w in cyl.window], dtype=np.int64)
    wvals = np.array([v % p for v in cyl.values], dtype=np.int64)

    powers = p ** np.arange(n_cells, dtype=np.int64)
    total = 0
    matching = 0
    chunk = 1 << 16
    for start in range(0, n_configs, chunk):
        idx = np.arange(start, min(start + chunk, n_configs), dtype=np.int64)
        digits = (idx[:, None] // powers) % p
        if matrix.size:
            ok = ((digits @ matrix.T) % p == 0).all(axis=1)
        else:
            ok = np.ones(len(idx), dtype=bool)
        total += int(ok.sum())
        match = ok & (digits[:, wcols] == wvals).all(axis=1)
        matching += int(match.sum())
    return matching, total


def brute_force_measure(f: LaurentPoly, cyl: CylinderSpec, box: Box) -> MeasureResult:
    """Conditional frequency of the assignment among box solutions.

    Solution sets are cosets of a subgroup, so the frequency is exactly
    0 or p^-m; anything else is an internal error.
    """
    matching, total = brute_force_counts(f, cyl, box)
    if matching == 0:
        return MeasureResult(f.p, None, 0, False, "brute-force")
    ratio = Fraction(matching, total)
    exponent = 0
    rest = ratio
    while rest < 1:
        rest *= f.p
        exponent += 1
    if rest != 1:
        raise InternalInconsistencyError(
            f"brute-force frequency {ratio} is not a power of 1/{f.p}"
        )
    return MeasureResult(f.p, exponent, 0, False, "brute-force")
