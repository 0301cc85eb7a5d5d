"""Mixing-order bounds, non-mixing-shape certificates, relation checks.

For an action defined by a non-monomial f with v Newton-polytope
vertices, the order of mixing M and the shape order S satisfy
v - 1 <= M <= S <= |S(f)| - 1; when the polytope is tight the two orders
agree.  The support itself is always a non-mixing shape: dilating by p^k
turns f into its p^k-th power, which still lies in <f>.  That identity is
machine-verified here per dilation, one monomial residue at a time, so a
certificate failure would expose an arithmetic bug rather than pass
silently.

Irreducibility of f is an assumption of the bounds and is *asserted by
the caller*, never verified; reports carry a warning to that effect.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .budgets import search_budget
from .errors import BudgetExceededError, InternalInconsistencyError
from .laurent import ExponentVec, LaurentPoly, frobenius_power, zero
from .polytope import LatticePolytope, hull
from .quotient import monomial_residue, nf, residue_mul
from .redraw import redraw_space, skeleton_from_polytope

IRREDUCIBILITY_WARNING = (
    "irreducibility of the input polynomial is asserted by the caller, not verified"
)


@dataclass(frozen=True)
class MixingBounds:
    vertex_count: int
    support_size: int
    lower: int
    upper: int
    polytope_tight: bool | None  # None = undetermined (affine dimension > 3)
    redraw_dimension: int | None
    conclusion: str


def mixing_bounds(f: LaurentPoly) -> tuple[MixingBounds, LatticePolytope]:
    """Mixing-order bounds and the tightness conclusion for f."""
    if len(f.terms) < 2:
        raise ValueError("bounds need a polynomial with at least two terms")
    poly = hull(f.support())
    v = poly.vertex_count
    size = len(f.terms)
    lower, upper = v - 1, size - 1
    if not 1 <= lower <= upper:
        raise InternalInconsistencyError("bounds violate 1 <= v-1 <= |S(f)|-1")

    tight: bool | None
    dim_redraw: int | None
    if poly.affine_dim <= 3:
        space = redraw_space(skeleton_from_polytope(poly))
        tight = space.tight
        dim_redraw = space.dimension
    else:
        tight = None
        dim_redraw = None

    if lower == upper:
        conclusion = f"M=S={lower}"
    elif tight:
        conclusion = f"M=S within [{lower},{upper}]"
    else:
        conclusion = f"M in [{lower},?], S in [?,{upper}]"
    return (
        MixingBounds(v, size, lower, upper, tight, dim_redraw, conclusion),
        poly,
    )


@dataclass(frozen=True)
class ShapeCertificate:
    """A shape with coefficients making the dilated relation vanish mod f.

    ``frobenius_family`` marks the support-of-f pattern, for which the
    relation holds for every dilation exponent; other search hits are
    candidates verified only at the listed dilations.
    """

    shape: tuple[ExponentVec, ...]
    coefficients: tuple
    verified_k: tuple[int, ...]
    frobenius_family: bool


def frobenius_certificate(f: LaurentPoly, k_max: int) -> ShapeCertificate:
    """Certificate that S(f) is a non-mixing shape, checked for k <= k_max.

    For each k the sum of coefficient-weighted residues of the dilated
    monomials u^(p^k n) is reduced modulo f and must vanish.  The
    residues are advanced one Frobenius round per k, so exponents of
    p^12 and beyond stay cheap.
    """
    if f.is_zero or f.is_monomial:
        raise ValueError("certificates need a non-monomial polynomial")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    shape = tuple(sorted(f.terms))
    coeffs = tuple(f.terms[n] for n in shape)
    base = tuple(min(n[i] for n in shape) for i in range(f.dim))
    residues = [
        monomial_residue(tuple(a - b for a, b in zip(n, base)), f) for n in shape
    ]
    verified = []
    for k in range(k_max + 1):
        if k > 0:
            residues = [nf(frobenius_power(r, 1), f) for r in residues]
        acc = zero(f.field, f.dim)
        for c, r in zip(coeffs, residues):
            acc = acc + r.scale(c)
        if not nf(acc, f).is_zero:
            raise InternalInconsistencyError(
                f"dilated support relation failed to vanish at k={k}"
            )
        verified.append(k)
    return ShapeCertificate(shape, coeffs, tuple(verified), True)


@dataclass(frozen=True)
class SequenceRelation:
    """Candidate relation sum_i a_i u^{n_i^{(j)}} = 0 mod f along tuples.

    ``tuples`` is either an explicit sequence of r-tuples of exponent
    vectors or a rule j -> r-tuple (e.g. Frobenius dilations of a shape).
    """

    coefficients: tuple[LaurentPoly, ...]
    tuples: Sequence[Sequence[ExponentVec]] | Callable[[int], Sequence[ExponentVec]]

    def tuple_at(self, j: int) -> tuple[ExponentVec, ...]:
        raw = self.tuples(j) if callable(self.tuples) else self.tuples[j]
        return tuple(tuple(v) for v in raw)

    def moving_apart(self, j_range: Iterable[int]) -> bool:
        """Are all pairwise separations non-decreasing and finally growing?

        A finite-range proxy for the requirement that every difference
        n_s - n_t escapes to infinity along the sequence: each pair's
        sup-norm separation must never shrink over the supplied range
        and must end strictly larger than it started (ranges of length
        one only require distinct points).
        """
        js = list(j_range)
        if not js:
            return True
        r = len(self.tuple_at(js[0]))
        pairs = [(s, t) for s in range(r) for t in range(s + 1, r)]
        for s, t in pairs:
            gaps = []
            for j in js:
                tup = self.tuple_at(j)
                gaps.append(max(abs(a - b) for a, b in zip(tup[s], tup[t])))
            if gaps[0] == 0:
                return False
            if any(b < a for a, b in zip(gaps, gaps[1:])):
                return False
            if len(gaps) > 1 and gaps[-1] <= gaps[0]:
                return False
        return True


def frobenius_rule(f: LaurentPoly) -> SequenceRelation:
    """The canonical relation: coefficients of f along k -> p^k * S(f)."""
    shape = sorted(f.terms)
    coeffs = tuple(
        LaurentPoly(f.field, f.dim, [((0,) * f.dim, f.terms[n])]) for n in shape
    )
    p = f.p

    def rule(k: int) -> tuple[ExponentVec, ...]:
        return tuple(tuple(p ** k * x for x in n) for n in shape)

    return SequenceRelation(coeffs, rule)


def relation_value(
    coefficients: Sequence[LaurentPoly],
    exponents: Sequence[ExponentVec],
    f: LaurentPoly,
) -> LaurentPoly:
    """Residue of sum_i a_i u^{n_i} modulo f.

    A common monomial shift (a unit, so zero-ness is preserved) clears
    negative exponents; each huge monomial then goes through binary
    powering in the quotient instead of term-by-term division.
    """
    if len(coefficients) != len(exponents):
        raise ValueError("one coefficient per exponent vector is required")
    mins = []
    for a, n in zip(coefficients, exponents):
        if a.is_zero:
            continue
        amin = a.min_exponents()
        mins.append(tuple(x + y for x, y in zip(amin, n)))
    if not mins:
        return zero(f.field, f.dim)
    shift = tuple(min(m[i] for m in mins) for i in range(f.dim))
    acc = zero(f.field, f.dim)
    for a, n in zip(coefficients, exponents):
        if a.is_zero:
            continue
        # a * u^(n - shift) = normalized(a) * u^(amin + n - shift), and the
        # common shift makes that exponent componentwise non-negative
        amin = a.min_exponents()
        base = nf(a.shift(tuple(-x for x in amin)), f)
        rest = tuple(mi + ni - si for mi, ni, si in zip(amin, n, shift))
        acc = acc + residue_mul(base, monomial_residue(rest, f), f)
    return nf(acc, f)


def check_relation(
    rel: SequenceRelation, f: LaurentPoly, j_range: Iterable[int]
) -> list[tuple[int, bool]]:
    """Evaluate the relation at each index; True means it vanishes mod f."""
    for a in rel.coefficients:
        a._check_compatible(f)
        if nf(a, f).is_zero:
            raise ValueError("relation coefficients must be nonzero modulo f")
    results = []
    for j in j_range:
        exps = rel.tuple_at(j)
        if len(exps) != len(rel.coefficients):
            raise ValueError(f"tuple at j={j} has wrong arity")
        for n in exps:
            if len(n) != f.dim:
                raise ValueError(f"exponent vector {n} has wrong dimension")
        results.append((j, relation_value(rel.coefficients, exps, f).is_zero))
    return results


def _canonical_shape(shape: Sequence[ExponentVec]) -> tuple[ExponentVec, ...]:
    pts = sorted(tuple(v) for v in shape)
    base = tuple(min(p[i] for p in pts) for i in range(len(pts[0])))
    return tuple(tuple(a - b for a, b in zip(p, base)) for p in pts)


def _coefficient_space(f: LaurentPoly, degree_bound: int) -> list[LaurentPoly]:
    """All nonzero polynomials with exponents in [0, degree_bound]^d."""
    monos = list(product(range(degree_bound + 1), repeat=f.dim))
    polys = []
    for coeffs in product(range(f.p), repeat=len(monos)):
        if any(coeffs):
            polys.append(LaurentPoly(f.field, f.dim, list(zip(monos, coeffs))))
    return polys


def search_relations(
    f: LaurentPoly,
    r: int,
    shape_radius: int,
    coeff_degree_bound: int = 0,
) -> list[ShapeCertificate]:
    """Bounded brute-force search for candidate non-mixing shapes.

    Enumerates r-point shapes inside [-radius, radius]^d up to
    translation, and coefficients up to the degree bound (the first
    coefficient is normalized so the grlex-leading coefficient is 1,
    since relations scale).  Each candidate must vanish modulo f at the
    dilations k in {1, p, p^2} -- a necessary-condition filter, so the
    output is labeled candidate unless it matches the support-of-f
    pattern.
    """
    if f.is_zero or f.is_monomial:
        raise ValueError("search needs a non-monomial polynomial")
    if r < 2:
        raise ValueError("shapes need at least two points")
    from math import comb

    n_points = (2 * shape_radius + 1) ** f.dim
    n_coeffs = f.p ** ((coeff_degree_bound + 1) ** f.dim) - 1
    n_candidates = comb(n_points, r) * n_coeffs ** r
    if n_candidates > search_budget():
        raise BudgetExceededError(
            f"{n_candidates} candidates exceed the search budget {search_budget()}"
        )
    points = sorted(product(range(-shape_radius, shape_radius + 1), repeat=f.dim))
    shapes = sorted({_canonical_shape(c) for c in combinations(points, r)})
    # coefficients vanishing in the quotient would make any relation vacuous
    coeff_pool = [
        a for a in _coefficient_space(f, coeff_degree_bound) if not nf(a, f).is_zero
    ]
    from .quotient import leading_term

    lead_one = [a for a in coeff_pool if leading_term(a)[1] == 1]
    ks = (1, f.p, f.p ** 2)
    canon_support = _canonical_shape(sorted(f.terms))
    found: list[ShapeCertificate] = []
    for shape in shapes:
        for first in lead_one:
            for rest in product(coeff_pool, repeat=r - 1):
                coeffs = (first, *rest)
                if all(
                    relation_value(
                        coeffs, tuple(tuple(k * x for x in n) for n in shape), f
                    ).is_zero
                    for k in ks
                ):
                    frob = _matches_support_pattern(f, shape, coeffs, canon_support)
                    out_coeffs = tuple(
                        c.terms[(0,) * f.dim]
                        if c.is_monomial and (0,) * f.dim in c.terms
                        else c
                        for c in coeffs
                    )
                    found.append(ShapeCertificate(shape, out_coeffs, ks, frob))
    return found


def _matches_support_pattern(
    f: LaurentPoly,
    shape: tuple[ExponentVec, ...],
    coeffs: tuple[LaurentPoly, ...],
    canon_support: tuple[ExponentVec, ...],
) -> bool:
    """Does (shape, coeffs) coincide with S(f) and a scaling of c_{f,n}?"""
    if shape != canon_support:
        return False
    zero_exp = (0,) * f.dim
    scalars = []
    for c in coeffs:
        if not (c.is_monomial and zero_exp in c.terms):
            return False
        scalars.append(c.terms[zero_exp])
    support_sorted = sorted(f.terms)
    f_scalars = [f.terms[n] for n in support_sorted]
    p = f.p
    ratio = scalars[0] * pow(f_scalars[0], p - 2, p) % p
    return all(
        (ratio * fc) % p == sc for fc, sc in zip(f_scalars, scalars)
    )
