"""Canonical residues modulo a principal ideal <f> of F_p[u1^±1, ..., ud^±1].

Membership in the Laurent ideal <f> reduces to polynomial division: the
divisor is stripped to minimal exponents (monomials are units), after
which a single divisor is a Groebner basis of the polynomial ideal it
generates and that ideal is saturated with respect to every variable, so
the division remainder vanishes exactly on ideal members.

The dividend is only lifted out of negative exponents, never stripped
further.  This keeps ``reduce`` a genuine normal form on polynomials:
inputs that differ by a polynomial multiple of f have identical residue
values.  (A Laurent input is first multiplied by the smallest monomial
making it a polynomial; residues of inputs with negative exponents are
therefore canonical only up to that unit, while zero-ness never is.)

Term order: graded lexicographic, ties between monomials of equal total
degree broken lexicographically with the *last* variable most
significant.  Under this order the leading term of 1 + u1 + u2 is u2.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .errors import TrivialQuotientError
from .laurent import ExponentVec, LaurentPoly, _raw, frobenius_power

__all__ = [
    "Residue",
    "grlex_key",
    "leading_term",
    "normalize",
    "reduce",
    "is_zero_mod",
    "nf",
    "residue_mul",
    "monomial_residue",
    "power_residue",
    "frobenius_residue",
]


def grlex_key(e: ExponentVec):
    """Sort key: larger key means larger monomial."""
    return (sum(e), tuple(reversed(e)))


def leading_term(g: LaurentPoly) -> tuple[ExponentVec, int]:
    if g.is_zero:
        raise ValueError("zero polynomial has no leading term")
    e = max(g.terms, key=grlex_key)
    return e, g.terms[e]


def normalize(g: LaurentPoly) -> tuple[LaurentPoly, ExponentVec]:
    """Strip the largest monomial factor.

    Returns (u^{-shift} * g, shift) where shift is the componentwise
    minimum exponent, so the result has componentwise minimum 0.
    """
    if g.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    shift = g.min_exponents()
    neg = tuple(-s for s in shift)
    return g.shift(neg), shift


def _lift(g: LaurentPoly) -> tuple[LaurentPoly, ExponentVec]:
    # Clear negative exponents only; polynomials pass through unchanged.
    shift = tuple(min(0, m) for m in g.min_exponents())
    if any(shift):
        g = g.shift(tuple(-s for s in shift))
    return g, shift


def _divisible(e: ExponentVec, lt: ExponentVec) -> bool:
    return all(a >= b for a, b in zip(e, lt))


def _divide(work: dict[ExponentVec, int], fhat: LaurentPoly) -> dict[ExponentVec, int]:
    """Remainder of division by fhat (which must have min exponents 0).

    Processes the grlex-largest term each step; replacing a divisible
    term introduces only strictly smaller ones, so a lazy max-heap with
    stale entries is enough.
    """
    p = fhat.p
    lt_e, lt_c = leading_term(fhat)
    lt_inv = pow(lt_c, p - 2, p) if p > 2 else 1
    tail = [(e, c) for e, c in fhat.terms.items() if e != lt_e]

    def heapkey(e: ExponentVec):
        return (-sum(e), tuple(-x for x in reversed(e)))

    heap = [heapkey(e) for e in work]
    heapq.heapify(heap)
    remainder: dict[ExponentVec, int] = {}
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-x for x in reversed(key[1]))
        c = work.get(e)
        if c is None:
            continue  # stale entry
        del work[e]
        if _divisible(e, lt_e):
            q = (c * lt_inv) % p
            base = tuple(a - b for a, b in zip(e, lt_e))
            for fe, fc in tail:
                te = tuple(a + b for a, b in zip(base, fe))
                nc = (work.get(te, 0) - q * fc) % p
                if nc:
                    if te not in work:
                        heapq.heappush(heap, heapkey(te))
                    work[te] = nc
                else:
                    work.pop(te, None)
        else:
            remainder[e] = c
    return remainder


@dataclass(frozen=True)
class Residue:
    """Division remainder of a (lifted) element modulo f.

    ``shift`` records the monomial lift applied to the input: the residue
    represents u^{-shift} * g on the ideal coset.  Equality compares the
    remainder and modulus; the lift is bookkeeping.
    """

    value: LaurentPoly
    modulus: LaurentPoly
    shift: ExponentVec = dc_field(compare=False)

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero


def _checked_modulus(f: LaurentPoly) -> LaurentPoly:
    if f.is_zero or f.is_monomial:
        raise TrivialQuotientError(
            "modulus is zero or a monomial, quotient ring is trivial"
        )
    fhat, _ = normalize(f)
    return fhat


def reduce(g: LaurentPoly, f: LaurentPoly) -> Residue:
    """Canonical residue of g modulo the Laurent ideal <f>.

    The remainder has no term divisible by the leading term of the
    normalized modulus, and it is zero exactly when g lies in <f>.
    """
    g._check_compatible(f)
    fhat = _checked_modulus(f)
    if g.is_zero:
        return Residue(_raw(g.field, g.dim, {}), f, (0,) * g.dim)
    lifted, shift = _lift(g)
    remainder = _divide(dict(lifted.terms), fhat)
    return Residue(_raw(g.field, g.dim, remainder), f, shift)


def is_zero_mod(g: LaurentPoly, f: LaurentPoly) -> bool:
    """True exactly when g lies in the Laurent ideal <f>."""
    return reduce(g, f).is_zero


def nf(g: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
    """Shorthand for the remainder polynomial of reduce(g, f)."""
    return reduce(g, f).value


def residue_mul(a: LaurentPoly, b: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
    """Product in the quotient ring, reduced immediately."""
    return nf(a * b, f)


def power_residue(g: LaurentPoly, n: int, f: LaurentPoly) -> LaurentPoly:
    """Residue of g**n by square-and-multiply in the quotient ring.

    Required for exponents far beyond what term-by-term division could
    handle; each intermediate stays reduced.
    """
    if n < 0:
        raise ValueError("negative powers are not defined")
    from .laurent import one

    result = nf(one(g.field, g.dim), f)
    base = nf(g, f)
    while n:
        if n & 1:
            result = residue_mul(result, base, f)
        base = residue_mul(base, base, f)
        n >>= 1
    return result


def monomial_residue(exps: ExponentVec, f: LaurentPoly) -> LaurentPoly:
    """Residue of the monomial u^exps, all entries non-negative.

    Built axis by axis with binary powering so that dilated exponents
    like 2^12 cost a handful of quotient multiplications.
    """
    if any(e < 0 for e in exps):
        raise ValueError(f"exponents must be non-negative, got {exps}")
    from .laurent import monomial, one

    result = nf(one(f.field, f.dim), f)
    for axis, e in enumerate(exps):
        if e == 0:
            continue
        unit = [0] * f.dim
        unit[axis] = 1
        axis_pow = power_residue(monomial(f.field, f.dim, unit), e, f)
        result = residue_mul(result, axis_pow, f)
    return result


def frobenius_residue(g: LaurentPoly, k: int, f: LaurentPoly) -> LaurentPoly:
    """Residue of g**(p^k), via k reduce-then-Frobenius rounds.

    Valid because (a + qf)^p = a^p + (q^p f^{p-1}) f in characteristic p,
    so reducing between successive p-th powers never changes the coset.
    Each round is term surgery plus one division, which keeps certificate
    checks at k = 12 (exponents beyond 500000) cheap and exact.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    r = nf(g, f)
    for _ in range(k):
        r = nf(frobenius_power(r, 1), f)
    return r
