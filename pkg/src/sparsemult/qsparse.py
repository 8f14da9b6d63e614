"""Sparsest height-bounded multiple over Q, handling cyclotomic factors.

Cyclotomic factors admit dramatically sparser multiples than their degree
suggests (powers of x^L - 1), so the input is split into its cyclotomic and
cyclotomic-free parts.  The cyclotomic-free part is searched for a
floor(t/2)-sparse multiple, the whole input for a t-sparse multiple, and
the better combination wins.  The unconditional degree bound for the
search is doubly impractical for honest inputs, so callers may override it
explicitly; without an override, bounds beyond a configurable cap are
refused rather than silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

import mpmath

from .polys import (
    QQ,
    DensePoly,
    PolynomialError,
    SparsePoly,
    divides,
    sparse_height,
    sparse_primitive_positive,
)
from .qfactor import CyclotomicSplit, factor_q, split_cyclotomic
from .sparsebound import sparsest_bounded

#: Without an explicit override, refuse searches whose degree bound
#: exceeds this.
DEFAULT_BOUND_CAP = 10**4


class BoundRefusal(ValueError):
    """The unconditional degree bound is too large to search; pass an
    explicit override to proceed with a smaller, conditional bound."""


@dataclass(frozen=True)
class SparseMultipleResult:
    multiple: Optional[SparsePoly]
    bound_used: int
    bound_overridden: bool


def degree_bound(d: int, t: int, c: int) -> int:
    """ceil(2(t-1) * B * ln B) with B = d^2/2 * ln^3(3d) * ln(chat*(t-1)^d),
    chat = max(c, 35); interval arithmetic widened until the ceiling is
    unambiguous."""
    if d < 1 or t < 2 or c < 1:
        raise PolynomialError("need d >= 1, t >= 2, c >= 1")
    chat = max(c, 35)
    bits = 128
    while True:
        with mpmath.workprec(bits):
            B = (
                mpmath.mpf(d * d)
                / 2
                * mpmath.log(3 * d) ** 3
                * (mpmath.log(chat) + d * mpmath.log(t - 1) if t > 2 else mpmath.log(chat))
            )
            val = 2 * (t - 1) * B * mpmath.log(B)
            eps = mpmath.ldexp(1, max(int(mpmath.mag(val)), 0) - bits + 16)
            lo = mpmath.ceil(val - eps)
            hi = mpmath.ceil(val + eps)
        if lo == hi:
            return int(lo)
        bits *= 2


def cyclotomic_sparsest(split: CyclotomicSplit) -> SparsePoly:
    """(x^L - 1)^E for L the lcm of the cyclotomic indices and E the max
    multiplicity: a sparsest multiple of the cyclotomic part."""
    if not split.cyclo_indices:
        raise PolynomialError("no cyclotomic factors to cover")
    L = 1
    E = 0
    for idx, mult in split.cyclo_indices:
        L = lcm(L, idx)
        E = max(E, mult)
    # binomial expansion of (x^L - 1)^E: E+1 terms
    from math import comb

    terms = [
        (Fraction((-1) ** (E - k) * comb(E, k)), L * k) for k in range(E + 1)
    ]
    return SparsePoly.make(QQ, terms)


def max_multiplicity_bound_check(h: SparsePoly) -> int:
    """Max irreducible-factor multiplicity of a non-original h; by the
    multiplicity bound this is at most sparsity(h) - 1."""
    if h.is_zero or h.terms[0][1] != 0:
        raise PolynomialError("input must have nonzero constant term")
    fac = factor_q(h.to_dense())
    return max((m for _, m in fac.factors), default=0)


def sparsest_multiple_q(
    f: DensePoly,
    t: int,
    c: int,
    degree_cap_override: Optional[int] = None,
    bound_cap: int = DEFAULT_BOUND_CAP,
    engine: str = "oracle",
    seed: int = 0,
) -> SparseMultipleResult:
    """Sparsest multiple of f with sparsity <= t and height <= c.

    Returns a result record carrying the multiple (or None), the degree
    bound in force, and whether it was overridden.
    """
    if f.is_zero:
        raise PolynomialError("zero polynomial")
    if t < 2:
        raise PolynomialError("sparsity bound must be at least 2")
    split = split_cyclotomic(f)
    b = split.xpower
    fhat = f.strip_x()[1]
    d = fhat.degree

    overridden = degree_cap_override is not None
    n = degree_cap_override if overridden else 0

    def shifted(h: Optional[SparsePoly]) -> Optional[SparsePoly]:
        return h.shift_up(b) if h is not None else None

    if d == 0:
        # f is unit * x^b
        return SparseMultipleResult(
            shifted(SparsePoly.make(QQ, [(Fraction(1), 0)])), n, overridden
        )

    noncyclo = split.noncyclo
    purely_cyclotomic = noncyclo.degree <= 0

    if purely_cyclotomic:
        # closed form; no degree-bounded search needed
        h = cyclotomic_sparsest(split)
        if h.sparsity <= t and sparse_height(h) <= c:
            return SparseMultipleResult(shifted(h), n, overridden)
        return SparseMultipleResult(None, n, overridden)

    # repeated cyclotomic factors mixed with a noncyclotomic part fall
    # outside what the two-branch search can certify
    for idx, mult in split.cyclo_indices:
        if mult > 1:
            raise PolynomialError(
                f"repeated cyclotomic factor (index {idx}, multiplicity {mult})"
            )

    if not overridden:
        n = degree_bound(d, t, c)
        if n > bound_cap:
            raise BoundRefusal(
                f"degree bound {n} exceeds cap {bound_cap}; "
                "pass an explicit override to search a smaller range"
            )

    hhat = None
    if split.cyclo_indices and t // 2 >= 2:
        hhat = sparsest_bounded(noncyclo, t // 2, n, c, engine=engine, seed=seed)
    htil = sparsest_bounded(fhat, t, n, c, engine=engine, seed=seed)

    if hhat is None and htil is None:
        return SparseMultipleResult(None, n, overridden)
    if hhat is None or (htil is not None and htil.sparsity <= 2 * hhat.sparsity):
        return SparseMultipleResult(shifted(htil), n, overridden)
    # combine: hhat * (x^m - 1) covers the cyclotomic part too
    m = 1
    for idx, _ in split.cyclo_indices:
        m = lcm(m, idx)
    binom = SparsePoly.make(QQ, [(Fraction(-1), 0), (Fraction(1), m)])
    combined = sparse_primitive_positive(hhat * binom)
    if combined.is_zero or sparse_height(combined) > c or combined.sparsity > t:
        # term collisions or height growth spoiled the product; fall back
        if htil is not None:
            return SparseMultipleResult(shifted(htil), n, overridden)
        return SparseMultipleResult(None, n, overridden)
    if not divides(fhat, combined):
        raise PolynomialError("internal error: combined multiple fails division")
    return SparseMultipleResult(shifted(combined), n, overridden)
