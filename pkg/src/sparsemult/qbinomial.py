"""Least-degree binomial multiple x^b(x^m - r^e) of a rational polynomial.

Per irreducible factor f_i, the least k with x^k mod f_i constant is found
by a linear scan up to a degree cap derived from the totient growth bound
(any k beyond d*(ceil(3d*lnln d)+7) is impossible, and small-degree edge
cases are covered by directly enumerating the n*t with n | d and
phi(t) | d).  Factors are then combined: the lcm of the per-factor degrees
works, possibly doubled when the constants' signs disagree; magnitudes must
match as real numbers, which is tested on prime-exponent vectors rather
than by expanding powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Optional, Tuple

import sympy
from sympy import totient

from .polys import (
    QQ,
    DensePoly,
    PolynomialError,
    PowerConstant,
    SparsePoly,
    divides,
)
from .qfactor import cyclotomic, factor_q, is_irreducible_q


@dataclass(frozen=True)
class BinomialMultiple:
    """x^xpower * (x^degree - constant), constant kept as a power form."""

    xpower: int
    degree: int
    constant: PowerConstant

    def to_sparse(self) -> SparsePoly:
        c = self.constant.evaluate()
        return SparsePoly.make(
            QQ, [(-c, self.xpower), (Fraction(1), self.xpower + self.degree)]
        )


def _ceil_3d_lnlnd(d: int) -> int:
    """ceil(3*d*ln(ln(d))) by interval arithmetic, widening until exact."""
    import mpmath

    bits = 128
    while True:
        with mpmath.workprec(bits):
            lo = mpmath.mpf(3 * d) * mpmath.log(mpmath.log(mpmath.mpf(d)))
            hi = mpmath.mpf(3 * d) * mpmath.log(mpmath.log(mpmath.mpf(d)))
            # widen by one ulp either way to get a rigorous bracket
            eps = mpmath.ldexp(1, int(mpmath.mag(lo)) - bits + 8)
            clo = mpmath.ceil(lo - eps)
            chi = mpmath.ceil(hi + eps)
        if clo == chi:
            return int(clo)
        bits *= 2


def risman_degree_cap(d: int) -> int:
    """Upper bound on the degree of a binomial multiple of an irreducible
    degree-d polynomial (with nonzero constant term)."""
    if d < 1:
        raise PolynomialError("degree must be positive")
    # direct term: max n*t over n | d and phi(t) | d; phi(t) >= sqrt(t/2)
    # bounds the t to scan
    best = 0
    for t in range(1, 2 * d * d + 2):
        if d % int(totient(t)) == 0:
            best = max(best, d * t)  # n = d is the best divisor
    if d >= 2:
        best = max(best, d * (_ceil_3d_lnlnd(d) + 7))
    return max(best, 2)


def min_binomial_irreducible(fi: DensePoly) -> Optional[Tuple[int, Fraction]]:
    """Least k with x^k mod fi a rational constant r; None if no such k
    exists up to the degree cap (and hence at all)."""
    if not is_irreducible_q(fi):
        raise PolynomialError("expected an irreducible polynomial")
    fi = fi.monic()
    if fi.coeffs[0] == 0:
        raise PolynomialError("constant term must be nonzero")
    d = fi.degree
    cap = risman_degree_cap(d)
    x = DensePoly.x(QQ)
    r = x.pow_mod(d, fi)
    for k in range(d, cap + 1):
        if r.degree <= 0:
            return k, r.coeff(0)
        r = (r * x).rem(fi)
    return None


def _abs_prime_exponents(r: Fraction) -> Dict[int, int]:
    """Prime-exponent vector of |r| (negative exponents for denominator)."""
    out: Dict[int, int] = {}
    for n, sign in ((abs(r.numerator), 1), (r.denominator, -1)):
        if n > 1:
            for p, e in sympy.factorint(n).items():
                out[p] = out.get(p, 0) + sign * e
    return {p: e for p, e in out.items() if e}


def binomial_multiple_q(f: DensePoly) -> Optional[BinomialMultiple]:
    """The least-degree binomial multiple of f over Q, or None."""
    if f.is_zero:
        raise PolynomialError("zero polynomial")
    fac = factor_q(f)
    b = fac.xpower
    if any(m > 1 for _, m in fac.factors):
        return None  # f/x^b not squarefree: no binomial multiple
    if not fac.factors:
        # f is unit * x^b; x^b*(x-1)... smallest binomial multiple of a unit
        return BinomialMultiple(b, 1, PowerConstant(Fraction(1), 1))
    per = []
    for g, _ in fac.factors:
        res = min_binomial_irreducible(g)
        if res is None:
            return None
        per.append(res)
    # pairwise magnitude compatibility: |r_i|^(m_j) == |r_j|^(m_i)
    vecs = [_abs_prime_exponents(r) for _, r in per]
    for i in range(len(per)):
        for j in range(i + 1, len(per)):
            mi, vi = per[i][0], vecs[i]
            mj, vj = per[j][0], vecs[j]
            keys = set(vi) | set(vj)
            if any(mj * vi.get(p, 0) != mi * vj.get(p, 0) for p in keys):
                return None
    m = 1
    for mi, _ in per:
        m = lcm(m, mi)
    signs = [(1 if r > 0 else -1) ** (m // mi) for mi, r in per]
    if len(set(signs)) > 1:
        m *= 2
    m1, r1 = per[0]
    result = BinomialMultiple(b, m, PowerConstant(r1, m // m1))
    # verify: x^b*(x^m - r1^(m/m1)) is a multiple of f
    if not divides(f.monic(), result.to_sparse()):
        raise PolynomialError("internal error: binomial verification failed")
    return result


def bigmul_family(d: int) -> DensePoly:
    """Stress-family input: f(x) = g(2x) with g the product of the first
    ceil(sqrt(2d)) prime-indexed cyclotomics; its least binomial multiple
    has degree exceeding exp(sqrt(deg f)) asymptotically."""
    if d < 4:
        raise PolynomialError("family defined for d >= 4")
    ell = 1
    while ell * ell < 2 * d:
        ell += 1
    g = DensePoly.one(QQ)
    p = 2
    for _ in range(ell):
        g = g * cyclotomic(p)
        p = sympy.nextprime(p)
    return g.compose_scaled(Fraction(2))
