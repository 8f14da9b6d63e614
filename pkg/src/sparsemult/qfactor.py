"""Factorization over Q, cyclotomic construction and recognition.

Irreducible factorization of integer polynomials is delegated to sympy
(Zassenhaus-style); everything is converted back to exact Fraction
coefficients at the boundary.  Cyclotomic polynomials are built by the
classical recursive division of x^n - 1 by the Phi_d for proper divisors d,
and recognized by enumerating the finitely many n with phi(n) = deg g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy

from .polys import QQ, DensePoly, PolynomialError, primitive_parts


@dataclass(frozen=True)
class Factorization:
    """f = unit * x**xpower * prod(factor**mult); factors monic irreducible."""

    unit: Fraction
    xpower: int
    factors: Tuple[Tuple[DensePoly, int], ...]

    def reconstruct(self) -> DensePoly:
        out = DensePoly.constant(QQ, self.unit).shift_up(self.xpower)
        for g, m in self.factors:
            for _ in range(m):
                out = out * g
        return out


@dataclass(frozen=True)
class CyclotomicSplit:
    """f = x**xpower * prod(Phi_n**e for n, e in cyclo_indices) * noncyclo."""

    cyclo_indices: Tuple[Tuple[int, int], ...]
    noncyclo: DensePoly
    xpower: int


_x = sympy.Symbol("x")


def _to_sympy(f: DensePoly):
    return sympy.Poly([sympy.Rational(c) for c in reversed(f.coeffs)], _x, domain="QQ")


def _from_sympy(p) -> DensePoly:
    return DensePoly(QQ, [Fraction(c.p, c.q) for c in reversed(p.all_coeffs())])


def factor_q(f: DensePoly) -> Factorization:
    """Complete factorization of a nonzero f in Q[x] into monic irreducibles."""
    if f.ring is not QQ:
        raise PolynomialError("factor_q operates over Q")
    if f.is_zero:
        raise PolynomialError("cannot factor the zero polynomial")
    b, fhat = f.strip_x()
    if fhat.degree == 0:
        return Factorization(fhat.coeffs[0], b, ())
    content, primparts = sympy.factor_list(_to_sympy(fhat))
    unit = Fraction(sympy.Rational(content).p, sympy.Rational(content).q)
    factors: List[Tuple[DensePoly, int]] = []
    for p, m in primparts:
        g = _from_sympy(sympy.Poly(p, _x, domain="QQ"))
        lc = g.lc
        unit *= lc ** m
        factors.append((g.monic(), int(m)))
    factors.sort(key=lambda gm: (gm[0].degree, [(c.numerator, c.denominator) for c in gm[0].coeffs]))
    return Factorization(unit, b, tuple(factors))


def is_irreducible_q(f: DensePoly) -> bool:
    if f.is_zero or f.degree < 1:
        return False
    fac = factor_q(f)
    return fac.xpower == 0 and len(fac.factors) == 1 and fac.factors[0][1] == 1 or (
        fac.xpower == 1 and not fac.factors and f.degree == 1
    )


_cyclo_cache = {}


def cyclotomic(n: int) -> DensePoly:
    """The n-th cyclotomic polynomial, by recursive division of x^n - 1."""
    if n < 1:
        raise PolynomialError("cyclotomic index must be positive")
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = DensePoly.x_power(QQ, n) - DensePoly.one(QQ)
    for d in range(1, n):
        if n % d == 0:
            num = num.exact_div(cyclotomic(d))
    _cyclo_cache[n] = num
    return num


def cyclotomic_index(g: DensePoly) -> Optional[int]:
    """Return n with g = Phi_n, or None.

    Candidates are the n with phi(n) = deg g; since phi(n) >= sqrt(n/2),
    it suffices to scan n <= 2*k**2 + 1.
    """
    if g.is_zero or g.degree < 1:
        raise PolynomialError("cyclotomic recognition needs degree >= 1")
    if not is_irreducible_q(g):
        raise PolynomialError("cyclotomic recognition expects an irreducible input")
    k = g.degree
    gm = g.monic()
    for n in range(1, 2 * k * k + 2):
        if sympy.totient(n) == k and cyclotomic(n) == gm:
            return n
    return None


def split_cyclotomic(f: DensePoly) -> CyclotomicSplit:
    """Split f = x^b * (cyclotomic part) * f_D with f_D cyclotomic-free."""
    fac = factor_q(f)
    cyclo: List[Tuple[int, int]] = []
    rest = DensePoly.constant(QQ, fac.unit)
    for g, m in fac.factors:
        n = cyclotomic_index(g)
        if n is not None:
            cyclo.append((n, m))
        else:
            for _ in range(m):
                rest = rest * g
    cyclo.sort()
    return CyclotomicSplit(tuple(cyclo), rest, fac.xpower)
