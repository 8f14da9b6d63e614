"""Exact scalar and polynomial arithmetic shared by every other module.

Scalars over the rationals are plain ``fractions.Fraction`` values (always in
lowest terms with positive denominator, so the canonical-form invariant is
automatic).  Finite-field scalars are the element representations of the
field contexts in :mod:`sparsemult.ffield`; both kinds of coefficient ring
expose the same small protocol (``zero``/``one``/``add``/``sub``/``mul``/
``neg``/``inv``/``is_zero``/``from_int``), which is all the polynomial code
below relies on.

Dense polynomials store a coefficient list indexed by exponent; sparse
polynomials store a strictly-increasing list of (coefficient, exponent)
terms where exponents are arbitrary-precision integers and are never
expanded to dense form past a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple

#: Sparse polynomials whose degree exceeds this are refused by to_dense().
DENSE_EXPANSION_CAP = 10**6


class PolynomialError(ValueError):
    """Domain error raised by polynomial operations."""


class RationalRing:
    """The field Q with Fraction elements, as a ring-protocol singleton."""

    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def is_zero(a):
        return a == 0

    def __repr__(self):
        return "QQ"


QQ = RationalRing()


class DensePoly:
    """Dense univariate polynomial over a ring-protocol coefficient ring.

    The coefficient list is trimmed so that the leading coefficient is
    nonzero; the zero polynomial has an empty list.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Sequence):
        self.ring = ring
        cs = list(coeffs)
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    # -- constructors -------------------------------------------------

    @classmethod
    def from_ints(cls, ring, ints: Sequence[int]) -> "DensePoly":
        return cls(ring, [ring.from_int(n) for n in ints])

    @classmethod
    def zero(cls, ring) -> "DensePoly":
        return cls(ring, [])

    @classmethod
    def one(cls, ring) -> "DensePoly":
        return cls(ring, [ring.one])

    @classmethod
    def x(cls, ring) -> "DensePoly":
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def x_power(cls, ring, e: int) -> "DensePoly":
        return cls(ring, [ring.zero] * e + [ring.one])

    @classmethod
    def constant(cls, ring, c) -> "DensePoly":
        return cls(ring, [c])

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    @property
    def lc(self):
        if self.is_zero:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, DensePoly)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), tuple(self.coeffs)))

    def __repr__(self):
        return f"DensePoly({self.ring!r}, {self.coeffs!r})"

    def _check_ring(self, other: "DensePoly"):
        if self.ring is not other.ring:
            raise PolynomialError("ring mismatch between polynomial operands")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check_ring(other)
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(R, [R.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        self._check_ring(other)
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(R, [R.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "DensePoly":
        R = self.ring
        return DensePoly(R, [R.neg(c) for c in self.coeffs])

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        self._check_ring(other)
        R = self.ring
        if self.is_zero or other.is_zero:
            return DensePoly.zero(R)
        out = [R.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return DensePoly(R, out)

    def scale(self, c) -> "DensePoly":
        R = self.ring
        return DensePoly(R, [R.mul(c, a) for a in self.coeffs])

    def divmod(self, other: "DensePoly") -> Tuple["DensePoly", "DensePoly"]:
        """Exact polynomial division with remainder; divisor must be nonzero."""
        self._check_ring(other)
        if other.is_zero:
            raise PolynomialError("division by the zero polynomial")
        R = self.ring
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return DensePoly.zero(R), DensePoly(R, rem)
        inv_lc = R.inv(other.lc)
        quo = [R.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if R.is_zero(top):
                continue
            q = R.mul(top, inv_lc)
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = R.sub(rem[k + j], R.mul(q, b))
        return DensePoly(R, quo), DensePoly(R, rem)

    def quo(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[0]

    def rem(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "DensePoly") -> "DensePoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise PolynomialError("division is not exact")
        return q

    def monic(self) -> "DensePoly":
        if self.is_zero:
            return self
        return self.scale(self.ring.inv(self.lc))

    def gcd(self, other: "DensePoly") -> "DensePoly":
        """Monic greatest common divisor (Euclid)."""
        self._check_ring(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.rem(b)
        if a.is_zero:
            return a
        return a.monic()

    def derivative(self) -> "DensePoly":
        R = self.ring
        return DensePoly(
            R, [R.mul(R.from_int(i), self.coeffs[i]) for i in range(1, len(self.coeffs))]
        )

    def pow_mod(self, e: int, modulus: "DensePoly") -> "DensePoly":
        """self**e reduced modulo `modulus`, by repeated squaring."""
        if e < 0:
            raise PolynomialError("negative exponent")
        result = DensePoly.one(self.ring).rem(modulus)
        base = self.rem(modulus)
        while e:
            if e & 1:
                result = (result * base).rem(modulus)
            e >>= 1
            if e:
                base = (base * base).rem(modulus)
        return result

    def compose_scaled(self, a) -> "DensePoly":
        """Return f(a*x) for a scalar a."""
        R = self.ring
        out, p = [], R.one
        for c in self.coeffs:
            out.append(R.mul(c, p))
            p = R.mul(p, a)
        return DensePoly(R, out)

    def shift_up(self, b: int) -> "DensePoly":
        """Multiply by x**b."""
        if self.is_zero:
            return self
        return DensePoly(self.ring, [self.ring.zero] * b + self.coeffs)

    def strip_x(self) -> Tuple[int, "DensePoly"]:
        """Write self = x**b * fhat with fhat(0) != 0; return (b, fhat)."""
        if self.is_zero:
            raise PolynomialError("cannot strip x from the zero polynomial")
        b = 0
        while self.ring.is_zero(self.coeffs[b]):
            b += 1
        return b, DensePoly(self.ring, self.coeffs[b:])

    def squarefree_part(self) -> "DensePoly":
        """Product of the distinct irreducible factors (monic).

        In characteristic p the p-th power parts are handled by exponent
        division via p-th roots of the coefficients.
        """
        if self.is_zero:
            raise PolynomialError("squarefree part of the zero polynomial")
        f = self.monic()
        if f.degree <= 0:
            return DensePoly.one(self.ring)
        d = f.derivative()
        if d.is_zero:
            # Only possible in characteristic p: f is a p-th power.
            return _pth_root(f).squarefree_part()
        g = f.gcd(d)
        w = f.exact_div(g)
        # w carries each factor whose multiplicity is not divisible by char
        # exactly once.  Dividing those out of g repeatedly leaves the
        # char-divisible-multiplicity part, which is a perfect p-th power.
        c = g
        while True:
            t = c.gcd(w)
            if t.degree <= 0:
                break
            c = c.exact_div(t)
        if c.degree <= 0:
            return w
        return (w * _pth_root(c).squarefree_part()).monic()


def _pth_root(f: DensePoly) -> DensePoly:
    """p-th root of a polynomial all of whose exponents are multiples of p."""
    R = f.ring
    p = R.char
    q = R.order
    out = []
    for i in range(0, f.degree + 1, p):
        c = f.coeff(i)
        # p-th root of c in F_q is c**(q/p)
        out.append(R.pow(c, q // p))
    return DensePoly(R, out)


@dataclass(frozen=True)
class SparsePoly:
    """Sparse polynomial: sorted terms with arbitrary-precision exponents."""

    ring: object
    terms: Tuple[Tuple[object, int], ...]

    @classmethod
    def make(cls, ring, terms: Iterable[Tuple[object, int]]) -> "SparsePoly":
        acc = {}
        for c, e in terms:
            if e < 0:
                raise PolynomialError("negative exponent in sparse polynomial")
            if e in acc:
                acc[e] = ring.add(acc[e], c)
            else:
                acc[e] = c
        out = tuple(
            (acc[e], e) for e in sorted(acc) if not ring.is_zero(acc[e])
        )
        return cls(ring, out)

    @classmethod
    def from_dense(cls, f: DensePoly) -> "SparsePoly":
        return cls.make(
            f.ring,
            [(c, i) for i, c in enumerate(f.coeffs) if not f.ring.is_zero(c)],
        )

    def to_dense(self, cap: int = DENSE_EXPANSION_CAP) -> DensePoly:
        if self.degree > cap:
            raise PolynomialError(
                f"sparse polynomial of degree {self.degree} exceeds expansion cap {cap}"
            )
        R = self.ring
        out = [R.zero] * (self.degree + 1) if self.terms else []
        for c, e in self.terms:
            out[e] = c
        return DensePoly(R, out)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return self.terms[-1][1] if self.terms else -1

    @property
    def sparsity(self) -> int:
        return len(self.terms)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        if self.ring is not other.ring:
            raise PolynomialError("ring mismatch")
        return SparsePoly.make(
            self.ring,
            [
                (self.ring.mul(c1, c2), e1 + e2)
                for c1, e1 in self.terms
                for c2, e2 in other.terms
            ],
        )

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if self.ring is not other.ring:
            raise PolynomialError("ring mismatch")
        return SparsePoly.make(self.ring, list(self.terms) + list(other.terms))

    def scale(self, c) -> "SparsePoly":
        return SparsePoly.make(self.ring, [(self.ring.mul(c, a), e) for a, e in self.terms])

    def shift_up(self, b: int) -> "SparsePoly":
        return SparsePoly(self.ring, tuple((c, e + b) for c, e in self.terms))


@dataclass(frozen=True)
class PowerConstant:
    """A rational constant base**exponent kept unevaluated.

    Binomial multiples can involve constants like r**(m/m1) whose expanded
    form has millions of digits; this wrapper records the base and exponent
    and only evaluates on demand (optionally refusing past a digit cap).
    """

    base: Fraction
    exponent: int

    def evaluate(self, digit_cap: int | None = None) -> Fraction:
        if digit_cap is not None and self.base != 0:
            approx_digits = self.exponent * len(str(abs(self.base.numerator) + abs(self.base.denominator)))
            if approx_digits > digit_cap:
                raise PolynomialError(
                    f"constant {self.base}**{self.exponent} exceeds digit cap {digit_cap}"
                )
        return self.base ** self.exponent

    def __str__(self):
        if self.exponent == 1:
            return str(self.base)
        return f"({self.base})^{self.exponent}"


# -- rational-specific helpers ---------------------------------------


def primitive_parts(f: DensePoly) -> Tuple[List[int], Fraction]:
    """Integer coefficients of the primitive form of f over Q.

    Returns (ints, r) where r is the least positive rational with r*f in
    Z[x] and content 1, and ints are the coefficients of r*f.
    """
    if f.ring is not QQ:
        raise PolynomialError("primitive form is defined over Q only")
    if f.is_zero:
        raise PolynomialError("primitive form of the zero polynomial")
    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    nums = [int(c * den) for c in f.coeffs]
    g = 0
    for n in nums:
        g = gcd(g, n)
    nums = [n // g for n in nums]
    return nums, Fraction(den, g)

def height(f: DensePoly) -> Fraction:
    """Height H(f): max |coefficient| of the primitive integer form of f."""
    nums, _ = primitive_parts(f)
    return Fraction(max(abs(n) for n in nums))


def primitive_positive(f: DensePoly) -> DensePoly:
    """Primitive integer form with positive leading coefficient (over Q)."""
    nums, _ = primitive_parts(f)
    if nums[-1] < 0:
        nums = [-n for n in nums]
    return DensePoly.from_ints(QQ, nums)


def sparse_primitive_positive(h: SparsePoly) -> SparsePoly:
    """Canonical form of a sparse multiple over Q (primitive, lc > 0)."""
    if h.ring is not QQ:
        raise PolynomialError("canonical form defined over Q only")
    if h.is_zero:
        return h
    den = 1
    for c, _ in h.terms:
        den = lcm(den, c.denominator)
    nums = [(int(c * den), e) for c, e in h.terms]
    g = 0
    for n, _ in nums:
        g = gcd(g, n)
    sign = 1 if nums[-1][0] > 0 else -1
    return SparsePoly(QQ, tuple((Fraction(n * sign, g), e) for n, e in nums))


def sparse_height(h: SparsePoly) -> Fraction:
    canon = sparse_primitive_positive(h)
    return Fraction(max(abs(int(c)) for c, _ in canon.terms))


def divides(f: DensePoly, h: SparsePoly) -> bool:
    """Exact test whether f divides h, with possibly huge sparse exponents.

    Each x**e is reduced modulo f by repeated squaring, so the test costs
    O(t log e) polynomial multiplications regardless of the size of e.
    """
    if f.is_zero:
        raise PolynomialError("division by the zero polynomial")
    if h.is_zero:
        return True
    if f.ring is not h.ring:
        raise PolynomialError("ring mismatch")
    R = f.ring
    if f.degree == 0:
        return True
    x = DensePoly.x(R)
    acc = DensePoly.zero(R)
    cache = {}
    for c, e in h.terms:
        if e not in cache:
            cache[e] = x.pow_mod(e, f)
        acc = acc + cache[e].scale(c)
    return acc.is_zero
