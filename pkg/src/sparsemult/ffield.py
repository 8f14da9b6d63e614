"""Finite fields, factorization over F_q, order finding, binomial multiples.

Field contexts implement the same ring protocol that DensePoly consumes
(char / order / zero / one / from_int / add / sub / mul / neg / inv /
is_zero / pow), so all the generic dense-polynomial machinery works over
F_q unchanged.  Prime-field elements are plain ints in [0, p); extension
elements are fixed-length tuples of base-field elements (ascending
coefficient order, reduced mod an irreducible modulus).  Every element has
a canonical integer key (the base-q positional encoding), which gives the
deterministic orderings used for modulus generation, root selection, and
tie-breaking.

Contents: FqContext hierarchy (PrimeField, ExtensionField) with cached
deterministic towers; complete factorization over F_q (squarefree split,
distinct-degree, seeded equal-degree splitting); exact multiplicative
order; the least-degree binomial multiple x^b (x^n - c)^(p^e); the
order-hardness gadget f_{a,t}; and an exhaustive sparse-multiple oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb, gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .polys import DensePoly, PolynomialError, SparsePoly

ORDER_GUARD = 1 << 64
BRUTE_FORCE_WORK_CAP = 10**7


class OrderGuardError(PolynomialError):
    """Raised when an order-finding or enumeration task exceeds its guard."""


# ---------------------------------------------------------------------------
# Field contexts


class FqContext:
    """Base for finite-field contexts; immutable after construction."""

    char: int
    order: int
    degree: int  # over the prime field

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    # key / from_key give the canonical total order on elements
    def key(self, a) -> int:
        raise NotImplementedError

    def from_key(self, k: int):
        raise NotImplementedError

    def elements(self):
        return (self.from_key(k) for k in range(self.order))

    def __repr__(self):
        return f"GF({self.order})"


class PrimeField(FqContext):
    def __init__(self, p: int):
        if p < 2 or not sympy.isprime(p):
            raise PolynomialError(f"characteristic {p} is not prime")
        self.char = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return (-a) % self.char

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def is_zero(self, a) -> bool:
        return a == 0

    def pow(self, a, k: int):
        if k < 0:
            return pow(self.inv(a), -k, self.char)
        return pow(a, k, self.char)

    def key(self, a) -> int:
        return a

    def from_key(self, k: int):
        return k


class ExtensionField(FqContext):
    """F_{q^e} = base[x]/(modulus), modulus monic irreducible of degree e."""

    def __init__(self, base: FqContext, modulus: Sequence, check: bool = True):
        mod = tuple(modulus)
        e = len(mod) - 1
        if e < 1 or mod[-1] != base.one:
            raise PolynomialError("modulus must be monic of positive degree")
        if check and not is_irreducible_fq(DensePoly(base, list(mod))):
            raise PolynomialError("modulus is reducible")
        self.base = base
        self.modulus = mod
        self.ext_degree = e
        self.char = base.char
        self.order = base.order**e
        self.degree = base.degree * e
        self.zero = (base.zero,) * e
        self.one = (base.one,) + (base.zero,) * (e - 1)
        self.gen = self.from_key(base.order) if e > 1 else None

    def embed(self, b):
        """Embed a base-field element."""
        return (b,) + (self.base.zero,) * (self.ext_degree - 1)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def add(self, a, b):
        ba = self.base.add
        return tuple(ba(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        bs = self.base.sub
        return tuple(bs(x, y) for x, y in zip(a, b))

    def neg(self, a):
        bn = self.base.neg
        return tuple(bn(x) for x in a)

    def mul(self, a, b):
        B = self.base
        e = self.ext_degree
        conv = [B.zero] * (2 * e - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                conv[i + j] = B.add(conv[i + j], B.mul(x, y))
        # reduce by the monic modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = conv[i]
            if B.is_zero(c):
                continue
            conv[i] = B.zero
            for j in range(e):
                conv[i - e + j] = B.sub(conv[i - e + j], B.mul(c, self.modulus[j]))
        return tuple(conv[:e])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a) -> bool:
        bz = self.base.is_zero
        return all(bz(c) for c in a)

    def key(self, a) -> int:
        q = self.base.order
        k = 0
        for c in reversed(a):
            k = k * q + self.base.key(c)
        return k

    def from_key(self, k: int):
        q = self.base.order
        out = []
        for _ in range(self.ext_degree):
            k, r = divmod(k, q)
            out.append(self.base.from_key(r))
        return tuple(out)


_FIELD_CACHE: Dict[tuple, FqContext] = {}


def _descriptor(field: FqContext) -> tuple:
    if isinstance(field, PrimeField):
        return (field.char,)
    assert isinstance(field, ExtensionField)
    return _descriptor(field.base) + (tuple(field.base.key(c) for c in field.modulus),)


def is_irreducible_fq(f: DensePoly) -> bool:
    """Rabin's test: x^(q^e) = x mod f and gcd(x^(q^(e/r)) - x, f) = 1."""
    ring = f.ring
    e = f.degree
    if e <= 0:
        return False
    if e == 1:
        return True
    q = ring.order
    x = DensePoly.x(ring)
    fr = f.monic()
    powers = {}
    h = x
    for j in range(1, e + 1):
        h = h.pow_mod(q, fr)
        powers[j] = h
    if powers[e] != x.rem(fr):
        return False
    for r in sympy.primefactors(e):
        g = fr.gcd(powers[e // r] - x)
        if g.degree > 0:
            return False
    return True


def irreducible_modulus(base: FqContext, e: int) -> Tuple:
    """Lexicographically least monic irreducible of degree e over base.

    Order: integer key of the coefficient word (leading digit most
    significant), i.e. lex on the descending-coefficient tuple.
    """
    if e == 1:
        return (base.zero, base.one)
    q = base.order
    for k in range(q**e):
        coeffs = [base.from_key(d) for d in _digits(k, q, e)] + [base.one]
        if is_irreducible_fq(DensePoly(base, coeffs)):
            return tuple(coeffs)
    raise PolynomialError("no irreducible modulus found")  # pragma: no cover


def _digits(k: int, q: int, e: int) -> List[int]:
    out = []
    for _ in range(e):
        k, r = divmod(k, q)
        out.append(r)
    return out


def Fq(p: int, k: int = 1) -> FqContext:
    """The field with p^k elements, built on cached deterministic moduli."""
    key = ("Fq", p, k)
    if key not in _FIELD_CACHE:
        base = PrimeField(p)
        if k == 1:
            _FIELD_CACHE[key] = base
        else:
            _FIELD_CACHE[key] = ExtensionField(
                base, irreducible_modulus(base, k), check=False
            )
    return _FIELD_CACHE[key]


def extend_field(base: FqContext, e: int) -> FqContext:
    """F_{q^e} over base with the canonical least modulus (cached)."""
    if e == 1:
        return base
    key = ("ext", _descriptor(base), e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = ExtensionField(
            base, irreducible_modulus(base, e), check=False
        )
    return _FIELD_CACHE[key]


@dataclass(frozen=True)
class FqElem:
    """An element of a finite field, tagged with its context."""

    field: FqContext
    value: object

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __repr__(self):
        return f"FqElem({self.field!r}, key={self.field.key(self.value)})"


# ---------------------------------------------------------------------------
# Factorization over F_q


@dataclass(frozen=True)
class FqFactorization:
    """f = unit * x**xpower * prod(factor**mult); factors monic irreducible."""

    ring: FqContext
    unit: object
    xpower: int
    factors: Tuple[Tuple[DensePoly, int], ...]

    def reconstruct(self) -> DensePoly:
        out = DensePoly.constant(self.ring, self.unit).shift_up(self.xpower)
        for g, m in self.factors:
            for _ in range(m):
                out = out * g
        return out


def _distinct_degree(f: DensePoly) -> List[Tuple[DensePoly, int]]:
    """Split monic squarefree f into (product of degree-k irreducibles, k)."""
    ring = f.ring
    q = ring.order
    x = DensePoly.x(ring)
    out = []
    h = x.rem(f)
    rest = f
    k = 0
    while rest.degree > 0:
        k += 1
        if rest.degree < 2 * k:
            out.append((rest, rest.degree))
            break
        h = h.pow_mod(q, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g, k))
            rest = rest.exact_div(g)
            h = h.rem(rest)
    return out


def _random_poly(ring: FqContext, degree_lt: int, rng: random.Random) -> DensePoly:
    coeffs = [ring.from_key(rng.randrange(ring.order)) for _ in range(degree_lt)]
    return DensePoly(ring, coeffs)


def _equal_degree(f: DensePoly, k: int, rng: random.Random) -> List[DensePoly]:
    """Cantor-Zassenhaus split of a monic product of degree-k irreducibles."""
    if f.degree == k:
        return [f.monic()]
    ring = f.ring
    q = ring.order
    while True:
        h = _random_poly(ring, f.degree, rng)
        if h.degree < 1:
            continue
        if q % 2 == 1:
            g = f.gcd(h.pow_mod((q**k - 1) // 2, f) - DensePoly.one(ring))
        else:
            # char 2: trace of h over F_2 inside the degree degree*k extension
            m = ring.degree * k
            tr = h.rem(f)
            sq = tr
            for _ in range(m - 1):
                sq = sq.pow_mod(2, f)
                tr = tr + sq
            g = f.gcd(tr)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, k, rng) + _equal_degree(f.exact_div(g), k, rng)


def factor_fq(f: DensePoly, seed: int = 0) -> FqFactorization:
    """Complete factorization of nonzero f over F_q into monic irreducibles."""
    ring = f.ring
    if not isinstance(ring, FqContext):
        raise PolynomialError("factor_fq operates over a finite field")
    if f.is_zero:
        raise PolynomialError("zero polynomial")
    rng = random.Random(f"factor_fq:{seed}:{ring.order}:{f.degree}")
    b, g = f.strip_x()
    unit = g.lc
    g = g.monic()
    factors: List[Tuple[DensePoly, int]] = []
    sf = g.squarefree_part()
    for prod_k, k in _distinct_degree(sf):
        for irr in _equal_degree(prod_k, k, rng):
            mult = 0
            rest = g
            while True:
                quo, rem = rest.divmod(irr)
                if not rem.is_zero:
                    break
                mult += 1
                rest = quo
            factors.append((irr, mult))
    factors.sort(key=lambda fm: (fm[0].degree, [ring.key(c) for c in fm[0].coeffs]))
    return FqFactorization(ring, unit, b, tuple(factors))


# ---------------------------------------------------------------------------
# Multiplicative order


def element_order(a: FqElem, allow_large: bool = False) -> int:
    """Exact multiplicative order of a nonzero field element."""
    field = a.field
    if a.is_zero:
        raise PolynomialError("zero element has no multiplicative order")
    if field.order >= ORDER_GUARD and not allow_large:
        raise OrderGuardError(
            f"field size {field.order} exceeds the order-finding guard ({ORDER_GUARD}); "
            "pass allow_large=True to factor anyway"
        )
    n = field.order - 1
    o = n
    for p_, _ in sympy.factorint(n).items():
        while o % p_ == 0 and field.pow(a.value, o // p_) == field.one:
            o //= p_
    return o


# ---------------------------------------------------------------------------
# Least-degree binomial multiple (roots, embeddings, combination)


@dataclass(frozen=True)
class FqBinomialMultiple:
    """x**xpower * (x**n - constant)**frobpower, with constant in the base field."""

    xpower: int
    n: int
    constant: FqElem
    frobpower: int  # p^e

    @property
    def degree(self) -> int:
        return self.xpower + self.n * self.frobpower

    def to_sparse(self) -> SparsePoly:
        field = self.constant.field
        # char-p expansion: (x^n - c)^(p^e) = x^(n p^e) - c^(p^e)
        c = field.pow(self.constant.value, self.frobpower)
        terms = [(field.neg(c), self.xpower)]
        if field.is_zero(c):
            terms = []
        terms.append((field.one, self.xpower + self.n * self.frobpower))
        return SparsePoly.make(field, terms)


def _roots_in(f: DensePoly, big: FqContext, rng: random.Random) -> List:
    """All roots of irreducible f (over big.base) in big, sorted by key."""
    lifted = DensePoly(big, [big.embed(c) for c in f.coeffs])
    roots = []
    for lin in _equal_degree(lifted, 1, rng):
        roots.append(big.neg(lin.coeff(0)))
    roots.sort(key=big.key)
    return roots


def binomial_multiple_fq(
    f: DensePoly, seed: int = 0, allow_large: bool = False
) -> FqBinomialMultiple:
    """Least-degree binomial multiple x^b (x^n - c)^(p^e) of f over F_q.

    The returned multiple is always verified by exact division; if the
    canonical root embeddings fail verification, conjugate embeddings are
    retried, and a hard error is raised if every retry fails.
    """
    ring = f.ring
    if not isinstance(ring, FqContext):
        raise PolynomialError("binomial_multiple_fq operates over a finite field")
    q = ring.order
    p = ring.char
    fac = factor_fq(f, seed=seed)
    if not fac.factors:
        raise PolynomialError("input is a monomial; every binomial multiple is trivial")
    rng = random.Random(f"binq:{seed}:{q}:{f.degree}")

    factors = [fi for fi, _ in fac.factors]
    mults = [m for _, m in fac.factors]
    degs = [fi.degree for fi in factors]
    ell = len(factors)

    # per-factor root fields and orders
    fields: List[FqContext] = []
    roots_self: List = []
    for fi in factors:
        if fi.degree == 1:
            fields.append(ring)
            roots_self.append(ring.neg(fi.coeff(0)))
        else:
            Ki = ExtensionField(ring, tuple(fi.coeffs), check=False)
            fields.append(Ki)
            roots_self.append(Ki.gen)
    orders = [
        element_order(FqElem(Ki, ai), allow_large=allow_large)
        for Ki, ai in zip(fields, roots_self)
    ]

    n1 = 1
    for oi, di in zip(orders, degs):
        if di > 1:
            n1 = lcm(n1, oi // gcd(oi, q - 1))

    # pairwise ratio orders in a common extension, canonical roots first
    pair_orders: List[List[int]] = []  # per pair: [canonical, all-combos-lcm]
    for i in range(ell):
        for j in range(i + 1, ell):
            L = lcm(degs[i], degs[j])
            FL = extend_field(ring, L)
            if FL.order >= ORDER_GUARD and not allow_large:
                raise OrderGuardError(
                    f"common extension size {FL.order} exceeds the order-finding "
                    "guard; pass allow_large=True to proceed"
                )
            ri = _roots_in(factors[i], FL, rng) if L > 1 else [roots_self[i]]
            rj = _roots_in(factors[j], FL, rng) if L > 1 else [roots_self[j]]
            combos = []
            for a_ in ri:
                for b_ in rj:
                    ratio = FL.mul(a_, FL.inv(b_))
                    combos.append(element_order(FqElem(FL, ratio), allow_large))
            pair_orders.append([combos[0], lcm(*combos) if combos else 1])

    emax = max(mults)
    e = 0
    while p**e < emax:
        e += 1
    pe = p**e

    def build(n2: int) -> Optional[FqBinomialMultiple]:
        n = lcm(n1, n2)
        K1, a1 = fields[0], roots_self[0]
        cn = K1.pow(a1, n)
        if K1 is not ring:
            if any(not ring.is_zero(c) for c in cn[1:]):
                return None
            cval = cn[0]
        else:
            cval = cn
        cand = FqBinomialMultiple(fac.xpower, n, FqElem(ring, cval), pe)
        return cand if _divides_fq(f, cand.to_sparse()) else None

    n2_canon = 1
    for po in pair_orders:
        n2_canon = lcm(n2_canon, po[0])
    result = build(n2_canon)
    if result is None:
        # conjugate retry: the safe lcm over every conjugate pairing
        n2_all = 1
        for po in pair_orders:
            n2_all = lcm(n2_all, po[1])
        if n2_all != n2_canon:
            result = build(n2_all)
    if result is None:
        raise PolynomialError(
            "binomial multiple verification failed for every conjugate "
            f"embedding (orders={orders}, n1={n1}, pair_orders={pair_orders})"
        )
    return result


def _divides_fq(f: DensePoly, h: SparsePoly) -> bool:
    """Does f divide the sparse h?  Exact remainder accumulation via pow_mod."""
    ring = f.ring
    x = DensePoly.x(ring)
    acc = DensePoly.zero(ring)
    for c, e in h.terms:
        acc = acc + x.pow_mod(e, f).scale(c)
    return acc.rem(f).is_zero


# ---------------------------------------------------------------------------
# Order-hardness gadget and brute-force oracle


def minimal_polynomial(a: FqElem) -> DensePoly:
    """Minimal polynomial of a over the base field of its context."""
    field = a.field
    if isinstance(field, PrimeField):
        base = field
        return DensePoly(base, [base.neg(a.value), base.one])
    assert isinstance(field, ExtensionField)
    base = field.base
    q = base.order
    conjs = [a.value]
    cur = field.pow(a.value, q)
    while cur != a.value:
        conjs.append(cur)
        cur = field.pow(cur, q)
    poly = DensePoly.one(field)
    for c in conjs:
        poly = poly * DensePoly(field, [field.neg(c), field.one])
    coeffs = []
    for c in poly.coeffs:
        if any(not base.is_zero(ci) for ci in c[1:]):
            raise PolynomialError("minimal polynomial failed to land in the base field")
        coeffs.append(c[0])
    return DensePoly(base, coeffs)


def order_gadget(a: FqElem, t: int) -> DensePoly:
    """Product of the distinct minimal polynomials of a^0, ..., a^(t-1).

    The sparsest bounded-sparsity multiple of this polynomial reveals the
    multiplicative order of a, so it serves as a hardness gadget.
    """
    field = a.field
    if t < 2:
        raise PolynomialError("gadget needs t >= 2")
    if a.is_zero:
        raise PolynomialError("gadget element must be nonzero")
    powers = [field.one]
    for _ in range(t - 1):
        powers.append(field.mul(powers[-1], a.value))
    if any(pw == field.one for pw in powers[1:]):
        raise PolynomialError(
            f"element order is below t={t}; the reduction handles small orders separately"
        )
    base = field.base if isinstance(field, ExtensionField) else field
    seen = []
    out = DensePoly.one(base)
    for pw in powers:
        mp = minimal_polynomial(FqElem(field, pw))
        if mp not in seen:
            seen.append(mp)
            out = out * mp
    return out


def spmul_fq_bruteforce(
    f: DensePoly, t: int, n: int, work_cap: int = BRUTE_FORCE_WORK_CAP
) -> Optional[SparsePoly]:
    """Least-degree, then lexicographically least, t-sparse multiple of f
    with degree at most n, by exhaustive enumeration; None if none exists.
    """
    ring = f.ring
    if not isinstance(ring, FqContext):
        raise PolynomialError("spmul_fq_bruteforce operates over a finite field")
    if f.is_zero or t < 1:
        raise PolynomialError("need nonzero f and t >= 1")
    q = ring.order
    work = q ** (t - 1) * comb(max(n, t), max(t - 1, 0))
    if work > work_cap:
        raise OrderGuardError(
            f"estimated enumeration work {work} exceeds the cap {work_cap}"
        )
    d = f.degree
    nonzero = [ring.from_key(k) for k in range(1, q)]
    fx = f.monic()
    # remainder table: x^e mod f for all candidate exponents, so each
    # candidate is checked with a linear combination instead of a division
    remtab = []
    x = DensePoly.x(ring)
    r = DensePoly.one(ring)
    for _ in range(n + 1):
        remtab.append([r.coeff(j) for j in range(d)])
        r = (r * x).rem(fx)
    for m in range(max(d, 1), n + 1):
        best = None
        best_key = None
        top = remtab[m]
        for s in range(1, t + 1):
            for lower in itertools.combinations(range(m), s - 1):
                rows = [remtab[e] for e in lower]
                for coeffs in itertools.product(nonzero, repeat=s - 1):
                    acc = list(top)
                    for c, row in zip(coeffs, rows):
                        for j in range(d):
                            acc[j] = ring.add(acc[j], ring.mul(c, row[j]))
                    if any(not ring.is_zero(a) for a in acc):
                        continue
                    h = SparsePoly.make(
                        ring, list(zip(coeffs, lower)) + [(ring.one, m)]
                    )
                    key = tuple(
                        (m - e, ring.key(c)) for c, e in reversed(h.terms)
                    )
                    if best_key is None or key < best_key:
                        best, best_key = h, key
        if best is not None:
            return best
    return None
