"""Sparsest bounded-degree, bounded-height multiple over Q.

The search fixes the support positions of the candidate multiple h (always
including position 0; callers strip any x^b factor first).  For a support
I = (0, i_2, ..., i_s), write A for the coefficient-convolution matrix of f
up to degree n with the rows indexed by I removed, and B for those removed
rows.  Multiples supported on I correspond to integer kernel vectors of A,
and their coefficient tuples form the lattice spanned by B*C where C is a
kernel basis of A.  A shortest-l-infinity vector of that lattice is the
lowest-height candidate, so iterating supports in reverse lexicographic
order (by increasing sparsity, then by the anchor positions) yields the
sparsest multiple of minimal degree.

A full-column-rank check mod a large prime cheaply skips the (many)
supports with trivial kernel; a deficient mod-p rank only ever errs toward
doing the exact work, never toward skipping a solution.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from . import lattice
from .polys import (
    QQ,
    DensePoly,
    PolynomialError,
    SparsePoly,
    divides,
    primitive_parts,
    sparse_primitive_positive,
)

#: Prime below 2**31.5 so products of two residues fit in int64 arithmetic.
_RANK_PRIME = 2147483647


def convolution_matrix(f: DensePoly, n: int) -> lattice.Mat:
    """The (n+1) x (n-d+1) matrix whose column j holds the coefficients
    of x^j * f; so M @ coeffs(g) = coeffs(f*g) for deg g <= n-d."""
    ints, _ = primitive_parts(f)
    d = len(ints) - 1
    if n < d:
        raise PolynomialError("degree bound below deg f")
    cols = n - d + 1
    rows = []
    for i in range(n + 1):
        rows.append(tuple(ints[i - j] if 0 <= i - j <= d else 0 for j in range(cols)))
    return tuple(rows)


def root_power_matrix(ring, roots: Sequence, n: int):
    """The matrix [alpha_i**j] for 0 <= j <= n, one row per root.

    A vector of coefficients lies in the kernel iff the corresponding
    polynomial vanishes at every listed root.
    """
    seen = []
    for r in roots:
        if r in seen:
            raise PolynomialError("root-power matrix requires distinct roots")
        seen.append(r)
    rows = []
    for r in roots:
        row = []
        p = ring.one
        for _ in range(n + 1):
            row.append(p)
            p = ring.mul(p, r)
        rows.append(tuple(row))
    return tuple(rows)


def subsets_reverse_lex(n: int, s: int) -> Iterator[Tuple[int, ...]]:
    """Supports (0, i_2, ..., i_s) of {0..n} in reverse lexicographic order.

    a precedes b iff at the highest position where they differ, a is
    smaller; equivalently ordinary lexicographic order reading the tuple
    from the last entry down.
    """
    if s == 1:
        yield (0,)
        return

    def gen(top: int, size: int) -> Iterator[Tuple[int, ...]]:
        # tuples of `size` values from 1..top, emitted by increasing maximum
        if size == 0:
            yield ()
            return
        for m in range(size, top + 1):
            for rest in gen(m - 1, size - 1):
                yield rest + (m,)

    for tail in gen(n, s - 1):
        yield (0,) + tail


def _reduce_row(echelon, row: List[int], p: int):
    """Reduce `row` against echelon rows [(pivot_index, pivot_value, row)];
    return the extended echelon list or None if the row reduces to 0.
    Rows are kept unnormalized (cross-multiplication) to avoid inverses."""
    r = row
    for piv, pv, er in echelon:
        fac = r[piv]
        if fac:
            r = [(pv * b - fac * eb) % p for b, eb in zip(r, er)]
    for i, v in enumerate(r):
        if v:
            return echelon + [(i, v, r)]
    return None


def sparsest_bounded(
    f: DensePoly,
    t: int,
    n: int,
    c: int,
    engine: str = "oracle",
    seed: int = 0,
) -> Optional[SparsePoly]:
    """Sparsest multiple h of f with sparsity <= t, deg h <= n, height <= c.

    Among multiples of the minimal sparsity, the degree is minimal.  Returns
    None when no such multiple exists.  `engine` selects the shortest-vector
    routine: "oracle" (exact enumeration) or "sieve" (randomized, seeded).
    """
    if f.is_zero:
        raise PolynomialError("zero polynomial has only trivial multiples")
    ints, _ = primitive_parts(f)
    if ints[0] == 0:
        raise PolynomialError("constant term must be nonzero (strip x^b first)")
    if t < 2:
        raise PolynomialError("sparsity bound must be at least 2")
    d = len(ints) - 1
    if n < d:
        return None
    if d == 0:
        return SparsePoly.make(QQ, [(Fraction(1), 0)])
    if engine not in ("oracle", "sieve"):
        raise PolynomialError(f"unknown engine {engine!r}")

    fprim = DensePoly.from_ints(QQ, ints)

    # Remainder rows x^i mod f: h = sum v_i x^(supp_i) is a multiple of f
    # exactly when sum v_i * rem(x^supp_i) = 0, so the support-coefficient
    # lattice is the integer kernel of the d x s remainder system; a cheap
    # modular echelon test over the same rows drives the skip decision and
    # only rank-deficient supports get exact work.
    rems: List[List[Fraction]] = []
    r = DensePoly.one(QQ)
    x = DensePoly.x(QQ)
    for _ in range(n + 1):
        rems.append([r.coeff(j) for j in range(d)])
        r = (r * x).rem(fprim)
    p, rows_p = _rows_mod_p(rems)

    result: List[Optional[SparsePoly]] = [None]

    def process(supp: Tuple[int, ...]) -> bool:
        rows = []
        for j in range(d):
            vals = [rems[i][j] for i in supp]
            den = 1
            for v_ in vals:
                den = lcm(den, v_.denominator)
            rows.append(tuple(int(v_ * den) for v_ in vals))
        C = lattice.kernel_basis(tuple(rows))
        if not C or not C[0]:
            return False
        # the integer kernel is saturated, so content divides out freely
        cols = lattice.mat_cols(C)
        if engine == "oracle":
            v = lattice.shortest_linf_enumerate(cols)
        else:
            v = lattice.shortest_linf_sieve(cols, seed=seed)
        v = _primitive_vector(v)
        if max(abs(xv) for xv in v) > c:
            return False
        h = SparsePoly.make(QQ, [(Fraction(xv), e) for xv, e in zip(v, supp) if xv])
        if h.is_zero:
            return False
        if not divides(f, h):
            raise PolynomialError("internal error: candidate fails division check")
        result[0] = sparse_primitive_positive(h)
        return True

    for s in range(2, t + 1):
        base = _reduce_row([], list(rows_p[0]), p)

        def scan(slots: int, top: int, chosen: Tuple[int, ...], state) -> bool:
            # supports in reverse-lex order: the maximum element is chosen
            # first (ascending), remaining slots filled recursively below it
            for m in range(slots, top + 1):
                st = None if state is None else _reduce_row(state, list(rows_p[m]), p)
                if slots == 1:
                    if st is None and process((0, m) + chosen[::-1]):
                        return True
                else:
                    if scan(slots - 1, m - 1, chosen + (m,), st):
                        return True
            return False

        if scan(s - 1, n, (), base):
            return result[0]
    return None


def _rows_mod_p(rems: List[List[Fraction]]) -> Tuple[int, List[List[int]]]:
    """Reduce rational rows modulo a prime not dividing any denominator."""
    for p in (2147483647, 2147483629, 2147483587):
        try:
            out = []
            for row in rems:
                new = []
                for cf in row:
                    if cf.denominator % p == 0:
                        raise ZeroDivisionError
                    new.append(cf.numerator * pow(cf.denominator, p - 2, p) % p)
                out.append(new)
            return p, out
        except ZeroDivisionError:
            continue
    raise PolynomialError("no suitable prime for modular rank checks")


def _independent_columns(cols: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Keep a maximal linearly independent prefix-greedy subset."""
    out: List[Tuple[int, ...]] = []
    rows: List[List[Fraction]] = []  # row-echelon accumulator
    for col in cols:
        v = [Fraction(x) for x in col]
        for r in rows:
            piv = next(i for i, x in enumerate(r) if x)
            if v[piv]:
                fac = v[piv] / r[piv]
                v = [a - fac * b for a, b in zip(v, r)]
        if any(v):
            rows.append(v)
            out.append(col)
    return out


def _primitive_vector(v: Tuple[int, ...]) -> Tuple[int, ...]:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return v


BRUTE_N_CAP = 25
BRUTE_T_CAP = 4
BRUTE_C_CAP = 1000


def brute_force_sparsest(
    f: DensePoly, t: int, n: int, c: int
) -> Optional[SparsePoly]:
    """Exhaustive oracle for sparsest_bounded, within hard caps.

    For each support, row-reduce the columns of the remainder map
    x^i mod f; kernel elements are parameterized by the free coordinates,
    which are actual coefficients of h and hence bounded by c, so a finite
    integer box is enumerated directly.
    """
    if n > BRUTE_N_CAP or t > BRUTE_T_CAP or c > BRUTE_C_CAP:
        raise PolynomialError("brute-force caps exceeded")
    if f.is_zero:
        raise PolynomialError("zero polynomial")
    ints, _ = primitive_parts(f)
    if ints[0] == 0:
        raise PolynomialError("constant term must be nonzero")
    d = len(ints) - 1
    if n < d:
        return None
    fprim = DensePoly.from_ints(QQ, ints)
    # remainders x^i mod f for i = 0..n
    rems = []
    r = DensePoly.one(QQ)
    x = DensePoly.x(QQ)
    for i in range(n + 1):
        rems.append([r.coeff(j) for j in range(d)])
        r = (r * x).rem(fprim)

    from itertools import product

    for s in range(2, t + 1):
        for supp in subsets_reverse_lex(n, s):
            # columns of the remainder map restricted to this support
            colsmat = [[rems[i][j] for i in supp] for j in range(d)]  # d x s
            # row reduce to find pivot/free coordinates
            mat = [row[:] for row in colsmat]
            pivots = []
            rr = 0
            for cc in range(s):
                sel = None
                for r2 in range(rr, len(mat)):
                    if mat[r2][cc]:
                        sel = r2
                        break
                if sel is None:
                    continue
                mat[rr], mat[sel] = mat[sel], mat[rr]
                inv = 1 / mat[rr][cc]
                mat[rr] = [x2 * inv for x2 in mat[rr]]
                for r2 in range(len(mat)):
                    if r2 != rr and mat[r2][cc]:
                        fac = mat[r2][cc]
                        mat[r2] = [a - fac * b for a, b in zip(mat[r2], mat[rr])]
                pivots.append(cc)
                rr += 1
            free = [cc for cc in range(s) if cc not in pivots]
            if not free:
                continue
            best_here: Optional[Tuple[int, ...]] = None
            for assign in product(range(-c, c + 1), repeat=len(free)):
                if all(a == 0 for a in assign):
                    continue
                coeffs: List[Optional[Fraction]] = [None] * s
                for idx, cc in enumerate(free):
                    coeffs[cc] = Fraction(assign[idx])
                ok = True
                for rr2, cc in enumerate(pivots):
                    val = Fraction(0)
                    for fc in free:
                        val -= mat[rr2][fc] * coeffs[fc]
                    if val.denominator != 1 or abs(val) > c:
                        ok = False
                        break
                    coeffs[cc] = val
                if not ok:
                    continue
                vec = tuple(int(x2) for x2 in coeffs)
                # primitive + height test after content division
                from math import gcd

                g = 0
                for x2 in vec:
                    g = gcd(g, x2)
                if g:
                    vec = tuple(x2 // g for x2 in vec)
                if max(abs(x2) for x2 in vec) > c:
                    continue
                if best_here is None or lattice.best_vector([vec, best_here]) == lattice._sign_normalize(vec):
                    best_here = lattice._sign_normalize(vec)
            if best_here is not None:
                h = SparsePoly.make(
                    QQ, [(Fraction(x2), e) for x2, e in zip(best_here, supp) if x2]
                )
                if not divides(fprim, h):
                    raise PolynomialError("internal error: oracle division check")
                return sparse_primitive_positive(h)
    return None
