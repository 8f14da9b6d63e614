"""Integer-matrix and lattice algorithms.

All computation is exact: Fractions for Gram-Schmidt data, arbitrary
precision integers elsewhere.  Provided here:

* LLL reduction (delta = 3/4) of an integer lattice basis given by columns.
* Smith normal form with unimodular transforms T = P*S*Q, plus an integer
  kernel basis read off from the last columns of Q**-1.
* An exact shortest-l-infinity-vector search by bounded enumeration over an
  LLL-reduced basis (the default engine, rank-capped).
* A randomized sieve for the same problem: LLL prescaling, 2n scalings by
  1.5, a gamma-sweep through [3/2, 3*sqrt(n)+1], sampling in a gamma-ball,
  reduction modulo the basis parallelepiped, and repeated pivot-set sieving
  until the cluster radius drops to 2*gamma+1; the answer is the shortest
  difference of surviving lattice vectors over all sweeps.
* The subset-sum gadget matrix (Vandermonde columns with a (0,...,0,1,t)
  tail column) and a brute-force minimum-Hamming-weight lattice vector
  search over supports.

Vectors are tuples of ints; matrices are tuples of row tuples.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Sequence, Tuple

Vec = Tuple[int, ...]
Mat = Tuple[Vec, ...]


class LatticeError(ValueError):
    """Domain error raised by lattice routines."""


class SieveFailure(RuntimeError):
    """The sieve produced no candidate vector; retry with another seed."""


def mat_from_rows(rows: Sequence[Sequence[int]]) -> Mat:
    out = tuple(tuple(int(x) for x in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise LatticeError("ragged matrix")
    return out


def mat_cols(m: Mat) -> List[Vec]:
    return [tuple(r[j] for r in m) for j in range(len(m[0]))] if m else []


def mat_from_cols(cols: Sequence[Sequence[int]]) -> Mat:
    if not cols:
        return ()
    n = len(cols[0])
    return tuple(tuple(int(c[i]) for c in cols) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    if not a or not b:
        return ()
    bn = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(bn))
        for i in range(len(a))
    )


def mat_identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------
# LLL reduction (columns of U generate the lattice)
# ---------------------------------------------------------------------


def lll_reduce(cols: Sequence[Vec], delta: Fraction = Fraction(3, 4)) -> List[Vec]:
    """LLL-reduce a list of linearly independent integer basis vectors."""
    b = [list(v) for v in cols]
    d = len(b)
    if d == 0:
        raise LatticeError("empty basis")

    def gso():
        # returns (bstar squared norms as Fractions, mu matrix)
        bstar: List[List[Fraction]] = []
        norms: List[Fraction] = []
        mu = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                if norms[j] == 0:
                    raise LatticeError("linearly dependent basis vectors")
                mu[i][j] = Fraction(_dot(b[i], bstar[j])) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(_dot(v, v))
            if norms[i] == 0:
                raise LatticeError("linearly dependent basis vectors")
        return norms, mu

    norms, mu = gso()
    k = 1
    while k < d:
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = int(q + Fraction(1, 2)) if q >= 0 else -int(-q + Fraction(1, 2))
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                norms, mu = gso()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            norms, mu = gso()
            k = max(k - 1, 1)
    return [tuple(v) for v in b]


# ---------------------------------------------------------------------
# Smith normal form and kernels
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class SnfResult:
    P: Mat
    S: Mat
    Q: Mat
    Qinv: Mat

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(
            self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))
            if self.S[i][i]
        )


def smith_normal_form(t: Mat) -> SnfResult:
    """T = P*S*Q with P, Q unimodular, S diagonal with divisibility chain.

    Pivoting picks the smallest-magnitude nonzero entry; Q**-1 is tracked
    alongside Q so kernel extraction needs no separate inversion.
    """
    rows = len(t)
    cols = len(t[0]) if rows else 0
    a = [list(r) for r in t]
    p = [list(r) for r in mat_identity(rows)]
    q = [list(r) for r in mat_identity(cols)]
    qinv = [list(r) for r in mat_identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        # P tracks inverse row ops: T = P*S*Q, row op on S means P col op.
        for r in p:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):
        # row_i += c*row_j  =>  P col_j -= c*col_i
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        for r in p:
            r[j] -= c * r[i]

    def neg_row(i):
        a[i] = [-x for x in a[i]]
        for r in p:
            r[i] = -r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        q[i], q[j] = q[j], q[i]
        for r in qinv:
            r[i], r[j] = r[j], r[i]

    def add_col(i, j, c):
        # col_i += c*col_j  =>  Q row_j -= c*row_i ; Qinv col updates directly
        for r in a:
            r[i] += c * r[j]
        q[j] = [x - c * y for x, y in zip(q[j], q[i])]
        for r in qinv:
            r[i] += c * r[j]

    def round_div(x, y):
        # quotient with |remainder| <= |y|/2, keeping intermediate growth low
        qd, rd = divmod(x, y)
        if 2 * abs(rd) > abs(y):
            qd += 1
        return qd

    k = 0
    while k < min(rows, cols):
        while True:
            # re-select the smallest-magnitude nonzero entry as pivot every
            # pass; remainders produced below are strictly smaller, so this
            # terminates and keeps entries from exploding
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    v = a[i][j]
                    if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != k:
                swap_rows(k, best[0])
            if best[1] != k:
                swap_cols(k, best[1])
            piv = a[k][k]
            if any(a[i][k] % piv for i in range(k + 1, rows)) or any(
                a[k][j] % piv for j in range(k + 1, cols)
            ):
                # knock entries down to remainders; the next pass picks a
                # smaller pivot
                for i in range(k + 1, rows):
                    if a[i][k]:
                        add_row(i, k, -round_div(a[i][k], piv))
                for j in range(k + 1, cols):
                    if a[k][j]:
                        add_col(j, k, -round_div(a[k][j], piv))
                continue
            for i in range(k + 1, rows):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // piv))
            for j in range(k + 1, cols):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // piv))
            # divisibility chain: pivot must divide the whole trailing block
            bad = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, 1)  # pull the offending row in and redo
        if a[k][k] == 0:
            break
        if a[k][k] < 0:
            neg_row(k)
        k += 1

    snf = SnfResult(
        P=tuple(tuple(r) for r in p),
        S=tuple(tuple(r) for r in a),
        Q=tuple(tuple(r) for r in q),
        Qinv=tuple(tuple(r) for r in qinv),
    )
    return snf


def kernel_basis(t: Mat) -> Mat:
    """Integer basis (as columns) of {v : T v = 0}.

    From T = P*S*Q, the kernel is spanned by the last s columns of Q**-1
    where s is the number of zero invariant factors.
    """
    rows = len(t)
    cols = len(t[0]) if rows else 0
    if cols == 0:
        return ()
    if rows == 0:
        return mat_identity(cols)
    snf = smith_normal_form(t)
    rank = sum(1 for i in range(min(rows, cols)) if snf.S[i][i])
    kernel_cols = [tuple(snf.Qinv[i][j] for i in range(cols)) for j in range(rank, cols)]
    return mat_from_cols(kernel_cols)


def saturate(cols: Sequence[Vec]) -> List[Vec]:
    """Basis of the saturation (R-span intersect Z^n) of the column lattice."""
    if not cols:
        return []
    m = mat_from_cols(cols)
    orth = kernel_basis(mat_transpose(m))  # columns orthogonal-complement gens
    if not orth or not orth[0]:
        # full row space: saturation is all of Z^n
        return [tuple(r) for r in mat_identity(len(cols[0]))]
    sat = kernel_basis(mat_transpose(orth))
    return mat_cols(sat)


# ---------------------------------------------------------------------
# Exact shortest l-infinity vector by enumeration
# ---------------------------------------------------------------------

ENUM_RANK_CAP = 8


def _linf(v: Sequence[int]) -> int:
    return max(abs(x) for x in v)


def _sign_normalize(v: Vec) -> Vec:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def _tie_break_key(v: Vec):
    w = _sign_normalize(v)
    return (_linf(w), _dot(w, w), tuple(reversed(w)))


def best_vector(cands: Sequence[Vec]) -> Vec:
    """Deterministic choice among candidate vectors.

    Minimal l-infinity, then minimal l2, then (after normalizing the sign so
    the first nonzero entry is positive) lexicographically least reading the
    entries from the last coordinate down.
    """
    if not cands:
        raise LatticeError("no candidate vectors")
    return _sign_normalize(min(cands, key=_tie_break_key))


def shortest_linf_enumerate(cols: Sequence[Vec], rank_cap: int = ENUM_RANK_CAP) -> Vec:
    """Exact minimal-l-infinity nonzero lattice vector, by enumeration.

    The basis is LLL-reduced first; integer coefficient vectors are then
    enumerated inside the l2 ball that must contain any vector beating the
    best candidate so far (Fincke-Pohst pruning on the Gram-Schmidt data).
    """
    d = len(cols)
    if d == 0:
        raise LatticeError("empty basis")
    if d > rank_cap:
        raise LatticeError(f"rank {d} exceeds enumeration cap {rank_cap}")
    b = lll_reduce(cols)
    n = len(b[0])

    # exact GSO
    bstar: List[List[Fraction]] = []
    norms: List[Fraction] = []
    mu = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            mu[i][j] = Fraction(_dot(b[i], bstar[j])) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))

    best = min((tuple(v) for v in b), key=_tie_break_key)
    best_linf = _linf(best)
    bound = Fraction(n) * best_linf * best_linf  # l2^2 cap: ||v||_2^2 <= n*linf^2
    found: List[Vec] = [best]

    coeff = [0] * d

    def coeff_range(s: Fraction, budget: Fraction, norm2: Fraction):
        # integers c with (c + s)^2 * norm2 <= budget
        if norm2 == 0:
            raise LatticeError("degenerate basis")
        lim2 = budget / norm2
        r = float(lim2) ** 0.5
        lo = int(-r - float(s)) - 2
        hi = int(r - float(s)) + 2
        while (Fraction(lo) + s) ** 2 <= lim2 and lo > int(-r - float(s)) - 30:
            lo -= 1
        while (Fraction(lo) + s) ** 2 > lim2:
            lo += 1
            if lo > hi:
                return range(0)
        while (Fraction(hi) + s) ** 2 <= lim2 and hi < int(r - float(s)) + 30:
            hi += 1
        while (Fraction(hi) + s) ** 2 > lim2:
            hi -= 1
        return range(lo, hi + 1)

    def recurse(i: int, used: Fraction, tails: List[Fraction]):
        nonlocal best, best_linf, bound, found
        if i < 0:
            if all(c == 0 for c in coeff):
                return
            v = tuple(
                sum(coeff[j] * b[j][t] for j in range(d)) for t in range(n)
            )
            li = _linf(v)
            if li < best_linf:
                best_linf = li
                bound = Fraction(n) * li * li
                found = [v]
            elif li == best_linf:
                found.append(v)
            return
        s = tails[i]
        for c in coeff_range(s, bound - used, norms[i]):
            coeff[i] = c
            add = (Fraction(c) + s) ** 2 * norms[i]
            if used + add > bound:
                continue
            new_tails = [
                tails[j] + c * mu[i][j] if j < i else tails[j] for j in range(d)
            ]
            recurse(i - 1, used + add, new_tails)
        coeff[i] = 0

    recurse(d - 1, Fraction(0), [Fraction(0)] * d)
    return best_vector(found)


# ---------------------------------------------------------------------
# Randomized sieve for the shortest l-infinity vector
# ---------------------------------------------------------------------

_GRID_BITS = 64
_GRID = 1 << _GRID_BITS

#: Default per-(scaling, gamma) sample budget before dividing by dimension;
#: keeps the whole sieve run under a fraction of a second at rank <= 4.
SIEVE_DEFAULT_BATCH = 256


def _prng_stream(seed: int, label: bytes):
    """Deterministic counter-based stream of 64-bit integers."""
    counter = 0
    while True:
        h = hashlib.blake2b(
            label + seed.to_bytes(16, "little", signed=True) + counter.to_bytes(8, "little"),
            digest_size=64,
        ).digest()
        for off in range(0, 64, 8):
            yield int.from_bytes(h[off : off + 8], "little")
        counter += 1


def _floor_sqrt_frac(x: Fraction) -> int:
    """floor(sqrt(x)) for a nonnegative rational x."""
    if x < 0:
        raise LatticeError("sqrt of negative")
    return isqrt(x.numerator * x.denominator) // x.denominator


def _ratsqrt_lower(x: Fraction, bits: int = _GRID_BITS) -> Fraction:
    """Rational lower bound on sqrt(x) with denominator 2**bits."""
    scaled = x * (1 << (2 * bits))
    return Fraction(isqrt(scaled.numerator // scaled.denominator), 1 << bits)


def _ceil_log2(x: Fraction) -> int:
    n = 0
    v = Fraction(1)
    while v < x:
        v *= 2
        n += 1
    return n


def shortest_linf_sieve(
    cols: Sequence[Vec],
    seed: int,
    sample_scale: Optional[Fraction] = None,
) -> Vec:
    """Randomized shortest-l-infinity search by sieving sampled points.

    Outline: LLL gives an approximate shortest vector lambda; over 2n
    scalings of the lattice by 1.5 and a sweep of gamma from 3/2 to
    3*sqrt(n)+1 (by factors of 3/2), sample points in the gamma-ball of the
    scaled lattice's span, reduce each modulo the parallelepiped of the
    basis (so sample minus residue is a lattice vector), then repeatedly
    extract pivot subsets and re-center the rest until every surviving
    residue lies within radius 2*gamma+1 of a pivot.  Candidate vectors are
    the pairwise differences of the surviving lattice vectors; the overall
    l-infinity minimum wins.

    All arithmetic is exact: samples live on a 2**-128 grid in basis
    coordinates, so every residue is an integer vector over a fixed power
    of two and every comparison is integral.

    The theoretical sample count 2**((7+ceil(log2 gamma))*n)*log2(r0) is
    scaled down by `sample_scale` (default: clamp to at most 10**5 and at
    least enough samples to exercise the sieve).
    """
    d = len(cols)
    if d == 0:
        raise LatticeError("empty basis")
    b = lll_reduce(cols)
    n = len(b[0])

    gram = [[_dot(u, v) for v in b] for u in b]
    lam2 = min(_dot(v, v) for v in b)  # ||lambda||_2^2 (rational scale anchor)
    if lam2 == 0:
        raise LatticeError("zero vector in basis")

    rng = _prng_stream(seed, b"sieve")

    # squared ambient-coordinate norms of the basis vectors
    bnorm2 = [gram[i][i] for i in range(d)]

    best: Optional[Vec] = None
    best_key = None
    DBITS = 2 * _GRID_BITS
    DEN = 1 << DBITS

    gamma_cap_sq = Fraction(9 * n) + Fraction(6) * _ratsqrt_lower(Fraction(n)) + 1

    for k in range(1, 2 * n + 1):
        scale2 = Fraction((3 ** (2 * k)), (2 ** (2 * k))) / lam2  # sigma_k^2
        # r0 = n * max_i ||sigma_k b_i||_2, via a rational upper bound
        r0_sq = Fraction(n * n) * max(bnorm2) * scale2
        r0 = Fraction(_floor_sqrt_frac(r0_sq) + 1)
        gamma = Fraction(3, 2)
        while gamma * gamma <= gamma_cap_sq:
            m_formula = (1 << ((7 + _ceil_log2(gamma)) * n)) * max(1, _ceil_log2(r0))
            if sample_scale is None:
                m = min(m_formula, max(16, SIEVE_DEFAULT_BATCH // n))
            else:
                m = max(1, int(m_formula * sample_scale))
            # sampling radius in original coordinates: gamma / sigma_k
            rho2 = gamma * gamma / scale2
            rn, rd = rho2.numerator, rho2.denominator

            xs: List[Vec] = []  # numerators over DEN, in basis coordinates
            attempts = 0
            while len(xs) < m and attempts < 40 * m:
                attempts += 1
                u = [next(rng) - (_GRID // 2) for _ in range(d)]
                q = sum(
                    u[i] * u[j] * gram[i][j] for i in range(d) for j in range(d)
                )
                if q <= 0:
                    continue
                w = next(rng) + 1  # radius factor numerator in (0, 2^64]
                # radius law for uniform ball sampling: target radius^2 =
                # rho2 * (w/2^64)^(2/d); the d-th root is taken on the grid
                ra = _grid_nth_root(w, d)
                # scale factor c = cn/2^128 with c^2*q <= rho2*(ra/2^64)^2
                cn = isqrt(rn * ra * ra * (1 << (2 * _GRID_BITS)) // (rd * q))
                if cn == 0:
                    continue
                # basis coordinates of the sample are u_i*cn / 2^128, i.e.
                # exact numerators over DEN with no truncation
                xs.append(tuple(ui * cn for ui in u))
            if not xs:
                gamma = gamma * Fraction(3, 2)
                continue

            # reduce modulo the parallelepiped: split basis coords into
            # integer part (lattice vector) and fractional residue
            lat = [tuple(num // DEN for num in x) for x in xs]  # floor
            ys = [tuple(num - DEN * fl for num, fl in zip(x, f)) for x, f in zip(xs, lat)]
            # ys are basis-coordinate numerators over DEN in [0, DEN)

            S = list(range(len(xs)))
            r = r0
            # threshold compare: ||y_i - y_j||^2 (ambient, scaled) <= (r/2)^2
            # ambient scaled norm^2 of basis-coord numerator vector z:
            #   (z G z) * scale2 / DEN^2

            def close2(zi, zj, thresh_num, thresh_den):
                z = [a - c for a, c in zip(zi, zj)]
                q = sum(
                    z[i] * z[j] * gram[i][j] for i in range(d) for j in range(d)
                )
                return q * thresh_den <= thresh_num

            max_rounds = 200
            rounds = 0
            while r > 2 * gamma + 1 and rounds < max_rounds and S:
                rounds += 1
                half = r / 2
                t = half * half / scale2 * (DEN * DEN)
                tn, td = t.numerator, t.denominator
                J: List[int] = []
                eta = {}
                for i in S:
                    pivot = None
                    for j in J:
                        if close2(ys[i], ys[j], tn, td):
                            pivot = j
                            break
                    if pivot is None:
                        J.append(i)
                    else:
                        eta[i] = pivot
                S = [i for i in S if i not in set(J)]
                for i in S:
                    j = eta[i]
                    #  y_i += x_j - y_j  (keeps the grid); lattice part moves too
                    ys[i] = tuple(a + (xb - yb) for a, xb, yb in zip(ys[i], xs[j], ys[j]))
                    # x_i - y_i picks up -(x_j - y_j)
                    lat[i] = tuple(a - lb for a, lb in zip(lat[i], lat[j]))
                r = r / 2 + gamma

            surviving = [lat[i] for i in S]
            seen = set()
            for ii in range(len(surviving)):
                for jj in range(ii + 1, len(surviving)):
                    diff = tuple(
                        a - c for a, c in zip(surviving[ii], surviving[jj])
                    )
                    if not any(diff) or diff in seen:
                        continue
                    seen.add(diff)
                    for dd in (diff, tuple(-x for x in diff)):
                        vec = tuple(
                            sum(dd[t_] * b[t_][s_] for t_ in range(d))
                            for s_ in range(n)
                        )
                        key = _tie_break_key(vec)
                        if best_key is None or key < best_key:
                            best_key, best = key, vec
            gamma = gamma * Fraction(3, 2)

    if best is None:
        raise SieveFailure("sieve produced no nonzero candidate; retry with a new seed")
    return _sign_normalize(best)


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for nonnegative integer x (Newton iteration)."""
    if x < 2 or k == 1:
        return x
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _grid_nth_root(w: int, d: int) -> int:
    """floor(2^64 * (w/2^64)^(1/d)) for integer w in (0, 2^64]."""
    if d == 1:
        return w
    return _iroot(w << (_GRID_BITS * (d - 1)), d)


# ---------------------------------------------------------------------
# Subset-sum gadget and Hamming-weight search
# ---------------------------------------------------------------------


def subset_sum_matrix(z: Sequence[int], t: int, w: int) -> Mat:
    """Gadget whose kernel has a weight-(w+1) vector iff some w-subset of z
    sums to t.

    Rows are the power sums z_i**e for e = 0..w; the final column is all
    zeros except a 1 in the next-to-last row and t in the last row.
    """
    n = len(z)
    if len(set(z)) != n:
        raise LatticeError("subset-sum entries must be distinct")
    if not (1 <= w < n):
        raise LatticeError("need 1 <= w < len(z)")
    rows = []
    for e in range(w + 1):
        tail = 0
        if e == w - 1:
            tail = 1
        elif e == w:
            tail = t
        rows.append(tuple(zi**e for zi in z) + (tail,))
    return tuple(rows)


MIN_WEIGHT_RANK_CAP = 10


def min_hamming_weight_vector(
    cols: Sequence[Vec], wmax: int
) -> Optional[Tuple[Vec, int]]:
    """Minimal-Hamming-weight nonzero vector in the column lattice.

    Brute force: for each candidate support (enumerated in order of
    increasing weight, ties by last-position-first), solve for lattice
    vectors vanishing outside the support.  Rank-capped.
    """
    d = len(cols)
    if d == 0:
        return None
    if d > MIN_WEIGHT_RANK_CAP:
        raise LatticeError(f"rank {d} exceeds weight-search cap {MIN_WEIGHT_RANK_CAP}")
    n = len(cols[0])
    from itertools import combinations

    basis_rows = mat_from_cols(cols)  # n x d
    for w in range(1, min(wmax, n) + 1):
        supports = sorted(
            combinations(range(n), w), key=lambda s: tuple(reversed(s))
        )
        best: List[Vec] = []
        for supp in supports:
            sset = set(supp)
            off = [i for i in range(n) if i not in sset]
            # coefficients v with (B v)_i = 0 for i outside the support
            sub = tuple(basis_rows[i] for i in off)
            ker = kernel_basis(sub) if sub else mat_identity(d)
            kc = mat_cols(ker)
            for coeffv in kc:
                vec = tuple(
                    sum(coeffv[j] * cols[j][i] for j in range(d)) for i in range(n)
                )
                if any(vec) and sum(1 for x in vec if x) == w:
                    best.append(vec)
        if best:
            return best_vector(best), w
    return None
