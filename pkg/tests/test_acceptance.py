"""Acceptance suite: end-to-end and statistical property criteria.

Each test prints a single CRITERION line on success; a failure surfaces as
an ordinary pytest failure for that criterion.
"""

import itertools
import random
import time
from fractions import Fraction
from math import comb, lcm

import pytest

from sparsemult import lattice
from sparsemult.ffield import Fq, FqElem, binomial_multiple_fq, element_order, order_gadget, spmul_fq_bruteforce
from sparsemult.polys import QQ, DensePoly, SparsePoly, sparse_primitive_positive
from sparsemult.qbinomial import binomial_multiple_q, risman_degree_cap
from sparsemult.qfactor import cyclotomic, is_irreducible_q, split_cyclotomic
from sparsemult.qsparse import degree_bound, sparsest_multiple_q
from sparsemult.sparsebound import brute_force_sparsest, sparsest_bounded


def ints(*cs):
    return DensePoly.from_ints(QQ, list(cs))


WORKED_POLY = ints(4, -2, 1, 1, 4, -4, 7, -8, 10, -5, 1)


def test_criterion_1_worked_example_end_to_end():
    start = time.monotonic()
    split = split_cyclotomic(WORKED_POLY)
    hhat = sparsest_bounded(split.noncyclo, 5, 20, 1000)
    assert [(c, e) for c, e in hhat.terms] == [(64, 0), (259, 6), (1, 12)]
    htil = sparsest_bounded(WORKED_POLY, 10, 20, 1000)
    assert [(c, e) for c, e in htil.terms] == [
        (8, 0), (3, 3), (9, 4), (-4, 5), (10, 6), (-9, 7), (12, 8), (-3, 10), (1, 11),
    ]
    res = sparsest_multiple_q(WORKED_POLY, 10, 1000, degree_cap_override=20)
    assert [(c, e) for c, e in res.multiple.terms] == [
        (-64, 0), (-259, 6), (-1, 12), (64, 30), (259, 36), (1, 42),
    ]
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"CRITERION 1: PASS (worked example end-to-end, {elapsed:.1f}s)")


def test_criterion_2_degree_bound_figure():
    got = degree_bound(10, 10, 1000)
    target = 11195728
    rel = abs(got - target) / target
    assert rel <= 0.0005
    print(f"CRITERION 2: PASS (degree_bound(10,10,1000) = {got}, rel err {rel:.2e})")


def _brute_binomial_degree(f, scan_to):
    """Least m with x^m congruent to a constant mod f, or None."""
    fm = f.monic()
    x = DensePoly.x(QQ)
    r = x.rem(fm)
    for m in range(1, scan_to + 1):
        if r.degree <= 0:
            return m
        r = (r * x).rem(fm)
    return None


def test_criterion_3_binomial_q_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random("acceptance-3")
    pool = []
    while len(pool) < 40:
        d = rng.randrange(1, 5)
        coeffs = [rng.randint(-20, 20) for _ in range(d)] + [1]
        if coeffs[0] == 0:
            continue
        g = ints(*coeffs)
        if is_irreducible_q(g):
            pool.append(g)
    for trial in range(200):
        f = DensePoly.one(QQ)
        for _ in range(rng.randrange(1, 4)):
            f = f * rng.choice(pool)
        res = binomial_multiple_q(f)
        scan_to = risman_degree_cap(f.degree)
        if res is not None:
            scan_to = max(scan_to, res.degree)
        brute = _brute_binomial_degree(f, scan_to)
        if res is None:
            assert brute is None, (trial, [str(c) for c in f.coeffs], brute)
        else:
            assert res.xpower == 0
            assert brute == res.degree, (trial, brute, res.degree)
    elapsed = time.monotonic() - start
    assert elapsed < 300
    print(f"CRITERION 3: PASS (200/200 binomial-Q oracle agreements, {elapsed:.1f}s)")


def test_criterion_4_binomial_fq_oracle_equivalence():
    start = time.monotonic()
    F2, F3 = Fq(2), Fq(3)
    checked = 0

    def check(f):
        nonlocal checked
        b, core = f.strip_x()
        if core.degree == 0:
            return
        res = binomial_multiple_fq(f)
        sp = spmul_fq_bruteforce(f, 2, 40)
        if sp is None:
            assert res.degree > 40
        else:
            assert sp.degree == res.degree, ([c for c in f.coeffs], sp.degree, res.degree)
        checked += 1

    for d in range(1, 7):
        for coeffs in itertools.product(range(2), repeat=d):
            check(DensePoly.from_ints(F2, list(coeffs) + [1]))
    rng = random.Random("acceptance-4")
    done = 0
    while done < 200:
        d = rng.randrange(1, 6)
        coeffs = [rng.randrange(3) for _ in range(d)] + [1]
        f = DensePoly.from_ints(F3, coeffs)
        if f.strip_x()[1].degree == 0:
            continue
        check(f)
        done += 1
    elapsed = time.monotonic() - start
    assert elapsed < 300
    print(f"CRITERION 4: PASS ({checked} binomial-Fq oracle agreements, {elapsed:.1f}s)")


def test_criterion_5_order_gadget_hardness():
    start = time.monotonic()
    cases = 0
    for F in (Fq(2, 3), Fq(3, 2), Fq(2, 4)):
        base = F.base
        for k in range(1, F.order):
            a = FqElem(F, F.from_key(k))
            o = element_order(a)
            for t in (2, 3):
                if o < t:
                    continue
                gad = order_gadget(a, t)
                sp = spmul_fq_bruteforce(gad, t, o)
                expected = SparsePoly.make(
                    base, [(base.neg(base.one), 0), (base.one, o)]
                )
                assert sp == expected, (F.order, k, t, o)
                cases += 1
    elapsed = time.monotonic() - start
    print(f"CRITERION 5: PASS ({cases} gadget cases confirm x^o - 1, {elapsed:.1f}s)")


def _abs_det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            fac = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= fac * a[k][j]
    return abs(det)


def test_criterion_6_lattice_suite():
    start = time.monotonic()
    rng = random.Random("acceptance-6")
    # part a: Smith normal form on 500 random matrices
    for _ in range(500):
        r = rng.randrange(1, 7)
        c = rng.randrange(1, 7)
        t = tuple(tuple(rng.randint(-50, 50) for _ in range(c)) for _ in range(r))
        snf = lattice.smith_normal_form(t)
        assert lattice.mat_mul(lattice.mat_mul(snf.P, snf.S), snf.Q) == t
        assert _abs_det(snf.P) == 1 and _abs_det(snf.Q) == 1
        diag = snf.invariant_factors
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert b == 0 or (a != 0 and b % a == 0)
    # part b: sieve vs enumeration agreement >= 95%
    hits = total = 0
    for i in range(100):
        n = 1 + i % 4
        cols = [tuple(rng.randint(-10, 10) for _ in range(n)) for _ in range(n)]
        try:
            exact = max(map(abs, lattice.shortest_linf_enumerate(cols)))
        except lattice.LatticeError:
            continue
        for seed in range(20):
            got = max(map(abs, lattice.shortest_linf_sieve(cols, seed=seed)))
            total += 1
            hits += got == exact
    assert total >= 1000
    rate = hits / total
    assert rate >= 0.95, f"sieve agreement {rate:.3f}"
    # part c: scaling consistency of the exact enumeration
    for _ in range(30):
        n = rng.randrange(1, 4)
        cols = [tuple(rng.randint(-10, 10) for _ in range(n)) for _ in range(n)]
        try:
            v = lattice.shortest_linf_enumerate(cols)
        except lattice.LatticeError:
            continue
        k = rng.choice([2, 3, 5])
        vk = lattice.shortest_linf_enumerate([tuple(k * x for x in c) for c in cols])
        assert max(map(abs, vk)) == k * max(map(abs, v))
    elapsed = time.monotonic() - start
    print(
        f"CRITERION 6: PASS (SNF 500/500, sieve agreement {hits}/{total} = "
        f"{rate:.1%}, scaling ok, {elapsed:.0f}s)"
    )


def _nullspace_basis(rows):
    """Fraction RREF nullspace of a small matrix given as row tuples."""
    rows = [[Fraction(x) for x in r] for r in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def test_criterion_7_subset_sum_gadget():
    rng = random.Random("acceptance-7")
    checked = 0
    for _ in range(200):
        n = rng.randrange(2, 7)
        z = rng.sample(range(-9, 10), n)
        w = rng.randrange(1, n)
        t = rng.randint(-20, 20)
        m = lattice.subset_sum_matrix(z, t, w)
        # brute subset-sum side
        has_subset = any(
            sum(sub) == t for sub in itertools.combinations(z, w)
        )
        # brute kernel side: weight-(w+1) vector over any support
        has_vector = False
        ncols = n + 1
        for supp in itertools.combinations(range(ncols), w + 1):
            sub = [tuple(row[j] for j in supp) for row in m]
            basis = _nullspace_basis(sub)
            if not basis:
                continue
            # a fully-nonzero kernel vector exists unless some coordinate
            # vanishes on the whole nullspace
            if all(any(v[i] for v in basis) for i in range(w + 1)):
                has_vector = True
                break
        assert has_vector == has_subset, (z, t, w)
        checked += 1
    print(f"CRITERION 7: PASS ({checked} subset-sum gadget instances)")


def test_criterion_8_multiplicity_bound():
    from sparsemult.qsparse import max_multiplicity_bound_check

    start = time.monotonic()
    rng = random.Random("acceptance-8")
    for _ in range(1000):
        s = rng.randrange(2, 6)
        exps = [0] + rng.sample(range(1, 21), s - 1)
        terms = [
            (Fraction(rng.choice([-1, 1]) * rng.randint(1, 9)), e) for e in exps
        ]
        h = SparsePoly.make(QQ, terms)
        assert max_multiplicity_bound_check(h) <= h.sparsity - 1
    elapsed = time.monotonic() - start
    print(f"CRITERION 8: PASS (1000 multiplicity-bound checks, {elapsed:.0f}s)")


def test_criterion_9_cyclotomic_power_minimality():
    rng = random.Random("acceptance-9")
    done = 0
    while done < 30:
        L = rng.randrange(1, 13)
        divisors = [d for d in range(1, L + 1) if L % d == 0]
        E = rng.randrange(1, 4)
        chosen = {L: E}
        for d in rng.sample(divisors, rng.randrange(0, len(divisors))):
            chosen.setdefault(d, rng.randrange(1, E + 1))
        f = DensePoly.one(QQ)
        for idx, mult in chosen.items():
            for _ in range(mult):
                f = f * cyclotomic(idx)
        if f.degree > 25:
            continue
        res = sparsest_multiple_q(f, E + 1, 10)
        expected = [
            (Fraction((-1) ** (E - k) * comb(E, k)), L * k) for k in range(E + 1)
        ]
        assert list(res.multiple.terms) == sorted(expected, key=lambda p: p[1]), (
            chosen, [(str(c), e) for c, e in res.multiple.terms]
        )
        if E >= 2 and 2 * L <= 25:
            assert brute_force_sparsest(f, E, 2 * L, 100) is None, chosen
        done += 1
    print(f"CRITERION 9: PASS (30 cyclotomic-power cases)")
