"""Bounded sparsest-multiple search and its brute-force oracle."""

import pytest
from hypothesis import given, settings, strategies as st

from sparsemult.polys import QQ, DensePoly, PolynomialError, sparse_height
from sparsemult.sparsebound import (
    brute_force_sparsest,
    convolution_matrix,
    sparsest_bounded,
    subsets_reverse_lex,
)


def ints(*cs):
    return DensePoly.from_ints(QQ, list(cs))


def test_convolution_matrix_shape():
    # f = x - 2: multiplication by f maps deg<=n-1-1... rows n+1, cols n-d+1
    m = convolution_matrix(ints(-2, 1), 3)
    assert m == ((-2, 0, 0), (1, -2, 0), (0, 1, -2), (0, 0, 1))


def test_subsets_reverse_lex_order():
    got = list(subsets_reverse_lex(4, 2))
    # anchored at 0; ordered by the highest differing coordinate
    assert got == [(0, 1), (0, 2), (0, 3), (0, 4)]
    got3 = list(subsets_reverse_lex(3, 3))
    assert got3 == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.integers(2, 4))
def test_subsets_reverse_lex_complete(n, s):
    got = list(subsets_reverse_lex(n, s))
    assert len(got) == len(set(got))
    import itertools

    expected = {
        (0,) + rest
        for rest in itertools.combinations(range(1, n + 1), s - 1)
    }
    assert set(got) == expected
    # reverse-lex: compare reversed tuples
    keys = [tuple(reversed(t)) for t in got]
    assert keys == sorted(keys)


def test_sparsest_bounded_binomial():
    h = sparsest_bounded(ints(1, 1, 1), 2, 6, 2)  # x^2+x+1 -> x^3-1
    assert [(c, e) for c, e in h.terms] == [(-1, 0), (1, 3)]


def test_sparsest_bounded_self():
    h = sparsest_bounded(ints(-2, 1), 2, 4, 16)
    assert [(c, e) for c, e in h.terms] == [(-2, 0), (1, 1)]


def test_sparsest_bounded_none():
    # x^2 - x - 1 has no 2-sparse multiple of degree <= 8 with height <= 3
    assert sparsest_bounded(ints(-1, -1, 1), 2, 8, 3) is None


def test_sparsest_bounded_rejects_original():
    with pytest.raises(PolynomialError):
        sparsest_bounded(ints(0, 1, 1), 2, 4, 10)


def test_brute_force_matches_search():
    cases = [
        (ints(1, 1, 1), 2, 8, 5),
        (ints(-2, 1), 2, 4, 16),
        (ints(-1, -1, 1), 3, 10, 10),
        (ints(2, 0, 1), 2, 8, 10),
        (ints(1, 2, 3, 1), 3, 10, 30),
    ]
    for f, t, n, c in cases:
        a = sparsest_bounded(f, t, n, c)
        b = brute_force_sparsest(f, t, n, c)
        if a is None or b is None:
            assert a is None and b is None
        else:
            assert a == b, (f.coeffs, a.terms, b.terms)


def test_brute_force_caps():
    with pytest.raises(PolynomialError):
        brute_force_sparsest(ints(1, 1), 5, 10, 10)


def test_height_bound_respected():
    h = sparsest_bounded(ints(-1, -1, 1), 4, 12, 10)
    if h is not None:
        assert sparse_height(h) <= 10
