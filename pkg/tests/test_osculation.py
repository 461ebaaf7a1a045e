from itertools import product
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricdual.config import validate
from toricdual.families import box, segment, simplex, togliatti
from toricdual.osculation import (
    falling_factorial_matrix,
    hilbert_function,
    is_generically_jet_spanned,
    jet_matrix,
    jet_rows,
    multiindices,
)


def test_multiindex_order():
    idx = multiindices(2, 2)
    assert len(idx) == 6
    assert idx == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert multiindices(1, 0) == [(0, 0)]
    assert len(multiindices(3, 2)) == 10


@pytest.mark.parametrize("n,k", [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (4, 2)])
def test_multiindex_count(n, k):
    assert len(multiindices(n, k)) == comb(n + k, k)


def test_jet_rows_are_monomials():
    pts = [(2, 3), (1, 5)]
    rows = jet_rows(pts, 2, 2)
    expected = [[1, 1], [2, 1], [3, 5], [4, 1], [6, 5], [9, 25]]
    assert rows == expected


def test_twisted_cubic_jet():
    jet = jet_matrix(segment(3), 2)
    assert sorted(map(tuple, jet.matrix.to_rows())) == sorted([(1, 1, 1, 1), (0, 1, 2, 3), (0, 1, 4, 9)])
    assert jet.d_k == 2 and jet.c_k == 1


def test_unit_square_k2():
    jet = jet_matrix(box(1, 1), 2)
    assert jet.matrix.rows == 6 and jet.rank == 4 and jet.c_k == 0


def test_hilbert_examples():
    grid = box(2, 2)
    assert [hilbert_function(grid, k) for k in (1, 2, 3, 4)] == [3, 6, 8, 9]
    assert [hilbert_function(segment(3), k) for k in (1, 2, 3, 4)] == [2, 3, 4, 4]
    point = validate([(5, 7)])
    assert all(hilbert_function(point, k) == 1 for k in range(5))


def test_generic_spanning():
    assert not is_generically_jet_spanned(togliatti(), 2)
    for n, k in product((1, 2, 3), (1, 2, 3)):
        assert is_generically_jet_spanned(simplex(n, k), k)
    for k in (1, 2, 3, 4):
        assert is_generically_jet_spanned(segment(k + 1), k)


def test_falling_factorial_examples():
    assert falling_factorial_matrix(1, 2).to_rows() == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    m = falling_factorial_matrix(2, 1).to_rows()
    assert m == [[1, 1, 1], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("n,k", [(1, 4), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_falling_factorial_unitriangular(n, k):
    m = falling_factorial_matrix(n, k).to_rows()
    size = comb(n + k, k)
    assert len(m) == size
    for i in range(size):
        assert m[i][i] == 1
        assert all(m[i][j] == 0 for j in range(i))


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=9, unique=True),
       st.integers(1, 3))
def test_hilbert_matches_sympy(points, k):
    x, y = sympy.symbols("x y")
    monos = sorted(sympy.itermonomials([x, y], k), key=sympy.default_sort_key)
    m = sympy.Matrix([[mono.subs({x: p[0], y: p[1]}) for p in points] for mono in monos])
    jet = jet_matrix(validate(points), k)
    assert jet.rank == m.rank()
    assert jet.rank + jet.c_k == len(points)
