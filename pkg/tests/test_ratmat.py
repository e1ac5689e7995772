from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie2alg.ratmat import (
    LinAlgError,
    NotSubcomplexError,
    RatMatrix,
    Subspace,
    column_space_basis,
    completion_columns,
    kernel_basis,
    quotient_dim,
    rank,
    rat,
    solve,
)


def M(rows):
    return RatMatrix.from_rows(rows)


def test_rat_parsing():
    assert rat("2/4") == Fraction(1, 2)
    assert rat("-3") == Fraction(-3)
    assert rat(5) == Fraction(5)
    assert str(rat("6/4")) == "3/2"
    with pytest.raises(LinAlgError):
        rat(1.5)


def test_rank_examples():
    assert rank(RatMatrix.zeros(0, 0)) == 0
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(RatMatrix.identity(2)).dim == 0
    k = kernel_basis(M([[1, 1]]))
    assert k.dim == 1
    v = k.basis.col(0)
    assert v[0] == -v[1] and v[0] != 0
    assert kernel_basis(RatMatrix.zeros(3, 3)).dim == 3


def test_solve_examples():
    ident = RatMatrix.identity(3)
    b = [rat(1), rat("2/3"), rat(-5)]
    assert solve(ident, b) == b
    x = solve(M([[1, 1]]), [2])
    assert x is not None and x[0] + x[1] == 2
    assert solve(M([[1], [0]]), [0, 1]) is None


def test_solve_shape_check():
    with pytest.raises(LinAlgError):
        solve(RatMatrix.identity(2), [1, 2, 3])


def test_quotient_dim_examples():
    ker = Subspace(3, RatMatrix.identity(3))
    img = Subspace(3, M([[1], [0], [0]]))
    assert quotient_dim(ker, img) == 2
    assert quotient_dim(img, img) == 0
    other = Subspace(3, M([[1], [1], [0]]))
    plane = Subspace(3, M([[1, 0], [0, 1], [0, 0]]))
    assert quotient_dim(plane, other) == 1
    line = Subspace(3, M([[0], [0], [1]]))
    with pytest.raises(NotSubcomplexError):
        quotient_dim(plane, line)


small_entries = st.integers(min_value=-5, max_value=5)


@st.composite
def matrices(draw, max_dim=8):
    n = draw(st.integers(min_value=0, max_value=max_dim))
    m = draw(st.integers(min_value=0, max_value=max_dim))
    rows = [[draw(small_entries) for _ in range(m)] for _ in range(n)]
    return RatMatrix.from_rows(rows, rows=n, cols=m)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_columns_annihilated(m):
    k = kernel_basis(m)
    for j in range(k.dim):
        assert all(x == 0 for x in m.apply(k.basis.col(j)))


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=6), st.data())
def test_solve_substitutes_back(m, data):
    x = [data.draw(small_entries) for _ in range(m.cols)]
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None
    assert m.apply(sol) == b


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=6), st.data())
def test_rank_invariance(m, data):
    r0 = rank(m)
    rows = m.to_rows()
    if rows:
        i = data.draw(st.integers(0, m.rows - 1))
        j = data.draw(st.integers(0, m.rows - 1))
        rows[i], rows[j] = rows[j], rows[i]
        c = data.draw(st.integers(min_value=1, max_value=7))
        k = data.draw(st.integers(0, m.rows - 1))
        rows[k] = [c * x for x in rows[k]]
    perm_cols = RatMatrix.from_rows([list(reversed(r)) for r in rows], rows=m.rows, cols=m.cols)
    assert rank(RatMatrix.from_rows(rows, rows=m.rows, cols=m.cols)) == r0
    assert rank(perm_cols) == r0


def test_matmul_and_apply_agree():
    a = M([[1, 2, 0], [0, "1/2", -1]])
    b = M([[1, 0], [3, 1], [0, 4]])
    p = a @ b
    for j in range(2):
        assert p.col(j) == a.apply(b.col(j))


def test_column_space_and_completion():
    m = M([[1, 2, 0], [2, 4, 0], [0, 0, 1]])
    cs = column_space_basis(m)
    assert cs.dim == 2
    assert cs.basis.col(0) == m.col(0)
    inside = M([[1], [0], [0]])
    assert completion_columns(inside, 3) == [1, 2]


def test_subspace_rejects_dependent_basis():
    with pytest.raises(LinAlgError):
        Subspace(2, M([[1, 2], [2, 4]]))
