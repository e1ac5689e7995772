from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie2alg.fixtures import abelian, adjoint_linrep, heis3, sl2
from lie2alg.liealg import (
    LieAlgebra,
    LinCochain,
    LinRep,
    bracket,
    ce_matrix,
    check_lie_algebra,
    check_linrep,
    dga_pullback_check,
    is_homomorphism,
    semidirect_sum_linrep,
)
from lie2alg.ratmat import RatMatrix, kernel_basis, rank

Q = Fraction


def test_bracket_examples():
    L = sl2()
    assert bracket(L, [1, 0, 0], [0, 1, 0]) == [Q(0), Q(2), Q(0)]
    assert bracket(L, [3, -1, 2], [3, -1, 2]) == [Q(0)] * 3
    H = heis3()
    assert bracket(H, [1, 0, 0], [0, 0, 1]) == [Q(0)] * 3


def test_fixtures_are_lie_algebras():
    for L in (sl2(), heis3(), abelian(4)):
        assert check_lie_algebra(L) == []


def test_antisymmetry_violation_detected():
    L = LieAlgebra(2, ("a", "b"), {(0, 1): {0: 1}, (1, 0): {0: 1}})
    rep = check_lie_algebra(L)
    assert any(v["kind"] == "antisymmetry" and v["pair"] == (0, 1) for v in rep)


def test_jacobi_violation_pinpointed():
    # [a,b]=c, [a,c]=a breaks Jacobi on (a,b,c); brute force over all triples
    L = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
    rep = check_lie_algebra(L)
    jac = [v for v in rep if v["kind"] == "jacobi"]
    assert jac and all(v["triple"] == (0, 1, 2) for v in jac)


def test_is_homomorphism_examples():
    L = sl2()
    assert is_homomorphism(L, L, RatMatrix.identity(3))
    assert is_homomorphism(L, L, RatMatrix.zeros(3, 3))
    # swapping e and f without negating h breaks [e,f]=h
    swap = RatMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert not is_homomorphism(L, L, swap)


def test_ce_trivial_abelian_is_zero():
    L = abelian(1)
    rep = LinRep.trivial(L, 1)
    for q in range(3):
        assert ce_matrix(rep, q).is_zero()


def test_ce_sl2_trivial_first_cohomology_vanishes():
    rep = LinRep.trivial(sl2(), 1)
    d1 = ce_matrix(rep, 1)
    assert rank(d1) == 3
    assert kernel_basis(d1).dim == 0


def test_ce_square_zero_sl2_adjoint():
    rep = adjoint_linrep(sl2())
    assert check_linrep(rep) == []
    for q in range(3):
        assert (ce_matrix(rep, q + 1) @ ce_matrix(rep, q)).is_zero()


def test_ce_degree_above_dimension_is_zero_width():
    rep = LinRep.trivial(abelian(2), 1)
    m = ce_matrix(rep, 2)
    assert m.rows == 0 and m.cols == 1


def test_lincochain_alternation():
    L = sl2()
    w = LinCochain(L, 1, 2, {(0, 2): (Q(5),)})
    assert w.evaluate([[1, 0, 0], [0, 0, 1]]) == [Q(5)]
    assert w.evaluate([[0, 0, 1], [1, 0, 0]]) == [Q(-5)]
    assert w.evaluate([[1, 0, 0], [1, 0, 0]]) == [Q(0)]


@st.composite
def vectors(draw, dim):
    return [draw(st.integers(-3, 3)) for _ in range(dim)]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_lincochain_permutation_sign(data):
    L = sl2()
    key = (0, 1, 2)
    w = LinCochain(L, 1, 3, {key: (Q(1),)})
    vs = [data.draw(vectors(3)) for _ in range(3)]
    base = w.evaluate(vs)[0]
    assert w.evaluate([vs[1], vs[0], vs[2]])[0] == -base
    assert w.evaluate([vs[0], vs[0], vs[2]])[0] == 0


@st.composite
def small_algebras(draw):
    dim = draw(st.integers(1, 3))
    which = draw(st.sampled_from(["abelian", "heis", "sl2"]))
    if which == "sl2":
        return sl2()
    if which == "heis":
        return heis3()
    return abelian(dim)


@settings(max_examples=100, deadline=None)
@given(small_algebras(), small_algebras(), st.data())
def test_dga_pullback_matches_homomorphism(src, dst, data):
    rows = [[data.draw(st.integers(-2, 2)) for _ in range(src.dim)] for _ in range(dst.dim)]
    m = RatMatrix.from_rows(rows, rows=dst.dim, cols=src.dim)
    assert dga_pullback_check(src, dst, m) == is_homomorphism(src, dst, m)


def test_semidirect_sum_linrep_structure():
    rep = adjoint_linrep(sl2())
    L = semidirect_sum_linrep(rep)
    assert L.dim == 6
    assert check_lie_algebra(L) == []
    # module part is abelian
    assert L.bracket_basis(3, 4) == {}


def test_check_linrep_flags_bad_rep():
    L = sl2()
    bad = LinRep(L, 2, tuple(RatMatrix.from_rows([[1, 0], [0, 0]]) for _ in range(3)))
    assert check_linrep(bad) != []
