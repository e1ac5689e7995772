"""Built-in desk-scale fixtures shared by the test suite and the CLI registry."""

from __future__ import annotations

from fractions import Fraction

from .liealg import LieAlgebra, LinRep
from .ratmat import RatMatrix

Q1 = Fraction(1)


def sl2() -> LieAlgebra:
    """Basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    return LieAlgebra.from_brackets(
        3,
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        names=("h", "e", "f"),
    )


def heis3() -> LieAlgebra:
    """Heisenberg algebra, basis (x, y, z): [x,y]=z."""
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, names=("x", "y", "z"))


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.abelian(n)


def gl2() -> LieAlgebra:
    """gl(2), basis (E11, E12, E21, E22)."""
    mats = {
        0: RatMatrix.from_rows([[1, 0], [0, 0]]),
        1: RatMatrix.from_rows([[0, 1], [0, 0]]),
        2: RatMatrix.from_rows([[0, 0], [1, 0]]),
        3: RatMatrix.from_rows([[0, 0], [0, 1]]),
    }
    flat = {k: (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)) for k, m in mats.items()}
    brackets = {}
    for i in range(4):
        for j in range(i + 1, 4):
            c = mats[i] @ mats[j] - mats[j] @ mats[i]
            cf = (c.get(0, 0), c.get(0, 1), c.get(1, 0), c.get(1, 1))
            coeffs = {}
            for k in range(4):
                if cf[k]:
                    coeffs[k] = cf[k]
            if coeffs:
                brackets[(i, j)] = coeffs
            _ = flat
    return LieAlgebra.from_brackets(4, brackets, names=("E11", "E12", "E21", "E22"))


def adjoint_linrep(L: LieAlgebra) -> LinRep:
    """ad: each basis element acting by its bracket."""
    mats = []
    for i in range(L.dim):
        cols = []
        for j in range(L.dim):
            br = L.bracket_basis(i, j)
            cols.append([br.get(k, 0) for k in range(L.dim)])
        mats.append(RatMatrix.from_cols(cols, rows=L.dim))
    return LinRep(L, L.dim, tuple(mats))
