"""Finite-dimensional Lie algebras by structure constants over the rationals.

Also: linear representations, alternating cochains with values in a module,
and the Chevalley-Eilenberg differential assembled as an exact matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .multilinear import Q0, Q1, add_scaled, alternating_combos, basis_vec
from .ratmat import LinAlgError, RatMatrix, rat


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass
class LieAlgebra:
    """Lie algebra presented by structure constants on an ordered basis.

    ``table[(i, j)]`` holds the coefficients of [e_i, e_j]; missing pairs are
    zero.  The table may encode an invalid bracket — ``check_lie_algebra``
    reports violations instead of the constructor rejecting them.
    """

    dim: int
    basis_names: tuple
    table: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise LinAlgError("basis name count disagrees with dimension")
        self.table = {k: _clean({i: rat(c) for i, c in v.items()}) for k, v in self.table.items()}
        self.table = {k: v for k, v in self.table.items() if v}

    @classmethod
    def from_brackets(cls, dim: int, brackets: dict, names=None) -> LieAlgebra:
        """Build from brackets on pairs i < j; antisymmetry is filled in."""
        if names is None:
            names = tuple(f"e{i}" for i in range(dim))
        table = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise LinAlgError(f"bracket pair ({i},{j}) not strictly increasing in range")
            coeffs = _clean({k: rat(c) for k, c in coeffs.items()})
            if not coeffs:
                continue
            table[(i, j)] = coeffs
            table[(j, i)] = {k: -c for k, c in coeffs.items()}
        return cls(dim, tuple(names), table)

    @classmethod
    def abelian(cls, dim: int, names=None) -> LieAlgebra:
        return cls.from_brackets(dim, {}, names)

    def bracket_basis(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse vector."""
        return self.table.get((i, j), {})

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.table.get((i, j), {}).get(k, Q0)

    def bracket_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            if not a:
                continue
            for j, b in v.items():
                if not b:
                    continue
                c = a * b
                for k, s in self.table.get((i, j), {}).items():
                    t = out.get(k, Q0) + c * s
                    if t:
                        out[k] = t
                    elif k in out:
                        del out[k]
        return out

    def bracket(self, u, v) -> list:
        """Bilinear extension of the structure constants to dense vectors."""
        if len(u) != self.dim or len(v) != self.dim:
            raise LinAlgError("vector length disagrees with algebra dimension")
        su = {i: rat(a) for i, a in enumerate(u) if a}
        sv = {j: rat(b) for j, b in enumerate(v) if b}
        out = [Q0] * self.dim
        for k, c in self.bracket_sparse(su, sv).items():
            out[k] = c
        return out

    def structure_table(self) -> dict:
        """Copy of the full sparse table (for equality tests)."""
        return {k: dict(v) for k, v in self.table.items()}


def bracket(L: LieAlgebra, u, v) -> list:
    return L.bracket(u, v)


def check_lie_algebra(L: LieAlgebra) -> list:
    """Every violated antisymmetry/Jacobi instance; empty report = valid."""
    report = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            fwd = L.bracket_basis(i, j)
            bwd = L.bracket_basis(j, i)
            for k in set(fwd) | set(bwd):
                s = fwd.get(k, Q0) + bwd.get(k, Q0)
                if i == j:
                    s = fwd.get(k, Q0)
                if s:
                    report.append(
                        {"kind": "antisymmetry", "pair": (i, j), "coordinate": k, "residue": s}
                    )
    for i, j, k in combinations(range(L.dim), 3):
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = L.bracket_basis(a, b)
            for t, v in L.bracket_sparse(inner, basis_vec(c)).items():
                acc[t] = acc.get(t, Q0) + v
        for t, v in acc.items():
            if v:
                report.append({"kind": "jacobi", "triple": (i, j, k), "coordinate": t, "residue": v})
    return report


def is_homomorphism(src: LieAlgebra, dst: LieAlgebra, m: RatMatrix) -> bool:
    """True iff m[u,v] = [mu, mv] on all basis pairs."""
    if m.rows != dst.dim or m.cols != src.dim:
        raise LinAlgError("homomorphism matrix has the wrong shape")
    for i in range(src.dim):
        for j in range(i + 1, src.dim):
            lhs = [Q0] * dst.dim
            for k, c in src.bracket_basis(i, j).items():
                add_scaled(lhs, m.col(k), c)
            rhs = dst.bracket(m.col(i), m.col(j))
            if lhs != rhs:
                return False
    return True


@dataclass
class LinRep:
    """Linear representation: one matrix per basis element of the algebra."""

    algebra: LieAlgebra
    space_dim: int
    mats: tuple

    def __post_init__(self):
        self.mats = tuple(self.mats)
        if len(self.mats) != self.algebra.dim:
            raise LinAlgError("one matrix per basis element required")
        for m in self.mats:
            if m.rows != self.space_dim or m.cols != self.space_dim:
                raise LinAlgError("representation matrices must be square of the space dimension")

    @classmethod
    def trivial(cls, algebra: LieAlgebra, space_dim: int) -> LinRep:
        z = RatMatrix.zeros(space_dim, space_dim)
        return cls(algebra, space_dim, tuple(z for _ in range(algebra.dim)))

    def act_basis(self, a: int, vec: list) -> list:
        return self.mats[a].apply(vec)

    def act_sparse(self, y: dict, vec: list) -> list:
        """Action of a sparse algebra element on a dense module vector."""
        out = [Q0] * self.space_dim
        for a, c in y.items():
            if c:
                add_scaled(out, self.mats[a].apply(vec), c)
        return out

    def sparse_cols(self) -> list:
        return [m.sparse_cols() for m in self.mats]


def check_linrep(rep: LinRep) -> list:
    """Homomorphism property mats[[ei,ej]] = [mats_i, mats_j], per pair."""
    report = []
    L = rep.algebra
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = RatMatrix.zeros(rep.space_dim, rep.space_dim)
            for k, c in L.bracket_basis(i, j).items():
                lhs = lhs + rep.mats[k].scale(c)
            rhs = rep.mats[i] @ rep.mats[j] - rep.mats[j] @ rep.mats[i]
            if lhs != rhs:
                report.append({"kind": "representation", "pair": (i, j)})
    return report


def semidirect_sum_linrep(rep: LinRep, names=None) -> LieAlgebra:
    """Algebra ⊕ module with the action bracket; module part is abelian."""
    L = rep.algebra
    n, d = L.dim, rep.space_dim
    if names is None:
        names = tuple(L.basis_names) + tuple(f"v{i}" for i in range(d))
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            coeffs = dict(L.bracket_basis(i, j))
            if coeffs:
                brackets[(i, j)] = coeffs
    for i in range(n):
        for v in range(d):
            col = rep.mats[i].col(v)
            coeffs = {n + t: c for t, c in enumerate(col) if c}
            if coeffs:
                brackets[(i, n + v)] = coeffs
    return LieAlgebra.from_brackets(n + d, brackets, names)


@dataclass
class LinCochain:
    """Alternating q-form on an algebra with values in a vector space.

    Coefficients live on strictly increasing basis tuples; evaluation on
    anything else goes through the multilinear alternating extension.
    """

    algebra: LieAlgebra
    target_dim: int
    degree: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, vec in self.values.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise LinAlgError(f"key {key} is not a strictly increasing {self.degree}-tuple")
            vec = tuple(rat(x) for x in vec)
            if len(vec) != self.target_dim:
                raise LinAlgError("value length disagrees with target dimension")
            if any(vec):
                clean[key] = vec
        self.values = clean

    def value(self, key) -> tuple:
        return self.values.get(tuple(key), (Q0,) * self.target_dim)

    def evaluate(self, args) -> list:
        """Value on a list of sparse or dense vectors."""
        sparse_args = []
        for a in args:
            if isinstance(a, dict):
                sparse_args.append(a)
            else:
                sparse_args.append({i: rat(c) for i, c in enumerate(a) if c})
        allowed = set()
        for key in self.values:
            allowed.update(key)
        out = [Q0] * self.target_dim
        for key, coeff in alternating_combos(sparse_args, allowed):
            vec = self.values.get(key)
            if vec is not None:
                add_scaled(out, vec, coeff)
        return out


def ce_matrix(rep: LinRep, q: int) -> RatMatrix:
    """Matrix of the Chevalley-Eilenberg differential from degree q to q+1.

    Basis layout: increasing tuples in lexicographic order, value coordinates
    innermost.  Degrees above the algebra dimension give zero-width spaces.
    """
    if q < 0:
        raise LinAlgError("negative degree")
    L = rep.algebra
    d = rep.space_dim
    src_keys = list(combinations(range(L.dim), q))
    dst_keys = list(combinations(range(L.dim), q + 1))
    rows = len(dst_keys) * d
    cols = len(src_keys) * d
    if rows == 0 or cols == 0:
        return RatMatrix.zeros(rows, cols)
    ent = [Q0] * (rows * cols)
    for cidx, key in enumerate(src_keys):
        for coord in range(d):
            w = LinCochain(L, d, q, {key: tuple(Q1 if t == coord else Q0 for t in range(d))})
            col = cidx * d + coord
            for ridx, tkey in enumerate(dst_keys):
                val = _ce_value(rep, w, tkey)
                for t, x in enumerate(val):
                    if x:
                        ent[(ridx * d + t) * cols + col] = x
    return RatMatrix(rows, cols, tuple(ent))


def _ce_value(rep: LinRep, w: LinCochain, key) -> list:
    L = rep.algebra
    out = [Q0] * rep.space_dim
    for j, xj in enumerate(key):
        rest = key[:j] + key[j + 1 :]
        inner = w.value(rest)
        if any(inner):
            sign = Q1 if j % 2 == 0 else -Q1
            add_scaled(out, rep.mats[xj].apply(list(inner)), sign)
    for m in range(len(key)):
        for n in range(m + 1, len(key)):
            br = L.bracket_basis(key[m], key[n])
            if not br:
                continue
            rest = key[:m] + key[m + 1 : n] + key[n + 1 :]
            args = [br] + [basis_vec(i) for i in rest]
            val = w.evaluate(args)
            sign = Q1 if (m + n) % 2 == 0 else -Q1
            add_scaled(out, val, sign)
    return out


def pullback_matrix(m: RatMatrix, q: int, src: LieAlgebra, dst: LieAlgebra) -> RatMatrix:
    """Matrix of m* on scalar q-forms: (m*w)(x_1..x_q) = w(m x_1,.., m x_q)."""
    src_keys = list(combinations(range(src.dim), q))
    dst_keys = list(combinations(range(dst.dim), q))
    cols_sparse = m.sparse_cols()
    ent = [Q0] * (len(src_keys) * len(dst_keys))
    ncols = len(dst_keys)
    for cidx, key in enumerate(dst_keys):
        w = LinCochain(dst, 1, q, {key: (Q1,)})
        for ridx, skey in enumerate(src_keys):
            args = [cols_sparse[i] for i in skey]
            val = w.evaluate(args)[0]
            if val:
                ent[ridx * ncols + cidx] = val
    return RatMatrix(len(src_keys), ncols, tuple(ent))


def dga_pullback_check(src: LieAlgebra, dst: LieAlgebra, m: RatMatrix) -> bool:
    """True iff m* intertwines the scalar differentials in degrees 0 and 1.

    Equivalent to ``is_homomorphism`` (compatibility with the wedge product
    reduces the full map-of-complexes condition to these two degrees).
    """
    if m.rows != dst.dim or m.cols != src.dim:
        raise LinAlgError("pullback matrix has the wrong shape")
    triv_src = LinRep.trivial(src, 1)
    triv_dst = LinRep.trivial(dst, 1)
    for q in (0, 1):
        lhs = pullback_matrix(m, q + 1, src, dst) @ ce_matrix(triv_dst, q)
        rhs = ce_matrix(triv_src, q) @ pullback_matrix(m, q, src, dst)
        if lhs != rhs:
            return False
    return True
