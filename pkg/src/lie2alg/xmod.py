"""Crossed modules of Lie algebras and their groupoid incarnation.

A crossed module mu: g -> h with an action of h on g by derivations is the
strict Lie 2-algebra in coordinates: arrows are the semidirect sum g + h,
composable p-strings form the nerve levels g_p = g^p + h, and the face maps
drop/merge arrows exactly as groupoid combinatorics dictates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .liealg import LieAlgebra, LinRep, check_lie_algebra, check_linrep, is_homomorphism
from .multilinear import Q0, Q1, add_scaled, basis_vec, sparse_matvec
from .ratmat import (
    LinAlgError,
    RatMatrix,
    Subspace,
    column_space_basis,
    completion_columns,
    kernel_basis,
    rank,
    solve,
)


class CompositionError(ValueError):
    """Attempt to compose arrows whose source and target do not match."""


class StructureError(ValueError):
    """Input fails a structural precondition (not an ideal, not a splitting...)."""


@dataclass
class CrossedModule:
    """mu: g -> h together with an action of h on g."""

    g: LieAlgebra
    h: LieAlgebra
    mu: RatMatrix
    action: LinRep
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.mu.rows != self.h.dim or self.mu.cols != self.g.dim:
            raise LinAlgError("mu must map g into h")
        if self.action.algebra is not self.h and self.action.algebra.dim != self.h.dim:
            raise LinAlgError("action must be an h-representation")
        if self.action.space_dim != self.g.dim:
            raise LinAlgError("action must act on the underlying space of g")

    def mu_col(self, i: int) -> dict:
        cols = self._cache.get("mu_cols")
        if cols is None:
            cols = self.mu.sparse_cols()
            self._cache["mu_cols"] = cols
        return cols[i]

    def mu_sparse(self, x: dict) -> dict:
        cols = self._cache.get("mu_cols")
        if cols is None:
            cols = self.mu.sparse_cols()
            self._cache["mu_cols"] = cols
        return sparse_matvec(cols, x)

    def act_sparse(self, y: dict, x: dict) -> dict:
        """L_y x for sparse h- and g-vectors."""
        cols = self._cache.get("action_cols")
        if cols is None:
            cols = self.action.sparse_cols()
            self._cache["action_cols"] = cols
        out: dict = {}
        for a, c in y.items():
            if not c:
                continue
            for k, v in sparse_matvec(cols[a], x).items():
                s = out.get(k, Q0) + c * v
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out


def check_crossed_module(X: CrossedModule) -> list:
    """Axiom report: empty iff X is a valid crossed module.

    Checks both algebras, the representation property of the action, that mu
    is a homomorphism, that the action is by derivations, equivariance, and
    the infinitesimal Peiffer identity, all on basis elements.
    """
    report = []
    for name, L in (("g", X.g), ("h", X.h)):
        for v in check_lie_algebra(L):
            report.append({"kind": f"{name}_lie_algebra", **v})
    for v in check_linrep(X.action):
        report.append({"kind": "action_representation", "pair": v["pair"]})
    if not is_homomorphism(X.g, X.h, X.mu):
        report.append({"kind": "mu_homomorphism"})
    G, H = X.g.dim, X.h.dim
    for a in range(H):
        ya = basis_vec(a)
        for i in range(G):
            for j in range(i + 1, G):
                lhs = X.act_sparse(ya, X.g.bracket_basis(i, j))
                rhs = X.g.bracket_sparse(X.act_sparse(ya, basis_vec(i)), basis_vec(j))
                for k, c in X.g.bracket_sparse(basis_vec(i), X.act_sparse(ya, basis_vec(j))).items():
                    rhs[k] = rhs.get(k, Q0) + c
                if {k: c for k, c in lhs.items() if c} != {k: c for k, c in rhs.items() if c}:
                    report.append({"kind": "action_derivation", "y": a, "pair": (i, j)})
    for a in range(H):
        ya = basis_vec(a)
        for i in range(G):
            lhs = X.mu_sparse(X.act_sparse(ya, basis_vec(i)))
            rhs = X.h.bracket_sparse(ya, X.mu_col(i))
            if lhs != rhs:
                report.append({"kind": "equivariance", "y": a, "x": i})
    for i in range(G):
        mi = X.mu_col(i)
        for j in range(G):
            lhs = X.act_sparse(mi, basis_vec(j))
            rhs = X.g.bracket_basis(i, j)
            if lhs != dict(rhs):
                report.append({"kind": "peiffer", "pair": (i, j)})
    return report


def semidirect_sum(X: CrossedModule) -> LieAlgebra:
    """The arrow algebra on g + h (g-coordinates first)."""
    cached = X._cache.get("semidirect")
    if cached is not None:
        return cached
    G, H = X.g.dim, X.h.dim
    names = tuple(f"g:{n}" for n in X.g.basis_names) + tuple(f"h:{n}" for n in X.h.basis_names)
    brackets = {}
    for i in range(G):
        for j in range(i + 1, G):
            coeffs = dict(X.g.bracket_basis(i, j))
            if coeffs:
                brackets[(i, j)] = coeffs
    for a in range(H):
        for b in range(a + 1, H):
            coeffs = {G + k: c for k, c in X.h.bracket_basis(a, b).items()}
            if coeffs:
                brackets[(G + a, G + b)] = coeffs
    for i in range(G):
        for a in range(H):
            # [(x_i, 0), (0, y_a)] = (-L_{y_a} x_i, 0)
            act = X.act_sparse(basis_vec(a), basis_vec(i))
            coeffs = {k: -c for k, c in act.items()}
            if coeffs:
                brackets[(i, G + a)] = coeffs
    out = LieAlgebra.from_brackets(G + H, brackets, names)
    X._cache["semidirect"] = out
    return out


@dataclass
class StructuralMaps:
    """Source, target, inversion, unit as matrices; composition as a map."""

    xmod: CrossedModule
    s: RatMatrix
    t: RatMatrix
    i: RatMatrix
    u: RatMatrix

    def m(self, aprime, a) -> list:
        """Groupoid composition; raises unless s(aprime) = t(a)."""
        if list(self.s.apply(list(aprime))) != list(self.t.apply(list(a))):
            raise CompositionError("arrows are not composable: source != target")
        G = self.xmod.g.dim
        return [aprime[k] + a[k] if k < G else a[k] for k in range(len(a))]


def structural_maps(X: CrossedModule) -> StructuralMaps:
    """The five groupoid maps of the arrow algebra; s, t, u, i verified."""
    G, H = X.g.dim, X.h.dim
    s = RatMatrix.zeros(H, G).hstack(RatMatrix.identity(H))
    t = X.mu.hstack(RatMatrix.identity(H))
    i_top = (-RatMatrix.identity(G)).hstack(RatMatrix.zeros(G, H))
    i_bot = X.mu.hstack(RatMatrix.identity(H))
    i = i_top.vstack(i_bot)
    u = RatMatrix.zeros(G, H).vstack(RatMatrix.identity(H))
    arrows = semidirect_sum(X)
    for name, m, src, dst in (("s", s, arrows, X.h), ("t", t, arrows, X.h), ("u", u, X.h, arrows), ("i", i, arrows, arrows)):
        if not is_homomorphism(src, dst, m):
            raise StructureError(f"structural map {name} is not a Lie algebra homomorphism")
    return StructuralMaps(X, s, t, i, u)


def from_groupoid(arrow_algebra: LieAlgebra, s: RatMatrix, t: RatMatrix, u: RatMatrix) -> CrossedModule:
    """Recover the crossed module ker(s) -> base from groupoid data.

    The base algebra is reconstructed through the unit section; the action is
    L_y xi = [u(y), xi] in the arrow algebra.
    """
    H = s.rows
    if rank(s) != H:
        raise StructureError("source map is not surjective")
    su = s @ u
    tu = t @ u
    if su != RatMatrix.identity(H) or tu != RatMatrix.identity(H):
        raise StructureError("unit section does not split source and target")
    base_brackets = {}
    for a in range(H):
        for b in range(a + 1, H):
            br = arrow_algebra.bracket(u.col(a), u.col(b))
            coeffs = {k: c for k, c in enumerate(s.apply(br)) if c}
            if coeffs:
                base_brackets[(a, b)] = coeffs
    base = LieAlgebra.from_brackets(H, base_brackets)
    if not is_homomorphism(arrow_algebra, base, s) or not is_homomorphism(arrow_algebra, base, t):
        raise StructureError("source/target are not homomorphisms onto the base")
    ker = kernel_basis(s)
    K = ker.basis
    g_brackets = {}
    for i in range(ker.dim):
        for j in range(i + 1, ker.dim):
            br = arrow_algebra.bracket(K.col(i), K.col(j))
            coords = solve(K, br)
            if coords is None:
                raise StructureError("kernel of s is not a subalgebra")
            coeffs = {k: c for k, c in enumerate(coords) if c}
            if coeffs:
                g_brackets[(i, j)] = coeffs
    g = LieAlgebra.from_brackets(ker.dim, g_brackets)
    mu = RatMatrix.from_cols([t.apply(K.col(i)) for i in range(ker.dim)], rows=H)
    mats = []
    for a in range(H):
        cols = []
        for i in range(ker.dim):
            br = arrow_algebra.bracket(u.col(a), K.col(i))
            coords = solve(K, br)
            if coords is None:
                raise StructureError("action does not preserve the kernel of s")
            cols.append(coords)
        mats.append(RatMatrix.from_cols(cols, rows=ker.dim))
    action = LinRep(base, ker.dim, tuple(mats))
    return CrossedModule(g, base, mu, action)


@dataclass
class NerveSpace:
    """Level p of the nerve: composable p-strings, as a Lie algebra.

    Coordinates (x^0, ..., x^{p-1}; y): p g-blocks then the h-block, where
    arrow number i of the string is (x^i, y + sum_{k>i} mu(x^k)).
    """

    parent: CrossedModule
    p: int
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _embed_arrow_components(X: CrossedModule, p: int, vec: dict) -> list:
    """Sparse nerve vector -> list of p sparse (g + h)-vectors."""
    G, H = X.g.dim, X.h.dim
    comps = []
    for i in range(p):
        arrow: dict = {}
        for idx, c in vec.items():
            if i * G <= idx < (i + 1) * G:
                arrow[idx - i * G] = c
            elif idx >= p * G:
                arrow[G + (idx - p * G)] = arrow.get(G + (idx - p * G), Q0) + c
        for k in range(i + 1, p):
            for idx, c in vec.items():
                if k * G <= idx < (k + 1) * G:
                    for hh, m in X.mu_col(idx - k * G).items():
                        arrow[G + hh] = arrow.get(G + hh, Q0) + c * m
        comps.append({k: c for k, c in arrow.items() if c})
    return comps


def nerve_space(X: CrossedModule, p: int) -> NerveSpace:
    """Nerve level p, cached per (X, p); recomputation is value-equal."""
    key = ("nerve", p)
    cached = X._cache.get(key)
    if cached is not None:
        return cached
    G, H = X.g.dim, X.h.dim
    if p == 0:
        out = NerveSpace(X, 0, X.h)
        X._cache[key] = out
        return out
    arrows = semidirect_sum(X)
    dim = p * G + H
    names = tuple(f"x{i}:{n}" for i in range(p) for n in X.g.basis_names) + tuple(
        f"y:{n}" for n in X.h.basis_names
    )
    brackets = {}
    for a in range(dim):
        ea = _embed_arrow_components(X, p, basis_vec(a))
        for b in range(a + 1, dim):
            eb = _embed_arrow_components(X, p, basis_vec(b))
            out: dict = {}
            # bracket componentwise in the arrow algebra, read back coordinates
            for i in range(p):
                br = arrows.bracket_sparse(ea[i], eb[i])
                for k, c in br.items():
                    if k < G:
                        out[i * G + k] = out.get(i * G + k, Q0) + c
                    elif i == p - 1:
                        out[p * G + (k - G)] = out.get(p * G + (k - G), Q0) + c
            coeffs = {k: c for k, c in out.items() if c}
            if coeffs:
                brackets[(a, b)] = coeffs
    algebra = LieAlgebra.from_brackets(dim, brackets, names)
    out = NerveSpace(X, p, algebra)
    X._cache[key] = out
    return out


def face_map(X: CrossedModule, p: int, k: int) -> RatMatrix:
    """Face map from nerve level p+1 down to level p, 0 <= k <= p+1.

    k = 0 drops the first arrow, intermediate k composes arrows k-1 and k,
    k = p+1 drops the last arrow and pushes mu of its g-part into the base.
    """
    if p < 0 or not 0 <= k <= p + 1:
        raise LinAlgError(f"face index {k} out of range for level {p + 1}")
    G, H = X.g.dim, X.h.dim
    src = (p + 1) * G + H
    dst = p * G + H
    cols = [[Q0] * dst for _ in range(src)]
    for blk in range(p + 1):
        # which output block receives input block blk
        if k == 0:
            tgt = None if blk == 0 else blk - 1
        elif k <= p:
            if blk < k - 1:
                tgt = blk
            elif blk in (k - 1, k):
                tgt = k - 1
            else:
                tgt = blk - 1
        else:  # k == p+1
            tgt = blk if blk < p else None
        for i in range(G):
            col = cols[blk * G + i]
            if tgt is not None:
                col[tgt * G + i] = Q1
            elif k == p + 1:
                for hh, c in X.mu_col(i).items():
                    col[p * G + hh] += c
    for a in range(H):
        cols[(p + 1) * G + a][p * G + a] = Q1
    return RatMatrix.from_cols(cols, rows=dst)


def face_cols(X: CrossedModule, p: int, k: int) -> list:
    """Sparse-column view of face_map, cached."""
    key = ("face", p, k)
    cached = X._cache.get(key)
    if cached is None:
        cached = face_map(X, p, k).sparse_cols()
        X._cache[key] = cached
    return cached


def final_target(X: CrossedModule, p: int) -> RatMatrix:
    """Target of the composite of a p-string: y + sum_j mu(x^j)."""
    if p < 0:
        raise LinAlgError("negative nerve level")
    m = RatMatrix.identity(X.h.dim)
    for _ in range(p):
        m = X.mu.hstack(m)
    return m


def final_target_cols(X: CrossedModule, p: int) -> list:
    key = ("tp", p)
    cached = X._cache.get(key)
    if cached is None:
        cached = final_target(X, p).sparse_cols()
        X._cache[key] = cached
    return cached


def quotient_algebra(h: LieAlgebra, ideal: Subspace):
    """Quotient of h by an ideal, on lex-first standard coset representatives.

    Returns (quotient algebra, representative indices, projection matrix).
    """
    reps = completion_columns(ideal.basis, h.dim)
    combined_cols = [ideal.basis.col(j) for j in range(ideal.dim)]
    for j in reps:
        e = [Q0] * h.dim
        e[j] = Q1
        combined_cols.append(e)
    combined = RatMatrix.from_cols(combined_cols, rows=h.dim)
    proj_rows = []
    for a in range(h.dim):
        coords = solve(combined, list(basis_vec(a) and [Q1 if t == a else Q0 for t in range(h.dim)]))
        proj_rows.append(coords[ideal.dim :])
    proj = RatMatrix.from_cols(proj_rows, rows=len(reps))
    brackets = {}
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            br = h.bracket_basis(reps[i], reps[j])
            dense = [br.get(k, Q0) for k in range(h.dim)]
            coords = proj.apply(dense)
            coeffs = {k: c for k, c in enumerate(coords) if c}
            if coeffs:
                brackets[(i, j)] = coeffs
    names = tuple(f"[{h.basis_names[j]}]" for j in reps)
    quot = LieAlgebra.from_brackets(len(reps), brackets, names)
    return quot, reps, proj


@dataclass
class GroupoidInvariants:
    orbit_space_dim: int
    isotropy: Subspace
    quotient_rep: LinRep


def groupoid_invariants(X: CrossedModule) -> GroupoidInvariants:
    """Orbit space dimension, isotropy ker(mu), and the induced quotient action.

    Verifies that the isotropy is central in g and that the action of mu(g)
    kills it, so the representation of h/mu(g) on ker(mu) is well defined.
    """
    iso = kernel_basis(X.mu)
    orbit_dim = X.h.dim - rank(X.mu)
    for j in range(iso.dim):
        v = iso.basis.col(j)
        for i in range(X.g.dim):
            if any(X.g.bracket(v, list(basis_vec(i) and [Q1 if t == i else Q0 for t in range(X.g.dim)]))):
                raise StructureError("isotropy is not central in g")
    for i in range(X.g.dim):
        mi = X.mu_col(i)
        for j in range(iso.dim):
            sv = {k: c for k, c in enumerate(iso.basis.col(j)) if c}
            if X.act_sparse(mi, sv):
                raise StructureError("action of mu(g) does not vanish on the isotropy")
    image = column_space_basis(X.mu) if rank(X.mu) else Subspace(X.h.dim, RatMatrix.zeros(X.h.dim, 0))
    quot, reps, _ = quotient_algebra(X.h, image)
    mats = []
    for a in reps:
        cols = []
        for j in range(iso.dim):
            sv = {k: c for k, c in enumerate(iso.basis.col(j)) if c}
            acted = X.act_sparse(basis_vec(a), sv)
            dense = [acted.get(k, Q0) for k in range(X.g.dim)]
            coords = solve(iso.basis, dense)
            if coords is None:
                raise StructureError("action does not preserve the isotropy")
            cols.append(coords)
        mats.append(RatMatrix.from_cols(cols, rows=iso.dim))
    qrep = LinRep(quot, iso.dim, tuple(mats))
    return GroupoidInvariants(orbit_dim, iso, qrep)


def from_tuple(h: LieAlgebra, ideal_basis: Subspace, v_dim: int, rep: LinRep | None) -> CrossedModule:
    """Crossed module of a 4-tuple (h, ideal, vector space, quotient action).

    g = V + I maps to h by (v, x) -> x; the action is the quotient action on
    V and the adjoint action on I.
    """
    if ideal_basis.ambient_dim != h.dim:
        raise LinAlgError("ideal lives in the wrong space")
    for a in range(h.dim):
        for j in range(ideal_basis.dim):
            br = h.bracket([Q1 if t == a else Q0 for t in range(h.dim)], ideal_basis.basis.col(j))
            if solve(ideal_basis.basis, br) is None:
                raise StructureError("subspace is not an ideal")
    quot, reps, proj = quotient_algebra(h, ideal_basis)
    if v_dim:
        if rep is None:
            raise StructureError("a quotient representation is required when V is nonzero")
        if rep.space_dim != v_dim or rep.algebra.dim != quot.dim:
            raise LinAlgError("quotient representation has the wrong shape")
    I = ideal_basis.dim
    g_brackets = {}
    for i in range(I):
        for j in range(i + 1, I):
            br = h.bracket(ideal_basis.basis.col(i), ideal_basis.basis.col(j))
            coords = solve(ideal_basis.basis, br)
            coeffs = {v_dim + k: c for k, c in enumerate(coords) if c}
            if coeffs:
                g_brackets[(v_dim + i, v_dim + j)] = coeffs
    g = LieAlgebra.from_brackets(v_dim + I, g_brackets)
    mu = RatMatrix.from_cols(
        [[Q0] * h.dim for _ in range(v_dim)]
        + [ideal_basis.basis.col(j) for j in range(I)],
        rows=h.dim,
    )
    mats = []
    for a in range(h.dim):
        cols = []
        ea = [Q1 if t == a else Q0 for t in range(h.dim)]
        qa = proj.apply(ea)
        for v in range(v_dim):
            acted = [Q0] * v_dim
            for qi, c in enumerate(qa):
                if c:
                    add_scaled(acted, rep.mats[qi].col(v), c)
            cols.append(list(acted) + [Q0] * I)
        for j in range(I):
            br = h.bracket(ea, ideal_basis.basis.col(j))
            coords = solve(ideal_basis.basis, br)
            cols.append([Q0] * v_dim + coords)
        mats.append(RatMatrix.from_cols(cols, rows=v_dim + I))
    action = LinRep(h, v_dim + I, tuple(mats))
    return CrossedModule(g, h, mu, action)
