"""Exact rational linear algebra: the oracle layer everything else trusts.

Matrices are dense, entries are ``fractions.Fraction`` (always reduced,
positive denominator), and every result is exact — downstream identity
checks compare against literal zero, never a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ._kernel import echelon

Rat = Fraction
Q0 = Fraction(0)
Q1 = Fraction(1)


class LinAlgError(ValueError):
    """Shape mismatch or other misuse of the linear algebra layer."""


class NotSubcomplexError(LinAlgError):
    """Image not contained in kernel: a sign bug upstream, not a math fact."""


def rat(x) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise LinAlgError(f"cannot interpret {x!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(x)


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix of rationals."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise LinAlgError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows_data, rows=None, cols=None) -> RatMatrix:
        rows_data = [list(r) for r in rows_data]
        n = len(rows_data) if rows is None else rows
        m = (len(rows_data[0]) if rows_data else 0) if cols is None else cols
        ent = []
        for r in rows_data:
            if len(r) != m:
                raise LinAlgError("ragged rows")
            ent.extend(rat(x) for x in r)
        return cls(n, m, tuple(ent))

    @classmethod
    def from_cols(cls, cols_data, rows=None) -> RatMatrix:
        cols_data = [list(c) for c in cols_data]
        m = len(cols_data)
        n = (len(cols_data[0]) if cols_data else 0) if rows is None else rows
        ent = [Q0] * (n * m)
        for j, c in enumerate(cols_data):
            if len(c) != n:
                raise LinAlgError("ragged columns")
            for i, x in enumerate(c):
                ent[i * m + j] = rat(x)
        return cls(n, m, tuple(ent))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Q0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        ent = [Q0] * (n * n)
        for i in range(n):
            ent[i * n + i] = Q1
        return cls(n, n, tuple(ent))

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix.from_rows(
            [[self.get(i, j) for i in range(self.rows)] for j in range(self.cols)],
            rows=self.cols,
            cols=self.rows,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> RatMatrix:
        c = rat(c)
        return RatMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def _same_shape(self, other: RatMatrix):
        if self.rows != other.rows or self.cols != other.cols:
            raise LinAlgError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def sparse_cols(self) -> list:
        """Column-wise {row: value} views, zeros omitted."""
        out = [{} for _ in range(self.cols)]
        m = self.cols
        for idx, v in enumerate(self.entries):
            if v:
                out[idx % m][idx // m] = v
        return out

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise LinAlgError("inner dimensions disagree")
        left_cols = self.sparse_cols()
        ent = [Q0] * (self.rows * other.cols)
        m = other.cols
        for j in range(other.cols):
            acc = {}
            for k in range(other.rows):
                c = other.entries[k * m + j]
                if not c:
                    continue
                for i, v in left_cols[k].items():
                    acc[i] = acc.get(i, Q0) + c * v
            for i, v in acc.items():
                ent[i * m + j] = v
        return RatMatrix(self.rows, other.cols, tuple(ent))

    def apply(self, vec) -> list:
        """Matrix-vector product on a dense list."""
        if len(vec) != self.cols:
            raise LinAlgError("vector length does not match column count")
        out = [Q0] * self.rows
        m = self.cols
        for j, c in enumerate(vec):
            if not c:
                continue
            for i in range(self.rows):
                v = self.entries[i * m + j]
                if v:
                    out[i] = out[i] + v * c
        return out

    def hstack(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows:
            raise LinAlgError("row counts disagree")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return RatMatrix.from_rows(rows, rows=self.rows, cols=self.cols + other.cols)

    def vstack(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.cols:
            raise LinAlgError("column counts disagree")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _scaled_int_rows(m: RatMatrix, extra_col=None) -> list:
    """Clear denominators row by row; optionally append one extra column."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        if extra_col is not None:
            row.append(extra_col[i])
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def _echelon(m: RatMatrix, extra_col=None):
    rows = _scaled_int_rows(m, extra_col)
    ncols = m.cols + (1 if extra_col is not None else 0)
    rank, pivots = echelon(rows, ncols)
    return rank, pivots, rows


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    r, _, _ = _echelon(m)
    return r


def _back_substitute(rows, pivots, ncols, target_col, free_assign):
    """Solve the echelon system for one assignment of the free variables.

    ``target_col`` is the index of the right-hand-side column inside ``rows``
    (or None for the homogeneous system).
    """
    x = [Q0] * ncols
    for c, v in free_assign.items():
        x[c] = v
    for rix in range(len(pivots) - 1, -1, -1):
        pc = pivots[rix]
        row = rows[rix]
        s = Fraction(row[target_col]) if target_col is not None else Q0
        for j in range(pc + 1, ncols):
            if row[j] and x[j]:
                s -= Fraction(row[j]) * x[j]
        x[pc] = s / Fraction(row[pc])
    return x


@dataclass(frozen=True)
class Subspace:
    """A subspace presented by an independent column basis."""

    ambient_dim: int
    basis: RatMatrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise LinAlgError("basis rows disagree with ambient dimension")
        if rank(self.basis) != self.basis.cols:
            raise LinAlgError("basis columns are dependent")

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, vec) -> bool:
        return solve(self.basis, list(vec)) is not None

    def coordinates(self, vec):
        """Coordinates of ``vec`` in this basis, or None if outside."""
        return solve(self.basis, list(vec))


def kernel_basis(m: RatMatrix) -> Subspace:
    """Basis of ker(m); one column per free variable, in column order."""
    r, pivots, rows = _echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    cols = []
    for f in free:
        cols.append(_back_substitute(rows, pivots, m.cols, None, {f: Q1}))
    basis = RatMatrix.from_cols(cols, rows=m.cols)
    return Subspace(m.cols, basis)


def solve(m: RatMatrix, b) -> list | None:
    """Some exact solution of m·x = b, or None when inconsistent."""
    b = [rat(x) for x in b]
    if len(b) != m.rows:
        raise LinAlgError("right-hand side length does not match row count")
    r, pivots, rows = _echelon(m, extra_col=b)
    if pivots and pivots[-1] == m.cols:
        return None
    return _back_substitute(rows, pivots, m.cols, m.cols, {})


def quotient_dim(ker: Subspace, img: Subspace) -> int:
    """dim(ker/img), after checking img really sits inside ker."""
    if ker.ambient_dim != img.ambient_dim:
        raise LinAlgError("ambient dimensions disagree")
    for j in range(img.dim):
        if not ker.contains(img.basis.col(j)):
            raise NotSubcomplexError(
                f"image column {j} not contained in the kernel: not a subcomplex"
            )
    return ker.dim - img.dim


class GreedySpan:
    """Incremental rational span with deterministic reduction order."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows = {}  # leading index -> reduced vector

    def reduce(self, vec):
        v = list(vec)
        for lead in sorted(self._rows):
            if v[lead]:
                w = self._rows[lead]
                c = v[lead]
                v = [a - c * b for a, b in zip(v, w)]
        return v

    def insert(self, vec) -> bool:
        """Add vec to the span; True if it was independent."""
        v = self.reduce(vec)
        for i, a in enumerate(v):
            if a:
                self._rows[i] = [x / a for x in v]
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self._rows)


def column_space_basis(m: RatMatrix) -> Subspace:
    """Independent spanning columns, chosen greedily left to right."""
    span = GreedySpan(m.rows)
    keep = []
    for j in range(m.cols):
        c = m.col(j)
        if span.insert(c):
            keep.append(c)
    return Subspace(m.rows, RatMatrix.from_cols(keep, rows=m.rows))


def completion_columns(inside: RatMatrix, ambient: int) -> list:
    """Indices of standard basis vectors completing col(inside) to the ambient.

    Greedy and lexicographically first, so reports are reproducible.
    """
    span = GreedySpan(ambient)
    for j in range(inside.cols):
        span.insert(inside.col(j))
    chosen = []
    for j in range(ambient):
        e = [Q0] * ambient
        e[j] = Q1
        if span.insert(e):
            chosen.append(j)
    return chosen
