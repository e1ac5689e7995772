"""Alternating multilinear expansion over sparse vectors.

Cochains store coefficients on strictly increasing index tuples only;
evaluation on arbitrary arguments expands multilinearly and reorders each
index pick into increasing order, picking up the permutation sign.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

Q0 = Fraction(0)
Q1 = Fraction(1)

_BASIS_CACHE: dict = {}


def basis_vec(i: int) -> dict:
    """The i-th basis vector as a shared one-entry sparse dict."""
    v = _BASIS_CACHE.get(i)
    if v is None:
        v = {i: Q1}
        _BASIS_CACHE[i] = v
    return v


def sort_sign(idxs):
    """Sort an index pick, returning (tuple, permutation sign)."""
    idxs = list(idxs)
    sign = 1
    # insertion sort; argument counts are tiny
    for i in range(1, len(idxs)):
        j = i
        while j > 0 and idxs[j - 1] > idxs[j]:
            idxs[j - 1], idxs[j] = idxs[j], idxs[j - 1]
            sign = -sign
            j -= 1
    return tuple(idxs), sign


def alternating_combos(args, allowed=None):
    """Yield (increasing index tuple, signed coefficient) for an argument list.

    ``args`` is a list of sparse vectors; ``allowed`` optionally restricts
    indices to those a cochain can see at all, pruning dead picks early.
    Picks with a repeated index vanish and are skipped.
    """
    if not args:
        yield (), Q1
        return
    filtered = []
    for a in args:
        if allowed is None:
            items = [it for it in a.items() if it[1]]
        else:
            items = [(i, c) for i, c in a.items() if c and i in allowed]
        if not items:
            return
        filtered.append(items)
    for pick in product(*filtered):
        idxs = [i for i, _ in pick]
        if len(set(idxs)) != len(idxs):
            continue
        coeff = Q1
        for _, c in pick:
            coeff *= c
        key, sign = sort_sign(idxs)
        yield key, (coeff if sign > 0 else -coeff)


def sparse_matvec(cols, vec: dict) -> dict:
    """Apply a column-sparse matrix (list of {row: val}) to a sparse vector."""
    out: dict = {}
    for j, c in vec.items():
        if not c:
            continue
        for i, v in cols[j].items():
            s = out.get(i, Q0) + c * v
            if s:
                out[i] = s
            elif i in out:
                del out[i]
    return out


def add_scaled(acc: list, vec, c) -> None:
    """acc += c * vec, in place on a dense list."""
    if not c:
        return
    for i, v in enumerate(vec):
        if v:
            acc[i] += c * v
