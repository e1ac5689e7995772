# cython: language_level=3
"""Compiled fraction-free elimination kernel.

Arithmetic stays on Python ints (arbitrary precision); the speedup comes
from compiling the loop and index bookkeeping.  Semantics and pivot rule
match ``lie2alg._pykernel.echelon`` exactly.
"""

BACKEND = "cython"


def echelon(list rows, Py_ssize_t ncols):
    """Reduce an integer matrix to row echelon form in place (Bareiss).

    Returns ``(rank, pivot_cols)``; see the pure-Python twin for details.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t c, i, j, pr
    cdef list ri, rr
    cdef object prev = 1
    cdef object piv, ric
    pivots = []
    for c in range(ncols):
        pr = -1
        for i in range(rank, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != rank:
            rows[rank], rows[pr] = rows[pr], rows[rank]
        rr = <list> rows[rank]
        piv = rr[c]
        for i in range(rank + 1, nrows):
            ri = <list> rows[i]
            ric = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (piv * ri[j] - ric * rr[j]) // prev
            ri[c] = 0
        prev = piv
        pivots.append(c)
        rank += 1
    return rank, pivots
