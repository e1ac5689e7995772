"""Pure-Python fraction-free elimination kernel.

The compiled twin (``lie2alg._core``) implements the same routine with the
same pivoting rule, so results are bit-identical whichever backend loads.
"""

BACKEND = "python"


def echelon(rows, ncols):
    """Reduce an integer matrix to row echelon form in place (Bareiss).

    ``rows`` is a list of equal-length lists of Python ints.  Uses one-step
    fraction-free elimination: every division is exact, intermediate entries
    stay minors of the input, growth is polynomially bounded.  Pivot rule:
    first nonzero entry scanning down each column.

    Returns ``(rank, pivot_cols)``.
    """
    nrows = len(rows)
    rank = 0
    prev = 1
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
        rr = rows[rank]
        piv = rr[c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            ric = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (piv * ri[j] - ric * rr[j]) // prev
            ri[c] = 0
        prev = piv
        pivots.append(c)
        rank += 1
    return rank, pivots
