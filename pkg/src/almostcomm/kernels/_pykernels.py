"""Pure-Python elimination kernels.

Reference implementation of the kernel API; ``_ckernels.pyx`` mirrors it
line for line with typed loops.
"""
from math import gcd

DEFAULT_PRIME = 2147483647  # 2**31 - 1; products of residues fit in int64


def _content(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def echelon_int(rows, ncols):
    """Fraction-free Gauss-Jordan reduction of an integer matrix.

    Returns ``(reduced, pivots)``: the nonzero rows of the reduced row echelon
    form, each scaled to a primitive integer vector with a positive pivot, and
    the pivot column of each row.  Every reduced row has zeros in all other
    pivot columns, so dividing a row by its pivot entry gives the rational RREF.
    """
    work = []
    for r in rows:
        r = list(r)
        if any(r):
            work.append(r)
    pivots = []
    nrows = len(work)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        best = -1
        best_abs = 0
        for k in range(rank, nrows):
            v = work[k][col]
            if v:
                av = v if v > 0 else -v
                if best < 0 or av < best_abs:
                    best = k
                    best_abs = av
                    if av == 1:
                        break
        if best < 0:
            continue
        work[rank], work[best] = work[best], work[rank]
        prow = work[rank]
        if prow[col] < 0:
            prow = [-v for v in prow]
            work[rank] = prow
        a = prow[col]
        nz = [t for t in range(col, ncols) if prow[t]]
        for k in range(nrows):
            if k == rank:
                continue
            row = work[k]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            fa = a // g
            fb = b // g
            if fa != 1:
                row = [fa * v for v in row]
            for t in nz:
                row[t] -= fb * prow[t]
            c = _content(row)
            if c > 1:
                row = [v // c for v in row]
            work[k] = row
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def _inv_mod(a, p):
    return pow(a, p - 2, p)


def rank_mod_p(rows, ncols, p=DEFAULT_PRIME):
    """Rank of an integer matrix reduced modulo the prime ``p``.

    This never exceeds the rank over Q, so a full rank result is an exact
    certificate of linear independence over Q.
    """
    work = [[v % p for v in r] for r in rows]
    nrows = len(work)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for k in range(rank, nrows):
            if work[k][col]:
                piv = k
                break
        if piv < 0:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        inv = _inv_mod(prow[col], p)
        for t in range(col, ncols):
            prow[t] = prow[t] * inv % p
        for k in range(rank + 1, nrows):
            row = work[k]
            b = row[col]
            if b:
                for t in range(col, ncols):
                    if prow[t]:
                        row[t] = (row[t] - b * prow[t]) % p
        rank += 1
    return rank
