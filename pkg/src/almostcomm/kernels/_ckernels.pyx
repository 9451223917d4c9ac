# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels; same API and results as ``_pykernels``."""
from libc.stdlib cimport malloc, free
from math import gcd

DEFAULT_PRIME = 2147483647


cdef object _content(list row):
    cdef object g = 0
    cdef object v
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def echelon_int(rows, Py_ssize_t ncols):
    cdef list work = []
    cdef list r, prow, row, nz
    cdef Py_ssize_t nrows, rank = 0, col, k, best, t, nnz, idx
    cdef object v, a, b, g, fa, fb, c, best_abs, av
    for rr in rows:
        r = list(rr)
        if any(r):
            work.append(r)
    nrows = len(work)
    cdef list pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        best = -1
        best_abs = 0
        for k in range(rank, nrows):
            v = (<list>work[k])[col]
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
        prow = <list>work[rank]
        if prow[col] < 0:
            prow = [-v for v in prow]
            work[rank] = prow
        a = prow[col]
        nz = [t for t in range(col, ncols) if prow[t]]
        nnz = len(nz)
        for k in range(nrows):
            if k == rank:
                continue
            row = <list>work[k]
            b = row[col]
            if not b:
                continue
            g = gcd(a, b)
            fa = a // g
            fb = b // g
            if fa != 1:
                row = [fa * v for v in row]
            for idx in range(nnz):
                t = <Py_ssize_t>nz[idx]
                row[t] = row[t] - fb * prow[t]
            c = _content(row)
            if c > 1:
                row = [v // c for v in row]
            work[k] = row
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


cdef inline long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(rows, Py_ssize_t ncols, long long p=DEFAULT_PRIME):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *>malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k, col, piv, rank = 0
    cdef long long inv, b, x
    cdef long long *prow
    cdef long long *row
    try:
        for i in range(nrows):
            r = rows[i]
            for j in range(ncols):
                m[i * ncols + j] = <long long>(r[j] % p)
        for col in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for k in range(rank, nrows):
                if m[k * ncols + col] != 0:
                    piv = k
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    x = m[rank * ncols + j]
                    m[rank * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = x
            prow = m + rank * ncols
            inv = _inv_mod(prow[col], p)
            for j in range(col, ncols):
                prow[j] = (prow[j] * inv) % p
            for k in range(rank + 1, nrows):
                row = m + k * ncols
                b = row[col]
                if b != 0:
                    for j in range(col, ncols):
                        if prow[j] != 0:
                            x = (row[j] - b * prow[j]) % p
                            if x < 0:
                                x += p
                            row[j] = x
            rank += 1
    finally:
        free(m)
    return rank
