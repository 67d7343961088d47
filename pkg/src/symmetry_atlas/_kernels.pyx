# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels over 64-bit adjacency masks (graphs with n <= 64).

Same API and results as ``_pykernels``; the dispatcher in ``kernels``
routes larger graphs to the Python versions.
"""

from libc.stdint cimport uint64_t

BACKEND = "cython"
MAX_N = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int _load(adj, uint64_t* A) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAX_N:
        raise ValueError("compiled kernels support n <= 64")
    for i in range(n):
        A[i] = <uint64_t>adj[i]
    return n


cdef int _cmp_keys(int* keys, int width, int a, int b) nogil:
    cdef int t
    cdef int* ka = keys + a * width
    cdef int* kb = keys + b * width
    for t in range(width):
        if ka[t] != kb[t]:
            return -1 if ka[t] < kb[t] else 1
    return 0


def refine(adj, colors):
    cdef uint64_t A[64]
    cdef uint64_t cells[64]
    cdef int col[64]
    cdef int order[64]
    cdef int keys[64 * 65]
    cdef int n = _load(adj, A)
    cdef int ncol, width, v, c, i, j, t, newn, rep
    distinct = sorted(set(colors))
    rank = {x: r for r, x in enumerate(distinct)}
    for v in range(n):
        col[v] = rank[colors[v]]
    ncol = len(distinct)
    while True:
        for c in range(ncol):
            cells[c] = 0
        for v in range(n):
            cells[col[v]] |= (<uint64_t>1) << v
        width = ncol + 1
        for v in range(n):
            keys[v * width] = col[v]
            for c in range(ncol):
                keys[v * width + 1 + c] = popc(A[v] & cells[c])
        # insertion sort of vertex indices by key
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            t = order[i]
            j = i - 1
            while j >= 0 and _cmp_keys(keys, width, order[j], t) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = t
        newn = 0
        for i in range(n):
            if i > 0 and _cmp_keys(keys, width, order[i - 1], order[i]) != 0:
                newn += 1
            col[order[i]] = newn
        if n > 0:
            newn += 1
        if newn == ncol:
            break
        ncol = newn
    trace = [ncol]
    for c in range(ncol):
        rep = lowbit(cells[c])
        trace.append(popc(cells[c]))
        for t in range(ncol):
            trace.append(popc(A[rep] & cells[t]))
    return [col[v] for v in range(n)], tuple(trace)


cdef bint _connected(uint64_t* A, uint64_t rest) nogil:
    cdef uint64_t seen, frontier, nxt, f
    if rest == 0:
        return True
    seen = rest & (~rest + 1)
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= A[lowbit(f)]
            f &= f - 1
        nxt &= rest & ~seen
        seen |= nxt
        frontier = nxt
    return seen == rest


cdef int _components(uint64_t* A, uint64_t rest, uint64_t* comps) nogil:
    cdef int k = 0
    cdef uint64_t seen, frontier, nxt, f
    while rest:
        seen = rest & (~rest + 1)
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                nxt |= A[lowbit(f)]
                f &= f - 1
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        comps[k] = seen
        k += 1
        rest &= ~seen
    return k


def separators(adj, int k, long limit=0):
    cdef uint64_t A[64]
    cdef int idx[64]
    cdef int n = _load(adj, A)
    cdef uint64_t full, sm
    cdef int i
    out = []
    if n - k < 2 or k < 0:
        return out
    full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    for i in range(k):
        idx[i] = i
    while True:
        sm = 0
        for i in range(k):
            sm |= (<uint64_t>1) << idx[i]
        if not _connected(A, full & ~sm):
            out.append(int(sm))
            if limit and len(out) >= limit:
                return out
        # next combination
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for i in range(i + 1, k):
            idx[i] = idx[i - 1] + 1
    return out


def mixed_separators(adj, eu, ev, int j, int f, bint matching=True, long limit=0):
    cdef uint64_t A[64]
    cdef uint64_t comps[64]
    cdef int U[2048]
    cdef int V[2048]
    cdef int avail[2048]
    cdef int sidx[64]
    cdef int fidx[64]
    cdef int n = _load(adj, A)
    cdef int m = len(eu)
    cdef int navail, i, t, a, b, nc, c
    cdef uint64_t full, sm, rest, used, em
    cdef bint ok
    out = []
    if m > 2048:
        raise ValueError("compiled kernels support at most 2048 edges")
    if j < 0 or f < 0 or j > n:
        return out
    for i in range(m):
        U[i] = eu[i]
        V[i] = ev[i]
    full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    for i in range(j):
        sidx[i] = i
    while True:
        sm = 0
        for i in range(j):
            sm |= (<uint64_t>1) << sidx[i]
        rest = full & ~sm
        if popc(rest) >= 2:
            if f == 0:
                if not _connected(A, rest):
                    out.append((int(sm), ()))
                    if limit and len(out) >= limit:
                        return out
            else:
                navail = 0
                for i in range(m):
                    if not ((sm >> U[i]) & 1) and not ((sm >> V[i]) & 1):
                        avail[navail] = i
                        navail += 1
                if navail >= f:
                    for i in range(f):
                        fidx[i] = i
                    while True:
                        ok = True
                        if matching:
                            used = 0
                            for i in range(f):
                                t = avail[fidx[i]]
                                em = ((<uint64_t>1) << U[t]) | ((<uint64_t>1) << V[t])
                                if used & em:
                                    ok = False
                                    break
                                used |= em
                        if ok:
                            for i in range(f):
                                t = avail[fidx[i]]
                                A[U[t]] &= ~((<uint64_t>1) << V[t])
                                A[V[t]] &= ~((<uint64_t>1) << U[t])
                            nc = _components(A, rest, comps)
                            for i in range(f):
                                t = avail[fidx[i]]
                                A[U[t]] |= (<uint64_t>1) << V[t]
                                A[V[t]] |= (<uint64_t>1) << U[t]
                            if nc < 2:
                                ok = False
                            else:
                                for i in range(f):
                                    t = avail[fidx[i]]
                                    a = U[t]
                                    b = V[t]
                                    for c in range(nc):
                                        if (comps[c] >> a) & 1:
                                            if (comps[c] >> b) & 1:
                                                ok = False
                                            break
                                    if not ok:
                                        break
                            if ok:
                                out.append((int(sm), tuple([avail[fidx[i]] for i in range(f)])))
                                if limit and len(out) >= limit:
                                    return out
                        i = f - 1
                        while i >= 0 and fidx[i] == navail - f + i:
                            i -= 1
                        if i < 0:
                            break
                        fidx[i] += 1
                        for i in range(i + 1, f):
                            fidx[i] = fidx[i - 1] + 1
        i = j - 1
        while i >= 0 and sidx[i] == n - j + i:
            i -= 1
        if i < 0:
            break
        sidx[i] += 1
        for i in range(i + 1, j):
            sidx[i] = sidx[i - 1] + 1
    return out
