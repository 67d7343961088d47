"""Pure-Python hot kernels; API twin of the compiled ``_kernels`` module.

Adjacency arguments are sequences of integer bitmasks. Every function
here must return exactly what the compiled version returns.
"""

from itertools import combinations

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def refine(adj, colors):
    """Equitable refinement of a vertex colouring.

    New colours are ranks of ``(old colour, neighbour counts per cell)``
    keys, so the result depends only on the isomorphism type of the
    coloured graph. Returns ``(colours, trace)`` where ``trace`` encodes
    cell sizes and the quotient matrix of the final partition.
    """
    n = len(adj)
    distinct = sorted(set(colors))
    rank = {c: i for i, c in enumerate(distinct)}
    col = [rank[c] for c in colors]
    ncol = len(distinct)
    while True:
        cells = [0] * ncol
        for v in range(n):
            cells[col[v]] |= 1 << v
        keys = [(col[v],) + tuple((adj[v] & m).bit_count() for m in cells)
                for v in range(n)]
        uniq = sorted(set(keys))
        if len(uniq) == ncol:
            break
        index = {k: i for i, k in enumerate(uniq)}
        col = [index[k] for k in keys]
        ncol = len(uniq)
    sizes = [m.bit_count() for m in cells]
    trace = [ncol]
    for c in range(ncol):
        rep = (cells[c] & -cells[c]).bit_length() - 1
        trace.append(sizes[c])
        trace.extend((adj[rep] & m).bit_count() for m in cells)
    return col, tuple(trace)


def _components(adj, rest):
    comps = []
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def _is_connected(adj, rest):
    if not rest:
        return True
    seen = rest & -rest
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= rest & ~seen
        seen |= nxt
        frontier = nxt
    return seen == rest


def separators(adj, k, limit=0):
    """Bitmasks of all ``k``-sets ``S`` such that ``G - S`` is disconnected.

    Stops after ``limit`` hits when ``limit`` is positive.
    """
    n = len(adj)
    full = (1 << n) - 1
    out = []
    if n - k < 2:
        return out
    for S in combinations(range(n), k):
        sm = 0
        for v in S:
            sm |= 1 << v
        if not _is_connected(adj, full & ~sm):
            out.append(sm)
            if limit and len(out) >= limit:
                break
    return out


def mixed_separators(adj, eu, ev, j, f, matching=True, limit=0):
    """Separator shapes made of ``j`` vertices and ``f`` edges.

    Yields every ``(S, F)`` where ``S`` is a ``j``-set of vertices, ``F`` a
    set of ``f`` edge indices (into ``eu``/``ev``) with no end in ``S``,
    pairwise disjoint when ``matching``, such that after deleting ``S`` and
    ``F`` every edge of ``F`` joins two different components, and at least
    two components remain. Returned as ``(S_mask, F_tuple)``.
    """
    n = len(adj)
    full = (1 << n) - 1
    m = len(eu)
    out = []
    for S in combinations(range(n), j):
        sm = 0
        for v in S:
            sm |= 1 << v
        rest = full & ~sm
        if rest.bit_count() < 2:
            continue
        if f == 0:
            if not _is_connected(adj, rest):
                out.append((sm, ()))
                if limit and len(out) >= limit:
                    return out
            continue
        avail = [i for i in range(m)
                 if not (sm >> eu[i] & 1) and not (sm >> ev[i] & 1)]
        for F in combinations(avail, f):
            if matching:
                used = 0
                ok = True
                for i in F:
                    em = (1 << eu[i]) | (1 << ev[i])
                    if used & em:
                        ok = False
                        break
                    used |= em
                if not ok:
                    continue
            cut = list(adj)
            for i in F:
                cut[eu[i]] &= ~(1 << ev[i])
                cut[ev[i]] &= ~(1 << eu[i])
            comps = _components(cut, rest)
            if len(comps) < 2:
                continue
            ok = True
            for i in F:
                a = eu[i]
                b = ev[i]
                for c in comps:
                    if c >> a & 1:
                        if c >> b & 1:
                            ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append((sm, tuple(F)))
                if limit and len(out) >= limit:
                    return out
    return out
