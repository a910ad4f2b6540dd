# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking search for adjacency-preserving permutations.

Semantics match homrep._kernels_py.search_automorphisms exactly:
candidates tried in increasing label order, lexicographic output,
identity first, early stop after stop_at hits.  Limited to n <= 64
(one machine word per adjacency row); the dispatcher falls back to
the pure kernel above that.
"""

from libc.stdint cimport uint64_t


def search_automorphisms(int n, adj_masks, int stop_at):
    if stop_at < 1:
        raise ValueError("stop_at must be positive")
    if n > 64:
        raise ValueError("compiled kernel supports n <= 64")

    cdef uint64_t adj[64]
    cdef int deg[64]
    cdef uint64_t below[64]
    cdef int perm[64]
    cdef int pos[64]
    cdef uint64_t req[64]
    cdef uint64_t used = 0
    cdef uint64_t m, bit
    cdef int v, w, u, dv
    cdef bint found

    for v in range(n):
        adj[v] = <uint64_t> adj_masks[v]
        m = adj[v]
        deg[v] = 0
        while m:
            m &= m - 1
            deg[v] += 1
        below[v] = adj[v] & ((<uint64_t> 1 << v) - 1) if v < 64 else 0

    out = []
    if n == 0:
        return out

    v = 0
    pos[0] = 0
    req[0] = 0
    while v >= 0:
        found = False
        dv = deg[v]
        w = pos[v]
        while w < n:
            bit = <uint64_t> 1 << w
            if not (used & bit) and deg[w] == dv and (adj[w] & used) == req[v]:
                found = True
                break
            w += 1
        if found:
            pos[v] = w + 1
            perm[v] = w
            used |= <uint64_t> 1 << w
            v += 1
            if v == n:
                out.append(tuple([perm[u] for u in range(n)]))
                if len(out) >= stop_at:
                    return out
                v -= 1
                used &= ~(<uint64_t> 1 << perm[v])
            else:
                pos[v] = 0
                req[v] = 0
                m = below[v]
                while m:
                    u = 0
                    while not (m >> u) & 1:
                        u += 1
                    req[v] |= <uint64_t> 1 << perm[u]
                    m &= m - 1
        else:
            v -= 1
            if v >= 0:
                used &= ~(<uint64_t> 1 << perm[v])
    return out
