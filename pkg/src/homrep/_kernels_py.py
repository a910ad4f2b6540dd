"""Pure-Python backtracking search for adjacency-preserving permutations.

Reference implementation of the hot kernel; homrep._speedups is the
compiled twin with identical semantics.  Candidate images are tried in
increasing label order, so permutations come out in lexicographic order
with the identity first.
"""

from __future__ import annotations


def search_automorphisms(n: int, adj_masks: list[int], stop_at: int) -> list[tuple[int, ...]]:
    """Collect adjacency-preserving permutations, at most stop_at of them.

    adj_masks[u] has bit v set iff u ~ v.  Stopping early at stop_at lets
    callers implement both group-order caps (stop_at = cap + 1) and
    early-exit symmetry detection (stop_at = 2).
    """
    if stop_at < 1:
        raise ValueError("stop_at must be positive")
    deg = [m.bit_count() for m in adj_masks]
    # earlier-neighbor masks: bits below v in row v
    below = [adj_masks[v] & ((1 << v) - 1) for v in range(n)]
    out: list[tuple[int, ...]] = []
    perm = [0] * n

    def extend(v: int, used: int) -> bool:
        if v == n:
            out.append(tuple(perm))
            return len(out) >= stop_at
        # image of v must be adjacent to exactly the images of v's
        # already-assigned neighbors (both directions of preservation)
        req = 0
        m = below[v]
        while m:
            low = m & -m
            req |= 1 << perm[low.bit_length() - 1]
            m ^= low
        dv = deg[v]
        for w in range(n):
            bit = 1 << w
            if used & bit or deg[w] != dv or (adj_masks[w] & used) != req:
                continue
            perm[v] = w
            if extend(v + 1, used | bit):
                return True
        return False

    extend(0, 0)
    return out
