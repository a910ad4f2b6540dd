"""Independent oracles shared by the test modules.

Everything here is deliberately written from scratch against the
definitions (permutation filters, direct bit arithmetic, Laplace
expansion, multiset recursion) so the tests never reuse the code paths
they are checking.
"""

from __future__ import annotations

from itertools import permutations

from homrep import Graph


def brute_force_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All n! permutations, filtered by adjacency preservation."""
    edge_set = set(g.edges)
    out = []
    for p in permutations(range(g.n)):
        ok = True
        for u, v in g.edges:
            a, b = p[u], p[v]
            if ((a, b) if a < b else (b, a)) not in edge_set:
                ok = False
                break
        if ok:
            out.append(p)
    return out


def reference_graph6_encode(n: int, edge_bits: dict[tuple[int, int], int]) -> str:
    """Direct bit-arithmetic graph6 encoder (n < 63)."""
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(edge_bits.get((i, j), 0))
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = sum(b << (5 - i) for i, b in enumerate(bits[k:k + 6]))
        chars.append(chr(val + 63))
    return "".join(chars)


def reference_graph6_decode(s: str) -> tuple[int, set[tuple[int, int]]]:
    """Direct bit-arithmetic graph6 decoder (n < 63)."""
    n = ord(s[0]) - 63
    bitstring = "".join(format(ord(c) - 63, "06b") for c in s[1:])
    edges = set()
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[pos] == "1":
                edges.add((i, j))
            pos += 1
    return n, edges


def laplace_determinant(rows) -> int:
    """Cofactor-expansion determinant (first row), exact."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        total += (-1) ** j * x * laplace_determinant(minor)
    return total


def signed_incidence_matrix(g, perm, basis):
    """Entry-rule oracle for the matrix of an automorphism.

    Entry (i, j) is the signed number of times the image of the j-th
    fundamental cycle traverses the i-th co-tree dart: +1 per forward
    traversal, -1 per backward traversal, summed over the whole cycle.
    """
    beta = basis.beta
    rows = [[0] * beta for _ in range(beta)]
    for j, cycle in enumerate(basis.fundamental_cycles()):
        image = [(perm[d.tail], perm[d.head]) for d in cycle.darts]
        for i, x in enumerate(basis.cotree):
            fwd = sum(1 for d in image if d == (x.tail, x.head))
            bwd = sum(1 for d in image if d == (x.head, x.tail))
            rows[i][j] = fwd - bwd
    return [tuple(r) for r in rows]


def rooted_trees_up_to_iso(n: int) -> list[tuple[int, ...]]:
    """All rooted trees on n vertices, one parent array per isomorphism
    class, generated by canonical multiset recursion (no canonical-code
    machinery involved)."""
    memo: dict[int, list[tuple[int, ...]]] = {1: [(-1,)]}

    def trees(size: int) -> list[tuple[int, ...]]:
        if size in memo:
            return memo[size]
        result = []
        # partition size-1 into a nondecreasing sequence of (subtree size,
        # index within trees(size)) pairs; nondecreasing pairs make each
        # multiset appear exactly once
        def assemble(remaining, min_pair, chosen):
            if remaining == 0:
                parents = [-1]
                offset = 1
                for s, idx in chosen:
                    sub = trees(s)[idx]
                    parents.append(0)
                    for t in range(1, s):
                        parents.append(sub[t] + offset)
                    offset += s
                result.append(tuple(parents))
                return
            for s in range(1, remaining + 1):
                for idx in range(len(trees(s))):
                    if (s, idx) < min_pair:
                        continue
                    assemble(remaining - s, (s, idx), chosen + [(s, idx)])

        assemble(size - 1, (1, 0), [])
        memo[size] = result
        return result

    return trees(n)


def parents_to_edges(parents) -> list[tuple[int, int]]:
    return [(parents[i], i) for i in range(1, len(parents))]


def brute_rooted_isomorphic(parents_a, parents_b) -> bool:
    """Backtracking search for a root-fixing bijection between two
    rooted trees given as parent arrays."""
    if len(parents_a) != len(parents_b):
        return False
    n = len(parents_a)
    kids_a = [[] for _ in range(n)]
    kids_b = [[] for _ in range(n)]
    for i in range(1, n):
        kids_a[parents_a[i]].append(i)
        kids_b[parents_b[i]].append(i)

    def match(a, b) -> bool:
        ka, kb = kids_a[a], kids_b[b]
        if len(ka) != len(kb):
            return False
        if not ka:
            return True
        # try every assignment of a's children onto b's children
        for image in permutations(kb):
            if all(match(x, y) for x, y in zip(ka, image)):
                return True
        return False

    return match(0, 0)


def all_increasing_parent_arrays(n: int) -> list[tuple[int, ...]]:
    """Every parent array with parent[i] < i: covers every rooted-tree
    isomorphism class on n vertices (BFS relabeling is increasing)."""
    out: list[tuple[int, ...]] = [(-1,)]
    for i in range(1, n):
        out = [t + (p,) for t in out for p in range(i)]
    return out
