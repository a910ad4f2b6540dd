"""Block structure of a connected graph.

Covers blocks (maximal 2-connected subgraphs), cutvertices and bridges,
the bipartite block tree and its centre, 2-edge-connected components,
pendant trees hanging off nontrivial blocks, canonical codes for rooted
trees, and detection of unicyclic graphs whose unique cycle admits a
nontrivial rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import OrientedCycle, betti, fundamental_cycle, spanning_tree_basis
from .graphs import Dart, Graph, is_connected, require_connected


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as vertex sets, with the bridge and cutvertex summary.

    Trivial two-vertex blocks are kept so that every edge belongs to
    exactly one block; bridges are precisely the trivial blocks.
    """

    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cutvertices: frozenset[int]
    bridges: frozenset[tuple[int, int]]

    def nontrivial_blocks(self) -> tuple[frozenset[int], ...]:
        return tuple(b for b in self.blocks if len(b) >= 3)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Standard lowpoint (depth-first) biconnected-components algorithm."""
    require_connected(g)
    n = g.n
    if n < 2:
        return BlockDecomposition((), (), frozenset(), frozenset())

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    next_nbr = [0] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []

    disc[0] = low[0] = 0
    timer = 1
    stack = [0]
    while stack:
        v = stack[-1]
        nbrs = g.neighbors(v)
        if next_nbr[v] < len(nbrs):
            w = nbrs[next_nbr[v]]
            next_nbr[v] += 1
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((v, w))
                stack.append(w)
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    raw_blocks.append(block)

    blocks = []
    block_edges = []
    for raw in raw_blocks:
        verts = frozenset(x for e in raw for x in e)
        edges = tuple(sorted((a, b) if a < b else (b, a) for a, b in raw))
        blocks.append((tuple(sorted(verts)), verts, edges))
    blocks.sort(key=lambda t: t[0])

    counts: dict[int, int] = {}
    for _, verts, _ in blocks:
        for x in verts:
            counts[x] = counts.get(x, 0) + 1
    cutvertices = frozenset(x for x, c in counts.items() if c >= 2)
    bridges = frozenset(edges[0] for _, verts, edges in blocks if len(verts) == 2)
    return BlockDecomposition(
        blocks=tuple(verts for _, verts, _ in blocks),
        block_edges=tuple(edges for _, _, edges in blocks),
        cutvertices=cutvertices,
        bridges=bridges)


@dataclass(frozen=True)
class BlockTreeNode:
    kind: str  # "block" or "cut"
    members: tuple[int, ...] | None = None
    vertex: int | None = None

    def to_json(self) -> dict:
        if self.kind == "block":
            return {"kind": "block", "members": list(self.members)}
        return {"kind": "cut", "vertex": self.vertex}


@dataclass(frozen=True)
class BlockTree:
    """Bipartite incidence tree of blocks and cutvertices, with centre."""

    nodes: tuple[BlockTreeNode, ...]
    edges: tuple[tuple[int, int], ...]
    centre: int

    def to_json(self) -> dict:
        return {"nodes": [x.to_json() for x in self.nodes],
                "edges": [list(e) for e in self.edges],
                "centre": self.centre}


def block_tree(d: BlockDecomposition) -> BlockTree:
    """Incidence tree (cutvertex adjacent to block iff it lies in it).

    The centre is computed by iterated leaf removal and asserted to be
    a single node, which holds for every block tree because all its
    leaves are blocks.
    """
    if not d.blocks:
        raise ValueError("empty decomposition has no block tree")
    nodes = [BlockTreeNode("block", members=tuple(sorted(b))) for b in d.blocks]
    cut_index = {}
    for x in sorted(d.cutvertices):
        cut_index[x] = len(nodes)
        nodes.append(BlockTreeNode("cut", vertex=x))
    edges = []
    for bi, b in enumerate(d.blocks):
        for x in sorted(b & d.cutvertices):
            edges.append((bi, cut_index[x]))

    total = len(nodes)
    if len(edges) != total - 1:
        raise RuntimeError("block incidence structure is not a tree")
    adj: list[set[int]] = [set() for _ in range(total)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)

    remaining = set(range(total))
    deg = {i: len(adj[i]) for i in remaining}
    while len(remaining) > 2:
        leaves = [i for i in remaining if deg[i] <= 1]
        for leaf in leaves:
            remaining.discard(leaf)
            for other in adj[leaf]:
                if other in remaining:
                    deg[other] -= 1
    if len(remaining) != 1:
        raise RuntimeError(
            f"block tree centre is not a single node: {sorted(remaining)}")
    return BlockTree(tuple(nodes), tuple(edges), remaining.pop())


def two_edge_connected_components(g: Graph) -> tuple[frozenset[int], ...]:
    """Components after deleting all bridges; singletons included."""
    require_connected(g)
    bridges = block_decomposition(g).bridges
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        for x in queue:
            for y in g.neighbors(x):
                e = (x, y) if x < y else (y, x)
                if not seen[y] and e not in bridges:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


def is_simple_cycle_graph(g: Graph) -> bool:
    """True iff the whole graph is one simple cycle."""
    return (g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n))
            and is_connected(g))


@dataclass(frozen=True)
class PendantTree:
    """The maximal acyclic subgraph hanging off a root cutvertex.

    The root lies in at least one nontrivial block and at least one
    bridge; the hanging part is the union of the acyclic components of
    g - root attached to the root by exactly one edge.
    """

    root: int
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj


def _components_without(g: Graph, w: int) -> list[list[int]]:
    seen = [False] * g.n
    seen[w] = True
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        for x in queue:
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def pendant_trees(g: Graph) -> tuple[PendantTree, ...]:
    """All pendant trees, in increasing root order.

    A vertex roots a pendant tree when it lies in a nontrivial block and
    in a bridge, and at least one component of g - root is acyclic and
    attached to the root by exactly one edge.
    """
    require_connected(g)
    d = block_decomposition(g)
    in_nontrivial = set()
    for b in d.nontrivial_blocks():
        in_nontrivial |= b
    on_bridge = {x for e in d.bridges for x in e}
    out = []
    for w in sorted(in_nontrivial & on_bridge):
        hanging: list[int] = []
        for comp in _components_without(g, w):
            comp_set = set(comp)
            inner_edges = sum(1 for u, v in g.edges if u in comp_set and v in comp_set)
            to_w = sum(1 for y in g.neighbors(w) if y in comp_set)
            if inner_edges == len(comp) - 1 and to_w == 1:
                hanging.extend(comp)
        if not hanging:
            continue
        verts = frozenset(hanging) | {w}
        edges = tuple((u, v) for u, v in g.edges if u in verts and v in verts)
        out.append(PendantTree(root=w, vertices=verts, edges=edges))
    return tuple(out)


def _tree_adjacency(g: Graph, vertices) -> dict[int, list[int]]:
    vset = set(vertices)
    adj: dict[int, list[int]] = {v: [] for v in vset}
    nedges = 0
    for u, v in g.edges:
        if u in vset and v in vset:
            adj[u].append(v)
            adj[v].append(u)
            nedges += 1
    if nedges != len(vset) - 1:
        raise ValueError("vertex set does not induce a tree")
    # connectivity check: reach everything from an arbitrary vertex
    start = next(iter(vset))
    seen = {start}
    queue = [start]
    for x in queue:
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if seen != vset:
        raise ValueError("vertex set does not induce a tree")
    for v in adj:
        adj[v].sort()
    return adj


def _subtree_codes(adj: dict[int, list[int]], root: int) -> dict[int, str]:
    """Canonical parenthesis code of every subtree, bottom-up."""
    codes: dict[int, str] = {}
    stack = [(root, -1, False)]
    while stack:
        v, par, done = stack.pop()
        if done:
            children = sorted(codes[c] for c in adj[v] if c != par)
            codes[v] = "(" + "".join(children) + ")"
        else:
            stack.append((v, par, True))
            for c in adj[v]:
                if c != par:
                    stack.append((c, v, False))
    return codes


def ahu_code(g: Graph, vertices, root: int) -> str:
    """Canonical code of the rooted tree induced by the given vertices.

    Leaves encode as "()"; an internal node concatenates its children's
    codes in sorted order inside one pair of parentheses.  Two rooted
    trees are isomorphic iff their codes are equal.
    """
    vset = set(vertices)
    if root not in vset:
        raise ValueError(f"root {root} is not among the tree vertices")
    adj = _tree_adjacency(g, vset)
    return _subtree_codes(adj, root)[root]


def is_rigid_pendant_tree(s: PendantTree) -> bool:
    """True iff the tree admits no nontrivial root-fixing automorphism.

    Equivalent to: no vertex has two children with equal canonical
    codes, rooted at the pendant root.
    """
    adj = s.adjacency()
    codes = _subtree_codes(adj, s.root)
    stack = [(s.root, -1)]
    while stack:
        v, par = stack.pop()
        child_codes = [codes[c] for c in adj[v] if c != par]
        if len(child_codes) != len(set(child_codes)):
            return False
        stack.extend((c, v) for c in adj[v] if c != par)
    return True


def rooted_tree_isomorphism(adj_a: dict[int, list[int]], root_a: int,
                            adj_b: dict[int, list[int]], root_b: int) -> dict[int, int] | None:
    """An explicit root-to-root isomorphism, or None when codes differ.

    Children with equal codes are paired in (code, label) order, which
    keeps the map deterministic.
    """
    codes_a = _subtree_codes(adj_a, root_a)
    codes_b = _subtree_codes(adj_b, root_b)
    if codes_a[root_a] != codes_b[root_b]:
        return None
    mapping = {root_a: root_b}
    stack = [(root_a, -1, root_b, -1)]
    while stack:
        va, pa, vb, pb = stack.pop()
        kids_a = sorted(((codes_a[c], c) for c in adj_a[va] if c != pa))
        kids_b = sorted(((codes_b[c], c) for c in adj_b[vb] if c != pb))
        for (ca, a), (cb, bb) in zip(kids_a, kids_b):
            if ca != cb:
                return None
            mapping[a] = bb
            stack.append((a, va, bb, vb))
    return mapping


def unique_cycle(g: Graph) -> OrientedCycle:
    """The unique simple cycle of a graph with exactly one independent cycle.

    Canonical orientation: starts at the smallest cycle vertex, heading
    toward the smaller of its two cycle neighbors.
    """
    if betti(g) != 1:
        raise ValueError(f"graph has {betti(g)} independent cycles, expected 1")
    c = fundamental_cycle(spanning_tree_basis(g), 1)
    seq = list(c.vertices())
    i0 = seq.index(min(seq))
    seq = seq[i0:] + seq[:i0]
    if seq[1] > seq[-1]:
        seq = [seq[0]] + seq[1:][::-1]
    m = len(seq)
    return OrientedCycle([Dart(seq[j], seq[(j + 1) % m]) for j in range(m)])


def _hanging_tree_codes(g: Graph, cyc: OrientedCycle) -> tuple[list[str], list[list[int]]]:
    """Per cycle vertex: code (and vertex list) of its tree component
    after the cycle's edges are deleted."""
    cycle_edges = cyc.edge_set()
    codes = []
    comps = []
    for v in cyc.vertices():
        comp = [v]
        seen = {v}
        queue = [v]
        for x in queue:
            for y in g.neighbors(x):
                e = (x, y) if x < y else (y, x)
                if e in cycle_edges or y in seen:
                    continue
                seen.add(y)
                comp.append(y)
                queue.append(y)
        adj: dict[int, list[int]] = {x: [] for x in comp}
        for u, vv in g.edges:
            if u in seen and vv in seen and (u, vv) not in cycle_edges:
                adj[u].append(vv)
                adj[vv].append(u)
        for x in adj:
            adj[x].sort()
        codes.append(_subtree_codes(adj, v)[v])
        comps.append(comp)
    return codes, comps


def _divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]


def is_periodic_unicyclic(g: Graph) -> tuple[bool, int | None]:
    """Detect a nontrivial rotation of the unique cycle.

    Returns (False, None) unless the graph has exactly one independent
    cycle.  Otherwise the hanging tree at each cycle vertex is encoded
    canonically; the graph admits a nontrivial rotation iff the cyclic
    word of codes has minimal period k < cycle length, and then
    (True, k) is returned.
    """
    require_connected(g)
    if g.num_edges - g.n + 1 != 1:
        return (False, None)
    cyc = unique_cycle(g)
    word, _ = _hanging_tree_codes(g, cyc)
    m = len(word)
    for k in _divisors(m):
        if all(word[j] == word[(j + k) % m] for j in range(m)):
            if k < m:
                return (True, k)
            return (False, None)
    raise AssertionError("unreachable: period m always matches")
