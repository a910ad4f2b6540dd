"""Spanning-tree bases of the cycle space and homology coordinates.

A spanning tree T of a connected graph leaves beta = e - v + 1 co-tree
edges.  Each co-tree dart x_i closes a unique simple oriented cycle
through the tree; these fundamental cycles are a basis of the first
homology group, and every simple oriented cycle has coordinates in
{-1, 0, 1} with respect to it.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .graphs import Dart, Graph, require_connected


class OrientedCycle:
    """A simple closed walk, stored as the sequence of darts it traverses.

    Two values compare equal when they traverse the same darts in the
    same cyclic order, regardless of starting dart.
    """

    __slots__ = ("darts", "_canon")

    def __init__(self, darts: Sequence[Dart]):
        darts = tuple(Dart(*d) for d in darts)
        k = len(darts)
        if k < 3:
            raise ValueError(f"a simple cycle has at least 3 darts, got {k}")
        for j, d in enumerate(darts):
            if d.head != darts[(j + 1) % k].tail:
                raise ValueError("darts do not chain into a closed walk")
        tails = [d.tail for d in darts]
        if len(set(tails)) != k:
            raise ValueError("cycle revisits a vertex (not simple)")
        self.darts = darts
        shift = min(range(k), key=lambda j: darts[j])
        self._canon = darts[shift:] + darts[:shift]

    def __len__(self) -> int:
        return len(self.darts)

    def vertices(self) -> tuple[int, ...]:
        return tuple(d.tail for d in self.darts)

    def dart_set(self) -> frozenset[Dart]:
        return frozenset(self.darts)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(d.edge for d in self.darts)

    def reverse(self) -> "OrientedCycle":
        return OrientedCycle(tuple(d.inverse() for d in reversed(self.darts)))

    def __eq__(self, other) -> bool:
        return isinstance(other, OrientedCycle) and self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def __repr__(self) -> str:
        return f"OrientedCycle({list(self.darts)})"


class SpanningTreeBasis:
    """A spanning tree plus the ordered co-tree darts x_1..x_beta.

    Co-tree darts are oriented (u, v) with u < v and listed in
    lexicographic order.  The tree is held as parent pointers from
    `root`, which is how fundamental-cycle tree paths are recovered.
    """

    __slots__ = ("graph", "root", "tree_edges", "cotree", "parent", "depth",
                 "_cycles", "_coord_index")

    def __init__(self, graph: Graph, tree_edges: Iterable[tuple[int, int]],
                 root: int = 0):
        tree = frozenset((u, v) if u < v else (v, u) for u, v in tree_edges)
        n = graph.n
        if len(tree) != n - 1:
            raise ValueError(f"spanning tree needs {n - 1} edges, got {len(tree)}")
        for u, v in tree:
            if not graph.has_edge(u, v):
                raise ValueError(f"tree edge ({u}, {v}) is not a graph edge")
        # orient the tree away from the root; also checks it spans
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in tree:
            adj[u].append(v)
            adj[v].append(u)
        parent = [-2] * n
        depth = [0] * n
        parent[root] = -1
        queue = [root]
        for x in queue:
            for y in sorted(adj[x]):
                if parent[y] == -2:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
        if len(queue) != n:
            raise ValueError("edge set is not a spanning tree (does not reach "
                             "every vertex)")
        self.graph = graph
        self.root = root
        self.tree_edges = tree
        self.parent = tuple(parent)
        self.depth = tuple(depth)
        self.cotree = tuple(Dart(u, v) for u, v in graph.edges if (u, v) not in tree)
        self._cycles: tuple[OrientedCycle, ...] | None = None
        self._coord_index: dict[Dart, tuple[int, int]] | None = None

    @property
    def beta(self) -> int:
        return len(self.cotree)

    def tree_path_darts(self, a: int, b: int) -> list[Dart]:
        """Darts of the unique tree path from a to b."""
        parent, depth = self.parent, self.depth
        up_a: list[Dart] = []
        up_b: list[Dart] = []
        while depth[a] > depth[b]:
            up_a.append(Dart(a, parent[a]))
            a = parent[a]
        while depth[b] > depth[a]:
            up_b.append(Dart(b, parent[b]))
            b = parent[b]
        while a != b:
            up_a.append(Dart(a, parent[a]))
            up_b.append(Dart(b, parent[b]))
            a, b = parent[a], parent[b]
        return up_a + [d.inverse() for d in reversed(up_b)]

    def fundamental_cycles(self) -> tuple[OrientedCycle, ...]:
        if self._cycles is None:
            cycles = []
            for x in self.cotree:
                cycles.append(OrientedCycle([x] + self.tree_path_darts(x.head, x.tail)))
            self._cycles = tuple(cycles)
        return self._cycles

    def coordinate_index(self) -> dict[Dart, tuple[int, int]]:
        """Map each co-tree dart (either orientation) to (position, sign)."""
        if self._coord_index is None:
            index: dict[Dart, tuple[int, int]] = {}
            for i, x in enumerate(self.cotree):
                index[x] = (i, 1)
                index[x.inverse()] = (i, -1)
            self._coord_index = index
        return self._coord_index

    def __repr__(self) -> str:
        return (f"SpanningTreeBasis(root={self.root}, "
                f"tree={sorted(self.tree_edges)}, cotree={list(self.cotree)})")


def betti(g: Graph) -> int:
    """First Betti number e - v + 1 of a connected graph."""
    require_connected(g)
    return g.num_edges - g.n + 1


def basis_from_tree(g: Graph, tree_edges: Iterable[tuple[int, int]],
                    root: int = 0) -> SpanningTreeBasis:
    """Basis determined by an explicit spanning tree."""
    require_connected(g)
    return SpanningTreeBasis(g, tree_edges, root)


def spanning_tree_basis(g: Graph) -> SpanningTreeBasis:
    """Canonical basis: BFS tree from vertex 0, neighbors in label order.

    Deterministic, so repeated runs (and golden outputs) agree.
    """
    require_connected(g)
    n = g.n
    seen = [False] * n
    seen[0] = True
    tree = []
    queue = [0]
    for x in queue:
        for y in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                tree.append((x, y))
                queue.append(y)
    return SpanningTreeBasis(g, tree, root=0)


def random_spanning_tree_basis(g: Graph, seed: int) -> SpanningTreeBasis:
    """Seeded randomized-DFS spanning tree; same seed, same basis."""
    require_connected(g)
    rng = random.Random(seed)
    n = g.n
    root = rng.randrange(n)
    seen = [False] * n
    tree = []
    stack: list[tuple[int, int]] = [(root, -1)]
    while stack:
        x, came_from = stack.pop()
        if seen[x]:
            continue
        seen[x] = True
        if came_from >= 0:
            tree.append((came_from, x))
        nbrs = list(g.neighbors(x))
        rng.shuffle(nbrs)
        for y in nbrs:
            if not seen[y]:
                stack.append((y, x))
    return SpanningTreeBasis(g, tree, root=root)


def fundamental_cycle(b: SpanningTreeBasis, i: int) -> OrientedCycle:
    """The i-th fundamental cycle (1-based, matching cotree order e_1..e_beta).

    Starts with the co-tree dart x_i, followed by the tree path from
    head(x_i) back to tail(x_i).
    """
    if not 1 <= i <= b.beta:
        raise ValueError(f"cycle index {i} out of range 1..{b.beta}")
    return b.fundamental_cycles()[i - 1]


def cycle_coordinates(c: OrientedCycle, b: SpanningTreeBasis) -> tuple[int, ...]:
    """Homology coordinates of a simple oriented cycle in basis b.

    Entry i is +1 if c traverses x_i, -1 if it traverses its inverse,
    0 otherwise.
    """
    g = b.graph
    index = b.coordinate_index()
    coords = [0] * b.beta
    for d in c.darts:
        if not g.is_dart(d):
            raise ValueError(f"dart {d} does not belong to the graph")
        hit = index.get(d)
        if hit is not None:
            coords[hit[0]] += hit[1]
    return tuple(coords)
