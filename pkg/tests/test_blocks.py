from itertools import permutations

import pytest

from homrep import (
    Graph,
    ahu_code,
    block_decomposition,
    block_tree,
    build_periodic_unicyclic,
    is_periodic_unicyclic,
    is_rigid_pendant_tree,
    named_family,
    pendant_trees,
    two_edge_connected_components,
    unique_cycle,
    RootedTreeSpec,
)
from homrep.blocks import PendantTree

TRIANGLE_WITH_TAIL = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])


def decorated_square():
    """4-cycle with a pendant edge on vertices 0 and 2 and a pendant
    2-chain on vertices 1 and 3 (alternating with period 2)."""
    g, _ = build_periodic_unicyclic(
        4, 2, [RootedTreeSpec((-1, 0)), RootedTreeSpec((-1, 0, 1))])
    return g


class TestBlockDecomposition:
    def test_k4_single_block(self, k4):
        d = block_decomposition(k4)
        assert d.blocks == (frozenset({0, 1, 2, 3}),)
        assert not d.cutvertices and not d.bridges

    def test_path_all_bridges(self):
        d = block_decomposition(named_family("path", 4))
        assert d.blocks == (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}))
        assert d.cutvertices == {1, 2}
        assert d.bridges == {(0, 1), (1, 2), (2, 3)}

    def test_bowtie(self, bowtie):
        d = block_decomposition(bowtie)
        assert set(d.blocks) == {frozenset({0, 1, 2}), frozenset({2, 3, 4})}
        assert d.cutvertices == {2}
        assert not d.bridges

    def test_single_vertex_empty(self):
        d = block_decomposition(Graph(1, []))
        assert d.blocks == () and not d.cutvertices and not d.bridges

    def test_edge_partition(self, corpus5):
        for g in corpus5[:150]:
            d = block_decomposition(g)
            all_edges = [e for es in d.block_edges for e in es]
            assert sorted(all_edges) == list(g.edges)

    def test_pairwise_intersections(self, corpus5):
        for g in corpus5[:150]:
            d = block_decomposition(g)
            for i in range(len(d.blocks)):
                for j in range(i + 1, len(d.blocks)):
                    assert len(d.blocks[i] & d.blocks[j]) <= 1


class TestBlockTree:
    def test_bowtie_centre_is_cutvertex(self, bowtie):
        bt = block_tree(block_decomposition(bowtie))
        assert len(bt.nodes) == 3 and len(bt.edges) == 2
        centre = bt.nodes[bt.centre]
        assert centre.kind == "cut" and centre.vertex == 2

    def test_k4_single_node(self, k4):
        bt = block_tree(block_decomposition(k4))
        assert len(bt.nodes) == 1 and bt.centre == 0
        assert bt.nodes[0].kind == "block"

    def test_triangle_with_pendant_edge(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
        bt = block_tree(block_decomposition(g))
        centre = bt.nodes[bt.centre]
        assert centre.kind == "cut" and centre.vertex == 0

    def test_leaves_are_blocks(self, corpus5):
        for g in corpus5[:150]:
            bt = block_tree(block_decomposition(g))
            degree = [0] * len(bt.nodes)
            for i, j in bt.edges:
                degree[i] += 1
                degree[j] += 1
            for i, node in enumerate(bt.nodes):
                if len(bt.nodes) > 1 and degree[i] == 1:
                    assert node.kind == "block"

    def test_json_shape(self, bowtie):
        data = block_tree(block_decomposition(bowtie)).to_json()
        assert set(data) == {"nodes", "edges", "centre"}
        kinds = {node["kind"] for node in data["nodes"]}
        assert kinds <= {"block", "cut"}


class TestTwoEdgeConnected:
    def test_bowtie_single_component(self, bowtie):
        assert two_edge_connected_components(bowtie) == (frozenset(range(5)),)

    def test_triangle_with_pendant_edge(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
        assert set(two_edge_connected_components(g)) == {
            frozenset({0, 1, 2}), frozenset({3})}

    def test_tree_gives_singletons(self):
        comps = two_edge_connected_components(named_family("path", 4))
        assert comps == tuple(frozenset({v}) for v in range(4))


class TestPendantTrees:
    def test_triangle_with_tail(self):
        trees = pendant_trees(TRIANGLE_WITH_TAIL)
        assert len(trees) == 1
        t = trees[0]
        assert t.root == 0 and t.vertices == {0, 3, 4}
        assert set(t.edges) == {(0, 3), (3, 4)}

    def test_k4_has_none(self, k4):
        assert pendant_trees(k4) == ()

    def test_decorated_square_has_four(self):
        trees = pendant_trees(decorated_square())
        assert [t.root for t in trees] == [0, 1, 2, 3]
        sizes = sorted(len(t.vertices) for t in trees)
        assert sizes == [2, 2, 3, 3]

    def test_cycle_component_excluded(self):
        # two triangles joined by a bridge: the far side of each bridge
        # contains a cycle, so neither endpoint roots a pendant tree
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
        assert pendant_trees(g) == ()

    def test_component_attached_twice_excluded(self):
        # triangle with a cherry: vertices 1, 2 hang off 0 through two
        # edges, so only the {3,4,5} part forms the pendant tree
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5)])
        trees = pendant_trees(g)
        assert len(trees) == 1 and trees[0].vertices == {0, 3, 4, 5}


class TestAhuCode:
    def test_single_vertex(self):
        assert ahu_code(Graph(1, []), [0], 0) == "()"

    def test_chain_of_three_rooted_at_end(self):
        g = named_family("path", 3)
        assert ahu_code(g, [0, 1, 2], 0) == "((()))"

    def test_star_equals_path_rooted_at_centre(self):
        star = named_family("star", 2)
        path = named_family("path", 3)
        assert ahu_code(star, range(3), 0) == ahu_code(path, range(3), 1) == "(()())"

    def test_non_tree_rejected(self, triangle):
        with pytest.raises(ValueError):
            ahu_code(triangle, [0, 1, 2], 0)

    def test_root_must_belong(self):
        g = named_family("path", 3)
        with pytest.raises(ValueError):
            ahu_code(g, [0, 1], 2)


def _pendant(root, vertices, edges):
    return PendantTree(root=root, vertices=frozenset(vertices), edges=tuple(edges))


def _brute_rigid(tree):
    others = sorted(tree.vertices - {tree.root})
    edge_set = set(tree.edges)
    for image in permutations(others):
        mapping = dict(zip(others, image))
        mapping[tree.root] = tree.root
        if all(mapping[v] == v for v in others):
            continue
        if all(((mapping[u], mapping[v]) if mapping[u] < mapping[v]
                else (mapping[v], mapping[u])) in edge_set for u, v in tree.edges):
            return False
    return True


class TestRigidity:
    def test_two_leaves_swap(self):
        t = _pendant(0, [0, 1, 2], [(0, 1), (0, 2)])
        assert not is_rigid_pendant_tree(t)

    def test_chain_is_rigid(self):
        t = _pendant(0, [0, 1, 2], [(0, 1), (1, 2)])
        assert is_rigid_pendant_tree(t)

    def test_leaf_plus_chain_is_rigid(self):
        # oracle: all root-fixing permutations of the 4 vertices
        t = _pendant(0, [0, 1, 2, 3], [(0, 1), (0, 2), (2, 3)])
        assert _brute_rigid(t)
        assert is_rigid_pendant_tree(t)

    def test_symmetry_deeper_down(self):
        t = _pendant(0, [0, 1, 2, 3], [(0, 1), (1, 2), (1, 3)])
        assert not _brute_rigid(t)
        assert not is_rigid_pendant_tree(t)

    def test_agrees_with_brute_force_on_corpus(self, corpus5):
        for g in corpus5:
            if g.num_edges < g.n:
                continue
            for t in pendant_trees(g):
                assert is_rigid_pendant_tree(t) == _brute_rigid(t)


class TestUniqueCycle:
    def test_c5_is_itself(self):
        c = unique_cycle(named_family("cycle", 5))
        assert c.vertices() == (0, 1, 2, 3, 4)

    def test_canonical_orientation(self):
        # cycle through 0-2-1-3: starts at 0 and heads toward the
        # smaller cycle neighbor
        g = Graph(4, [(0, 2), (1, 2), (1, 3), (0, 3)])
        c = unique_cycle(g)
        assert c.vertices()[0] == 0
        assert c.vertices()[1] == min(c.vertices()[1], c.vertices()[-1])

    def test_decorated_square_cycle(self):
        c = unique_cycle(decorated_square())
        assert c.vertices() == (0, 1, 2, 3)

    def test_k4_rejected(self, k4):
        with pytest.raises(ValueError):
            unique_cycle(k4)

    def test_tree_rejected(self):
        with pytest.raises(ValueError):
            unique_cycle(named_family("path", 3))


class TestPeriodicUnicyclic:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_bare_cycle(self, n):
        assert is_periodic_unicyclic(named_family("cycle", n)) == (True, 1)

    def test_decorated_square(self):
        assert is_periodic_unicyclic(decorated_square()) == (True, 2)

    def test_triangle_with_one_leaf(self):
        g = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
        assert is_periodic_unicyclic(g) == (False, None)

    def test_not_unicyclic(self, k4, bowtie):
        assert is_periodic_unicyclic(k4) == (False, None)
        assert is_periodic_unicyclic(bowtie) == (False, None)

    def test_tree(self):
        assert is_periodic_unicyclic(named_family("path", 4)) == (False, None)

    def test_period_counts_trees_not_just_shape(self):
        # pendant edges on opposite corners only: rotation by 2 works,
        # rotation by 1 does not
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 5)])
        assert is_periodic_unicyclic(g) == (True, 2)
