import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdvhc.errors import ValidationError
from rdvhc.graph import maximal_cliques
from rdvhc.oracle.generators import GenSpec, gen_bipartite
from rdvhc.reduction import (BipartiteInstance, build_clique_tree, decode, expected_path,
                             expected_vertex_count, normalize, reduce)
from rdvhc.rdv import paths_from_clique_tree

from conftest import C4_EDGES, K33_EDGES


def generated(count=200, seed=0):
    rng = random.Random(seed)
    for k in range(count):
        yield gen_bipartite(GenSpec(rng.randint(2, 8), k, plant=rng.random() < 0.5,
                                    extra_edge_prob=rng.choice([0.0, 0.25, 0.5, 1.0])))


class TestNormalize:
    def test_unbalanced(self):
        out = normalize(2, 3, [(i, j) for i in (1, 2) for j in (1, 2, 3)])
        assert out.kind == "trivial-no" and out.reason == "unbalanced"

    def test_c4(self):
        out = normalize(2, 2, C4_EDGES)
        assert out.normalized and out.instance.edges == tuple(C4_EDGES)

    def test_degree_four(self):
        out = normalize(4, 4, [(1, j) for j in range(1, 5)])
        assert out.kind == "invalid" and "exceeds 3" in out.reason

    def test_duplicate(self):
        assert normalize(2, 2, C4_EDGES + [(1, 1)]).kind == "invalid"

    def test_out_of_range(self):
        assert normalize(2, 2, C4_EDGES[:3] + [(2, 3)]).kind == "invalid"

    def test_degree_one(self):
        out = normalize(3, 3, [(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (2, 3)])
        assert out.kind == "trivial-no" and out.reason.startswith("low-degree")

    def test_too_small(self):
        assert normalize(1, 1, [(1, 1)]).reason == "too-small"

    def test_disconnected_is_accepted(self):
        two_c4 = C4_EDGES + [(i + 2, j + 2) for i, j in C4_EDGES]
        assert normalize(4, 4, two_c4).normalized


class TestInstance:
    def test_rejects_bad_degree(self):
        with pytest.raises(ValidationError):
            BipartiteInstance(2, C4_EDGES[:3])

    def test_rejects_small_r(self):
        with pytest.raises(ValidationError):
            BipartiteInstance(1, [(1, 1)])


class TestReduce:
    def test_c4_cliques(self, c4_red):
        assert c4_red.labels == {
            "K1": ("X1", "A1_1", "A1_2"),
            "K2": ("X2", "A1_1", "A1_2", "A2_1", "A2_2"),
            "Kp1": ("Y1", "A1_1", "A2_1"),
            "Kp2": ("Y2", "A1_2", "A2_2"),
        }
        assert len(c4_red.graph) == 8
        # 3 + 10 + 3 + 3 clique edges minus the pairs shared between cliques
        assert len(c4_red.graph.edges) == 16

    def test_k33_sizes(self, k33_red):
        assert len(k33_red.graph) == 18 == 2 * 3 + 3 + 9
        assert len(k33_red.clique_family) == 9

    @pytest.mark.parametrize("edges,r", [(C4_EDGES, 2), (K33_EDGES, 3)])
    def test_oracle_confirms_cliques(self, edges, r):
        red = reduce(BipartiteInstance(r, edges))
        assert maximal_cliques(red.graph) == sorted(tuple(sorted(c)) for c in red.clique_family)

    def test_graph_is_union_of_cliques(self, k33_red):
        pairs = {tuple(sorted(p)) for c in k33_red.clique_family for p in combinations(c, 2)}
        assert k33_red.graph.edges == pairs

    def test_rejects_non_instance(self):
        with pytest.raises(ValidationError):
            reduce((2, C4_EDGES))

    def test_deterministic(self):
        for b in generated(20, seed=3):
            a, c = reduce(b), reduce(BipartiteInstance(b.r, list(reversed(b.edges))))
            assert a.graph.vertices == c.graph.vertices and a.graph.sorted_edges() == c.graph.sorted_edges()
            assert a.clique_family == c.clique_family


class TestCliqueTree:
    def test_c4_arcs(self, c4_red):
        assert set(c4_red.clique_tree.tree.arcs) == {("K1", "K2"), ("K2", "Kp1"), ("K2", "Kp2")}

    def test_k33_arcs(self, k33_red):
        arcs = set(k33_red.clique_tree.tree.arcs)
        assert len(arcs) == 8 and len(k33_red.clique_tree.tree.nodes) == 9
        assert arcs == ({("K1", "K2"), ("K2", "K3")} | {("K3", f"Kp{j}") for j in (1, 2, 3)}
                        | {(f"Kp{j}", f"Kpp{j}") for j in (1, 2, 3)})

    def test_rebuild_matches(self, k33_red):
        assert build_clique_tree(k33_red) == k33_red.clique_tree

    def test_single_root(self):
        for b in generated(50, seed=4):
            t = reduce(b).clique_tree.tree
            assert t.problem() is None and t.root == "K1"


class TestInvariants:
    def test_vertex_count(self):
        for b in generated():
            assert len(reduce(b).graph) == expected_vertex_count(b)

    def test_membership_counts_and_paths(self):
        for b in generated(100, seed=1):
            red = reduce(b)
            fam = paths_from_clique_tree(red.graph, red.clique_tree)
            for v in red.graph.vertices:
                role, i, j = decode(v)
                count = len(red.clique_tree.nodes_containing(v))
                if role == "A":
                    assert count == (b.r - i + 1) + (2 if j in b.deg3 else 1)
                else:
                    assert count == 1
                assert fam.paths[v] == expected_path(red, v)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2**64 - 1), st.booleans(), st.sampled_from([0.0, 0.3, 0.7, 1.0]))
    def test_constructed_cliques_are_maximal_cliques(self, r, seed, plant, p):
        red = reduce(gen_bipartite(GenSpec(r, seed, plant, p)))
        assert maximal_cliques(red.graph) == sorted(tuple(sorted(c)) for c in red.clique_family)


def test_decode():
    assert decode("X12") == ("X", 12, 0)
    assert decode("Z3") == ("Z", 0, 3)
    assert decode("A10_2") == ("A", 10, 2)
    with pytest.raises(ValidationError):
        decode("K1")
