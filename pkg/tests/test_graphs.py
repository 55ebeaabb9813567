"""Graph core: metrics, builders, twin classes, graph6, edge lists."""

import itertools
import random

import networkx as nx
import pytest

from eccspec.graphs import (
    Graph,
    bfs_metrics,
    build_family,
    bull,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    duplicate_classes,
    empty_graph,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_mixed_star_shape,
    join,
    join_clique_with,
    max_mult_families,
    mixed_extension_star,
    parse_edge_list,
    path,
    theorem1_families,
    FamilyId,
)


def floyd_warshall(g):
    """Independent all-pairs oracle for the BFS distances."""
    inf = float("inf")
    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf)
          for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


class TestMetrics:
    def test_path4_eccentricities(self):
        met = bfs_metrics(path(4))
        assert met.ecc == (3, 2, 2, 3)
        assert met.diam == 3

    def test_complete_graph_levels(self):
        met = bfs_metrics(complete(5))
        assert met.ecc == (1,) * 5
        assert met.diam == 1
        assert met.level(1) == frozenset(range(5))

    def test_diamond_levels(self):
        g = join(complete(2), empty_graph(2))
        met = bfs_metrics(g)
        assert met.ecc == (1, 1, 2, 2)
        assert met.level(1) == frozenset({0, 1})
        assert met.level(2) == frozenset({2, 3})
        oracle = floyd_warshall(g)
        assert all(met.dist[i][j] == oracle[i][j]
                   for i in range(4) for j in range(4))

    def test_disconnected_sentinels(self):
        g = disjoint_union(complete(2), complete(3))
        met = bfs_metrics(g)
        assert met.diam == -1
        assert met.levels == {}
        assert met.dist[0][2] == -1

    def test_bfs_matches_floyd_warshall_on_random_graphs(self):
        rng = random.Random(11)
        for _ in range(150):
            n = rng.randint(2, 9)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.4])
            met = bfs_metrics(g)
            oracle = floyd_warshall(g)
            for i in range(n):
                for j in range(n):
                    want = oracle[i][j]
                    assert met.dist[i][j] == (-1 if want == float("inf")
                                              else want)

    def test_min_eccentricity_at_least_half_diameter(self):
        rng = random.Random(5)
        tried = 0
        while tried < 200:
            n = rng.randint(2, 10)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.45])
            if not is_connected(g):
                continue
            tried += 1
            met = bfs_metrics(g)
            assert min(met.ecc) >= (met.diam + 1) // 2


class TestConnectivity:
    @pytest.mark.parametrize("g,expect", [
        (complete(1), True),
        (empty_graph(2), False),
        (path(4), True),
        (disjoint_union(path(3), complete(1)), False),
    ])
    def test_is_connected(self, g, expect):
        assert is_connected(g) is expect


class TestBuilders:
    def test_join_of_singletons_is_an_edge(self):
        assert join(complete(1), complete(1)) == complete(2)

    def test_join_k4_with_independent_pair(self):
        g = join(complete(4), empty_graph(2))
        assert g.n == 6
        assert g.edge_count() == 6 + 8
        assert not g.has_edge(4, 5)

    def test_star_as_join(self):
        assert join(complete(1), empty_graph(4)) == \
            Graph(5, [(0, i) for i in range(1, 5)])

    def test_disjoint_union_counts(self):
        g = disjoint_union(complete(2), complete(1))
        assert (g.n, g.edge_count()) == (3, 1)
        h = disjoint_union(path(3), empty_graph(1))
        assert (h.n, h.edge_count()) == (4, 2)

    def test_complete_multipartite(self):
        c4 = complete_multipartite((2, 2))
        assert sorted(c4.degree(v) for v in range(4)) == [2, 2, 2, 2]
        assert is_connected(c4) and c4.edge_count() == 4
        assert complete_multipartite([1] * 5) == complete(5)
        g = complete_multipartite([1] * 4 + [2])
        met = bfs_metrics(g)
        assert met.ecc == (1, 1, 1, 1, 2, 2)

    def test_mixed_extension_star_shapes(self):
        assert mixed_extension_star(1, 3, []) == \
            Graph(4, [(0, 1), (0, 2), (0, 3)])
        g = mixed_extension_star(3, 2, [2])
        assert g.n == 7
        # center triangle joined to everything, leaf cells non-adjacent
        assert all(g.has_edge(u, v) for u in range(3) for v in range(3, 7))
        assert not g.has_edge(3, 4) and g.has_edge(5, 6)
        assert not g.has_edge(3, 5)
        # boundary: an independent singleton cell completes the clique
        assert mixed_extension_star(5, 1, []) == complete(6)

    @pytest.mark.parametrize("t0,p,ts", [(0, 2, []), (1, -1, []), (2, 0, [1])])
    def test_mixed_extension_star_rejects(self, t0, p, ts):
        with pytest.raises(ValueError):
            mixed_extension_star(t0, p, ts)

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            Graph(65)
        with pytest.raises(ValueError):
            Graph(0)

    def test_graph_validation(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph.from_adj([0b010, 0b000, 0b000])

    def test_graph_is_immutable(self):
        g = path(3)
        with pytest.raises(AttributeError):
            g.n = 5


class TestFamilies:
    def test_g1_member(self):
        g = build_family(FamilyId.g1(0, 9))
        assert g == join_clique_with(5, "4K1")

    def test_part_v_members(self):
        assert build_family(FamilyId.thm5(7, 16)) == join_clique_with(11, "C5")
        assert build_family(FamilyId.thm5(9, 16)) == join_clique_with(11, "H1")

    def test_family_graphs_are_connected(self):
        for n in (6, 9, 16, 20):
            for name, g in theorem1_families(n):
                assert g.n == n, name
                assert is_connected(g), name

    def test_ten_max_mult_families(self):
        fams = max_mult_families(16)
        assert len(fams) == 10
        assert len({name for name, _ in fams}) == 10

    def test_bull_shape(self):
        b = bull()
        assert b.n == 5 and b.edge_count() == 5
        assert sorted(b.degree(v) for v in range(5)) == [1, 1, 2, 3, 3]

    def test_mixed_star_shape_recognizer(self):
        assert is_mixed_star_shape(complete(7))
        assert is_mixed_star_shape(mixed_extension_star(2, 3, [2, 2]))
        assert not is_mixed_star_shape(path(4))
        assert not is_mixed_star_shape(cycle(5))
        assert not is_mixed_star_shape(join_clique_with(3, "P4"))


def test_bull_identification_oracle():
    """The order-5 graphs H with max degree <= 3 whose join K_11 v H has
    m(-1) = 11 at order 16 are exactly C5, K1 u P4, and the bull; this pins
    the fifth family member."""
    from eccspec.census import canonical_bits
    from eccspec.eccentricity import multiplicity

    winners = set()
    for mask in range(1 << 10):
        edges = [e for i, e in enumerate(itertools.combinations(range(5), 2))
                 if (mask >> i) & 1]
        h = Graph(5, edges)
        if h.max_degree() > 3:
            continue
        if multiplicity(join(complete(11), h), -1) == 11:
            winners.add(canonical_bits(h))
    expected = {
        canonical_bits(cycle(5)),
        canonical_bits(disjoint_union(empty_graph(1), path(4))),
        canonical_bits(bull()),
    }
    assert winners == expected


class TestTwinClasses:
    def test_complete_graph_one_closed_class(self):
        classes = duplicate_classes(complete(4))
        assert classes == [(frozenset({0, 1, 2, 3}), "co-duplicate")]

    def test_star_leaves_are_duplicates(self):
        classes = duplicate_classes(Graph(4, [(0, 1), (0, 2), (0, 3)]))
        assert classes == [(frozenset({1, 2, 3}), "duplicate")]

    def test_path4_has_no_classes(self):
        assert duplicate_classes(path(4)) == []

    def test_classes_verify_their_neighborhoods(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(2, 9)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.5])
            for vs, kind in duplicate_classes(g):
                vs = sorted(vs)
                for u, v in itertools.combinations(vs, 2):
                    if kind == "duplicate":
                        assert g.adj[u] == g.adj[v]
                        assert not g.has_edge(u, v)
                    else:
                        assert g.adj[u] | (1 << u) == g.adj[v] | (1 << v)
                        assert g.has_edge(u, v)


class TestGraph6:
    def test_k1(self):
        assert graph6_encode(complete(1)) == b"@"

    def test_p4_golden(self):
        # cross-checked against the networkx reference encoder below
        assert graph6_encode(path(4)) == b"Ch"

    def test_matches_networkx_reference(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(1, 12)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.5])
            nxg = nx.Graph()
            nxg.add_nodes_from(range(n))
            nxg.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(nxg, header=False).strip()
            assert graph6_encode(g) == ref

    def test_round_trip_random(self):
        rng = random.Random(23)
        for _ in range(300):
            n = rng.randint(1, 20)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.3])
            assert graph6_decode(graph6_encode(g)) == g

    def test_decode_accepts_header_and_str(self):
        assert graph6_decode(">>graph6<<Ch\n") == path(4)
        assert graph6_decode("Ch") == path(4)

    @pytest.mark.parametrize("bad", [b"", b"C", b"Ch!", b"C\x1f", b"Chh"])
    def test_decode_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            graph6_decode(bad)

    def test_encode_rejects_oversize(self):
        with pytest.raises(ValueError):
            graph6_encode(empty_graph(63))


class TestEdgeList:
    def test_round_trip(self):
        g = join_clique_with(3, "P4")
        assert parse_edge_list(format_edge_list(g)) == g

    def test_parse_with_comments(self):
        g = parse_edge_list("# fixture\nn=3\n0 1\n\n1 2\n")
        assert g == path(3)

    @pytest.mark.parametrize("text", ["0 1\n", "n=3\n0\n", "n=3\n0 1 2\n"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            parse_edge_list(text)
