"""Backend parity: the compiled kernels must agree with the pure-Python
reference, and both must agree with the arbitrary-precision library path."""

import random

import pytest

import eccspec._kernels_py as pure
from eccspec import kernels
from eccspec.eccentricity import ecc_matrix, matrix_multiplicity
from eccspec.exactalg import berkowitz_charpoly
from eccspec.graphs import Graph, bfs_metrics, is_connected

compiled = pytest.importorskip(
    "eccspec._kernels", reason="compiled kernel extension not built")


def random_graph(rng, n, p=0.5):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def census_sample(max_n=6):
    from eccspec import census
    out = []
    for n in range(1, max_n + 1):
        for bits in census._level_bits(n):
            out.append(census.bits_to_graph(n, bits))
    return out


class TestBackendParity:
    def test_backend_selection(self):
        import os
        if os.environ.get("ECCSPEC_KERNELS") == "py":
            assert kernels.BACKEND == "pure-python"
        else:
            assert kernels.BACKEND == "compiled"

    def test_canon_bits_agree_on_census(self):
        for g in census_sample(6):
            assert compiled.canon_bits(g.n, g.adj) == \
                pure.canon_bits(g.n, g.adj)

    def test_census_stats_agree_on_census(self):
        for g in census_sample(6):
            assert compiled.census_stats(g.n, g.adj) == \
                pure.census_stats(g.n, g.adj)

    def test_children_canon_agree(self):
        rng = random.Random(43)
        count = 0
        while count < 25:
            g = random_graph(rng, rng.randint(1, 7))
            if not is_connected(g):
                continue
            count += 1
            assert compiled.children_canon(g.n, g.adj) == \
                pure.children_canon(g.n, g.adj)

    def test_distances_agree_including_disconnected(self):
        rng = random.Random(47)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 12), 0.3)
            assert compiled.all_pairs_dist(g.n, g.adj) == \
                pure.all_pairs_dist(g.n, g.adj)
            assert compiled.is_connected(g.n, g.adj) == \
                pure.is_connected(g.n, g.adj)

    def test_canon_agrees_on_symmetric_graphs(self):
        from eccspec.graphs import complete, cycle, complete_multipartite
        for g in (complete(9), cycle(9), cycle(10),
                  complete_multipartite((3, 3, 3)),
                  complete_multipartite((2, 2, 2, 2))):
            assert compiled.canon_bits(g.n, g.adj) == \
                pure.canon_bits(g.n, g.adj)


class TestKernelVsLibrary:
    """The int128 fast path must match the bigint library route."""

    def test_stats_match_library_on_random_connected(self):
        rng = random.Random(53)
        count = 0
        while count < 120:
            g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.9))
            if not is_connected(g):
                continue
            count += 1
            diam, v1, m1, m2, m0, coeffs = kernels.census_stats(g.n, g.adj)
            met = bfs_metrics(g)
            e = ecc_matrix(g)
            assert diam == met.diam
            assert v1 == len(met.level(1))
            assert m1 == matrix_multiplicity(e.m, -1)
            assert m2 == matrix_multiplicity(e.m, -2)
            assert m0 == matrix_multiplicity(e.m, 0)
            assert list(coeffs) == berkowitz_charpoly(e.m).ascending_list()

    def test_stats_reject_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(ValueError):
            kernels.census_stats(g.n, g.adj)

    def test_stats_reject_oversize(self):
        with pytest.raises(ValueError):
            compiled.census_stats(11, [0] * 11)

    def test_canon_rejects_oversize(self):
        with pytest.raises(ValueError):
            compiled.canon_bits(17, [0] * 17)
