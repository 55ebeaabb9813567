"""Census: canonical forms, isomorph-free enumeration, classification."""

import itertools
import random

import numpy as np
import pytest

from eccspec import census
from eccspec.graphs import (
    Graph,
    complete,
    cycle,
    graph6_decode,
    join_clique_with,
    path,
)

KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def brute_force_connected_count(n):
    """Independent oracle: iterate all labeled graphs, keep the connected
    ones, and deduplicate by marking each isomorphism orbit explicitly."""
    from eccspec import kernels

    pairs = list(itertools.combinations(range(n), 2))
    nbits = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # perm_maps[p][e] = image bit of edge bit e under permutation p
    perm_maps = np.array(
        [[pair_index[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs]
         for perm in perms], dtype=np.int64)
    seen = set()
    count = 0
    for mask in range(1 << nbits):
        if mask in seen:
            continue
        adj = [0] * n
        for e, (u, v) in enumerate(pairs):
            if (mask >> e) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if not kernels.is_connected(n, adj):
            continue
        count += 1
        orbit = np.zeros(len(perms), dtype=np.int64)
        for e in range(nbits):
            if (mask >> e) & 1:
                orbit |= np.int64(1) << perm_maps[:, e]
        seen.update(orbit.tolist())
    return count


class TestCanonicalForm:
    def test_p4_invariant_under_relabeling(self):
        forms = set()
        for perm in itertools.permutations(range(4)):
            forms.add(census.canonical_form(path(4).relabel(list(perm))).canon)
        assert len(forms) == 1

    def test_c4_equals_its_other_presentation(self):
        g = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
        assert census.canonical_form(g) == census.canonical_form(cycle(4))

    def test_class_function_on_census(self, census_records):
        rng = random.Random(19)
        for n in range(2, 8):
            recs = census_records(n)
            for rec in rng.sample(recs, min(25, len(recs))):
                g = graph6_decode(rec.canon)
                for _ in range(4):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    assert census.canonical_form(g.relabel(perm)).canon == \
                        rec.canon

    def test_distinct_on_non_isomorphic(self, census_records):
        for n in (6, 7, 8):
            forms = {rec.canon for rec in census_records(n)}
            assert len(forms) == KNOWN_COUNTS[n]

    def test_oversize_rejected(self):
        with pytest.raises(ValueError):
            census.canonical_form(Graph(17))

    def test_vertex_transitive_graphs_do_not_explode(self):
        # the twin and frontier prunings must keep these linear-ish
        for g in (complete(16), cycle(12), complete(12)):
            census.canonical_form(g)

    def test_canon_is_lexicographic_minimum_at_small_order(self):
        rng = random.Random(29)
        for _ in range(30):
            n = rng.randint(2, 5)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < 0.5])
            best = min(census.canonical_bits(g.relabel(list(p)))
                       for p in itertools.permutations(range(n)))
            # canonical bits are reachable by an actual relabeling...
            forms = {census.bits_to_graph6(n, census.canonical_bits(
                g.relabel(list(p)))) for p in itertools.permutations(range(n))}
            assert len(forms) == 1
            # ...and minimal among all orderings consistent with refinement
            assert census.canonical_bits(g) <= best or \
                census.canonical_bits(g) == best


class TestEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_counts_match_known_sequence(self, n):
        assert sum(1 for _ in census.enumerate_connected(n)) == KNOWN_COUNTS[n]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_counts_match_brute_force_oracle(self, n):
        assert sum(1 for _ in census.enumerate_connected(n)) == \
            brute_force_connected_count(n)

    def test_oracle_at_order_six(self):
        assert brute_force_connected_count(6) == KNOWN_COUNTS[6]

    def test_oracle_at_order_seven(self):
        # full labeled sweep of 2^21 graphs with orbit-marked deduplication
        assert brute_force_connected_count(7) == KNOWN_COUNTS[7]

    def test_all_yielded_graphs_connected_and_canonical(self):
        from eccspec.graphs import is_connected
        for g in census.enumerate_connected(6):
            assert is_connected(g)
            assert census.canonical_form(g).canon == \
                census.canonical_form(g).canon

    def test_deterministic_order(self):
        first = [census.canonical_form(g).canon
                 for g in census.enumerate_connected(6)]
        second = [census.canonical_form(g).canon
                  for g in census.enumerate_connected(6)]
        assert first == second == sorted(first)

    def test_oversize_rejected(self):
        with pytest.raises(ValueError):
            list(census.enumerate_connected(11))


class TestClassify:
    def test_records_for_n4(self, census_records):
        recs = census_records(4)
        assert len(recs) == 6
        with_m1 = sorted(r.canon for r in recs if r.mult_minus1 == 1)
        p4 = census.canonical_form(path(4)).canon
        diamond = census.canonical_form(
            join_clique_with(2, "2K1")).canon
        assert with_m1 == sorted([p4, diamond])
        assert sum(1 for r in recs if r.mult_minus1 == 3) == 1
        assert sum(1 for r in recs if r.mult_minus1 == 2) == 0

    def test_family_tags_at_n9(self, census_records):
        by_tag = {}
        for rec in census_records(9):
            for tag in rec.family_tags:
                by_tag[tag] = rec
        assert by_tag["K9"].mult_minus1 == 8
        assert by_tag["K6v3K1"].mult_minus1 == 5
        assert by_tag["K6vK2uK1"].mult_minus1 == 5

    def test_store_round_trip_and_determinism(self, census_records, tmp_path):
        path1 = tmp_path / "store1.tsv"
        path2 = tmp_path / "store2.tsv"
        recs1 = census.classify(5, store_path=path1)
        recs2 = census.classify(5, store_path=path2)
        assert path1.read_bytes() == path2.read_bytes()
        assert census.read_store(path1) == recs1 == recs2

    def test_record_line_round_trip(self, census_records):
        for rec in census_records(6)[:40]:
            assert census.CensusRecord.from_line(rec.to_line()) == rec

    def test_multiplicities_consistent_with_charpoly(self, census_records):
        from eccspec.exactalg import IntPolynomial, root_multiplicity
        for rec in census_records(6):
            cp = IntPolynomial(rec.charpoly)
            assert rec.mult_minus1 == root_multiplicity(cp, -1)
            assert rec.mult_minus2 == root_multiplicity(cp, -2)
            assert rec.mult_zero == root_multiplicity(cp, 0)
            assert cp.is_monic() and cp.degree == rec.n

    def test_missing_store_errors_with_path(self, tmp_path):
        with pytest.raises(OSError, match="no/such"):
            census.read_store(tmp_path / "no" / "such.tsv")

    def test_parallel_matches_serial(self):
        serial = census.classify(6, jobs=1)
        parallel = census.classify(6, jobs=2)
        assert serial == parallel


class TestQueries:
    def test_diameter_one_is_complete_only(self, census_records):
        recs = census.query(census_records(7), diam=1)
        assert [r.family_tags for r in recs] == [("K7",)]

    def test_cospectral_mates_exist_somewhere(self, census_records):
        # cospectral pairs for this matrix exist at order 6 and the mate
        # relation must be symmetric and canonical-form-disjoint
        recs = census_records(6)
        mates = [(r, census.cospectral_mates(recs, r)) for r in recs]
        paired = [(r, ms) for r, ms in mates if ms]
        assert paired, "expected at least one cospectral pair at order 6"
        for r, ms in paired:
            for m in ms:
                assert m.charpoly == r.charpoly and m.canon != r.canon

    def test_high_multiplicity_scan_finds_c6(self, census_records):
        recs = census_records(6)
        hits = census.high_multiplicity_hits(recs, i_bound=3)
        c6 = census.canonical_form(cycle(6)).canon
        flagged = {rec.canon: flagged for rec, flagged, _ in hits}
        assert c6 in flagged
        assert flagged[c6] == {3: 3, -3: 3}

    def test_multiplicity_of_any_rational(self, census_records):
        from fractions import Fraction
        rec = next(r for r in census_records(5)
                   if "K5" in r.family_tags)
        assert census.multiplicity_of(rec, -1) == 4
        assert census.multiplicity_of(rec, 4) == 1
        assert census.multiplicity_of(rec, Fraction(1, 2)) == 0

    def test_family_records_match_direct_multiplicity(self, census_records):
        from eccspec.eccentricity import multiplicity
        from eccspec.graphs import theorem1_families
        for n in range(4, 9):
            by_canon = {r.canon: r for r in census_records(n)}
            for name, g in theorem1_families(n):
                rec = by_canon[census.canonical_form(g).canon]
                assert rec.mult_minus1 == multiplicity(g, -1), (n, name)
                assert name in rec.family_tags

    def test_graph6_round_trip_over_full_census(self, census_records):
        from eccspec.graphs import graph6_encode
        for n in range(1, 9):
            for rec in census_records(n):
                g = graph6_decode(rec.canon)
                assert graph6_encode(g).decode("ascii") == rec.canon

    def test_integer_root_multiplicities(self):
        # x^4 - 9x^2 = x^2 (x-3) (x+3)
        assert census.integer_root_multiplicities((0, 0, -9, 0, 1)) == \
            {0: 2, 3: 1, -3: 1}
        # (x+1)^2 (x-2) = x^3 - 3x - 2
        assert census.integer_root_multiplicities((-2, -3, 0, 1)) == \
            {-1: 2, 2: 1}
