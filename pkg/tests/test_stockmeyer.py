"""The hypomorphic tournament family: construction, determinants, the
Hamiltonian census DP, and the counting identities behind the parity
argument."""

import random

import pytest

from genutil import naive_census, random_tournament
from idiopoly import (
    Digraph,
    adjacency_charpoly,
    adjacency_determinant,
    classify,
    hamiltonian_census,
    hypomorphy_check,
    induced,
    mirror_bijection_check,
    odd_part,
    parity_check,
    pouzet_identity_check,
    remark1_check,
    stockmeyer_A,
    stockmeyer_B,
    stockmeyer_C,
    stockmeyer_table,
)
from idiopoly.stockmeyer import (
    count_hamiltonian_cycles,
    count_hamiltonian_paths,
    enumerate_hamiltonian_paths,
    mirror_path,
)

THREE_CYCLE = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
TRANSITIVE_3 = Digraph.from_arcs(3, [(0, 1), (1, 2), (0, 2)])

# determinants of the family, frozen after the first verified run; the
# absolute difference is 1 throughout, with the sign flipping only at n=1
DET_B = {1: 0, 2: 3, 3: 55, 4: 24307, 5: 4753524979, 6: 181026899125699653403}
DET_C = {1: 1, 2: 2, 3: 54, 4: 24306, 5: 4753524978, 6: 181026899125699653402}


class TestOddPart:
    def test_examples(self):
        assert odd_part(12) == 3
        assert odd_part(8) == 1
        assert odd_part(7) == 7
        assert odd_part(1) == 1

    def test_error(self):
        with pytest.raises(ValueError):
            odd_part(0)

    def test_is_largest_odd_divisor(self):
        for v in range(1, 200):
            p = odd_part(v)
            assert p % 2 == 1 and v % p == 0
            assert all(d % 2 == 0 for d in range(p + 1, v + 1) if v % d == 0)


class TestConstruction:
    def test_a1(self):
        assert stockmeyer_A(1) == Digraph.from_arcs(2, [(0, 1)])

    def test_a2_by_rule_sweep(self):
        # independent re-derivation: labels 1..4, arc label i -> j for i < j
        # iff odd(j - i) = 1 mod 4
        a = stockmeyer_A(2)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                forward = odd_part(j - i) % 4 == 1
                assert a.has_arc(i - 1, j - 1) == forward
                assert a.has_arc(j - 1, i - 1) == (not forward)

    def test_b1_c1_arc_sets(self):
        assert stockmeyer_B(1) == Digraph.from_arcs(3, [(1, 0), (0, 2), (1, 2)])
        assert stockmeyer_C(1) == Digraph.from_arcs(3, [(0, 1), (2, 0), (1, 2)])
        assert classify(stockmeyer_B(1)).is_poset  # transitive
        assert not classify(stockmeyer_C(1)).is_poset  # 3-cycle

    def test_all_are_tournaments(self):
        for n in range(1, 5):
            assert classify(stockmeyer_A(n)).is_tournament
            assert classify(stockmeyer_B(n)).is_tournament
            assert classify(stockmeyer_C(n)).is_tournament

    def test_deleting_zero_recovers_a(self):
        for n in range(1, 5):
            size = 2**n
            rest = list(range(1, size + 1))
            assert induced(stockmeyer_B(n), rest) == stockmeyer_A(n)
            assert induced(stockmeyer_C(n), rest) == stockmeyer_A(n)

    def test_range_errors(self):
        for bad in (0, 7):
            with pytest.raises(ValueError):
                stockmeyer_A(bad)
            with pytest.raises(ValueError):
                stockmeyer_B(bad)


class TestHypomorphy:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_family_is_hypomorphic(self, n):
        assert hypomorphy_check(n)

    def test_range_error(self):
        with pytest.raises(ValueError):
            hypomorphy_check(4)


class TestDeterminants:
    def test_transitive_tournament_determinant_zero(self):
        for n in (3, 4, 6):
            arcs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            assert adjacency_determinant(Digraph.from_arcs(n, arcs)) == 0

    def test_three_cycle(self):
        assert adjacency_determinant(THREE_CYCLE) == 1

    def test_frozen_family_determinants(self):
        for n in range(1, 5):  # 5 and 6 covered by the acceptance suite
            assert adjacency_determinant(stockmeyer_B(n)) == DET_B[n]
            assert adjacency_determinant(stockmeyer_C(n)) == DET_C[n]

    def test_matches_charpoly_at_zero(self):
        rng = random.Random(3)
        for _ in range(10):
            t = random_tournament(rng.randint(2, 6), rng)
            p = adjacency_charpoly(t)
            assert adjacency_determinant(t) == (-1) ** t.n * p.eval(0, 0, 0)

    def test_table(self):
        rows = stockmeyer_table(3)
        assert rows == [(1, 0, 1, -1, True), (2, 3, 2, 1, True), (3, 55, 54, 1, True)]


class TestCensus:
    def test_three_cycle(self):
        census = hamiltonian_census(THREE_CYCLE)
        assert census.paths_total == 3 and census.cycles_total == 1

    def test_transitive_three(self):
        census = hamiltonian_census(TRANSITIVE_3)
        assert census.paths_total == 1 and census.cycles_total == 0

    def test_single_vertex(self):
        census = hamiltonian_census(Digraph.empty(1))
        assert census.paths_total == 1 and census.cycles_total == 0

    def test_matches_naive_enumeration(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 6)
            g = Digraph.from_arcs(
                n,
                [
                    (u, v)
                    for u in range(n)
                    for v in range(n)
                    if u != v and rng.random() < 0.5
                ],
            )
            paths, cycles = naive_census(g)
            census = hamiltonian_census(g)
            assert census.paths_total == paths
            assert census.cycles_total == cycles

    def test_class_split_sums_to_total(self):
        rng = random.Random(11)
        for _ in range(10):
            n = rng.randint(2, 7)
            t = random_tournament(n, rng)
            odd = [v for v in range(n) if v % 2 == 0]
            census = hamiltonian_census(t, odd_class=odd)
            assert census.paths_by_class is not None
            assert sum(census.paths_by_class.values()) == census.paths_total

    def test_redei_parity_random(self):
        rng = random.Random(13)
        for _ in range(30):
            t = random_tournament(rng.randint(1, 10), rng)
            assert hamiltonian_census(t).paths_total % 2 == 1

    def test_size_cap(self):
        with pytest.raises(ValueError):
            count_hamiltonian_paths(Digraph.empty(25))
        with pytest.raises(ValueError):
            count_hamiltonian_cycles(Digraph.empty(25))

    def test_enumeration_matches_counts(self):
        rng = random.Random(17)
        for _ in range(10):
            n = rng.randint(2, 6)
            t = random_tournament(n, rng)
            paths = list(enumerate_hamiltonian_paths(t))
            assert len(paths) == hamiltonian_census(t).paths_total
            assert len(set(paths)) == len(paths)
            for p in paths:
                assert all(t.has_arc(p[i], p[i + 1]) for i in range(n - 1))

    def test_enumeration_limit(self):
        t = random_tournament(7, random.Random(19))
        sample = list(enumerate_hamiltonian_paths(t, limit=5))
        assert len(sample) == 5


class TestIdentities:
    def test_pouzet_on_b1_c1(self):
        # det 0 - 1 = -1, cycles 0 - 1 = -1, (-1)^(3+1) = +1
        assert pouzet_identity_check(stockmeyer_B(1), stockmeyer_C(1))

    def test_pouzet_reflexive(self):
        t = random_tournament(6, random.Random(23))
        assert pouzet_identity_check(t, t)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pouzet_on_family(self, n):
        assert pouzet_identity_check(stockmeyer_B(n), stockmeyer_C(n))

    def test_pouzet_size_mismatch(self):
        with pytest.raises(ValueError):
            pouzet_identity_check(stockmeyer_B(1), stockmeyer_B(2))

    def test_remark1_all_vertices_small(self):
        rng = random.Random(29)
        for _ in range(15):
            n = rng.randint(2, 7)
            t = random_tournament(n, rng)
            for v in range(n):
                assert remark1_check(t, v)

    def test_parity(self):
        assert parity_check(3)
        assert parity_check(4)
        with pytest.raises(ValueError):
            parity_check(2)


class TestMirror:
    def test_mirror_map_shape(self):
        # reverse the sequence, then complement each index to size-1-index
        assert mirror_path((0, 3, 1, 2), 4) == (1, 2, 0, 3)
        assert mirror_path((2, 0, 1), 3) == (1, 2, 0)

    def test_mirror_is_involution(self):
        rng = random.Random(31)
        for _ in range(10):
            size = 8
            p = list(range(size))
            rng.shuffle(p)
            p = tuple(p)
            assert mirror_path(mirror_path(p, size), size) == p

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_family_bijection_small(self, n):
        assert mirror_bijection_check(n)

    def test_range_error(self):
        with pytest.raises(ValueError):
            mirror_bijection_check(5)

    def test_class_sizes_match_known_values(self):
        a = stockmeyer_A(3)
        odd = [v for v in range(8) if v % 2 == 0]  # odd labels at even indices
        census = hamiltonian_census(a, odd_class=odd)
        assert census.paths_by_class == {"oo": 118, "ee": 118, "oe": 210, "eo": 211}
        assert census.paths_total == 657
