"""Digraph structure: complement, converse, induced subdigraphs, modules,
flags, classes, canonical orientations, arc counting, text formats."""

import itertools
import random

import pytest

from genutil import random_bipartite_connected, random_digraph, random_tournament
from idiopoly import (
    Digraph,
    NotBipartiteError,
    NotConnectedError,
    NotSymmetricError,
    adjacency_charpoly,
    canonical_orientations,
    classify,
    complement,
    converse,
    find_flags,
    format_digraph,
    induced,
    invert_module,
    is_flag_free,
    is_module,
    modules,
    nu,
    parse_digraph,
)

THREE_CYCLE = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


class TestComplementConverse:
    def test_empty_complement_is_complete(self):
        g = complement(Digraph.empty(3))
        assert g == Digraph.complete_symmetric(3)
        assert g.arc_count() == 6

    def test_involutions(self):
        rng = random.Random(5)
        for _ in range(25):
            g = random_digraph(rng.randint(1, 8), rng)
            assert complement(complement(g)) == g
            assert converse(converse(g)) == g

    def test_tournament_complement_is_converse(self):
        # exhaustive over all 8 labeled 3-vertex tournaments
        for bits in range(8):
            arcs = []
            for idx, (u, v) in enumerate([(0, 1), (0, 2), (1, 2)]):
                arcs.append((u, v) if bits >> idx & 1 else (v, u))
            t = Digraph.from_arcs(3, arcs)
            assert complement(t) == converse(t)
        rng = random.Random(9)
        for _ in range(10):
            t = random_tournament(rng.randint(2, 9), rng)
            assert complement(t) == converse(t)

    def test_single_arc(self):
        g = Digraph.from_arcs(2, [(0, 1)])
        assert converse(g) == Digraph.from_arcs(2, [(1, 0)])

    def test_symmetric_fixed_by_converse(self):
        rng = random.Random(13)
        for _ in range(10):
            g = random_bipartite_connected(rng.randint(2, 8), rng)
            assert converse(g) == g

    def test_converse_preserves_charpoly(self):
        rng = random.Random(17)
        for _ in range(10):
            g = random_digraph(rng.randint(1, 6), rng)
            assert adjacency_charpoly(g) == adjacency_charpoly(converse(g))

    def test_commutation_properties(self):
        rng = random.Random(19)
        for _ in range(15):
            n = rng.randint(2, 7)
            g = random_digraph(n, rng)
            w = rng.sample(range(n), rng.randint(1, n))
            assert converse(induced(g, w)) == induced(converse(g), w)
            assert complement(induced(g, w)) == induced(complement(g), w)


class TestInduced:
    def test_full_set(self):
        assert induced(THREE_CYCLE, [0, 1, 2]) == THREE_CYCLE

    def test_three_cycle_pair(self):
        assert induced(THREE_CYCLE, [0, 1]) == Digraph.from_arcs(2, [(0, 1)])

    def test_singleton(self):
        g = induced(THREE_CYCLE, [2])
        assert g.n == 1 and g.arc_count() == 0

    def test_relabeling_preserves_order(self):
        g = Digraph.from_arcs(4, [(1, 3)])
        assert induced(g, [1, 3]) == Digraph.from_arcs(2, [(0, 1)])
        assert induced(g, [3, 1]) == Digraph.from_arcs(2, [(0, 1)])

    def test_errors(self):
        with pytest.raises(ValueError):
            induced(THREE_CYCLE, [])
        with pytest.raises(ValueError):
            induced(THREE_CYCLE, [0, 3])


class TestModules:
    def test_singleton_and_full_are_modules(self):
        rng = random.Random(23)
        for _ in range(10):
            n = rng.randint(1, 7)
            g = random_digraph(n, rng)
            assert is_module(g, [rng.randrange(n)])
            assert is_module(g, range(n))

    def test_definition_cases(self):
        g = Digraph.from_arcs(3, [(0, 2), (1, 2)])
        assert is_module(g, [0, 1])
        h = Digraph.from_arcs(3, [(0, 2)])
        assert not is_module(h, [0, 1])

    def test_matches_bruteforce_definition(self):
        rng = random.Random(29)
        for _ in range(20):
            n = rng.randint(2, 6)
            g = random_digraph(n, rng)
            w = rng.sample(range(n), rng.randint(1, n))
            ws = set(w)
            expected = all(
                g.has_arc(a, x) == g.has_arc(b, x) and g.has_arc(x, a) == g.has_arc(x, b)
                for a in ws
                for b in ws
                for x in range(n)
                if x not in ws
            )
            assert is_module(g, w) == expected

    def test_invert_module_involution(self):
        rng = random.Random(31)
        for _ in range(15):
            n = rng.randint(1, 7)
            g = random_digraph(n, rng)
            w = rng.sample(range(n), rng.randint(1, n))
            assert invert_module(invert_module(g, w), w) == g
            assert invert_module(g, [w[0]]) == g

    def test_invert_full_three_cycle(self):
        assert invert_module(THREE_CYCLE, [0, 1, 2]) == converse(THREE_CYCLE)

    def test_outside_arcs_untouched(self):
        rng = random.Random(37)
        for _ in range(15):
            n = rng.randint(2, 7)
            g = random_digraph(n, rng)
            w = set(rng.sample(range(n), rng.randint(1, n)))
            h = invert_module(g, w)
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    if u in w and v in w:
                        assert h.has_arc(u, v) == g.has_arc(v, u)
                    else:
                        assert h.has_arc(u, v) == g.has_arc(u, v)

    def test_modules_enumeration(self):
        g = Digraph.from_arcs(3, [(0, 2), (1, 2)])
        found = set(modules(g, min_size=2))
        assert 0b011 in found  # {0, 1}
        assert 0b111 in found  # full set


class TestFlags:
    def flag_oracle(self, g: Digraph) -> list[tuple[int, int, int]]:
        """Exhaustive: check all triples against both flag arc sets under
        all vertex orderings."""
        flag_sets = [
            {(0, 1), (0, 2), (2, 0)},
            {(1, 0), (0, 2), (2, 0)},
        ]
        out = []
        for trip in itertools.combinations(range(g.n), 3):
            sub = induced(g, trip)
            hit = False
            for perm in itertools.permutations(range(3)):
                arcs = {(perm[u], perm[v]) for u, v in sub.arcs()}
                if arcs in flag_sets:
                    hit = True
                    break
            if hit:
                out.append(trip)
        return out

    def test_flag_definition_arc_set(self):
        g = Digraph.from_arcs(3, [(0, 1), (0, 2), (2, 0)])
        assert find_flags(g) == [(0, 1, 2)]
        assert not is_flag_free(g)

    def test_tournaments_have_no_flags(self):
        rng = random.Random(41)
        for _ in range(10):
            assert find_flags(random_tournament(rng.randint(3, 8), rng)) == []

    def test_symmetric_digraphs_have_no_flags(self):
        rng = random.Random(43)
        for _ in range(10):
            g = random_bipartite_connected(rng.randint(3, 8), rng)
            assert is_flag_free(g)

    def test_matches_oracle_exhaustive_three_vertices(self):
        pairs = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
        for code in range(64):
            g = Digraph.from_arcs(3, [pairs[b] for b in range(6) if code >> b & 1])
            assert find_flags(g) == self.flag_oracle(g)

    def test_matches_oracle_random(self):
        rng = random.Random(47)
        for _ in range(20):
            g = random_digraph(rng.randint(3, 7), rng)
            assert find_flags(g) == self.flag_oracle(g)
            assert is_flag_free(g) == (not find_flags(g))


class TestClassify:
    def test_three_cycle(self):
        c = classify(THREE_CYCLE)
        assert c.is_tournament and c.is_oriented and not c.is_poset

    def test_transitive_tournament(self):
        t = Digraph.from_arcs(3, [(0, 1), (1, 2), (0, 2)])
        assert classify(t).is_poset

    def test_complete_symmetric(self):
        c = classify(Digraph.complete_symmetric(4))
        assert c.is_symmetric and not c.is_oriented and not c.is_tournament

    def test_poset_requires_orientation(self):
        digon = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert not classify(digon).is_poset


class TestCanonicalOrientations:
    def test_single_edge(self):
        g = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        sigma, tau = canonical_orientations(g)
        assert sigma == Digraph.from_arcs(2, [(0, 1)])
        assert tau == Digraph.from_arcs(2, [(1, 0)])

    def test_path_of_two_edges(self):
        g = Digraph.from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        sigma, tau = canonical_orientations(g)
        # vertex 0's side is W1, so 0 -> 1 and 2 -> 1
        assert sigma == Digraph.from_arcs(3, [(0, 1), (2, 1)])
        assert tau == converse(sigma)
        assert classify(sigma).is_poset and classify(tau).is_poset

    def test_error_types_are_distinct(self):
        with pytest.raises(NotBipartiteError):
            canonical_orientations(Digraph.complete_symmetric(3))  # odd cycle
        with pytest.raises(NotSymmetricError):
            canonical_orientations(THREE_CYCLE)
        disconnected = Digraph.from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
        with pytest.raises(NotConnectedError):
            canonical_orientations(disconnected)

    def test_random_bipartite_properties(self):
        rng = random.Random(53)
        for _ in range(15):
            g = random_bipartite_connected(rng.randint(2, 9), rng)
            sigma, tau = canonical_orientations(g)
            assert converse(sigma) == tau
            assert classify(sigma).is_poset and classify(tau).is_poset
            # together they recover the graph
            merged = Digraph(
                g.n,
                [sigma.rows[i] | tau.rows[i] for i in range(g.n)],
            )
            assert merged == g


class TestNu:
    def test_basics(self):
        assert nu(Digraph.empty(4), [0, 1, 2]) == 0
        assert nu(THREE_CYCLE, [0, 1, 2]) == 3
        assert nu(THREE_CYCLE, [0, 1]) == 1

    def test_inclusion_exclusion_identity(self):
        # 6 nu(x1,x2) = 2 nu(x3,x4,x5) + sum_i 2 nu(x1,x2,xi)
        #               - sum_{i<j} (nu(x1,xi,xj) + nu(x2,xi,xj))
        rng = random.Random(59)
        for _ in range(40):
            n = rng.randint(5, 10)
            g = random_digraph(n, rng)
            x1, x2, x3, x4, x5 = rng.sample(range(n), 5)
            rest = [x3, x4, x5]
            lhs = 6 * nu(g, [x1, x2])
            rhs = 2 * nu(g, rest)
            rhs += sum(2 * nu(g, [x1, x2, xi]) for xi in rest)
            rhs -= sum(
                nu(g, [x1, xi, xj]) + nu(g, [x2, xi, xj])
                for xi, xj in itertools.combinations(rest, 2)
            )
            assert lhs == rhs


class TestTextFormat:
    def test_arc_list_roundtrip(self):
        rng = random.Random(61)
        for _ in range(10):
            g = random_digraph(rng.randint(1, 9), rng)
            assert parse_digraph(format_digraph(g, "arcs")) == g
            assert parse_digraph(format_digraph(g, "matrix")) == g

    def test_comments_and_whitespace(self):
        text = "# a triangle\n3\n0 1\n# middle comment\n1 2\n2 0\n"
        assert parse_digraph(text) == THREE_CYCLE

    def test_matrix_autodetect(self):
        text = "3\n010\n001\n100\n"
        assert parse_digraph(text) == THREE_CYCLE

    def test_empty_digraph_file(self):
        g = parse_digraph("4\n")
        assert g == Digraph.empty(4)

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_digraph("")
        with pytest.raises(ValueError):
            parse_digraph("x\n0 1\n")
        with pytest.raises(ValueError):
            parse_digraph("3\n0 1 2\n")
        with pytest.raises(ValueError):
            parse_digraph("2\n0 0\n")  # loop
        with pytest.raises(ValueError):
            parse_digraph("3\n010\n001\n")  # short matrix


class TestValidation:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Digraph(2, [0b01, 0])
        with pytest.raises(ValueError):
            Digraph.from_arcs(2, [(1, 1)])

    def test_vertex_cap(self):
        with pytest.raises(ValueError):
            Digraph.empty(129)
        assert Digraph.empty(128).n == 128

    def test_out_of_range_rows(self):
        with pytest.raises(ValueError):
            Digraph(2, [0b100, 0])
