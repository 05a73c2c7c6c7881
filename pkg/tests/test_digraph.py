import itertools

import numpy as np
import pytest

from alphaspectra.digraph import (
    canonical_key,
    bipartition,
    contains_bidirected_kpq,
    from_dgr1,
    is_strongly_connected,
    is_strongly_connected_bfs,
    make_digraph,
    out_degrees,
    retarget_in_arcs,
    subdivide_arc,
    to_dgr1,
)
from alphaspectra.errors import (
    DuplicateArcError,
    LoopArcError,
    MissingArcError,
    OutOfRangeError,
    ParseError,
    PreconditionError,
    TooLargeError,
)
from alphaspectra.families import FamilySpec, generate


def cycle(n):
    return make_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_digraph(rng, n, density=0.4):
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density]
    return make_digraph(n, arcs)


class TestMakeDigraph:
    def test_triangle(self):
        d = make_digraph(3, [(0, 1), (1, 2), (2, 0)])
        assert d.n == 3
        assert d.arcs == ((0, 1), (1, 2), (2, 0))

    def test_loop_rejected(self):
        with pytest.raises(LoopArcError):
            make_digraph(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateArcError):
            make_digraph(3, [(0, 1), (0, 1)])

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            make_digraph(3, [(0, 3)])
        with pytest.raises(OutOfRangeError):
            make_digraph(0, [])

    def test_arcs_sorted(self):
        d = make_digraph(3, [(2, 0), (0, 1), (1, 2)])
        assert d.arcs == ((0, 1), (1, 2), (2, 0))


class TestStrongConnectivity:
    def test_cycles(self):
        for n in range(2, 9):
            assert is_strongly_connected(cycle(n))

    def test_path_not_sc(self):
        d = make_digraph(3, [(0, 1), (1, 2)])
        assert not is_strongly_connected(d)

    def test_single_vertex(self):
        assert is_strongly_connected(make_digraph(1, []))

    def test_b1_example(self):
        d = generate(FamilySpec.bip(1, 5, 2, 2))
        assert is_strongly_connected(d)
        assert is_strongly_connected_bfs(d)

    def test_zero_degree_vertex(self):
        # any vertex without in- or out-arcs kills strong connectivity
        d = make_digraph(3, [(0, 1), (1, 0)])
        assert not is_strongly_connected(d)

    def test_matches_bfs_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(300):
            n = int(rng.integers(2, 8))
            d = random_digraph(rng, n)
            assert is_strongly_connected(d) == is_strongly_connected_bfs(d)


class TestOutDegrees:
    def test_cycle(self):
        assert out_degrees(cycle(5)) == (1, 1, 1, 1, 1)

    def test_complete(self):
        assert out_degrees(generate(FamilySpec.complete(3))) == (2, 2, 2)

    def test_infty_hub(self):
        d = generate(FamilySpec.infty(1, 1, 1))
        assert out_degrees(d)[0] == 3
        assert sum(out_degrees(d)) == len(d.arcs)


class TestCanonicalKey:
    def test_relabeled_triangle(self):
        d = cycle(3)
        relabeled = make_digraph(3, [(1, 0), (0, 2), (2, 1)])
        assert canonical_key(d) == canonical_key(relabeled)

    def test_distinct_graphs(self):
        assert canonical_key(cycle(3)) != canonical_key(generate(FamilySpec.complete(3)))

    def test_swapped_cycles(self):
        # same hub digraph described with the cycles in either order
        a = make_digraph(4, [(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)])
        b = make_digraph(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)])
        assert canonical_key(a) == canonical_key(b)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            canonical_key(cycle(9))

    def test_key_length(self):
        key = canonical_key(cycle(5))
        assert key.n == 5
        assert len(key.bits) == (25 + 7) // 8

    def test_permutation_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            d = random_digraph(rng, n)
            perm = list(rng.permutation(n))
            relabeled = make_digraph(n, [(perm[i], perm[j]) for i, j in d.arcs])
            assert canonical_key(d) == canonical_key(relabeled)


class TestSubdivide:
    def test_cycle_grows(self):
        d = subdivide_arc(cycle(3), (0, 1))
        assert d.n == 4
        assert canonical_key(d) == canonical_key(cycle(4))

    def test_infty_lengthens(self):
        d = generate(FamilySpec.infty(1, 1))
        grown = subdivide_arc(d, (0, 2))
        assert canonical_key(grown) == canonical_key(generate(FamilySpec.infty(1, 2)))

    def test_missing_arc(self):
        with pytest.raises(MissingArcError):
            subdivide_arc(cycle(3), (0, 2))

    def test_preserves_connectivity_and_count(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            d = random_digraph(rng, n)
            if not is_strongly_connected(d):
                continue
            arc = d.arcs[int(rng.integers(len(d.arcs)))]
            grown = subdivide_arc(d, arc)
            assert len(grown.arcs) == len(d.arcs) + 1
            assert is_strongly_connected(grown)


class TestRetarget:
    def test_cycle_example(self):
        d = cycle(4)
        moved = retarget_in_arcs(d, {3}, 0, 1)
        assert moved.arc_set == frozenset([(0, 1), (1, 2), (2, 3), (3, 1)])
        assert not is_strongly_connected(moved)

    def test_empty_sources_identity(self):
        d = cycle(4)
        assert retarget_in_arcs(d, set(), 0, 1) is d

    def test_source_already_at_q(self):
        d = make_digraph(3, [(0, 1), (0, 2), (1, 0), (2, 0)])
        with pytest.raises(PreconditionError):
            retarget_in_arcs(d, {0}, 1, 2)

    def test_source_without_arc_to_p(self):
        with pytest.raises(PreconditionError):
            retarget_in_arcs(cycle(4), {1}, 0, 2)

    def test_preserves_counts(self):
        d = generate(FamilySpec.infty(1, 3))
        moved = retarget_in_arcs(d, {1}, 0, 2)
        assert len(moved.arcs) == len(d.arcs)
        assert out_degrees(moved)[1] == out_degrees(d)[1]


class TestBipartition:
    def test_even_cycle(self):
        assert bipartition(cycle(4)) == (frozenset({0, 2}), frozenset({1, 3}))

    def test_odd_cycle(self):
        assert bipartition(cycle(3)) is None

    def test_b5_parts(self):
        parts = bipartition(generate(FamilySpec.bip(5, 6, 2, 2)))
        assert parts is not None
        assert sorted(map(len, parts)) == [3, 3]

    def test_against_bruteforce_two_coloring(self):
        # independent oracle: try every coloring of the undirected support
        rng = np.random.default_rng(3)
        for _ in range(60):
            n = int(rng.integers(2, 7))
            d = random_digraph(rng, n, density=0.5)
            if not is_strongly_connected(d):
                continue
            expected = False
            for colors in itertools.product((0, 1), repeat=n):
                if all(colors[i] != colors[j] for i, j in d.arcs):
                    expected = True
                    break
            assert (bipartition(d) is not None) == expected


class TestContainsKpq:
    def test_identity(self):
        assert contains_bidirected_kpq(generate(FamilySpec.kpq(2, 2)), 2, 2)

    def test_cycle_has_none(self):
        assert not contains_bidirected_kpq(cycle(6), 2, 2)

    def test_b1_contains(self):
        assert contains_bidirected_kpq(generate(FamilySpec.bip(1, 5, 2, 2)), 2, 2)

    def test_asymmetric_sizes(self):
        d = generate(FamilySpec.kpq(3, 2))
        assert contains_bidirected_kpq(d, 2, 3)
        assert contains_bidirected_kpq(d, 3, 2)
        assert not contains_bidirected_kpq(d, 3, 3)

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            contains_bidirected_kpq(cycle(11), 2, 2)


class TestDgr1:
    def test_round_trip(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            n = int(rng.integers(1, 9))
            d = random_digraph(rng, n)
            assert from_dgr1(to_dgr1(d)) == d

    def test_format_exact(self):
        assert to_dgr1(cycle(3)) == "dgr1 3\n0 1\n1 2\n2 0\n"

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "dgr2 3\n",
            "dgr1 x\n",
            "dgr1 3",  # missing newline
            "dgr1 3\n0 1 2\n",
            "dgr1 3\n0 -1\n",
            "dgr1 3\n0 1.5\n",
            "dgr1 0\n",
            "dgr1  3\n",
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            from_dgr1(text)

    def test_rejects_bad_arcs(self):
        with pytest.raises(LoopArcError):
            from_dgr1("dgr1 2\n1 1\n")
        with pytest.raises(DuplicateArcError):
            from_dgr1("dgr1 2\n0 1\n0 1\n")
        with pytest.raises(OutOfRangeError):
            from_dgr1("dgr1 2\n0 2\n")
