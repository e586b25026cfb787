import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flathg.hypergraph import (
    Hypergraph,
    HypergraphParseError,
    build_hypergraph,
    family,
    find_hypergraph_isomorphism,
    format_hypergraph,
    girth,
    is_linear,
    leaf_core,
    linked_classes,
    parse_hypergraph,
    to_dot,
    uniform_core,
    validate,
)

TRIANGLE_EDGES = [("u1", "u2", "u3"), ("u3", "u4", "u5"), ("u5", "u6", "u1")]


def triangle():
    return build_hypergraph([f"u{i}" for i in range(1, 7)], TRIANGLE_EDGES)


class TestBuild:
    def test_duplicate_vertex_rejected(self):
        with pytest.raises(HypergraphParseError, match="duplicate"):
            build_hypergraph(["a", "a"], [])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(HypergraphParseError, match="unknown"):
            build_hypergraph(["a", "b"], [("a", "c")])

    def test_repeated_vertex_in_edge_rejected(self):
        with pytest.raises(HypergraphParseError):
            build_hypergraph(["a", "b"], [("a", "a")])

    def test_non_string_vertex_rejected(self):
        with pytest.raises(HypergraphParseError):
            build_hypergraph([1, 2], [])


class TestValidate:
    def test_triangle_is_admissible(self):
        assert validate(triangle()).valid

    def test_empty_flagged(self):
        report = validate(build_hypergraph([], []))
        assert not report.valid
        assert report.violations[0][0] == "empty"

    def test_isolated_vertex_flagged(self):
        h = build_hypergraph(["a", "b", "c", "d"], [("a", "b", "c")])
        rules = {rule for rule, _ in validate(h).violations}
        assert "isolated-vertex" in rules

    def test_pair_of_overlapping_edges_flagged(self):
        h = build_hypergraph(["a", "b", "c", "d"], [("a", "b", "c"), ("a", "b", "d")])
        rules = {rule for rule, _ in validate(h).violations}
        assert rules == {"linear"}

    def test_attached_degree2_edge_flagged(self):
        h = build_hypergraph(["a", "b", "c", "d"], [("a", "b", "c"), ("c", "d")])
        rules = {rule for rule, _ in validate(h).violations}
        assert "degree-2-adjacency" in rules

    def test_oversized_edge_flagged(self):
        h = build_hypergraph(["a", "b", "c", "d"], [("a", "b", "c", "d")])
        rules = {rule for rule, _ in validate(h).violations}
        assert "edge-cardinality" in rules


class TestFamilies:
    def test_beam_1_is_the_triangle(self):
        assert family("beam", 1).edges == triangle().edges

    @pytest.mark.parametrize("i", range(1, 7))
    def test_beam_shape(self, i):
        h = family("beam", i)
        assert len(h.vertices) == 3 * i + 3
        assert len(h.edges) == 2 * i + 1
        assert validate(h).valid

    @pytest.mark.parametrize("i", range(1, 5))
    def test_fan_shape(self, i):
        h = family("fan", i)
        assert len(h.vertices) == 3 * i + 3
        assert len(h.edges) == 2 * i + 1
        assert validate(h).valid

    def test_nested_1_edges(self):
        h = family("nested", 1)
        expected = {
            frozenset({"u1", "u2", "u6"}),
            frozenset({"u1", "u3", "u5"}),
            frozenset({"u2", "u3", "u4"}),
        }
        assert h.edges == expected

    @pytest.mark.parametrize("i", range(1, 5))
    def test_nested_shape(self, i):
        h = family("nested", i)
        assert len(h.vertices) == 3 * i + 3
        assert len(h.edges) == 3 * i
        assert validate(h).valid

    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycle_girth_is_n(self, n):
        assert girth(family("n_cycle", n)) == n

    def test_cycle_needs_three_edges(self):
        with pytest.raises(ValueError, match="unsupported kind/index"):
            family("n_cycle", 2)

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unsupported kind/index"):
            family("wheel", 3)

    def test_marker_kind_points_at_builtin(self):
        with pytest.raises(ValueError, match="builtin semiring 's7'"):
            family("s7_marker", 1)

    def test_fan3_isomorphic_to_beam3(self):
        iso = find_hypergraph_isomorphism(family("fan", 3), family("beam", 3))
        assert iso is not None

    def test_fan4_not_isomorphic_to_beam4(self):
        assert find_hypergraph_isomorphism(family("fan", 4), family("beam", 4)) is None


class TestGirth:
    def test_triangle(self):
        assert girth(triangle()) == 3

    def test_single_edge_infinite(self):
        h = build_hypergraph(["a", "b", "c"], [("a", "b", "c")])
        assert girth(h) == math.inf

    def test_two_edge_cycle_detected(self):
        """Non-linear input has a length-2 alternating cycle."""
        h = build_hypergraph(["a", "b", "c", "d"], [("a", "b", "c"), ("a", "b", "d")])
        assert girth(h) == 2

    def test_linearity_matches_girth_on_families(self):
        for kind, idx in [("beam", 2), ("fan", 2), ("nested", 2), ("n_cycle", 5)]:
            h = family(kind, idx)
            assert is_linear(h) and girth(h) >= 3


@st.composite
def loopfree_hypergraphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    vertices = tuple(f"v{i}" for i in range(n))
    edge_count = draw(st.integers(min_value=0, max_value=7))
    edges = set()
    for _ in range(edge_count):
        size = draw(st.sampled_from([2, 3]))
        if size > n:
            continue
        start = draw(st.integers(min_value=0, max_value=n - size))
        picks = draw(st.permutations(range(n)))
        edges.add(frozenset(vertices[p] for p in picks[:size]))
        del start
    return Hypergraph(vertices, frozenset(edges))


@settings(max_examples=120, deadline=None)
@given(loopfree_hypergraphs())
def test_linear_iff_girth_at_least_three(h):
    assert is_linear(h) == (girth(h) >= 3)


class TestCores:
    def test_uniform_core_drops_2_edges(self):
        h = build_hypergraph(
            ["a", "b", "c", "d", "e"], [("a", "b", "c"), ("d", "e")]
        )
        core = uniform_core(h)
        assert core.edges == {frozenset({"a", "b", "c"})}
        assert set(core.vertices) == {"a", "b", "c"}

    def test_uniform_core_needs_a_3_edge(self):
        h = build_hypergraph(["a", "b"], [("a", "b")])
        with pytest.raises(ValueError, match="no 3-uniform core"):
            uniform_core(h)

    def test_leaf_core_strips_pendant(self):
        h = build_hypergraph(
            [f"u{i}" for i in range(1, 9)],
            TRIANGLE_EDGES + [("u7", "u8", "u1")],
        )
        core = leaf_core(h)
        assert core.edges == triangle().edges

    def test_leaf_core_fixed_on_cycle(self):
        h = family("n_cycle", 5)
        assert leaf_core(h).edges == h.edges

    def test_leaf_core_idempotent(self):
        h = build_hypergraph(
            [f"u{i}" for i in range(1, 9)],
            TRIANGLE_EDGES + [("u7", "u8", "u1")],
        )
        once = leaf_core(h)
        assert leaf_core(once).edges == once.edges

    def test_leaf_core_rejects_hyperforest(self):
        h = build_hypergraph(["a", "b", "c", "d", "e"], [("a", "b", "c"), ("c", "d", "e")])
        with pytest.raises(ValueError, match="hyperforest"):
            leaf_core(h)


class TestLinkedClasses:
    def test_triangle_classes(self):
        classes = linked_classes(triangle())
        sizes = sorted(len(members) for members in classes.values())
        assert sizes == [1, 1, 1, 2, 2, 2]
        linked = classes[frozenset({"u2", "u3"})]
        assert frozenset({"u5", "u6"}) in linked

    def test_single_edge_all_singletons(self):
        h = build_hypergraph(["a", "b", "c"], [("a", "b", "c")])
        classes = linked_classes(h)
        assert len(classes) == 3
        assert all(len(m) == 1 for m in classes.values())

    def test_universe_excludes_2_edges(self):
        h = build_hypergraph(
            ["a", "b", "c", "d", "e"], [("a", "b", "c"), ("d", "e")]
        )
        classes = linked_classes(h)
        assert frozenset({"d", "e"}) not in classes


class TestIsomorphism:
    def test_relabelled_beam_found(self):
        h = family("beam", 2)
        names = {v: f"w{i}" for i, v in enumerate(h.vertices)}
        relabelled = build_hypergraph(
            [names[v] for v in h.vertices],
            [tuple(names[v] for v in sorted(e)) for e in h.edges],
        )
        iso = find_hypergraph_isomorphism(h, relabelled)
        assert iso is not None
        assert all(frozenset(iso[v] for v in e) in relabelled.edges for e in h.edges)

    def test_symmetry(self):
        a, b = family("fan", 3), family("beam", 3)
        assert (find_hypergraph_isomorphism(a, b) is None) == (
            find_hypergraph_isomorphism(b, a) is None
        )

    def test_size_mismatch(self):
        assert find_hypergraph_isomorphism(family("beam", 1), family("beam", 2)) is None


class TestSerialization:
    def test_round_trip(self):
        h = family("nested", 2)
        assert parse_hypergraph(format_hypergraph(h)).edges == h.edges

    def test_parse_rejects_garbage(self):
        with pytest.raises(HypergraphParseError):
            parse_hypergraph("not json")

    def test_parse_rejects_missing_keys(self):
        with pytest.raises(HypergraphParseError):
            parse_hypergraph('{"vertices": ["a"]}')

    def test_dot_mentions_every_vertex(self):
        h = triangle()
        dot = to_dot(h)
        assert all(v in dot for v in h.vertices)

    def test_dot_with_coloring(self):
        h = build_hypergraph(["a", "b", "c"], [("a", "b", "c")])
        dot = to_dot(h, vertex_colors={"a": 0, "b": 1, "c": 2})
        assert "lightcoral" in dot
