import random
from classic.lcs.canonical import (
    canonical_graph, canonicalize, is_canonical, is_deterministic
)
from classic.lcs.concept import (
    BOTTOM, All, And, AtLeast, AtMost, Name, SameAs
)
from classic.lcs.constants import (INFINITY, TOP_ATOM)
from classic.lcs.graph import (
    DescriptionGraph, NodeLabel, REdge, concept_to_graph, isomorphic
)
from .. import families


def _lemon_figure():
    """The canonical Lemon graph drawn by hand."""
    report = DescriptionGraph({5}, (), 5, {5: NodeLabel({TOP_ATOM, 'RepairReport'})})
    repairs = REdge('repairs', 10, INFINITY, report)
    labels = {
        1: NodeLabel({TOP_ATOM, 'Car'}, (repairs,)),
        2: NodeLabel({TOP_ATOM, 'Model'}),
        3: NodeLabel({TOP_ATOM, 'Manufacturer'}),
    }
    edges = {(1, 'model', 2), (2, 'madeBy', 3), (1, 'madeBy', 3)}
    return DescriptionGraph({1, 2, 3}, edges, 1, labels)


class TestCanonical(object):
    """Normalization tests."""

    def test_lemon(self):
        graph = canonical_graph(families.lemon())
        assert isomorphic(graph, _lemon_figure()), \
            "Canonical Lemon graph incorrect: %s" % graph

    def test_incompatible_bounds(self):
        graph = canonical_graph(And((AtLeast(2, 'r'), AtMost(1, 'r'))))
        assert graph.is_bottom, "at-least 2 and at-most 1 is coherent"

    def test_bottom(self):
        assert canonical_graph(BOTTOM).is_bottom, "BOTTOM is coherent"

    def test_nested_bottom(self):
        graph = canonical_graph(All('r', BOTTOM))
        r_edge, = graph.labels[graph.root].r_edges
        assert not graph.is_bottom, "A value restriction to BOTTOM is incoherent"
        assert r_edge.max == 0 and r_edge.restriction.is_bottom, \
            "r-edge incorrect: %s" % (r_edge,)

    def test_closed_r_edge(self):
        graph = canonical_graph(And((AtMost(0, 'r'), All('r', Name('A')))))
        r_edge, = graph.labels[graph.root].r_edges
        assert r_edge.restriction.is_bottom, \
            "The at-most 0 restriction is coherent"

    def test_vacuous_r_edge(self):
        graph = canonical_graph(And((Name('A'), AtLeast(0, 'r'))))
        assert graph.labels[graph.root].r_edges == (), \
            "Vacuous r-edge not removed"

    def test_attribute_bottom(self):
        concept = And((SameAs(('a',), ('a',)), All('a', BOTTOM, True)))
        assert canonical_graph(concept).is_bottom, \
            "A defined attribute with a BOTTOM value is coherent"

    def test_lift_and_merge(self):
        concept = And((SameAs(('a',), ('b',)), All('a', Name('A'), True),
                       All('b', Name('B'), True)))
        graph = canonical_graph(concept)
        assert len(graph.nodes) == 2, "Node count incorrect: %d" % len(graph.nodes)
        target = graph.successor(graph.root, 'a')
        assert graph.labels[target].atoms == {TOP_ATOM, 'A', 'B'}, \
            "Merged atoms incorrect: %s" % graph.labels[target]

    def test_merge_a_edges(self):
        # ε = a and ε = aa merge every a successor into the root.
        graph = canonical_graph(And((SameAs((), ('a', 'a')),
                                     SameAs((), ('a', 'a', 'a')))))
        assert len(graph.nodes) == 1, "Node count incorrect: %d" % len(graph.nodes)
        assert graph.edges == {(graph.root, 'a', graph.root)}

    def test_random(self):
        rng = random.Random(31)
        for _ in range(100):
            concept = families.random_concept(rng)
            graph = canonical_graph(concept)
            assert is_canonical(graph), "Graph of %s is not canonical" % concept
            assert is_deterministic(graph), \
                "Graph of %s is not deterministic" % concept

    def test_idempotent(self):
        rng = random.Random(32)
        for _ in range(30):
            graph = canonical_graph(families.random_concept(rng))
            again = canonicalize(graph)
            assert isomorphic(graph, again), "Normalization is not idempotent"

    def test_uncanonical(self):
        assert not is_canonical(concept_to_graph(families.lemon()))


if __name__ == "__main__":
    import pytest
    pytest.main([__file__])
