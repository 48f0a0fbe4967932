import random
import pytest
from classic.lcs.canonical import canonical_graph
from classic.lcs.concept import (
    BOTTOM, All, And, AtLeast, AtMost, Name, SameAs
)
from classic.lcs.constants import INFINITY
from classic.lcs.graph import node_count
from classic.lcs.product import (lcs2, lcs_graph, lcs_n, product)
from classic.lcs.subsumption import (equivalent, subsumes, subsumes_graph)
from .. import families


class TestProduct(object):
    """Partial attribute lcs tests."""

    def test_c0_d0(self):
        actual = lcs2(families.c0(), families.d0())
        expected = And((SameAs(('a',), ('a',)), SameAs(('b',), ('b',))))
        assert equivalent(actual, expected), "lcs of C0 and D0 incorrect: %s" % actual

    def test_bounds(self):
        actual = lcs2(And((AtLeast(2, 'r'), AtMost(5, 'r'))),
                      And((AtLeast(3, 'r'), AtMost(4, 'r'), Name('A'))))
        expected = And((AtLeast(2, 'r'), AtMost(5, 'r')))
        assert equivalent(actual, expected), "lcs incorrect: %s" % actual

    def test_names(self):
        actual = lcs2(And((Name('A'), Name('B'))), And((Name('B'), Name('C'))))
        assert equivalent(actual, Name('B')), "lcs incorrect: %s" % actual

    def test_attribute_cross(self):
        first = And((SameAs(('a',), ('a',)), All('a', Name('A'), True),
                     All('a', Name('B'), True)))
        second = All('a', Name('A'), True)
        actual = lcs2(first, second)
        assert equivalent(actual, second), "lcs incorrect: %s" % actual
        graph = lcs_graph([first, second])
        r_edge, = graph.labels[graph.root].r_edges
        assert r_edge.attribute and r_edge.max == 1, \
            "Cross r-edge incorrect: %s" % (r_edge,)

    def test_bottom(self):
        graph = product(canonical_graph(BOTTOM), canonical_graph(families.d0()))
        assert node_count(graph) == node_count(canonical_graph(families.d0()))
        rng = random.Random(51)
        for _ in range(20):
            concept = families.random_concept(rng)
            actual = lcs2(BOTTOM, concept)
            assert equivalent(actual, concept), \
                "lcs of BOTTOM and %s incorrect: %s" % (concept, actual)

    def test_idempotent(self):
        rng = random.Random(52)
        for _ in range(20):
            concept = families.random_concept(rng)
            actual = lcs2(concept, concept)
            assert equivalent(actual, concept), \
                "lcs of %s with itself incorrect: %s" % (concept, actual)

    def test_upper_bound(self):
        rng = random.Random(53)
        for _ in range(50):
            first = families.random_concept(rng)
            second = families.random_concept(rng)
            actual = lcs2(first, second)
            assert subsumes(first, actual), \
                "%s is not subsumed by the lcs %s" % (first, actual)
            assert subsumes(second, actual), \
                "%s is not subsumed by the lcs %s" % (second, actual)

    def test_least(self):
        rng = random.Random(54)
        candidates = families.candidate_subsumers()
        for _ in range(50):
            first = families.random_concept(rng)
            second = families.random_concept(rng)
            graph = lcs_graph([first, second])
            for candidate in candidates:
                if subsumes(first, candidate) and subsumes(second, candidate):
                    assert subsumes_graph(candidate, graph), \
                        "The lcs of %s and %s is not subsumed by %s" % \
                        (first, second, candidate)

    def test_commutative(self):
        rng = random.Random(55)
        for _ in range(30):
            first = families.random_concept(rng)
            second = families.random_concept(rng)
            assert equivalent(lcs2(first, second), lcs2(second, first)), \
                "The lcs of %s and %s is not commutative" % (first, second)

    def test_associative(self):
        rng = random.Random(56)
        for _ in range(20):
            c, d, e = (families.random_concept(rng, 1) for _ in range(3))
            left = lcs2(lcs2(c, d), e)
            right = lcs2(c, lcs2(d, e))
            assert equivalent(left, right), \
                "The lcs of %s, %s and %s is not associative" % (c, d, e)

    def test_n_ary(self):
        concept = families.lemon()
        assert lcs_n([concept]) == concept, "Single concept lcs incorrect"
        pair = [families.c0(), families.d0()]
        assert equivalent(lcs_n(pair), lcs2(*pair))
        with pytest.raises(ValueError):
            lcs_graph([])

    def test_exponential(self):
        for n, expected in ((3, 7), (4, 15)):
            concepts = [families.parity_concept(i, n) for i in range(1, n + 1)]
            graph = lcs_graph(concepts)
            assert node_count(graph) >= expected, \
                "lcs of %d parity concepts has %d nodes" % (n, node_count(graph))

    def test_parity_lcs(self):
        attrs = families.parity_attributes(2)
        graph = lcs_graph([families.parity_concept(1, 2),
                           families.parity_concept(2, 2)])
        chains = families.words(attrs, 3)
        for v in chains:
            for w in chains:
                expected = all(v.count(a) % 2 == w.count(a) % 2 for a in attrs)
                actual = subsumes_graph(SameAs(v, w), graph)
                assert actual == expected, \
                    "lcs subsumption by %s = %s incorrect" % (v, w)

    def test_lemon_car(self):
        actual = lcs2(families.lemon(), families.car())
        assert equivalent(actual, families.car()), "lcs incorrect: %s" % actual

    def test_unbounded(self):
        graph = lcs_graph([AtLeast(1, 'r'), AtMost(2, 'r')])
        assert graph.labels[graph.root].r_edges == (), \
            "Unbounded r-edge kept: %s" % (graph.labels[graph.root].r_edges,)
        graph = lcs_graph([AtLeast(1, 'r'), AtLeast(2, 'r')])
        r_edge, = graph.labels[graph.root].r_edges
        assert (r_edge.min, r_edge.max) == (1, INFINITY)


if __name__ == "__main__":
    pytest.main([__file__])
