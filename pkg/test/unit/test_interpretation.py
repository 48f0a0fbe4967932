import random
import pytest
from classic.lcs.canonical import canonicalize
from classic.lcs.concept import (
    BOTTOM, TOP, All, AtLeast, AtMost, Name, SameAs, Signature, signature_of
)
from classic.lcs.constants import (PARTIAL, TOTAL)
from classic.lcs.errors import InconclusiveSearchError
from classic.lcs.graph import (concept_to_graph, merge_graphs)
from classic.lcs.interpretation import (
    Interpretation, eval_concept, eval_graph, find_countermodel,
    interpretations, random_interpretation, space_size
)
from .. import families


class TestInterpretation(object):
    """Finite interpretation and countermodel search tests."""

    def setup_method(self):
        # 0 -a-> 1 -c-> 2, 0 -b-> 1, 1 -r-> 0, 1 -r-> 2
        self.interpretation = Interpretation(
            3, {'A': {1}}, {'r': {(1, 0), (1, 2)}},
            {'a': {0: 1}, 'b': {0: 1}, 'c': {1: 2}})

    def test_validation(self):
        with pytest.raises(ValueError):
            Interpretation(0)
        with pytest.raises(ValueError):
            Interpretation(2, {'A': {2}})
        with pytest.raises(ValueError):
            Interpretation(2, attributes={'a': [(0, 1), (0, 0)]})
        with pytest.raises(ValueError):
            Interpretation(2, attributes={'a': {0: 1}}, mode=TOTAL)

    def test_eval_concept(self):
        i = self.interpretation
        assert eval_concept(SameAs(('a',), ('b',)), i, 0)
        assert not eval_concept(SameAs(('a', 'c'), ('b', 'c', 'c')), i, 0)
        assert eval_concept(SameAs(('a', 'c'), ('b', 'c')), i, 0)
        assert not eval_concept(SameAs(('c',), ('c',)), i, 0), \
            "An undefined chain joins"
        assert eval_concept(All('a', Name('A'), True), i, 0)
        assert eval_concept(All('c', Name('A'), True), i, 0), \
            "An undefined attribute restricts"
        assert eval_concept(AtLeast(2, 'r'), i, 1)
        assert not eval_concept(AtMost(1, 'r'), i, 1)
        assert not eval_concept(BOTTOM, i, 0), "BOTTOM has an instance"
        assert eval_concept(TOP, i, 2)

    def test_to_frame(self):
        frame = self.interpretation.to_frame()
        assert list(frame.index) == [0, 1, 2], "Index incorrect: %s" % frame.index
        assert list(frame['A']) == [False, True, False], \
            "Concept column incorrect: %s" % frame['A']
        assert frame.at[1, 'r'] == [0, 2], "Role column incorrect: %s" % frame['r']

    def test_enumeration(self):
        sig = Signature({'A'}, set(), {'a'})
        actual = len(list(interpretations(sig, 2)))
        expected = space_size(sig, 2)
        assert actual == expected == 4 * 9, "Enumeration size incorrect: %d" % actual
        total = list(interpretations(sig, 2, TOTAL))
        assert len(total) == 4 * 4, "Total enumeration size incorrect: %d" % len(total)
        assert all(len(i.attributes['a']) == 2 for i in total), \
            "A total interpretation has an undefined attribute"

    def test_countermodel(self):
        found = find_countermodel(TOP, Name('A'))
        assert found is not None, "No countermodel of TOP and A"
        interpretation, element = found
        assert element not in interpretation.concepts['A']

    def test_partial_countermodel(self):
        sub = SameAs(('a',), ('b',))
        sup = SameAs(('a', 'c'), ('b', 'c'))
        found = find_countermodel(sub, sup, mode=PARTIAL)
        assert found is not None, "No partial countermodel of a=b and ac=bc"
        interpretation, element = found
        assert interpretation.chain(('a', 'c'), element) is None, \
            "The countermodel defines ac"
        assert find_countermodel(sub, sup, mode=TOTAL) is None, \
            "Total countermodel of a=b and ac=bc"

    def test_no_countermodel(self):
        found = find_countermodel(AtLeast(10, 'r'), AtLeast(8, 'r'))
        assert found is None, "Countermodel of at-least 10 and at-least 8"

    def test_first_countermodel(self):
        first = find_countermodel(TOP, Name('A'))
        second = find_countermodel(TOP, Name('A'))
        interpretation, element = first
        assert interpretation.domain_size == 1 and element == 0, \
            "First countermodel incorrect: %s" % interpretation.to_frame()
        assert interpretation.concepts['A'] == frozenset()
        assert interpretation.to_frame().equals(second[0].to_frame()), \
            "The countermodel search is not deterministic"

    def test_inconclusive(self):
        # One role: 2, 16 and 512 interpretations of sizes 1, 2 and 3.
        with pytest.raises(InconclusiveSearchError) as info:
            find_countermodel(AtLeast(10, 'r'), AtLeast(8, 'r'), limit=100)
        assert info.value.size == 3, "Size incorrect: %s" % info.value.size
        assert info.value.count == 512, "Count incorrect: %s" % info.value.count
        assert find_countermodel(AtLeast(10, 'r'), AtLeast(8, 'r'), 2,
                                 limit=100) is None
        # A countermodel below the limit is found before the search stops.
        found = find_countermodel(AtLeast(1, 'r'), AtLeast(2, 'r'), limit=100)
        assert found is not None, "No countermodel of at-least 1 and at-least 2"

    def test_graph_extension(self):
        rng = random.Random(11)
        for _ in range(100):
            concept = families.random_concept(rng)
            graph = concept_to_graph(concept)
            size = rng.randint(1, 3)
            i = random_interpretation(signature_of(concept), size, PARTIAL, rng)
            for d in i.domain:
                expected = eval_concept(concept, i, d)
                actual = eval_graph(graph, i, d)
                assert actual == expected, \
                    "Graph extension of %s at %d incorrect: %s" % \
                    (concept, d, actual)

    def test_merge_extension(self):
        rng = random.Random(12)
        for _ in range(50):
            first = families.random_concept(rng, 1)
            second = families.random_concept(rng, 1)
            merged = merge_graphs(concept_to_graph(first),
                                  concept_to_graph(second))
            i = random_interpretation(signature_of(first, second), 2,
                                      PARTIAL, rng)
            for d in i.domain:
                expected = eval_concept(first, i, d) and \
                    eval_concept(second, i, d)
                assert eval_graph(merged, i, d) == expected, \
                    "Merged extension of %s and %s at %d incorrect" % \
                    (first, second, d)

    def test_canonical_extension(self):
        rng = random.Random(13)
        for _ in range(100):
            concept = families.random_concept(rng)
            graph = concept_to_graph(concept)
            canonical = canonicalize(graph)
            i = random_interpretation(signature_of(concept), rng.randint(1, 3),
                                      PARTIAL, rng)
            d = rng.randrange(i.domain_size)
            assert eval_graph(canonical, i, d) == eval_graph(graph, i, d), \
                "Normalization changed the extension of %s at %d" % (concept, d)

    def test_total_is_partial(self):
        rng = random.Random(14)
        sig = families.RANDOM_SIGNATURE
        for _ in range(20):
            total = random_interpretation(sig, 2, TOTAL, rng)
            partial = Interpretation(2, total.concepts, total.roles,
                                     total.attributes, PARTIAL)
            concept = families.random_concept(rng)
            for d in total.domain:
                assert eval_concept(concept, total, d) == \
                    eval_concept(concept, partial, d)


if __name__ == "__main__":
    pytest.main([__file__])
