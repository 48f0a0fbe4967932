from classic.lcs.automaton import path_automaton
from classic.lcs.canonical import canonical_graph
from classic.lcs.concept import (BOTTOM, All, AtLeast)
from classic.lcs.diagram import (automaton_to_dot, to_dot)
from .. import families


class TestDiagram(object):
    """DOT output tests."""

    def test_lemon(self):
        graph = canonical_graph(families.lemon())
        dot = to_dot(graph, 'Lemon')
        assert dot.startswith('digraph "Lemon" {'), "DOT header incorrect: %s" % dot
        assert "n%d [label=\"TOP, Car\", shape=doublecircle];" % graph.root in dot, \
            "Root node incorrect: %s" % dot
        assert 'label="madeBy"' in dot and 'label="model"' in dot
        assert 'style=dashed, label="repairs [10,inf]"' in dot, \
            "r-edge incorrect: %s" % dot
        assert 'subgraph cluster_' in dot

    def test_bottom(self):
        dot = to_dot(canonical_graph(BOTTOM))
        assert 'style=filled, fillcolor=red' in dot, "Incoherent node incorrect: %s" % dot
        assert 'label="BOTTOM"' in dot

    def test_bounds(self):
        dot = to_dot(canonical_graph(All('r', AtLeast(1, 's'))))
        assert 'label="r [0,inf]"' in dot, "Role bounds incorrect: %s" % dot
        assert 'label="s [1,inf]"' in dot

    def test_automaton(self):
        graph = canonical_graph(families.d0())
        x = graph.successor(graph.root, 'a')
        dot = automaton_to_dot(path_automaton(graph, x, x), 'loop')
        assert 'start [shape=point];' in dot
        assert dot.count('shape=doublecircle') == 1, \
            "Accepting states incorrect: %s" % dot
        assert 'label="c"' in dot


if __name__ == "__main__":
    import pytest
    pytest.main([__file__])
