from .constants import (INFINITY, TOP_ATOM)


def to_dot(graph, name='G'):
    """
    Formats the given description graph in the Graphviz DOT
    language. The a-edges are solid arrows labeled with the
    attribute. Each r-edge is a dashed arrow labeled
    ``name [min,max]`` to the root of its restriction graph,
    which is drawn as a cluster. Incoherent nodes are filled red
    and the root is double-circled.

    :param graph: the description graph
    :option name: the digraph name (default ``G``)
    :return: the DOT text
    """
    lines = ["digraph %s {" % _quote(name)]
    _graph_lines(graph, lines, '  ', root=True)
    lines.append('}')
    return '\n'.join(lines) + '\n'


def _graph_lines(graph, lines, indent, root=False):
    for node in sorted(graph.nodes):
        label = graph.labels[node]
        attrs = ["label=%s" % _quote(_node_text(label))]
        if label.incoherent:
            attrs.append('style=filled, fillcolor=red')
        if root and node == graph.root:
            attrs.append('shape=doublecircle')
        lines.append("%sn%d [%s];" % (indent, node, ', '.join(attrs)))
    for source, attribute, target in sorted(graph.edges):
        lines.append("%sn%d -> n%d [label=%s];" %
                     (indent, source, target, _quote(attribute)))
    for node in sorted(graph.nodes):
        for r_edge in graph.labels[node].r_edges:
            nested = r_edge.restriction
            lines.append("%ssubgraph cluster_%d {" % (indent, nested.root))
            _graph_lines(nested, lines, indent + '  ')
            lines.append("%s}" % indent)
            bounds = "%s [%d,%s]" % (r_edge.name, r_edge.min,
                                     _bound_text(r_edge.max))
            lines.append("%sn%d -> n%d [style=dashed, label=%s];" %
                         (indent, node, nested.root, _quote(bounds)))


def _node_text(label):
    if label.incoherent:
        return 'BOTTOM'
    atoms = sorted(label.atoms - {TOP_ATOM})
    if TOP_ATOM in label.atoms:
        atoms.insert(0, TOP_ATOM)
    return ', '.join(atoms)


def _bound_text(bound):
    return 'inf' if bound == INFINITY else str(int(bound))


def _quote(text):
    return '"%s"' % str(text).replace('"', '\\"')


def automaton_to_dot(automaton, name='A'):
    """
    Formats the given path automaton in the Graphviz DOT language.
    Accepting states are double-circled and an arrow from a point
    marks the initial state.

    :param automaton: the path automaton
    :option name: the digraph name (default ``A``)
    :return: the DOT text
    """
    ids = {q: i for i, q in enumerate(sorted(automaton.states, key=str))}
    lines = ["digraph %s {" % _quote(name),
             '  start [shape=point];']
    for state, i in ids.items():
        shape = 'doublecircle' if state in automaton.accepting else 'circle'
        lines.append("  q%d [label=%s, shape=%s];" %
                     (i, _quote(state), shape))
    lines.append("  start -> q%d;" % ids[automaton.initial])
    for source, letter, target in sorted(automaton.transitions, key=str):
        lines.append("  q%d -> q%d [label=%s];" %
                     (ids[source], ids[target], _quote(letter)))
    lines.append('}')
    return '\n'.join(lines) + '\n'
