"""
Description graphs.

A description graph is a rooted graph whose a-edges carry the
same-as structure of a concept and whose node labels carry the
concept names and r-edges. An r-edge is a number and value
restriction on a role, or a value restriction on an attribute,
with its own nested description graph.
"""
import itertools
import logging
from collections import deque
from dataclasses import (dataclass, field)
from functools import cached_property
from types import MappingProxyType
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order
from .constants import (INFINITY, PARTIAL, SEMANTICS, TOP_ATOM, TOTAL)
from .concept import (
    BOTTOM, TOP, All, And, AtLeast, AtMost, Name, SameAs, Top, conjoin,
    value_restriction
)
from .errors import FragmentError

_node_ids = itertools.count(1)


def fresh_node():
    """
    :return: a node id not used by any other graph
    """
    return next(_node_ids)


@dataclass(frozen=True)
class REdge(object):
    """
    The (name, min, max, restriction) r-edge. Attribute r-edges
    have min 0 and max 0 or 1.
    """

    name: str
    min: int
    max: float
    restriction: 'DescriptionGraph'
    attribute: bool = False

    def __post_init__(self):
        if self.min < 0 or self.max < 0:
            raise ValueError("Negative r-edge bound on %s: [%s, %s]" %
                             (self.name, self.min, self.max))
        if self.attribute and (self.min != 0 or self.max not in (0, 1)):
            raise ValueError("Attribute r-edge %s needs the bounds [0, 0]"
                             " or [0, 1]: [%s, %s]" %
                             (self.name, self.min, self.max))


@dataclass(frozen=True)
class NodeLabel(object):
    """A node label, either incoherent or a set of atoms with r-edges."""

    atoms: frozenset = frozenset()
    r_edges: tuple = ()
    incoherent: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'atoms', frozenset(self.atoms))
        object.__setattr__(self, 'r_edges', tuple(self.r_edges))


INCOHERENT = NodeLabel(incoherent=True)
"""The label of an inconsistent node."""


@dataclass(frozen=True, eq=False)
class DescriptionGraph(object):
    """
    The (nodes, edges, root, labels) description graph. The edges
    are (source, attribute, target) triples.
    """

    nodes: frozenset
    edges: frozenset
    root: int
    labels: MappingProxyType = field(default_factory=dict)

    def __post_init__(self):
        nodes = frozenset(self.nodes)
        edges = frozenset(self.edges)
        labels = {n: self.labels.get(n, NodeLabel()) for n in nodes}
        if self.root not in nodes:
            raise ValueError("The root %s is not a graph node" % self.root)
        dangling = [e for e in edges if e[0] not in nodes or e[2] not in nodes]
        if dangling:
            raise ValueError("Edges with an endpoint outside the graph: %s" %
                             dangling)
        object.__setattr__(self, 'nodes', nodes)
        object.__setattr__(self, 'edges', edges)
        object.__setattr__(self, 'labels', MappingProxyType(labels))

    @cached_property
    def out_edges(self):
        """The node -> sorted (attribute, target) list dictionary."""
        out = {n: [] for n in self.nodes}
        for source, attribute, target in self.edges:
            out[source].append((attribute, target))
        for arcs in out.values():
            arcs.sort()
        return MappingProxyType(out)

    def successors(self, node, attribute):
        """
        :param node: the source node
        :param attribute: the a-edge attribute
        :return: the targets of the matching a-edges
        """
        return [m for a, m in self.out_edges[node] if a == attribute]

    def successor(self, node, attribute):
        """
        :param node: the source node of a deterministic graph
        :param attribute: the a-edge attribute
        :return: the target, or None if there is no such a-edge
        """
        targets = self.successors(node, attribute)
        return targets[0] if targets else None

    def rerooted(self, node):
        """
        :param node: the new root
        :return: the part of this graph reachable from the node
        """
        return prune(DescriptionGraph(self.nodes, self.edges, node,
                                      self.labels))

    @property
    def is_bottom(self):
        """Whether this is the single incoherent node graph."""
        return len(self.nodes) == 1 and self.labels[self.root].incoherent

    @property
    def attributes(self):
        """The attributes labeling a-edges."""
        return {a for _, a, _ in self.edges}


def top_graph():
    """
    :return: the single node graph of TOP
    """
    root = fresh_node()
    return DescriptionGraph({root}, (), root,
                            {root: NodeLabel({TOP_ATOM})})


def bottom_graph():
    """
    :return: the single incoherent node graph
    """
    root = fresh_node()
    return DescriptionGraph({root}, (), root, {root: INCOHERENT})


def relabel(graph):
    """
    :param graph: the graph to copy
    :return: a copy of the graph, nested graphs included, with
        fresh node ids
    """
    ids = {n: fresh_node() for n in sorted(graph.nodes)}
    edges = {(ids[n], a, ids[m]) for n, a, m in graph.edges}
    labels = {ids[n]: relabel_label(label)
              for n, label in graph.labels.items()}
    return DescriptionGraph(set(ids.values()), edges, ids[graph.root], labels)


def relabel_label(label):
    if label.incoherent or not label.r_edges:
        return label
    r_edges = tuple(REdge(r.name, r.min, r.max, relabel(r.restriction),
                          r.attribute)
                    for r in label.r_edges)
    return NodeLabel(label.atoms, r_edges)


def merge_labels(first, second):
    """
    :param first: a node label
    :param second: another node label
    :return: the merged label, incoherent if either label is
    """
    if first.incoherent or second.incoherent:
        return INCOHERENT
    return NodeLabel(first.atoms | second.atoms,
                     first.r_edges + second.r_edges)


def merge_graphs(first, second):
    """
    Merges two graphs at their roots. The result has fresh node
    ids, so it shares no node with either operand.

    :param first: a graph
    :param second: another graph
    :return: the merged graph, rooted at the merged root
    """
    first = relabel(first)
    second = relabel(second)
    root = first.root
    replace = lambda n: root if n == second.root else n
    edges = set(first.edges)
    edges.update((replace(n), a, replace(m)) for n, a, m in second.edges)
    labels = dict(first.labels)
    labels.update((n, label) for n, label in second.labels.items()
                  if n != second.root)
    labels[root] = merge_labels(first.labels[root],
                                second.labels[second.root])
    nodes = first.nodes | (second.nodes - {second.root})
    return DescriptionGraph(nodes, edges, root, labels)


def concept_to_graph(concept):
    """
    Translates a concept into its description graph.

    :param concept: the concept to translate
    :return: the (not normalized) description graph
    """
    if isinstance(concept, Top):
        return top_graph()
    if isinstance(concept, Name):
        return _single_node(NodeLabel({concept.name}))
    if isinstance(concept, AtLeast):
        r_edge = REdge(concept.role, concept.n, INFINITY, top_graph())
        return _single_node(NodeLabel((), (r_edge,)))
    if isinstance(concept, AtMost):
        r_edge = REdge(concept.role, 0, concept.n, top_graph())
        return _single_node(NodeLabel((), (r_edge,)))
    if isinstance(concept, All):
        body = concept_to_graph(concept.concept)
        if concept.attribute:
            r_edge = REdge(concept.name, 0, 1, body, True)
        else:
            r_edge = REdge(concept.name, 0, INFINITY, body)
        return _single_node(NodeLabel((), (r_edge,)))
    if isinstance(concept, SameAs):
        return _same_as_graph(concept.left, concept.right)
    if isinstance(concept, And):
        graphs = [concept_to_graph(c) for c in concept.conjuncts]
        result = graphs[0]
        for graph in graphs[1:]:
            result = merge_graphs(result, graph)
        return result
    raise TypeError("Not a concept description: %r" % (concept,))


def _single_node(label):
    root = fresh_node()
    return DescriptionGraph({root}, (), root, {root: label})


def _same_as_graph(left, right):
    """
    Builds two a-edge paths from a common root to a common end
    node. The end node is the root itself if either chain is
    empty.
    """
    root = fresh_node()
    end = root if not left or not right else fresh_node()
    nodes = {root, end}
    edges = set()
    for chain in (left, right):
        source = root
        for i, attribute in enumerate(chain):
            target = end if i == len(chain) - 1 else fresh_node()
            nodes.add(target)
            edges.add((source, attribute, target))
            source = target
    return DescriptionGraph(nodes, edges, root)


def spanning_tree(graph):
    """
    Builds the breadth-first spanning tree of a graph. Out-edges
    are visited in attribute then target id order.

    :param graph: the graph to span
    :return: the (paths, tree edges, other edges) tuple, where
        paths maps each reachable node to its tree path from the
        root in visiting order
    """
    paths = {graph.root: ()}
    tree = []
    others = []
    queue = deque([graph.root])
    while queue:
        node = queue.popleft()
        for attribute, target in graph.out_edges[node]:
            if target in paths:
                others.append((node, attribute, target))
            else:
                paths[target] = paths[node] + (attribute,)
                tree.append((node, attribute, target))
                queue.append(target)
    return paths, tree, others


def graph_to_concept(graph, mode=PARTIAL):
    """
    Translates a description graph into an equivalent concept.
    The partial mode translation has a ``v ↓ v`` conjunct for each
    spanning tree leaf ``v`` other than the root, which total
    attributes make redundant.

    :param graph: the graph to translate
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :return: the concept
    :raise FragmentError: if the mode is total and the graph has
        concept names, r-edges or incoherent nodes
    """
    if mode not in SEMANTICS:
        raise ValueError("Unrecognized semantics: %s" % mode)
    if mode == TOTAL:
        _check_s_graph(graph)
    if graph.is_bottom:
        return BOTTOM
    paths, tree, others = spanning_tree(graph)
    conjuncts = []
    if mode == PARTIAL:
        parents = {n for n, _, _ in tree}
        conjuncts.extend(SameAs(path, path) for node, path in paths.items()
                         if node != graph.root and node not in parents)
    conjuncts.extend(SameAs(paths[n] + (a,), paths[m]) for n, a, m in others)
    for node, path in paths.items():
        parts = _label_conjuncts(graph.labels[node])
        if node == graph.root:
            conjuncts.extend(parts)
        elif parts:
            conjuncts.append(value_restriction(path, conjoin(parts)))
    return conjoin(conjuncts)


def _label_conjuncts(label):
    if label.incoherent:
        return [BOTTOM]
    parts = [Name(atom) for atom in sorted(label.atoms) if atom != TOP_ATOM]
    for r_edge in sorted(label.r_edges, key=_r_edge_order):
        body = graph_to_concept(r_edge.restriction)
        if r_edge.attribute:
            if r_edge.max == 0:
                parts.append(All(r_edge.name, BOTTOM, True))
            elif body != TOP:
                parts.append(All(r_edge.name, body, True))
            continue
        if r_edge.min > 0:
            parts.append(AtLeast(r_edge.min, r_edge.name))
        if r_edge.max != INFINITY:
            parts.append(AtMost(int(r_edge.max), r_edge.name))
        if r_edge.max != 0 and body != TOP:
            parts.append(All(r_edge.name, body))
    return parts


def _r_edge_order(r_edge):
    return (r_edge.name, r_edge.min, r_edge.max)


def _check_s_graph(graph):
    for node, label in graph.labels.items():
        if label.incoherent or label.r_edges or label.atoms - {TOP_ATOM}:
            raise FragmentError("Total semantics needs a graph without"
                                " concept names or restrictions; node %s"
                                " is labeled %s" % (node, label))


def is_s_graph(graph):
    """
    :param graph: the graph to check
    :return: whether the graph only has a-edges and TOP atoms
    """
    try:
        _check_s_graph(graph)
    except FragmentError:
        return False
    return True


def reachable(size, arcs, start, reverse=False):
    """
    :param size: the number of vertices, numbered from 0
    :param arcs: the (source, target) vertex pairs
    :param start: the start vertex
    :option reverse: flag indicating whether to follow the arcs
        backwards
    :return: the set of vertices reachable from the start vertex
    """
    arcs = list(arcs)
    rows = [t if reverse else s for s, t in arcs]
    cols = [s if reverse else t for s, t in arcs]
    adjacency = csr_matrix(([1] * len(arcs), (rows, cols)),
                           shape=(size, size))
    order = breadth_first_order(adjacency, start, directed=True,
                                return_predecessors=False)
    return {int(v) for v in order}


def prune(graph):
    """
    Removes the nodes which are not reachable from the root, in
    the graph and in its nested graphs.

    :param graph: the graph to prune
    :return: the pruned graph
    """
    index = {n: i for i, n in enumerate(sorted(graph.nodes))}
    arcs = ((index[n], index[m]) for n, _, m in graph.edges)
    kept = reachable(len(index), arcs, index[graph.root])
    nodes = {n for n, i in index.items() if i in kept}
    if len(nodes) < len(graph.nodes):
        logging.debug("Pruned %d unreachable nodes" %
                      (len(graph.nodes) - len(nodes)))
    edges = {(n, a, m) for n, a, m in graph.edges if n in nodes}
    labels = {n: _prune_label(graph.labels[n]) for n in nodes}
    return DescriptionGraph(nodes, edges, graph.root, labels)


def _prune_label(label):
    if label.incoherent or not label.r_edges:
        return label
    r_edges = tuple(REdge(r.name, r.min, r.max, prune(r.restriction),
                          r.attribute)
                    for r in label.r_edges)
    return NodeLabel(label.atoms, r_edges)


def canonical_key(graph):
    """
    Numbers the nodes in breadth-first order and returns a
    hashable value which is equal for two deterministic graphs iff
    they are isomorphic.

    :param graph: the graph
    :return: the key
    """
    paths, _, _ = spanning_tree(graph)
    number = {n: i for i, n in enumerate(paths)}
    edges = tuple(sorted((number[n], a, number[m])
                         for n, a, m in graph.edges if n in number))
    labels = tuple(_label_key(graph.labels[n]) for n in paths)
    return labels, edges


def _label_key(label):
    if label.incoherent:
        return (True,)
    r_edges = sorted((r.name, r.min, r.max, r.attribute,
                      canonical_key(r.restriction))
                     for r in label.r_edges)
    return False, tuple(sorted(label.atoms)), tuple(r_edges)


def isomorphic(first, second):
    """
    :param first: a deterministic graph
    :param second: another deterministic graph
    :return: whether the graphs are equal up to node ids
    """
    return canonical_key(first) == canonical_key(second)


def node_count(graph):
    """
    :param graph: the graph
    :return: the number of nodes, nested graphs included
    """
    return len(graph.nodes) + sum(node_count(r.restriction)
                                  for label in graph.labels.values()
                                  for r in label.r_edges)


def edge_count(graph):
    """
    :param graph: the graph
    :return: the number of a-edges and r-edges, nested graphs
        included
    """
    return len(graph.edges) + sum(1 + edge_count(r.restriction)
                                  for label in graph.labels.values()
                                  for r in label.r_edges)
