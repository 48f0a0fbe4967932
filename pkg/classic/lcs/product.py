"""
The least common subsumer with partial attributes.

The lcs of two concepts is the concept of the product of their
canonical graphs. A product node pairs a node of each graph, the
a-edges pair equally labeled a-edges, and the labels keep the
common atoms and the pairwise products of equally named r-edges.
An a-edge on one side paired with an attribute r-edge on the other
side gives an attribute r-edge whose restriction is the product
of the graph at the a-edge target with the r-edge restriction.
"""
import logging
from collections import deque
from .canonical import (canonical_graph, canonicalize)
from .constants import PARTIAL
from .graph import (
    DescriptionGraph, NodeLabel, REdge, fresh_node, graph_to_concept,
    node_count, relabel, relabel_label
)


class _Product(object):
    """
    Builds a product and its nested products. Products of the same
    pair of (graph, root) operands are built once and copied with
    fresh node ids when they recur.
    """

    def __init__(self):
        self.products = {}
        # Keeps the keyed operands alive so their ids stay unique.
        self.operands = []

    def build(self, first, second):
        key = (id(first.edges), id(first.labels), first.root,
               id(second.edges), id(second.labels), second.root)
        if key in self.products:
            return relabel(self.products[key])
        self.operands.append((first, second))
        self.products[key] = self._build(first, second)
        return self.products[key]

    def _build(self, first, second):
        if first.is_bottom:
            return relabel(second)
        if second.is_bottom:
            return relabel(first)
        root = (first.root, second.root)
        ids = {root: fresh_node()}
        edges = set()
        queue = deque([root])
        while queue:
            pair = queue.popleft()
            n1, n2 = pair
            for attribute, m1 in first.out_edges[n1]:
                for m2 in second.successors(n2, attribute):
                    target = (m1, m2)
                    if target not in ids:
                        ids[target] = fresh_node()
                        queue.append(target)
                    edges.add((ids[pair], attribute, ids[target]))
        labels = {ids[pair]: self._label(first, second, *pair) for pair in ids}
        return DescriptionGraph(set(ids.values()), edges, ids[root], labels)

    def _label(self, first, second, n1, n2):
        label1 = first.labels[n1]
        label2 = second.labels[n2]
        if label1.incoherent:
            return relabel_label(label2)
        if label2.incoherent:
            return relabel_label(label1)
        r_edges = []
        for r1 in label1.r_edges:
            for r2 in label2.r_edges:
                if r1.name == r2.name:
                    r_edges.append(REdge(
                        r1.name, min(r1.min, r2.min), max(r1.max, r2.max),
                        self.build(r1.restriction, r2.restriction),
                        r1.attribute))
        for r2 in label2.r_edges:
            for m1 in first.successors(n1, r2.name):
                r_edges.append(REdge(
                    r2.name, 0, 1,
                    self.build(_at(first, m1), r2.restriction), True))
        for r1 in label1.r_edges:
            for m2 in second.successors(n2, r1.name):
                r_edges.append(REdge(
                    r1.name, 0, 1,
                    self.build(r1.restriction, _at(second, m2)), True))
        return NodeLabel(label1.atoms & label2.atoms, r_edges)


def _at(graph, node):
    return DescriptionGraph(graph.nodes, graph.edges, node, graph.labels)


def product(first, second):
    """
    Builds the product of two canonical graphs. The product node
    set is restricted to the pairs reachable from the root pair,
    and every node id is fresh. If either graph is the incoherent
    graph, the product is a copy of the other graph.

    :param first: a canonical graph
    :param second: another canonical graph
    :return: the product graph
    """
    graph = _Product().build(first, second)
    logging.debug("The product of graphs with %d and %d nodes has %d nodes" %
                  (node_count(first), node_count(second), node_count(graph)))
    return graph


def lcs_graph(concepts):
    """
    :param concepts: the concepts, at least one
    :return: the canonical graph of the lcs of the concepts
    """
    concepts = list(concepts)
    if not concepts:
        raise ValueError("The lcs needs at least one concept")
    graph = canonical_graph(concepts[0])
    for concept in concepts[1:]:
        graph = canonicalize(product(graph, canonical_graph(concept)))
    logging.info("The lcs graph of %d concepts has %d nodes" %
                 (len(concepts), node_count(graph)))
    return graph


def lcs2(first, second):
    """
    :param first: a concept
    :param second: another concept
    :return: the least common subsumer of the concepts with
        partial attributes
    """
    return lcs_n([first, second])


def lcs_n(concepts):
    """
    :param concepts: the concepts, at least one
    :return: the least common subsumer of the concepts with
        partial attributes, which is the concept itself for a
        single concept
    """
    concepts = list(concepts)
    if len(concepts) == 1:
        return concepts[0]
    return graph_to_concept(lcs_graph(concepts), PARTIAL)
