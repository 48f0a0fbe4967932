"""
Canonical description graphs.

:func:`canonicalize` applies the normalization rules until none
of them applies. Nested restriction graphs are normalized before
the graph which holds them. At each level the applicable rule
with the highest priority fires and the search restarts, so
restriction max 0 edges have incoherent restriction graphs before
any attribute r-edge is lifted, and lifted a-edges are merged
last. A canonical graph is deterministic: every node has at most
one a-edge and at most one r-edge per name.
"""
import logging
from functools import lru_cache
from .constants import (CANONICAL_CACHE_SIZE, INFINITY, STEP_BUDGET_FACTOR,
                        TOP_ATOM)
from .errors import NormalizationError
from .graph import (
    INCOHERENT, DescriptionGraph, NodeLabel, REdge, bottom_graph,
    concept_to_graph, edge_count, fresh_node, merge_graphs, merge_labels,
    node_count, prune, relabel
)


class _Workspace(object):
    """The mutable copy of one graph level."""

    def __init__(self, graph):
        self.nodes = set(graph.nodes)
        self.edges = set(graph.edges)
        self.root = graph.root
        self.labels = dict(graph.labels)

    def r_edges(self):
        for node in sorted(self.nodes):
            label = self.labels[node]
            if not label.incoherent:
                for i, r_edge in enumerate(label.r_edges):
                    yield node, i, r_edge

    def replace_r_edges(self, node, r_edges):
        self.labels[node] = NodeLabel(self.labels[node].atoms, r_edges)

    def to_graph(self):
        return prune(DescriptionGraph(self.nodes, self.edges, self.root,
                                      self.labels))


def _is_trivial(graph):
    label = graph.labels[graph.root]
    return (len(graph.nodes) == 1 and not graph.edges and
            not label.incoherent and not label.r_edges and
            label.atoms <= {TOP_ATOM})


def _find_incoherent_node(ws):
    if len(ws.nodes) == 1 and not ws.edges:
        return None
    for node in sorted(ws.nodes):
        if ws.labels[node].incoherent:
            return node


def _mark_graph_incoherent(ws, node):
    ws.nodes = {ws.root}
    ws.edges = set()
    ws.labels = {ws.root: INCOHERENT}


def _find_empty_range(ws):
    for node, i, r_edge in ws.r_edges():
        if r_edge.min > r_edge.max:
            return node


def _mark_node_incoherent(ws, node):
    ws.labels[node] = INCOHERENT


def _find_missing_top(ws):
    for node in sorted(ws.nodes):
        label = ws.labels[node]
        if not label.incoherent and TOP_ATOM not in label.atoms:
            return node


def _add_top(ws, node):
    label = ws.labels[node]
    ws.labels[node] = NodeLabel(label.atoms | {TOP_ATOM}, label.r_edges)


def _find_incoherent_restriction(ws):
    for node, i, r_edge in ws.r_edges():
        if r_edge.restriction.is_bottom and r_edge.max != 0:
            return node, i


def _close_r_edge(ws, match):
    node, i = match
    r_edges = list(ws.labels[node].r_edges)
    r = r_edges[i]
    r_edges[i] = REdge(r.name, r.min, 0, r.restriction, r.attribute)
    ws.replace_r_edges(node, r_edges)


def _find_closed_r_edge(ws):
    for node, i, r_edge in ws.r_edges():
        if r_edge.max == 0 and not r_edge.restriction.is_bottom:
            return node, i


def _mark_restriction_incoherent(ws, match):
    node, i = match
    r_edges = list(ws.labels[node].r_edges)
    r = r_edges[i]
    r_edges[i] = REdge(r.name, r.min, r.max, bottom_graph(), r.attribute)
    ws.replace_r_edges(node, r_edges)


def _find_vacuous_r_edge(ws):
    for node, i, r_edge in ws.r_edges():
        if r_edge.min == 0 and r_edge.max == INFINITY and \
                _is_trivial(r_edge.restriction):
            return node, i


def _remove_r_edge(ws, match):
    node, i = match
    r_edges = list(ws.labels[node].r_edges)
    del r_edges[i]
    ws.replace_r_edges(node, r_edges)


def _find_r_edge_pair(ws):
    for node in sorted(ws.nodes):
        label = ws.labels[node]
        if label.incoherent:
            continue
        seen = {}
        for i, r_edge in enumerate(label.r_edges):
            if r_edge.name in seen:
                return node, seen[r_edge.name], i
            seen[r_edge.name] = i


def _merge_r_edges(ws, match):
    node, i, j = match
    r_edges = list(ws.labels[node].r_edges)
    first, second = r_edges[i], r_edges[j]
    restriction = canonicalize(merge_graphs(first.restriction,
                                            second.restriction))
    r_edges[i] = REdge(first.name, max(first.min, second.min),
                       min(first.max, second.max), restriction,
                       first.attribute)
    del r_edges[j]
    ws.replace_r_edges(node, r_edges)


def _find_liftable_r_edge(ws):
    attributes = {(n, a) for n, a, _ in ws.edges}
    for node, i, r_edge in ws.r_edges():
        if r_edge.attribute and (node, r_edge.name) in attributes and \
                (r_edge.max == 1 or r_edge.restriction.is_bottom):
            return node, i


def _lift_r_edge(ws, match):
    node, i = match
    r_edge = ws.labels[node].r_edges[i]
    lifted = relabel(r_edge.restriction)
    ws.nodes |= lifted.nodes
    ws.edges |= lifted.edges
    ws.labels.update(lifted.labels)
    ws.edges.add((node, r_edge.name, lifted.root))
    _remove_r_edge(ws, match)


def _find_a_edge_pair(ws):
    targets = {}
    for source, attribute, target in sorted(ws.edges):
        other = targets.setdefault((source, attribute), target)
        if other != target:
            return other, target


def _merge_a_edges(ws, match):
    first, second = match
    merged = fresh_node()
    substitute = lambda n: merged if n in match else n
    ws.labels[merged] = merge_labels(ws.labels.pop(first),
                                     ws.labels.pop(second))
    ws.nodes = (ws.nodes - {first, second}) | {merged}
    ws.edges = {(substitute(n), a, substitute(m)) for n, a, m in ws.edges}
    ws.root = substitute(ws.root)


RULES = (
    (1, _find_incoherent_node, _mark_graph_incoherent),
    (2, _find_empty_range, _mark_node_incoherent),
    (3, _find_missing_top, _add_top),
    (4, _find_incoherent_restriction, _close_r_edge),
    (5, _find_closed_r_edge, _mark_restriction_incoherent),
    (6, _find_vacuous_r_edge, _remove_r_edge),
    (7, _find_r_edge_pair, _merge_r_edges),
    (9, _find_liftable_r_edge, _lift_r_edge),
    (8, _find_a_edge_pair, _merge_a_edges),
)
"""The (rule number, finder, transformation) normalization rules in priority order."""


def canonicalize(graph):
    """
    Normalizes a description graph.

    :param graph: the graph to normalize
    :return: the equivalent canonical graph
    :raise NormalizationError: if the rules do not reach a fixpoint
        within the step budget
    """
    ws = _Workspace(graph)
    for node in list(ws.nodes):
        label = ws.labels[node]
        if label.r_edges and not label.incoherent:
            ws.replace_r_edges(node, [
                REdge(r.name, r.min, r.max, canonicalize(r.restriction),
                      r.attribute)
                for r in label.r_edges])
    size = max(node_count(graph) + edge_count(graph), 1)
    budget = STEP_BUDGET_FACTOR * size ** 3
    steps = 0
    while True:
        for number, find, apply in RULES:
            match = find(ws)
            if match is not None:
                logging.debug("Normalization rule %d applies to %s" %
                              (number, match))
                apply(ws, match)
                break
        else:
            return ws.to_graph()
        steps += 1
        if steps > budget:
            raise NormalizationError("Normalization exceeded %d steps on a"
                                     " graph of size %d" % (budget, size))


def is_canonical(graph):
    """
    :param graph: the graph to check
    :return: whether no normalization rule applies to the graph or
        to any nested graph
    """
    ws = _Workspace(graph)
    if any(find(ws) is not None for _, find, _ in RULES):
        return False
    return all(is_canonical(r_edge.restriction)
               for _, _, r_edge in ws.r_edges())


def is_deterministic(graph):
    """
    :param graph: the graph to check
    :return: whether every node, nested graphs included, has at
        most one a-edge and one r-edge per name
    """
    for node in graph.nodes:
        attributes = [a for a, _ in graph.out_edges[node]]
        names = [r.name for r in graph.labels[node].r_edges]
        if len(set(attributes)) < len(attributes) or \
                len(set(names)) < len(names):
            return False
    return all(is_deterministic(r.restriction)
               for label in graph.labels.values() for r in label.r_edges)


@lru_cache(maxsize=CANONICAL_CACHE_SIZE)
def canonical_graph(concept):
    """
    :param concept: the concept
    :return: the canonical description graph of the concept
    """
    graph = canonicalize(concept_to_graph(concept))
    logging.debug("The canonical graph of %s has %d nodes" %
                  (concept, node_count(graph)))
    return graph
