"""
Structural subsumption.

``subsumes(c, d)`` decides whether the concept *c* is subsumed by
the concept *d*. The subsumee is normalized into its canonical
graph, and the subsumer is checked against that graph
constructor by constructor. With total attributes two attribute
chains which meet stay together, so a same-as equality also
holds if prefixes of its chains meet and the remaining suffixes
are equal.
"""
from .constants import (PARTIAL, SEMANTICS, TOP_ATOM, TOTAL)
from .canonical import canonical_graph
from .concept import (
    All, And, AtLeast, AtMost, Name, SameAs, Top, in_s_fragment
)
from .errors import FragmentError
from .graph import (DescriptionGraph, top_graph)


def reach(graph, word, start=None):
    """
    :param graph: the graph
    :param word: the attribute chain
    :option start: the start node (default the root)
    :return: the set of nodes at the end of a path labeled with
        the word
    """
    nodes = {graph.root if start is None else start}
    for attribute in word:
        nodes = {m for n in nodes for m in graph.successors(n, attribute)}
        if not nodes:
            break
    return nodes


def _at(graph, node):
    return DescriptionGraph(graph.nodes, graph.edges, node, graph.labels)


def subsumes_graph(concept, graph):
    """
    Decides whether the concept subsumes the graph. The answer is
    exact when the graph is canonical, and a true answer is sound
    for any graph.

    :param concept: the candidate subsumer
    :param graph: the description graph
    :return: whether every instance of the graph is an instance of
        the concept
    """
    root = graph.labels[graph.root]
    if root.incoherent:
        return True
    if isinstance(concept, Top):
        return TOP_ATOM in root.atoms
    if isinstance(concept, Name):
        return concept.name in root.atoms
    if isinstance(concept, AtLeast):
        return concept.n == 0 or any(
            r.name == concept.role and r.min >= concept.n
            for r in root.r_edges)
    if isinstance(concept, AtMost):
        return any(r.name == concept.role and r.max <= concept.n
                   for r in root.r_edges)
    if isinstance(concept, SameAs):
        return bool(reach(graph, concept.left) &
                    reach(graph, concept.right))
    if isinstance(concept, All):
        if any(r.name == concept.name and
               subsumes_graph(concept.concept, r.restriction)
               for r in root.r_edges):
            return True
        if concept.attribute and any(
                subsumes_graph(concept.concept, _at(graph, m))
                for m in graph.successors(graph.root, concept.name)):
            return True
        return subsumes_graph(concept.concept, top_graph())
    if isinstance(concept, And):
        return all(subsumes_graph(c, graph) for c in concept.conjuncts)
    raise TypeError("Not a concept description: %r" % (concept,))


def subsumes(sub, sup):
    """
    :param sub: the candidate subsumee
    :param sup: the candidate subsumer
    :return: whether *sub* is subsumed by *sup* with partial
        attributes
    """
    return subsumes_graph(sup, canonical_graph(sub))


def subsumes_total_graph(concept, graph):
    """
    :param concept: the candidate subsumer, a conjunction of
        same-as equalities
    :param graph: the canonical graph of a conjunction of same-as
        equalities
    :return: whether every instance of the graph is an instance of
        the concept with total attributes
    :raise FragmentError: if the concept has other constructors
    """
    if not in_s_fragment(concept):
        raise FragmentError("Total subsumption needs a conjunction of"
                            " same-as equalities: %s" % concept)
    if graph.labels[graph.root].incoherent or isinstance(concept, Top):
        return True
    if isinstance(concept, And):
        return all(subsumes_total_graph(c, graph) for c in concept.conjuncts)
    left, right = concept.left, concept.right
    for k in range(min(len(left), len(right)), -1, -1):
        if left[len(left) - k:] != right[len(right) - k:]:
            continue
        if reach(graph, left[:len(left) - k]) & \
                reach(graph, right[:len(right) - k]):
            return True
    return False


def subsumes_total(sub, sup):
    """
    :param sub: the candidate subsumee
    :param sup: the candidate subsumer
    :return: whether *sub* is subsumed by *sup* with total
        attributes
    :raise FragmentError: if either concept has constructors other
        than conjunction and same-as
    """
    if not in_s_fragment(sub):
        raise FragmentError("Total subsumption needs a conjunction of"
                            " same-as equalities: %s" % sub)
    return subsumes_total_graph(sup, canonical_graph(sub))


def check_subsumption(sub, sup, mode=PARTIAL):
    """
    :param sub: the candidate subsumee
    :param sup: the candidate subsumer
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :return: whether *sub* is subsumed by *sup*
    """
    if mode == PARTIAL:
        return subsumes(sub, sup)
    if mode == TOTAL:
        return subsumes_total(sub, sup)
    raise ValueError("Unrecognized semantics: %s" % mode)


def equivalent(first, second, mode=PARTIAL):
    """
    :param first: a concept
    :param second: another concept
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :return: whether each concept subsumes the other
    """
    return (check_subsumption(first, second, mode) and
            check_subsumption(second, first, mode))


def is_inconsistent(concept):
    """
    :param concept: the concept
    :return: whether the concept has an empty extension in every
        interpretation
    """
    return canonical_graph(concept).is_bottom


def completion_node(graph, word):
    """
    Finds the node which a word reaches in the completion of a
    deterministic graph, where every node has a successor for
    every attribute. A completion node outside the graph is the
    last graph node on the path with the rest of the word.

    :param graph: the deterministic graph
    :param word: the attribute chain
    :return: the (graph node, unread suffix) pair
    """
    node = graph.root
    word = tuple(word)
    for i, attribute in enumerate(word):
        target = graph.successor(node, attribute)
        if target is None:
            return node, word[i:]
        node = target
    return node, ()


def meet_in_completion(graph, left, right):
    """
    :param graph: the deterministic graph
    :param left: an attribute chain
    :param right: another attribute chain
    :return: whether the chains lead to the same completion node
    """
    return completion_node(graph, left) == completion_node(graph, right)
