"""
The least common subsumer of conjunctions of same-as equalities
with total attributes.

With total attributes every node of a canonical graph has a
successor for every attribute in the completion of the graph, and
the lcs is the product of the two completions. That product is
infinite, but it only matters where two distinct paths meet. Such
a meeting point outside the finite product is described by a
:class:`SameAsConfiguration`: two product nodes ``(h1, p0)`` and
``(h2, p0)`` whose first components reach the distinct
a-predecessors ``e1`` and ``e2`` of a node ``f`` along a common
word which leaves ``p0`` through a missing edge. The lcs exists
iff every configuration has finitely many such words, and then it
is the finite product grafted with a trie of these words for each
configuration.
"""
import logging
from collections import (defaultdict, deque)
from dataclasses import dataclass
from itertools import (combinations, permutations)
from .automaton import (
    PathAutomaton, enumerate_finite, enumerate_words, intersect_and_restrict,
    is_infinite, path_automaton
)
from .canonical import (canonical_graph, canonicalize)
from .constants import (DEF_WITNESS_WORDS, TOP_ATOM, TOTAL)
from .concept import (SameAs, attributes_of, in_s_fragment)
from .errors import (FragmentError, LcsNotFoundError)
from .graph import (DescriptionGraph, NodeLabel, fresh_node,
                    graph_to_concept, node_count)

FIRST = 'first'
"""The configuration side whose join node lies in the first graph."""

SECOND = 'second'
"""The configuration side whose join node lies in the second graph."""


@dataclass(frozen=True, order=True)
class SameAsConfiguration(object):
    """
    The nodes ``h1``, ``h2``, ``e1``, ``e2`` and ``f`` of the graph
    on the configuration *side*, the node ``p0`` of the other
    graph and the attribute ``a`` of the a-edges ``(e1, a, f)``
    and ``(e2, a, f)``.
    """

    h1: int
    h2: int
    p0: int
    e1: int
    e2: int
    f: int
    a: str
    side: str


@dataclass(frozen=True)
class ExistenceWitness(object):
    """
    An infinite configuration language. Every accepted word ``x``
    gives the common subsumee ``left x a ↓ right x a`` of the two
    concepts, where *left* and *right* lead to the configuration
    product nodes.
    """

    configuration: SameAsConfiguration
    letter: str
    left: tuple
    right: tuple
    automaton: PathAutomaton
    words: tuple

    def __str__(self):
        config = self.configuration
        return ("configuration h1=%s h2=%s p0=%s e1=%s e2=%s f=%s on the %s"
                " graph, a=%s, b=%s, pumpable words: %s" %
                (config.h1, config.h2, config.p0, config.e1, config.e2,
                 config.f, config.side, config.a, self.letter,
                 ', '.join(_word_text(w) for w in self.words)))


def _word_text(word):
    return ' '.join(word) if word else '()'


def _check_s(*concepts):
    for concept in concepts:
        if not in_s_fragment(concept):
            raise FragmentError("The total attribute lcs needs conjunctions"
                                " of same-as equalities: %s" % concept)


class _PairGraph(object):
    """The product of two canonical graphs on node pairs."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.root = (first.root, second.root)
        self.paths = {self.root: ()}
        self.edges = set()
        queue = deque([self.root])
        while queue:
            pair = queue.popleft()
            n1, n2 = pair
            for attribute, m1 in first.out_edges[n1]:
                m2 = second.successor(n2, attribute)
                if m2 is None:
                    continue
                target = (m1, m2)
                self.edges.add((pair, attribute, target))
                if target not in self.paths:
                    self.paths[target] = self.paths[pair] + (attribute,)
                    queue.append(target)

    def pair(self, config, h):
        return (h, config.p0) if config.side == FIRST else (config.p0, h)

    def sides(self, config):
        """
        :return: the (configuration side graph, other graph) tuple
        """
        if config.side == FIRST:
            return self.first, self.second
        return self.second, self.first


def _configurations(pairs):
    configs = []
    for side in (FIRST, SECOND):
        graph = pairs.first if side == FIRST else pairs.second
        partners = defaultdict(set)
        for n1, n2 in pairs.paths:
            h, p0 = (n1, n2) if side == FIRST else (n2, n1)
            partners[p0].add(h)
        predecessors = defaultdict(set)
        for e, a, f in graph.edges:
            predecessors[(f, a)].add(e)
        for p0, hs in partners.items():
            for h1, h2 in combinations(sorted(hs), 2):
                for (f, a), es in predecessors.items():
                    for e1, e2 in permutations(sorted(es), 2):
                        configs.append(SameAsConfiguration(
                            h1, h2, p0, e1, e2, f, a, side))
    return sorted(configs)


def _language(pairs, config, alphabet, letters=None):
    graph, other = pairs.sides(config)
    present = {a for a, _ in other.out_edges[config.p0]}
    if letters is None:
        letters = set(alphabet) - present
    automaton = intersect_and_restrict(
        path_automaton(graph, config.h1, config.e1, alphabet),
        path_automaton(graph, config.h2, config.e2, alphabet),
        letters)
    return automaton, letters, present


def same_as_configurations(first, second):
    """
    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :return: the sorted configurations of both sides
    """
    _check_s(first, second)
    pairs = _PairGraph(canonical_graph(first), canonical_graph(second))
    return _configurations(pairs)


def configuration_automata(first, second):
    """
    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :return: the sorted (configuration, language automaton) pairs
    """
    _check_s(first, second)
    pairs = _PairGraph(canonical_graph(first), canonical_graph(second))
    alphabet = attributes_of(first, second)
    return [(config, _language(pairs, config, alphabet)[0])
            for config in _configurations(pairs)]


def existence_witness(first, second, count=DEF_WITNESS_WORDS):
    """
    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :option count: the number of words to report (default
        :const:`DEF_WITNESS_WORDS`)
    :return: the :class:`ExistenceWitness` of the first
        configuration with an infinite language, or None if the lcs
        exists
    """
    _check_s(first, second)
    pairs = _PairGraph(canonical_graph(first), canonical_graph(second))
    alphabet = attributes_of(first, second)
    configs = _configurations(pairs)
    logging.info("Checking %d same-as configurations" % len(configs))
    for config in configs:
        automaton, letters, _ = _language(pairs, config, alphabet)
        if not is_infinite(automaton):
            continue
        for letter in sorted(letters):
            restricted, _, _ = _language(pairs, config, alphabet, {letter})
            if is_infinite(restricted):
                witness = ExistenceWitness(
                    config, letter, pairs.paths[pairs.pair(config, config.h1)],
                    pairs.paths[pairs.pair(config, config.h2)], restricted,
                    tuple(first_words(restricted, count)))
                logging.info("The lcs does not exist: %s" % witness)
                return witness
    return None


def first_words(automaton, count):
    """
    :param automaton: the automaton of an infinite language
    :param count: the number of words
    :return: the shortest accepted words, lexicographically within
        a length
    """
    length = 0
    words = []
    while len(words) < count:
        length += 1
        words = enumerate_words(automaton, length)
    return words[:count]


def lcs_exists(first, second):
    """
    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :return: whether the concepts have an lcs with total attributes
    """
    return existence_witness(first, second) is None


def common_subsumees(witness, count=DEF_WITNESS_WORDS):
    """
    :param witness: the :class:`ExistenceWitness`
    :option count: the number of subsumees
    :return: same-as equalities which both concepts are subsumed by
        and which no finite graph joins at once
    """
    words = witness.words
    if len(words) < count:
        words = first_words(witness.automaton, count)
    a = (witness.configuration.a,)
    return [SameAs(witness.left + x + a, witness.right + x + a)
            for x in words[:count]]


def lcs_total_graph(first, second):
    """
    Builds the canonical graph of the lcs with total attributes.

    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :return: the canonical graph of the lcs
    :raise LcsNotFoundError: if the lcs does not exist
    """
    witness = existence_witness(first, second)
    if witness is not None:
        raise LcsNotFoundError("The lcs does not exist: %s" % witness, witness)
    pairs = _PairGraph(canonical_graph(first), canonical_graph(second))
    alphabet = attributes_of(first, second)
    ids = {pair: fresh_node() for pair in pairs.paths}
    edges = {(ids[p], a, ids[q]) for p, a, q in pairs.edges}
    nodes = set(ids.values())
    grafted = 0
    for config in _configurations(pairs):
        automaton, _, present = _language(pairs, config, alphabet)
        words = enumerate_finite(automaton)
        if config.a not in present and config.h1 == config.e1 and \
                config.h2 == config.e2:
            words = [()] + words
        if not words:
            continue
        logging.debug("Grafting %d words at %s" % (len(words), config))
        tries = [{(): ids[pairs.pair(config, config.h1)]},
                 {(): ids[pairs.pair(config, config.h2)]}]
        for word in words:
            join = fresh_node()
            nodes.add(join)
            for trie in tries:
                node = _trie_node(trie, word, nodes, edges)
                edges.add((node, config.a, join))
            grafted += 1
    labels = {n: NodeLabel({TOP_ATOM}) for n in nodes}
    graph = canonicalize(DescriptionGraph(nodes, edges, ids[pairs.root],
                                          labels))
    logging.info("The total lcs graph has %d nodes after grafting %d words" %
                 (node_count(graph), grafted))
    return graph


def _trie_node(trie, word, nodes, edges):
    for i in range(1, len(word) + 1):
        prefix = word[:i]
        if prefix not in trie:
            trie[prefix] = fresh_node()
            nodes.add(trie[prefix])
            edges.add((trie[word[:i - 1]], word[i - 1], trie[prefix]))
    return trie[word]


def lcs_total(first, second):
    """
    :param first: a conjunction of same-as equalities
    :param second: another conjunction of same-as equalities
    :return: the lcs of the concepts with total attributes
    :raise FragmentError: if a concept has other constructors
    :raise LcsNotFoundError: if the lcs does not exist
    """
    return graph_to_concept(lcs_total_graph(first, second), TOTAL)


def lcs_total_n_graph(concepts):
    """
    Folds :func:`lcs_total_graph` over the concepts from the left.

    :param concepts: the concepts, at least one
    :return: the canonical graph of the lcs of the concepts with
        total attributes
    :raise LcsNotFoundError: if an intermediate lcs does not exist
    """
    concepts = list(concepts)
    if not concepts:
        raise ValueError("The lcs needs at least one concept")
    _check_s(*concepts)
    graph = canonical_graph(concepts[0])
    result = concepts[0]
    for i, concept in enumerate(concepts[1:], 1):
        try:
            graph = lcs_total_graph(result, concept)
        except LcsNotFoundError as e:
            raise LcsNotFoundError("The lcs of the first %d concepts and the"
                                   " next concept does not exist: %s" %
                                   (i, e.witness), e.witness)
        result = graph_to_concept(graph, TOTAL)
    return graph


def lcs_total_n(concepts):
    """
    :param concepts: the concepts, at least one
    :return: the lcs of the concepts with total attributes
    :raise LcsNotFoundError: if an intermediate lcs does not exist
    """
    return graph_to_concept(lcs_total_n_graph(concepts), TOTAL)
