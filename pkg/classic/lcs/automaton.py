"""
Path automata over attributes.

The a-edges of a description graph without restrictions form a
nondeterministic finite automaton whose words are attribute
chains. The lcs existence test and construction for total
attributes intersect such path languages, decide whether the
intersection is infinite and enumerate it when it is finite.
"""
import logging
from collections import deque
from dataclasses import dataclass
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from .errors import (InfiniteLanguageError, ReasonerError)
from .graph import reachable


@dataclass(frozen=True)
class PathAutomaton(object):
    """
    The (states, alphabet, transitions, initial, accepting)
    automaton. The transitions are (state, attribute, state)
    triples.
    """

    states: frozenset
    alphabet: frozenset
    transitions: frozenset
    initial: object
    accepting: frozenset

    def __post_init__(self):
        for attr in ('states', 'alphabet', 'transitions', 'accepting'):
            object.__setattr__(self, attr, frozenset(getattr(self, attr)))
        if self.initial not in self.states:
            raise ValueError("The initial state %s is not a state" %
                             (self.initial,))
        outside = [t for t in self.transitions
                   if t[0] not in self.states or t[2] not in self.states or
                   t[1] not in self.alphabet]
        if outside or not self.accepting <= self.states:
            raise ValueError("Transitions or accepting states outside the"
                             " automaton: %s" % outside)

    def moves(self, state):
        """
        :param state: the source state
        :return: the sorted (attribute, target) moves
        """
        return sorted(((a, q) for p, a, q in self.transitions if p == state),
                      key=_move_order)

    def step(self, states, attribute):
        """
        :param states: the current state set
        :param attribute: the letter to read
        :return: the state set after the letter
        """
        return {q for p, a, q in self.transitions
                if p in states and a == attribute}


def _move_order(move):
    return move[0], str(move[1])


def path_automaton(graph, start, end, alphabet=None):
    """
    :param graph: the description graph
    :param start: the initial node
    :param end: the accepting node
    :option alphabet: the attributes (default the a-edge
        attributes of the graph)
    :return: the automaton of the a-edge path labels from the
        start node to the end node
    """
    if alphabet is None:
        alphabet = graph.attributes
    alphabet = frozenset(alphabet) | graph.attributes
    return PathAutomaton(graph.nodes, alphabet, graph.edges, start, {end})


def intersect_and_restrict(first, second, first_letters):
    """
    Builds the product automaton of the words accepted by both
    automata which start with one of the given letters. The new
    initial state 0 is not accepting and the product states are
    numbered from 1.

    :param first: an automaton
    :param second: another automaton
    :param first_letters: the allowed first letters
    :return: the intersection automaton
    """
    alphabet = first.alphabet & second.alphabet
    ids = {}
    transitions = set()
    queue = deque()

    def visit(pair):
        if pair not in ids:
            ids[pair] = len(ids) + 1
            queue.append(pair)
        return ids[pair]

    for letter in sorted(set(first_letters) & alphabet):
        for p in first.step({first.initial}, letter):
            for q in second.step({second.initial}, letter):
                transitions.add((0, letter, visit((p, q))))
    while queue:
        p, q = pair = queue.popleft()
        for letter, p2 in first.moves(p):
            if letter in alphabet:
                for q2 in second.step({q}, letter):
                    transitions.add((ids[pair], letter, visit((p2, q2))))
    accepting = {i for (p, q), i in ids.items()
                 if p in first.accepting and q in second.accepting}
    return PathAutomaton(set(ids.values()) | {0}, alphabet, transitions, 0,
                         accepting)


def _indexed(automaton):
    index = {q: i for i, q in enumerate(sorted(automaton.states, key=str))}
    arcs = [(index[p], index[q]) for p, _, q in automaton.transitions]
    return index, arcs


def trim(automaton):
    """
    :param automaton: the automaton
    :return: the automaton restricted to the states which are
        reachable from the initial state and reach an accepting
        state. The initial state is always kept.
    """
    index, arcs = _indexed(automaton)
    size = len(index)
    forward = reachable(size, arcs, index[automaton.initial])
    # The extra vertex is a sink after every accepting state.
    sink_arcs = arcs + [(index[q], size) for q in automaton.accepting]
    backward = reachable(size + 1, sink_arcs, size, reverse=True)
    useful = {q for q, i in index.items() if i in forward and i in backward}
    transitions = {(p, a, q) for p, a, q in automaton.transitions
                   if p in useful and q in useful}
    return PathAutomaton(useful | {automaton.initial}, automaton.alphabet,
                         transitions, automaton.initial,
                         automaton.accepting & useful)


def is_infinite(automaton):
    """
    :param automaton: the automaton
    :return: whether the automaton accepts infinitely many words,
        which is whether its trimmed automaton has a cycle
    """
    trimmed = trim(automaton)
    if any(p == q for p, _, q in trimmed.transitions):
        return True
    index, arcs = _indexed(trimmed)
    if not arcs:
        return False
    adjacency = csr_matrix(([1] * len(arcs), tuple(zip(*arcs))),
                           shape=(len(index), len(index)))
    count, components = connected_components(adjacency, directed=True,
                                             connection='strong')
    return count < len(index)


def enumerate_finite(automaton):
    """
    :param automaton: the automaton of a finite language
    :return: the accepted words as attribute tuples, sorted
        lexicographically
    :raise InfiniteLanguageError: if the language is infinite
    """
    if is_infinite(automaton):
        raise InfiniteLanguageError("The automaton accepts infinitely"
                                    " many words")
    trimmed = trim(automaton)
    bound = len(trimmed.states)
    words = set()
    stack = [(trimmed.initial, ())]
    while stack:
        state, word = stack.pop()
        if len(word) >= bound:
            raise ReasonerError("The word %s is longer than the %d states of"
                                " an acyclic automaton" % (word, bound))
        if state in trimmed.accepting:
            words.add(word)
        for letter, target in trimmed.moves(state):
            stack.append((target, word + (letter,)))
    logging.debug("The finite language has %d words" % len(words))
    return sorted(words)


def accepts(automaton, word):
    """
    :param automaton: the automaton
    :param word: the attribute chain
    :return: whether the automaton accepts the word
    """
    states = {automaton.initial}
    for letter in word:
        states = automaton.step(states, letter)
        if not states:
            return False
    return bool(states & automaton.accepting)


def enumerate_words(automaton, max_length):
    """
    :param automaton: the automaton, possibly of an infinite
        language
    :param max_length: the longest word length
    :return: the accepted words up to the given length, shortest
        first and lexicographically within a length
    """
    trimmed = trim(automaton)
    letters = sorted(trimmed.alphabet)
    words = []
    level = [((), {trimmed.initial})]
    for length in range(max_length + 1):
        words.extend(word for word, states in level
                     if states & trimmed.accepting)
        if length == max_length:
            break
        level = [(word + (letter,), after) for word, states in level
                 for letter in letters
                 for after in [trimmed.step(states, letter)] if after]
    return words
