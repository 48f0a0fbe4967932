"""
Finite interpretations.

An interpretation over the domain ``0 .. n-1`` assigns a set of
elements to each concept name, a set of element pairs to each
role and a partial function to each attribute. In a total
interpretation every attribute is defined everywhere. The
evaluators here are a brute-force oracle: they decide concept
and graph membership directly from the definitions, and
:func:`find_countermodel` searches the small interpretations for
a subsumption counterexample.
"""
import itertools
import logging
import random
from dataclasses import (dataclass, field)
from functools import cached_property
from types import MappingProxyType
import pandas as pd
from .constants import (
    BOTTOM_ROLE, DEF_MAX_DOMAIN, DEF_MODEL_LIMIT, PARTIAL, SEMANTICS,
    TOP_ATOM, TOTAL
)
from .concept import (
    All, And, AtLeast, AtMost, Name, SameAs, Top, signature_of
)
from .errors import InconclusiveSearchError


@dataclass(frozen=True, eq=False)
class Interpretation(object):
    """
    The interpretation of concept names, roles and attributes over
    the domain ``range(domain_size)``. Identifiers missing from the
    maps have empty extensions.
    """

    domain_size: int
    concepts: MappingProxyType = field(default_factory=dict)
    roles: MappingProxyType = field(default_factory=dict)
    attributes: MappingProxyType = field(default_factory=dict)
    mode: str = PARTIAL

    def __post_init__(self):
        if self.domain_size < 1:
            raise ValueError("The domain size must be positive: %d" %
                             self.domain_size)
        if self.mode not in SEMANTICS:
            raise ValueError("Unrecognized semantics: %s" % self.mode)
        domain = self.domain
        concepts = {c: frozenset(ext) for c, ext in self.concepts.items()}
        roles = {r: frozenset(tuple(p) for p in ext)
                 for r, ext in self.roles.items()}
        attributes = {a: _function(a, ext) for a, ext in self.attributes.items()}
        for name, ext in concepts.items():
            _check_elements(name, ext, domain)
        for name, ext in roles.items():
            _check_elements(name, {x for pair in ext for x in pair}, domain)
        for name, ext in attributes.items():
            _check_elements(name, set(ext) | set(ext.values()), domain)
            if self.mode == TOTAL and len(ext) < self.domain_size:
                raise ValueError("The attribute %s is not total: %s" %
                                 (name, dict(ext)))
        object.__setattr__(self, 'concepts', MappingProxyType(concepts))
        object.__setattr__(self, 'roles', MappingProxyType(roles))
        object.__setattr__(self, 'attributes', MappingProxyType(attributes))

    @property
    def domain(self):
        return range(self.domain_size)

    @cached_property
    def role_successors(self):
        """The role -> element -> sorted successors dictionary."""
        successors = {}
        for role, pairs in self.roles.items():
            table = {d: [] for d in self.domain}
            for d, e in sorted(pairs):
                table[d].append(e)
            successors[role] = table
        return successors

    def fillers(self, name, element, attribute=False):
        """
        :param name: the role or attribute
        :param element: the domain element
        :option attribute: flag indicating whether the name is an
            attribute
        :return: the role successors or attribute value of the
            element, as a list
        """
        if attribute:
            value = self.attributes.get(name, {}).get(element)
            return [] if value is None else [value]
        if name == BOTTOM_ROLE or name not in self.role_successors:
            return []
        return self.role_successors[name][element]

    def chain(self, attributes, element):
        """
        :param attributes: the attribute chain
        :param element: the start element
        :return: the chain image of the element, or None if the
            chain is undefined there
        """
        for attribute in attributes:
            element = self.attributes.get(attribute, {}).get(element)
            if element is None:
                return None
        return element

    def to_frame(self):
        """
        :return: a data frame with one row per domain element and a
            column per concept name, role and attribute
        """
        columns = {}
        for name in sorted(self.concepts):
            columns[name] = [d in self.concepts[name] for d in self.domain]
        for name in sorted(self.roles):
            columns[name] = [self.fillers(name, d) for d in self.domain]
        for name in sorted(self.attributes):
            columns[name] = [self.attributes[name].get(d)
                             for d in self.domain]
        frame = pd.DataFrame(columns, index=list(self.domain))
        frame.index.name = 'element'
        return frame


def _function(name, ext):
    if hasattr(ext, 'items'):
        return MappingProxyType(dict(ext))
    table = {}
    for d, e in ext:
        if table.get(d, e) != e:
            raise ValueError("The attribute %s maps %s to both %s and %s" %
                             (name, d, table[d], e))
        table[d] = e
    return MappingProxyType(table)


def _check_elements(name, elements, domain):
    outside = [x for x in elements if x not in domain]
    if outside:
        raise ValueError("The extension of %s has elements outside the"
                         " domain: %s" % (name, outside))


def eval_concept(concept, interpretation, element):
    """
    :param concept: the concept
    :param interpretation: the :class:`Interpretation`
    :param element: the domain element
    :return: whether the element is in the concept extension
    """
    if isinstance(concept, Top):
        return True
    if isinstance(concept, Name):
        return element in interpretation.concepts.get(concept.name, ())
    if isinstance(concept, AtLeast):
        return len(interpretation.fillers(concept.role, element)) >= concept.n
    if isinstance(concept, AtMost):
        return len(interpretation.fillers(concept.role, element)) <= concept.n
    if isinstance(concept, And):
        return all(eval_concept(c, interpretation, element)
                   for c in concept.conjuncts)
    if isinstance(concept, All):
        fillers = interpretation.fillers(concept.name, element,
                                         concept.attribute)
        return all(eval_concept(concept.concept, interpretation, e)
                   for e in fillers)
    if isinstance(concept, SameAs):
        left = interpretation.chain(concept.left, element)
        right = interpretation.chain(concept.right, element)
        return left is not None and left == right
    raise TypeError("Not a concept description: %r" % (concept,))


def eval_graph(graph, interpretation, element):
    """
    Decides whether some node assignment maps the graph root to
    the element, follows the a-edges and sends every node into
    its label extension. The a-edges fix the nodes reachable from
    the root; any other nodes are enumerated.

    :param graph: the description graph
    :param interpretation: the :class:`Interpretation`
    :param element: the domain element
    :return: whether the element is in the graph extension
    """
    assignment = {graph.root: element}
    frontier = [graph.root]
    while frontier:
        node = frontier.pop()
        for attribute, target in graph.out_edges[node]:
            value = interpretation.chain((attribute,), assignment[node])
            if value is None or assignment.get(target, value) != value:
                return False
            if target not in assignment:
                assignment[target] = value
                frontier.append(target)
    if not all(_in_label(graph.labels[n], interpretation, d)
               for n, d in assignment.items()):
        return False
    free = sorted(graph.nodes - set(assignment))
    if not free:
        return True
    for values in itertools.product(interpretation.domain, repeat=len(free)):
        candidate = dict(assignment)
        candidate.update(zip(free, values))
        if _consistent(graph, interpretation, candidate, free):
            return True
    return False


def _consistent(graph, interpretation, assignment, free):
    free = set(free)
    for source, attribute, target in graph.edges:
        if source in free or target in free:
            value = interpretation.chain((attribute,), assignment[source])
            if value is None or value != assignment[target]:
                return False
    return all(_in_label(graph.labels[n], interpretation, assignment[n])
               for n in free)


def _in_label(label, interpretation, element):
    if label.incoherent:
        return False
    for atom in label.atoms:
        if atom != TOP_ATOM and \
                element not in interpretation.concepts.get(atom, ()):
            return False
    for r_edge in label.r_edges:
        fillers = interpretation.fillers(r_edge.name, element,
                                         r_edge.attribute)
        if not r_edge.min <= len(fillers) <= r_edge.max:
            return False
        if not all(eval_graph(r_edge.restriction, interpretation, e)
                   for e in fillers):
            return False
    return True


def _symbols(signature):
    roles = sorted(signature.role_names - {BOTTOM_ROLE})
    return (sorted(signature.concept_names), roles,
            sorted(signature.attribute_names))


def space_size(signature, size, mode=PARTIAL):
    """
    :param signature: the signature
    :param size: the domain size
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :return: the number of interpretations of the signature over
        a domain of the given size
    """
    concepts, roles, attributes = _symbols(signature)
    values = size if mode == TOTAL else size + 1
    return (2 ** (size * len(concepts)) * 2 ** (size * size * len(roles)) *
            values ** (size * len(attributes)))


def interpretations(signature, size, mode=PARTIAL):
    """
    Enumerates every interpretation of the signature over a domain
    of the given size, in lexicographic order of the extension
    tables.

    :param signature: the signature
    :param size: the domain size
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :return: the interpretation generator
    """
    concepts, roles, attributes = _symbols(signature)
    domain = range(size)
    pairs = list(itertools.product(domain, repeat=2))
    values = list(domain) if mode == TOTAL else [None] + list(domain)
    tables = ([_subsets(domain)] * len(concepts) +
              [_subsets(pairs)] * len(roles) +
              [list(itertools.product(values, repeat=size))] * len(attributes))
    for choice in itertools.product(*tables):
        yield _interpretation(size, mode, concepts, roles, attributes, choice)


def random_interpretation(signature, size, mode=PARTIAL, rng=None):
    """
    :param signature: the signature
    :param size: the domain size
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :option rng: the :class:`random.Random` generator (default
        seeded with 0)
    :return: a random interpretation of the signature
    """
    if rng is None:
        rng = random.Random(0)
    concepts, roles, attributes = _symbols(signature)
    domain = range(size)
    pairs = list(itertools.product(domain, repeat=2))
    values = list(domain) if mode == TOTAL else [None] + list(domain)
    choice = ([frozenset(d for d in domain if rng.random() < 0.5)
               for _ in concepts] +
              [frozenset(p for p in pairs if rng.random() < 0.5)
               for _ in roles] +
              [tuple(rng.choice(values) for _ in domain)
               for _ in attributes])
    return _interpretation(size, mode, concepts, roles, attributes, choice)


def _subsets(elements):
    elements = list(elements)
    return [frozenset(itertools.compress(elements, mask))
            for mask in itertools.product((0, 1), repeat=len(elements))]


def _interpretation(size, mode, concepts, roles, attributes, choice):
    choice = list(choice)
    k = len(concepts)
    l = k + len(roles)
    return Interpretation(
        size,
        dict(zip(concepts, choice[:k])),
        dict(zip(roles, choice[k:l])),
        {a: {d: e for d, e in enumerate(table) if e is not None}
         for a, table in zip(attributes, choice[l:])},
        mode)


def find_countermodel(sub, sup, max_domain=DEF_MAX_DOMAIN, mode=PARTIAL,
                      limit=DEF_MODEL_LIMIT):
    """
    Searches the small interpretations for an element of the
    first concept which is not in the second. Only the identifiers
    of the two concepts are interpreted. Domain sizes are tried in
    ascending order and each is enumerated exhaustively in the
    :func:`interpretations` order, so the first countermodel found
    is always the same. Role extensions are sets of domain pairs,
    so number restrictions above the domain size are decided by
    the filler count alone. Finding no countermodel does not prove
    subsumption.

    :param sub: the candidate subsumee
    :param sup: the candidate subsumer
    :option max_domain: the largest domain size (default
        :const:`DEF_MAX_DOMAIN`)
    :option mode: the :const:`PARTIAL` or :const:`TOTAL` semantics
    :option limit: the largest interpretation space enumerated for
        one domain size (default :const:`DEF_MODEL_LIMIT`)
    :return: the (interpretation, element) countermodel, or None
    :raise InconclusiveSearchError: if no smaller domain has a
        countermodel and a domain size up to *max_domain* has more
        than *limit* interpretations
    """
    if mode not in SEMANTICS:
        raise ValueError("Unrecognized semantics: %s" % mode)
    signature = signature_of(sub, sup)
    for size in range(1, max_domain + 1):
        count = space_size(signature, size, mode)
        if count > limit:
            raise InconclusiveSearchError(
                "No countermodel up to domain size %d, and size %d has %d"
                " interpretations, more than the limit %d" %
                (size - 1, size, count, limit), size, count)
        logging.debug("Enumerating %d interpretations of size %d" %
                      (count, size))
        for interpretation in interpretations(signature, size, mode):
            for element in interpretation.domain:
                if eval_concept(sub, interpretation, element) and \
                        not eval_concept(sup, interpretation, element):
                    logging.info("Found a countermodel of size %d" % size)
                    return interpretation, element
    return None
