"""
The CLASSIC concept description data model.

Concept descriptions are immutable, hashable terms built from
concept names, TOP, number restrictions on roles, conjunction,
value restrictions and same-as equalities of attribute chains.
Attribute number restrictions never occur in a term: the parser
rewrites them into equivalent same-as equalities, value
restrictions, TOP or BOTTOM.
"""
from dataclasses import (dataclass, field)
from functools import reduce
from .constants import BOTTOM_ROLE
from .errors import SignatureError

CONCEPT = 'concept'
ROLE = 'role'
ATTRIBUTE = 'attribute'
KINDS = (CONCEPT, ROLE, ATTRIBUTE)


def _check_count(n):
    if n < 0:
        raise ValueError("Number restrictions need a nonnegative count: %d" % n)


@dataclass(frozen=True)
class Signature(object):
    """
    The declared concept, role and attribute names. The three
    name sets are pairwise disjoint. The reserved BOTTOM role is
    implicitly a role of every signature.
    """

    concept_names: frozenset = frozenset()
    role_names: frozenset = frozenset()
    attribute_names: frozenset = frozenset()

    def __post_init__(self):
        for attr in ('concept_names', 'role_names', 'attribute_names'):
            object.__setattr__(self, attr, frozenset(getattr(self, attr)))
        clashes = ((self.concept_names & self.role_names) |
                   (self.concept_names & self.attribute_names) |
                   (self.role_names & self.attribute_names))
        if clashes:
            raise SignatureError("Identifier declared with two kinds: %s" %
                                 ', '.join(sorted(clashes)))

    def kind(self, identifier):
        """
        :param identifier: the name to classify
        :return: the :const:`CONCEPT`, :const:`ROLE` or
            :const:`ATTRIBUTE` kind, or None if undeclared
        """
        if identifier in self.concept_names:
            return CONCEPT
        if identifier in self.role_names or identifier == BOTTOM_ROLE:
            return ROLE
        if identifier in self.attribute_names:
            return ATTRIBUTE

    def declare(self, kind, identifier):
        """
        :param kind: the identifier kind
        :param identifier: the name to add
        :return: the extended signature
        """
        if kind not in KINDS:
            raise ValueError("Unrecognized identifier kind: %s" % kind)
        current = self.kind(identifier)
        if current and current != kind:
            raise SignatureError("%s is already declared as a %s" %
                                 (identifier, current))
        attr = "%s_names" % kind
        names = getattr(self, attr) | {identifier}
        return Signature(**{**self._asdict(), attr: names})

    def join(self, other):
        """
        :param other: the signature to add
        :return: the union of both signatures
        :raise SignatureError: if a name has different kinds
        """
        return Signature(self.concept_names | other.concept_names,
                         self.role_names | other.role_names,
                         self.attribute_names | other.attribute_names)

    def _asdict(self):
        return dict(concept_names=self.concept_names,
                    role_names=self.role_names,
                    attribute_names=self.attribute_names)


class Concept(object):
    """The concept description base class."""

    __slots__ = ()

    def __str__(self):
        return print_concept(self)


@dataclass(frozen=True)
class Top(Concept):
    """The top concept."""
    pass


@dataclass(frozen=True)
class Name(Concept):
    name: str


@dataclass(frozen=True)
class AtLeast(Concept):
    n: int
    role: str

    def __post_init__(self):
        _check_count(self.n)


@dataclass(frozen=True)
class AtMost(Concept):
    n: int
    role: str

    def __post_init__(self):
        _check_count(self.n)


@dataclass(frozen=True)
class And(Concept):
    conjuncts: tuple

    def __post_init__(self):
        object.__setattr__(self, 'conjuncts', tuple(self.conjuncts))
        if not self.conjuncts:
            raise ValueError("A conjunction needs at least one conjunct")


@dataclass(frozen=True)
class All(Concept):
    """
    The value restriction on a role or, if *attribute* is set,
    on an attribute.
    """

    name: str
    concept: Concept
    attribute: bool = field(default=False)


@dataclass(frozen=True)
class SameAs(Concept):
    """The same-as equality of two attribute chains, either of which may be empty."""

    left: tuple
    right: tuple

    def __post_init__(self):
        object.__setattr__(self, 'left', tuple(self.left))
        object.__setattr__(self, 'right', tuple(self.right))


TOP = Top()
"""The top concept."""

BOTTOM = And((AtLeast(1, BOTTOM_ROLE), AtMost(0, BOTTOM_ROLE)))
"""The inconsistent concept which the BOTTOM keyword stands for."""


def conjoin(conjuncts):
    """
    :param conjuncts: the concepts to conjoin
    :return: TOP for no conjuncts, the conjunct itself for one,
        otherwise the conjunction
    """
    conjuncts = tuple(conjuncts)
    if not conjuncts:
        return TOP
    if len(conjuncts) == 1:
        return conjuncts[0]
    return And(conjuncts)


def value_restriction(path, concept, attribute_path=True):
    """
    Builds the nested value restriction ∀p1...pn.C, which is C
    itself for the empty path.

    :param path: the role or attribute names
    :param concept: the innermost concept
    :option attribute_path: flag indicating whether the path
        names are attributes (default True)
    :return: the value restriction
    """
    restrict = lambda body, name: All(name, body, attribute_path)
    return reduce(restrict, reversed(tuple(path)), concept)


def in_s_fragment(concept):
    """
    :param concept: the concept to check
    :return: whether the concept is built from conjunction and
        same-as equalities only (TOP counts as the empty
        conjunction)
    """
    if isinstance(concept, (SameAs, Top)):
        return True
    if isinstance(concept, And):
        return all(in_s_fragment(c) for c in concept.conjuncts)
    return False


def signature_of(*concepts):
    """
    :param concepts: the concepts to collect identifiers from
    :return: the :class:`Signature` of the identifiers occurring in
        the concepts, classified by their position
    """
    names = {kind: set() for kind in KINDS}
    for concept in concepts:
        _collect(concept, names)
    return Signature(names[CONCEPT], names[ROLE], names[ATTRIBUTE])


def attributes_of(*concepts):
    """
    :param concepts: the concepts to collect attributes from
    :return: the set of attribute names occurring in the concepts
    """
    return set(signature_of(*concepts).attribute_names)


def concept_size(concept):
    """
    :param concept: the concept to measure
    :return: the number of constructors and chain symbols
    """
    if isinstance(concept, And):
        return 1 + sum(concept_size(c) for c in concept.conjuncts)
    if isinstance(concept, All):
        return 1 + concept_size(concept.concept)
    if isinstance(concept, SameAs):
        return 1 + len(concept.left) + len(concept.right)
    return 1


def print_concept(concept):
    """
    Formats the concept in the s-expression syntax read by
    :func:`classic.lcs.parser.parse_concept`.

    :param concept: the concept to print
    :return: the concept text
    """
    if concept == BOTTOM:
        return 'BOTTOM'
    if isinstance(concept, Top):
        return 'TOP'
    if isinstance(concept, Name):
        return concept.name
    if isinstance(concept, AtLeast):
        return "(at-least %d %s)" % (concept.n, concept.role)
    if isinstance(concept, AtMost):
        return "(at-most %d %s)" % (concept.n, concept.role)
    if isinstance(concept, And):
        return "(and %s)" % ' '.join(print_concept(c)
                                     for c in concept.conjuncts)
    if isinstance(concept, All):
        return "(all %s %s)" % (concept.name, print_concept(concept.concept))
    if isinstance(concept, SameAs):
        return "(same-as (%s) (%s))" % (' '.join(concept.left),
                                        ' '.join(concept.right))
    raise TypeError("Not a concept description: %r" % (concept,))


def _collect(concept, names):
    if isinstance(concept, Name):
        names[CONCEPT].add(concept.name)
    elif isinstance(concept, (AtLeast, AtMost)):
        names[ROLE].add(concept.role)
    elif isinstance(concept, And):
        for conjunct in concept.conjuncts:
            _collect(conjunct, names)
    elif isinstance(concept, All):
        names[ATTRIBUTE if concept.attribute else ROLE].add(concept.name)
        _collect(concept.concept, names)
    elif isinstance(concept, SameAs):
        names[ATTRIBUTE].update(concept.left)
        names[ATTRIBUTE].update(concept.right)