"""
The concept file grammar.

A concept file is a preamble of ``@attribute``, ``@role`` and
``@concept`` declarations followed by any number of concepts in
s-expression syntax. A ``;`` starts a comment which runs to the
end of the line.
"""
import logging
import sys
from dataclasses import dataclass
from pyparsing import (
    Forward,
    Group,
    Keyword,
    OneOrMore,
    ParseException,
    StringEnd,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    col,
    lineno,
    nums,
    one_of,
    rest_of_line,
)
from .concept import (
    ATTRIBUTE, BOTTOM, CONCEPT, ROLE, TOP, All, And, AtLeast, AtMost,
    Name, SameAs, Signature
)
from .errors import (ConceptSyntaxError, SignatureError)

IDENT_CHARS = alphanums + '_-'


@dataclass(frozen=True)
class _Token(object):
    """A parsed identifier or construct with its source position."""

    tag: str
    args: tuple
    line: int
    column: int


class ConceptParser(object):
    def __init__(self):
        lpar = Suppress('(')
        rpar = Suppress(')')
        keyword = lambda text: Keyword(text, ident_chars=IDENT_CHARS)

        self.identifier = Word(alphas, IDENT_CHARS)
        self.identifier.set_parse_action(self._identifier)
        integer = Word(nums).set_parse_action(lambda toks: int(toks[0]))

        self.concept = Forward()
        top = keyword('TOP').set_parse_action(self._constant('top'))
        bottom = keyword('BOTTOM').set_parse_action(self._constant('bottom'))
        name = (~(keyword('TOP') | keyword('BOTTOM')) +
                self.identifier.copy().add_parse_action(self._name))
        conjunction = (lpar + Suppress(keyword('and')) +
                       Group(OneOrMore(self.concept)) + rpar)
        conjunction.set_parse_action(self._tagged('and'))
        at_least = (lpar + Suppress(keyword('at-least')) + integer +
                    self.identifier + rpar)
        at_least.set_parse_action(self._tagged('at-least'))
        at_most = (lpar + Suppress(keyword('at-most')) + integer +
                   self.identifier + rpar)
        at_most.set_parse_action(self._tagged('at-most'))
        value = (lpar + Suppress(keyword('all')) + self.identifier +
                 self.concept + rpar)
        value.set_parse_action(self._tagged('all'))
        chain = lpar + Group(ZeroOrMore(self.identifier)) + rpar
        same_as = lpar + Suppress(keyword('same-as')) + chain + chain + rpar
        same_as.set_parse_action(self._tagged('same-as'))
        self.concept <<= (top | bottom | name | conjunction | at_least |
                          at_most | value | same_as)

        self.declaration = (Suppress('@') + one_of('attribute role concept') +
                            self.identifier)
        self.declaration.set_parse_action(self._tagged('declare'))

        comment = Suppress(';' + rest_of_line)
        self.single = self.concept + StringEnd()
        self.single.ignore(comment)
        self.file = (Group(ZeroOrMore(self.declaration)) +
                     Group(ZeroOrMore(self.concept)) + StringEnd())
        self.file.ignore(comment)

    def parse_concept(self, text, signature):
        """
        :param text: the concept text
        :param signature: the :class:`Signature` declaring every
            identifier in the text
        :return: the desugared concept
        """
        toks = self._parse(self.single, text)
        return _build(toks[0], signature)

    def parse_file(self, text, signature=None):
        """
        :param text: the concept file content
        :option signature: the signature to extend with the file
            declarations (default empty)
        :return: the (signature, concepts) tuple
        """
        declarations, concepts = self._parse(self.file, text)
        if signature is None:
            signature = Signature()
        for token in declarations:
            kind, ident = token.args
            try:
                signature = signature.declare(kind, ident.args[0])
            except SignatureError as e:
                raise SignatureError(str(e), ident.line, ident.column)
        built = [_build(token, signature) for token in concepts]
        logging.debug("Parsed %d declarations and %d concepts" %
                      (len(declarations), len(built)))
        return signature, built

    @staticmethod
    def _parse(element, text):
        try:
            return element.parse_string(text, parse_all=True)
        except ParseException as e:
            raise ConceptSyntaxError(e.msg, e.lineno, e.col)

    @staticmethod
    def _identifier(text, loc, toks):
        return _Token('id', (toks[0],), lineno(loc, text), col(loc, text))

    @staticmethod
    def _name(text, loc, toks):
        ident = toks[0]
        return _Token('name', (ident,), ident.line, ident.column)

    @staticmethod
    def _constant(tag):
        def action(text, loc, toks):
            return _Token(tag, (), lineno(loc, text), col(loc, text))
        return action

    @staticmethod
    def _tagged(tag):
        def action(text, loc, toks):
            args = tuple(list(tok) if hasattr(tok, 'as_list') else tok
                         for tok in toks)
            return _Token(tag, args, lineno(loc, text), col(loc, text))
        return action


concept_parser = ConceptParser()


def parse_concept(text, signature):
    """
    Parses one concept description.

    :param text: the concept text
    :param signature: the :class:`Signature` declaring every
        identifier in the text
    :return: the desugared concept
    :raise ConceptSyntaxError: if the text is malformed
    :raise SignatureError: if an identifier is undeclared or
        misplaced
    """
    return concept_parser.parse_concept(text, signature)


def parse_file(text, signature=None):
    """
    Parses a concept file.

    :param text: the file content
    :option signature: the signature to extend (default empty)
    :return: the (signature, concepts) tuple
    """
    return concept_parser.parse_file(text, signature)


def read_concepts(paths):
    """
    Reads the concepts of the given files. The ``-`` path reads
    the standard input. Each file may use the identifiers declared
    in the files before it.

    :param paths: the file paths
    :return: the joined signature and the concepts in file order
    """
    signature = Signature()
    concepts = []
    for path in paths:
        try:
            if path == '-':
                text = sys.stdin.read()
            else:
                with open(path, encoding='utf-8') as fh:
                    text = fh.read()
        except UnicodeDecodeError as e:
            raise ConceptSyntaxError("%s is not UTF-8 text: %s" % (path, e))
        signature, file_concepts = parse_file(text, signature)
        concepts.extend(file_concepts)
        logging.info("Read %d concepts from %s" % (len(file_concepts), path))
    return signature, concepts


def _build(token, signature):
    tag = token.tag
    if tag == 'top':
        return TOP
    if tag == 'bottom':
        return BOTTOM
    if tag == 'name':
        ident = token.args[0]
        _check_kind(ident, signature, CONCEPT)
        return Name(ident.args[0])
    if tag == 'and':
        return And(tuple(_build(child, signature) for child in token.args[0]))
    if tag in ('at-least', 'at-most'):
        n, ident = token.args
        kind = _check_kind(ident, signature, ROLE, ATTRIBUTE)
        name = ident.args[0]
        if kind == ROLE:
            return AtLeast(n, name) if tag == 'at-least' else AtMost(n, name)
        return _attribute_restriction(tag, n, name)
    if tag == 'all':
        ident, body = token.args
        kind = _check_kind(ident, signature, ROLE, ATTRIBUTE)
        return All(ident.args[0], _build(body, signature), kind == ATTRIBUTE)
    if tag == 'same-as':
        left, right = token.args
        for ident in left + right:
            _check_kind(ident, signature, ATTRIBUTE)
        return SameAs(tuple(ident.args[0] for ident in left),
                      tuple(ident.args[0] for ident in right))
    raise ValueError("Unrecognized concept token: %s" % tag)


def _attribute_restriction(tag, n, attribute):
    """
    Rewrites a number restriction on an attribute, which has at
    most one filler.
    """
    if tag == 'at-least':
        if n == 0:
            return TOP
        if n == 1:
            return SameAs((attribute,), (attribute,))
        return BOTTOM
    if n == 0:
        return All(attribute, BOTTOM, True)
    return TOP


def _check_kind(ident, signature, *kinds):
    name = ident.args[0]
    kind = signature.kind(name)
    if kind is None:
        raise SignatureError("Undeclared identifier: %s" % name,
                             ident.line, ident.column)
    if kind not in kinds:
        raise SignatureError("The %s %s is not allowed here" % (kind, name),
                             ident.line, ident.column)
    return kind
