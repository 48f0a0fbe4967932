class ReasonerError(Exception):
    """classic lcs error."""
    pass


class ConceptSyntaxError(ReasonerError):
    """Malformed concept text."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super(ConceptSyntaxError, self).__init__(message)
        self.line = line
        self.column = column


class SignatureError(ConceptSyntaxError):
    """An identifier is undeclared, declared twice or misplaced."""
    pass


class FragmentError(ReasonerError):
    """Total semantics was requested for a concept outside the S fragment."""
    pass


class LcsNotFoundError(ReasonerError):
    """
    The total-attribute lcs does not exist. The *witness* is the
    :class:`classic.lcs.total.ExistenceWitness` which proves it.
    """

    def __init__(self, message, witness=None):
        super(LcsNotFoundError, self).__init__(message)
        self.witness = witness


class InfiniteLanguageError(ReasonerError):
    """A finite enumeration was requested of an infinite language."""
    pass


class NormalizationError(ReasonerError):
    """The normalization step budget was exceeded."""
    pass


class InconclusiveSearchError(ReasonerError):
    """
    The countermodel search found none among the domain sizes it
    enumerated and stopped at a domain size whose interpretation
    space exceeds the search limit.
    """

    def __init__(self, message, size=None, count=None):
        super(InconclusiveSearchError, self).__init__(message)
        self.size = size
        self.count = count
