"""The CLASSIC subsumption and least common subsumer reasoner."""

__version__ = '1.0.0'
