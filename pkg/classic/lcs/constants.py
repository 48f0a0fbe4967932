import math

PARTIAL = 'partial'
"""Attributes are interpreted as partial functions."""

TOTAL = 'total'
"""Attributes are interpreted as total functions."""

SEMANTICS = (PARTIAL, TOTAL)
"""The recognized attribute semantics."""

TOP_ATOM = 'TOP'
"""The node label atom standing for the top concept."""

BOTTOM_ROLE = '_bottom'
"""
The reserved role of the BOTTOM desugaring. The leading
underscore keeps it out of the identifier syntax, so it never
clashes with a declared role.
"""

INFINITY = math.inf
"""The unbounded r-edge max."""

DEF_MAX_DOMAIN = 3
"""The default largest countermodel domain size."""

DEF_MODEL_LIMIT = 100000
"""
The largest interpretation space enumerated for one domain
size. The countermodel search is inconclusive beyond it.
"""

STEP_BUDGET_FACTOR = 50
"""The normalization step budget is this factor times size cubed."""

CANONICAL_CACHE_SIZE = 4096
"""The number of canonical graphs kept per concept value."""

DEF_WITNESS_WORDS = 3
"""The number of pumpable words reported when an lcs is missing."""
