"""
Braid word I/O: parsing, Markov moves and the knot table
"""

from .knot_table import (
    KNOT_TABLE,
    HomflyptVerdict,
    KnotTableRow,
    compare_homflypt,
    compare_row,
    compare_word,
    load_knot_table,
    resolve_knot,
    table_rows,
)
from .markov import (
    closure_components,
    markov_conjugate,
    markov_invariance_suite,
    markov_stabilize,
    random_braid,
    random_singular_word,
)
from .parser import (
    BraidSyntaxError,
    IndexOutOfRangeError,
    TauInClassicalContextError,
    WordParseError,
    parse_braid,
    parse_singular,
    parse_word,
    render_word,
)

__all__ = [
    'KNOT_TABLE',
    'HomflyptVerdict',
    'KnotTableRow',
    'compare_homflypt',
    'compare_row',
    'compare_word',
    'load_knot_table',
    'resolve_knot',
    'table_rows',
    'closure_components',
    'markov_conjugate',
    'markov_invariance_suite',
    'markov_stabilize',
    'random_braid',
    'random_singular_word',
    'BraidSyntaxError',
    'IndexOutOfRangeError',
    'TauInClassicalContextError',
    'WordParseError',
    'parse_braid',
    'parse_singular',
    'parse_word',
    'render_word',
]
