"""
Configuration for the braids-and-ties invariant engine
"""

import os
from pathlib import Path

# Scalar field variables (graded lex order u > A > B)
VARIABLES = ('u', 'A', 'B')
HOMFLYPT_VARIABLES = ('u', 'z')

# Level guards (dimension of E_n grows as Bell(n) * n!)
MAX_LEVEL = int(os.environ.get('BT_MAX_LEVEL', 8))
ENUMERATE_MAX = 10
RELATION_CHECK_MAX = 6
TRACE_SUITE_MAX = 5
HOMFLYPT_MAX_STRANDS = int(os.environ.get('BT_HOMFLYPT_MAX_STRANDS', 7))

# Memoisation of basis-pair products and basis traces
PRODUCT_CACHE_SIZE = int(os.environ.get('BT_PRODUCT_CACHE_SIZE', 65536))
TRACE_CACHE_SIZE = int(os.environ.get('BT_TRACE_CACHE_SIZE', 65536))

# Randomized suites
DEFAULT_SEED = int(os.environ.get('BT_SEED', 7))
DEFAULT_MARKOV_COUNT = 200
DEFAULT_TRACE_SAMPLES = 500
MAX_RANDOM_WORD_LENGTH = 12
CONJUGATIONS_PER_WORD = 3
RANDOM_ELEMENT_TERMS = 3
TOP_GENERATOR_WORDS = 50
REPRESENTATION_WORDS = 20
CHECK_WORD_LENGTH = 6

# Bundled knot table (name,n,word)
DEFAULT_KNOT_TABLE = Path(__file__).resolve().parent / 'data' / 'knot_table.csv'

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

# Rendering
SQRT_SYMBOL = 'L'
HOMFLYPT_SQRT_SYMBOL = 'lambda'
JSON_INDENT = int(os.environ.get('BT_JSON_INDENT', 2))
