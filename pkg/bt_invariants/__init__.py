"""
bt-invariants - exact link invariants from the algebra of braids and ties
"""

__version__ = "0.1.0"
__description__ = "Exact Markov trace and link invariants of the algebra of braids and ties"

from .main import main

__all__ = ["main"]
