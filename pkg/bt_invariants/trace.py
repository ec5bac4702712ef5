"""
Relative traces E_n -> E_{n-1} and the Markov trace rho_n = rho_{n-1} o rel_n.

On a basis term T_w E_I with factor vector (k_1, ..., k_{n-1}) and k = k_{n-1}:

    k = 0, n not tied     ->     T_w E_{I minus n}
    k = 0, n tied         ->  B  T_w E_{I minus n}
    k > 0                 ->  A  T_{w'} T_{n-2} ... T_k E_{tau(I, k)}

where w' drops the last factor of w. The last case is renormalised through
the algebra multiplication.
"""

import logging
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy.polys.fields import FracElement

from .btalgebra import (
    BasisLabel,
    BtElement,
    e_partition,
    embed,
    gen_T,
    gen_T_inv,
    iter_basis,
    mul,
    product,
    t_run,
    t_word,
)
from .config import TRACE_CACHE_SIZE
from .partitions import remove_last, tau
from .permutations import Perm, canonical_factor, decode, restrict
from .reports import Report
from .scalars import A, B, TRACE_FIELD, U, RatFunc

logger = logging.getLogger(__name__)


def _parameters(a: Optional[RatFunc], b: Optional[RatFunc]) -> Tuple[FracElement, FracElement]:
    return (a if a is not None else A)._frac, (b if b is not None else B)._frac


@lru_cache(maxsize=TRACE_CACHE_SIZE)
def _relative_basis(w: Perm, I, a: FracElement, b: FracElement
                    ) -> Tuple[Tuple[BasisLabel, FracElement], ...]:
    n = w.n
    ks = canonical_factor(w)
    k = ks[-1]
    if k == 0:
        coeff = b if len(I.block_of(n)) > 1 else TRACE_FIELD.one
        return (((restrict(w), remove_last(I)), coeff),)
    head = t_word(decode(ks[:-1]))
    image = product((head, t_run(n - 2, k, n - 1), e_partition(tau(I, k))), n - 1)
    return tuple((label, coeff * a) for label, coeff in image.raw_items())


def rel_trace(x: BtElement, a: Optional[RatFunc] = None, b: Optional[RatFunc] = None) -> BtElement:
    """Relative trace of x into E_{n-1}; ``a``/``b`` override the parameters A, B."""
    if x.n < 2:
        raise ValueError("The relative trace needs n >= 2")
    pa, pb = _parameters(a, b)
    result: Dict[BasisLabel, FracElement] = {}
    for (w, I), coeff in x.raw_items():
        for label, value in _relative_basis(w, I, pa, pb):
            total = result.get(label)
            result[label] = coeff * value if total is None else total + coeff * value
    return BtElement(x.n - 1, result)


@lru_cache(maxsize=TRACE_CACHE_SIZE)
def _markov_basis(w: Perm, I, a: FracElement, b: FracElement) -> FracElement:
    if w.n == 1:
        return TRACE_FIELD.one
    total = TRACE_FIELD.zero
    for (v, J), coeff in _relative_basis(w, I, a, b):
        total += coeff * _markov_basis(v, J, a, b)
    return total


def markov_trace(x: BtElement, a: Optional[RatFunc] = None, b: Optional[RatFunc] = None) -> RatFunc:
    """rho_n(x) in Q(u, A, B)."""
    pa, pb = _parameters(a, b)
    total = TRACE_FIELD.zero
    for (w, I), coeff in x.raw_items():
        total += coeff * _markov_basis(w, I, pa, pb)
    return RatFunc(total)


def trace_cache_info() -> Dict[str, object]:
    return {'relative': _relative_basis.cache_info(), 'markov': _markov_basis.cache_info()}


def factorization_scalar() -> RatFunc:
    """u^-1 A + (u^-1 - 1) B."""
    return A / U + (1 / U - 1) * B


def factorization_check(x: BtElement) -> bool:
    """rho_{n+1}(x T_n^-1) == (u^-1 A + (u^-1 - 1) B) rho_n(x)."""
    n = x.n + 1
    lifted = mul(embed(x, n), gen_T_inv(n - 1, n, allow_large=True))
    return markov_trace(lifted) == factorization_scalar() * markov_trace(x)


def conjugation_property_check(n: int) -> Report:
    """rel_n(T_{n-1}^-1 X T_{n-1}) and rel_n(T_{n-1} X T_{n-1}^-1) equal rel_{n-1}(X)."""
    if n < 2:
        raise ValueError("The conjugation property needs n >= 2")
    report = Report(name='conjugation_property', n=n)
    T, T_inv = gen_T(n - 1, n), gen_T_inv(n - 1, n)
    for X in iter_basis(n - 1):
        expected = X if n == 2 else embed(rel_trace(X), n - 1)
        lifted = embed(X, n)
        (label, _), = X.raw_items()
        indices = label[0].images
        report.record('inverse_first', indices, rel_trace(product((T_inv, lifted, T), n)) == expected)
        report.record('inverse_last', indices, rel_trace(product((T, lifted, T_inv), n)) == expected)
    return report
