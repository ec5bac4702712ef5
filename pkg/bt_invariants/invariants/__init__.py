"""
Invariant adapter factory
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Type

from .base import (
    GuardExceededError,
    LinkInvariant,
    MalformedWordError,
    SpecializationError,
    jones_normalize,
)
from .delta import (
    DeltaInvariant,
    DeltaSqrtLInvariant,
    delta_bar,
    delta_bar_sqrtL_rep,
    delta_two_parameter,
    normalization_factor,
)
from .gamma import GammaInvariant, gamma_bar
from .homflypt import HomflyptInvariant, homflypt_oracle, homflypt_specialize, ocneanu_trace
from .representations import check_singular_relations, pi_bar, pi_bar_sqrtL, sb_rep
from .words import BraidWord, SingularBraidWord, SingularLetter


@dataclass(frozen=True)
class InvariantInfo:
    """Registry entry for an invariant adapter."""

    name: str
    adapter: Type[LinkInvariant]
    aliases: Tuple[str, ...] = field(default_factory=tuple)
    description: str = ""


INVARIANT_REGISTRY: Dict[str, InvariantInfo] = {
    info.name: info for info in (
        InvariantInfo('delta', DeltaInvariant, ('delta-bar', 'bt'),
                      "Three-parameter invariant from the Markov trace on E_n"),
        InvariantInfo('delta-sqrtL', DeltaSqrtLInvariant, ('delta-rescaled', 'sqrtl'),
                      "Same invariant through sigma_i -> sqrt(L) T_i"),
        InvariantInfo('gamma', GammaInvariant, ('gamma-bar', 'singular'),
                      "Invariant of singular links"),
        InvariantInfo('homflypt', HomflyptInvariant, ('homfly', 'hecke', 'ocneanu'),
                      "Homflypt polynomial from the Hecke algebra"),
    )
}


def resolve_invariant(kind: str) -> InvariantInfo:
    key = kind.lower()
    for info in INVARIANT_REGISTRY.values():
        if key == info.name.lower() or key in info.aliases:
            return info
    raise ValueError(
        f"Unsupported invariant: {kind}. Choose from: {', '.join(INVARIANT_REGISTRY)}")


def create_invariant(kind: str) -> LinkInvariant:
    """
    Factory function to create an invariant adapter

    Args:
        kind: Invariant name or alias ('delta', 'delta-sqrtL', 'gamma', 'homflypt')

    Returns:
        LinkInvariant instance

    Raises:
        ValueError: If the invariant is not supported
    """
    return resolve_invariant(kind).adapter()


def list_invariants() -> List[Dict[str, str]]:
    return [
        {'name': info.name, 'display_name': info.adapter.display_name, 'description': info.description}
        for info in INVARIANT_REGISTRY.values()
    ]


__all__ = [
    'BraidWord',
    'SingularBraidWord',
    'SingularLetter',
    'LinkInvariant',
    'DeltaInvariant',
    'DeltaSqrtLInvariant',
    'GammaInvariant',
    'HomflyptInvariant',
    'MalformedWordError',
    'SpecializationError',
    'GuardExceededError',
    'check_singular_relations',
    'INVARIANT_REGISTRY',
    'create_invariant',
    'resolve_invariant',
    'list_invariants',
    'delta_bar',
    'delta_bar_sqrtL_rep',
    'delta_two_parameter',
    'gamma_bar',
    'homflypt_oracle',
    'homflypt_specialize',
    'jones_normalize',
    'normalization_factor',
    'ocneanu_trace',
    'pi_bar',
    'pi_bar_sqrtL',
    'sb_rep',
]
