"""
Set partitions of {1..n}

A partition is stored as its restricted growth string: element i (1-based)
carries the index of its block, blocks numbered in order of their minimal
element. That form is unique, so equality and hashing are structural.
"""

import logging
import re
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .config import ENUMERATE_MAX

if TYPE_CHECKING:
    from .permutations import Perm

logger = logging.getLogger(__name__)


def _canonical_labels(assignment: Sequence[int]) -> Tuple[int, ...]:
    """Relabel arbitrary block ids by first occurrence."""
    relabel: Dict[int, int] = {}
    labels = []
    for block_id in assignment:
        if block_id not in relabel:
            relabel[block_id] = len(relabel)
        labels.append(relabel[block_id])
    return tuple(labels)


class SetPartition:
    """Partition of {1..n}; singleton blocks are implicit in the text form."""

    __slots__ = ('_labels', '_hash')

    def __init__(self, labels: Sequence[int]):
        labels = _canonical_labels(labels)
        if not labels:
            raise ValueError("A set partition needs n >= 1")
        self._labels = labels
        self._hash = hash(labels)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> 'SetPartition':
        """Build from blocks; elements not listed become singletons."""
        assignment = list(range(n))
        seen = set()
        for block in blocks:
            members = sorted(block)
            if not members:
                continue
            for element in members:
                if not 1 <= element <= n:
                    raise ValueError(f"Element {element} outside {{1..{n}}}")
                if element in seen:
                    raise ValueError(f"Element {element} appears in two blocks")
                seen.add(element)
                assignment[element - 1] = n + members[0]
        return cls(assignment)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """All blocks, singletons included, ordered by minimum."""
        grouped: List[List[int]] = []
        for element, label in enumerate(self._labels, start=1):
            if label == len(grouped):
                grouped.append([])
            grouped[label].append(element)
        return tuple(tuple(block) for block in grouped)

    def nontrivial_blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(block for block in self.blocks() if len(block) > 1)

    def supp(self) -> FrozenSet[int]:
        """Union of the non-singleton blocks."""
        return frozenset(element for block in self.nontrivial_blocks() for element in block)

    def same_block(self, a: int, b: int) -> bool:
        return self._labels[a - 1] == self._labels[b - 1]

    def block_of(self, element: int) -> Tuple[int, ...]:
        label = self._labels[element - 1]
        return tuple(i for i, other in enumerate(self._labels, start=1) if other == label)

    def is_bottom(self) -> bool:
        return len(set(self._labels)) == len(self._labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self._labels == other._labels

    def __lt__(self, other: 'SetPartition') -> bool:
        return self._labels < other._labels

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        blocks = ','.join('{' + ','.join(map(str, block)) + '}' for block in self.nontrivial_blocks())
        return f'({blocks})'

    def __repr__(self) -> str:
        return f'SetPartition(n={self.n}, {self})'


def bottom(n: int) -> SetPartition:
    """All singletons (the unit for join)."""
    return SetPartition(range(n))


def top(n: int) -> SetPartition:
    return SetPartition([0] * n)


def _check_same_n(I: SetPartition, J: SetPartition) -> None:
    if I.n != J.n:
        raise ValueError(f"Partitions live on different sets: n={I.n} and n={J.n}")


@lru_cache(maxsize=65536)
def _join_labels(first: Tuple[int, ...], second: Tuple[int, ...]) -> Tuple[int, ...]:
    parent = list(range(len(first)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (first, second):
        representative: Dict[int, int] = {}
        for element, label in enumerate(labels):
            if label in representative:
                root_a, root_b = find(element), find(representative[label])
                if root_a != root_b:
                    parent[max(root_a, root_b)] = min(root_a, root_b)
            else:
                representative[label] = element
    return _canonical_labels([find(x) for x in range(len(first))])


def join(I: SetPartition, J: SetPartition) -> SetPartition:
    """I * J, the finest partition coarser than both."""
    _check_same_n(I, J)
    return SetPartition(_join_labels(I.labels, J.labels))


def join_pair(I: SetPartition, a: int, b: int) -> SetPartition:
    """Merge the blocks containing a and b."""
    n = I.n
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"Pair ({a}, {b}) outside {{1..{n}}}")
    if I.same_block(a, b):
        return I
    keep, drop = I.labels[a - 1], I.labels[b - 1]
    return SetPartition([keep if label == drop else label for label in I.labels])


def join_adjacent(I: SetPartition, j: int) -> SetPartition:
    """I * {j, j+1}."""
    return join_pair(I, j, j + 1)


def act(w: 'Perm', I: SetPartition) -> SetPartition:
    """w(I): blocks mapped elementwise through w."""
    if w.n != I.n:
        raise ValueError(f"Permutation of {w.n} points cannot act on a partition of {I.n}")
    assignment = [0] * I.n
    for element, label in enumerate(I.labels, start=1):
        assignment[w(element) - 1] = label
    return SetPartition(assignment)


def act_transposition(I: SetPartition, i: int) -> SetPartition:
    """s_i(I): swap the roles of i and i+1."""
    labels = list(I.labels)
    labels[i - 1], labels[i] = labels[i], labels[i - 1]
    return SetPartition(labels)


def remove_last(I: SetPartition) -> SetPartition:
    """I minus n, a partition of {1..n-1}."""
    if I.n < 2:
        raise ValueError("Cannot remove the last point of a partition of {1}")
    return SetPartition(I.labels[:-1])


def tau(I: SetPartition, k: int) -> SetPartition:
    """Contraction (I * {k, n}) minus n."""
    if not 1 <= k < I.n:
        raise ValueError(f"tau needs 1 <= k < n, got k={k}, n={I.n}")
    return remove_last(join_pair(I, k, I.n))


def embed_partition(I: SetPartition, m: int) -> SetPartition:
    """View I as a partition of {1..m} by adding singletons."""
    if m < I.n:
        raise ValueError(f"Cannot embed a partition of {I.n} points into {m} points")
    return SetPartition(list(I.labels) + [I.n + offset for offset in range(m - I.n)])


def refines(I: SetPartition, J: SetPartition) -> bool:
    """True iff every block of I lies inside a block of J."""
    _check_same_n(I, J)
    image: Dict[int, int] = {}
    for left, right in zip(I.labels, J.labels):
        if image.setdefault(left, right) != right:
            return False
    return True


def _growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return

    def extend(prefix: List[int], ceiling: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for label in range(ceiling + 2):
            prefix.append(label)
            yield from extend(prefix, max(ceiling, label))
            prefix.pop()

    yield from extend([0], 0)


def enumerate_partitions(n: int) -> List[SetPartition]:
    """Every partition of {1..n}, in restricted-growth order."""
    if not 1 <= n <= ENUMERATE_MAX:
        raise ValueError(f"Partition enumeration supports 1 <= n <= {ENUMERATE_MAX}, got {n}")
    return [SetPartition(labels) for labels in _growth_strings(n)]


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """B(n) from B(m+1) = sum_k C(m, k) B(k)."""
    if n < 0:
        raise ValueError("Bell numbers are defined for n >= 0")
    bells = [1]
    for m in range(n):
        binomial, total = 1, 0
        for k in range(m + 1):
            total += binomial * bells[k]
            binomial = binomial * (m - k) // (k + 1)
        bells.append(total)
    return bells[n]


_BLOCK_RE = re.compile(r'\{([^{}]*)\}')


def parse_partition(text: str, n: int) -> SetPartition:
    """Parse `({1,3},{2,5})`; singletons may be listed or left out."""
    stripped = text.strip()
    if not (stripped.startswith('(') and stripped.endswith(')')):
        raise ValueError(f"Partition literal must be parenthesised: {text!r}")
    inner = stripped[1:-1]
    if _BLOCK_RE.sub('', inner).replace(',', '').strip():
        raise ValueError(f"Unexpected characters in partition literal: {text!r}")
    blocks = []
    for match in _BLOCK_RE.finditer(inner):
        body = match.group(1).strip()
        try:
            blocks.append([int(token) for token in body.split(',')] if body else [])
        except ValueError as e:
            raise ValueError(f"Non-integer element in partition literal {text!r}") from e
    return SetPartition.from_blocks(blocks, n)
