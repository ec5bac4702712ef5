"""Bundled knot table, CSV ingestion and Homflypt cross-checks."""

from __future__ import annotations

import csv
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..config import DEFAULT_KNOT_TABLE, DEFAULT_SEED
from ..invariants import BraidWord, delta_bar, homflypt_oracle, homflypt_specialize
from ..scalars import PoleAtPoint, SqrtExt
from .parser import WordParseError, parse_braid, render_word

logger = logging.getLogger(__name__)

CSV_HEADER = ('name', 'n', 'word')
EVALUATION_ATTEMPTS = 50


@dataclass(frozen=True)
class KnotTableRow:
    """One named closed braid."""

    name: str
    n: int
    word: str
    aliases: Tuple[str, ...] = field(default_factory=tuple)

    def braid(self) -> BraidWord:
        return parse_braid(self.text())

    def text(self) -> str:
        return f'n={self.n}; {self.word}'.rstrip()


KNOT_ALIASES: Dict[str, Tuple[str, ...]] = {
    'unknot': ('0_1',),
    'hopf_link': ('hopf', 'l2a1'),
    'trefoil': ('3_1', 'right_trefoil'),
    'trefoil_mirror': ('left_trefoil', '3_1_mirror'),
    'solomon_link': ('solomon', 'l4a1', 'torus_2_4'),
    'cinquefoil': ('5_1', 'torus_2_5'),
    'septafoil': ('7_1', 'torus_2_7'),
    'torus_3_2': ('trefoil_3_strands',),
    'torus_3_4': ('8_19',),
    'figure_eight': ('4_1',),
    'three_twist': ('5_2',),
}


def _normalize_name(name: str) -> str:
    return name.strip().lower().replace('-', '_').replace(' ', '_')


def load_knot_table(path: Union[str, Path] = DEFAULT_KNOT_TABLE) -> List[KnotTableRow]:
    """
    Read a `name,n,word` CSV

    Raises:
        WordParseError: If a word does not parse for its strand count
        ValueError: If the header or a strand count is malformed
    """
    rows: List[KnotTableRow] = []
    with open(path, newline='', encoding='utf-8') as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"{path}: expected header {','.join(CSV_HEADER)}, got {reader.fieldnames}")
        for line_number, record in enumerate(reader, start=2):
            try:
                n = int(record['n'])
            except (TypeError, ValueError) as e:
                raise ValueError(f"{path}:{line_number}: invalid strand count {record['n']!r}") from e
            name = record['name'].strip()
            row = KnotTableRow(name, n, (record['word'] or '').strip(),
                               KNOT_ALIASES.get(_normalize_name(name), ()))
            try:
                row.braid()
            except WordParseError as e:
                raise WordParseError(f"{path}:{line_number} ({name}): {e}") from e
            rows.append(row)
    logger.debug("Loaded %d rows from %s", len(rows), path)
    return rows


KNOT_TABLE: Dict[str, KnotTableRow] = {row.name: row for row in load_knot_table()}


def resolve_knot(name: str) -> KnotTableRow:
    """Look up a bundled row by name or alias."""
    key = _normalize_name(name)
    for row in KNOT_TABLE.values():
        if key == _normalize_name(row.name) or key in row.aliases:
            return row
    raise ValueError(f"Unknown knot '{name}'. Known: {', '.join(sorted(KNOT_TABLE))}")


@dataclass(frozen=True)
class HomflyptVerdict:
    """Specialized Delta against the Hecke-algebra oracle for one word."""

    name: str
    word: str
    specialized: str
    oracle: str
    symbolic_match: bool
    points_checked: int
    points_match: bool

    @property
    def passed(self) -> bool:
        return self.symbolic_match and self.points_match

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'word': self.word,
            'passed': self.passed,
            'symbolic_match': self.symbolic_match,
            'points_checked': self.points_checked,
            'points_match': self.points_match,
            'specialized': self.specialized,
            'oracle': self.oracle,
        }


def _random_point(rng: random.Random) -> Dict[str, Fraction]:
    return {
        'u': Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
        'z': Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
    }


def _points_agree(left: SqrtExt, right: SqrtExt, count: int, rng: random.Random) -> Tuple[int, bool]:
    checked = 0
    for _ in range(EVALUATION_ATTEMPTS):
        if checked >= count:
            break
        point = _random_point(rng)
        try:
            left_value, right_value = left.evaluate(point), right.evaluate(point)
        except PoleAtPoint:
            continue
        checked += 1
        if left_value != right_value:
            return checked, False
    return checked, True


def compare_word(word: BraidWord, name: str = '', eval_points: int = 5,
                 seed: int = DEFAULT_SEED) -> HomflyptVerdict:
    specialized = homflypt_specialize(delta_bar(word))
    oracle = homflypt_oracle(word)
    text = render_word(word)
    rng = random.Random(f'{seed}:{text}')
    checked, agree = _points_agree(specialized, oracle, eval_points, rng)
    return HomflyptVerdict(name or text, text, str(specialized), str(oracle),
                           specialized == oracle, checked, agree)


def compare_row(row: KnotTableRow, eval_points: int = 5, seed: int = DEFAULT_SEED) -> HomflyptVerdict:
    return compare_word(row.braid(), row.name, eval_points, seed)


def compare_homflypt(rows: Sequence[KnotTableRow], jobs: int = 1, eval_points: int = 5,
                     seed: int = DEFAULT_SEED) -> List[HomflyptVerdict]:
    """Verdicts in input order; ``jobs`` > 1 spreads rows over worker processes."""
    task = partial(compare_row, eval_points=eval_points, seed=seed)
    if jobs <= 1 or len(rows) <= 1:
        return [task(row) for row in rows]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(task, rows))


def table_rows(path: Optional[Union[str, Path]] = None) -> List[KnotTableRow]:
    return load_knot_table(path) if path else list(KNOT_TABLE.values())
