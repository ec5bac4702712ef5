"""
Output formatting for invariant values and suite reports
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .config import JSON_INDENT
from .invariants import BraidWord, SingularBraidWord
from .reports import Report
from .scalars import SqrtExt

Word = Union[BraidWord, SingularBraidWord]


def format_rational_pair(p: Fraction, q: Fraction, symbol: str) -> str:
    """Rendering of p + q*sqrt(symbol) for evaluated values."""
    if q == 0:
        return str(p)
    odd = f'({q})*sqrt({symbol})'
    return odd if p == 0 else f'{p} + {odd}'


def format_invariant_json(word: Word, word_text: str, components: int, value: SqrtExt,
                          evaluated: Optional[Tuple[Fraction, Fraction]] = None,
                          point: Optional[Mapping[str, Fraction]] = None,
                          extra: Optional[Dict[str, Any]] = None) -> str:
    """JSON document for one invariant value."""
    if evaluated is None:
        rendered = {'p': str(value.p), 'q': str(value.q)}
    else:
        rendered = {'p': str(evaluated[0]), 'q': str(evaluated[1])}
    document: Dict[str, Any] = {
        'n': word.n,
        'word': word_text,
        'components': components,
        'exponent': word.exponent,
        'value': rendered,
        'vars': list(value.p.variables),
        'sqrt_of': value.symbol,
    }
    if point is not None:
        document['point'] = {name: str(coordinate) for name, coordinate in point.items()}
    if extra:
        document.update(extra)
    return json.dumps(document, indent=JSON_INDENT)


def format_report(report: Report) -> str:
    """Per-check tally lines followed by the verdict."""
    header = report.name + (f' n={report.n}' if report.n is not None else '')
    if report.seed is not None:
        header += f' seed={report.seed}'
    lines = [header]
    tallies = report.by_check()
    width = max((len(check) for check in tallies), default=0)
    for check, (ok, total) in tallies.items():
        status = 'PASS' if ok == total else 'FAIL'
        lines.append(f'  {check.ljust(width)}  {ok}/{total}  {status}')
    for failure in report.failures[:20]:
        detail = f' {failure.detail}' if failure.detail else ''
        lines.append(f'  failed: {failure.check} {list(failure.indices)}{detail}')
    lines.append('PASS' if report.passed else 'FAIL')
    return '\n'.join(lines)


def format_report_json(reports: List[Report]) -> str:
    return json.dumps([report.to_dict() for report in reports], indent=JSON_INDENT)
