"""
Result containers for the verification suites
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class CheckResult:
    """One evaluated identity."""

    check: str
    indices: Tuple[int, ...] = ()
    passed: bool = True
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {'check': self.check, 'indices': list(self.indices), 'passed': self.passed}
        if self.detail:
            result['detail'] = self.detail
        return result


@dataclass
class Report:
    """Pass/fail tally of a suite, grouped by check name."""

    name: str
    n: Optional[int] = None
    seed: Optional[int] = None
    results: List[CheckResult] = field(default_factory=list)

    def record(self, check: str, indices: Tuple[int, ...], passed: bool, detail: str = '') -> None:
        self.results.append(CheckResult(check, tuple(indices), bool(passed), detail))

    def extend(self, other: 'Report') -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def by_check(self) -> Dict[str, Tuple[int, int]]:
        """check -> (passed, total), in first-seen order."""
        summary: Dict[str, Tuple[int, int]] = {}
        for result in self.results:
            ok, total = summary.get(result.check, (0, 0))
            summary[result.check] = (ok + int(result.passed), total + 1)
        return summary

    def check_passed(self, check: str) -> bool:
        relevant = [result for result in self.results if result.check == check]
        if not relevant:
            raise KeyError(f"No results recorded for check {check!r}")
        return all(result.passed for result in relevant)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'n': self.n,
            'seed': self.seed,
            'passed': self.passed,
            'checks': {
                check: {'passed': ok, 'total': total}
                for check, (ok, total) in self.by_check().items()
            },
            'failures': [failure.to_dict() for failure in self.failures],
        }
