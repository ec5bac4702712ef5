import json
from fractions import Fraction

from bt_invariants.formatters import (
    format_invariant_json,
    format_rational_pair,
    format_report,
    format_report_json,
)
from bt_invariants.invariants import BraidWord, delta_bar
from bt_invariants.reports import Report

HOPF = BraidWord(2, (1, 1))


def sample_report():
    report = Report('relations', n=3, seed=4)
    report.record('quadratic', (1,), True)
    report.record('quadratic', (2,), False, 'mismatch')
    report.record('braid', (1, 2), True)
    return report


class TestRationalPair:
    def test_even_part_only(self):
        assert format_rational_pair(Fraction(1, 2), Fraction(0), 'L') == '1/2'

    def test_odd_part_only(self):
        assert format_rational_pair(Fraction(0), Fraction(3), 'L') == '(3)*sqrt(L)'

    def test_both_parts(self):
        assert format_rational_pair(Fraction(1), Fraction(-2, 3), 'lambda') == '1 + (-2/3)*sqrt(lambda)'


class TestInvariantJson:
    def test_symbolic(self):
        value = delta_bar(HOPF)
        document = json.loads(format_invariant_json(HOPF, 'n=2; 1 1', 2, value))
        assert document['n'] == 2 and document['exponent'] == 2
        assert document['components'] == 2
        assert document['value'] == {'p': '0', 'q': str(value.q)}
        assert document['vars'] == ['u', 'A', 'B']
        assert document['sqrt_of'] == 'L'
        assert 'point' not in document

    def test_evaluated(self):
        point = {'u': Fraction(2), 'A': Fraction(3), 'B': Fraction(5)}
        value = delta_bar(HOPF)
        text = format_invariant_json(HOPF, 'n=2; 1 1', 2, value, value.evaluate(point), point,
                                     extra={'invariant': 'delta'})
        document = json.loads(text)
        assert document['value'] == {'p': '0', 'q': '3'}
        assert document['point'] == {'u': '2', 'A': '3', 'B': '5'}
        assert document['invariant'] == 'delta'


class TestReports:
    def test_text(self):
        lines = format_report(sample_report()).splitlines()
        assert lines[0] == 'relations n=3 seed=4'
        assert lines[1] == '  quadratic  1/2  FAIL'
        assert lines[2] == '  braid      1/1  PASS'
        assert lines[3] == '  failed: quadratic [2] mismatch'
        assert lines[-1] == 'FAIL'

    def test_passing_report(self):
        report = Report('dim')
        report.record('count', (), True)
        assert format_report(report).splitlines() == ['dim', '  count  1/1  PASS', 'PASS']

    def test_json(self):
        documents = json.loads(format_report_json([sample_report()]))
        assert documents[0]['passed'] is False
        assert documents[0]['checks']['quadratic'] == {'passed': 1, 'total': 2}
        assert documents[0]['failures'] == [
            {'check': 'quadratic', 'indices': [2], 'passed': False, 'detail': 'mismatch'},
        ]
