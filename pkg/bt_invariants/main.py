"""
bt-invariants command line

Subcommands:
- invariant <word>         Delta of the closure (or Homflypt with --homflypt)
- singular <word>          Gamma of a singular braid word
- trace <word>             rho_n of the image of a braid word
- check-relations --n k    defining relations of E_k
- trace-axioms --n k       relative/Markov trace identities
- markov-test --n k        randomized Markov invariance
- compare-homflypt         specialized Delta against the Hecke-algebra oracle
- dim --n k                dimension of E_k

<word> is inline text (`n=2; 1 1`), a file holding such text, or a bundled knot name.

Environment Variables:
- BT_MAX_LEVEL, BT_HOMFLYPT_MAX_STRANDS, BT_SEED, BT_PRODUCT_CACHE_SIZE, BT_TRACE_CACHE_SIZE
"""

import argparse
import json
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .btalgebra import dimension
from .braidio import (
    WordParseError,
    closure_components,
    compare_homflypt,
    markov_invariance_suite,
    parse_braid,
    parse_singular,
    render_word,
    resolve_knot,
    table_rows,
)
from .config import (
    DEFAULT_MARKOV_COUNT,
    DEFAULT_SEED,
    DEFAULT_TRACE_SAMPLES,
    ENUMERATE_MAX,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    MAX_RANDOM_WORD_LENGTH,
)
from .formatters import format_invariant_json, format_rational_pair, format_report, format_report_json
from .invariants import (
    check_singular_relations,
    delta_bar,
    delta_two_parameter,
    gamma_bar,
    homflypt_oracle,
    homflypt_specialize,
    pi_bar,
)
from .metrics import ComputationMetrics
from .partitions import bell_number, enumerate_partitions
from .relations import (
    check_relations,
    check_representation,
    check_tie_products,
    check_top_generator,
)
from .reports import Report
from .scalars import PoleAtPoint
from .trace import markov_trace
from .trace_axioms import trace_axiom_suite

logger = logging.getLogger(__name__)


def read_word_text(source: str) -> str:
    """Inline word text, the first non-empty line of a file, or a bundled knot."""
    if '=' in source:
        return source
    path = Path(source)
    if path.is_file():
        for line in path.read_text(encoding='utf-8').splitlines():
            if line.strip() and not line.lstrip().startswith('#'):
                return line.strip()
        raise ValueError(f"{source}: no braid word found")
    return resolve_knot(source).text()


def parse_point(text: str, names: Optional[Sequence[str]] = None) -> Dict[str, Fraction]:
    """`u=2,A=1/3,B=-1` -> exact coordinates; ``names`` restricts the accepted variables."""
    point: Dict[str, Fraction] = {}
    for item in text.split(','):
        name, sep, value = item.partition('=')
        name = name.strip()
        if not sep or not name:
            raise ValueError(f"Malformed evaluation coordinate {item!r}; expected name=rational")
        if names is not None and name not in names:
            raise ValueError(f"Unknown coordinate {name!r}; expected one of {', '.join(names)}")
        try:
            point[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Coordinate {name} is not a rational: {value!r}") from e
    return point


def _emit_value(args, word, text: str, value, metrics: ComputationMetrics) -> int:
    metrics.add_word()
    components = closure_components(word)
    evaluated = point = None
    if args.eval:
        point = parse_point(args.eval, value.p.variables)
        evaluated = value.evaluate(point)
    if args.json:
        print(format_invariant_json(word, text, components, value, evaluated, point))
    elif evaluated is not None:
        print(format_rational_pair(evaluated[0], evaluated[1], value.symbol))
    else:
        print(value)
    return EXIT_OK


def cmd_invariant(args, metrics: ComputationMetrics) -> int:
    word = parse_braid(read_word_text(args.word))
    chosen = [flag for flag, on in (('--homflypt', args.homflypt), ('--oracle', args.oracle),
                                    ('--two-parameter', args.two_parameter is not None)) if on]
    if len(chosen) > 1:
        raise ValueError(f"{' and '.join(chosen)} are mutually exclusive")
    if args.oracle:
        value = homflypt_oracle(word)
    elif args.homflypt:
        value = homflypt_specialize(delta_bar(word))
    elif args.two_parameter is not None:
        value = delta_two_parameter(word, args.two_parameter)
    else:
        value = delta_bar(word)
    return _emit_value(args, word, render_word(word), value, metrics)


def cmd_singular(args, metrics: ComputationMetrics) -> int:
    word = parse_singular(read_word_text(args.word))
    return _emit_value(args, word, render_word(word), gamma_bar(word), metrics)


def cmd_trace(args, metrics: ComputationMetrics) -> int:
    word = parse_braid(read_word_text(args.word))
    metrics.add_word()
    value = markov_trace(pi_bar(word))
    if args.eval:
        print(value.evaluate(parse_point(args.eval, value.variables)))
    else:
        print(value)
    return EXIT_OK


def _finish_reports(args, reports: List[Report], metrics: ComputationMetrics) -> int:
    for report in reports:
        metrics.add_report(report)
    if args.json:
        print(format_report_json(reports))
    else:
        print('\n'.join(format_report(report) for report in reports))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VERIFICATION_FAILED


def cmd_check_relations(args, metrics: ComputationMetrics) -> int:
    reports = [check_relations(args.n)]
    if args.singular:
        reports.append(check_singular_relations(args.n))
    if args.derived:
        reports.extend([check_tie_products(args.n), check_top_generator(args.n),
                        check_representation(args.n)])
    return _finish_reports(args, reports, metrics)


def cmd_trace_axioms(args, metrics: ComputationMetrics) -> int:
    report = trace_axiom_suite(args.n, count=args.count, seed=args.seed)
    return _finish_reports(args, [report], metrics)


def cmd_markov_test(args, metrics: ComputationMetrics) -> int:
    report = markov_invariance_suite(args.n, count=args.count, seed=args.seed,
                                     singular=args.singular, max_length=args.max_length)
    metrics.add_word(args.count)
    return _finish_reports(args, [report], metrics)


def cmd_compare_homflypt(args, metrics: ComputationMetrics) -> int:
    rows = table_rows(args.table)
    verdicts = compare_homflypt(rows, jobs=args.jobs, eval_points=args.eval_points, seed=args.seed)
    metrics.add_word(len(verdicts))
    metrics.add_checks(len(verdicts), sum(1 for verdict in verdicts if not verdict.passed))
    if args.json:
        print(json.dumps([verdict.to_dict() for verdict in verdicts], indent=2))
    else:
        width = max((len(verdict.name) for verdict in verdicts), default=0)
        for verdict in verdicts:
            status = 'EQUAL' if verdict.passed else 'DIFFERENT'
            print(f'{verdict.name.ljust(width)}  {status}  ({verdict.points_checked} points)  {verdict.word}')
    return EXIT_OK if all(verdict.passed for verdict in verdicts) else EXIT_VERIFICATION_FAILED


def cmd_dim(args, metrics: ComputationMetrics) -> int:
    if not 1 <= args.n <= ENUMERATE_MAX:
        raise ValueError(f"dim supports 1 <= n <= {ENUMERATE_MAX}")
    expected = dimension(args.n)
    enumerated = len(enumerate_partitions(args.n)) * math.factorial(args.n)
    print(f'dim E_{args.n} = {expected} (Bell {bell_number(args.n)} x {math.factorial(args.n)}); '
          f'enumeration {enumerated}')
    metrics.add_checks(1, int(expected != enumerated))
    return EXIT_OK if expected == enumerated else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bt-invariants',
        description='Exact invariants of links from the algebra of braids and ties')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
    parser.add_argument('--metrics', action='store_true', help='Print run metrics on stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    def word_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument('word', help="Word text 'n=<k>; tokens', a file, or a knot name")
        command.add_argument('--json', action='store_true', help='JSON output')
        command.add_argument('--eval', metavar='POINT', help='Evaluate at u=<q>,A=<q>,B=<q> (u,z for Homflypt)')
        command.set_defaults(handler=handler)
        return command

    invariant = word_command('invariant', cmd_invariant, 'Delta of a closed braid')
    invariant.add_argument('--homflypt', action='store_true', help='Specialize B=1, A->z')
    invariant.add_argument('--oracle', action='store_true', help='Homflypt from the Hecke algebra oracle')
    invariant.add_argument('--two-parameter', type=int, metavar='M', help='Substitute B -> 1/M')
    word_command('singular', cmd_singular, 'Gamma of a closed singular braid')
    trace = sub.add_parser('trace', help='rho_n of the image of a braid word')
    trace.add_argument('word')
    trace.add_argument('--eval', metavar='POINT')
    trace.set_defaults(handler=cmd_trace)

    def suite_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument('--n', type=int, required=True)
        command.add_argument('--json', action='store_true')
        command.set_defaults(handler=handler)
        return command

    relations = suite_command('check-relations', cmd_check_relations, 'Verify the defining relations of E_n')
    relations.add_argument('--singular', action='store_true', help='Also check the singular braid relations')
    relations.add_argument('--derived', action='store_true',
                           help='Also run the tie-product, top-generator and representation checks')
    axioms = suite_command('trace-axioms', cmd_trace_axioms, 'Verify the trace identities at level n')
    axioms.add_argument('--count', type=int, default=DEFAULT_TRACE_SAMPLES)
    axioms.add_argument('--seed', type=int, default=DEFAULT_SEED)
    markov = suite_command('markov-test', cmd_markov_test, 'Randomized Markov invariance')
    markov.add_argument('--count', type=int, default=DEFAULT_MARKOV_COUNT)
    markov.add_argument('--seed', type=int, default=DEFAULT_SEED)
    markov.add_argument('--max-length', type=int, default=MAX_RANDOM_WORD_LENGTH)
    markov.add_argument('--singular', action='store_true', help='Singular words and Gamma')

    compare = sub.add_parser('compare-homflypt', help='Specialized Delta against the Homflypt oracle')
    compare.add_argument('--table', help='CSV with header name,n,word (default: bundled table)')
    compare.add_argument('--jobs', type=int, default=1)
    compare.add_argument('--eval-points', type=int, default=5)
    compare.add_argument('--seed', type=int, default=DEFAULT_SEED)
    compare.add_argument('--json', action='store_true')
    compare.set_defaults(handler=cmd_compare_homflypt)

    dim = sub.add_parser('dim', help='Dimension Bell(n) * n! of E_n')
    dim.add_argument('--n', type=int, required=True)
    dim.set_defaults(handler=cmd_dim)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    metrics = ComputationMetrics(args.command)
    try:
        code = args.handler(args, metrics)
    except (WordParseError, ValueError, OSError, PoleAtPoint) as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_INPUT_ERROR
    if args.metrics:
        print(metrics.render(), file=sys.stderr)
    metrics.log()
    return code


if __name__ == "__main__":
    sys.exit(main())
