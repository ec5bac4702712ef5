import logging

from bt_invariants.metrics import ComputationMetrics
from bt_invariants.reports import Report


def test_duration(mocker):
    metrics = ComputationMetrics('invariant')
    metrics.start_time = 100.0
    mocker.patch('bt_invariants.metrics.time.time', return_value=102.5)
    assert metrics.get_duration() == 2.5


def test_tallies():
    metrics = ComputationMetrics('check-relations')
    report = Report('relations', n=2)
    report.record('quadratic', (1,), True)
    report.record('tie', (1,), False)
    metrics.add_report(report)
    metrics.add_checks(3, 1)
    metrics.add_word()
    metrics.add_word(4)
    document = metrics.to_dict()
    assert document['command'] == 'check-relations'
    assert document['checks'] == {'run': 5, 'failed': 2}
    assert document['words_processed'] == 5
    assert set(document['caches']) == {'product', 'relative_trace', 'markov_trace'}
    assert set(document['caches']['product']) == {'hits', 'misses', 'size', 'max_size'}


def test_render():
    metrics = ComputationMetrics()
    text = metrics.render()
    assert 'COMPUTATION METRICS' in text
    assert 'Command: unknown' in text
    assert 'Cache markov_trace' in text


def test_log(caplog):
    with caplog.at_level(logging.INFO, logger='bt_invariants.metrics'):
        ComputationMetrics('dim').log()
    assert "metrics: {'command': 'dim'" in caplog.text
