import pytest

from bt_invariants.braidio import (
    KNOT_TABLE,
    WordParseError,
    compare_homflypt,
    compare_row,
    compare_word,
    load_knot_table,
    resolve_knot,
    table_rows,
)
from bt_invariants.invariants import BraidWord


def write_table(tmp_path, body, header='name,n,word'):
    path = tmp_path / 'table.csv'
    path.write_text(f'{header}\n{body}', encoding='utf-8')
    return path


class TestBundledTable:
    def test_rows(self):
        assert len(KNOT_TABLE) == 14
        assert KNOT_TABLE['unknot'].text() == 'n=1;'
        assert KNOT_TABLE['hopf_link'].braid() == BraidWord(2, (1, 1))
        assert KNOT_TABLE['figure_eight'].braid() == BraidWord(3, (1, -2, 1, -2))

    @pytest.mark.parametrize('name, expected', [
        ('trefoil', 'trefoil'),
        ('3_1', 'trefoil'),
        ('Hopf', 'hopf_link'),
        ('hopf-link', 'hopf_link'),
        ('figure eight', 'figure_eight'),
        ('4_1', 'figure_eight'),
    ])
    def test_resolve(self, name, expected):
        assert resolve_knot(name).name == expected

    def test_resolve_unknown(self):
        with pytest.raises(ValueError, match='Unknown knot'):
            resolve_knot('granny')

    def test_table_rows_default(self):
        assert [row.name for row in table_rows()] == list(KNOT_TABLE)


class TestLoading:
    def test_custom_table(self, tmp_path):
        rows = load_knot_table(write_table(tmp_path, 'hopf,2,1 1\nloop,1,\n'))
        assert [row.name for row in rows] == ['hopf', 'loop']
        assert rows[0].aliases == ()
        assert rows[1].braid() == BraidWord(1)
        assert table_rows(tmp_path / 'table.csv') == rows

    def test_bad_header(self, tmp_path):
        with pytest.raises(ValueError, match='expected header'):
            load_knot_table(write_table(tmp_path, 'hopf,2,1 1\n', header='name,strands,word'))

    def test_bad_strand_count(self, tmp_path):
        with pytest.raises(ValueError, match='invalid strand count'):
            load_knot_table(write_table(tmp_path, 'hopf,two,1 1\n'))

    def test_bad_word(self, tmp_path):
        with pytest.raises(WordParseError) as excinfo:
            load_knot_table(write_table(tmp_path, 'hopf,2,1 1\nbroken,2,1 3\n'))
        assert 'table.csv:3' in str(excinfo.value)
        assert 'broken' in str(excinfo.value)


class TestComparison:
    def test_hopf_row(self):
        verdict = compare_row(KNOT_TABLE['hopf_link'], eval_points=3)
        assert verdict.passed
        assert verdict.symbolic_match and verdict.points_match
        assert verdict.points_checked == 3
        assert verdict.specialized == verdict.oracle

    def test_unnamed_word(self):
        verdict = compare_word(BraidWord(2, (-1, -1, -1)), eval_points=2)
        assert verdict.passed
        assert verdict.name == verdict.word == 'n=2; -1 -1 -1'

    def test_verdict_dict(self):
        document = compare_row(KNOT_TABLE['unknot'], eval_points=1).to_dict()
        assert set(document) == {
            'name', 'word', 'passed', 'symbolic_match', 'points_checked', 'points_match',
            'specialized', 'oracle',
        }
        assert document['passed'] is True

    def test_order_is_preserved(self):
        rows = [KNOT_TABLE['trefoil'], KNOT_TABLE['unknot'], KNOT_TABLE['hopf_link']]
        verdicts = compare_homflypt(rows, eval_points=1)
        assert [verdict.name for verdict in verdicts] == ['trefoil', 'unknot', 'hopf_link']

    def test_seeded_points(self):
        first = compare_row(KNOT_TABLE['trefoil'], eval_points=2, seed=3)
        assert compare_row(KNOT_TABLE['trefoil'], eval_points=2, seed=3) == first

    @pytest.mark.slow
    def test_full_table(self):
        verdicts = compare_homflypt(table_rows())
        assert all(verdict.passed for verdict in verdicts), [v.name for v in verdicts if not v.passed]

    @pytest.mark.slow
    def test_worker_processes(self):
        rows = table_rows()[:6]
        parallel = compare_homflypt(rows, jobs=2, eval_points=2)
        assert parallel == compare_homflypt(rows, jobs=1, eval_points=2)
