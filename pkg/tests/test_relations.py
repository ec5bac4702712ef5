import pytest

from bt_invariants.btalgebra import basis_element, word_element
from bt_invariants.colored_rep import ColoredTensorRep
from bt_invariants.partitions import bottom, parse_partition
from bt_invariants.permutations import Perm
from bt_invariants.relations import (
    RELATION_IDS,
    RUN_IDENTITY_IDS,
    check_matsumoto,
    check_relations,
    check_representation,
    check_run_identities,
    check_tie_conjugation,
    check_tie_products,
    check_top_generator,
    failing_relations,
    top_generator_word,
)


class TestRelationSuite:
    @pytest.mark.parametrize('n', [2, 3])
    def test_all_pass(self, n):
        report = check_relations(n)
        assert report.passed, failing_relations(report)
        assert report.name == 'relations' and report.n == n

    def test_checks_recorded_at_level_three(self):
        checks = set(check_relations(3).by_check())
        # far commutation needs two generators at distance > 1
        assert set(RELATION_IDS) - {'far_commutation', 'tie_far_commute'} <= checks
        assert set(RUN_IDENTITY_IDS) <= checks

    def test_broken_rewriting_is_caught(self):
        report = check_relations(2, mutate_rewriting=True)
        assert not report.passed
        assert {'quadratic', 'inverse'} <= set(failing_relations(report))
        # E_i E_i and T_i E_i never meet a descent
        assert report.check_passed('tie_idempotent')
        assert report.check_passed('tie_braid_commute')

    def test_broken_rewriting_reaches_run_identities(self):
        report = check_relations(3, mutate_rewriting=True)
        assert {'quadratic', 'run_commutation'} <= set(failing_relations(report))
        # both sides of the braid relation are reduced products
        assert report.check_passed('braid')

    @pytest.mark.parametrize('n', [1, 7])
    def test_level_guard(self, n):
        with pytest.raises(ValueError):
            check_relations(n)

    def test_run_identities_standalone(self):
        report = check_run_identities(3)
        assert report.passed
        assert report.by_check()['run_commutation'] == (5, 5)

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [4, 5])
    def test_acceptance_levels(self, n):
        report = check_relations(n)
        assert report.passed, failing_relations(report)
        assert set(RELATION_IDS) | set(RUN_IDENTITY_IDS) <= set(report.by_check())


class TestDerivedIdentities:
    def test_tie_conjugation(self):
        report = check_tie_conjugation(3)
        assert report.passed
        assert len(report.results) == 30

    def test_matsumoto(self):
        assert check_matsumoto(3).passed

    def test_tie_products(self):
        report = check_tie_products(3)
        assert report.passed
        assert report.by_check() == {'tie_expansion': (5, 5), 'tie_join': (25, 25)}

    @pytest.mark.slow
    def test_level_four(self):
        assert check_tie_conjugation(4).passed
        assert check_matsumoto(4).passed
        assert check_tie_products(4).passed

    def test_tie_products_with_index_colours(self):
        report = check_tie_products(3, rep=ColoredTensorRep(3, indices=2))
        assert report.passed

    def test_representation(self):
        report = check_representation(3, count=5, seed=11)
        assert report.passed
        assert report.by_check() == {'word_action': (5, 5)}
        assert report.seed == 11


class TestTopGenerator:
    @pytest.mark.parametrize('images, text, expected', [
        ([1, 2, 3], '({1,3})', ([('T', 1)], [('E', 2)], [('T-', 1)])),
        ([1, 3, 2], '', ([], [('T', 2)], [])),
        ([1, 3, 2], '({2,3})', ([], [('T', 2), ('E', 2)], [])),
        ([3, 1, 2], '({1,3})', ([], [('T', 2), ('E', 2)], [('T', 1)])),
        ([1, 2, 3], '({1,2})', ([('E', 1)], [], [])),
    ])
    def test_spellings(self, images, text, expected):
        w = Perm(images)
        I = parse_partition(text, 3) if text else bottom(3)
        assert top_generator_word(w, I) == expected
        prefix, middle, suffix = expected
        assert word_element(prefix + middle + suffix, 3) == basis_element(w, I)

    def test_tie_slides_through_run(self):
        # T_{s3 s2} E_{{2,4}}: the tie with 4 reaches T_3 as the tie {3,4}
        w, I = Perm([1, 4, 2, 3]), parse_partition('({2,4})', 4)
        prefix, middle, suffix = top_generator_word(w, I)
        assert middle == [('T', 3), ('E', 3)]
        assert word_element(prefix + middle + suffix, 4) == basis_element(w, I)

    @pytest.mark.parametrize('n', [2, 3])
    def test_suite(self, n):
        report = check_top_generator(n, count=10, seed=5)
        assert report.passed, failing_relations(report)
        assert report.by_check()['top_generator_count'] == (10, 10)

    def test_every_label_spelled_at_level_three(self):
        assert check_top_generator(3, count=0).by_check() == {'rewrite_matches': (30, 30)}

    def test_level_guard(self):
        with pytest.raises(ValueError):
            check_top_generator(1)

    @pytest.mark.slow
    def test_level_four(self):
        report = check_top_generator(4, count=50)
        assert report.passed, failing_relations(report)
