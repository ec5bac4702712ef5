from fractions import Fraction

import pytest

from bt_invariants.braidio import compare_word, markov_stabilize, random_braid
from bt_invariants.btalgebra import gen_E, gen_T, mul
from bt_invariants.invariants import (
    INVARIANT_REGISTRY,
    BraidWord,
    DeltaInvariant,
    GammaInvariant,
    GuardExceededError,
    HomflyptInvariant,
    MalformedWordError,
    SingularBraidWord,
    SpecializationError,
    check_singular_relations,
    create_invariant,
    delta_bar,
    delta_bar_sqrtL_rep,
    delta_two_parameter,
    gamma_bar,
    homflypt_oracle,
    homflypt_specialize,
    list_invariants,
    normalization_factor,
    pi_bar,
    sb_rep,
)
from bt_invariants.scalars import (
    A,
    B,
    HOMFLYPT_FIELD,
    U,
    D_const,
    L_const,
    RatFunc,
    SqrtExt,
    lambda_const,
)

UNKNOT = BraidWord(1)
HOPF = BraidWord(2, (1, 1))
TREFOIL_NEGATIVE = BraidWord(2, (-1, -1, -1))
HOPF_Q = (1 + (A + B) * (U - 1)) / A
z = RatFunc.variable('z', HOMFLYPT_FIELD)
hu = RatFunc.variable('u', HOMFLYPT_FIELD)


class TestWords:
    def test_exponent_and_inverse(self):
        word = BraidWord(3, (1, -2, 1))
        assert word.exponent == 1
        assert word.inverse() == BraidWord(3, (-1, 2, -1))
        assert len(word + word.inverse()) == 6

    @pytest.mark.parametrize('n, letters', [(2, (2,)), (2, (0,)), (0, ())])
    def test_malformed(self, n, letters):
        with pytest.raises(MalformedWordError):
            BraidWord(n, letters)

    def test_singular_letters(self):
        word = SingularBraidWord.from_tokens(3, ['t1', 2, -1])
        assert word.tau_count == 1 and word.exponent == 1
        assert not word.is_classical()
        with pytest.raises(MalformedWordError):
            word.to_braid()
        with pytest.raises(MalformedWordError):
            SingularBraidWord(2, (('t', 1, -1),))

    def test_classical_round_trip(self):
        assert HOPF.to_singular().to_braid() == HOPF


class TestDelta:
    def test_trivial_words(self):
        assert delta_bar(UNKNOT) == SqrtExt.scalar(1)
        assert delta_bar(BraidWord(2, (1,))) == SqrtExt.scalar(1)
        assert delta_bar(BraidWord(2, (-1,))) == SqrtExt.scalar(1)

    def test_hopf_link(self):
        value = delta_bar(HOPF)
        assert value.p.is_zero()
        assert value.q == HOPF_Q

    def test_trefoil(self):
        value = delta_bar(TREFOIL_NEGATIVE)
        numerator = -U ** 3 * B + U ** 2 * B - U * B + B + U ** 2 * A - U * A + A
        assert value.q.is_zero()
        assert value.p == A * numerator / (U * (A + B - U * B) ** 2)

    def test_two_unlinked_strands(self):
        assert delta_bar(BraidWord(2)) == D_const()

    def test_normalization_factor(self):
        assert normalization_factor(1) == SqrtExt.scalar(1)
        assert normalization_factor(3) == D_const() * D_const()

    def test_rescaled_path_agrees(self, rng):
        for word in (UNKNOT, HOPF, TREFOIL_NEGATIVE, BraidWord(3, (1, -2, 1, 2))):
            assert delta_bar_sqrtL_rep(word) == delta_bar(word)
        for _ in range(8):
            word = random_braid(rng, rng.randint(1, 3), 5)
            assert delta_bar_sqrtL_rep(word) == delta_bar(word)

    def test_stabilization(self):
        for word in (HOPF, TREFOIL_NEGATIVE):
            for sign in (1, -1):
                assert delta_bar(markov_stabilize(word, sign)) == delta_bar(word)

    def test_conjugation(self):
        word = BraidWord(3, (1, 1, 2))
        conjugated = BraidWord(3, (2, 1, 1, 2, -2))
        assert delta_bar(conjugated) == delta_bar(word)

    def test_componentwise_evaluation(self):
        point = {'u': 2, 'A': 3, 'B': 5}
        assert delta_bar(HOPF).evaluate(point) == (Fraction(0), Fraction(3))
        assert delta_bar(HOPF).evaluate(point)[1] == HOPF_Q.evaluate(point)


class TestTwoParameter:
    def test_hopf(self):
        value = delta_two_parameter(HOPF, 2)
        assert value.p.is_zero()
        assert value.q == (1 + (A + Fraction(1, 2)) * (U - 1)) / A
        assert value.radicand == L_const().substitute({'B': Fraction(1, 2)})

    def test_invariant_under_stabilization(self):
        for m in (1, 2, 3):
            assert delta_two_parameter(markov_stabilize(HOPF, -1), m) == delta_two_parameter(HOPF, m)

    @pytest.mark.parametrize('m', [0, -1])
    def test_rejects_non_positive(self, m):
        with pytest.raises(SpecializationError):
            delta_two_parameter(HOPF, m)


class TestGamma:
    def test_single_singular_crossing(self):
        value = gamma_bar(SingularBraidWord.from_tokens(2, ['t1']))
        assert value.p == (A + B) / A
        assert value.q.is_zero()

    def test_singular_then_classical(self):
        value = gamma_bar(SingularBraidWord.from_tokens(2, ['t1', 1]))
        assert value.p.is_zero()
        assert value.q == U * (A + B) / A

    def test_classical_words_agree_with_delta(self):
        for word in (HOPF, TREFOIL_NEGATIVE, BraidWord(3, (1, -2))):
            assert gamma_bar(word.to_singular()) == delta_bar(word)

    def test_tau_image(self):
        tie = gen_E(1, 2)
        assert sb_rep(SingularBraidWord.from_tokens(2, ['t1'])) == tie + mul(tie, gen_T(1, 2))

    def test_monoid_relations_on_images(self):
        left = sb_rep(SingularBraidWord.from_tokens(2, [1, 't1']))
        right = sb_rep(SingularBraidWord.from_tokens(2, ['t1', 1]))
        assert left == right
        left = sb_rep(SingularBraidWord.from_tokens(3, [1, 2, 't1']))
        right = sb_rep(SingularBraidWord.from_tokens(3, ['t2', 1, 2]))
        assert left == right

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_singular_relation_suite(self, n):
        report = check_singular_relations(n)
        assert report.passed
        assert 'sigma_tau_commute' in report.by_check()

    @pytest.mark.slow
    def test_singular_relation_suite_level_five(self):
        assert check_singular_relations(5).passed


class TestHomflypt:
    def test_specialize_radicand(self):
        value = homflypt_specialize(SqrtExt.scalar(L_const()))
        assert value.p == lambda_const()
        assert value.radicand == lambda_const()
        assert value.symbol == 'lambda'

    def test_specialize_constant(self):
        assert homflypt_specialize(SqrtExt.scalar(1)).p == 1

    def test_specialize_hopf(self):
        value = homflypt_specialize(delta_bar(HOPF))
        assert value.q == (1 + (z + 1) * (hu - 1)) / z

    def test_oracle_unknot(self):
        value = homflypt_oracle(BraidWord(2, (1,)))
        assert value.p == 1 and value.q.is_zero()

    def test_oracle_three_crossings(self):
        # h^3 = u(u-1) + (u^2 - u + 1) h
        trace = hu * (hu - 1) + (hu ** 2 - hu + 1) * z
        value = homflypt_oracle(BraidWord(2, (1, 1, 1)))
        assert value.q.is_zero()
        assert value.p == lambda_const() * trace / z

    @pytest.mark.parametrize('letters, n', [
        ((1, 1), 2),
        ((-1, -1, -1), 2),
        ((1, 1, 1), 2),
        ((1, -2, 1, -2), 3),
        ((1, 2, 1, 2), 3),
    ])
    def test_specialization_matches_oracle(self, letters, n):
        word = BraidWord(n, letters)
        assert homflypt_specialize(delta_bar(word)) == homflypt_oracle(word)

    def test_oracle_guard(self):
        with pytest.raises(GuardExceededError):
            homflypt_oracle(BraidWord(8))

    @pytest.mark.slow
    def test_random_words_match_oracle(self, rng):
        for _ in range(50):
            word = random_braid(rng, rng.randint(1, 4), 8)
            verdict = compare_word(word, eval_points=5)
            assert verdict.passed and verdict.points_checked == 5, verdict.word


class TestFactory:
    def test_create_by_name_and_alias(self):
        assert isinstance(create_invariant('delta'), DeltaInvariant)
        assert isinstance(create_invariant('homfly'), HomflyptInvariant)
        assert isinstance(create_invariant('singular'), GammaInvariant)

    def test_unknown(self):
        with pytest.raises(ValueError):
            create_invariant('jones')

    def test_adapters_evaluate(self):
        assert create_invariant('delta').evaluate(HOPF) == delta_bar(HOPF)
        assert create_invariant('delta-sqrtL').evaluate(HOPF) == delta_bar(HOPF)
        assert create_invariant('homflypt').evaluate(HOPF) == homflypt_oracle(HOPF)
        assert create_invariant('gamma').evaluate(HOPF) == delta_bar(HOPF)

    def test_singular_words_need_gamma(self):
        word = SingularBraidWord.from_tokens(2, ['t1'])
        with pytest.raises(MalformedWordError):
            create_invariant('delta').evaluate(word)
        assert create_invariant('delta').evaluate(HOPF.to_singular()) == delta_bar(HOPF)

    def test_listing(self):
        names = [entry['name'] for entry in list_invariants()]
        assert names == list(INVARIANT_REGISTRY)
        assert set(names) == {'delta', 'delta-sqrtL', 'gamma', 'homflypt'}

    def test_pi_bar_is_product_of_generators(self):
        assert pi_bar(HOPF) == mul(gen_T(1, 2), gen_T(1, 2))
