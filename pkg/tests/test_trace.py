import pytest

from bt_invariants.btalgebra import (
    embed,
    gen_E,
    gen_T,
    gen_T_inv,
    iter_basis,
    mul,
    product,
    random_element,
    t_word,
    unit,
)
from bt_invariants.permutations import from_word
from bt_invariants.scalars import A, B, U
from bt_invariants.trace import (
    conjugation_property_check,
    factorization_check,
    factorization_scalar,
    markov_trace,
    rel_trace,
    trace_cache_info,
)

HOPF_TRACE = 1 + (A + B) * (U - 1)


class TestRelativeTrace:
    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_generators(self, n):
        T, E = gen_T(n - 1, n), gen_E(n - 1, n)
        assert rel_trace(T) == unit(n - 1).scale(A)
        assert rel_trace(mul(E, T)) == unit(n - 1).scale(A)
        assert rel_trace(E) == unit(n - 1).scale(B)

    def test_descent_run_case(self):
        assert rel_trace(t_word(from_word([2, 1], 3))) == gen_T(1, 2).scale(A)

    def test_identity_on_lower_level(self):
        for x in iter_basis(3):
            assert rel_trace(embed(x, 4)) == x

    def test_linearity(self, rng):
        for _ in range(5):
            x, y = random_element(rng, 3), random_element(rng, 3)
            assert rel_trace(x + y.scale(U)) == rel_trace(x) + rel_trace(y).scale(U)

    def test_needs_two_strands(self):
        with pytest.raises(ValueError):
            rel_trace(unit(1))

    def test_injected_parameters(self):
        assert rel_trace(gen_E(1, 2), b=U) == unit(1).scale(U)
        assert markov_trace(gen_T(1, 2), a=B) == B


class TestMarkovTrace:
    def test_unit(self):
        for n in range(1, 5):
            assert markov_trace(unit(n)) == 1

    def test_hopf_value(self):
        assert markov_trace(mul(gen_T(1, 2), gen_T(1, 2))) == HOPF_TRACE

    def test_trefoil_value(self):
        T_inv = gen_T_inv(1, 2)
        expected = (B * (1 - U + U ** 2 - U ** 3) + A * (1 - U + U ** 2)) / U ** 3
        assert markov_trace(product((T_inv, T_inv, T_inv), 2)) == expected

    def test_quadratic_at_every_position(self):
        for n in range(2, 5):
            for i in range(1, n):
                assert markov_trace(mul(gen_T(i, n), gen_T(i, n))) == HOPF_TRACE

    def test_conjugation_invariance(self, rng):
        for _ in range(5):
            x = random_element(rng, 3)
            i = rng.randint(1, 2)
            conjugated = product((gen_T(i, 3), x, gen_T_inv(i, 3)), 3)
            assert markov_trace(conjugated) == markov_trace(x)

    def test_cache_info(self):
        markov_trace(gen_T(1, 2))
        info = trace_cache_info()
        assert info['markov'].currsize > 0 and info['relative'].currsize > 0


class TestFactorization:
    def test_scalar(self):
        assert factorization_scalar() == A / U + (1 / U - 1) * B

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_random_elements(self, n, rng):
        for _ in range(3):
            assert factorization_check(random_element(rng, n))

    @pytest.mark.slow
    def test_level_four(self, rng):
        for _ in range(10):
            assert factorization_check(random_element(rng, 4))


class TestConjugationProperty:
    @pytest.mark.parametrize('n', [2, 3])
    def test_all_basis_elements(self, n):
        report = conjugation_property_check(n)
        assert report.passed
        assert set(report.by_check()) == {'inverse_first', 'inverse_last'}

    @pytest.mark.slow
    def test_level_four(self):
        assert conjugation_property_check(4).passed

    def test_guard(self):
        with pytest.raises(ValueError):
            conjugation_property_check(1)
