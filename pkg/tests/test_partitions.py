import pytest

from bt_invariants.partitions import (
    SetPartition,
    act,
    bell_number,
    bottom,
    embed_partition,
    enumerate_partitions,
    join,
    join_adjacent,
    join_pair,
    parse_partition,
    refines,
    remove_last,
    tau,
    top,
)
from bt_invariants.permutations import Perm, compose, embed, inverse, restrict, transposition


def P(text, n):
    return parse_partition(text, n)


class TestSetPartition:
    def test_canonical_labels(self):
        assert SetPartition([5, 5, 2]) == SetPartition([0, 0, 1])
        assert SetPartition([5, 5, 2]).labels == (0, 0, 1)

    def test_blocks_and_support(self):
        I = P('({3,5},{1,2,4})', 6)
        assert I.blocks() == ((1, 2, 4), (3, 5), (6,))
        assert I.nontrivial_blocks() == ((1, 2, 4), (3, 5))
        assert I.supp() == frozenset({1, 2, 3, 4, 5})
        assert I.same_block(1, 4) and not I.same_block(1, 3)
        assert I.block_of(5) == (3, 5)

    def test_rendering(self):
        assert str(P('({3,5},{1,2,4})', 6)) == '({1,2,4},{3,5})'
        assert str(bottom(3)) == '()'
        assert bottom(3).is_bottom() and not top(3).is_bottom()

    def test_from_blocks_validation(self):
        with pytest.raises(ValueError):
            SetPartition.from_blocks([[1, 2], [2, 3]], 3)
        with pytest.raises(ValueError):
            SetPartition.from_blocks([[1, 4]], 3)

    def test_empty_partition_rejected(self):
        with pytest.raises(ValueError):
            SetPartition([])


class TestParse:
    def test_singletons_optional(self):
        assert P('({1,3},{2},{4})', 4) == P('({1,3})', 4)
        assert P('()', 2) == bottom(2)

    @pytest.mark.parametrize('text', ['{1,2}', '({1,a})', '({1,2}x)'])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_partition(text, 3)


class TestJoin:
    def test_bottom_is_unit(self):
        I = P('({1,3})', 4)
        assert join(I, bottom(4)) == I

    def test_transitive_merge(self):
        assert join(P('({1,2})', 4), P('({2,4})', 4)) == P('({1,2,4})', 4)

    def test_join_pair(self):
        assert join_pair(P('({1,2})', 4), 2, 3) == P('({1,2,3})', 4)
        assert join_pair(P('({1,2})', 4), 1, 2) == P('({1,2})', 4)

    def test_mismatched_sizes(self):
        with pytest.raises(ValueError):
            join(bottom(2), bottom(3))

    def test_commutative_and_idempotent(self):
        partitions = enumerate_partitions(4)
        for I in partitions:
            assert join(I, I) == I
            for J in partitions[::3]:
                assert join(I, J) == join(J, I)


class TestAction:
    def test_identity(self):
        I = P('({1,3})', 3)
        assert act(Perm.identity(3), I) == I

    def test_transposition(self):
        assert act(transposition(1, 3), P('({1,3})', 3)) == P('({2,3})', 3)

    def test_group_action(self, rng):
        partitions = enumerate_partitions(4)
        for _ in range(20):
            images = [1, 2, 3, 4]
            rng.shuffle(images)
            w, I = Perm(images), rng.choice(partitions)
            assert act(w, act(inverse(w), I)) == I


class TestRemoveAndContract:
    def test_remove_last(self):
        assert remove_last(P('({1,2,4},{3,5,6})', 6)) == P('({1,2,4},{3,5})', 5)
        assert remove_last(bottom(4)) == bottom(3)
        assert remove_last(P('({1,6})', 6)) == bottom(5)

    def test_remove_last_of_one_point(self):
        with pytest.raises(ValueError):
            remove_last(bottom(1))

    def test_tau(self):
        assert tau(bottom(3), 1) == bottom(2)
        assert tau(P('({2,3})', 3), 1) == P('({1,2})', 2)
        with pytest.raises(ValueError):
            tau(bottom(3), 3)

    def test_embed(self):
        assert embed_partition(P('({1,2})', 2), 4) == P('({1,2})', 4)
        with pytest.raises(ValueError):
            embed_partition(bottom(3), 2)


class TestRefines:
    def test_bottom_refines_everything(self):
        for J in enumerate_partitions(3):
            assert refines(bottom(3), J)

    def test_refines_join(self):
        partitions = enumerate_partitions(3)
        for I in partitions:
            for J in partitions:
                assert refines(I, join(I, J))

    def test_not_refining(self):
        assert not refines(P('({1,2})', 3), P('({1,3})', 3))


class TestEnumeration:
    @pytest.mark.parametrize('n, count', [(1, 1), (3, 5), (5, 52)])
    def test_counts(self, n, count):
        partitions = enumerate_partitions(n)
        assert len(partitions) == count
        assert len(set(partitions)) == count

    def test_bell_numbers(self):
        assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
        for n in range(1, 7):
            assert len(enumerate_partitions(n)) == bell_number(n)

    @pytest.mark.parametrize('n', [0, 11])
    def test_guard(self, n):
        with pytest.raises(ValueError):
            enumerate_partitions(n)


def _random_perm(rng, n):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Perm(images)


def _merge_blocks(blocks, a, b):
    """Naive join of a pair: union the two blocks of a list of sets."""
    first = next(block for block in blocks if a in block)
    second = next(block for block in blocks if b in block)
    if first is second:
        return blocks
    return [block for block in blocks if block is not first and block is not second] + [first | second]


class TestLatticeAndActionLaws:
    I6 = '({1,2,4},{3,5,6})'

    def test_join_pair_inside_a_block(self):
        I = P(self.I6, 6)
        assert join_pair(I, 1, 4) == I

    def test_join_adjacent_to_top(self):
        assert join_adjacent(P(self.I6, 6), 2) == top(6)
        assert str(join_adjacent(P(self.I6, 6), 2)) == '({1,2,3,4,5,6})'

    def test_join_associative(self, rng):
        partitions = enumerate_partitions(4)
        for _ in range(200):
            I, J, K = (rng.choice(partitions) for _ in range(3))
            assert join(join(I, J), K) == join(I, join(J, K))

    def test_action_law(self, rng):
        partitions = enumerate_partitions(4)
        for _ in range(200):
            v, w, I = _random_perm(rng, 4), _random_perm(rng, 4), rng.choice(partitions)
            assert act(compose(v, w), I) == act(v, act(w, I))

    def test_action_commutes_with_remove_last(self, rng):
        partitions = enumerate_partitions(5)
        for _ in range(100):
            w = embed(_random_perm(rng, 4), 5)
            I = rng.choice(partitions)
            assert remove_last(act(w, I)) == act(restrict(w), remove_last(I))


class TestTauExamples:
    @pytest.mark.parametrize('text, k, expected', [
        ('({1,2,4,6},{3,5})', 1, '({1,2,4},{3,5})'),
        ('({1,2,4,6},{3,5})', 3, '({1,2,3,4,5})'),
        ('({3,5,6})', 3, '({3,5})'),
        ('({3,5,6})', 2, '({2,3,5})'),
    ])
    def test_contractions(self, text, k, expected):
        assert tau(P(text, 6), k) == P(expected, 5)

    def test_against_block_merging(self):
        n = 5
        for I in enumerate_partitions(n):
            for k in range(1, n):
                blocks = _merge_blocks([set(block) for block in I.blocks()], k, n)
                expected = SetPartition.from_blocks(
                    [sorted(block - {n}) for block in blocks if block - {n}], n - 1)
                assert tau(I, k) == expected
