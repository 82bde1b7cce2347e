import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teqtools.core import (
    FormatError,
    Tournament,
    altset,
    derive_seed,
    dominators,
    find_isomorphism,
    flip_edge,
    full_set,
    is_isomorphism,
    members,
    new_tournament,
    parse,
    random_tournament,
    restrict,
    serialize,
)

from conftest import all_tournaments, cycle_tournament, transitive_tournament

seeds = st.integers(min_value=0, max_value=2**64 - 1)


def random_t(order, seed):
    return random_tournament(order, seed)


class TestNewTournament:
    def test_single_alternative(self):
        t = new_tournament(1, [[0]])
        assert t.order == 1
        assert t.beats == (0,)

    def test_three_cycle(self):
        t = new_tournament(3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert t.dominates(0, 1) and t.dominates(1, 2) and t.dominates(2, 0)

    def test_asymmetry_rejected(self):
        with pytest.raises(ValueError, match=r"asymmetry violated at \(0,1\)"):
            new_tournament(2, [[0, 1], [1, 0]])

    def test_completeness_rejected(self):
        with pytest.raises(ValueError, match=r"completeness violated at \(0,1\)"):
            new_tournament(2, [[0, 0], [0, 0]])

    def test_reflexive_rejected(self):
        with pytest.raises(ValueError, match="reflexive"):
            new_tournament(2, [[1, 1], [0, 0]])

    @pytest.mark.parametrize("order", [0, -1, 65])
    def test_order_bounds(self, order):
        with pytest.raises(ValueError, match="order"):
            new_tournament(order, [])

    def test_immutable(self):
        t = transitive_tournament(3)
        with pytest.raises(AttributeError):
            t.order = 5


class TestDominators:
    def test_counterexample_within_x(self, big_t, instance):
        # x4, x5, x6, x8, x9, x12 dominate x1 inside X
        assert dominators(big_t, instance.x_set, 0) == altset([3, 4, 5, 7, 8, 11])

    def test_counterexample_within_y(self, big_t, instance):
        # only the top Y block dominates x1
        assert dominators(big_t, instance.y_set, 0) == altset(range(12, 18))

    def test_condorcet_winner_has_none(self):
        t = transitive_tournament(5)
        assert dominators(t, full_set(5), 0) == 0

    def test_never_contains_x(self):
        t = cycle_tournament(5)
        for x in range(5):
            assert not (dominators(t, full_set(5), x) >> x) & 1

    def test_out_of_range(self):
        t = transitive_tournament(3)
        with pytest.raises(IndexError):
            dominators(t, full_set(3), 3)

    @given(seed=seeds, order=st.integers(2, 16))
    def test_definition_and_total_count(self, seed, order):
        t = random_t(order, seed)
        univ = full_set(order)
        total = 0
        for x in range(order):
            d = dominators(t, univ, x)
            assert d & ~(univ ^ (1 << x)) == 0
            for y in range(order):
                assert bool((d >> y) & 1) == (y != x and t.dominates(y, x))
            total += d.bit_count()
        assert total == order * (order - 1) // 2


class TestRestrict:
    def test_full_set_is_identity(self):
        t = cycle_tournament(7)
        sub, mapping = restrict(t, full_set(7))
        assert sub == t
        assert mapping == tuple(range(7))

    def test_three_cycle_pair(self):
        t = new_tournament(3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        sub, mapping = restrict(t, altset([0, 1]))
        assert sub.order == 2
        assert sub.dominates(0, 1)
        assert mapping == (0, 1)

    def test_empty_subset(self):
        with pytest.raises(ValueError, match="empty"):
            restrict(transitive_tournament(3), 0)

    def test_counterexample_x_half_dominator_row(self, big_t, instance):
        # inside T|X the dominators of x5 are x2, x3, x4, x8, x10, x11
        sub, mapping = restrict(big_t, instance.x_set)
        assert mapping == tuple(range(12))
        assert dominators(sub, full_set(12), 4) == altset([1, 2, 3, 7, 9, 10])

    @given(seed=seeds, order=st.integers(2, 12), subset_bits=st.integers(min_value=1))
    def test_preserves_dominance(self, seed, order, subset_bits):
        t = random_t(order, seed)
        subset = subset_bits % (1 << order)
        if subset == 0:
            subset = 1
        sub, mapping = restrict(t, subset)
        for i in range(sub.order):
            for j in range(sub.order):
                if i != j:
                    assert sub.dominates(i, j) == t.dominates(mapping[i], mapping[j])


def brute_force_isomorphism(a, b):
    """Oracle: scan all permutations."""
    if a.order != b.order:
        return None
    for perm in itertools.permutations(range(a.order)):
        if is_isomorphism(a, b, perm):
            return perm
    return None


class TestFindIsomorphism:
    def test_self_identity_works(self):
        t = cycle_tournament(5)
        witness = find_isomorphism(t, t)
        assert witness is not None
        assert is_isomorphism(t, t, witness)

    def test_score_sequence_reject(self):
        assert find_isomorphism(cycle_tournament(3), transitive_tournament(3)) is None

    def test_order_mismatch(self):
        assert find_isomorphism(transitive_tournament(3), transitive_tournament(4)) is None

    def test_relabeled_tournament_found(self):
        t = random_t(8, 99)
        perm = [3, 7, 0, 5, 1, 6, 2, 4]
        beats = [0] * 8
        for i in range(8):
            for j in range(8):
                if i != j and t.dominates(i, j):
                    beats[perm[i]] |= 1 << perm[j]
        relabeled = Tournament(beats)
        witness = find_isomorphism(t, relabeled)
        assert witness is not None
        assert is_isomorphism(t, relabeled, witness)

    @given(seed_a=seeds, seed_b=seeds, order=st.integers(1, 6))
    @settings(max_examples=60)
    def test_agrees_with_permutation_scan(self, seed_a, seed_b, order):
        a = random_t(order, seed_a)
        b = random_t(order, seed_b)
        got = find_isomorphism(a, b)
        expected = brute_force_isomorphism(a, b)
        assert (got is None) == (expected is None)
        if got is not None:
            assert is_isomorphism(a, b, got)

    def test_order_seven_sample_against_scan(self):
        for seed_a, seed_b in [(1, 2), (3, 3), (8, 15)]:
            a = random_t(7, seed_a)
            b = random_t(7, seed_b)
            got = find_isomorphism(a, b)
            expected = brute_force_isomorphism(a, b)
            assert (got is None) == (expected is None)
            if got is not None:
                assert is_isomorphism(a, b, got)

    def test_is_isomorphism_rejects_non_bijection(self):
        t = transitive_tournament(3)
        assert not is_isomorphism(t, t, (0, 0, 2))


class TestRandomTournament:
    def test_deterministic(self):
        assert random_tournament(5, 42) == random_tournament(5, 42)

    def test_order_one(self):
        assert random_tournament(1, 7).beats == (0,)

    def test_validates(self):
        # constructor postcondition: any violation would have raised
        random_tournament(10, 7)

    def test_seed_changes_result(self):
        assert random_tournament(10, 1) != random_tournament(10, 2)

    @pytest.mark.parametrize("order", [0, 65])
    def test_order_bounds(self, order):
        with pytest.raises(ValueError):
            random_tournament(order, 0)

    def test_derive_seed_spread(self):
        values = {derive_seed(123, k) for k in range(1000)}
        assert len(values) == 1000


class TestParseSerialize:
    def test_parse_transitive(self):
        t = parse("3\n011\n001\n000\n")
        assert t.dominates(0, 1) and t.dominates(0, 2) and t.dominates(1, 2)

    def test_parse_without_trailing_newline(self):
        assert parse("2\n01\n00") == parse("2\n01\n00\n")

    def test_completeness_error_names_pair_and_line(self):
        with pytest.raises(FormatError, match=r"line 3: completeness violated at \(0,1\)"):
            parse("2\n00\n00\n")

    def test_asymmetry_error(self):
        with pytest.raises(FormatError, match=r"asymmetry violated at \(0,1\)"):
            parse("2\n01\n10\n")

    def test_bad_header(self):
        with pytest.raises(FormatError, match="line 1"):
            parse("abc\n01\n00\n")

    def test_non_square(self):
        with pytest.raises(FormatError, match="line 2"):
            parse("3\n0111\n001\n000\n")

    def test_missing_rows(self):
        with pytest.raises(FormatError, match="expected 3 matrix rows"):
            parse("3\n011\n001\n")

    def test_bad_character(self):
        with pytest.raises(FormatError, match=r"line 2: invalid character 'x'"):
            parse("2\n0x\n00\n")

    def test_diagonal(self):
        with pytest.raises(FormatError, match="line 2: diagonal"):
            parse("2\n11\n00\n")

    def test_trailing_garbage(self):
        with pytest.raises(FormatError, match="line 4: unexpected trailing"):
            parse("2\n01\n00\njunk\n")

    def test_counterexample_round_trip(self, big_t):
        assert parse(serialize(big_t)) == big_t

    @given(seed=seeds, order=st.integers(1, 20))
    def test_round_trip(self, seed, order):
        t = random_t(order, seed)
        assert parse(serialize(t)) == t


class TestFlipEdge:
    def test_reverses_orientation(self):
        t = transitive_tournament(4)
        flipped = flip_edge(t, 0, 3)
        assert flipped.dominates(3, 0) and not flipped.dominates(0, 3)
        assert flip_edge(flipped, 3, 0) == t

    def test_rejects_reflexive(self):
        with pytest.raises(ValueError):
            flip_edge(transitive_tournament(3), 1, 1)


class TestAltSetHelpers:
    def test_round_trip(self):
        assert members(altset([5, 1, 9])) == [1, 5, 9]

    @given(st.sets(st.integers(0, 63)))
    def test_members_sorted_unique(self, xs):
        assert members(altset(xs)) == sorted(xs)

    def test_exhaustive_orientation_small(self):
        for t in all_tournaments(4):
            for i in range(4):
                for j in range(i + 1, 4):
                    assert t.dominates(i, j) != t.dominates(j, i)
