import pytest
from hypothesis import given, settings, strategies as st

from gcdmat import setmodel
from gcdmat.errors import (
    DuplicateRowsError,
    InvalidSetError,
    NotAMemberError,
    NotPrimeError,
    PrimesNotIncreasingError,
)
from gcdmat.setmodel import ExponentMatrix, OrderedSet

from oracles import brute_monotone_images, random_distinct_set
from gcdmat.generate import SplitMix64

# the two orderings of the five-element worked example
S_MONOTONE = [4000, 6000, 600, 54, 81]
S_SHUFFLED = [81, 4000, 600, 6000, 54]
POW_MONOTONE = [[5, 0, 3], [4, 1, 3], [3, 1, 2], [1, 3, 0], [0, 4, 0]]
POW_SHUFFLED = [[0, 4, 0], [5, 0, 3], [3, 1, 2], [4, 1, 3], [1, 3, 0]]

SIX_ELEMENT = [330812181, 551353635, 7501410, 2976750, 5512500000, 18750000000]


class TestOrderedSet:
    def test_rejects_empty(self):
        with pytest.raises(InvalidSetError):
            OrderedSet([])

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidSetError):
            OrderedSet([1, 0, 2])
        with pytest.raises(InvalidSetError):
            OrderedSet([-3])

    def test_rejects_duplicates(self):
        with pytest.raises(InvalidSetError):
            OrderedSet([2, 6, 2])

    def test_order_matters_for_equality(self):
        assert OrderedSet([2, 3]) != OrderedSet([3, 2])
        assert OrderedSet([2, 3]) == OrderedSet([2, 3])

    def test_permute(self):
        s = OrderedSet(S_SHUFFLED)
        assert s.permute([2, 4, 3, 5, 1]) == OrderedSet(S_MONOTONE)
        with pytest.raises(InvalidSetError):
            s.permute([1, 1, 2, 3, 4])

    def test_text_round_trip(self):
        s = OrderedSet([4000, 6000, 600])
        assert OrderedSet.from_text(s.to_text()) == s
        assert OrderedSet.from_text("2 6 12") == OrderedSet([2, 6, 12])

    def test_from_text_diagnostics(self):
        with pytest.raises(InvalidSetError):
            OrderedSet.from_text("2 six 12")
        with pytest.raises(InvalidSetError):
            OrderedSet.from_text("   ")

    def test_json_round_trip(self):
        s = OrderedSet([4000, 6000])
        assert s.to_json_dict() == {"elements": ["4000", "6000"]}
        assert OrderedSet.from_json_dict(s.to_json_dict()) == s
        assert OrderedSet.from_json_dict({"elements": [2, 6]}) == OrderedSet([2, 6])


class TestExponentMatrix:
    def test_validation(self):
        with pytest.raises(PrimesNotIncreasingError):
            ExponentMatrix([3, 2], [[1, 1]])
        with pytest.raises(NotPrimeError):
            ExponentMatrix([2, 4], [[1, 1]])
        with pytest.raises(DuplicateRowsError):
            ExponentMatrix([2], [[1], [1]])
        with pytest.raises(InvalidSetError):
            ExponentMatrix([2, 3], [[1, 0], [2, 0]])  # zero column

    def test_json_round_trip(self):
        m = ExponentMatrix([2, 3, 5], POW_MONOTONE)
        doc = m.to_json_dict()
        assert doc["primes"] == ["2", "3", "5"]
        assert doc["exponents"] == POW_MONOTONE
        assert ExponentMatrix.from_json_dict(doc) == m


class TestPowMatrix:
    def test_worked_example_both_orderings(self):
        m = setmodel.pow_matrix(S_MONOTONE)
        assert m.primes == (2, 3, 5)
        assert [list(r) for r in m.exponents] == POW_MONOTONE
        m2 = setmodel.pow_matrix(S_SHUFFLED)
        assert [list(r) for r in m2.exponents] == POW_SHUFFLED

    def test_singleton_one(self):
        m = setmodel.pow_matrix([1])
        assert m.primes == ()
        assert m.exponents == ((),)

    def test_six_element_example(self):
        m = setmodel.pow_matrix(SIX_ELEMENT)
        assert m.primes == (2, 3, 5, 7)
        assert [list(r) for r in m.exponents] == [
            [0, 9, 0, 5],
            [0, 8, 1, 5],
            [1, 7, 1, 3],
            [1, 5, 3, 2],
            [5, 2, 8, 2],
            [7, 1, 11, 0],
        ]


class TestColumnMonotone:
    def test_worked_example(self):
        assert setmodel.is_column_monotone(setmodel.pow_matrix(S_MONOTONE))
        assert not setmodel.is_column_monotone(setmodel.pow_matrix(S_SHUFFLED))

    def test_directions(self):
        report = setmodel.is_column_monotone(setmodel.pow_matrix(S_MONOTONE))
        assert report.directions == ("down", "up", "down")

    def test_vacuous_cases(self):
        assert setmodel.is_column_monotone(setmodel.pow_matrix([1]))
        assert setmodel.is_column_monotone(setmodel.pow_matrix([720720]))


class TestFindMonotoneOrder:
    def test_shuffled_example_lex_smallest(self):
        image = setmodel.find_monotone_order(S_SHUFFLED)
        assert image == (1, 5, 3, 4, 2)
        reordered = OrderedSet(S_SHUFFLED).permute(image)
        assert setmodel.is_column_monotone(setmodel.pow_matrix(reordered))
        # the ordering from the worked example is among the valid ones too
        assert (2, 4, 3, 5, 1) in brute_monotone_images(S_SHUFFLED)

    def test_already_monotone_returns_identity(self):
        assert setmodel.find_monotone_order(S_MONOTONE) == (1, 2, 3, 4, 5)
        assert setmodel.find_monotone_order([1]) == (1,)

    def test_not_orderable(self):
        assert brute_monotone_images([6, 10, 15]) == []
        assert setmodel.find_monotone_order([6, 10, 15]) is None

    def test_agrees_with_brute_force(self):
        rng = SplitMix64(20260808)
        sizes = [rng.randint(1, 5) for _ in range(50)] + [6, 6, 6, 7, 7, 7]
        for n in sizes:
            s = random_distinct_set(rng, n, 40)
            images = brute_monotone_images(s.elements)
            found = setmodel.find_monotone_order(s)
            if images:
                assert found == min(images)
                assert setmodel.is_column_monotone(setmodel.pow_matrix(s.permute(found)))
            else:
                assert found is None


class TestPredicates:
    def test_gcd_closed(self):
        assert setmodel.is_gcd_closed([1, 2, 3])
        assert setmodel.is_gcd_closed([2, 6, 12])
        assert not setmodel.is_gcd_closed(SIX_ELEMENT)

    def test_factor_closed(self):
        assert setmodel.is_factor_closed([1, 2, 3, 4, 6, 12])
        assert not setmodel.is_factor_closed([2])
        assert setmodel.is_factor_closed(list(range(1, 20)))

    def test_factor_closed_implies_gcd_closed(self):
        rng = SplitMix64(7)
        from oracles import divisor_closure

        for _ in range(25):
            seeds = [rng.randint(2, 120) for _ in range(rng.randint(1, 3))]
            closed = divisor_closure(seeds)
            assert setmodel.is_factor_closed(closed)
            assert setmodel.is_gcd_closed(closed)

    def test_greatest_type_divisors(self):
        assert setmodel.greatest_type_divisors([1, 2, 4], 4) == [2]
        assert setmodel.greatest_type_divisors([1, 2, 3, 6], 6) == [2, 3]
        assert setmodel.greatest_type_divisors([1], 1) == []
        with pytest.raises(NotAMemberError):
            setmodel.greatest_type_divisors([1, 2], 3)


class TestCoprimeChains:
    def test_two_chains(self):
        assert setmodel.classify_coprime_divisor_chains([2, 4, 3, 9]) == [[2, 4], [3, 9]]

    def test_six_element_not_of_this_form(self):
        assert setmodel.classify_coprime_divisor_chains(SIX_ELEMENT) is None

    def test_singleton(self):
        assert setmodel.classify_coprime_divisor_chains([5]) == [[5]]

    def test_one_gets_its_own_block(self):
        assert setmodel.classify_coprime_divisor_chains([1, 2, 4]) == [[1], [2, 4]]

    def test_blocks_are_chains_and_coprime(self):
        from math import gcd

        rng = SplitMix64(99)
        for _ in range(80):
            s = random_distinct_set(rng, rng.randint(1, 6), 60)
            blocks = setmodel.classify_coprime_divisor_chains(s)
            if blocks is None:
                continue
            assert sorted(x for b in blocks for x in b) == sorted(s.elements)
            for block in blocks:
                assert all(b % a == 0 for a, b in zip(block, block[1:]))
            for i, bi in enumerate(blocks):
                for bj in blocks[i + 1 :]:
                    assert all(gcd(a, b) == 1 for a in bi for b in bj)


class TestPowerSetAndReconstruct:
    def test_power_set(self):
        assert setmodel.power_set([2, 6, 12], 2) == OrderedSet([4, 36, 144])
        s = OrderedSet([5, 10])
        assert setmodel.power_set(s, 1) == s
        with pytest.raises(ValueError):
            setmodel.power_set(s, 0)

    def test_power_set_scales_exponents(self):
        rng = SplitMix64(31337)
        for _ in range(30):
            s = random_distinct_set(rng, rng.randint(1, 5), 200)
            e = rng.randint(1, 3)
            base = setmodel.pow_matrix(s)
            powered = setmodel.pow_matrix(setmodel.power_set(s, e))
            assert powered.primes == base.primes
            assert powered.exponents == tuple(
                tuple(e * a for a in row) for row in base.exponents
            )

    def test_reconstruct_pascal_rows(self):
        m = ExponentMatrix([2, 3, 5, 7], [[1, 1, 1, 1], [1, 2, 3, 4], [1, 3, 6, 10], [1, 4, 10, 20]])
        s = setmodel.reconstruct(m)
        assert s.elements == (
            210,
            2 * 3**2 * 5**3 * 7**4,
            2 * 3**3 * 5**6 * 7**10,
            2 * 3**4 * 5**10 * 7**20,
        )

    def test_reconstruct_trivial_and_worked_example(self):
        assert setmodel.reconstruct(ExponentMatrix([], [[]])) == OrderedSet([1])
        m = ExponentMatrix([2, 3, 5], POW_MONOTONE)
        assert setmodel.reconstruct(m) == OrderedSet(S_MONOTONE)


@st.composite
def ordered_sets(draw):
    elems = draw(st.lists(st.integers(1, 50000), min_size=1, max_size=7, unique=True))
    return OrderedSet(elems)


@given(ordered_sets())
@settings(max_examples=150)
def test_pow_matrix_round_trip(s):
    assert setmodel.reconstruct(setmodel.pow_matrix(s)) == s


@given(ordered_sets())
@settings(max_examples=60, deadline=None)
def test_monotone_order_implies_monotone(s):
    image = setmodel.find_monotone_order(s)
    if image is not None:
        assert setmodel.is_column_monotone(setmodel.pow_matrix(s.permute(image)))
