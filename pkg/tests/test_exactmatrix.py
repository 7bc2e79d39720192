from fractions import Fraction

import pytest

from gcdmat import exactmatrix
from gcdmat.errors import (
    DimensionMismatchError,
    NotSquareError,
    NotSymmetricError,
    SingularMatrixError,
    TooLargeForExhaustiveMinorsError,
)
from gcdmat.exactmatrix import (
    ExactMatrix,
    all_minors_nonnegative,
    determinant,
    gcd_matrix,
    is_positive_definite,
    lcm_matrix,
    solve_right,
)
from gcdmat.generate import SplitMix64
from gcdmat.setmodel import OrderedSet

from oracles import (
    cofactor_determinant,
    divisor_closure,
    gcd_closure,
    filtered_totient_product,
    random_distinct_set,
    totient_product,
)


class TestExactMatrix:
    def test_construction_normalizes_to_fractions(self):
        m = ExactMatrix([[1, "1/2"], [Fraction(3, 4), 0]])
        assert m[0][1] == Fraction(1, 2)
        assert all(isinstance(e, Fraction) for row in m for e in row)

    def test_rejects_bad_shapes(self):
        with pytest.raises(DimensionMismatchError):
            ExactMatrix([])
        with pytest.raises(DimensionMismatchError):
            ExactMatrix([[1, 2], [3]])

    def test_multiply_and_identity(self):
        a = ExactMatrix([[1, 2], [3, 4]])
        assert a * ExactMatrix.identity(2) == a
        assert a * ExactMatrix([[0, 1], [1, 0]]) == ExactMatrix([[2, 1], [4, 3]])
        with pytest.raises(DimensionMismatchError):
            a * ExactMatrix([[1, 2, 3]])

    def test_json_round_trip(self):
        m = ExactMatrix([[2, Fraction(-1, 4)], [0, 7]])
        doc = m.to_json_dict()
        assert doc == {"rows": 2, "cols": 2, "entries": [["2", "-1/4"], ["0", "7"]]}
        assert ExactMatrix.from_json_dict(doc) == m

    def test_text_format(self):
        m = ExactMatrix([[Fraction(3, 4), -1], [0, Fraction(5)]])
        assert m.to_text() == "3/4 -1\n0 5"


class TestGcdLcmMatrices:
    def test_examples(self):
        assert gcd_matrix([2, 6, 12]) == ExactMatrix([[2, 2, 2], [2, 6, 6], [2, 6, 12]])
        assert lcm_matrix([2, 6, 12]) == ExactMatrix([[2, 6, 12], [6, 6, 12], [12, 12, 12]])
        assert gcd_matrix([7]) == ExactMatrix([[7]])
        assert lcm_matrix([7]) == ExactMatrix([[7]])

    def test_symmetry_and_entrywise_bounds(self):
        rng = SplitMix64(5)
        for _ in range(40):
            s = random_distinct_set(rng, rng.randint(1, 6), 500)
            g, l = gcd_matrix(s), lcm_matrix(s)
            assert g.is_symmetric() and l.is_symmetric()
            for i in range(len(s)):
                assert g[i][i] == s[i]
                for j in range(len(s)):
                    lo, hi = sorted((s[i], s[j]))
                    assert g[i][j] <= lo <= hi <= l[i][j]

    def test_hadamard_identity(self):
        rng = SplitMix64(6)
        for _ in range(40):
            s = random_distinct_set(rng, rng.randint(1, 6), 500)
            g, l = gcd_matrix(s), lcm_matrix(s)
            for i in range(len(s)):
                for j in range(len(s)):
                    assert g[i][j] * l[i][j] == s[i] * s[j]


class TestDeterminant:
    def test_examples(self):
        assert determinant(gcd_matrix([1, 2, 3, 4])) == 4  # totient product 1*1*2*2
        assert determinant(ExactMatrix([[Fraction(7, 3)]])) == Fraction(7, 3)
        assert determinant(gcd_matrix([2, 6, 12])) == 48

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            determinant(ExactMatrix([[1, 2]]))

    def test_matches_cofactor_oracle_on_random_rationals(self):
        rng = SplitMix64(8)
        for _ in range(60):
            n = rng.randint(1, 5)
            rows = [
                [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
                for _ in range(n)
            ]
            assert determinant(ExactMatrix(rows)) == cofactor_determinant(rows)

    def test_singular_matrix_determinant_zero(self):
        assert determinant(ExactMatrix([[1, 2], [2, 4]])) == 0

    def test_totient_product_for_factor_closed(self):
        rng = SplitMix64(9)
        seen = set()
        while len(seen) < 20:
            seeds = tuple(rng.randint(2, 100) for _ in range(rng.randint(1, 3)))
            closed = divisor_closure(seeds)
            if closed in seen or len(closed) > 24:
                continue
            seen.add(closed)
            assert determinant(gcd_matrix(closed)) == totient_product(closed)

    def test_filtered_totient_product_for_gcd_closed(self):
        rng = SplitMix64(10)
        seen = set()
        while len(seen) < 20:
            seeds = tuple(rng.randint(2, 150) for _ in range(rng.randint(2, 5)))
            closed = gcd_closure(seeds)
            if closed in seen or len(closed) > 10:
                continue
            seen.add(closed)
            assert determinant(gcd_matrix(closed)) == filtered_totient_product(closed)


class TestAllMinors:
    def test_tn_example(self):
        assert all_minors_nonnegative(gcd_matrix([2, 6, 12]))

    def test_negative_witness(self):
        report = all_minors_nonnegative(gcd_matrix([2, 3, 4]))
        assert not report
        assert report.witness_rows == (1, 2)
        assert report.witness_cols == (2, 3)
        assert report.witness_value == -5

    def test_one_by_one(self):
        assert all_minors_nonnegative(ExactMatrix([[5]]))
        assert not all_minors_nonnegative(ExactMatrix([[-1]]))

    def test_size_cap(self):
        chain = gcd_matrix([2**k for k in range(9)])
        with pytest.raises(TooLargeForExhaustiveMinorsError):
            all_minors_nonnegative(chain)
        assert all_minors_nonnegative(chain, size_cap=9)

    def test_witness_is_first_in_enumeration_order(self):
        # entry (1,2) of this matrix is the first negative 1x1 minor
        report = all_minors_nonnegative(ExactMatrix([[1, -2], [3, 4]]))
        assert (report.witness_rows, report.witness_cols) == ((1,), (2,))
        assert report.witness_value == -2

    def test_witness_matches_independent_enumeration(self):
        from oracles import first_negative_minor

        rng = SplitMix64(13)
        for _ in range(30):
            n = rng.randint(1, 4)
            rows = [[rng.randint(-4, 9) for _ in range(n)] for _ in range(n)]
            report = all_minors_nonnegative(ExactMatrix(rows))
            expected = first_negative_minor(rows)
            if expected is None:
                assert report.all_nonnegative
            else:
                assert (report.witness_rows, report.witness_cols, report.witness_value) == expected


class TestSolveRight:
    def test_quotient_example(self):
        x = solve_right(gcd_matrix([2, 6, 12]), lcm_matrix([2, 6, 12]))
        assert x == ExactMatrix([[0, 0, 1], [3, -1, 1], [6, 0, 0]])
        assert x * gcd_matrix([2, 6, 12]) == lcm_matrix([2, 6, 12])

    def test_identity_and_scalar(self):
        a = gcd_matrix([4, 10, 12])
        assert solve_right(a, a) == ExactMatrix.identity(3)
        assert solve_right(ExactMatrix([[4]]), ExactMatrix([[7]])) == ExactMatrix([[Fraction(7, 4)]])

    def test_exactness_on_random_systems(self):
        rng = SplitMix64(11)
        for _ in range(40):
            n = rng.randint(1, 5)
            s = random_distinct_set(rng, n, 300)
            a = gcd_matrix(s)
            b = ExactMatrix(
                [[Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(n)]
                 for _ in range(rng.randint(1, 4))]
            )
            assert solve_right(a, b) * a == b

    def test_errors(self):
        with pytest.raises(SingularMatrixError):
            solve_right(ExactMatrix([[1, 2], [2, 4]]), ExactMatrix.identity(2))
        with pytest.raises(DimensionMismatchError):
            solve_right(ExactMatrix([[1, 2]]), ExactMatrix.identity(2))
        with pytest.raises(DimensionMismatchError):
            solve_right(ExactMatrix.identity(2), ExactMatrix([[1, 2, 3]]))


class TestPositiveDefinite:
    def test_examples(self):
        assert not is_positive_definite(ExactMatrix([[0]]))
        assert is_positive_definite(ExactMatrix([[2, 2], [2, 6]]))
        with pytest.raises(NotSymmetricError):
            is_positive_definite(ExactMatrix([[1, 2], [3, 4]]))
        with pytest.raises(NotSquareError):
            is_positive_definite(ExactMatrix([[1, 2]]))

    def test_gcd_matrices_always_positive_definite(self):
        rng = SplitMix64(12)
        for _ in range(50):
            s = random_distinct_set(rng, rng.randint(1, 6), 10**6)
            assert is_positive_definite(gcd_matrix(s))
