# tests/codes/test_linear.py
"""
Tests for linear-code algebra over GF(q^2).
"""
import numpy as np
import pytest

from agq.codes import CodeParameterError, LinearCode, equal, min_distance_exhaustive, subset, weight, weights
from agq.field import new_field


def random_matrix(field, rows: int, cols: int, rng: np.random.Generator):
    return field.gf(rng.integers(0, field.q2, size=(rows, cols)))


def random_codes(count: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        field = new_field(int(rng.integers(1, 3)))
        n = int(rng.integers(1, 9))
        k = int(rng.integers(0, n + 1))
        yield LinearCode.from_rows(field, n, random_matrix(field, k, n, rng))


class TestConstruction:
    def test_rref_is_canonical(self, gf16):
        rows = [[1, 2, 3, 4], [0, 1, 5, 6]]
        code = LinearCode.from_rows(gf16, 4, rows)
        gf = gf16.gf
        scaled = gf(rows)[::-1] * gf(7)
        mixed = np.vstack([scaled.view(np.ndarray), (gf(rows[0]) + gf(rows[1])).view(np.ndarray)[None, :]])
        assert LinearCode.from_rows(gf16, 4, mixed) == code
        assert code.pivots == [0, 1]

    def test_drops_dependent_rows(self, gf4):
        code = LinearCode.from_rows(gf4, 3, [[1, 1, 0], [1, 1, 0], [0, 0, 0]])
        assert code.k == 1

    def test_empty_rows(self, gf4):
        code = LinearCode.from_rows(gf4, 5, [])
        assert code.k == 0
        assert code.gen.shape == (0, 5)

    def test_wrong_length(self, gf4):
        with pytest.raises(CodeParameterError):
            LinearCode.from_rows(gf4, 3, [[1, 0]])

    def test_mismatched_fields(self, gf4, gf16):
        a = LinearCode.full_space(gf4, 3)
        b = LinearCode.full_space(gf16, 3)
        with pytest.raises(CodeParameterError):
            equal(a, b)
        with pytest.raises(CodeParameterError):
            subset(a, b)

    def test_weights(self, gf4):
        assert weight(gf4.gf([0, 1, 2, 0, 3])) == 3
        assert weights(gf4.gf([[0, 0], [1, 0], [2, 3]])).tolist() == [0, 1, 2]


class TestDual:
    def test_repetition_pair_is_self_dual(self, gf4):
        code = LinearCode.from_rows(gf4, 2, [[1, 1]])
        assert code.dual() == code
        assert code.is_euclidean_self_orthogonal()
        assert code.is_hermitian_self_orthogonal()

    def test_full_and_zero_codes(self, gf4):
        full = LinearCode.full_space(gf4, 4)
        zero = LinearCode.zero_code(gf4, 4)
        assert full.dual() == zero
        assert zero.dual() == full

    def test_dual_laws_on_random_codes(self):
        for code in random_codes(200):
            dual = code.dual()
            assert dual.k == code.n - code.k
            if code.k and dual.k:
                assert not (code.gen @ dual.gen.T).view(np.ndarray).any()
            assert dual.dual() == code

    def test_hermitian_tests_agree_on_random_codes(self):
        for code in random_codes(200, seed=1):
            direct = code.is_hermitian_self_orthogonal()
            assert direct == code.frobenius_code().issubset(code.dual())
            assert direct == code.issubset(code.hermitian_dual())

    def test_hermitian_not_euclidean(self, gf4):
        # <c, c>_H = 1 + w*w^2 = 1 + 1 = 0, but <c, c> = 1 + w^2 != 0
        code = LinearCode.from_rows(gf4, 2, [[1, 2]])
        assert code.is_hermitian_self_orthogonal()
        assert not code.is_euclidean_self_orthogonal()

    def test_frobenius_code(self, gf4):
        code = LinearCode.from_rows(gf4, 2, [[1, 2]])
        assert code.frobenius_code() == LinearCode.from_rows(gf4, 2, [[1, 3]])
        assert code.frobenius_code().frobenius_code() == code

    def test_hermitian_dual_has_the_euclidean_dual_distance(self, gf4):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(1, 11))
            k = int(rng.integers(0, min(n, 5) + 1))
            code = LinearCode.from_rows(gf4, n, random_matrix(gf4, k, n, rng))
            expected = min_distance_exhaustive(code.dual())
            assert min_distance_exhaustive(code.hermitian_dual()) == expected
            assert min_distance_exhaustive(code.frobenius_code().dual()) == expected


class TestContainment:
    def test_subcode(self, gf16):
        big = LinearCode.from_rows(gf16, 4, [[1, 0, 2, 3], [0, 1, 4, 5]])
        small = LinearCode.from_rows(gf16, 4, [[1, 1, 6, 6]])
        assert small.issubset(big)
        assert small <= big
        assert not big.issubset(small)

    def test_contains_codewords(self, gf16):
        code = LinearCode.from_rows(gf16, 5, [[1, 2, 3, 4, 5], [0, 1, 1, 0, 7]])
        for word in code.random_codewords(20, seed=3):
            assert code.contains(word)
        assert not code.contains([0, 0, 0, 0, 1])

    def test_zero_code_is_contained_everywhere(self, gf4):
        zero = LinearCode.zero_code(gf4, 3)
        assert zero.issubset(LinearCode.from_rows(gf4, 3, [[1, 1, 1]]))
        assert not LinearCode.full_space(gf4, 3).issubset(zero)

    def test_codes_are_unhashable(self, gf4):
        with pytest.raises(TypeError):
            hash(LinearCode.full_space(gf4, 2))
