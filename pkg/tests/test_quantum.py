# tests/test_quantum.py
"""
Tests for stabilizer codes derived from Hermitian self-orthogonal AG codes.
"""
import logging

import numpy as np
import pytest

from agq.codes import LinearCode, build
from agq.curves import CurveKind, CurveParameterError, new_curve
from agq.quantum import (
    NotHermitianSelfOrthogonalError,
    QuantumCodeRecord,
    conjugate_symplectic,
    derive_quantum,
    expand_to_symplectic,
    hamming_check,
    is_symplectic_self_orthogonal,
    qparams_curve_a,
    qparams_curve_b,
    singleton_check,
    symplectic_product_matrix,
    theorem_range,
)


def record(q, n, k_q, d_lower, d_exact=None):
    return QuantumCodeRecord(
        q=q,
        n=n,
        k_q=k_q,
        d_lower=d_lower,
        curve=CurveKind.A,
        m=0,
        k_classical=(n - k_q) // 2,
        in_theorem_range=True,
        d_exact=d_exact,
    )


class TestParameterFormulas:
    def test_curve_a(self):
        assert qparams_curve_a(4, 6) == (32, 22, 4)
        assert qparams_curve_a(4, 3) == (32, 28, 1)
        assert qparams_curve_a(2, 2) == (8, 4, 2)

    def test_curve_b(self):
        assert qparams_curve_b(8, 17) == (176, 154, 5)
        assert qparams_curve_b(8, 20) == (176, 148, 8)
        assert qparams_curve_b(8, 18) == (176, 152, 6)

    def test_curve_b_needs_odd_power(self):
        with pytest.raises(CurveParameterError):
            qparams_curve_b(4, 5)

    def test_out_of_range_warns(self, caplog):
        with caplog.at_level(logging.WARNING, logger="agq.quantum"):
            assert qparams_curve_a(2, 3) == (8, 2, 3)
        assert "outside the proven range" in caplog.text

    def test_theorem_ranges(self):
        assert list(theorem_range("a", 4)) == [3, 4, 5, 6]
        assert list(theorem_range(CurveKind.B, 8)) == list(range(13, 21))

    @pytest.mark.parametrize("q", [2, 4, 8])
    def test_singleton_gap_is_q(self, q):
        for m in theorem_range("a", q):
            n, k_q, d = qparams_curve_a(q, m)
            assert k_q + 2 * d == n + 2 - q


class TestSymplecticExpansion:
    def test_empty_code(self, gf16):
        stabilizer = expand_to_symplectic(LinearCode.zero_code(gf16, 5))
        assert stabilizer.shape == (0, 10)

    def test_c2_over_gf4(self, curve_a2):
        stabilizer = expand_to_symplectic(build(curve_a2, 2).code)
        assert stabilizer.shape == (4, 16)
        assert int(np.linalg.matrix_rank(stabilizer)) == 4
        assert is_symplectic_self_orthogonal(stabilizer)
        assert set(np.unique(stabilizer.view(np.ndarray)).tolist()) <= {0, 1}

    def test_c6_over_gf16(self, curve_a4, gf16):
        stabilizer = expand_to_symplectic(build(curve_a4, 6).code)
        assert stabilizer.shape == (10, 64)
        assert int(np.linalg.matrix_rank(stabilizer)) == 10
        assert not symplectic_product_matrix(stabilizer).view(np.ndarray).any()
        entries = np.unique(stabilizer.view(np.ndarray)).tolist()
        assert all(gf16.is_in_subfield(int(v)) for v in entries)

    def test_rejects_non_hermitian_code(self, gf4):
        code = LinearCode.from_rows(gf4, 2, [[1, 0]])
        with pytest.raises(NotHermitianSelfOrthogonalError):
            expand_to_symplectic(code)

    def test_frobenius_image_is_the_conjugated_expansion(self, curve_a4, gf16):
        code = build(curve_a4, 5).code
        image = expand_to_symplectic(code.frobenius_code())
        conjugated = conjugate_symplectic(expand_to_symplectic(code), gf16.generator, gf16)
        n2 = 2 * code.n
        assert LinearCode.from_rows(gf16, n2, image) == LinearCode.from_rows(gf16, n2, conjugated)


class TestDeriveQuantum:
    def test_example_one(self, curve_a2):
        rec = derive_quantum(build(curve_a2, 2))
        assert (rec.n, rec.k_q, rec.d_lower, rec.d_exact) == (8, 4, 2, 2)
        assert rec.q == 2
        assert rec.in_theorem_range
        assert rec.distance_method == "exhaustive-supports"
        assert str(rec) == "[[8,4,2]]_2"
        assert rec.stabilizer is not None and rec.stabilizer.shape == (4, 16)

    def test_constants(self, curve_a2):
        rec = derive_quantum(build(curve_a2, 0), stabilizer=False)
        assert (rec.n, rec.k_q, rec.d_lower) == (8, 6, 1)
        assert not rec.in_theorem_range
        assert "outside" in rec.note
        assert rec.d_exact is not None and rec.d_exact >= rec.d_lower

    def test_c3_over_gf4_is_rejected(self, curve_a2):
        with pytest.raises(NotHermitianSelfOrthogonalError):
            derive_quantum(build(curve_a2, 3))

    def test_example_two_bounds(self, curve_a4):
        for m in range(3, 7):
            rec = derive_quantum(build(curve_a4, m), certify=False, stabilizer=False)
            assert (rec.n, rec.k_q, rec.d_lower) == (32, 34 - 2 * m, m - 2)
            assert rec.d_exact is None
            assert str(rec) == f"[[32,{34 - 2 * m},≥{m - 2}]]_4"

    @pytest.mark.slow
    def test_example_two_exact_distance(self, curve_a4):
        rec = derive_quantum(build(curve_a4, 6))
        assert (rec.n, rec.k_q, rec.d_lower, rec.d_exact) == (32, 22, 4, 4)
        assert is_symplectic_self_orthogonal(rec.stabilizer)

    @pytest.mark.parametrize(("kind", "e"), [("a", 1), ("a", 2), ("a", 3), ("b", 1), ("b", 3)])
    def test_formulas_match_construction(self, kind, e):
        curve = new_curve(kind, e)
        formula = qparams_curve_a if kind == "a" else qparams_curve_b
        for m in theorem_range(kind, curve.q):
            rec = derive_quantum(build(curve, m), certify=False, stabilizer=False)
            assert (rec.n, rec.k_q, rec.d_lower) == formula(curve.q, m)
            assert rec.in_theorem_range

    @pytest.mark.slow
    def test_example_four_stabilizers(self, curve_b8):
        for m in range(17, 21):
            rec = derive_quantum(build(curve_b8, m), certify=False)
            assert (rec.n, rec.k_q, rec.d_lower) == (176, 188 - 2 * m, m - 12)
            assert rec.stabilizer.shape == (2 * (m - 6), 352)
            assert int(np.linalg.matrix_rank(rec.stabilizer)) == 2 * (m - 6)
            assert is_symplectic_self_orthogonal(rec.stabilizer)


class TestBounds:
    def test_singleton_defect(self):
        assert singleton_check(record(4, 32, 22, 4)) == (4, True)
        assert singleton_check(record(2, 8, 4, 2)) == (2, True)
        # one more than designed closes the gap by two
        assert singleton_check(record(4, 32, 22, 4, d_exact=5)) == (2, True)

    def test_singleton_violation(self):
        assert singleton_check(record(2, 8, 4, 4)) == (-2, False)

    def test_hamming(self):
        assert hamming_check(record(2, 8, 4, 2))
        assert hamming_check(record(4, 32, 22, 4))
        assert hamming_check(record(8, 176, 148, 8))

    def test_hamming_violation(self):
        # q^(n-k) = 4 cannot cover 1 + 8 * 3 words
        assert not hamming_check(record(2, 8, 6, 3))
