"""Exact matrix algebra: products, powers, adjoints, unitarity certificates."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_tiles.cyclotomic import CycloSum, RootOfUnity
from spectral_tiles.errors import DimensionMismatch
from spectral_tiles.matrices import RootTable, is_unitary, mat_adjoint, mat_mul, mat_pow


def cyclic_shift(n: int) -> RootTable:
    return RootTable([[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)])


def standard_hadamard(n: int) -> RootTable:
    rows = [
        [CycloSum.from_root(RootOfUnity(n, (j * k) % n)) for k in range(n)]
        for j in range(n)
    ]
    return RootTable(rows, Fraction(1), n)


class TestPowers:
    def test_identity_fifth_power(self):
        m = RootTable.identity(3)
        assert mat_pow(m, 5).is_identity()

    def test_swap_squares_to_identity(self):
        swap = RootTable([[0, 1], [1, 0]])
        assert mat_pow(swap, 2).is_identity()

    def test_cyclic_shift_fourth_power(self):
        # oracle: direct repeated multiplication
        m = cyclic_shift(4)
        direct = mat_mul(mat_mul(m, m), mat_mul(m, m))
        assert direct.is_identity()
        assert mat_pow(m, 4).is_identity()
        assert mat_pow(m, 4).equals(direct)

    def test_negative_power_needs_unitarity(self):
        ones = RootTable([[1, 1], [1, 1]], Fraction(1), 2)
        with pytest.raises(ValueError):
            mat_pow(ones, -1)

    def test_negative_power_is_adjoint_power(self):
        m = cyclic_shift(5)
        assert mat_mul(mat_pow(m, -2), mat_pow(m, 2)).is_identity()

    def test_zero_power(self):
        assert mat_pow(cyclic_shift(3), 0).is_identity()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 6), st.integers(-6, 6))
    def test_power_additivity(self, j, k):
        m = mat_mul(cyclic_shift(4), RootTable.diagonal(
            [CycloSum.from_root(RootOfUnity(8, e)) for e in (1, 3, 5, 7)]
        ))
        assert mat_mul(mat_pow(m, j), mat_pow(m, k)).equals(mat_pow(m, j + k))


class TestUnitarity:
    def test_standard_hadamard_3(self):
        assert is_unitary(standard_hadamard(3), "exact")
        assert is_unitary(standard_hadamard(3), "float")

    def test_all_ones_rejected(self):
        ones = RootTable([[1, 1], [1, 1]], Fraction(1), 2)
        assert not is_unitary(ones, "exact")
        assert not is_unitary(ones, "float")

    def test_one_by_one(self):
        assert is_unitary(RootTable([[1]]), "exact")

    def test_float_ndarray(self):
        assert is_unitary(np.eye(4, dtype=complex), "float")
        assert not is_unitary(np.ones((2, 2), dtype=complex) / np.sqrt(2), "float")

    def test_exact_mode_rejects_ndarray(self):
        with pytest.raises(ValueError):
            is_unitary(np.eye(2), "exact")

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12])
    def test_exact_agrees_with_float_on_hadamards(self, n):
        h = standard_hadamard(n)
        assert is_unitary(h, "exact") == is_unitary(h, "float", 1e-9)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(2, 5).flatmap(
            lambda n: st.tuples(
                st.permutations(range(n)),
                st.lists(st.integers(0, 359), min_size=n, max_size=n),
            )
        )
    )
    def test_exact_agrees_with_float_on_generalized_permutations(self, data):
        # generalized permutation matrices with phases in the order-360
        # roots of unity are unitary; zeroing one entry breaks that
        perm, phases = data
        n = len(perm)
        zero = CycloSum.zero()
        rows = []
        for i in range(n):
            root = RootOfUnity(360, phases[i])
            rows.append([CycloSum.from_root(root) if j == perm[i] else zero for j in range(n)])
        m = RootTable(rows)
        assert is_unitary(m, "exact")
        assert is_unitary(m, "float", 1e-9)
        broken = [list(r) for r in rows]
        broken[0][perm[0]] = zero
        b = RootTable(broken)
        assert not is_unitary(b, "exact")
        assert not is_unitary(b, "float", 1e-9)


class TestShapesAndScales:
    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_mul(RootTable.identity(2), RootTable.identity(3))

    def test_square_scale_normalisation(self):
        m = RootTable([[1]], Fraction(1), 4)  # 1/sqrt(4) folds to 1/2
        assert m.root == 1
        assert m.scale == Fraction(1, 2)

    def test_scale_squared_is_rational(self):
        h = standard_hadamard(3)
        assert h.scale_squared == Fraction(1, 3)

    def test_adjoint_of_product(self):
        a, b = cyclic_shift(3), mat_pow(cyclic_shift(3), 2)
        assert mat_adjoint(mat_mul(a, b)).equals(mat_mul(mat_adjoint(b), mat_adjoint(a)))

    def test_to_complex_matches_entries(self):
        h = standard_hadamard(4)
        expect = np.array(
            [[np.exp(2j * np.pi * j * k / 4) / 2 for k in range(4)] for j in range(4)]
        )
        assert np.allclose(h.to_complex(), expect, atol=1e-12)

    def test_entry_equals_rational(self):
        m = RootTable([[2, 0], [0, 2]], Fraction(1, 2))
        assert m.is_identity()
        assert m.entry_equals(0, 0, 1)
        assert not m.entry_equals(0, 0, 2)
