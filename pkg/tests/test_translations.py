"""Local translation matrices, the group U(t), and spectrum recovery."""

from fractions import Fraction

import numpy as np
import pytest

from spectral_tiles.config import ENV_TOL
from spectral_tiles.cyclotomic import CycloSum
from spectral_tiles.errors import DegenerateEigenvalue, NotASpectrum, NotLocalTranslation
from spectral_tiles.matrices import RootTable, is_unitary, mat_adjoint, mat_mul, mat_pow
from spectral_tiles.spectra import IntSet, Spectrum, search_spectra
from spectral_tiles.translations import (
    eigencheck,
    local_group,
    local_translation_matrix,
    rescale,
    spectrum_from_matrix,
    verify_local_translation,
)

N4_SET = IntSet([0, 1, 4, 5])
N4_SPECTRUM = Spectrum([0, Fraction(1, 8), Fraction(1, 2), Fraction(5, 8)])


def full_residue_pair(n: int):
    return IntSet(range(n)), Spectrum(Fraction(k, n) for k in range(n))


def cyclic_shift(n: int) -> RootTable:
    return RootTable([[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)])


class TestConstruction:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_full_residues_give_cyclic_shift(self, n):
        b = local_translation_matrix(*full_residue_pair(n))
        assert b.matrix.equals(cyclic_shift(n))

    def test_two_point_closed_form_is_swap(self):
        b = local_translation_matrix(IntSet([0, 1]), Spectrum([0, Fraction(1, 2)]))
        assert b.matrix.equals(RootTable([[0, 1], [1, 0]]))

    def test_two_point_general_closed_form(self):
        # 2x2 entries (1 +/- e^(2 pi i gamma_1))/2 with gamma_1 = g/2^(c+1);
        # at c = 0 the phase is -1 and the matrix becomes the swap
        for c, g in [(0, 1), (1, 1), (1, 3), (2, 5)]:
            a = IntSet([0, 2**c])
            gamma = Spectrum([0, Fraction(g, 2 ** (c + 1))])
            b = local_translation_matrix(a, gamma)
            phase = np.exp(2j * np.pi * g / 2 ** (c + 1))
            expect = 0.5 * np.array(
                [[1 + phase, 1 - phase], [1 - phase, 1 + phase]], dtype=complex
            )
            assert np.allclose(b.matrix.to_complex(), expect, atol=1e-12)

    def test_unitary(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM)
        assert is_unitary(b.matrix, "exact")

    def test_rejects_non_spectrum(self):
        with pytest.raises(NotASpectrum):
            local_translation_matrix(IntSet([0, 1]), Spectrum([0, Fraction(1, 3)]))


class TestGroup:
    def test_t_zero_is_identity(self):
        assert local_group(N4_SET, N4_SPECTRUM, 0).is_identity()

    def test_t_one_is_translation_matrix(self):
        u1 = local_group(N4_SET, N4_SPECTRUM, 1)
        assert u1.equals(local_translation_matrix(N4_SET, N4_SPECTRUM).matrix)

    def test_two_point_closed_form_at_sampled_times(self):
        a = IntSet([0, 1])
        gamma = Spectrum([0, Fraction(1, 2)])
        for t in (0.3, -1.7, 2.25):
            u = local_group(a, gamma, t)
            phase = np.exp(1j * np.pi * t * 1)  # gamma_1 = 1/2, e^(2 pi i gamma_1 t)
            expect = 0.5 * np.array(
                [[1 + phase, 1 - phase], [1 - phase, 1 + phase]], dtype=complex
            )
            assert np.allclose(u, expect, atol=1e-12)

    def test_rational_group_law_exact(self):
        s, t = Fraction(1, 3), Fraction(3, 4)
        us = local_group(N4_SET, N4_SPECTRUM, s)
        ut = local_group(N4_SET, N4_SPECTRUM, t)
        ust = local_group(N4_SET, N4_SPECTRUM, s + t)
        assert mat_mul(us, ut).equals(ust)

    def test_adjoint_is_negative_time(self):
        u = local_group(N4_SET, N4_SPECTRUM, Fraction(1, 3))
        assert mat_adjoint(u).equals(local_group(N4_SET, N4_SPECTRUM, Fraction(-1, 3)))

    def test_float_group_law(self):
        s, t = 0.37, -1.21
        us = local_group(N4_SET, N4_SPECTRUM, s)
        ut = local_group(N4_SET, N4_SPECTRUM, t)
        ust = local_group(N4_SET, N4_SPECTRUM, s + t)
        assert np.allclose(us @ ut, ust, atol=1e-9)


class TestVerify:
    def test_n4_matrix_verifies(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM)
        assert verify_local_translation(b)

    def test_identity_fails_with_witness(self):
        check = verify_local_translation(RootTable.identity(2), IntSet([0, 1]))
        assert not check
        assert check.witness == (0, 1)

    def test_swap_is_local_translation_for_adjacent_pair(self):
        # direct: swap maps delta_0 to delta_1 and back
        assert verify_local_translation(RootTable([[0, 1], [1, 0]]), IntSet([0, 1]))

    def test_float_matrix(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM).matrix.to_complex()
        assert verify_local_translation(b, N4_SET)
        assert not verify_local_translation(np.eye(4, dtype=complex), N4_SET)

    def test_phase_freedom_still_verifies(self):
        # B = [[0, 1], [e^(i phi), 0]] satisfies the identity for any phase
        m = np.array([[0, 1], [np.exp(0.7j), 0]], dtype=complex)
        assert verify_local_translation(m, IntSet([0, 1]))


class TestEigencheck:
    def test_cyclic_shift_eigenvectors(self):
        for n in (2, 3, 5):
            b = local_translation_matrix(*full_residue_pair(n))
            assert all(ok for _, ok in eigencheck(b))

    def test_singleton(self):
        b = local_translation_matrix(IntSet([0]), Spectrum([0]))
        assert eigencheck(b) == [(Fraction(0), True)]

    def test_n4_all_verified(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM)
        assert eigencheck(b) == [(lam, True) for lam in N4_SPECTRUM]


class TestSpectrumRecovery:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_cyclic_shift_recovers_full_spectrum(self, n):
        a, g = full_residue_pair(n)
        assert spectrum_from_matrix(cyclic_shift(n), a) == g

    def test_one_by_one(self):
        assert spectrum_from_matrix(RootTable([[1]]), IntSet([0])) == Spectrum([0])

    def test_n4_round_trip(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM)
        assert spectrum_from_matrix(b.matrix, N4_SET) == N4_SPECTRUM

    def test_raw_swap_matrix(self):
        assert spectrum_from_matrix(RootTable([[0, 1], [1, 0]]), IntSet([0, 1])) == Spectrum(
            [0, Fraction(1, 2)]
        )

    def test_float_matrix_recovery(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM).matrix.to_complex()
        assert spectrum_from_matrix(b, N4_SET) == N4_SPECTRUM

    def test_identity_raises_not_local_translation(self):
        with pytest.raises(NotLocalTranslation) as err:
            spectrum_from_matrix(RootTable.identity(2), IntSet([0, 1]))
        assert err.value.witness == (0, 1)

    def test_degenerate_eigenvalues_flagged(self, monkeypatch):
        # with the tolerance loosened the identity passes the translation
        # check, and the repeated eigenvalue must still be caught
        monkeypatch.setenv(ENV_TOL, "10")
        with pytest.raises(DegenerateEigenvalue):
            spectrum_from_matrix(np.eye(2, dtype=complex), IntSet([0, 1]))

    def test_round_trip_over_search(self):
        a = IntSet([0, 2, 3])
        for g in search_spectra(a, 12):
            b = local_translation_matrix(a, g)
            assert spectrum_from_matrix(b.matrix, a) == g


class TestRescale:
    def test_identity_rescale(self):
        b = local_translation_matrix(N4_SET, N4_SPECTRUM)
        assert rescale(b, 1).matrix.equals(b.matrix)

    def test_two_point_rescale(self):
        b = local_translation_matrix(IntSet([0, 1]), Spectrum([0, Fraction(1, 2)]))
        scaled = rescale(b, 2)
        assert scaled.a == IntSet([0, 2])
        assert scaled.gamma == Spectrum([0, Fraction(1, 4)])
        assert mat_pow(scaled.matrix, 2).equals(RootTable([[0, 1], [1, 0]]))

    def test_three_point_rescale(self):
        b = local_translation_matrix(IntSet([0, 1, 2]), Spectrum([0, Fraction(1, 3), Fraction(2, 3)]))
        scaled = rescale(b, 3)
        assert scaled.a == IntSet([0, 3, 6])
        assert mat_pow(scaled.matrix, 3).equals(cyclic_shift(3))
