"""Spectrum verification, Fourier matrices, and the exhaustive search."""

import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_tiles.cyclotomic import CycloSum
from spectral_tiles.errors import DimensionMismatch, NotAHadamardPair
from spectral_tiles.matrices import RootTable, is_unitary
from spectral_tiles.spectra import (
    IntSet,
    Spectrum,
    fourier_matrix,
    is_spectrum,
    make_hadamard_pair,
    search_spectra,
)

N4_SET = IntSet([0, 1, 4, 5])
N4_SPECTRUM = Spectrum([0, Fraction(1, 8), Fraction(1, 2), Fraction(5, 8)])


def brute_force_spectra(a: IntSet, r: int, tol: float = 1e-9) -> list[tuple[Fraction, ...]]:
    """Independent oracle: enumerate subsets of {k/r} containing 0 and test
    pairwise orthogonality with plain floating exponential sums."""
    n = len(a)
    found = []
    for rest in itertools.combinations(range(1, r), n - 1):
        cand = (0,) + rest
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                diff = (cand[j] - cand[i]) / r
                s = sum(cmath.exp(2j * cmath.pi * diff * x) for x in a)
                if abs(s) > tol:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(Fraction(k, r) for k in cand))
    return found


class TestIsSpectrum:
    def test_two_point_half(self):
        assert is_spectrum(IntSet([0, 1]), Spectrum([0, Fraction(1, 2)]))

    def test_n4_example(self):
        assert is_spectrum(N4_SET, N4_SPECTRUM)

    def test_third_rejected(self):
        # oracle: |1 + e^(2 pi i / 3)| = 1, far from zero
        assert abs(1 + cmath.exp(2j * cmath.pi / 3)) == pytest.approx(1.0)
        assert not is_spectrum(IntSet([0, 1]), Spectrum([0, Fraction(1, 3)]))

    def test_singleton(self):
        assert is_spectrum(IntSet([0]), Spectrum([0]))

    def test_size_mismatch_is_false(self):
        assert not is_spectrum(IntSet([0, 1]), Spectrum([0]))

    def test_float_mode_matches_exact_on_rationals(self):
        vals = [0.0, 0.125, 0.5, 0.625]
        assert is_spectrum(N4_SET, vals, mode="float")
        assert not is_spectrum(IntSet([0, 1]), [0.0, 1 / 3], mode="float")

    def test_exact_mode_rejects_floats(self):
        with pytest.raises(ValueError):
            is_spectrum(IntSet([0, 1]), [0.0, 0.5], mode="exact")

    def test_matches_fourier_unitarity(self):
        for a, g in [
            (IntSet([0, 1]), Spectrum([0, Fraction(1, 2)])),
            (IntSet([0, 1]), Spectrum([0, Fraction(1, 3)])),
            (N4_SET, N4_SPECTRUM),
            (IntSet([0, 1, 2]), Spectrum([0, Fraction(1, 3), Fraction(2, 3)])),
            (IntSet([0, 1, 2]), Spectrum([0, Fraction(1, 4), Fraction(2, 4)])),
        ]:
            assert is_spectrum(a, g) == is_unitary(fourier_matrix(a, g), "exact")


class TestFourierMatrix:
    def test_standard_hadamard_for_full_residues(self):
        for n in (2, 3, 4, 5):
            a = IntSet(range(n))
            g = Spectrum(Fraction(k, n) for k in range(n))
            f = fourier_matrix(a, g)
            expect = RootTable(
                [[CycloSum.from_root_exp(n, (-j * k) % n) for k in range(n)] for j in range(n)],
                Fraction(1),
                n,
            )
            assert f.equals(expect)

    def test_one_by_one(self):
        f = fourier_matrix(IntSet([0]), Spectrum([0]))
        assert f.is_identity()

    def test_n4_matches_displayed_matrix_up_to_ordering(self):
        # the 4x4 matrix in pattern order (0, 4, 1, 5) with rho = exp(-pi i/4):
        # entries as order-8 exponents; -1 = exp 4, rho = exp 7, -rho = exp 3
        f = fourier_matrix(N4_SET, N4_SPECTRUM)
        pattern = [
            [0, 0, 0, 0],
            [0, 0, 4, 4],
            [0, 4, 7, 3],
            [0, 4, 3, 7],
        ]
        expect = RootTable(
            [[CycloSum.from_root_exp(8, e) for e in row] for row in pattern], Fraction(1), 4
        )
        perm = [0, 2, 1, 3]  # sorted (0,1,4,5) -> pattern (0,4,1,5); same for spectra
        permuted = RootTable(
            [[f.entries[perm[i]][perm[j]] for j in range(4)] for i in range(4)],
            f.scale,
            f.root,
        )
        assert permuted.equals(expect)

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatch):
            fourier_matrix(IntSet([0, 1]), Spectrum([0]))


class TestSearchSpectra:
    def test_two_point_r2(self):
        assert search_spectra(IntSet([0, 1]), 2) == [Spectrum([0, Fraction(1, 2)])]

    def test_even_pair_r4(self):
        got = search_spectra(IntSet([0, 2]), 4)
        assert got == [Spectrum([0, Fraction(1, 4)]), Spectrum([0, Fraction(3, 4)])]

    def test_non_residue_triple_r9(self):
        assert search_spectra(IntSet([0, 1, 3]), 9) == []

    @pytest.mark.parametrize(
        "a,r",
        [
            ([0, 1], 6),
            ([0, 2], 8),
            ([0, 1, 2], 9),
            ([0, 1, 4, 5], 8),
            ([0, 1, 2, 3], 8),
            ([0, 3], 12),
            ([0, 1, 3], 12),
        ],
    )
    def test_matches_brute_force(self, a, r):
        got = [g.elements for g in search_spectra(IntSet(a), r)]
        assert got == brute_force_spectra(IntSet(a), r)

    def test_results_are_certified_and_sorted(self):
        a = IntSet([0, 1, 4, 5])
        found = search_spectra(a, 16)
        assert found == sorted(found, key=lambda g: g.elements)
        for g in found:
            assert 0 in g
            assert is_spectrum(a, g)

    def test_singleton_set(self):
        assert search_spectra(IntSet([0]), 5) == [Spectrum([0])]


class TestHadamardPair:
    def test_n4_pair(self):
        pair = make_hadamard_pair(N4_SET, IntSet([0, 1, 4, 5]), 8)
        assert pair.spectrum == N4_SPECTRUM

    def test_two_point_pair(self):
        pair = make_hadamard_pair(IntSet([0, 1]), IntSet([0, 1]), 2)
        assert pair.spectrum == Spectrum([0, Fraction(1, 2)])

    def test_bad_scaling_rejected_with_witness(self):
        with pytest.raises(NotAHadamardPair) as err:
            make_hadamard_pair(IntSet([0, 1]), IntSet([0, 1]), 3)
        assert err.value.witness == (Fraction(0), Fraction(1, 3))

    def test_collision_mod_one_rejected(self):
        with pytest.raises(NotAHadamardPair):
            make_hadamard_pair(IntSet([0, 1]), IntSet([0, 8]), 8)


small_sets = st.lists(st.integers(-10, 10), min_size=1, max_size=4, unique=True)


class TestInvariances:
    @settings(max_examples=60, deadline=None)
    @given(small_sets, st.integers(-5, 5), st.fractions(min_value=-2, max_value=2, max_denominator=12))
    def test_translation_invariance(self, elems, c, q):
        a = IntSet(elems)
        spectra = search_spectra(a, 8)
        for g in spectra[:2]:
            assert is_spectrum(a.translate(c), g)
            assert is_spectrum(a, g.translate(q))

    @settings(max_examples=40, deadline=None)
    @given(small_sets, st.integers(1, 4))
    def test_rescaling(self, elems, d):
        a = IntSet(elems)
        for g in search_spectra(a, 8)[:2]:
            assert is_spectrum(a.scale(d), g.scale_down(d))

    def test_spectrum_reduces_mod_one(self):
        g = Spectrum([Fraction(9, 8), Fraction(-1, 2), 0])
        assert g.elements == (Fraction(0), Fraction(1, 8), Fraction(1, 2))

    def test_raw_spectrum_keeps_representatives(self):
        g = Spectrum([0, Fraction(3, 4), Fraction(3, 2)], reduce_mod_1=False)
        assert g.elements == (Fraction(0), Fraction(3, 4), Fraction(3, 2))

    def test_duplicate_mod_one_rejected(self):
        with pytest.raises(ValueError):
            Spectrum([0, 1])
