"""Local translation matrices and the one-parameter group U(t) on l2(A).

For a spectral pair (A, Gamma) the group is U(t) = F* D(t) F with F the
Fourier matrix of the pair and D(t) = diag(e^(2 pi i lambda t)).  B = U(1)
is the local translation matrix: the unitary with B^(a - a') delta_a =
delta_a' for all a, a' in A.  Existence of such a B characterises
spectrality, and the spectrum can be read back off B's eigenvalues; both
directions are implemented here with exact certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from .config import default_tolerance
from .cyclotomic import CycloSum, RootOfUnity, exp_sum
from .errors import (
    DegenerateEigenvalue,
    NotASpectrum,
    NotLocalTranslation,
    SpectralTilesError,
)
from .matrices import RootTable, is_unitary, mat_adjoint, mat_mul, mat_pow
from .spectra import IntSet, Spectrum, fourier_matrix, is_spectrum


@dataclass(frozen=True)
class LocalTranslationMatrix:
    """Exact unitary B = U(1) together with the pair it came from."""

    matrix: RootTable
    a: IntSet
    gamma: Spectrum


@dataclass(frozen=True)
class LocalTranslationCheck:
    ok: bool
    witness: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def diagonal_modulation(gamma: Spectrum, t) -> RootTable | np.ndarray:
    """D(t) = diag(e^(2 pi i lambda t)); exact for rational t, float otherwise."""
    if isinstance(t, (int, Fraction)):
        diag = [CycloSum.from_root(RootOfUnity.from_fraction(lam * Fraction(t))) for lam in gamma]
        return RootTable.diagonal(diag)
    return np.diag([np.exp(2j * np.pi * float(lam) * t) for lam in gamma])


def _group_entrywise(a: IntSet, gamma: Spectrum, t: Fraction) -> RootTable:
    """U(t) from the closed-form entries (1/N) sum_lambda e^(2 pi i (a-a'+t) lambda)."""
    rows = []
    for ai in a:
        row = []
        for aj in a:
            s = exp_sum((1, RootOfUnity.from_fraction((ai - aj + t) * lam)) for lam in gamma)
            row.append(s)
        rows.append(row)
    return RootTable(rows, Fraction(1, len(a)), 1)


def local_group(a: IntSet, gamma: Spectrum, t) -> RootTable | np.ndarray:
    """U(t) = F* D(t) F.  Exact RootTable at rational t, numpy matrix otherwise."""
    if not is_spectrum(a, gamma):
        raise NotASpectrum(f"{gamma!r} is not a spectrum for {a!r}")
    f = fourier_matrix(a, gamma)
    if isinstance(t, (int, Fraction)):
        u = mat_mul(mat_mul(mat_adjoint(f), diagonal_modulation(gamma, Fraction(t))), f)
        if not u.equals(_group_entrywise(a, gamma, Fraction(t))):
            raise SpectralTilesError("internal: conjugation and entrywise forms disagree")
        return u
    fc = f.to_complex()
    return fc.conj().T @ diagonal_modulation(gamma, float(t)) @ fc


def local_translation_matrix(a: IntSet, gamma: Spectrum) -> LocalTranslationMatrix:
    """B = U(1), exact, with the entrywise closed form cross-checked."""
    u = local_group(a, gamma, 1)
    return LocalTranslationMatrix(u, a, gamma)


def _canonical_column_exact(b: RootTable, power: RootTable, col: int, row_one: int) -> bool:
    return all(
        power.entry_equals(i, col, 1 if i == row_one else 0) for i in range(b.rows)
    )


def _exact_power_provider(b: RootTable):
    """m -> B^m with incremental caching; negative powers via the adjoint."""
    powers = {0: RootTable.identity(b.rows), 1: b, -1: mat_adjoint(b)}

    def get(m: int) -> RootTable:
        if m not in powers:
            step = 1 if m > 0 else -1
            powers[m] = mat_mul(get(m - step), powers[step])
        return powers[m]

    return get


def verify_local_translation(b, a: IntSet | None = None) -> LocalTranslationCheck:
    """Check B^(a-a') delta_a = delta_a' for every ordered pair in A^2.

    Accepts a LocalTranslationMatrix, or a raw RootTable / complex matrix
    together with ``a``.  Exact matrices are checked symbolically; float
    matrices against the default tolerance.  On failure the first failing
    ordered pair is reported as the witness.
    """
    if isinstance(b, LocalTranslationMatrix):
        matrix, a = b.matrix, b.a
    else:
        matrix = b
        if a is None:
            raise ValueError("a raw matrix needs the underlying integer set")
    n = len(a)
    if isinstance(matrix, RootTable):
        if matrix.rows != n or matrix.cols != n:
            return LocalTranslationCheck(False, None, "matrix size does not match |A|")
        if not is_unitary(matrix, "exact"):
            return LocalTranslationCheck(False, None, "matrix is not unitary")
        get = _exact_power_provider(matrix)
        index = {x: i for i, x in enumerate(a)}
        for x in a:
            for y in a:
                power = get(x - y)
                if not _canonical_column_exact(matrix, power, index[x], index[y]):
                    return LocalTranslationCheck(False, (x, y), "delta_a not mapped to delta_a'")
        return LocalTranslationCheck(True)
    matrix = np.asarray(matrix, dtype=complex)
    tol = default_tolerance()
    if matrix.shape != (n, n):
        return LocalTranslationCheck(False, None, "matrix size does not match |A|")
    if not is_unitary(matrix, "float", tol):
        return LocalTranslationCheck(False, None, "matrix is not unitary")
    index = {x: i for i, x in enumerate(a)}
    powers: dict[int, np.ndarray] = {0: np.eye(n, dtype=complex)}

    def get_f(m: int) -> np.ndarray:
        if m not in powers:
            base = matrix if m > 0 else matrix.conj().T
            cur = get_f(m - 1 if m > 0 else m + 1)
            powers[m] = cur @ base
        return powers[m]

    for x in a:
        for y in a:
            col = get_f(x - y)[:, index[x]]
            target = np.zeros(n, dtype=complex)
            target[index[y]] = 1.0
            if np.max(np.abs(col - target)) > tol:
                return LocalTranslationCheck(False, (x, y), "delta_a not mapped to delta_a'")
    return LocalTranslationCheck(True)


def eigencheck(b: LocalTranslationMatrix) -> list[tuple[Fraction, bool]]:
    """Certify B e_lambda = e^(2 pi i lambda) e_lambda for each lambda in Gamma."""
    m = b.matrix
    if m.root != 1:
        raise ValueError("eigencheck needs a rational-scaled matrix")
    p, q = m.scale.numerator, m.scale.denominator
    out = []
    for lam in b.gamma:
        vec = [CycloSum.from_root(RootOfUnity.from_fraction(lam * x)) for x in b.a]
        ok = True
        for i, ai in enumerate(b.a):
            lhs = CycloSum.zero(m.order)
            for j in range(m.cols):
                lhs = lhs + m.entries[i][j] * vec[j]
            rhs = CycloSum.from_root(RootOfUnity.from_fraction(lam * (ai + 1)))
            if not (lhs * p - rhs * q).is_zero():
                ok = False
                break
        out.append((lam, ok))
    return out


def _circle_distance(x: float, y: float) -> float:
    f = (x - y) % 1.0
    return min(f, 1.0 - f)


def _unit_eigenangles(m: np.ndarray) -> list[float]:
    """Eigenvalue angles/2pi in [0, 1), from the complex Schur form."""
    t, _ = scipy.linalg.schur(m, output="complex")
    return sorted((float(np.angle(e)) / (2 * np.pi)) % 1.0 for e in np.diag(t))


# Eigenvalues closer than this on the unit circle are treated as a
# multiplicity, which the local-translation property rules out.
DEGENERACY_THRESHOLD = 1e-6


def spectrum_from_matrix(b, a: IntSet) -> Spectrum:
    """Recover Gamma from a local translation matrix (eigenvalue angles / 2pi).

    Exact inputs are snapped to k/Q and re-certified by rebuilding the
    matrix from the recovered spectrum; float inputs are certified at the
    float tolerance only.  Raises NotLocalTranslation (with witness pair)
    when B fails the defining identity, DegenerateEigenvalue when a
    repeated eigenvalue shows the same.
    """
    check = verify_local_translation(b, a)
    if not check:
        raise NotLocalTranslation(
            check.reason
            + (f" (witness pair {check.witness})" if check.witness else ""),
            witness=check.witness,
        )
    exact = isinstance(b, RootTable)
    mirror = b.to_complex() if exact else np.asarray(b, dtype=complex)
    angles = _unit_eigenangles(mirror)
    for i in range(len(angles)):
        for j in range(i + 1, len(angles)):
            if _circle_distance(angles[i], angles[j]) < DEGENERACY_THRESHOLD:
                raise DegenerateEigenvalue(
                    f"eigenvalues at angles {angles[i]} and {angles[j]} coincide"
                )
    if exact:
        fracs = []
        for ang in angles:
            k = round(ang * b.order) % b.order
            snap = Fraction(k, b.order)
            if _circle_distance(ang, float(snap)) < DEGENERACY_THRESHOLD:
                fracs.append(snap)
            else:
                fracs.append(Fraction(ang).limit_denominator(10**6))
        gamma = Spectrum(fracs)
        if not is_spectrum(a, gamma):
            raise SpectralTilesError("recovered frequencies fail the exact spectrum test")
        rebuilt = local_translation_matrix(a, gamma).matrix
        if not rebuilt.equals(b):
            raise SpectralTilesError("recovered spectrum does not regenerate the matrix")
        return gamma
    gamma = Spectrum(Fraction(ang).limit_denominator(10**6) for ang in angles)
    if not is_spectrum(a, gamma, mode="float"):
        raise SpectralTilesError("recovered frequencies fail the float spectrum test")
    return gamma


def rescale(b: LocalTranslationMatrix, d: int) -> LocalTranslationMatrix:
    """The matrix for (d A, (1/d) Gamma); its d-th power equals the input."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    scaled = local_translation_matrix(b.a.scale(d), b.gamma.scale_down(d))
    if not mat_pow(scaled.matrix, d).equals(b.matrix):
        raise SpectralTilesError("internal: d-th power does not reproduce the original")
    return scaled
