"""Tiling complements for spectral sets via the obstruction set Theta_B.

With 0 in Gamma and (r/d)Z the smallest lattice containing Gamma, the
powers of the local translation matrix B that move one canonical vector
onto a different one are exactly the integers congruent to a difference
a' - a (a != a' in A) mod d.  A set T with 0 in T tiles A to a complete
residue system mod d precisely when |T| |A| = d and no difference of
distinct elements of T lands in that residue set.  Both descriptions of
Theta_B are computed here and compared; complements found by backtracking
are re-verified by the direct partition check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    HypothesisViolation,
    NoComplementPossible,
    NotASpectrum,
    SpectralTilesError,
    ZeroSpectrum,
)
from .matrices import RootTable, mat_mul, mat_pow
from .spectra import IntSet, Spectrum, is_spectrum
from .translations import LocalTranslationMatrix, local_translation_matrix


@dataclass(frozen=True)
class LatticeDescriptor:
    """The lattice (r/d) Z, gcd(r, d) = 1."""

    r: int
    d: int

    @property
    def generator(self) -> Fraction:
        return Fraction(self.r, self.d)


@dataclass(frozen=True)
class ThetaSet:
    """Theta_B as residues mod d (it is d-periodic under the hypotheses)."""

    modulus: int
    residues: tuple[int, ...]

    def contains(self, m: int) -> bool:
        return (m % self.modulus) in self.residues


@dataclass(frozen=True)
class TilingCertificate:
    a: IntSet
    t: IntSet
    d: int


def lattice_of_spectrum(gamma: Spectrum) -> LatticeDescriptor:
    """Smallest (r/d)Z containing gamma: gcd of the nonzero elements.

    Uses the representatives stored in the Spectrum, so raw (unreduced)
    frequencies keep their own lattice.
    """
    if 0 not in gamma:
        raise HypothesisViolation("the spectrum must contain 0")
    nonzero = [f for f in gamma if f != 0]
    if not nonzero:
        raise ZeroSpectrum("the spectrum {0} generates no lattice")
    num = 0
    den = 1
    for f in nonzero:
        num = gcd(num, f.numerator)
        den = lcm(den, f.denominator)
    g = Fraction(num, den)
    return LatticeDescriptor(g.numerator, g.denominator)


def _theta_congruence(a: IntSet, d: int) -> tuple[int, ...]:
    """Residues (a' - a) mod d over ordered pairs a != a'."""
    res = {
        (y - x) % d
        for x in a
        for y in a
        if x != y
    }
    return tuple(sorted(res))


def _theta_matrix_scan(b: LocalTranslationMatrix, d: int) -> tuple[int, ...]:
    """Residues m for which B^m has a column equal to delta_a' off position a.

    Scans genuine matrix powers B^0 .. B^(d-1), exactly.
    """
    m = b.matrix
    n = m.rows
    res = []
    power = RootTable.identity(n)
    for k in range(d):
        hit = False
        for col in range(n):
            one_row = None
            canonical = True
            for row in range(n):
                if power.entry_equals(row, col, 1):
                    if one_row is not None:
                        canonical = False
                        break
                    one_row = row
                elif not power.entry_equals(row, col, 0):
                    canonical = False
                    break
            if canonical and one_row is not None and one_row != col:
                hit = True
                break
        if hit:
            res.append(k)
        power = mat_mul(power, m)
    return tuple(res)


def theta_set(a: IntSet, gamma: Spectrum) -> ThetaSet:
    """Theta_B residues mod d, congruence formula cross-checked by the scan."""
    if not is_spectrum(a, gamma):
        raise NotASpectrum(f"{gamma!r} is not a spectrum for {a!r}")
    if 0 not in gamma:
        raise HypothesisViolation("Theta_B needs 0 in the spectrum")
    lattice = lattice_of_spectrum(gamma)
    d = lattice.d
    residues = _theta_congruence(a, d)
    b = local_translation_matrix(a, gamma)
    scanned = _theta_matrix_scan(b, d)
    if scanned != residues:
        raise SpectralTilesError(
            f"internal: congruence residues {residues} != matrix scan {scanned}"
        )
    return ThetaSet(d, residues)


def verify_tiling(cert: TilingCertificate) -> bool:
    """Direct check that A + T hits every residue class mod d exactly once."""
    d = cert.d
    if len(cert.a) * len(cert.t) != d:
        return False
    seen = [False] * d
    for x in cert.a:
        for t in cert.t:
            r = (x + t) % d
            if seen[r]:
                return False
            seen[r] = True
    return all(seen)


def tiling_complements(a: IntSet, gamma: Spectrum, all_translates: bool = False) -> list[IntSet]:
    """All T in {0..d-1} with (T - T) avoiding Theta_B and |T| |A| = d.

    By default T is normalised to contain 0 (tilings are translation
    invariant); ``all_translates=True`` searches every translate.  Found
    complements are re-verified by the direct partition check, so each
    returned T certifies A (+) T = Z_d, hence A tiles Z by T (+) dZ.
    """
    theta = theta_set(a, gamma)
    d = theta.modulus
    n = len(a)
    if d % n:
        raise NoComplementPossible(f"|A| = {n} does not divide d = {d}")
    size = d // n
    blocked = set(theta.residues)
    found: list[IntSet] = []
    chosen: list[int] = [] if all_translates else [0]

    def extend(start: int):
        if len(chosen) == size:
            t = IntSet(chosen)
            if not verify_tiling(TilingCertificate(a, t, d)):
                raise SpectralTilesError(
                    f"internal: {t!r} passed the difference test but fails the partition check"
                )
            found.append(t)
            return
        for k in range(start, d - (size - len(chosen)) + 1):
            if all((k - c) % d not in blocked for c in chosen):
                chosen.append(k)
                extend(k + 1)
                chosen.pop()

    extend(0 if all_translates else 1)
    return found


def period_check(a: IntSet, gamma: Spectrum, d: int) -> bool:
    """B^d == I, compared against the denominator-divisibility predicate.

    The two must agree (rational spectra are exactly the periodic ones);
    disagreement raises an internal error.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if not is_spectrum(a, gamma):
        raise NotASpectrum(f"{gamma!r} is not a spectrum for {a!r}")
    b = local_translation_matrix(a, gamma)
    matrix_verdict = mat_pow(b.matrix, d).is_identity()
    arithmetic_verdict = all(d % lam.denominator == 0 for lam in gamma)
    if matrix_verdict != arithmetic_verdict:
        raise SpectralTilesError(
            "internal: matrix power and denominator divisibility disagree"
        )
    return matrix_verdict
