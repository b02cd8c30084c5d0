"""Small-cardinality classification and the Fuglede desk check on Z_n.

Sizes 2, 3 and 5 (prime, with only the standard Hadamard matrix up to
equivalence): A containing 0 is spectral iff A = N^k A0 with A0 a complete
set of residues mod N.  Size 4 admits a two-adic parametrization of all
Hadamard pairs; matching a pair against it must agree with the direct
orthogonality verdict.  The desk check enumerates subsets of Z_n and
compares "tiles Z_n" with "has a spectrum inside (1/n)Z", reporting any
set where the verdicts differ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import HypothesisViolation, UnsupportedCardinality
from .spectra import IntSet, Spectrum, is_spectrum, search_spectra


@dataclass(frozen=True)
class ClassificationVerdict:
    """Spectrality verdict for |A| in {2, 3, 5} with the decomposition used.

    ``witness`` is the canonical spectrum {j / N^(k+1)} when spectral.
    Negative verdicts follow from the classification of small Hadamard
    matrices; ``sweep_bound`` records the denominator up to which a
    brute-force search can independently confirm them.
    """

    spectral: bool
    witness: Spectrum | None
    power: int
    reduced_set: IntSet
    sweep_bound: int


def classify_small(a: IntSet) -> ClassificationVerdict:
    """Decide spectrality of A (0 in A, |A| in {2, 3, 5}) by factoring A = N^k A0."""
    n = len(a)
    if n not in (2, 3, 5):
        raise UnsupportedCardinality(f"classification covers sizes 2, 3, 5; got {n}")
    if 0 not in a:
        raise HypothesisViolation("classification assumes 0 in A")
    g = 0
    for x in a:
        g = gcd(g, x)
    k = 0
    while g % n == 0:
        g //= n
        k += 1
    scale = n**k
    reduced = IntSet(x // scale for x in a)
    complete = sorted(x % n for x in reduced) == list(range(n))
    bound = n ** (k + 1)
    if not complete:
        return ClassificationVerdict(False, None, k, reduced, bound)
    witness = Spectrum(Fraction(j, bound) for j in range(n))
    if not is_spectrum(a, witness):
        raise AssertionError("canonical witness failed the exact spectrum test")
    if witness not in search_spectra(a, bound):
        raise AssertionError("canonical witness not found by the exhaustive search")
    return ClassificationVerdict(True, witness, k, reduced, bound)


@dataclass(frozen=True)
class N4Params:
    """The two-adic pattern behind every size-4 Hadamard pair.

    A = 2^set_shift  * {0, 2^gap * set_odds[0], set_odds[1],
                        set_odds[1] + 2^gap * set_odds[2]}
    L = 2^freq_shift * {0, freq_odds[0], freq_odds[0] + 2^gap * freq_odds[1],
                        2^gap * freq_odds[2]}
    R = 2^(set_shift + freq_shift + gap + 1) * extra

    All six odd parts are odd integers, gap >= 1, and extra divides each of
    set_odds[0] * gcd(freq_odds), set_odds[2] * gcd(freq_odds),
    freq_odds[1] * gcd(set_odds), freq_odds[2] * gcd(set_odds).
    """

    set_shift: int
    freq_shift: int
    gap: int
    set_odds: tuple[int, int, int]
    freq_odds: tuple[int, int, int]
    extra: int

    @property
    def scaling_factor(self) -> int:
        return 2 ** (self.set_shift + self.freq_shift + self.gap + 1) * self.extra

    def build_set(self) -> IntSet:
        c1, c2, c3 = self.set_odds
        return IntSet(
            2**self.set_shift * x for x in (0, 2**self.gap * c1, c2, c2 + 2**self.gap * c3)
        )

    def build_freq_set(self) -> IntSet:
        n1, n2, n3 = self.freq_odds
        return IntSet(
            2**self.freq_shift * x for x in (0, n1, n1 + 2**self.gap * n2, 2**self.gap * n3)
        )


def _two_adic(x: int) -> int:
    v = 0
    x = abs(x)
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def _split_pattern(values: tuple[int, ...]) -> tuple[int, int, list[int]] | None:
    """(shift, gap, [even_odd_part, odd1, odd2]) for {0, even, odd, odd}/2^shift."""
    nonzero = [x for x in values if x]
    if len(nonzero) != 3 or 0 not in values:
        return None
    shift = min(_two_adic(x) for x in nonzero)
    primitive = [x // (1 << shift) for x in nonzero]
    odds = [x for x in primitive if x % 2]
    evens = [x for x in primitive if x % 2 == 0]
    if len(odds) != 2 or len(evens) != 1:
        return None
    gap = _two_adic(evens[0])
    return shift, gap, [evens[0] // (2**gap), odds[0], odds[1]]


def match_n4(a: IntSet, l: IntSet, r: int) -> N4Params | None:
    """Solve the size-4 pattern for (A, L, R); None when no assignment fits.

    A successful match certifies the Hadamard-pair property (the pattern is
    an if-and-only-if), which callers can confirm with ``is_spectrum``.
    """
    if len(a) != 4 or len(l) != 4:
        raise UnsupportedCardinality("the pattern covers size-4 pairs only")
    if 0 not in a or 0 not in l:
        raise HypothesisViolation("both sets must contain 0")
    if r < 1:
        raise ValueError("scaling factor must be a positive integer")
    pat_a = _split_pattern(a.elements)
    pat_l = _split_pattern(l.elements)
    if pat_a is None or pat_l is None:
        return None
    set_shift, gap_a, (c1, oa1, oa2) = pat_a
    freq_shift, gap_l, (n3, ol1, ol2) = pat_l
    if gap_a != gap_l or gap_a < 1:
        return None
    gap = gap_a
    denom = 2 ** (set_shift + freq_shift + gap + 1)
    if r % denom:
        return None
    extra = r // denom
    for c2, other_a in ((oa1, oa2), (oa2, oa1)):
        diff_a = other_a - c2
        if _two_adic(diff_a) != gap:
            continue
        c3 = diff_a // (2**gap)
        for n1, other_l in ((ol1, ol2), (ol2, ol1)):
            diff_l = other_l - n1
            if _two_adic(diff_l) != gap:
                continue
            n2 = diff_l // (2**gap)
            c = gcd(gcd(abs(c1), abs(c2)), abs(c3))
            nn = gcd(gcd(abs(n1), abs(n2)), abs(n3))
            if any(v % extra for v in (c1 * nn, c3 * nn, n2 * c, n3 * c)):
                continue
            return N4Params(set_shift, freq_shift, gap, (c1, c2, c3), (n1, n2, n3), extra)
    return None


@dataclass(frozen=True)
class FugledeRecord:
    a: IntSet
    tiles: bool
    complement: IntSet | None
    spectral: bool
    spectrum: Spectrum | None

    @property
    def discrepant(self) -> bool:
        return self.tiles != self.spectral


@dataclass(frozen=True)
class FugledeReport:
    """Tile-vs-spectral comparison over subsets of Z_n.

    "Spectral" here means: has a spectrum inside (1/n)Z -- a restriction of
    the general notion, stated in the record scope on purpose.
    """

    n: int
    max_size: int
    records: tuple[FugledeRecord, ...]

    @property
    def discrepancies(self) -> tuple[FugledeRecord, ...]:
        return tuple(rec for rec in self.records if rec.discrepant)


def _tiling_complement_zn(elements: tuple[int, ...], n: int) -> IntSet | None:
    """First T with 0 in T and A (+) T = Z_n, exact-cover backtracking."""
    base = tuple(x % n for x in elements)
    size = len(base)
    if n % size:
        return None
    want = n // size
    covered = bytearray(n)
    chosen: list[int] = []

    def fits(t: int) -> bool:
        return all(not covered[(x + t) % n] for x in base)

    def place(t: int, flag: int):
        for x in base:
            covered[(x + t) % n] = flag

    def rec() -> bool:
        if len(chosen) == want:
            return True
        x0 = covered.index(0)
        for x in base:
            t = (x0 - x) % n
            if fits(t):
                place(t, 1)
                chosen.append(t)
                if rec():
                    return True
                chosen.pop()
                place(t, 0)
        return False

    if not fits(0):
        return None  # duplicate residues in A itself
    place(0, 1)
    chosen.append(0)
    if rec():
        return IntSet(chosen)
    return None


def fuglede_zn(n: int, max_size: int) -> FugledeReport:
    """Compare tiling of Z_n with spectrality in (1/n)Z over all candidate A.

    Covers every A contained in {0..n-1} with 0 in A, |A| <= max_size and
    |A| dividing n.  Each record carries certificates (a complement, a
    spectrum) when the respective verdict is positive.
    """
    if n < 1 or n > 30:
        raise ValueError("desk check supports 1 <= n <= 30")
    if max_size < 1 or max_size > n:
        raise ValueError("max_size must lie in [1, n]")
    records = []
    for size in range(1, max_size + 1):
        if n % size:
            continue
        for rest in itertools.combinations(range(1, n), size - 1):
            a = IntSet((0,) + rest)
            complement = _tiling_complement_zn(a.elements, n)
            spectra = search_spectra(a, n)
            records.append(
                FugledeRecord(
                    a=a,
                    tiles=complement is not None,
                    complement=complement,
                    spectral=bool(spectra),
                    spectrum=spectra[0] if spectra else None,
                )
            )
    return FugledeReport(n, max_size, tuple(records))
