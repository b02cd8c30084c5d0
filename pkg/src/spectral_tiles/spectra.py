"""Integer sets, candidate spectra, and the Hadamard-pair verdict.

A finite A in Z is spectral when some set Gamma of frequencies makes the
exponentials {e_lambda : lambda in Gamma} an orthogonal basis of l2(A),
equivalently when the N x N matrix (1/sqrt(N)) (e^(2 pi i lambda a)) is
unitary.  For rational Gamma every orthogonality check is a vanishing sum
of roots of unity and is decided exactly; irrational candidates only pass
through the float path and are never certified.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm

from .config import default_tolerance
from .cyclotomic import CycloSum, RootOfUnity, exp_sum
from .errors import DimensionMismatch, NotAHadamardPair
from .matrices import RootTable


class IntSet:
    """Finite set of distinct integers, kept sorted."""

    __slots__ = ("elements",)

    def __init__(self, elements):
        elems = tuple(sorted(int(x) for x in elements))
        if not elems:
            raise ValueError("IntSet must be nonempty")
        if any(a == b for a, b in zip(elems, elems[1:])):
            raise ValueError("IntSet elements must be distinct")
        self.elements = elems

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        return isinstance(other, IntSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"IntSet({list(self.elements)})"

    def translate(self, c: int) -> "IntSet":
        return IntSet(x + c for x in self.elements)

    def scale(self, d: int) -> "IntSet":
        if d == 0:
            raise ValueError("scale factor must be nonzero")
        return IntSet(d * x for x in self.elements)


class Spectrum:
    """Finite set of distinct rationals, canonically reduced mod 1.

    Pass ``reduce_mod_1=False`` to keep raw representatives (used e.g. when
    the minimal lattice of unreduced frequencies is wanted).
    """

    __slots__ = ("elements",)

    def __init__(self, values, reduce_mod_1: bool = True):
        fracs = [Fraction(v) for v in values]
        if reduce_mod_1:
            fracs = [f - floor(f) for f in fracs]
        fracs = sorted(fracs)
        if not fracs:
            raise ValueError("Spectrum must be nonempty")
        if any(a == b for a, b in zip(fracs, fracs[1:])):
            raise ValueError("Spectrum elements must be distinct (mod 1)")
        self.elements = tuple(fracs)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return Fraction(x) in self.elements

    def __eq__(self, other):
        return isinstance(other, Spectrum) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Spectrum([{', '.join(str(f) for f in self.elements)}])"

    @property
    def denominator(self) -> int:
        """lcm of element denominators; order of every root of unity used."""
        return lcm(*(f.denominator for f in self.elements))

    def translate(self, q) -> "Spectrum":
        return Spectrum((f + Fraction(q) for f in self.elements))

    def scale_down(self, d: int) -> "Spectrum":
        """(1/d) * Gamma, reduced mod 1."""
        if d < 1:
            raise ValueError("d must be a positive integer")
        return Spectrum((f / d for f in self.elements))


def _as_fractions(gamma) -> list[Fraction] | None:
    """Fractions for Spectrum/rational input, None if anything is irrational."""
    values = list(gamma)
    out = []
    for v in values:
        if isinstance(v, Fraction) or isinstance(v, int):
            out.append(Fraction(v))
        else:
            return None
    return out


def first_nonorthogonal_pair(a: IntSet, fracs: list[Fraction]):
    """Witness (lambda, lambda') whose exponential sum over A is nonzero."""
    for i in range(len(fracs)):
        for j in range(i + 1, len(fracs)):
            diff = fracs[j] - fracs[i]
            s = exp_sum((1, RootOfUnity.from_fraction(diff * x)) for x in a)
            if not s.is_zero():
                return fracs[i], fracs[j]
    return None


def is_spectrum(a: IntSet, gamma, mode: str = "exact", tol: float | None = None) -> bool:
    """Is gamma a spectrum for a?

    True iff |a| = |gamma| and every pair of distinct frequencies is
    orthogonal over a.  Exact mode demands rational frequencies and
    certifies each vanishing exponential sum symbolically; float mode
    compares magnitudes against ``tol`` and certifies nothing.
    """
    values = list(gamma.elements if isinstance(gamma, Spectrum) else gamma)
    if len(a) != len(values) or len(set(values)) != len(values):
        return False
    if mode == "exact":
        fracs = _as_fractions(values)
        if fracs is None:
            raise ValueError("exact mode needs rational frequencies; use mode='float'")
        return first_nonorthogonal_pair(a, fracs) is None
    if mode != "float":
        raise ValueError("mode must be 'exact' or 'float'")
    if tol is None:
        tol = default_tolerance()
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            diff = float(values[j]) - float(values[i])
            s = sum(cmath.exp(2j * cmath.pi * diff * x) for x in a)
            if abs(s) > tol:
                return False
    return True


def fourier_matrix(a: IntSet, gamma: Spectrum) -> RootTable:
    """(1/sqrt(N)) (e^(-2 pi i lambda a)), rows sorted by gamma, cols by a.

    The 1/sqrt(N) normalisation is carried symbolically (root = N).
    """
    if len(a) != len(gamma):
        raise DimensionMismatch("set and spectrum must have equal size")
    n = len(a)
    q = gamma.denominator
    rows = []
    for lam in gamma:
        row = []
        for x in a:
            k = (-lam.numerator * x * (q // lam.denominator)) % q
            c = [0] * q
            c[k] = 1
            row.append(CycloSum(q, c))
        rows.append(row)
    return RootTable(rows, Fraction(1), n)


def search_spectra(a: IntSet, max_denominator: int) -> list[Spectrum]:
    """All spectra inside (1/R)Z mod 1 that contain 0, R = max_denominator.

    Exhaustive with partial-orthogonality pruning: a residue k may join the
    candidate only if k - k' is an orthogonality residue for every k'
    already chosen.  Output is sorted and exact-certified by construction.
    Finding nothing here never proves A non-spectral: denominators of
    spectra are not bounded in general, so callers sweep R.
    """
    r = int(max_denominator)
    if r < 1:
        raise ValueError("max_denominator must be positive")
    n = len(a)
    if n > r:
        return []
    ok = _orthogonal_residues(a.elements, r)
    found: list[Spectrum] = []
    chosen = [0]

    def extend(start: int):
        if len(chosen) == n:
            found.append(Spectrum(Fraction(k, r) for k in chosen))
            return
        # not enough residues left to finish
        for k in range(start, r - (n - len(chosen)) + 1):
            if all(ok[(k - c) % r] for c in chosen):
                chosen.append(k)
                extend(k + 1)
                chosen.pop()

    extend(1)
    return found


def _orthogonal_residues(elements: tuple[int, ...], r: int) -> list[bool]:
    """ok[k] == True iff sum over A of exp(2 pi i k x / r) vanishes."""
    ok = [False] * r
    for k in range(1, r):
        c = [0] * r
        for x in elements:
            c[(k * x) % r] += 1
        ok[k] = CycloSum(r, c).is_zero()
    return ok


@dataclass(frozen=True)
class HadamardPair:
    """Integer pair (A, L) with (1/R) L a spectrum for A; verified on build."""

    a: IntSet
    l: IntSet
    r: int

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum(Fraction(x, self.r) for x in self.l)


def make_hadamard_pair(a: IntSet, l: IntSet, r: int) -> HadamardPair:
    """Construct and verify; raises NotAHadamardPair with the first failing pair."""
    if r < 1:
        raise ValueError("scaling factor must be a positive integer")
    if len(a) != len(l):
        raise NotAHadamardPair(f"|A| = {len(a)} but |L| = {len(l)}")
    fracs = [Fraction(x, r) for x in l]
    seen: dict[Fraction, Fraction] = {}
    for f in fracs:
        key = f - floor(f)
        if key in seen:
            raise NotAHadamardPair(
                f"frequencies {seen[key]} and {f} coincide mod 1", witness=(seen[key], f)
            )
        seen[key] = f
    witness = first_nonorthogonal_pair(a, sorted(seen))
    if witness is not None:
        raise NotAHadamardPair(
            f"exponentials at {witness[0]} and {witness[1]} are not orthogonal over A",
            witness=witness,
        )
    return HadamardPair(a, l, r)
