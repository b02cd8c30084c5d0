"""Small dense matrices over the cyclotomic integers, plus float mirrors.

A RootTable holds an exact matrix scale/sqrt(root) * (entries), where the
entries are CycloSum values sharing one order Q, scale is rational and root
is a squarefree positive integer.  Fourier matrices carry root = N (the
1/sqrt(N) normalisation); products of two of them fold back to a rational
scale, which is why every local translation matrix is exactly rational-
scaled.  Float mirrors are plain numpy arrays.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm, sqrt

import numpy as np

from .config import default_tolerance
from .errors import DimensionMismatch
from .cyclotomic import CycloSum


def _split_square(n: int) -> tuple[int, int]:
    """n = s*s*r with r squarefree; returns (s, r)."""
    s, r = 1, n
    d = 2
    while d * d <= r:
        while r % (d * d) == 0:
            r //= d * d
            s *= d
        d += 1
    return s, r


class RootTable:
    """Exact complex matrix: (scale / sqrt(root)) * (CycloSum entries)."""

    __slots__ = ("order", "entries", "scale", "root", "_unitary")

    def __init__(self, entries, scale=Fraction(1), root: int = 1):
        rows = [list(r) for r in entries]
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("entries must form a non-empty rectangle")
        order = 1
        norm = []
        for r in rows:
            norm.append([e if isinstance(e, CycloSum) else CycloSum.integer(int(e)) for e in r])
        for r in norm:
            for e in r:
                order = lcm(order, e.order)
        if root < 1:
            raise ValueError("root must be a positive integer")
        s, r = _split_square(root)
        self.order = order
        self.entries = tuple(tuple(e.lift(order) for e in row) for row in norm)
        self.scale = Fraction(scale) / s
        self.root = r
        self._unitary = None

    # -- shape ---------------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def scale_squared(self) -> Fraction:
        """(scale/sqrt(root))^2, always rational."""
        return self.scale * self.scale / self.root

    # -- constructors ----------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RootTable":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag) -> "RootTable":
        diag = list(diag)
        n = len(diag)
        zero = CycloSum.zero()
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)])

    # -- conversions -----------------------------------------------------------

    def to_complex(self) -> np.ndarray:
        f = float(self.scale) / sqrt(self.root)
        return np.array([[e.approx * f for e in row] for row in self.entries], dtype=complex)

    # -- exact comparisons -------------------------------------------------------

    def entry_equals(self, i: int, j: int, value: Fraction | int) -> bool:
        """Does entry (i, j), scale included, equal the rational ``value``?

        Requires root == 1 (a nonzero rational entry cannot otherwise occur
        for the matrices this library builds).
        """
        value = Fraction(value)
        if self.root != 1:
            if value == 0:
                return self.entries[i][j].is_zero()
            raise ValueError("rational entry comparison needs a rational scale")
        p, q = self.scale.numerator, self.scale.denominator
        lhs = self.entries[i][j] * (p * value.denominator)
        return (lhs - value.numerator * q).is_zero()

    def is_identity(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.entry_equals(i, j, 1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def equals(self, other: "RootTable") -> bool:
        """Exact entrywise equality, scales folded in."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.root != other.root:
            raise ValueError("cannot compare exact matrices with different sqrt scales")
        pa, qa = self.scale.numerator, self.scale.denominator
        pb, qb = other.scale.numerator, other.scale.denominator
        for i in range(self.rows):
            for j in range(self.cols):
                lhs = self.entries[i][j] * (pa * qb)
                rhs = other.entries[i][j] * (pb * qa)
                if not (lhs - rhs).is_zero():
                    return False
        return True


def mat_mul(a: RootTable, b: RootTable) -> RootTable:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    q = lcm(a.order, b.order)
    left = [[e.lift(q) for e in row] for row in a.entries]
    right = [[e.lift(q) for e in row] for row in b.entries]
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = CycloSum.zero(q)
            for k in range(a.cols):
                acc = acc + left[i][k] * right[k][j]
            row.append(acc)
        out.append(row)
    return RootTable(out, a.scale * b.scale, a.root * b.root)


def mat_adjoint(a: RootTable) -> RootTable:
    ent = [[a.entries[i][j].conjugate() for i in range(a.rows)] for j in range(a.cols)]
    return RootTable(ent, a.scale, a.root)


def mat_pow(a: RootTable, k: int) -> RootTable:
    """a**k by binary powering; k < 0 requires an exact unitarity certificate."""
    if not a.is_square:
        raise DimensionMismatch("powers need a square matrix")
    if k < 0:
        if not is_unitary(a, mode="exact"):
            raise ValueError("negative powers require a unitary matrix")
        return mat_pow(mat_adjoint(a), -k)
    result = RootTable.identity(a.rows)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def is_unitary(m: RootTable | np.ndarray, mode: str = "exact", tol: float | None = None) -> bool:
    """Is m*m == I?  Exact mode certifies via vanishing root-of-unity sums."""
    if isinstance(m, np.ndarray):
        if mode == "exact":
            raise ValueError("exact mode needs a RootTable")
        return is_unitary_float(m, tol)
    if not m.is_square:
        return False
    if mode == "float":
        return is_unitary_float(m.to_complex(), tol)
    if mode != "exact":
        raise ValueError("mode must be 'exact' or 'float'")
    if m._unitary is not None:
        return m._unitary
    t = m.scale_squared
    verdict = True
    n = m.rows
    for i in range(n):
        for j in range(i, n):
            s = CycloSum.zero(m.order)
            for r in range(n):
                s = s + m.entries[r][i].conjugate() * m.entries[r][j]
            target = Fraction(1) / t if i == j else Fraction(0)
            if not (s * target.denominator - target.numerator).is_zero():
                verdict = False
                break
        if not verdict:
            break
    m._unitary = verdict
    return verdict


def is_unitary_float(m: np.ndarray, tol: float | None = None) -> bool:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if tol is None:
        tol = default_tolerance()
    gram = m.conj().T @ m
    return bool(np.max(np.abs(gram - np.eye(m.shape[0]))) <= tol)
