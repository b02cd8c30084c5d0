"""Exact arithmetic with integer combinations of roots of unity.

An element sum_k c_k * w^k with w = exp(2*pi*i/Q) and integer c_k lives in
the group ring Z[Z_Q].  Deciding whether such a sum vanishes is the one
exact primitive everything else (unitarity certificates, orthogonality of
exponentials, matrix identities) reduces to.  The decision procedure
rewrites the coefficient vector on the tensor power basis of the cyclotomic
integers: for every prime p dividing Q the relation

    1 + w^(Q/p) + w^(2Q/p) + ... + w^((p-1)Q/p) = 0

eliminates, coset by coset, every exponent whose top p-adic digit equals
p - 1.  What survives is a coordinate vector on a Z-basis, so the sum is
zero exactly when all coordinates are.  Coefficients are plain Python
integers, hence arbitrary precision; no overflow is possible.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _reduction_plan(order: int) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """Per-prime elimination steps for Z[Z_order] -> power-basis coordinates.

    For each prime p | order (with p^e exactly dividing it), the exponents k
    whose digit (k mod p^e) // p^(e-1) equals p - 1 get rewritten onto the
    other p - 1 members of their coset k + (order/p)Z.  Digits for distinct
    primes do not interfere, so one pass per prime suffices.
    """
    plan = []
    for p, e in _factorize(order):
        pe, pe1 = p**e, p ** (e - 1)
        victims = tuple(k for k in range(order) if (k % pe) // pe1 == p - 1)
        plan.append((p, order // p, victims))
    return tuple(plan)


@lru_cache(maxsize=65536)
def _reduce_cached(order: int, coeffs: tuple[int, ...]) -> tuple[int, ...]:
    c = list(coeffs)
    for p, shift, victims in _reduction_plan(order):
        for k in victims:
            v = c[k]
            if v:
                c[k] = 0
                for a in range(1, p):
                    c[(k + a * shift) % order] -= v
    return tuple(c)


@dataclass(frozen=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/order), stored in lowest terms."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        k = self.exponent % self.order
        g = gcd(k, self.order)
        object.__setattr__(self, "exponent", k // g)
        object.__setattr__(self, "order", self.order // g)

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "RootOfUnity":
        """exp(2*pi*i*q) for rational q."""
        q = Fraction(q)
        return cls(q.denominator, q.numerator % q.denominator)

    @property
    def turns(self) -> Fraction:
        return Fraction(self.exponent, self.order)

    @property
    def value(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exponent / self.order)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        q = lcm(self.order, other.order)
        return RootOfUnity(
            q,
            self.exponent * (q // self.order) + other.exponent * (q // other.order),
        )

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)


class CycloSum:
    """Integer combination of Q-th roots of unity with exact zero testing.

    Immutable.  ``coeffs[k]`` is the coefficient of exp(2*pi*i*k/order).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 1:
            raise ValueError("order must be positive")
        if coeffs is None:
            coeffs = (0,) * order
        else:
            coeffs = tuple(int(v) for v in coeffs)
            if len(coeffs) != order:
                raise ValueError("coefficient vector must have length = order")
        self.order = order
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "CycloSum":
        return cls(order)

    @classmethod
    def integer(cls, value: int, order: int = 1) -> "CycloSum":
        c = [0] * order
        c[0] = int(value)
        return cls(order, c)

    @classmethod
    def from_root(cls, root: RootOfUnity, coeff: int = 1) -> "CycloSum":
        c = [0] * root.order
        c[root.exponent] = int(coeff)
        return cls(root.order, c)

    @classmethod
    def from_root_exp(cls, order: int, exponent: int, coeff: int = 1) -> "CycloSum":
        return cls.from_root(RootOfUnity(order, exponent), coeff)

    # -- ring operations ---------------------------------------------------

    def lift(self, order: int) -> "CycloSum":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("can only lift to a multiple of the current order")
        f = order // self.order
        c = [0] * order
        for k, v in enumerate(self.coeffs):
            if v:
                c[k * f] = v
        return CycloSum(order, c)

    def _pair(self, other):
        if isinstance(other, int):
            other = CycloSum.integer(other)
        q = lcm(self.order, other.order)
        return self.lift(q), other.lift(q)

    def __add__(self, other) -> "CycloSum":
        a, b = self._pair(other)
        return CycloSum(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __sub__(self, other) -> "CycloSum":
        a, b = self._pair(other)
        return CycloSum(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other) -> "CycloSum":
        return (-self) + other

    def __neg__(self) -> "CycloSum":
        return CycloSum(self.order, [-v for v in self.coeffs])

    def __mul__(self, other) -> "CycloSum":
        if isinstance(other, int):
            return CycloSum(self.order, [v * other for v in self.coeffs])
        a, b = self._pair(other)
        q = a.order
        out = [0] * q
        nz = [(k, v) for k, v in enumerate(b.coeffs) if v]
        for k1, v1 in enumerate(a.coeffs):
            if v1:
                for k2, v2 in nz:
                    out[(k1 + k2) % q] += v1 * v2
        return CycloSum(q, out)

    __rmul__ = __mul__

    def conjugate(self) -> "CycloSum":
        q = self.order
        c = [0] * q
        for k, v in enumerate(self.coeffs):
            if v:
                c[(-k) % q] = v
        return CycloSum(q, c)

    # -- exact decisions ----------------------------------------------------

    def reduced(self) -> tuple[int, ...]:
        """Coordinates on the tensor power basis (zero padding elsewhere)."""
        return _reduce_cached(self.order, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def integer_value(self) -> int | None:
        """The value as a plain integer, or None if the sum is not in Z."""
        r = self.reduced()
        if any(r[1:]):
            return None
        return r[0]

    def rational_parts(self) -> tuple[Fraction, Fraction] | None:
        """(Re, Im) as exact rationals, or None if either is irrational."""
        q4 = lcm(self.order, 4)
        s = self.lift(q4)
        sc = s.conjugate()
        minus_i = CycloSum.from_root(RootOfUnity(4, 3)).lift(q4)
        re2 = (s + sc).integer_value()
        im2 = ((s - sc) * minus_i).integer_value()
        if re2 is None or im2 is None:
            return None
        return Fraction(re2, 2), Fraction(im2, 2)

    @property
    def approx(self) -> complex:
        """Floating-point value; exact whenever both parts are rational."""
        parts = self.rational_parts()
        if parts is not None:
            return complex(parts[0], parts[1])
        return sum(
            (v * cmath.exp(2j * cmath.pi * k / self.order) for k, v in enumerate(self.coeffs) if v),
            0j,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, CycloSum)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None  # equality is semantic across orders; do not use as keys

    def __repr__(self) -> str:
        terms = [f"{v}*w{self.order}^{k}" for k, v in enumerate(self.coeffs) if v]
        return "CycloSum(" + (" + ".join(terms) if terms else "0") + ")"


def exp_sum(terms) -> CycloSum:
    """Sum of coeff * root over (coeff, RootOfUnity) pairs, exactly.

    All roots are lifted to the lcm of their orders.  The result's
    ``is_zero`` / ``rational_parts`` verdicts are exact; ``approx`` is the
    advisory floating value.
    """
    terms = list(terms)
    if not terms:
        return CycloSum.zero()
    order = 1
    for _, root in terms:
        order = lcm(order, root.order)
    c = [0] * order
    for coeff, root in terms:
        c[root.exponent * (order // root.order)] += int(coeff)
    return CycloSum(order, c)
