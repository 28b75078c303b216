"""Arithmetic in the prime field F_p.

Residues are plain Python ints in ``[0, p)``; the modulus lives in a
:class:`FieldContext` that is passed around explicitly.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

# keeps products of two residues inside int64
MAX_MODULUS = 1 << 31

FpElem = int


def is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldContext:
    """Operations on residues modulo an odd prime ``p``."""

    __slots__ = ("p", "__dict__")

    def __init__(self, p: int):
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise TypeError(f"modulus must be an integer, got {p!r}")
        p = int(p)
        if p == 2:
            raise ValueError("p must be an odd prime, got 2")
        if not is_small_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if p >= MAX_MODULUS:
            raise ValueError(f"p must be below 2**31, got {p}")
        self.p = p

    def __repr__(self):
        return f"FieldContext({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def elem(self, x: int) -> FpElem:
        return int(x) % self.p

    def add(self, x: FpElem, y: FpElem) -> FpElem:
        return (x + y) % self.p

    def sub(self, x: FpElem, y: FpElem) -> FpElem:
        return (x - y) % self.p

    def neg(self, x: FpElem) -> FpElem:
        return -x % self.p

    def mul(self, x: FpElem, y: FpElem) -> FpElem:
        return x * y % self.p

    def inverse(self, x: FpElem) -> FpElem:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse modulo {self.p}")
        r0, r1 = self.p, x
        s0, s1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % self.p

    def div(self, x: FpElem, y: FpElem) -> FpElem:
        return x * self.inverse(y) % self.p

    def pow(self, x: FpElem, e: int) -> FpElem:
        if e < 0:
            return pow(self.inverse(x), -e, self.p)
        return pow(x, e, self.p)

    def is_square(self, x: FpElem) -> bool:
        """Euler's criterion; only defined for nonzero ``x``."""
        x = int(x) % self.p
        if x == 0:
            raise ValueError("square class of 0 is undefined")
        return pow(x, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x: FpElem) -> FpElem | None:
        """Smallest square root of ``x``, or None for a non-residue."""
        x = int(x) % self.p
        if x == 0:
            return 0
        if not self.is_square(x):
            return None
        if self.p % 4 == 3:
            r = pow(x, (self.p + 1) // 4, self.p)
        else:
            r = next(y for y in range(1, self.p) if y * y % self.p == x)
        return min(r, self.p - r)

    def non_residue(self) -> FpElem:
        return next(x for x in range(2, self.p) if not self.is_square(x))

    def primitive_root(self) -> FpElem:
        from .arith import prime_factors

        qs = prime_factors(self.p - 1)
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in qs):
                return g
        return 1  # p == 3 never reaches here; kept for totality

    @cached_property
    def inverse_table(self) -> np.ndarray:
        """``inverse_table[x]`` is the inverse of x; entry 0 is 0."""
        p = self.p
        table = np.zeros(p, dtype=np.int64)
        # powers of a primitive root give all inverses in one sweep
        g = self.primitive_root()
        powers = np.empty(p - 1, dtype=np.int64)
        acc = 1
        for i in range(p - 1):
            powers[i] = acc
            acc = acc * g % p
        table[powers] = powers[(-np.arange(p - 1)) % (p - 1)]
        return table

    @cached_property
    def square_table(self) -> np.ndarray:
        """Boolean mask of nonzero squares."""
        mask = np.zeros(self.p, dtype=bool)
        mask[(np.arange(1, self.p, dtype=np.int64) ** 2) % self.p] = True
        return mask


def field_context(p: int) -> FieldContext:
    return FieldContext(p)
