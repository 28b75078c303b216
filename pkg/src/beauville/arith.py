"""Elementary number theory: totients, CRT, primality and the prime scan
over the residue class singled out by a pair (k, l)."""

from __future__ import annotations

import math
from dataclasses import dataclass

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, e in factorize(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for q in factorize(n):
        result -= result // q
    return result


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def units(n: int) -> list[int]:
    """The residues in ``[1, n)`` coprime to n (``[0]`` for n = 1)."""
    if n == 1:
        return [0]
    return [r for r in range(1, n) if math.gcd(r, n) == 1]


def crt(residues, moduli) -> tuple[int, int]:
    """Combine ``x = r_i mod n_i`` for pairwise coprime moduli.

    Returns ``(x, N)`` with ``0 <= x < N = prod(n_i)``.
    """
    x, big = 0, 1
    for r, n in zip(residues, moduli):
        if math.gcd(big, n) != 1:
            raise ValueError(f"moduli not pairwise coprime: {list(moduli)}")
        # x + big*t = r (mod n)
        t = (r - x) * pow(big, -1, n) % n
        x += big * t
        big *= n
    return x % big, big


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class AdmissibilityError(ValueError):
    """Raised when (k, l) or (p, k, l) do not have the required shape."""


@dataclass(frozen=True)
class AdmissibleParams:
    k: int
    l: int
    k0: int
    l0: int
    k0_prime: int
    combined_modulus: int
    combined_residue: int

    @property
    def m(self) -> int:
        return lcm(self.k, self.l)

    def contains(self, p: int) -> bool:
        return p % self.combined_modulus == self.combined_residue


def admissible_params(k: int, l: int) -> AdmissibleParams:
    """Validate the shape of (k, l) and fold the three congruences
    ``p = 3 (8)``, ``p = 1 (lcm(3, k0))``, ``p = -1 (l0)`` into one."""
    if k <= 10:
        raise AdmissibilityError(f"k must exceed 10, got k={k}")
    if l <= 10:
        raise AdmissibilityError(f"l must exceed 10, got l={l}")
    if k % 2 or (k // 2) % 2 == 0:
        raise AdmissibilityError(f"k must be 2*k0 with k0 odd, got k={k}")
    if l % 4 or (l // 4) % 2 == 0:
        raise AdmissibilityError(f"l must be 4*l0 with l0 odd, got l={l}")
    k0, l0 = k // 2, l // 4
    if l0 % 3 == 0:
        raise AdmissibilityError(f"l0={l0} must be coprime to 3")
    if math.gcd(k0, l0) != 1:
        raise AdmissibilityError(f"k0={k0} and l0={l0} must be coprime")
    k0p = lcm(3, k0)
    residue, modulus = crt([3, 1, l0 - 1], [8, k0p, l0])
    return AdmissibleParams(k, l, k0, l0, k0p, modulus, residue)


def check_admissible(p: int, k: int, l: int) -> AdmissibleParams:
    """Full hypotheses for building surfaces over PGL2(p) of bitype
    (2,3,k; 2,4,l)."""
    params = admissible_params(k, l)
    if not is_prime(p):
        raise AdmissibilityError(f"p={p} is not prime")
    if p % 24 != 19:
        raise AdmissibilityError(f"p={p} is not 19 mod 24")
    if (p - 1) % k or ((p - 1) // k) % 2 == 0:
        raise AdmissibilityError(f"(p-1)/k must be an odd integer (p={p}, k={k})")
    if (p + 1) % l or ((p + 1) // l) % 2 == 0:
        raise AdmissibilityError(f"(p+1)/l must be an odd integer (p={p}, l={l})")
    return params


def scan_primes(params: AdmissibleParams, limit: int) -> list[int]:
    """All primes ``p <= limit`` in the combined residue class."""
    out = []
    p = params.combined_residue
    while p <= limit:
        if is_prime(p):
            out.append(p)
        p += params.combined_modulus
    return out
