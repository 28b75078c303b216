"""Beauville structures on PGL2(p) from a (2,3,k) and a (2,4,l) triple,
the surfaces they define, and the action of Galois exponents on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import check_admissible, euler_phi, lcm, units
from .pgl2 import ClassKey, GroupElement, class_key, element_order, group, is_identity, multiply, power
from .triples import GeneratingTriple, generates_group, orbit_representatives


class BeauvilleError(ValueError):
    """A pair of triples is not a Beauville structure.

    ``condition`` is 1, 2 or 3 (or ``"generation"``); ``witness`` names the
    offending class key or element when there is one.
    """

    def __init__(self, condition, message, witness=None):
        super().__init__(f"condition ({condition}) fails: {message}")
        self.condition = condition
        self.witness = witness


def sigma_key_set(t: GeneratingTriple) -> set[ClassKey]:
    """Class keys of all non-identity powers of a, b and c."""
    keys = set()
    for g in t.elements:
        n = element_order(g)
        x = g
        for _ in range(1, n):
            keys.add(class_key(x))
            x = multiply(x, g)
    return keys


@dataclass(frozen=True)
class BeauvilleStructure:
    first: GeneratingTriple
    second: GeneratingTriple
    sigma_keys_1: frozenset
    sigma_keys_2: frozenset

    @property
    def bitype(self) -> tuple[int, ...]:
        return self.first.type + self.second.type


def _check_triple(t: GeneratingTriple, which: str):
    if not is_identity(multiply(multiply(t.a, t.b), t.c)):
        raise BeauvilleError(1, f"{which} triple has abc != 1", t.c)
    orders = tuple(element_order(g) for g in t.elements)
    if orders != t.type:
        raise BeauvilleError(1, f"{which} triple has orders {orders}, declared {t.type}")
    l, m, n = orders
    if Fraction(1, l) + Fraction(1, m) + Fraction(1, n) >= 1:
        raise BeauvilleError(2, f"{which} triple of type {orders} has 1/l+1/m+1/n >= 1", orders)
    if not generates_group(t.a, t.b):
        raise BeauvilleError("generation", f"{which} triple does not generate PGL2({t.p})", t.a)


def verify_beauville(first: GeneratingTriple, second: GeneratingTriple) -> BeauvilleStructure:
    """Check conditions (1)-(3) directly and return the structure.

    Condition (3) is read off the key sets: conjugates of powers fill whole
    classes, so no power of one triple is conjugate to a power of the other
    exactly when the key sets are disjoint.
    """
    if first.p != second.p:
        raise ValueError(f"triples over different fields: {first.p} and {second.p}")
    _check_triple(first, "first")
    _check_triple(second, "second")
    s1, s2 = sigma_key_set(first), sigma_key_set(second)
    shared = s1 & s2
    if shared:
        witness = min(shared, key=ClassKey.sort_key)
        raise BeauvilleError(3, f"powers of both triples meet the class {witness}", witness)
    return BeauvilleStructure(first, second, frozenset(s1), frozenset(s2))


def genus(p: int, type) -> int:
    """Riemann-Hurwitz: 2g - 2 = |G| (1 - 1/l - 1/m - 1/n)."""
    l, m, n = type
    order = p * (p * p - 1)
    two_g_minus_2 = order * (1 - Fraction(1, l) - Fraction(1, m) - Fraction(1, n))
    g = (two_g_minus_2 + 2) / 2
    if g.denominator != 1:
        raise ValueError(f"non-integral genus {g} for type {tuple(type)} over PGL2({p})")
    return int(g)


def genus_closed_forms(p: int) -> tuple[Fraction, Fraction]:
    """Genera for types (2,3,p-1) and (2,4,p+1) in closed form."""
    return (Fraction((p - 1) * (p * p - 5 * p - 12), 12),
            Fraction((p + 1) * (p * p - 5 * p + 8), 8))


@dataclass(frozen=True)
class BeauvilleSurfaceRecord:
    p: int
    k: int
    l: int
    m: int
    i: int
    j: int
    orbit_key_1: ClassKey
    orbit_key_2: ClassKey
    genus_1: int
    genus_2: int
    orbit_size: int
    moduli_degree: int
    first_triple: GeneratingTriple
    second_triple: GeneratingTriple
    # non-isomorphic fundamental groups across (i, j) at fixed (p, k, l)
    # follows from the classification argument; not recomputed here
    distinct_fundamental_group: bool = True

    @property
    def bitype(self) -> str:
        return f"(2,3,{self.k};2,4,{self.l})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "bitype": self.bitype,
            "i": self.i,
            "j": self.j,
            "orbit_key_1": str(self.orbit_key_1),
            "orbit_key_2": str(self.orbit_key_2),
            "genus_1": self.genus_1,
            "genus_2": self.genus_2,
            "orbit_size": self.orbit_size,
            "moduli_degree": self.moduli_degree,
            "first_triple": self.first_triple.to_json(),
            "second_triple": self.second_triple.to_json(),
        }


def surface_records(p: int, k: int, l: int, firsts, seconds) -> list[BeauvilleSurfaceRecord]:
    """Verify every pair of first/second triples and wrap them as records.
    Indices i, j are 1-based positions in the input lists."""
    m = lcm(k, l)
    size = (euler_phi(k) // 2) * (euler_phi(l) // 2)
    g1, g2 = genus(p, (2, 3, k)), genus(p, (2, 4, l))
    out = []
    for i, t1 in enumerate(firsts, 1):
        for j, t2 in enumerate(seconds, 1):
            verify_beauville(t1, t2)
            out.append(BeauvilleSurfaceRecord(
                p, k, l, m, i, j, t1.orbit_key, t2.orbit_key, g1, g2, size, size, t1, t2))
    return out


def build_all_surfaces(p: int, k: int, l: int) -> list[BeauvilleSurfaceRecord]:
    """One record per pair of orbit representatives; there are phi(m)/4."""
    check_admissible(p, k, l)
    firsts = orbit_representatives(p, (2, 3, k))
    seconds = orbit_representatives(p, (2, 4, l))
    records = surface_records(p, k, l, firsts, seconds)
    expected = euler_phi(lcm(k, l)) // 4
    if len(records) != expected:
        raise AssertionError(f"built {len(records)} surfaces, expected phi(m)/4 = {expected}")
    return records


# ---------------------------------------------------------------------------
# Galois action


def galois_act_on_orbit(p: int, key: ClassKey, gamma: int) -> ClassKey:
    """Key of c^gamma for any c in the class ``key``."""
    G = group(p)
    rep: GroupElement = G.classes[G.class_index(key)].representative
    n = element_order(rep)
    if math.gcd(gamma, n) != 1:
        raise ValueError(f"gamma={gamma} is not coprime to the order {n}")
    return class_key(power(rep, gamma % n))


@dataclass(frozen=True)
class GaloisOrbitTable:
    p: int
    k: int
    l: int
    m: int
    records: list  # (key1, key2) per surface, in record order
    kernel: list[int]  # exponents mod m acting trivially
    coset_reps: list[int]  # least exponent of each kernel coset
    action: dict  # coset rep -> permutation of record indices

    @property
    def transitive(self) -> bool:
        return {perm[0] for perm in self.action.values()} == set(range(len(self.records)))

    @property
    def stabilizers_trivial(self) -> bool:
        n = len(self.records)
        return all(
            sum(1 for perm in self.action.values() if perm[r] == r) == 1 for r in range(n)
        )

    @property
    def regular(self) -> bool:
        return (len(self.coset_reps) == len(self.records)
                and self.transitive and self.stabilizers_trivial)

    def to_json(self) -> dict:
        return {
            "p": self.p, "k": self.k, "l": self.l, "m": self.m,
            "records": [[str(a), str(b)] for a, b in self.records],
            "kernel": self.kernel,
            "action": {str(g): perm for g, perm in sorted(self.action.items())},
            "regular": self.regular,
        }


class GaloisActionError(AssertionError):
    pass


def galois_orbit_table(p: int, k: int, l: int,
                       records: list[BeauvilleSurfaceRecord] | None = None) -> GaloisOrbitTable:
    """Action of the exponents gamma in (Z/m)* on surfaces,
    (key1, key2) -> (key1^gamma, key2^gamma)."""
    if records is None:
        records = build_all_surfaces(p, k, l)
    m = lcm(k, l)
    pairs = [(r.orbit_key_1, r.orbit_key_2) for r in records]
    index = {pair: i for i, pair in enumerate(pairs)}
    if len(index) != len(pairs):
        raise GaloisActionError("two surface records share the same pair of orbit keys")
    cache: dict[tuple, ClassKey] = {}

    def act(key, g):
        if (key, g) not in cache:
            cache[key, g] = galois_act_on_orbit(p, key, g)
        return cache[key, g]

    perms = {}
    for g in units(m):
        perm = []
        for k1, k2 in pairs:
            image = (act(k1, g % k), act(k2, g % l))
            if image not in index:
                raise GaloisActionError(f"exponent {g} sends {k1},{k2} outside the record set")
            perm.append(index[image])
        perms[g] = tuple(perm)
    identity_perm = tuple(range(len(pairs)))
    kernel = [g for g, perm in perms.items() if perm == identity_perm]
    action, seen = {}, set()
    for g, perm in perms.items():
        if perm not in seen:
            seen.add(perm)
            action[g] = list(perm)
    table = GaloisOrbitTable(p, k, l, m, pairs, kernel, sorted(action), action)
    if not table.regular:
        raise GaloisActionError(f"Galois action on surfaces for (p,k,l)=({p},{k},{l}) is not regular")
    return table
