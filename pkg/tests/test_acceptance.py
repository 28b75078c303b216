"""Exit criteria for the package, one test per criterion.

Every test records a PASS/FAIL line that the terminal summary prints
(see conftest.py).  Runtime limits are asserted alongside the results.
"""

import itertools
import time
from contextlib import contextmanager

import numpy as np

from beauville.arith import admissible_params, euler_phi, scan_primes
from beauville.characters import character_table, direct_triple_counts, frobenius_count, frobenius_raw
from beauville.fixtures import verify_example19
from beauville.pgl2 import GENERIC, HYPERBOLIC, INVOLUTION, ClassKey, class_key, group
from beauville.surfaces import (
    BeauvilleError,
    build_all_surfaces,
    galois_orbit_table,
    genus,
    genus_closed_forms,
    sigma_key_set,
    verify_beauville,
)
from beauville.triples import count_triples_brute, enumerate_triples_brute, orbit_representatives
from oracles import conjugacy_classes, proj

RESULTS = []


@contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if ok and limit is not None and elapsed >= limit:
            ok = False
            title += f" (too slow: {elapsed:.1f}s >= {limit}s)"
        RESULTS.append((number, title, ok, elapsed))
    assert limit is None or elapsed < limit, f"criterion {number} took {elapsed:.1f}s"


def test_01_lemma2_count():
    with criterion(1, "brute-force (2,3,18) count per order-18 class is 6840 at p=19", limit=5):
        keys = group(19).keys_of_order(18)
        assert len(keys) == 3
        for key in keys:
            assert count_triples_brute(19, (2, 3, 18), key) == 19 * (19**2 - 1) == 6840


def test_02_orbit_counts():
    with criterion(2, "orbit keys: 3 on (2,3,18) triples, 4 on (2,4,20) triples"):
        assert len({t.orbit_key for t in enumerate_triples_brute(19, (2, 3, 18))}) == euler_phi(18) // 2 == 3
        assert len({t.orbit_key for t in enumerate_triples_brute(19, (2, 4, 20))}) == euler_phi(20) // 2 == 4


def test_03_example_fixtures():
    with criterion(3, "published p=19 representatives verify, 12 cross pairs pass", limit=10):
        report = verify_example19()
        assert report.ok, [c for c in report.failures()]
        assert len(report.records) == 12


def test_04_theorem_instance():
    with criterion(4, "pipeline (19,18,20): 12 surfaces, regular Galois action"):
        records = build_all_surfaces(19, 18, 20)
        assert len(records) == euler_phi(180) // 4 == 12
        table = galois_orbit_table(19, 18, 20, records)
        assert table.regular and table.transitive and table.stabilizers_trivial


def test_05_genus():
    with criterion(5, "genera 381/685 at p=19; closed forms at p=19,43,67"):
        assert genus(19, (2, 3, 18)) == 381
        assert genus(19, (2, 4, 20)) == 685
        for p in (19, 43, 67):
            g, h = genus_closed_forms(p)
            assert genus(p, (2, 3, p - 1)) == g == (p - 1) * (p * p - 5 * p - 12) // 12
            assert genus(p, (2, 4, p + 1)) == h == (p + 1) * (p * p - 5 * p + 8) // 8


def test_06_frobenius_cross_check():
    with criterion(6, "Frobenius count = direct count on all class triples (p=5,7); 6840 at p=19", limit=60):
        for p in (5, 7):
            table = character_table(p)
            direct = direct_triple_counts(p)
            keys = table.keys
            for i, j, k in itertools.product(range(len(keys)), repeat=3):
                assert frobenius_count(keys[i], keys[j], keys[k], table) == direct[i, j, k]
        t19 = character_table(19)
        a = ClassKey(INVOLUTION, det_square=False)
        (b,) = group(19).keys_of_order(3)
        c = class_key(group(19).element(2, 0, 0, 1))
        raw = frobenius_raw(a, b, c, t19)
        assert abs(raw - 6840) < 1e-4
        assert frobenius_count(a, b, c, t19) == 6840


def test_07_character_table_structure():
    with criterion(7, "p=19 table: 21 chars, two linear, sum deg^2=6840, orthogonal, deg-18 vanish on hyperbolics"):
        t = character_table(19)
        assert len(t.degrees) == 21
        assert t.degrees.count(1) == 2
        assert sum(d * d for d in t.degrees) == 6840
        assert t.row_orthogonality_error() < 1e-6
        assert t.column_orthogonality_error() < 1e-6
        hyper = [i for i, c in enumerate(t.classes) if c.kind == HYPERBOLIC and c.key.tag == GENERIC]
        rows = [r for r, d in enumerate(t.degrees) if d == 18]
        assert np.abs(t.values[np.ix_(rows, hyper)]).max() < 1e-6


def test_08_conjugacy_key_oracle():
    with criterion(8, "class keys = exhaustive conjugacy classes for p=5,7,11", limit=60):
        for p in (5, 7, 11):
            G = group(p)
            orbits = conjugacy_classes(p)
            by_key = {}
            for g in G:
                by_key.setdefault(class_key(g), set()).add(proj(g.entries, p))
            assert {frozenset(o) for o in orbits} == {frozenset(s) for s in by_key.values()}
            assert sorted(len(o) for o in orbits) == sorted(c.size for c in G.classes)


def test_09_condition_three():
    with criterion(9, "sigma key sets disjoint for all 12 pairs; (2,3,18)x(2,3,18) rejected by condition (3)"):
        firsts = orbit_representatives(19, (2, 3, 18))
        seconds = orbit_representatives(19, (2, 4, 20))
        for x, y in itertools.product(firsts, seconds):
            assert not sigma_key_set(x) & sigma_key_set(y)
            verify_beauville(x, y)
        try:
            verify_beauville(firsts[0], firsts[1])
        except BeauvilleError as exc:
            assert exc.condition == 3 and exc.witness is not None
        else:
            raise AssertionError("mismatched pair accepted")


def test_10_scaling():
    with criterion(10, "p=43: 60 surfaces with regular action; (2,3,42) character-sum count 79464", limit=120):
        records = build_all_surfaces(43, 42, 44)
        assert len(records) == 60
        assert galois_orbit_table(43, 42, 44, records).regular
        key = group(43).keys_of_order(42)[0]
        assert count_triples_brute(43, (2, 3, 42), key) == 79464


def test_11_prime_scan():
    with criterion(11, "admissible_params(18,20) = 19 mod 360; scanned primes <= 1e4 fit all congruences"):
        params = admissible_params(18, 20)
        assert (params.combined_residue, params.combined_modulus) == (19, 360)
        primes = scan_primes(params, 10**4)
        assert primes and primes[0] == 19
        for p in primes:
            assert p % 24 == 19
            assert (p - 1) % 18 == 0 and ((p - 1) // 18) % 2 == 1
            assert (p + 1) % 20 == 0 and ((p + 1) // 20) % 2 == 1
