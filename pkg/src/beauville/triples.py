"""Generating triples (a, b, c) of PGL2(p) with abc = 1 and prescribed
element orders.

Two independent routes produce the triples of type (2, 3, k) with c in a
given class: :func:`enumerate_triples_brute` walks every pair (a, b) of
elements of the right orders, while :func:`enumerate_triples_parametric`
solves for b at the fixed involution diag(1, -1) and then spreads the
solutions over the group by conjugation.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import units
from .pgl2 import (
    GENERIC,
    INVOLUTION,
    ClassKey,
    GroupElement,
    class_key,
    element_order,
    encode,
    group,
    identity,
    inv_arrays,
    invert,
    is_identity,
    mul_arrays,
    multiply,
    parse_literal,
    power,
)

log = logging.getLogger(__name__)

Type = tuple[int, int, int]


class TripleError(ValueError):
    """A triple violates one of its defining properties."""


@dataclass(frozen=True)
class GeneratingTriple:
    a: GroupElement
    b: GroupElement
    c: GroupElement
    type: Type

    @property
    def p(self) -> int:
        return self.a.p

    @property
    def orbit_key(self) -> ClassKey:
        return class_key(self.c)

    @property
    def elements(self) -> tuple[GroupElement, GroupElement, GroupElement]:
        return (self.a, self.b, self.c)

    def sort_key(self):
        return (self.a.code, self.b.code)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "type": list(self.type),
            "a": self.a.literal(),
            "b": self.b.literal(),
            "c": self.c.literal(),
            "orbit_key": str(self.orbit_key),
        }

    @classmethod
    def from_json(cls, data: dict, check: bool = True) -> "GeneratingTriple":
        p = int(data["p"])
        a, b, c = (parse_literal(p, data[x]) for x in "abc")
        t = tuple(int(x) for x in data["type"])
        if check:
            return make_triple(a, b, c, t)
        return cls(a, b, c, t)


def hyperbolic_type(t: Type) -> bool:
    l, m, n = t
    return Fraction(1, l) + Fraction(1, m) + Fraction(1, n) < 1


def make_triple(a: GroupElement, b: GroupElement, c: GroupElement | None = None,
                type: Type | None = None, check_generation: bool = True) -> GeneratingTriple:
    """Build a triple and check every defining property.

    ``c`` defaults to ``(ab)^-1``; ``type`` defaults to the actual orders.
    """
    if c is None:
        c = invert(multiply(a, b))
    if not is_identity(multiply(multiply(a, b), c)):
        raise TripleError(f"abc != 1 for a={a}, b={b}, c={c}")
    orders = (element_order(a), element_order(b), element_order(c))
    if type is None:
        type = orders
    type = tuple(type)
    if orders != type:
        raise TripleError(f"element orders {orders} differ from declared type {type}")
    if check_generation and not generates_group(a, b):
        raise TripleError(f"a={a}, b={b} do not generate PGL2({a.p})")
    return GeneratingTriple(a, b, c, type)


# ---------------------------------------------------------------------------
# generation


def closure_size(gens, stop_above: int | None = None) -> int:
    """Order of the subgroup generated by ``gens`` (breadth-first closure).

    With ``stop_above`` the search returns as soon as more than that many
    elements have been reached.
    """
    gens = list(gens)
    p = gens[0].p
    G = group(p)
    F = G.field
    visited = np.zeros(G.order, dtype=bool)
    start = G.index_of(identity(p).code)
    visited[start] = True
    count = 1
    frontier = G.elements[[start]]
    gen_arr = [np.array(g.entries, dtype=np.int64) for g in gens]
    while len(frontier):
        nxt = np.concatenate([mul_arrays(frontier, g, F) for g in gen_arr])
        idx = np.unique(G.index_of(encode(nxt, p)))
        idx = idx[~visited[idx]]
        visited[idx] = True
        count += len(idx)
        if stop_above is not None and count > stop_above:
            return count
        frontier = G.elements[idx]
    return count


def generates_group(a: GroupElement, b: GroupElement) -> bool:
    """True iff a and b generate all of PGL2(p)."""
    order = group(a.p).order
    # a subgroup with more than |G|/2 elements is G
    return closure_size([a, b], stop_above=order // 2) > order // 2


def _conj_arrays(X, Y, F):
    """``Y X Y^-1`` row-wise."""
    return mul_arrays(mul_arrays(Y, X, F), inv_arrays(Y, F), F)


def generation_mask(G, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """``generates_group`` for many pairs at once.

    Generation is invariant under simultaneous conjugation, so pairs are
    first brought to a normal form (a moved to its class representative,
    b minimized over the centralizer of that representative) and the
    closure is computed once per normal form.
    """
    F = G.field
    out = np.zeros(len(A), dtype=bool)
    if not len(A):
        return out
    a_cls = G.class_indices(A)
    for ci in np.unique(a_cls):
        sel = np.nonzero(a_cls == ci)[0]
        rep = G.classes[ci].representative
        codes, ys = G.conjugators_to(rep)
        Y = ys[np.searchsorted(codes, encode(A[sel], G.p))]
        Bn = _conj_arrays(B[sel], Y, F)
        best = None
        for z in G.centralizer(rep):
            cand = encode(_conj_arrays(Bn, z, F), G.p)
            best = cand if best is None else np.minimum(best, cand)
        uniq, inverse = np.unique(best, return_inverse=True)
        verdict = np.array(
            [generates_group(rep, G[int(G.index_of(u))]) for u in uniq.tolist()], dtype=bool
        )
        out[sel] = verdict[inverse]
    return out


# ---------------------------------------------------------------------------
# brute-force search


def _admissible_order(G, n: int) -> bool:
    return any(c.order == n for c in G.classes)


def _search(G, type: Type, c_keys, a_pool=None, check_generation=True, threads=None):
    """Arrays (A, B, C) of all triples of the given type with a drawn from
    ``a_pool`` (default: every element of order l) and key(c) in ``c_keys``."""
    l, m, n = type
    F = G.field
    empty = np.zeros((0, 4), dtype=np.int64)
    for x in (l, m, n):
        if not _admissible_order(G, x):
            log.warning("PGL2(%d) has no elements of order %d; type %s is empty", G.p, x, type)
            return empty, empty, empty
    if a_pool is None:
        a_pool = G.elements_of_order(l)
    a_pool = a_pool[G.element_orders[G.index_of(encode(a_pool, G.p))] == l]
    b_pool = G.elements_of_order(m)
    wanted = np.zeros(len(G.classes), dtype=bool)
    for key in c_keys:
        wanted[G.class_index(key)] = True
    # classes are inverse-closed, so key((ab)^-1) = key(ab)
    wanted &= G.class_orders == n
    if not wanted.any():
        return empty, empty, empty

    chunk = max(1, 400_000 // max(1, len(b_pool)))

    def work(start):
        A = a_pool[start:start + chunk]
        P = mul_arrays(A[:, None, :], b_pool[None, :, :], F)
        ok = wanted[G.class_indices(P.reshape(-1, 4))].reshape(len(A), len(b_pool))
        ia, ib = np.nonzero(ok)
        return A[ia], b_pool[ib]

    starts = range(0, len(a_pool), chunk)
    workers = threads or os.cpu_count() or 1
    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(work, starts))
    else:
        parts = [work(s) for s in starts]
    if not parts:
        return empty, empty, empty
    A = np.concatenate([x for x, _ in parts])
    B = np.concatenate([y for _, y in parts])
    if check_generation:
        keep = generation_mask(G, A, B)
        A, B = A[keep], B[keep]
    C = inv_arrays(mul_arrays(A, B, F), F)
    return A, B, C


def _to_triples(G, A, B, C, type) -> list[GeneratingTriple]:
    p = G.p
    order = np.lexsort((encode(B, p), encode(A, p)))
    return [
        GeneratingTriple(GroupElement(p, *a), GroupElement(p, *b), GroupElement(p, *c), tuple(type))
        for a, b, c in zip(A[order].tolist(), B[order].tolist(), C[order].tolist())
    ]


def _keys_for(G, n, orbit_key):
    if orbit_key is not None:
        return [orbit_key]
    return G.keys_of_order(n)


def enumerate_triples_brute(p: int, type: Type, orbit_key: ClassKey | None = None,
                            *, threads: int | None = None) -> list[GeneratingTriple]:
    """Every generating triple of the given type, optionally only those
    whose third entry lies in the class ``orbit_key``."""
    G = group(p)
    A, B, C = _search(G, tuple(type), _keys_for(G, type[2], orbit_key), threads=threads)
    return _to_triples(G, A, B, C, type)


def count_triples_brute(p: int, type: Type, orbit_key: ClassKey | None = None, *,
                        a_key: ClassKey | None = None, fixed_a: GroupElement | None = None,
                        check_generation: bool = True, threads: int | None = None) -> int:
    """Number of triples found by the brute-force search.

    ``a_key`` restricts a to one conjugacy class, ``fixed_a`` to a single
    element.
    """
    G = group(p)
    a_pool = None
    if fixed_a is not None:
        a_pool = np.array([fixed_a.entries], dtype=np.int64)
    elif a_key is not None:
        a_pool = G.conjugacy_class(a_key)
    A, _, _ = _search(G, tuple(type), _keys_for(G, type[2], orbit_key), a_pool,
                      check_generation=check_generation, threads=threads)
    return len(A)


def count_second_triples(p: int, l: int, orbit_key: ClassKey, *, threads: int | None = None) -> int:
    """Triples of type (2, 4, l) with a in the involution class inside
    PSL2(p) and c in the class ``orbit_key``."""
    _check_second_shape(p, l)
    return count_triples_brute(p, (2, 4, l), orbit_key,
                               a_key=ClassKey(INVOLUTION, det_square=True), threads=threads)


def second_triples_at(p: int, l: int, orbit_key: ClassKey) -> list[GeneratingTriple]:
    """Triples of type (2, 4, l) in the class ``orbit_key`` whose first
    entry is the involution [[0,1],[-1,0]]."""
    _check_second_shape(p, l)
    G = group(p)
    a2 = G.element(0, 1, -1, 0)
    A, B, C = _search(G, (2, 4, l), [orbit_key], np.array([a2.entries], dtype=np.int64))
    return _to_triples(G, A, B, C, (2, 4, l))


def _check_second_shape(p, l):
    if (p + 1) % l or ((p + 1) // l) % 2 == 0:
        raise ValueError(f"l={l} must divide p+1={p + 1} with odd cofactor")


# ---------------------------------------------------------------------------
# parametric construction


def _check_first_shape(p, k):
    if k <= 10:
        raise ValueError(f"k must exceed 10, got {k}")
    if (p - 1) % k or ((p - 1) // k) % 2 == 0:
        raise ValueError(f"k={k} must divide p-1={p - 1} with odd cofactor")


def parametric_local_triples(p: int, k: int, orbit_key: ClassKey) -> list[GeneratingTriple]:
    """The 2(p-1) triples (diag(1,-1), b, c) of type (2, 3, k) with c in the
    class ``orbit_key``, obtained by solving for the entries of b.

    Normalizing b to determinant 1 and trace 1, and c to determinant -1 with
    trace t, forces b = [[(1 +- t)/2, x], [y, (1 -+ t)/2]] with
    xy = (-3 - t^2)/4.
    """
    _check_first_shape(p, k)
    out = _solve_local(p, k, orbit_key)
    G = group(p)
    A = np.array([tr.a.entries for tr in out], dtype=np.int64)
    B = np.array([tr.b.entries for tr in out], dtype=np.int64)
    if not generation_mask(G, A, B).all():
        raise AssertionError("a parametric triple fails to generate the group")
    return sorted(out, key=GeneratingTriple.sort_key)


def _solve_local(p: int, k: int, orbit_key: ClassKey) -> list[GeneratingTriple]:
    G = group(p)
    F = G.field
    cls = G.classes[G.class_index(orbit_key)]
    if cls.order != k:
        raise ValueError(f"class {orbit_key} has order {cls.order}, not {k}")
    if orbit_key.tag != GENERIC:
        raise ValueError(f"class {orbit_key} is not generic")
    # j = t^2 / det with det = -1
    t = F.sqrt(F.neg(orbit_key.j))
    if t is None:
        raise ValueError(f"class {orbit_key} has no representative of determinant -1")
    if F.mul(t, t) == F.neg(3):
        raise ValueError("t^2 = -3: a and b would have a common fixed point")
    half = F.inverse(2)
    xy = F.mul(F.sub(F.neg(3), F.mul(t, t)), F.inverse(4))
    a1 = G.element(1, 0, 0, -1)
    out = []
    for s in (t, F.neg(t)):
        top = F.mul(F.add(1, s), half)
        bottom = F.mul(F.sub(1, s), half)
        for x in range(1, p):
            b1 = G.element(top, x, F.div(xy, x), bottom)
            c1 = invert(multiply(a1, b1))
            if class_key(c1) != orbit_key:
                raise AssertionError(f"parametric solution {b1} lands outside {orbit_key}")
            out.append(GeneratingTriple(a1, b1, c1, (2, 3, k)))
    return out


def enumerate_triples_parametric(p: int, k: int, orbit_key: ClassKey) -> list[GeneratingTriple]:
    """All triples of type (2, 3, k) in the class ``orbit_key``: the local
    solutions at diag(1,-1) closed under conjugation by the whole group."""
    G = group(p)
    F = G.field
    local = parametric_local_triples(p, k, orbit_key)
    A = np.array([t.a.entries for t in local], dtype=np.int64)
    B = np.array([t.b.entries for t in local], dtype=np.int64)
    X = G.elements
    Xinv = inv_arrays(X, F)
    As, Bs = [], []
    for a, b in zip(A, B):
        As.append(mul_arrays(mul_arrays(X, a, F), Xinv, F))
        Bs.append(mul_arrays(mul_arrays(X, b, F), Xinv, F))
    A = np.concatenate(As)
    B = np.concatenate(Bs)
    pairs = encode(A, p) * G.p**4 + encode(B, p)
    _, first = np.unique(pairs, return_index=True)
    A, B = A[first], B[first]
    C = inv_arrays(mul_arrays(A, B, F), F)
    return _to_triples(G, A, B, C, (2, 3, k))


# ---------------------------------------------------------------------------
# orbit representatives


def cyclic_generator(p: int, n: int) -> GroupElement:
    """A fixed element of order n used to normalize representatives.

    For n | p-1 this is diag(g^((p-1)/n), 1) with g the least primitive
    root; otherwise [[1, x], [1, 1]] for the least x giving order n.
    """
    G = group(p)
    F = G.field
    if (p - 1) % n == 0:
        g = F.pow(F.primitive_root(), (p - 1) // n)
        return G.element(g, 0, 0, 1)
    for x in range(p):
        if x == 1:
            continue
        cand = G.element(1, x, 1, 1)
        if element_order(cand) == n:
            return cand
    raise ValueError(f"PGL2({p}) has no element of order {n}")


def normalized_exponents(n: int) -> list[int]:
    """Exponents r coprime to n with 1 <= r <= n/2."""
    return [r for r in units(n) if 2 * r <= n]


def exponent_of(c: GroupElement, generator: GroupElement) -> int | None:
    """Least r >= 0 with generator^r = c, or None."""
    x = identity(c.p)
    for r in range(element_order(generator)):
        if x == c:
            return r
        x = multiply(x, generator)
    return None


def _triple_with_c(G, type: Type, c: GroupElement) -> GeneratingTriple:
    l, m, _ = type
    F = G.field
    A = G.elements_of_order(l)
    cinv = np.array(invert(c).entries, dtype=np.int64)
    B = mul_arrays(inv_arrays(A, F), cinv, F)
    ok = G.element_orders[G.index_of(encode(B, G.p))] == m
    for a, b in zip(A[ok].tolist(), B[ok].tolist()):
        a, b = GroupElement(G.p, *a), GroupElement(G.p, *b)
        if generates_group(a, b):
            return GeneratingTriple(a, b, c, tuple(type))
    raise TripleError(f"no generating triple of type {type} with c={c}")


def orbit_representatives(p: int, type: Type, normalized: bool = True) -> list[GeneratingTriple]:
    """One generating triple per class of third entries.

    With ``normalized`` the third entries are the powers c0^r of
    :func:`cyclic_generator`, r as in :func:`normalized_exponents`;
    otherwise they are the class representatives of the census.
    """
    G = group(p)
    type = tuple(type)
    n = type[2]
    if normalized:
        c0 = cyclic_generator(p, n)
        cs = [power(c0, r) for r in normalized_exponents(n)]
        keys = [class_key(c) for c in cs]
        if len(set(keys)) != len(keys) or set(keys) != set(G.keys_of_order(n)):
            raise AssertionError(f"powers of {c0} do not hit each order-{n} class once")
    else:
        cs = [G.classes[G.class_index(k)].representative for k in G.keys_of_order(n)]
    return [_triple_with_c(G, type, c) for c in cs]


def complex_conjugate_triple(t: GeneratingTriple) -> GeneratingTriple:
    """(a^-1, a b^-1 a^-1, c^-1)."""
    a_inv = invert(t.a)
    b_new = multiply(multiply(t.a, invert(t.b)), a_inv)
    return GeneratingTriple(a_inv, b_new, invert(t.c), t.type)


def conjugate_triple(t: GeneratingTriple, x: GroupElement) -> GeneratingTriple:
    xi = invert(x)
    a, b, c = (multiply(multiply(x, e), xi) for e in t.elements)
    return GeneratingTriple(a, b, c, t.type)


def num_orbit_classes(n: int) -> int:
    """phi(n)/2, the number of classes of elements of order n > 2."""
    return len(units(n)) // 2 if n > 2 else 1

