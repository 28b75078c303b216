"""The group PGL2(p) = GL2(p) / scalars.

An element is stored as its canonical representative matrix: the first
nonzero entry in the scan order (m11, m12, m21, m22) is 1.  Besides the
scalar API (:func:`make_element`, :func:`multiply`, ...) the module keeps
numpy kernels that act on ``(n, 4)`` int64 arrays of matrices; the
enumeration code in the other modules is built on those.

Conjugacy classes are labelled by :class:`ClassKey`.  Away from the
identity, parabolic elements and involutions, the class of ``g`` is fixed
by ``j(g) = trace(g)**2 / det(g)``, which is invariant under rescaling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from .arith import prime_factors
from .field import FieldContext

IDENTITY = "identity"
PARABOLIC = "parabolic"
INVOLUTION = "involution"
GENERIC = "generic"

ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"

_TAG_RANK = {IDENTITY: 0, PARABOLIC: 1, INVOLUTION: 2, GENERIC: 3}


class ClassKey(NamedTuple):
    """Complete conjugacy invariant of an element of PGL2(p)."""

    tag: str
    j: int | None = None
    det_square: bool | None = None

    def __str__(self):
        if self.tag == IDENTITY:
            return "1"
        if self.tag == PARABOLIC:
            return "P"
        if self.tag == INVOLUTION:
            return "T+" if self.det_square else "T-"
        return f"j={self.j}"

    @classmethod
    def parse(cls, text: str) -> "ClassKey":
        text = text.strip()
        if text == "1":
            return cls(IDENTITY)
        if text == "P":
            return cls(PARABOLIC)
        if text in ("T+", "T-"):
            return cls(INVOLUTION, det_square=text == "T+")
        m = re.fullmatch(r"j=(\d+)", text)
        if not m:
            raise ValueError(f"unrecognised class key {text!r}")
        return cls(GENERIC, j=int(m.group(1)))

    def sort_key(self):
        return (_TAG_RANK[self.tag], self.j or 0, bool(self.det_square))


class GroupElement(NamedTuple):
    """Canonical representative of an element of PGL2(p)."""

    p: int
    m11: int
    m12: int
    m21: int
    m22: int

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    @property
    def code(self) -> int:
        p = self.p
        return ((self.m11 * p + self.m12) * p + self.m21) * p + self.m22

    @property
    def trace(self) -> int:
        return (self.m11 + self.m22) % self.p

    @property
    def det(self) -> int:
        return (self.m11 * self.m22 - self.m12 * self.m21) % self.p

    def literal(self) -> str:
        return f"[[{self.m11},{self.m12}],[{self.m21},{self.m22}]]"

    def __str__(self):
        return self.literal()

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, e):
        return power(self, e)


def _field(p) -> FieldContext:
    return p if isinstance(p, FieldContext) else _cached_field(int(p))


@lru_cache(maxsize=None)
def _cached_field(p: int) -> FieldContext:
    return FieldContext(p)


def make_element(p, m11: int, m12: int, m21: int, m22: int) -> GroupElement:
    """Canonical element for the matrix ``[[m11, m12], [m21, m22]]``."""
    F = _field(p)
    q = F.p
    m = [int(x) % q for x in (m11, m12, m21, m22)]
    if (m[0] * m[3] - m[1] * m[2]) % q == 0:
        raise ValueError(f"singular matrix {m} over F_{q}")
    lead = next(x for x in m if x)
    if lead != 1:
        s = F.inverse(lead)
        m = [x * s % q for x in m]
    return GroupElement(q, *m)


def identity(p) -> GroupElement:
    return GroupElement(_field(p).p, 1, 0, 0, 1)


def from_code(p: int, code: int) -> GroupElement:
    code = int(code)
    m22 = code % p
    code //= p
    m21 = code % p
    code //= p
    return GroupElement(p, code // p, code % p, m21, m22)


_LITERAL = re.compile(r"\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]")


def parse_literal(p, text: str) -> GroupElement:
    """Parse ``[[m11,m12],[m21,m22]]``."""
    m = _LITERAL.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad matrix literal {text!r}")
    return make_element(p, *(int(x) for x in m.groups()))


def _check_same(g: GroupElement, h: GroupElement):
    if g.p != h.p:
        raise ValueError(f"elements over different fields: F_{g.p} and F_{h.p}")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_same(g, h)
    p = g.p
    a, b, c, d = g.entries
    e, f, x, y = h.entries
    return make_element(p, a * e + b * x, a * f + b * y, c * e + d * x, c * f + d * y)


def invert(g: GroupElement) -> GroupElement:
    # adjugate; the determinant is a scalar and disappears in PGL2
    return make_element(g.p, g.m22, -g.m12, -g.m21, g.m11)


def conjugate(g: GroupElement, x: GroupElement) -> GroupElement:
    """``x g x^-1``."""
    return multiply(multiply(x, g), invert(x))


def power(g: GroupElement, e: int) -> GroupElement:
    if e < 0:
        g, e = invert(g), -e
    result = identity(g.p)
    while e:
        if e & 1:
            result = multiply(result, g)
        g = multiply(g, g)
        e >>= 1
    return result


def is_identity(g: GroupElement) -> bool:
    return g.entries == (1, 0, 0, 1)


def discriminant(g: GroupElement) -> int:
    return (g.trace**2 - 4 * g.det) % g.p


def classify(g: GroupElement) -> str:
    """One of ``identity``, ``parabolic``, ``hyperbolic``, ``elliptic``."""
    if is_identity(g):
        return IDENTITY
    delta = discriminant(g)
    if delta == 0:
        return PARABOLIC
    return HYPERBOLIC if _field(g.p).is_square(delta) else ELLIPTIC


def in_psl(g: GroupElement) -> bool:
    return _field(g.p).is_square(g.det)


def element_order(g: GroupElement) -> int:
    kind = classify(g)
    if kind == IDENTITY:
        return 1
    p = g.p
    n = {PARABOLIC: p, HYPERBOLIC: p - 1, ELLIPTIC: p + 1}[kind]
    for q in prime_factors(n):
        while n % q == 0 and is_identity(power(g, n // q)):
            n //= q
    return n


def j_invariant(g: GroupElement) -> int:
    F = _field(g.p)
    return F.div(g.trace**2, g.det)


def class_key(g: GroupElement) -> ClassKey:
    if is_identity(g):
        return ClassKey(IDENTITY)
    j = j_invariant(g)
    if j == 4 % g.p:
        return ClassKey(PARABOLIC)
    if j == 0:
        return ClassKey(INVOLUTION, det_square=in_psl(g))
    return ClassKey(GENERIC, j=j)


# ---------------------------------------------------------------------------
# array kernels: matrices are rows (m11, m12, m21, m22) of int64 arrays


def canon_arrays(M: np.ndarray, F: FieldContext) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64) % F.p
    flat = M.reshape(-1, 4)
    lead_pos = np.argmax(flat != 0, axis=1)
    lead = flat[np.arange(len(flat)), lead_pos]
    scale = F.inverse_table[lead]
    return (flat * scale[:, None] % F.p).reshape(M.shape)


def mul_arrays(X: np.ndarray, Y: np.ndarray, F: FieldContext) -> np.ndarray:
    """Row-wise (broadcasting) product, canonicalized."""
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    p = F.p
    out = np.stack(
        [
            (X[..., 0] * Y[..., 0] + X[..., 1] * Y[..., 2]) % p,
            (X[..., 0] * Y[..., 1] + X[..., 1] * Y[..., 3]) % p,
            (X[..., 2] * Y[..., 0] + X[..., 3] * Y[..., 2]) % p,
            (X[..., 2] * Y[..., 1] + X[..., 3] * Y[..., 3]) % p,
        ],
        axis=-1,
    )
    return canon_arrays(out, F)


def inv_arrays(X: np.ndarray, F: FieldContext) -> np.ndarray:
    X = np.asarray(X, dtype=np.int64)
    out = np.stack([X[..., 3], -X[..., 1], -X[..., 2], X[..., 0]], axis=-1)
    return canon_arrays(out, F)


def encode(M: np.ndarray, p: int) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    return ((M[..., 0] * p + M[..., 1]) * p + M[..., 2]) * p + M[..., 3]


def decode(codes: np.ndarray, p: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    return np.stack([codes // p**3, codes // p**2 % p, codes // p % p, codes % p], axis=-1)


def key_codes(M: np.ndarray, F: FieldContext) -> np.ndarray:
    """Integer form of the class key of each (canonical) row.

    ``0 <= code < p`` is the j-invariant of a generic element; ``p`` and
    ``p + 1`` are the involutions with non-square and square determinant,
    ``p + 2`` is the parabolic class and ``p + 3`` the identity.
    """
    M = np.asarray(M, dtype=np.int64)
    p = F.p
    tr = (M[..., 0] + M[..., 3]) % p
    det = (M[..., 0] * M[..., 3] - M[..., 1] * M[..., 2]) % p
    j = tr * tr % p * F.inverse_table[det] % p
    out = j.copy()
    invol = j == 0
    out[invol] = np.where(F.square_table[det[invol]], p + 1, p)
    unip = j == 4 % p
    is_id = (M[..., 0] == 1) & (M[..., 1] == 0) & (M[..., 2] == 0) & (M[..., 3] == 1)
    out[unip] = p + 2
    out[is_id] = p + 3
    return out


def key_from_code(code: int, p: int) -> ClassKey:
    code = int(code)
    if code == p + 3:
        return ClassKey(IDENTITY)
    if code == p + 2:
        return ClassKey(PARABOLIC)
    if code in (p, p + 1):
        return ClassKey(INVOLUTION, det_square=code == p + 1)
    return ClassKey(GENERIC, j=code)


def code_from_key(key: ClassKey, p: int) -> int:
    if key.tag == IDENTITY:
        return p + 3
    if key.tag == PARABOLIC:
        return p + 2
    if key.tag == INVOLUTION:
        return p + 1 if key.det_square else p
    return int(key.j)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    key: ClassKey
    size: int
    order: int
    representative: GroupElement

    @property
    def kind(self) -> str:
        return classify(self.representative)


class PGL2:
    """The whole group PGL2(p) with cached element and class tables.

    ``elements`` lists the canonical matrices sorted by code, so element
    indices and codes are interchangeable via :meth:`index_of`.
    """

    def __init__(self, p):
        self.field = _field(p)
        self.p = self.field.p

    def __repr__(self):
        return f"PGL2({self.p})"

    @property
    def order(self) -> int:
        p = self.p
        return p * (p * p - 1)

    @property
    def identity(self) -> GroupElement:
        return identity(self.p)

    def element(self, m11, m12, m21, m22) -> GroupElement:
        return make_element(self.field, m11, m12, m21, m22)

    def literal(self, text: str) -> GroupElement:
        return parse_literal(self.field, text)

    @cached_property
    def elements(self) -> np.ndarray:
        p = self.p
        r = np.arange(p, dtype=np.int64)
        # leading 1 in position m11
        b, c, d = (x.ravel() for x in np.meshgrid(r, r, r, indexing="ij"))
        top = np.stack([np.ones_like(b), b, c, d], axis=1)
        top = top[(d - b * c) % p != 0]
        # m11 = 0, m12 = 1, m21 != 0
        c, d = (x.ravel() for x in np.meshgrid(r[1:], r, indexing="ij"))
        bottom = np.stack([np.zeros_like(c), np.ones_like(c), c, d], axis=1)
        els = np.concatenate([bottom, top])
        assert len(els) == self.order
        return els[np.argsort(encode(els, p), kind="stable")]

    @cached_property
    def codes(self) -> np.ndarray:
        return encode(self.elements, self.p)

    def index_of(self, codes) -> np.ndarray:
        return np.searchsorted(self.codes, codes)

    def __iter__(self) -> Iterator[GroupElement]:
        p = self.p
        for row in self.elements.tolist():
            yield GroupElement(p, *row)

    def __len__(self):
        return self.order

    def __getitem__(self, i) -> GroupElement:
        return GroupElement(self.p, *(int(x) for x in self.elements[i]))

    @cached_property
    def element_key_codes(self) -> np.ndarray:
        return key_codes(self.elements, self.field)

    @cached_property
    def classes(self) -> list[ConjugacyClass]:
        p = self.p
        kc = self.element_key_codes
        found, first, counts = np.unique(kc, return_index=True, return_counts=True)
        out = []
        for code, i, n in zip(found.tolist(), first.tolist(), counts.tolist()):
            rep = self[i]
            out.append(ConjugacyClass(key_from_code(code, p), n, element_order(rep), rep))
        out.sort(key=lambda c: (_TAG_RANK[c.key.tag], c.order, c.key.sort_key()))
        return out

    @cached_property
    def _class_lookup(self) -> np.ndarray:
        lut = np.full(self.p + 4, -1, dtype=np.int64)
        for i, c in enumerate(self.classes):
            lut[code_from_key(c.key, self.p)] = i
        return lut

    @cached_property
    def class_orders(self) -> np.ndarray:
        return np.array([c.order for c in self.classes], dtype=np.int64)

    def class_indices(self, M: np.ndarray) -> np.ndarray:
        """Index into :attr:`classes` for each row of a matrix array."""
        return self._class_lookup[key_codes(M, self.field)]

    @cached_property
    def element_classes(self) -> np.ndarray:
        return self._class_lookup[self.element_key_codes]

    @cached_property
    def element_orders(self) -> np.ndarray:
        return self.class_orders[self.element_classes]

    def class_index(self, key: ClassKey) -> int:
        i = int(self._class_lookup[code_from_key(key, self.p)])
        if i < 0:
            raise KeyError(f"no class {key} in PGL2({self.p})")
        return i

    def conjugacy_class(self, key: ClassKey) -> np.ndarray:
        """Member matrices of the class with the given key."""
        return self.elements[self.element_classes == self.class_index(key)]

    def keys_of_order(self, n: int) -> list[ClassKey]:
        return [c.key for c in self.classes if c.order == n]

    def elements_of_order(self, n: int) -> np.ndarray:
        return self.elements[self.element_orders == n]

    def centralizer(self, g: GroupElement) -> np.ndarray:
        gm = np.array(g.entries, dtype=np.int64)
        left = encode(mul_arrays(self.elements, gm, self.field), self.p)
        right = encode(mul_arrays(gm, self.elements, self.field), self.p)
        return self.elements[left == right]

    def conjugators_to(self, rep: GroupElement) -> tuple[np.ndarray, np.ndarray]:
        """For each conjugate ``h`` of ``rep`` some ``y`` with ``y h y^-1 = rep``.

        Returns ``(codes, ys)``: the sorted codes of the conjugates and the
        matching conjugator matrices.
        """
        F = self.field
        X = self.elements
        conj = mul_arrays(mul_arrays(X, np.array(rep.entries), F), inv_arrays(X, F), F)
        codes = encode(conj, self.p)
        uniq, first = np.unique(codes, return_index=True)
        # x rep x^-1 = h  =>  x^-1 h x = rep
        return uniq, inv_arrays(X[first], F)


@lru_cache(maxsize=8)
def group(p: int) -> PGL2:
    """Shared, cached instance of PGL2(p)."""
    return PGL2(p)


def class_census(p) -> list[ConjugacyClass]:
    """Conjugacy classes of PGL2(p) in a fixed order: identity, parabolic,
    involutions, then generic classes by element order and j-invariant."""
    return list(group(_field(p).p).classes)
