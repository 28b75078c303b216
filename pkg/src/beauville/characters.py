"""Class-algebra counting: structure constants, a numerically computed
character table, and Frobenius's character-sum count of solutions to
abc = 1 in three conjugacy classes."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .pgl2 import INVOLUTION, ClassKey, ConjugacyClass, group, inv_arrays, mul_arrays

DEFAULT_MAX_P = 101
FROBENIUS_TOL = 1e-4
TABLE_TOL = 1e-6


class NumericalQualityError(ArithmeticError):
    """A floating-point result drifted beyond its stated bound."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


def _check_bound(p, max_p):
    if p > max_p:
        raise ValueError(f"p={p} exceeds the desk-scale bound {max_p}")


def structure_constants(p: int, max_p: int = DEFAULT_MAX_P) -> np.ndarray:
    """``a[i, j, k] = #{(x, y) in C_i x C_j : xy = z_k}`` for the fixed
    representative z_k of class k (classes in census order)."""
    _check_bound(p, max_p)
    G = group(p)
    F = G.field
    n = len(G.classes)
    X_cls = G.element_classes
    X_inv = inv_arrays(G.elements, F)
    out = np.zeros((n, n, n), dtype=np.int64)
    for k, cls in enumerate(G.classes):
        z = np.array(cls.representative.entries, dtype=np.int64)
        # y = x^-1 z
        Y_cls = G.class_indices(mul_arrays(X_inv, z, F))
        out[:, :, k] = np.bincount(X_cls * n + Y_cls, minlength=n * n).reshape(n, n)
    return out


def direct_triple_counts(p: int) -> np.ndarray:
    """``N[i, j, k] = #{(a, b) in C_i x C_j : (ab)^-1 in C_k}`` by
    multiplying out every pair of class members."""
    G = group(p)
    F = G.field
    n = len(G.classes)
    members = [G.elements[G.element_classes == i] for i in range(n)]
    out = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            P = mul_arrays(members[i][:, None, :], members[j][None, :, :], F).reshape(-1, 4)
            out[i, j] = np.bincount(G.class_indices(inv_arrays(P, F)), minlength=n)
    return out


@dataclass
class CharacterTable:
    p: int
    classes: list[ConjugacyClass]
    values: np.ndarray  # characters x classes
    degrees: list[int]
    residual: float
    meta: dict = field(default_factory=dict)

    @property
    def group_order(self) -> int:
        return self.p * (self.p**2 - 1)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @property
    def keys(self) -> list[ClassKey]:
        return [c.key for c in self.classes]

    def column(self, key: ClassKey) -> int:
        return self.keys.index(key)

    def row_orthogonality_error(self) -> float:
        V = self.values
        gram = (V * self.sizes) @ V.conj().T
        return float(np.abs(gram / self.group_order - np.eye(len(V))).max())

    def column_orthogonality_error(self) -> float:
        V = self.values
        gram = V.conj().T @ V
        expected = np.diag(self.group_order / self.sizes)
        return float((np.abs(gram - expected) / np.sqrt(np.outer(np.diag(expected), np.diag(expected)))).max())

    def metadata(self) -> dict:
        return {
            "p": self.p,
            "group_order": self.group_order,
            "eigen_residual": self.residual,
            "row_orthogonality_error": self.row_orthogonality_error(),
            "column_orthogonality_error": self.column_orthogonality_error(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("# " + json.dumps(self.metadata(), sort_keys=True) + "\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character", "degree"] + [str(k) for k in self.keys])
        for i, (deg, row) in enumerate(zip(self.degrees, self.values)):
            w.writerow([f"chi{i}", deg] + [f"{round(float(x), 6) + 0.0:.6f}" for x in row.real])
        return buf.getvalue()


def _split(V, M, tol):
    """Split the invariant subspace spanned by the orthonormal columns of V
    into eigenspaces of M."""
    X = V.T @ M @ V
    eig = np.sort(np.linalg.eigvals(X).real)
    scale = max(1.0, float(np.abs(eig).max()))
    groups = [[eig[0]]]
    for lam in eig[1:]:
        if lam - groups[-1][-1] > tol * scale:
            groups.append([lam])
        else:
            groups[-1].append(lam)
    if len(groups) == 1:
        return [V]
    parts = []
    for g in groups:
        lam = float(np.mean(g))
        _, _, vt = np.linalg.svd(X - lam * np.eye(len(X)))
        null = vt[-len(g):].T
        q, _ = np.linalg.qr(V @ null)
        parts.append(q)
    return parts


def character_table(p: int, max_p: int = DEFAULT_MAX_P, tol: float = TABLE_TOL) -> CharacterTable:
    """All irreducible characters of PGL2(p) by simultaneous
    diagonalization of the class-multiplication matrices."""
    _check_bound(p, max_p)
    G = group(p)
    consts = structure_constants(p, max_p).astype(float)
    n = len(G.classes)
    sizes = np.array([c.size for c in G.classes], dtype=float)
    # mats[i][j, k] = a[i, j, k]; the central characters are common right
    # eigenvectors w with w[identity] = 1
    mats = [consts[i] for i in range(n)]
    spaces = [np.eye(n)]
    for i in range(1, n):
        if all(V.shape[1] == 1 for V in spaces):
            break
        nxt = []
        for V in spaces:
            nxt.extend(_split(V, mats[i], 1e-8) if V.shape[1] > 1 else [V])
        spaces = nxt
    if any(V.shape[1] != 1 for V in spaces):
        dims = sorted(V.shape[1] for V in spaces)
        raise NumericalQualityError(f"eigenspaces failed to separate: dims {dims}", float("nan"))
    W = np.hstack(spaces)
    W = W / W[0]
    residual = max(float(np.abs(mats[i] @ W - W * W[i]).max() / max(1.0, sizes[i])) for i in range(n))
    order = G.order
    deg = np.sqrt(order / ((W**2) / sizes[:, None]).sum(axis=0))
    values = (W * deg / sizes[:, None]).T
    degrees = np.rint(deg).astype(int)
    residual = max(residual, float(np.abs(deg - degrees).max()))
    if residual > tol:
        raise NumericalQualityError("character table residual above tolerance", residual)
    perm = sorted(range(n), key=lambda r: (degrees[r], tuple(np.round(-values[r], 6))))
    table = CharacterTable(p, list(G.classes), values[perm], [int(degrees[r]) for r in perm], residual)
    return table


def frobenius_raw(A: ClassKey, B: ClassKey, C: ClassKey, table: CharacterTable) -> float:
    ia, ib, ic = (table.column(k) for k in (A, B, C))
    V = table.values
    s = (V[:, ia] * V[:, ib] * V[:, ic] / np.array(table.degrees)).sum()
    sizes = table.sizes
    return float(np.real(s)) * int(sizes[ia]) * int(sizes[ib]) * int(sizes[ic]) / table.group_order


def frobenius_count(A: ClassKey, B: ClassKey, C: ClassKey, table: CharacterTable,
                    tol: float = FROBENIUS_TOL) -> int:
    """Number of (a, b, c) in A x B x C with abc = 1, from the character
    sum ``|A||B||C|/|G| * sum_chi chi(a)chi(b)chi(c)/chi(1)``."""
    raw = frobenius_raw(A, B, C, table)
    n = round(raw)
    if abs(raw - n) >= tol:
        raise NumericalQualityError(f"Frobenius count {raw!r} is not an integer", abs(raw - n))
    return int(n)


def _first_type_classes(p: int, k: int):
    """(A, B) class keys for the triples counted against order k."""
    G = group(p)
    if (p - 1) % k == 0 and ((p - 1) // k) % 2 == 1:
        a = ClassKey(INVOLUTION, det_square=False)
        m = 3
    elif (p + 1) % k == 0 and ((p + 1) // k) % 2 == 1:
        a = ClassKey(INVOLUTION, det_square=True)
        m = 4
    else:
        raise ValueError(f"k={k} divides neither p-1 nor p+1 with odd cofactor (p={p})")
    (b,) = G.keys_of_order(m)
    return a, b, m


def count_ratio_diagnostic(p: int, k: int, orbit_key: ClassKey | None = None,
                           table: CharacterTable | None = None) -> Fraction:
    """``|T(C)| / |G|`` for triples of type (2, 3, k) (k | p-1) or (2, 4, k)
    (k | p+1) with c in the class C, counted by the character sum."""
    from .triples import cyclic_generator
    from .pgl2 import class_key

    a, b, _ = _first_type_classes(p, k)
    if orbit_key is None:
        orbit_key = class_key(cyclic_generator(p, k))
    table = table or character_table(p)
    return Fraction(frobenius_count(a, b, orbit_key, table), table.group_order)
