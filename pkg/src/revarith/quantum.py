"""NOT / CNOT / controlled-V / controlled-V† primitives and gate lowerings.

Basis packing follows the boolean layer: line ``k`` is bit ``k`` of the
basis index. A sequence's unitary applies its ops left to right, so the
first op multiplies the state first.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .gates import GateKind, gate_permutation, gate_spec

MAX_MATRIX_LINES = 12
MAX_SEARCH_LEN = 6
EXACT_TOL = 1e-10


class PrimKind(Enum):
    NOT = "NOT"
    CNOT = "CNOT"
    CV = "CV"
    CVDAG = "CVDAG"


@dataclass(frozen=True)
class Primitive:
    kind: PrimKind
    target: int
    control: int | None = None

    def __post_init__(self):
        if self.kind is PrimKind.NOT:
            if self.control is not None:
                raise ValueError("NOT takes no control")
        elif self.control is None or self.control == self.target:
            raise ValueError(f"{self.kind.value} needs a distinct control")

    @property
    def pair(self) -> frozenset[int] | None:
        if self.kind is PrimKind.NOT:
            return None
        return frozenset((self.control, self.target))

    def __str__(self):
        if self.kind is PrimKind.NOT:
            return f"NOT({self.target})"
        return f"{self.kind.value}({self.control},{self.target})"


def NOT(t):
    return Primitive(PrimKind.NOT, t)


def CNOT(c, t):
    return Primitive(PrimKind.CNOT, t, c)


def CV(c, t):
    return Primitive(PrimKind.CV, t, c)


def CVDAG(c, t):
    return Primitive(PrimKind.CVDAG, t, c)


@dataclass(frozen=True)
class PrimitiveSeq:
    line_count: int
    ops: tuple[Primitive, ...]

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            used = [op.target] + ([] if op.control is None else [op.control])
            if any(not 0 <= i < self.line_count for i in used):
                raise IndexError(f"{op} outside {self.line_count} lines")

    def __len__(self):
        return len(self.ops)

    def __str__(self):
        return " ".join(str(op) for op in self.ops)


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_V = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])


def v_matrix() -> np.ndarray:
    """Principal square root of NOT."""
    return _V.copy()


def vdag_matrix() -> np.ndarray:
    return _V.conj().T.copy()


_TARGET_OP = {
    PrimKind.NOT: _X,
    PrimKind.CNOT: _X,
    PrimKind.CV: _V,
    PrimKind.CVDAG: _V.conj().T,
}


def primitive_unitary(p: Primitive, n: int) -> np.ndarray:
    if not 1 <= n <= MAX_MATRIX_LINES:
        raise ValueError(f"line count {n} outside 1..{MAX_MATRIX_LINES}")
    PrimitiveSeq(n, (p,))
    u = _TARGET_OP[p.kind]
    dim = 1 << n
    idx = np.arange(dim)
    tbit = (idx >> p.target) & 1
    active = np.ones(dim, dtype=bool) if p.control is None \
        else ((idx >> p.control) & 1).astype(bool)
    m = np.zeros((dim, dim), dtype=complex)
    m[idx[~active], idx[~active]] = 1
    src = idx[active]
    base = src & ~(1 << p.target)
    for out_bit in (0, 1):
        m[base | (out_bit << p.target), src] = u[out_bit, tbit[active]]
    return m


def sequence_unitary(seq: PrimitiveSeq) -> np.ndarray:
    n = seq.line_count
    if not 1 <= n <= MAX_MATRIX_LINES:
        raise ValueError(f"line count {n} outside 1..{MAX_MATRIX_LINES}")
    u = np.eye(1 << n, dtype=complex)
    for op in seq.ops:
        u = primitive_unitary(op, n) @ u
    return u


def permutation_matrix(kind: GateKind) -> np.ndarray:
    perm = gate_permutation(kind)
    m = np.zeros((perm.size, perm.size), dtype=complex)
    for i, j in enumerate(perm.table):
        m[j, i] = 1
    return m


def _toffoli_ops(a, b, c):
    return [CV(b, c), CNOT(a, b), CVDAG(b, c), CNOT(a, b), CV(a, c)]


def decompose(kind: GateKind) -> PrimitiveSeq:
    """Lower a catalog gate to NOT/CNOT/CV/CV† on its own lines (A=0)."""
    a, b, c = 0, 1, 2
    if kind is GateKind.NOT:
        return PrimitiveSeq(1, [NOT(0)])
    if kind is GateKind.FG:
        return PrimitiveSeq(2, [CNOT(0, 1)])
    if kind is GateKind.TOFFOLI:
        ops = _toffoli_ops(a, b, c)
    elif kind is GateKind.PERES:
        ops = [CVDAG(a, c), CVDAG(b, c), CNOT(a, b), CV(b, c)]
    elif kind is GateKind.TR:
        ops = [NOT(b), *_toffoli_ops(a, b, c), NOT(b), CNOT(a, b)]
    elif kind is GateKind.FREDKIN:
        # Controlled swap as CNOT(c,b) Toffoli CNOT(c,b), with the commuting
        # controlled-Vs and CNOTs reordered so each outer CNOT(c,b) shares a
        # block with a V on the same pair.
        ops = [CNOT(c, b), CV(b, c), CV(a, c), CNOT(a, b), CVDAG(b, c),
               CNOT(c, b), CNOT(a, b)]
    else:
        raise ValueError(f"no decomposition for {kind}")
    return PrimitiveSeq(3, ops)


def grouped_cost(seq: PrimitiveSeq) -> int:
    """Count maximal runs of two-line primitives on one unordered line pair.

    NOTs are free; a NOT on a line of the current pair keeps the run open,
    a NOT elsewhere closes it.
    """
    cost = 0
    current = None
    for op in seq.ops:
        if op.kind is PrimKind.NOT:
            if current is not None and op.target not in current:
                current = None
            continue
        if op.pair != current:
            cost += 1
            current = op.pair
    return cost


@dataclass(frozen=True)
class DecompositionReport:
    kind: GateKind
    unitary_match: bool
    max_error: float
    computed_cost: int
    catalog_cost: int
    sequence: PrimitiveSeq

    @property
    def cost_match(self) -> bool:
        return self.computed_cost == self.catalog_cost


def verify_decomposition(kind: GateKind) -> DecompositionReport:
    seq = decompose(kind)
    err = float(np.abs(sequence_unitary(seq) - permutation_matrix(kind)).max())
    return DecompositionReport(
        kind=kind,
        unitary_match=err < EXACT_TOL,
        max_error=err,
        computed_cost=grouped_cost(seq),
        catalog_cost=gate_spec(kind).quantum_cost,
        sequence=seq,
    )


def search_alphabet(n: int = 3) -> list[Primitive]:
    """Two-line primitives in search order: kind, then (control, target)."""
    pairs = [(c, t) for c in range(n) for t in range(n) if c != t]
    return [Primitive(k, t, c)
            for k in (PrimKind.CNOT, PrimKind.CV, PrimKind.CVDAG)
            for c, t in pairs]


def _products(mats: np.ndarray, length: int) -> np.ndarray:
    """All ``length``-fold products, lexicographic with the first op major.

    Entry for ops ``(o1, ..., oL)`` is ``M[oL] @ ... @ M[o1]``.
    """
    dim = mats.shape[1]
    out = np.eye(dim, dtype=complex)[None]
    for _ in range(length):
        out = np.einsum("kij,pjl->pkil", mats, out).reshape(-1, dim, dim)
    return out


def search_decomposition(kind: GateKind,
                         max_len: int) -> PrimitiveSeq | None:
    """Shortest, then lexicographically first, exact CNOT/CV/CV† sequence.

    Exhaustive over up to ``18**max_len`` sequences on three lines.
    """
    if gate_spec(kind).arity != 3:
        raise ValueError("search is defined for 3-line gates")
    return search_unitary(permutation_matrix(kind), max_len)


def search_unitary(target: np.ndarray, max_len: int) -> PrimitiveSeq | None:
    """Search core for an arbitrary 8x8 target.

    Each length is split into a batched prefix and an enumerated two-op
    suffix to keep memory bounded.
    """
    if not 0 <= max_len <= MAX_SEARCH_LEN:
        raise ValueError(f"max_len must be in 0..{MAX_SEARCH_LEN}")
    alphabet = search_alphabet(3)
    mats = np.stack([primitive_unitary(p, 3) for p in alphabet])
    q = len(alphabet)
    for length in range(0, max_len + 1):
        tail = min(length, 2)
        prefixes = _products(mats, length - tail)
        suffixes = _products(mats, tail)
        best = None
        for s_idx, s in enumerate(suffixes):
            err = np.abs(s @ prefixes - target).max(axis=(1, 2))
            hits = np.flatnonzero(err < EXACT_TOL)
            if hits.size:
                cand = (int(hits[0]), s_idx)
                best = cand if best is None else min(best, cand)
        if best is not None:
            digits = _digits(best[0], q, length - tail) + \
                _digits(best[1], q, tail)
            return PrimitiveSeq(3, [alphabet[d] for d in digits])
    return None


def _digits(index: int, base: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        index, d = divmod(index, base)
        out.append(d)
    return out[::-1]


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.abs(u @ u.conj().T - np.eye(u.shape[0])).max() < tol)


__all__ = [
    "PrimKind", "Primitive", "PrimitiveSeq", "NOT", "CNOT", "CV", "CVDAG",
    "v_matrix", "vdag_matrix", "primitive_unitary", "sequence_unitary",
    "permutation_matrix", "decompose", "grouped_cost", "verify_decomposition",
    "DecompositionReport", "search_decomposition", "search_unitary",
    "search_alphabet",
    "is_unitary",
]
