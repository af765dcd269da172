"""Catalog of the reversible gates used by the adder/subtractor designs.

Every gate is a bijection on ``{0,1}^arity``. The boolean mappings are
written with ``^``, ``&`` and ``|`` only, so the same function evaluates a
single bit tuple or a whole column of vectors held in numpy ``uint8``
arrays (see :mod:`revarith.sim`).

Bit packing, used for permutations and unitaries alike: bit ``k`` of a
basis index is the value of the ``k``-th gate line, so line A is the least
significant bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence


class GateKind(Enum):
    NOT = "NOT"
    FG = "FG"
    TOFFOLI = "TOFFOLI"
    PERES = "PERES"
    FREDKIN = "FREDKIN"
    TR = "TR"


def _not(a):
    return (a ^ 1,)


def _feynman(a, b):
    return (a, a ^ b)


def _toffoli(a, b, c):
    return (a, b, (a & b) ^ c)


def _peres(a, b, c):
    return (a, a ^ b, (a & b) ^ c)


def _fredkin(a, b, c):
    na = a ^ 1
    return (a, (na & b) | (a & c), (a & b) | (na & c))


def _tr(a, b, c):
    return (a, a ^ b, (a & (b ^ 1)) ^ c)


@dataclass(frozen=True)
class GateSpec:
    """One catalog entry.

    ``mnemonic`` is the short name used in ``.revnet`` files; ``formula``
    is a human-readable rendering of ``mapping`` for listings.
    """

    kind: GateKind
    mnemonic: str
    arity: int
    mapping: Callable[..., tuple]
    quantum_cost: int
    formula: str


_CATALOG = {
    GateKind.NOT: GateSpec(GateKind.NOT, "NOT", 1, _not, 0, "P=A'"),
    GateKind.FG: GateSpec(GateKind.FG, "FG", 2, _feynman, 1, "P=A Q=A^B"),
    GateKind.TOFFOLI: GateSpec(
        GateKind.TOFFOLI, "TOF", 3, _toffoli, 5, "P=A Q=B R=AB^C"),
    GateKind.PERES: GateSpec(
        GateKind.PERES, "PG", 3, _peres, 4, "P=A Q=A^B R=AB^C"),
    GateKind.FREDKIN: GateSpec(
        GateKind.FREDKIN, "F", 3, _fredkin, 5, "P=A Q=A'B+AC R=AB+A'C"),
    GateKind.TR: GateSpec(GateKind.TR, "TR", 3, _tr, 6, "P=A Q=A^B R=AB'^C"),
}

# Short mnemonics are canonical; long names and common synonyms are accepted
# when reading netlists or CLI arguments.
ALIASES: dict[str, GateKind] = {
    "NOT": GateKind.NOT,
    "FG": GateKind.FG,
    "FEYNMAN": GateKind.FG,
    "CNOT": GateKind.FG,
    "TOF": GateKind.TOFFOLI,
    "TG": GateKind.TOFFOLI,
    "TOFFOLI": GateKind.TOFFOLI,
    "PG": GateKind.PERES,
    "PERES": GateKind.PERES,
    "F": GateKind.FREDKIN,
    "FREDKIN": GateKind.FREDKIN,
    "TR": GateKind.TR,
}


def lookup(name: str) -> GateKind:
    """Resolve a mnemonic or long gate name (case-insensitive)."""
    try:
        return ALIASES[name.upper()]
    except KeyError:
        raise KeyError(f"unknown gate {name}") from None


def gate_spec(kind: GateKind) -> GateSpec:
    return _CATALOG[kind]


def all_specs() -> list[GateSpec]:
    return [_CATALOG[k] for k in GateKind]


def apply_gate(kind: GateKind, bits: Sequence[int]) -> tuple[int, ...]:
    """Apply ``kind`` to one input tuple of plain bits.

    Raises ValueError if the tuple length differs from the gate arity or a
    value is not 0/1.
    """
    spec = _CATALOG[kind]
    if len(bits) != spec.arity:
        raise ValueError(
            f"{spec.mnemonic} takes {spec.arity} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"non-binary input {tuple(bits)}")
    return tuple(int(x) for x in spec.mapping(*bits))


def unpack(index: int, width: int) -> tuple[int, ...]:
    return tuple((index >> k) & 1 for k in range(width))


def pack(bits: Sequence[int]) -> int:
    return sum(int(b) << k for k, b in enumerate(bits))


@dataclass(frozen=True)
class Permutation:
    """Permutation of basis indices: ``table[i]`` is the image of ``i``."""

    table: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def is_bijection(self) -> bool:
        return sorted(self.table) == list(range(len(self.table)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.table)
        for i, j in enumerate(self.table):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self`` first, then ``other``."""
        return Permutation(tuple(other.table[j] for j in self.table))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.table))


def gate_permutation(kind: GateKind) -> Permutation:
    n = _CATALOG[kind].arity
    return Permutation(tuple(
        pack(apply_gate(kind, unpack(i, n))) for i in range(1 << n)))
