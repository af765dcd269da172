"""Boolean simulation of reversible circuits.

Two evaluation paths share the catalog mappings: :func:`evaluate` pushes
plain ints through the gates for one assignment, and :func:`simulate`
evaluates many vectors at once with one numpy ``uint8`` column per line.
Exhaustive sweeps (truth tables, permutations, adder verification) all go
through :func:`simulate`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .gates import Permutation, gate_permutation, gate_spec
from .netlist import Circuit, check, validate

MAX_TRUTH_INPUTS = 24
MAX_PERMUTATION_LINES = 20
MAX_WIDTH = 64


class CapacityError(ValueError):
    pass


class InterfaceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SimResult:
    """Final line values of one evaluation.

    ``outputs`` maps primary-output names to bits; ``garbage`` lists the
    garbage lines' values in line order; ``state`` holds every line.
    """

    state: tuple[int, ...]
    outputs: dict[str, int]
    garbage: tuple[int, ...]

    def __getitem__(self, name: str) -> int:
        return self.outputs[name]


def _check_assignment(circuit: Circuit, keys) -> None:
    names = set(circuit.input_names)
    given = set(keys)
    missing = sorted(names - given)
    extra = sorted(given - names)
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(missing))
        if extra:
            parts.append("unknown " + ", ".join(extra))
        raise ValueError("bad assignment: " + "; ".join(parts))


def evaluate(circuit: Circuit, assignment: Mapping[str, int]) -> SimResult:
    check(circuit)
    _check_assignment(circuit, assignment)
    state = []
    for ln in circuit.lines:
        v = ln.inp if ln.is_constant else assignment[ln.inp]
        if v not in (0, 1):
            raise ValueError(f"non-binary value {v!r} for {ln.inp}")
        state.append(int(v))
    for g in circuit.gates:
        out = gate_spec(g.kind).mapping(*(state[i] for i in g.lines))
        for i, v in zip(g.lines, out):
            state[i] = v
    outputs = {ln.out: state[i] for i, ln in enumerate(circuit.lines)
               if not ln.is_garbage}
    garbage = tuple(state[i] for i, ln in enumerate(circuit.lines)
                    if ln.is_garbage)
    return SimResult(tuple(state), outputs, garbage)


def run_lines(circuit: Circuit, columns: list[np.ndarray]) -> list[np.ndarray]:
    """Apply the gate list to per-line value columns (modified in place)."""
    for g in circuit.gates:
        out = gate_spec(g.kind).mapping(*(columns[i] for i in g.lines))
        for i, v in zip(g.lines, out):
            columns[i] = v
    return columns


def simulate(circuit: Circuit,
             inputs: Mapping[str, np.ndarray]) -> list[np.ndarray]:
    """Bit-parallel evaluation; returns the final column of every line.

    ``inputs`` maps each primary-input name to an array of 0/1 values; all
    arrays must have the same length. Constants are broadcast.
    """
    check(circuit)
    _check_assignment(circuit, inputs)
    cols = {k: np.asarray(v, dtype=np.uint8) for k, v in inputs.items()}
    sizes = {c.shape for c in cols.values()}
    if len(sizes) > 1:
        raise ValueError("input columns differ in length")
    shape = sizes.pop() if sizes else (1,)
    columns = []
    for ln in circuit.lines:
        if ln.is_constant:
            columns.append(np.full(shape, ln.inp, dtype=np.uint8))
        else:
            columns.append(cols[ln.inp].copy())
    return run_lines(circuit, columns)


def _index_columns(n: int, width: int) -> list[np.ndarray]:
    idx = np.arange(1 << width, dtype=np.uint32)
    return [((idx >> k) & 1).astype(np.uint8) for k in range(n)]


@dataclass(frozen=True)
class TruthTable:
    """``rows[i]`` is the output vector for packed input index ``i``.

    Input name ``k`` in ``inputs`` is bit ``k`` of the row index. Output
    columns are the primary outputs in line order, then the garbage lines
    in line order (labelled ``g1``, ``g2``, ...).
    """

    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    rows: np.ndarray

    def row(self, index: int) -> dict[str, int]:
        return dict(zip(self.outputs, (int(v) for v in self.rows[index])))

    def format(self) -> str:
        head = " ".join(self.inputs) + " | " + " ".join(self.outputs)
        out = [head.strip()]
        for i, r in enumerate(self.rows):
            ins = " ".join(str((i >> k) & 1).rjust(len(name))
                           for k, name in enumerate(self.inputs))
            outs = " ".join(str(int(v)).rjust(len(name))
                            for v, name in zip(r, self.outputs))
            out.append(f"{ins} | {outs}".strip())
        return "\n".join(out) + "\n"


def truth_table(circuit: Circuit) -> TruthTable:
    check(circuit)
    names = circuit.input_names
    k = len(names)
    if k > MAX_TRUTH_INPUTS:
        raise CapacityError(
            f"{k} primary inputs exceeds the limit of {MAX_TRUTH_INPUTS}")
    cols = _index_columns(k, k)
    final = simulate(circuit, dict(zip(names, cols)) if k else {})
    prim = [i for i, ln in enumerate(circuit.lines) if not ln.is_garbage]
    garb = [i for i, ln in enumerate(circuit.lines) if ln.is_garbage]
    labels = [circuit.lines[i].out for i in prim]
    labels += [f"g{j + 1}" for j in range(len(garb))]
    order = prim + garb
    if order:
        rows = np.stack([final[i] for i in order], axis=1)
    else:
        rows = np.zeros((1 << k, 0), dtype=np.uint8)
    return TruthTable(tuple(names), tuple(labels), rows)


def line_permutation(circuit: Circuit) -> Permutation:
    """Permutation over the full line state, constants treated as free."""
    check(circuit)
    n = circuit.num_lines
    if n > MAX_PERMUTATION_LINES:
        raise CapacityError(
            f"{n} lines exceeds the limit of {MAX_PERMUTATION_LINES}")
    final = run_lines(circuit, _index_columns(n, n))
    image = np.zeros(1 << n, dtype=np.int64)
    for k, col in enumerate(final):
        image |= col.astype(np.int64) << k
    return Permutation(tuple(int(v) for v in image))


def is_structurally_reversible(circuit: Circuit) -> bool:
    """True for any valid wiring of catalog gates (each one a bijection).

    Used for circuits too wide to enumerate with :func:`line_permutation`.
    """
    if validate(circuit):
        return False
    return all(gate_permutation(g.kind).is_bijection() for g in circuit.gates)


def equivalent(c1: Circuit, c2: Circuit) -> bool:
    """Compare primary outputs over every assignment; garbage is ignored."""
    in1, in2 = set(c1.input_names), set(c2.input_names)
    out1, out2 = set(c1.output_names), set(c2.output_names)
    if in1 != in2 or out1 != out2:
        diff = sorted((in1 ^ in2) | (out1 ^ out2))
        raise InterfaceMismatch("interfaces differ: " + ", ".join(diff))
    names = sorted(in1)
    k = len(names)
    if k > MAX_TRUTH_INPUTS:
        raise CapacityError(
            f"{k} primary inputs exceeds the limit of {MAX_TRUTH_INPUTS}")
    cols = dict(zip(names, _index_columns(k, k)))
    f1 = simulate(c1, cols)
    f2 = simulate(c2, cols)
    return all(np.array_equal(f1[c1.output_line(o)], f2[c2.output_line(o)])
               for o in sorted(out1))


def addsub_oracle(width: int, mode: str, a: int, b: int) -> tuple[int, int]:
    """Reference n-bit add/subtract: ``(result mod 2**n, carry or borrow)``."""
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width {width} outside 1..{MAX_WIDTH}")
    top = 1 << width
    if not (0 <= a < top and 0 <= b < top):
        raise ValueError(f"operands must lie in [0, {top})")
    mode = str(getattr(mode, "value", mode)).lower()
    if mode == "add":
        s = a + b
        return s % top, int(s >= top)
    if mode == "sub":
        return (a - b) % top, int(a < b)
    raise ValueError(f"unknown mode {mode!r}")
