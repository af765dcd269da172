"""Circuit IR: lines with input/output roles and an ordered gate list.

A line's input side is either a primary-input name or a constant bit; its
output side is either a primary-output name or garbage (``None``).

Textual ``.revnet`` format::

    .version 1
    .name <identifier>
    .lines <n>
    .inputs <tok> ...      # name, or 0/1 for a constant
    .outputs <tok> ...     # name, or '-' for garbage
    .gate <MNEMONIC> <i0> [i1 [i2]]
    .end
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .gates import GateKind, gate_spec, lookup

FORMAT_VERSION = 1
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class CircuitError(ValueError):
    """Raised when an invalid circuit is used where a valid one is required."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int, token: str | None = None):
        self.lineno = lineno
        self.token = token
        super().__init__(message)


@dataclass(frozen=True)
class Line:
    """``inp`` is a name or a constant bit; ``out`` is a name or None."""

    inp: Union[str, int]
    out: str | None = None

    @property
    def is_constant(self) -> bool:
        return not isinstance(self.inp, str)

    @property
    def is_garbage(self) -> bool:
        return self.out is None


@dataclass(frozen=True)
class GateInstance:
    kind: GateKind
    lines: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))


@dataclass(frozen=True)
class Metrics:
    gate_count: int
    garbage_inputs: int
    garbage_outputs: int
    quantum_cost: int

    def __add__(self, other: Metrics) -> Metrics:
        return Metrics(
            self.gate_count + other.gate_count,
            self.garbage_inputs + other.garbage_inputs,
            self.garbage_outputs + other.garbage_outputs,
            self.quantum_cost + other.quantum_cost,
        )

    def scaled(self, k: int) -> Metrics:
        return Metrics(k * self.gate_count, k * self.garbage_inputs,
                       k * self.garbage_outputs, k * self.quantum_cost)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.gate_count, self.garbage_inputs, self.garbage_outputs,
                self.quantum_cost)


@dataclass(frozen=True)
class Circuit:
    name: str
    lines: tuple[Line, ...]
    gates: tuple[GateInstance, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "gates", tuple(self.gates))

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    @property
    def input_names(self) -> list[str]:
        return [ln.inp for ln in self.lines if not ln.is_constant]

    @property
    def output_names(self) -> list[str]:
        return [ln.out for ln in self.lines if not ln.is_garbage]

    def input_line(self, name: str) -> int:
        for i, ln in enumerate(self.lines):
            if ln.inp == name and not ln.is_constant:
                return i
        raise KeyError(name)

    def output_line(self, name: str) -> int:
        for i, ln in enumerate(self.lines):
            if ln.out == name:
                return i
        raise KeyError(name)


def validate(circuit: Circuit) -> list[str]:
    """Return a list of violations; an empty list means the circuit is valid."""
    problems = []
    if not _IDENT.match(circuit.name or ""):
        problems.append(f"invalid circuit name {circuit.name!r}")
    n = circuit.num_lines
    seen_in: set[str] = set()
    seen_out: set[str] = set()
    for i, ln in enumerate(circuit.lines):
        if isinstance(ln.inp, str):
            if not _IDENT.match(ln.inp):
                problems.append(f"invalid input name {ln.inp!r} on line {i}")
            elif ln.inp in seen_in:
                problems.append(f"duplicate input name {ln.inp} on line {i}")
            seen_in.add(ln.inp)
        elif isinstance(ln.inp, bool) or ln.inp not in (0, 1):
            problems.append(f"invalid constant {ln.inp!r} on line {i}")
        if ln.out is not None:
            if not isinstance(ln.out, str) or not _IDENT.match(ln.out):
                problems.append(f"invalid output name {ln.out!r} on line {i}")
            elif ln.out in seen_out:
                problems.append(f"duplicate output name {ln.out} on line {i}")
            seen_out.add(ln.out)
    for g, gate in enumerate(circuit.gates):
        if not isinstance(gate.kind, GateKind):
            problems.append(f"unknown gate kind in gate {g}")
            continue
        arity = gate_spec(gate.kind).arity
        if len(gate.lines) != arity:
            problems.append(
                f"arity mismatch in gate {g}: {gate.kind.value} takes "
                f"{arity} lines, got {len(gate.lines)}")
        for idx in gate.lines:
            if not isinstance(idx, int) or not 0 <= idx < n:
                problems.append(f"line index {idx} out of range in gate {g}")
        if len(set(gate.lines)) != len(gate.lines):
            problems.append(f"duplicate line in gate {g}")
    return problems


def check(circuit: Circuit) -> Circuit:
    problems = validate(circuit)
    if problems:
        raise CircuitError(problems)
    return circuit


def compute_metrics(circuit: Circuit) -> Metrics:
    check(circuit)
    return Metrics(
        gate_count=len(circuit.gates),
        garbage_inputs=sum(ln.is_constant for ln in circuit.lines),
        garbage_outputs=sum(ln.is_garbage for ln in circuit.lines),
        quantum_cost=sum(gate_spec(g.kind).quantum_cost
                         for g in circuit.gates),
    )


def concatenate(first: Circuit, second: Circuit, name: str | None = None):
    """Run ``second`` after ``first`` on the same lines.

    Input roles come from ``first``, output roles from ``second``.
    """
    if first.num_lines != second.num_lines:
        raise ValueError("circuits must have the same number of lines")
    lines = tuple(Line(a.inp, b.out)
                  for a, b in zip(first.lines, second.lines))
    return Circuit(name or first.name, lines, first.gates + second.gates)


def serialize(circuit: Circuit) -> str:
    check(circuit)
    ins = " ".join(str(ln.inp) for ln in circuit.lines)
    outs = " ".join("-" if ln.out is None else ln.out for ln in circuit.lines)
    rows = [
        f".version {FORMAT_VERSION}",
        f".name {circuit.name}",
        f".lines {circuit.num_lines}",
        f".inputs {ins}".rstrip(),
        f".outputs {outs}".rstrip(),
    ]
    for g in circuit.gates:
        idx = " ".join(str(i) for i in g.lines)
        rows.append(f".gate {gate_spec(g.kind).mnemonic} {idx}")
    rows.append(".end")
    return "\n".join(rows) + "\n"


_ORDER = [".version", ".name", ".lines", ".inputs", ".outputs"]


def parse(text: str) -> Circuit:
    """Parse ``.revnet`` text. Errors carry the 1-based line number."""
    header: dict[str, tuple[int, list[str]]] = {}
    gates: list[GateInstance] = []
    stage = 0
    n = 0
    ended = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        key, args = toks[0], toks[1:]
        if ended:
            raise ParseError(f"content after .end at line {lineno}",
                             lineno, key)
        if stage < len(_ORDER):
            if key != _ORDER[stage]:
                raise ParseError(
                    f"expected {_ORDER[stage]} at line {lineno}, got {key}",
                    lineno, key)
            header[key] = (lineno, args)
            stage += 1
            if key == ".version":
                _parse_version(args, lineno)
            elif key == ".name":
                if len(args) != 1 or not _IDENT.match(args[0]):
                    raise ParseError(f"bad circuit name at line {lineno}",
                                     lineno, args[0] if args else None)
            elif key == ".lines":
                if len(args) != 1 or not args[0].isdigit():
                    raise ParseError(f"bad line count at line {lineno}",
                                     lineno, args[0] if args else None)
                n = int(args[0])
            continue
        if key == ".gate":
            gates.append(_parse_gate(args, lineno, n))
        elif key == ".end":
            if args:
                raise ParseError(f"unexpected token {args[0]} at line "
                                 f"{lineno}", lineno, args[0])
            ended = True
        else:
            raise ParseError(f"unexpected directive {key} at line {lineno}",
                             lineno, key)
    if stage < len(_ORDER):
        raise ParseError(f"missing {_ORDER[stage]}", 0)
    if not ended:
        raise ParseError("missing .end", 0)

    name = header[".name"][1][0]
    inputs = _parse_side(header[".inputs"], n, output=False)
    outputs = _parse_side(header[".outputs"], n, output=True)
    lines = tuple(Line(i, o) for i, o in zip(inputs, outputs))
    return Circuit(name, lines, tuple(gates))


def _parse_version(args, lineno):
    if args != [str(FORMAT_VERSION)]:
        tok = args[0] if args else None
        raise ParseError(f"unsupported version {tok} at line {lineno}",
                         lineno, tok)


def _parse_side(entry, n, output):
    lineno, args = entry
    if len(args) != n:
        raise ParseError(
            f"expected {n} tokens at line {lineno}, got {len(args)}", lineno)
    seen = set()
    values = []
    for tok in args:
        if output and tok == "-":
            values.append(None)
            continue
        if not output and tok in ("0", "1"):
            values.append(int(tok))
            continue
        if not _IDENT.match(tok):
            raise ParseError(f"bad token {tok} at line {lineno}", lineno, tok)
        if tok in seen:
            raise ParseError(f"duplicate name {tok} at line {lineno}",
                             lineno, tok)
        seen.add(tok)
        values.append(tok)
    return values


def _parse_gate(args, lineno, n):
    if not args:
        raise ParseError(f"missing gate mnemonic at line {lineno}", lineno)
    mnemonic, idx = args[0], args[1:]
    try:
        kind = lookup(mnemonic)
    except KeyError:
        raise ParseError(f"unknown gate {mnemonic} at line {lineno}",
                         lineno, mnemonic) from None
    arity = gate_spec(kind).arity
    if len(idx) != arity:
        raise ParseError(
            f"arity mismatch at line {lineno}: {mnemonic} takes {arity} "
            f"lines, got {len(idx)}", lineno, mnemonic)
    for tok in idx:
        if not tok.isdigit():
            raise ParseError(f"bad line index {tok} at line {lineno}",
                             lineno, tok)
    lines = tuple(int(t) for t in idx)
    for i, tok in zip(lines, idx):
        if i >= n:
            raise ParseError(f"line index {tok} out of range at line "
                             f"{lineno}", lineno, tok)
    if len(set(lines)) != len(lines):
        raise ParseError(f"duplicate line in gate at line {lineno}",
                         lineno, mnemonic)
    return GateInstance(kind, lines)
