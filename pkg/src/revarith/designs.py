"""Adder/subtractor generators: half and full units and N-bit ripples.

Unit circuits use primary inputs ``A``, ``B`` (``Cin`` for full units) and
``ctrl`` and primary outputs ``S_D`` / ``C_B``. All ancilla lines start at
constant 0.

ctrl polarity differs per design. The TR gate's product term is ``A.B'``,
so the TR-based designs (1 and 2) add with ctrl=1 and subtract with
ctrl=0. Design 3 (Peres-based) adds with ctrl=0. Callers should go through
:func:`mode_to_ctrl` rather than raw ctrl values.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .gates import GateKind
from .netlist import Circuit, GateInstance, Line, Metrics, compute_metrics

MAX_RIPPLE_WIDTH = 64

FG, PG, TR, F, NOT = (GateKind.FG, GateKind.PERES, GateKind.TR,
                      GateKind.FREDKIN, GateKind.NOT)


class DesignId(Enum):
    D1 = 1
    D2 = 2
    D3 = 3


class Mode(Enum):
    ADD = "add"
    SUB = "sub"


class UnitKind(Enum):
    HALF = "half"
    FULL = "full"


def design(value) -> DesignId:
    """Accept a DesignId, 1/2/3, or strings like ``"3"`` / ``"D3"``."""
    if isinstance(value, DesignId):
        return value
    text = str(value).upper().lstrip("D")
    return DesignId(int(text))


def mode_to_ctrl(d: DesignId) -> dict[Mode, int]:
    if design(d) is DesignId.D3:
        return {Mode.ADD: 0, Mode.SUB: 1}
    return {Mode.ADD: 1, Mode.SUB: 0}


def _g(kind, *lines):
    return GateInstance(kind, lines)


# (line roles, gates) per design and unit. Roles: input name or constant,
# output name or None for garbage.
_UNITS = {
    (DesignId.D3, UnitKind.HALF): (
        [("A", None), ("B", "S_D"), ("ctrl", None), (0, "C_B")],
        [_g(FG, 2, 0), _g(PG, 0, 1, 3), _g(FG, 2, 1)],
    ),
    (DesignId.D3, UnitKind.FULL): (
        [("A", None), ("B", None), ("Cin", "S_D"), ("ctrl", None),
         (0, "C_B")],
        [_g(FG, 3, 0), _g(PG, 0, 1, 4), _g(PG, 1, 2, 4), _g(FG, 3, 2)],
    ),
    (DesignId.D2, UnitKind.HALF): (
        [("A", "S_D"), ("B", None), ("ctrl", None), (0, "C_B")],
        [_g(FG, 2, 0), _g(TR, 1, 0, 3), _g(FG, 2, 0)],
    ),
    (DesignId.D2, UnitKind.FULL): (
        [("A", "S_D"), ("B", None), ("Cin", None), ("ctrl", None),
         (0, "C_B")],
        [_g(FG, 3, 0), _g(TR, 1, 0, 4), _g(TR, 2, 0, 4), _g(FG, 3, 0)],
    ),
    # line 3 copies B then becomes A^B; F(ctrl, A'B, AB) leaves the selected
    # product on line 1.
    (DesignId.D1, UnitKind.HALF): (
        [("A", None), ("B", "C_B"), ("ctrl", None), (0, "S_D"), (0, None)],
        [_g(FG, 1, 3), _g(F, 0, 1, 4), _g(FG, 0, 3), _g(F, 2, 1, 4)],
    ),
    # The last FG copies ctrl onto a spare constant; the unit is complete
    # without it.
    (DesignId.D1, UnitKind.FULL): (
        [("A", None), ("B", "C_B"), ("Cin", None), ("ctrl", None),
         (0, "S_D"), (0, None), (0, None)],
        [_g(FG, 1, 4), _g(F, 0, 1, 5), _g(FG, 0, 4), _g(F, 3, 1, 5),
         _g(FG, 3, 4), _g(TR, 2, 4, 1), _g(FG, 3, 4), _g(FG, 3, 6)],
    ),
}


@lru_cache(maxsize=None)
def build_unit(d: DesignId, unit: UnitKind) -> Circuit:
    d, unit = design(d), UnitKind(unit)
    roles, gates = _UNITS[(d, unit)]
    lines = tuple(Line(i, o) for i, o in roles)
    return Circuit(f"d{d.value}_{unit.value}", lines, tuple(gates))


def build_half(d: DesignId) -> Circuit:
    return build_unit(design(d), UnitKind.HALF)


def build_full(d: DesignId) -> Circuit:
    return build_unit(design(d), UnitKind.FULL)


@lru_cache(maxsize=None)
def build_ripple(d: DesignId, width: int) -> Circuit:
    """Chain one half unit and ``width - 1`` full units.

    Each stage's C_B line is the next stage's Cin. A single ctrl line runs
    through every stage; the units only use it as a control, so it reaches
    each stage unchanged.
    """
    d = design(d)
    if not 1 <= width <= MAX_RIPPLE_WIDTH:
        raise ValueError(f"width {width} outside 1..{MAX_RIPPLE_WIDTH}")
    inputs: list = []
    outputs: list = []
    gates: list[GateInstance] = []
    ctrl_line = None
    carry_line = None
    for stage in range(width):
        unit = build_unit(d, UnitKind.HALF if stage == 0 else UnitKind.FULL)
        local = []
        for ln in unit.lines:
            if ln.inp == "ctrl" and ctrl_line is not None:
                local.append(ctrl_line)
                continue
            if ln.inp == "Cin":
                local.append(carry_line)
                continue
            local.append(len(inputs))
            inputs.append(ln.inp if ln.is_constant or ln.inp == "ctrl"
                          else f"{ln.inp}{stage}")
            outputs.append(None)
            if ln.inp == "ctrl":
                ctrl_line = local[-1]
        for g in unit.gates:
            gates.append(GateInstance(g.kind, tuple(local[i] for i in g.lines)))
        for ln, gl in zip(unit.lines, local):
            if ln.out == "S_D":
                outputs[gl] = f"S_D{stage}"
            elif ln.out == "C_B":
                outputs[gl] = f"C_B{stage + 1}"
                carry_line = gl
            else:
                outputs[gl] = None
    lines = tuple(Line(i, o) for i, o in zip(inputs, outputs))
    return Circuit(f"d{d.value}_ripple{width}", lines, tuple(gates))


def ripple_metrics_paper(d: DesignId, width: int) -> Metrics:
    """Per-unit sum: half-unit metrics plus ``width - 1`` full units.

    Counts ctrl as a garbage output of every unit, unlike the fused
    netlist from :func:`build_ripple`.
    """
    if width < 1:
        raise ValueError("width must be at least 1")
    half = compute_metrics(build_half(d))
    full = compute_metrics(build_full(d))
    return half + full.scaled(width - 1)


def ripple_metrics_as_built(d: DesignId, width: int) -> Metrics:
    return compute_metrics(build_ripple(d, width))


def mode_normalized(circuit: Circuit, d: DesignId) -> Circuit:
    """Rewire so ctrl=0 means add, whatever the design's native polarity.

    Prepends a NOT on the ctrl line for designs that add at ctrl=1.
    """
    if mode_to_ctrl(d)[Mode.ADD] == 0:
        return circuit
    ctrl = circuit.input_line("ctrl")
    return Circuit(circuit.name, circuit.lines,
                   (GateInstance(NOT, (ctrl,)),) + circuit.gates)
