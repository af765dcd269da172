"""Reversible-logic adder/subtractor kit: gates, netlists, simulation,
primitive-level decompositions and design generators."""

from .designs import (DesignId, Mode, UnitKind, build_full, build_half,
                      build_ripple, build_unit, mode_to_ctrl,
                      ripple_metrics_paper)
from .gates import (GateKind, GateSpec, Permutation, apply_gate, gate_spec,
                    gate_permutation)
from .netlist import (Circuit, GateInstance, Line, Metrics, compute_metrics,
                      parse, serialize, validate)
from .sim import (addsub_oracle, equivalent, evaluate, line_permutation,
                  truth_table)

__version__ = "0.1.0"
