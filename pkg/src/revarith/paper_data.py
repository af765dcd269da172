"""Published reference values used by the comparison report.

Metric tuples are (gate_count, garbage_inputs, garbage_outputs,
quantum_cost), the field order of :class:`revarith.netlist.Metrics`. The
published comparison tables list garbage outputs before garbage inputs;
the trailing comments keep that published column order.
"""

DATA_VERSION = 1

# Full adder/subtractor unit comparison.
FULL_UNIT = {
    1: (8, 3, 5, 21),   # Design I:   gates 08, g-out 05, g-in 03, QC 21
    2: (4, 1, 3, 14),   # Design II:  gates 04, g-out 03, g-in 01, QC 14
    3: (4, 1, 3, 10),   # Design III: gates 04, g-out 03, g-in 01, QC 10
}

# Eight-bit parallel adder/subtractor comparison.
EIGHT_BIT = {
    1: (60, 23, 38, 159),   # Design I:   gates 60, g-out 38, g-in 23, QC 159
    2: (31, 8, 23, 106),    # Design II:  gates 31, g-out 23, g-in 08, QC 106
    3: (31, 8, 23, 76),     # Design III: gates 31, g-out 23, g-in 08, QC 76
}

# Half units (stated per design, not tabulated).
HALF_UNIT = {
    1: (4, 2, 3, 12),
    2: (3, 1, 2, 8),
    3: (3, 1, 2, 6),
}

# Stated improvement percentages:
# (scope, metric, from design, to design, stated value)
IMPROVEMENTS = [
    ("unit", "gate_count", 1, 3, 100.0),
    ("unit", "garbage_outputs", 1, 3, 65.0),
    ("unit", "garbage_inputs", 1, 3, 200.0),
    ("unit", "quantum_cost", 2, 3, 40.0),
    ("unit", "quantum_cost", 1, 3, 110.0),
    ("8-bit", "gate_count", 1, 3, 93.5),
    ("8-bit", "garbage_outputs", 1, 3, 65.21),
    ("8-bit", "garbage_inputs", 1, 3, 187.5),
    ("8-bit", "quantum_cost", 2, 3, 39.47),
    ("8-bit", "quantum_cost", 1, 3, 109.20),
]

# Allowed gap between a recomputed and a stated percentage. The stated
# unit garbage-output figure is 65 where 5 -> 3 gives 66.67.
PERCENT_TOLERANCE = 2.0
