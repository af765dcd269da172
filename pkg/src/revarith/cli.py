"""``revarith`` command line.

Exit status: 0 on success, 1 when a verification or comparison fails,
2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import designs, netlist, quantum, report, sim, verify
from .gates import GateKind, all_specs, gate_spec, lookup

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _gate_arg(text: str) -> GateKind:
    try:
        return lookup(text)
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown gate {text}") from None


def _design_arg(text: str) -> designs.DesignId:
    try:
        return designs.design(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"design must be 1, 2 or 3, got {text}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, metavar="K",
                        help="worker processes for exhaustive sweeps")
    common.add_argument("--tsv", action="store_true",
                        help="tab-separated output")

    p = argparse.ArgumentParser(
        prog="revarith",
        description="Reversible adder/subtractor generator and checker.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("gates", parents=[common], help="list the gate catalog")

    s = sub.add_parser("truth", parents=[common], help="gate truth table")
    s.add_argument("gate", type=_gate_arg)

    s = sub.add_parser("build", parents=[common], help="emit a .revnet file")
    s.add_argument("--design", type=_design_arg, required=True)
    s.add_argument("--width", type=int, default=8)
    s.add_argument("--unit", choices=["half", "full"],
                   help="emit a single unit instead of a ripple")
    s.add_argument("--out", type=Path, help="output file (default stdout)")

    s = sub.add_parser("sim", parents=[common], help="simulate one vector")
    s.add_argument("--file", type=Path, required=True)
    s.add_argument("--set", dest="assign", default="",
                   help="comma-separated name=bit pairs")
    s.add_argument("--mode", choices=["add", "sub"])
    s.add_argument("--design", type=_design_arg,
                   help="design for --mode (default: from circuit name)")

    s = sub.add_parser("verify", parents=[common],
                       help="check a ripple against integer arithmetic")
    s.add_argument("--design", type=_design_arg, required=True)
    s.add_argument("--width", type=int, default=8)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("metrics", parents=[common], help="circuit metrics")
    s.add_argument("--design", type=_design_arg, required=True)
    s.add_argument("--width", type=int, default=8)
    s.add_argument("--unit", choices=["half", "full"])
    g = s.add_mutually_exclusive_group()
    g.add_argument("--paper-accounting", action="store_true",
                   help="sum of per-unit metrics")
    g.add_argument("--as-built", action="store_true",
                   help="metrics of the fused netlist")

    s = sub.add_parser("decompose", parents=[common],
                       help="primitive lowering of a gate")
    s.add_argument("gate", type=_gate_arg)

    s = sub.add_parser("search", parents=[common],
                       help="brute-force CNOT/CV/CV+ search")
    s.add_argument("gate", type=_gate_arg)
    s.add_argument("--max-len", type=int, default=5)

    s = sub.add_parser("equiv", parents=[common],
                       help="compare primary outputs of two netlists")
    s.add_argument("file1", type=Path)
    s.add_argument("file2", type=Path)

    s = sub.add_parser("compare", parents=[common],
                       help="reproduce the published metric tables")
    s.add_argument("--paper", action="store_true",
                   help="compare against the published values (default)")
    return p


def _row(cells, tsv):
    return ("\t" if tsv else "  ").join(str(c) for c in cells)


def cmd_gates(args, out):
    cells = [("gate", "mnemonic", "arity", "cost", "mapping")]
    for spec in all_specs():
        cells.append((spec.kind.value, spec.mnemonic, spec.arity,
                      spec.quantum_cost, spec.formula))
    if args.tsv:
        for c in cells:
            out.write(_row(c, True) + "\n")
        return EXIT_OK
    widths = [max(len(str(c[i])) for c in cells) for i in range(4)]
    for c in cells:
        out.write("  ".join(str(v).ljust(w) for v, w in zip(c, widths))
                  + "  " + c[4] + "\n")
    return EXIT_OK


def gate_circuit(kind: GateKind) -> netlist.Circuit:
    """Single-gate circuit with inputs A, B, C and outputs P, Q, R."""
    n = gate_spec(kind).arity
    lines = [netlist.Line(i, o) for i, o in zip("ABC"[:n], "PQR"[:n])]
    return netlist.Circuit(gate_spec(kind).mnemonic, lines,
                           [netlist.GateInstance(kind, tuple(range(n)))])


def cmd_truth(args, out):
    tt = sim.truth_table(gate_circuit(args.gate))
    if args.tsv:
        out.write("\t".join(tt.inputs + tt.outputs) + "\n")
        for i, r in enumerate(tt.rows):
            ins = [str((i >> k) & 1) for k in range(len(tt.inputs))]
            out.write("\t".join(ins + [str(int(v)) for v in r]) + "\n")
    else:
        out.write(tt.format())
    return EXIT_OK


def _selected_circuit(args) -> netlist.Circuit:
    if args.unit:
        return designs.build_unit(args.design, designs.UnitKind(args.unit))
    if not 1 <= args.width <= designs.MAX_RIPPLE_WIDTH:
        raise UsageError(f"--width must be in 1..{designs.MAX_RIPPLE_WIDTH}")
    return designs.build_ripple(args.design, args.width)


def cmd_build(args, out):
    text = netlist.serialize(_selected_circuit(args))
    if args.out:
        args.out.write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def _load(path: Path) -> netlist.Circuit:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        c = netlist.parse(text)
    except netlist.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    problems = netlist.validate(c)
    if problems:
        raise UsageError(f"{path}: " + "; ".join(problems))
    return c


def _parse_assignment(text: str) -> dict[str, int]:
    result = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep or value not in ("0", "1"):
            raise UsageError(f"bad --set entry {item!r}, expected name=0|1")
        result[name.strip()] = int(value)
    return result


def cmd_sim(args, out):
    c = _load(args.file)
    assignment = _parse_assignment(args.assign)
    if args.mode:
        d = args.design
        if d is None:
            m = re.match(r"d([123])_", c.name)
            if not m:
                raise UsageError("--mode needs --design for this circuit")
            d = designs.design(m.group(1))
        assignment["ctrl"] = designs.mode_to_ctrl(d)[designs.Mode(args.mode)]
    try:
        res = sim.evaluate(c, assignment)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sep = "\t" if args.tsv else "="
    for name, bit in res.outputs.items():
        out.write(f"{name}{sep}{bit}\n")
    for k, bit in enumerate(res.garbage, start=1):
        out.write(f"g{k}{sep}{bit}\n")
    return EXIT_OK


def cmd_verify(args, out):
    width = args.width
    if not 1 <= width <= 64:
        raise UsageError("--width must be in 1..64")
    exhaustive = args.exhaustive or (args.samples is None and width <= 9)
    if exhaustive:
        if width > verify.MAX_EXHAUSTIVE_WIDTH:
            raise UsageError("exhaustive sweep limited to width "
                             f"{verify.MAX_EXHAUSTIVE_WIDTH}")
        res = verify.verify_exhaustive(args.design, width, jobs=args.jobs)
        how = "exhaustive"
    else:
        samples = args.samples if args.samples is not None else 10_000
        res = verify.verify_sampled(args.design, width, samples, args.seed)
        how = f"sampled seed={args.seed}"
    status = "ok" if res.ok else "FAIL"
    if args.tsv:
        out.write(_row(["design", "width", "method", "checked", "mismatches",
                        "status"], True) + "\n")
        out.write(_row([args.design.value, width, how, res.checked,
                        res.mismatches, status], True) + "\n")
    else:
        out.write(f"design {args.design.value} width {width} ({how}): "
                  f"{res.checked} vectors checked, {res.mismatches} "
                  f"mismatches: {status}\n")
        if res.first_failure:
            mode, a, b, got, want = res.first_failure
            out.write(f"first failure: {mode} a={a} b={b} got={got} "
                      f"expected={want}\n")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_metrics(args, out):
    if args.unit:
        m = netlist.compute_metrics(_selected_circuit(args))
        label = f"{args.unit} unit"
    else:
        if args.width < 1 or args.width > designs.MAX_RIPPLE_WIDTH:
            raise UsageError(
                f"--width must be in 1..{designs.MAX_RIPPLE_WIDTH}")
        if args.as_built:
            m = designs.ripple_metrics_as_built(args.design, args.width)
            label = f"{args.width}-bit as-built"
        else:
            m = designs.ripple_metrics_paper(args.design, args.width)
            label = f"{args.width}-bit per-unit accounting"
    names = report.FIELDS
    if args.tsv:
        out.write("\t".join(("design", "scope") + names) + "\n")
        out.write("\t".join([str(args.design.value), label]
                            + [str(v) for v in m.as_tuple()]) + "\n")
    else:
        out.write(f"design {args.design.value}, {label}\n")
        for n, v in zip(names, m.as_tuple()):
            out.write(f"  {n:<16} {v}\n")
    return EXIT_OK


def cmd_decompose(args, out):
    rep = quantum.verify_decomposition(args.gate)
    rows = [
        ("gate", args.gate.value),
        ("sequence", str(rep.sequence)),
        ("primitives", len(rep.sequence)),
        ("unitary_match", str(rep.unitary_match).lower()),
        ("max_error", f"{rep.max_error:.3g}"),
        ("grouped_cost", rep.computed_cost),
        ("catalog_cost", rep.catalog_cost),
        ("cost_match", str(rep.cost_match).lower()),
    ]
    for k, v in rows:
        out.write(f"{k}\t{v}\n" if args.tsv else f"{k:<14} {v}\n")
    return EXIT_OK if rep.unitary_match else EXIT_FAIL


def cmd_search(args, out):
    if gate_spec(args.gate).arity != 3:
        raise UsageError("search needs a 3-line gate")
    if not 0 <= args.max_len <= quantum.MAX_SEARCH_LEN:
        raise UsageError(f"--max-len must be in 0..{quantum.MAX_SEARCH_LEN}")
    seq = quantum.search_decomposition(args.gate, args.max_len)
    if seq is None:
        out.write(f"{args.gate.value}: no sequence of length <= "
                  f"{args.max_len}\n")
    else:
        out.write(f"{args.gate.value}: length {len(seq)}: {seq}\n")
    return EXIT_OK


def cmd_equiv(args, out):
    c1, c2 = _load(args.file1), _load(args.file2)
    try:
        same = sim.equivalent(c1, c2)
    except (sim.InterfaceMismatch, sim.CapacityError) as exc:
        raise UsageError(str(exc)) from None
    out.write("equivalent\n" if same else "not equivalent\n")
    return EXIT_OK if same else EXIT_FAIL


def cmd_compare(args, out):
    rep = report.paper_compare()
    out.write(rep.format(tsv=args.tsv))
    return EXIT_OK if rep.ok else EXIT_FAIL


COMMANDS = {
    "gates": cmd_gates, "truth": cmd_truth, "build": cmd_build,
    "sim": cmd_sim, "verify": cmd_verify, "metrics": cmd_metrics,
    "decompose": cmd_decompose, "search": cmd_search, "equiv": cmd_equiv,
    "compare": cmd_compare,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("revarith: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"revarith: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
