"""Functional sweeps of ripple adder/subtractors against the integer oracle."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .designs import DesignId, Mode, build_ripple, design, mode_to_ctrl
from .sim import addsub_oracle, simulate

MAX_EXHAUSTIVE_WIDTH = 12


@dataclass(frozen=True)
class SweepResult:
    design: DesignId
    width: int
    checked: int
    mismatches: int
    first_failure: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def ripple_compute(d: DesignId, width: int, mode: Mode,
                   a: np.ndarray, b: np.ndarray):
    """Simulate the ripple for operand arrays; returns (result, flag)."""
    d, mode = design(d), Mode(mode)
    circuit = build_ripple(d, width)
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    inputs = {"ctrl": np.full(a.shape, mode_to_ctrl(d)[mode], np.uint8)}
    for i in range(width):
        inputs[f"A{i}"] = ((a >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
        inputs[f"B{i}"] = ((b >> np.uint64(i)) & np.uint64(1)).astype(np.uint8)
    final = simulate(circuit, inputs)
    result = np.zeros(a.shape, dtype=np.uint64)
    for i in range(width):
        bit = final[circuit.output_line(f"S_D{i}")].astype(np.uint64)
        result |= bit << np.uint64(i)
    flag = final[circuit.output_line(f"C_B{width}")].astype(np.uint8)
    return result, flag


def oracle_arrays(width: int, mode: Mode, a: np.ndarray, b: np.ndarray):
    """Vectorised form of :func:`addsub_oracle` (widths up to 63)."""
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    mask = np.uint64((1 << width) - 1)
    if Mode(mode) is Mode.ADD:
        total = a + b
        return total & mask, (total >> np.uint64(width)).astype(np.uint8)
    return (a - b) & mask, (a < b).astype(np.uint8)


def _check_block(d, width, mode, a, b):
    got_r, got_f = ripple_compute(d, width, mode, a, b)
    if width < 64:
        exp_r, exp_f = oracle_arrays(width, mode, a, b)
    else:
        pairs = [addsub_oracle(width, mode.value, int(x), int(y))
                 for x, y in zip(a, b)]
        exp_r = np.array([p[0] for p in pairs], dtype=np.uint64)
        exp_f = np.array([p[1] for p in pairs], dtype=np.uint8)
    bad = np.flatnonzero((got_r != exp_r) | (got_f != exp_f))
    first = None
    if bad.size:
        k = bad[0]
        first = (mode.value, int(a[k]), int(b[k]),
                 (int(got_r[k]), int(got_f[k])), (int(exp_r[k]), int(exp_f[k])))
    return a.size, int(bad.size), first


def _exhaustive_block(args):
    d, width, mode, lo, hi = args
    idx = np.arange(lo, hi, dtype=np.uint64)
    a = idx & np.uint64((1 << width) - 1)
    b = idx >> np.uint64(width)
    return _check_block(d, width, mode, a, b)


def _merge(d, width, parts) -> SweepResult:
    checked = sum(p[0] for p in parts)
    bad = sum(p[1] for p in parts)
    first = next((p[2] for p in parts if p[2] is not None), None)
    return SweepResult(d, width, checked, bad, first)


def verify_exhaustive(d, width: int, modes=tuple(Mode),
                      jobs: int = 1) -> SweepResult:
    """Every (a, b) pair in every mode; ``4**width * len(modes)`` vectors."""
    d = design(d)
    if not 1 <= width <= MAX_EXHAUSTIVE_WIDTH:
        raise ValueError(
            f"exhaustive sweep limited to widths 1..{MAX_EXHAUSTIVE_WIDTH}")
    total = 1 << (2 * width)
    chunks = max(1, jobs)
    step = -(-total // chunks)
    tasks = [(d, width, Mode(m), lo, min(lo + step, total))
             for m in modes for lo in range(0, total, step)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_exhaustive_block, tasks))
    else:
        parts = [_exhaustive_block(t) for t in tasks]
    return _merge(d, width, parts)


def verify_sampled(d, width: int, samples: int, seed: int = 0,
                   modes=tuple(Mode)) -> SweepResult:
    """``samples`` uniform random pairs per mode from a seeded generator."""
    d = design(d)
    if not 1 <= width <= 64:
        raise ValueError("width outside 1..64")
    rng = np.random.default_rng(seed)
    parts = []
    for m in modes:
        a = _uniform(rng, width, samples)
        b = _uniform(rng, width, samples)
        parts.append(_check_block(d, width, Mode(m), a, b))
    return _merge(d, width, parts)


def _uniform(rng, width, n):
    if width == 64:
        return rng.integers(0, 2**64, size=n, dtype=np.uint64,
                            endpoint=False)
    return rng.integers(0, 1 << width, size=n, dtype=np.uint64)
