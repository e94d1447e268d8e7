"""Closed-form versus oracle checks, identity checks and bound-ordering scans."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .blockstats import (
    BecOutput,
    bec_block_mi,
    bec_block_mi_bruteforce,
    bec_block_output_prob,
    bsc_block_mi,
    bsc_block_output_prob,
    hamming_rho3_bsc_mi,
    local_code_bec_mi_exact,
    local_code_bsc_mi,
)
from .capacity import (
    cap_bec_hamming_rho3_lower,
    cap_bec_lrc,
    cap_bec_rho_converse,
    cap_bsc_lrc_bounds,
    cap_general_bounds,
)
from .codes import coset_weight_table, hamming_code, random_linear_code, single_parity_code
from .gf2 import BitVector
from .infofn import binary_entropy, binary_entropy_inv, bsc_capacity


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tol: float
    seconds: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<32} max_dev={self.max_deviation:.3e}  tol={self.tol:.1e}"


def grid(lo: float, hi: float, step: float) -> list[float]:
    n = int(round((hi - lo) / step))
    return [round(lo + i * step, 12) for i in range(n + 1)]


def _bec_closed_vs_enumeration(max_r: int, rng) -> float:
    return max(abs(bec_block_mi(p, r) - bec_block_mi_bruteforce(p, r))
               for r in range(1, max_r + 1) for p in grid(0, 1, 0.05))


def _bec_closed_vs_rank_oracle(max_r: int, rng) -> float:
    return max(abs(bec_block_mi(p, r) - local_code_bec_mi_exact(single_parity_code(r), p))
               for r in range(1, max_r + 1) for p in grid(0, 1, 0.05))


def _cap_bec_is_block_mi(max_r: int, rng) -> float:
    return max(abs(cap_bec_lrc(p, r).value - bec_block_mi(p, r))
               for r in range(1, max_r + 1) for p in grid(0, 1, 0.05))


def _bsc_closed_vs_coset(max_r: int, rng) -> float:
    return max(abs(bsc_block_mi(p, r) - local_code_bsc_mi(single_parity_code(r), p))
               for r in range(1, max_r + 1) for p in grid(0, 0.5, 0.05))


def _hamming_closed_vs_coset(max_r: int, rng) -> float:
    dev = 0.0
    for m in (2, 3, 4):
        code = hamming_code(m)
        r = code.length - 1
        dev = max(dev, max(abs(hamming_rho3_bsc_mi(p, r) - local_code_bsc_mi(code, p))
                           for p in grid(0, 0.5, 0.01)))
    return dev


def _coset_identity(max_r: int, rng) -> float:
    codes = [single_parity_code(r) for r in range(1, 11)]
    codes += [hamming_code(m) for m in (2, 3, 4)]
    for _ in range(20):
        length = int(rng.integers(2, 13))
        codes.append(random_linear_code(length, int(rng.integers(1, length + 1)), rng))
    dev = 0.0
    for code in codes:
        table = coset_weight_table(code)
        table.check_invariants()
        for p in grid(0, 0.5, 0.05):
            dev = max(dev, abs(float(np.sum(table.enumerator_values(p))) - 1.0))
    return dev


def _output_normalization(max_r: int, rng) -> float:
    dev = 0.0
    for r in range(1, min(max_r, 8) + 1):
        delta = r + 1
        outputs = [BecOutput.from_symbols(s) for s in itertools.product((0, 1, None), repeat=delta)]
        for p in grid(0, 1, 0.1):
            total = math.fsum(bec_block_output_prob(y, p, r) for y in outputs)
            dev = max(dev, abs(total - 1.0))
        for p in grid(0, 0.5, 0.05):
            total = math.fsum(bsc_block_output_prob(BitVector(delta, b), p, r) for b in range(1 << delta))
            dev = max(dev, abs(total - 1.0))
    return dev


def _bound_ordering(max_r: int, rng) -> float:
    """Largest violation of lower <= upper <= Shannon, or of equality at the ends."""
    viol = 0.0
    ps = np.linspace(0.0, 0.5, 1000)
    caps = np.linspace(0.0, 1.0, 1000)
    for r in range(1, 11):
        for p in ps:
            lo, up = cap_bsc_lrc_bounds(float(p), r)
            shannon = bsc_capacity(float(p))
            viol = max(viol, lo.value - up.value, up.value - shannon, -lo.value)
        for c in caps:
            lo, up = cap_general_bounds(float(c), r)
            viol = max(viol, lo.value - up.value, up.value - float(c), -lo.value)
        for p in (0.0, 0.5):
            lo, up = cap_bsc_lrc_bounds(p, r)
            viol = max(viol, abs(lo.value - up.value))
        for c in (0.0, 1.0):
            lo, up = cap_general_bounds(c, r)
            viol = max(viol, abs(lo.value - up.value))
    for r in (2, 6, 14):
        for p in grid(0, 1, 0.01):
            viol = max(viol, cap_bec_hamming_rho3_lower(p, r).value - cap_bec_rho_converse(p, 3, r).value)
    return max(viol, 0.0)


def _general_chain(max_r: int, rng) -> float:
    dev = 0.0
    for r in range(1, max_r + 1):
        for p in grid(0, 1, 0.01):
            dev = max(dev, abs(cap_general_bounds(1.0 - p, r)[1].value - cap_bec_lrc(p, r).value))
        for p in grid(0, 0.5, 0.01):
            lo_general = cap_general_bounds(bsc_capacity(p), r)[0].value
            dev = max(dev, abs(lo_general - cap_bsc_lrc_bounds(p, r)[0].value))
    return dev


def _hinv_roundtrip(max_r: int, rng) -> float:
    xs = rng.uniform(0.0, 0.5, size=10_000)
    return max(abs(binary_entropy_inv(binary_entropy(float(x))) - float(x)) for x in xs)


CHECKS: list[tuple[str, Callable]] = [
    ("bec_closed_vs_enumeration", _bec_closed_vs_enumeration),
    ("bec_closed_vs_rank_oracle", _bec_closed_vs_rank_oracle),
    ("cap_bec_equals_block_mi", _cap_bec_is_block_mi),
    ("bsc_closed_vs_coset_table", _bsc_closed_vs_coset),
    ("hamming_closed_vs_coset_table", _hamming_closed_vs_coset),
    ("coset_enumerator_sums_to_one", _coset_identity),
    ("block_output_normalization", _output_normalization),
    ("bound_ordering", _bound_ordering),
    ("general_channel_chain", _general_chain),
    ("hinv_roundtrip", _hinv_roundtrip),
]


def run_checks(max_r: int = 8, tol: float = 1e-9, seed: int = 0) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        rng = np.random.default_rng([seed, len(results)])
        t0 = time.perf_counter()
        dev = float(fn(max_r, rng))
        results.append(CheckResult(name, dev, tol, time.perf_counter() - t0))
    return results


__all__ = ["CheckResult", "CHECKS", "grid", "run_checks"]
