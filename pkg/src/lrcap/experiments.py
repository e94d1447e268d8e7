"""Seeded Monte Carlo experiments on the LRC ensembles.

Each trial draws from its own generator seeded with ``(seed, trial, ...)``,
so aggregates do not depend on the order in which trials run.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .blockstats import BecOutput, bsc_block_mi
from .codes import (
    LrcSpec,
    RepairPartition,
    linear_lrc_generator,
    linear_lrc_generator_array,
    sample_lrc_codeword,
)
from .errors import DimensionMismatch, DomainError
from .gf2 import BitMatrix, BitVector, SolveStatus, rank, solve_consistent


@dataclass(frozen=True)
class TrialReport:
    trials: int
    estimate: float
    std_error: float
    target: float
    seed: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "TrialReport":
        d = json.loads(text)
        return cls(int(d["trials"]), float(d["estimate"]), float(d["std_error"]),
                   float(d["target"]), int(d["seed"]))

    def within(self, sigmas: float = 3.0) -> bool:
        return abs(self.estimate - self.target) <= sigmas * self.std_error


def _summarize(values: np.ndarray, target: float, seed: int) -> TrialReport:
    n = values.size
    if n < 1:
        raise DomainError("need at least one trial")
    mean = math.fsum(values.tolist()) / n
    if n > 1:
        var = math.fsum(((values - mean) ** 2).tolist()) / (n - 1)
        se = math.sqrt(var / n)
    else:
        se = 0.0
    return TrialReport(n, mean, se, target, seed)


def _trial_rng(seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, trial, stream])


def _check_divides(n: int, r: int) -> None:
    if r < 1 or n <= 0 or n % (r + 1):
        raise DomainError(f"r+1={r + 1} does not divide n={n}")


def bec_transmit(x: BitVector, p: float, stream: np.random.Generator) -> BecOutput:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"erasure probability {p} not in [0, 1]")
    erased = BitVector.from_array(stream.random(x.length) < p).bits
    return BecOutput(x.length, x.bits & ~erased, erased)


def bsc_transmit(x: BitVector, p: float, stream: np.random.Generator) -> BitVector:
    if not 0.0 <= p <= 0.5:
        raise DomainError(f"flip probability {p} not in [0, 1/2]")
    flips = BitVector.from_array(stream.random(x.length) < p).bits
    return BitVector(x.length, x.bits ^ flips)


def estimate_L_I(n: int, r: int, p: float, trials: int, seed: int) -> TrialReport:
    """Fraction of coordinates that survive together with their whole repair group.

    Target is (1-p)^(r+1).
    """
    _check_divides(n, r)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p} not in [0, 1]")
    if trials < 1:
        raise DomainError("trials must be >= 1")
    part = RepairPartition.contiguous(n, r)
    group_index = np.repeat(np.arange(part.n_groups), r + 1)
    fractions = np.empty(trials)
    for t in range(trials):
        erased = _trial_rng(seed, t).random(n) < p
        group_hit = np.zeros(part.n_groups, dtype=bool)
        np.logical_or.at(group_hit, group_index, erased)
        counted = ~erased & ~group_hit[group_index]
        fractions[t] = counted.sum() / n
    return _summarize(fractions, (1.0 - p) ** (r + 1), seed)


def full_rank_probability(k: int) -> float:
    """prod_{i=1..k} (1 - 2^-i): chance a uniform k x k binary matrix is invertible."""
    return math.prod(1.0 - 2.0**-i for i in range(1, k + 1))


def rank_success_rate(n: int, k: int, r: int, p: float, trials: int, seed: int) -> TrialReport:
    """Probability that the columns surviving BEC(p) of a random parity-LRC generator have rank k.

    Both the generator and the surviving-column set are redrawn every trial.
    ``target`` is the full-rank probability of a uniform k x k matrix, the
    ensemble bound the argument rests on (about 0.2888 for large k).
    """
    _check_divides(n, r)
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p} not in [0, 1]")
    hits = np.empty(trials)
    for t in range(trials):
        g = linear_lrc_generator_array(n, k, r, [seed, t, 0])
        keep = _trial_rng(seed, t, 1).random(n) >= p
        cols = BitMatrix.from_array(g[:, keep].T) if keep.any() else BitMatrix.zeros(0, k)
        hits[t] = 1.0 if rank(cols) == k else 0.0
    return _summarize(hits, full_rank_probability(k), seed)


def bec_decode(generator: BitMatrix, received: BecOutput) -> BitVector | None:
    """Recover the message from a BEC output; ``None`` when it is ambiguous.

    Solves msg @ G_U = y_U on the unerased columns U. An inconsistent system
    cannot arise from a noiseless encoding and raises.
    """
    if received.length != generator.cols:
        raise DimensionMismatch("received length != generator columns")
    keep = received.unerased_positions()
    k = generator.nrows
    if not keep:
        return None
    sub_t = BitMatrix.from_array(generator.to_array()[:, keep].T)
    rhs = BitVector(len(keep), sum(((received.bits >> j) & 1) << i for i, j in enumerate(keep)))
    status, msg = solve_consistent(sub_t, rhs)
    if status is SolveStatus.INCONSISTENT:
        raise RuntimeError("received word is inconsistent with the generator")
    if status is SolveStatus.AMBIGUOUS:
        return None
    assert msg is not None and msg.length == k
    return msg


def bec_decode_success_rate(n: int, k: int, r: int, p: float, trials: int, seed: int) -> TrialReport:
    """End-to-end encode / BEC(p) / decode over fresh random parity-LRC generators."""
    _check_divides(n, r)
    hits = np.empty(trials)
    for t in range(trials):
        g = linear_lrc_generator(n, k, r, [seed, t, 0])
        rng = _trial_rng(seed, t, 1)
        msg = BitVector.from_array(rng.integers(0, 2, size=k))
        y = bec_transmit(g.matvec_left(msg), p, rng)
        dec = bec_decode(g, y)
        if dec is not None and dec != msg:
            raise RuntimeError("BEC decoder returned a wrong message")
        hits[t] = 1.0 if dec is not None else 0.0
    return _summarize(hits, full_rank_probability(k), seed)


def bsc_ml_decode_tiny(codebook: Sequence[BitVector], received: BitVector) -> int:
    """Index of a nearest codeword in Hamming distance; ties go to the lowest index."""
    if not codebook:
        raise DomainError("empty codebook")
    if len(codebook) > 1 << 16:
        raise DomainError("codebook larger than 2^16")
    if any(c.length != received.length for c in codebook):
        raise DimensionMismatch("codeword lengths differ from received word")
    dists = [(c.bits ^ received.bits).bit_count() for c in codebook]
    return dists.index(min(dists))


def bsc_ml_block_error(n: int, r: int, n_words: int, p: float, trials: int, seed: int) -> TrialReport:
    """Block error rate of ML decoding for a random parity-LRC codebook over BSC(p).

    Each trial draws ``n_words`` codewords from the parity ensemble, sends
    one of them and decodes by exhaustive search. ``target`` carries the
    per-symbol rate threshold of the ensemble for comparison with the code
    rate log2(n_words)/n.
    """
    _check_divides(n, r)
    errs = np.empty(trials)
    spec = LrcSpec.build(n, r, seed=seed)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        book = [sample_lrc_codeword(spec, rng) for _ in range(n_words)]
        sent = int(rng.integers(0, n_words))
        y = bsc_transmit(book[sent], p, rng)
        got = bsc_ml_decode_tiny(book, y)
        errs[t] = 0.0 if book[got] == book[sent] else 1.0
    return _summarize(errs, bsc_block_mi(p, r), seed)


__all__ = [
    "TrialReport",
    "bec_transmit",
    "bsc_transmit",
    "estimate_L_I",
    "full_rank_probability",
    "rank_success_rate",
    "bec_decode",
    "bec_decode_success_rate",
    "bsc_ml_decode_tiny",
    "bsc_ml_block_error",
]
