"""Exact statistics of one local block (super-symbol) through a BEC or BSC.

The input to the block channel is a uniformly chosen codeword of the local
code; mutual informations are reported per input bit, i.e. divided by the
block length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .codes import (
    CosetWeightTable,
    LinearCode,
    coset_weight_table,
    hamming_length_exponent,
    single_parity_code,
)
from .errors import BudgetExceeded, DimensionMismatch, DomainError
from .gf2 import BitVector, combination_array
from .infofn import _xlog2x, binary_entropy, bsc_capacity, capacity_from_bias, entropy

BRUTEFORCE_MAX_R = 12
ERASURE = None


@dataclass(frozen=True)
class BecOutput:
    """Output word of a BEC: per coordinate 0, 1 or erased.

    ``erasures`` is a bitset of erased positions; ``bits`` holds the values
    on the remaining positions and is zero wherever a position is erased.
    """

    length: int
    bits: int = 0
    erasures: int = 0

    def __post_init__(self):
        full = (1 << self.length) - 1
        if self.bits & ~full or self.erasures & ~full:
            raise ValueError("bits set beyond output length")
        if self.bits & self.erasures:
            raise ValueError("erased positions must carry no value bits")

    @classmethod
    def from_symbols(cls, symbols: Sequence[int | None]) -> "BecOutput":
        bits = erasures = 0
        for j, s in enumerate(symbols):
            if s is ERASURE:
                erasures |= 1 << j
            elif s in (0, 1):
                bits |= int(s) << j
            else:
                raise ValueError(f"invalid BEC output symbol {s!r}")
        return cls(len(symbols), bits, erasures)

    @classmethod
    def from_str(cls, s: str) -> "BecOutput":
        """Parse e.g. ``"0?1"``; ``?`` or ``e`` marks an erasure."""
        return cls.from_symbols([None if c in "?e" else int(c) for c in s])

    def symbols(self) -> list[int | None]:
        return [None if (self.erasures >> j) & 1 else (self.bits >> j) & 1 for j in range(self.length)]

    def __str__(self) -> str:
        return "".join("?" if s is None else str(s) for s in self.symbols())

    @property
    def n_erased(self) -> int:
        return self.erasures.bit_count()

    def unerased_positions(self) -> list[int]:
        return [j for j in range(self.length) if not (self.erasures >> j) & 1]


@dataclass(frozen=True)
class BlockChannel:
    kind: str
    param: float

    def __post_init__(self):
        if self.kind not in ("bec", "bsc"):
            raise DomainError(f"unknown channel kind {self.kind!r}")
        hi = 1.0 if self.kind == "bec" else 0.5
        if not 0.0 <= self.param <= hi:
            raise DomainError(f"{self.kind.upper()} parameter {self.param} not in [0, {hi}]")

    @property
    def shannon_capacity(self) -> float:
        if self.kind == "bec":
            return 1.0 - self.param
        return bsc_capacity(self.param)


def _check_bec_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"erasure probability {p} not in [0, 1]")


def _check_bsc_p(p: float) -> None:
    if not 0.0 <= p <= 0.5:
        raise DomainError(f"flip probability {p} not in [0, 1/2]; pre-flip values above 1/2")


def bec_block_output_prob(y: BecOutput, p: float, r: int) -> float:
    """Pr(Y = y) for a uniform single-parity block of length r+1 over BEC(p)."""
    _check_bec_p(p)
    if y.length != r + 1:
        raise DimensionMismatch(f"output length {y.length} != r+1 = {r + 1}")
    t = y.n_erased
    if t == 0:
        if y.bits.bit_count() % 2:
            return 0.0
        return (1.0 - p) ** (r + 1) / 2.0**r
    return p**t * (1.0 - p) ** (r + 1 - t) * 2.0 ** (t - 1 - r)


def bec_block_mi(p: float, r: int) -> float:
    _check_bec_p(p)
    return 1.0 - p - (1.0 - p) ** (r + 1) / (r + 1)


@lru_cache(maxsize=None)
def _parity_projection_counts(r: int) -> tuple:
    """For each erasure mask, multiplicities of the distinct unerased projections."""
    delta = r + 1
    book = combination_array(single_parity_code(r).generator)
    full = (1 << delta) - 1
    return tuple(
        np.unique(book & np.uint64(~mask & full), return_counts=True)[1]
        for mask in range(1 << delta)
    )


def bec_block_mi_bruteforce(p: float, r: int) -> float:
    """Per-symbol I(X;Y) of the parity block over BEC(p), by enumeration.

    Builds the output distribution from the codebook itself: for each
    erasure pattern, codewords are grouped by their values on the unerased
    positions. I(X;Y) = H(Y) - H(Y|X), and H(Y|X) = (r+1) h(p) because the
    erasure pattern is the only noise.
    """
    _check_bec_p(p)
    if r > BRUTEFORCE_MAX_R:
        raise BudgetExceeded(f"r={r} > {BRUTEFORCE_MAX_R}")
    if r < 1:
        raise DomainError(f"r={r} must be >= 1")
    delta = r + 1
    size = 1 << r
    h_y = []
    for mask, counts in enumerate(_parity_projection_counts(r)):
        t = mask.bit_count()
        pr_e = p**t * (1.0 - p) ** (delta - t)
        if pr_e == 0.0:
            continue
        probs = pr_e * counts / size
        h_y.append(-float(np.sum(probs * np.log2(probs))))
    return (math.fsum(h_y) - delta * binary_entropy(p)) / delta


def bsc_block_output_prob(y: BitVector, p: float, r: int) -> float:
    """Pr(Y = y) for a uniform single-parity block of length r+1 over BSC(p)."""
    _check_bsc_p(p)
    if y.length != r + 1:
        raise DimensionMismatch(f"output length {y.length} != r+1 = {r + 1}")
    bias = (1.0 - 2.0 * p) ** (r + 1)
    sign = -1.0 if y.weight() % 2 else 1.0
    return (1.0 + sign * bias) / 2.0 ** (r + 1)


def bsc_block_mi(p: float, r: int) -> float:
    _check_bsc_p(p)
    return bsc_capacity(p) - capacity_from_bias((1.0 - 2.0 * p) ** (r + 1)) / (r + 1)


@lru_cache(maxsize=64)
def _table(code: LinearCode) -> CosetWeightTable:
    return coset_weight_table(code)


def local_code_bsc_mi(code: LinearCode, p: float) -> float:
    """Per-symbol I(X;Y) of a uniform codeword of ``code`` over BSC(p).

    Every output word in coset i has probability A_i(1-p, p) / |code|, so
    H(Y) = log2|code| + H({A_i(1-p, p)}).
    """
    _check_bsc_p(p)
    table = _table(code)
    coset_probs = table.enumerator_values(p)
    return (code.dimension + entropy(coset_probs)) / code.length - binary_entropy(p)


def _subset_counts(words: np.ndarray, delta: int) -> np.ndarray:
    """``out[E]`` = number of words whose support lies inside mask ``E``."""
    f = np.zeros(1 << delta, dtype=np.int64)
    np.add.at(f, words.astype(np.int64), 1)
    f = f.reshape((2,) * delta)
    for axis in range(delta):
        np.cumsum(f, axis=axis, out=f)
    return f.reshape(-1)


def local_code_bec_mi_exact(code: LinearCode, p: float) -> float:
    """Per-symbol I(X;Y) of a uniform codeword of ``code`` over BEC(p).

    Given erasure pattern E, the received word pins the message down to a
    coset of the subcode supported inside E, of size
    N(E) = 2^(k - rank(G restricted to the unerased columns)). Hence
    I = sum_E Pr(E) (k - log2 N(E)) = sum_E Pr(E) rank(G_unerased).
    N(E) is computed for all E at once as a subset-sum over the codebook.
    """
    _check_bec_p(p)
    delta = code.length
    if delta > 20:
        raise BudgetExceeded(f"code length {delta} > 20")
    n_sub = _subset_counts(code.codewords(), delta)
    masks = np.arange(1 << delta, dtype=np.uint64)
    t = np.bitwise_count(masks).astype(np.int64)
    pr_e = p**t * (1.0 - p) ** (delta - t)
    ranks = code.dimension - np.log2(n_sub)
    return float(np.sum(pr_e * ranks)) / delta


def hamming_rho3_penalty(q: float, r: int) -> float:
    """The two logarithmic loss terms of the Hamming-local rate at flip probability q.

    With u = (1-2q)^((r+2)/2) these are
    (1-u) log2(1-u) / (r+2) + (1+(r+1)u) log2(1+(r+1)u) / ((r+1)(r+2)).
    """
    u = (1.0 - 2.0 * q) ** ((r + 2) / 2)
    return _xlog2x(1.0 - u) / (r + 2) + _xlog2x(1.0 + (r + 1) * u) / ((r + 1) * (r + 2))


def hamming_rho3_bsc_mi(p: float, r: int) -> float:
    """Closed-form per-symbol MI of Hamming local codes of length r+1 over BSC(p)."""
    hamming_length_exponent(r)
    _check_bsc_p(p)
    return bsc_capacity(p) - hamming_rho3_penalty(p, r)


__all__ = [
    "ERASURE",
    "BecOutput",
    "BlockChannel",
    "bec_block_output_prob",
    "bec_block_mi",
    "bec_block_mi_bruteforce",
    "bsc_block_output_prob",
    "bsc_block_mi",
    "local_code_bsc_mi",
    "local_code_bec_mi_exact",
    "hamming_rho3_penalty",
    "hamming_rho3_bsc_mi",
]
