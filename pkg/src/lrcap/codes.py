"""Linear local codes, LRC ensembles, coset weight tables and locality checks."""

from __future__ import annotations

import functools
import itertools
import math
import operator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch, DomainError
from .gf2 import (
    BitMatrix,
    BitVector,
    column_submatrix,
    combination_array,
    enumerate_span,
    rank,
)

COSET_TABLE_MAX_LENGTH = 20
MIN_DISTANCE_MAX_DIM = 24

SeedLike = Union[int, Sequence[int]]


def _nullspace_rows(g: BitMatrix) -> tuple[int, ...]:
    """Canonical basis of {x : g @ x = 0}, one vector per free column of rref(g)."""
    n = g.cols
    work = list(g.rows)
    pivots: list[int] = []
    top = 0
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= work[top]
        pivots.append(col)
        top += 1
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (work[i] >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return tuple(basis)


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code given by a full-row-rank generator.

    ``parity_check`` defaults to the canonical null-space basis of the
    generator; its row order fixes how syndromes map to coset indices
    (syndrome bit ``j`` is the parity of row ``j`` against the word).
    """

    generator: BitMatrix
    parity_check: BitMatrix | None = None
    name: str = ""

    def __post_init__(self):
        g = self.generator
        if rank(g) != g.nrows:
            raise DomainError("generator rows are linearly dependent")
        h = self.parity_check
        if h is None:
            h = BitMatrix(g.cols, _nullspace_rows(g))
            object.__setattr__(self, "parity_check", h)
        if h.cols != g.cols:
            raise DimensionMismatch("parity-check and generator lengths differ")
        if rank(h) != h.nrows or h.nrows + g.nrows != g.cols:
            raise DomainError("parity-check matrix is not a full basis of the dual")
        for grow in g.rows:
            for hrow in h.rows:
                if (grow & hrow).bit_count() & 1:
                    raise DomainError("generator row violates a parity check")

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return self.generator.nrows

    @property
    def size(self) -> int:
        return 1 << self.dimension

    @cached_property
    def min_distance(self) -> float:
        """Minimum nonzero codeword weight; ``inf`` for the zero code.

        Small codes scan every codeword. Larger ones search for the smallest
        set of parity-check columns that XOR to zero, which is the same number.
        """
        if self.dimension == 0:
            return math.inf
        if self.dimension <= 20:
            words = combination_array(self.generator)[1:]
            return int(np.bitwise_count(words).min())
        cols = [self.parity_check.column(j).bits for j in range(self.length)]
        budget = 1 << MIN_DISTANCE_MAX_DIM
        for w in range(1, self.length + 1):
            budget -= math.comb(self.length, w)
            if budget < 0:
                raise BudgetExceeded("code too large for exhaustive weight scan")
            for subset in itertools.combinations(cols, w):
                if not functools.reduce(operator.xor, subset):
                    return w
        return math.inf

    def codewords(self) -> np.ndarray:
        """Codebook as uint64 bitsets, indexed by message."""
        return combination_array(self.generator)

    def syndrome(self, y: BitVector) -> int:
        if y.length != self.length:
            raise DimensionMismatch("word length != code length")
        return sum((((h & y.bits).bit_count()) & 1) << j for j, h in enumerate(self.parity_check.rows))

    def weight_distribution(self) -> np.ndarray:
        w = np.bitwise_count(self.codewords()).astype(np.int64)
        return np.bincount(w, minlength=self.length + 1)


def single_parity_code(r: int) -> LinearCode:
    """[r+1, r, 2] even-weight code; generator rows e_j + e_r."""
    if r < 1:
        raise DomainError(f"locality r={r} must be >= 1")
    rows = tuple((1 << j) | (1 << r) for j in range(r))
    h = BitMatrix(r + 1, ((1 << (r + 1)) - 1,))
    return LinearCode(BitMatrix(r + 1, rows), h, name=f"parity[{r + 1},{r}]")


def hamming_code(m: int) -> LinearCode:
    """[2^m-1, 2^m-1-m, 3] Hamming code.

    Column ``i`` of the parity-check matrix is the binary expansion of
    ``i + 1``, so the syndrome of a single error at ``i`` is ``i + 1``.
    """
    if not 2 <= m <= 5:
        raise DomainError(f"hamming_code: m={m} not in [2, 5]")
    n = (1 << m) - 1
    h_rows = tuple(sum((((i + 1) >> j) & 1) << i for i in range(n)) for j in range(m))
    h = BitMatrix(n, h_rows)
    g = BitMatrix(n, _nullspace_rows(h))
    return LinearCode(g, h, name=f"hamming[{n},{n - m}]")


def random_linear_code(length: int, dimension: int, rng: np.random.Generator) -> LinearCode:
    """Uniformly drawn generator, redrawn until it has full row rank."""
    if not 0 <= dimension <= length:
        raise DomainError("need 0 <= dimension <= length")
    while True:
        g = BitMatrix.from_array(rng.integers(0, 2, size=(dimension, length), dtype=np.uint8))
        if rank(g) == dimension:
            return LinearCode(g)


def hamming_length_exponent(r: int) -> int:
    """m with r + 1 = 2^m - 1, m in [2, 5]; DomainError otherwise."""
    delta = r + 1
    m = (delta + 1).bit_length() - 1
    if (1 << m) - 1 != delta or not 2 <= m <= 5:
        raise DomainError(f"r+1={delta} is not a Hamming length 2^m-1 with 2<=m<=5")
    return m


@dataclass(frozen=True)
class RepairPartition:
    n: int
    r: int
    groups: tuple

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        if self.r < 1:
            raise DomainError("locality must be >= 1")
        seen: set[int] = set()
        for g in self.groups:
            if len(g) != self.r + 1:
                raise DomainError(f"repair group {g} does not have size r+1={self.r + 1}")
            if seen.intersection(g):
                raise DomainError("repair groups overlap")
            seen.update(g)
        if seen != set(range(self.n)):
            raise DomainError("repair groups do not cover all coordinates")

    @classmethod
    def contiguous(cls, n: int, r: int) -> "RepairPartition":
        if r < 1:
            raise DomainError("locality must be >= 1")
        if n <= 0 or n % (r + 1):
            raise DomainError(f"r+1={r + 1} does not divide n={n}")
        return cls(n, r, tuple(tuple(range(s, s + r + 1)) for s in range(0, n, r + 1)))

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    @property
    def is_contiguous(self) -> bool:
        return all(g == tuple(range(g[0], g[0] + self.r + 1)) for g in self.groups)

    def group_of(self, i: int) -> tuple:
        return self.groups[i // (self.r + 1)] if self.is_contiguous else next(g for g in self.groups if i in g)


@dataclass(frozen=True)
class LrcSpec:
    n: int
    r: int
    rho: int
    local_code: LinearCode
    partition: RepairPartition
    seed: int = 0

    def __post_init__(self):
        if self.rho < 2:
            raise DomainError("rho must be >= 2")
        if self.local_code.length != self.r + 1:
            raise DimensionMismatch("local code length must equal r+1")
        if self.local_code.min_distance < self.rho:
            raise DomainError(
                f"local code distance {self.local_code.min_distance} < rho={self.rho}"
            )
        if self.partition.n != self.n or self.partition.r != self.r:
            raise DimensionMismatch("partition does not match (n, r)")

    @classmethod
    def build(cls, n: int, r: int, rho: int = 2, local_code: LinearCode | None = None,
              seed: int = 0) -> "LrcSpec":
        if local_code is None:
            if rho == 2:
                local_code = single_parity_code(r)
            elif rho == 3:
                local_code = hamming_code(hamming_length_exponent(r))
            else:
                raise DomainError(f"no default local code for rho={rho}")
        return cls(n, r, rho, local_code, RepairPartition.contiguous(n, r), seed)

    @cached_property
    def _codebook(self) -> np.ndarray:
        return self.local_code.codewords()

    def stream(self, trial: int = 0) -> np.random.Generator:
        """Independent stream for one trial, derived from ``(seed, trial)``."""
        return np.random.default_rng([self.seed, trial])

    def block_generator(self) -> BitMatrix:
        """Block-diagonal generator: the local generator placed on every group."""
        rows = []
        for grp in self.partition.groups:
            for lrow in self.local_code.generator.rows:
                rows.append(sum(((lrow >> pos) & 1) << c for pos, c in enumerate(grp)))
        return BitMatrix(self.n, tuple(rows))


def linear_lrc_generator_array(n: int, k: int, r: int, seed: SeedLike) -> np.ndarray:
    """Random k x n 0/1 array with one parity column per repair group.

    Within each contiguous group the first r columns are uniform over
    {0,1}^k and the last is their XOR. ``seed`` may be an int or a
    sequence of ints (fed to ``numpy.random.SeedSequence``).
    """
    if r < 1 or n <= 0 or n % (r + 1):
        raise DomainError(f"r+1={r + 1} does not divide n={n}")
    if k < 1:
        raise DomainError("k must be >= 1")
    rng = np.random.default_rng(seed)
    groups = n // (r + 1)
    full = np.empty((k, groups, r + 1), dtype=np.uint8)
    full[:, :, :r] = rng.integers(0, 2, size=(k, groups, r), dtype=np.uint8)
    full[:, :, r] = np.bitwise_xor.reduce(full[:, :, :r], axis=2)
    return full.reshape(k, n)


def linear_lrc_generator(n: int, k: int, r: int, seed: SeedLike) -> BitMatrix:
    return BitMatrix.from_array(linear_lrc_generator_array(n, k, r, seed))


def sample_lrc_codeword(spec: LrcSpec, stream: np.random.Generator) -> BitVector:
    """Concatenation of independent uniform local codewords, one per group."""
    book = spec._codebook
    idx = stream.integers(0, book.size, size=spec.partition.n_groups)
    words = book[idx]
    value = 0
    if spec.partition.is_contiguous:
        for grp, w in zip(spec.partition.groups, words.tolist()):
            value |= w << grp[0]
    else:
        for grp, w in zip(spec.partition.groups, words.tolist()):
            for pos, c in enumerate(grp):
                value |= ((w >> pos) & 1) << c
    return BitVector(spec.n, value)


@dataclass(frozen=True)
class LocalityReport:
    rho: int
    distances: tuple
    violations: tuple = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def _min_distance_of_words(words: set[int]) -> float:
    if len(words) < 2:
        return math.inf
    ws = sorted(words)
    return min((a ^ b).bit_count() for i, a in enumerate(ws) for b in ws[i + 1:])


def validate_locality(code: BitMatrix | Sequence[BitVector], spec: LrcSpec) -> LocalityReport:
    """Check that every repair group's projected code has distance >= rho.

    ``code`` is either a generator matrix (projected codes are linear, so the
    minimum nonzero weight is used) or an explicit codebook.
    """
    distances = []
    if isinstance(code, BitMatrix):
        if code.cols != spec.n:
            raise DimensionMismatch("generator column count != spec.n")
        for grp in spec.partition.groups:
            sub = column_submatrix(code, grp)
            wts = [v.weight() for v in enumerate_span(sub) if v.bits]
            distances.append(min(wts) if wts else math.inf)
    else:
        words = list(code)
        if any(w.length != spec.n for w in words):
            raise DimensionMismatch("codeword length != spec.n")
        for grp in spec.partition.groups:
            proj = {w.restrict(grp).bits for w in words}
            distances.append(_min_distance_of_words(proj))
    bad = tuple(i for i, d in enumerate(distances) if d < spec.rho)
    return LocalityReport(spec.rho, tuple(distances), bad)


@dataclass(frozen=True)
class CosetWeightTable:
    """``counts[i, w]`` = number of weight-w vectors in the coset with syndrome i."""

    delta: int
    k_loc: int
    counts: np.ndarray

    @property
    def n_cosets(self) -> int:
        return self.counts.shape[0]

    def enumerator_values(self, p: float) -> np.ndarray:
        """A_i(1-p, p) = sum_w A_i,w (1-p)^(delta-w) p^w for every coset i."""
        w = np.arange(self.delta + 1)
        terms = (1.0 - p) ** (self.delta - w) * p ** w
        return self.counts @ terms

    def check_invariants(self) -> None:
        if np.any(self.counts.sum(axis=1) != 1 << self.k_loc):
            raise AssertionError("a coset does not have 2^k_loc elements")
        binom = np.array([math.comb(self.delta, w) for w in range(self.delta + 1)])
        if np.any(self.counts.sum(axis=0) != binom):
            raise AssertionError("column sums differ from binomial coefficients")

    def to_text(self) -> str:
        lines = [f"{self.delta} {self.k_loc}"]
        for i in range(self.n_cosets):
            for w in range(self.delta + 1):
                lines.append(f"{i} {w} {int(self.counts[i, w])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CosetWeightTable":
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        delta, k_loc = int(lines[0][0]), int(lines[0][1])
        counts = np.zeros((1 << (delta - k_loc), delta + 1), dtype=np.int64)
        for i, w, c in lines[1:]:
            counts[int(i), int(w)] = int(c)
        return cls(delta, k_loc, counts)


def coset_weight_table(code: LinearCode) -> CosetWeightTable:
    """Classify all 2^delta words by syndrome and weight."""
    delta = code.length
    if delta > COSET_TABLE_MAX_LENGTH:
        raise BudgetExceeded(f"code length {delta} > {COSET_TABLE_MAX_LENGTH}")
    v = np.arange(1 << delta, dtype=np.uint64)
    syn = np.zeros(v.size, dtype=np.int64)
    for j, h in enumerate(code.parity_check.rows):
        syn |= (np.bitwise_count(v & np.uint64(h)).astype(np.int64) & 1) << j
    w = np.bitwise_count(v).astype(np.int64)
    n_cosets = 1 << (delta - code.dimension)
    counts = np.bincount(syn * (delta + 1) + w, minlength=n_cosets * (delta + 1))
    return CosetWeightTable(delta, code.dimension, counts.reshape(n_cosets, delta + 1))


__all__ = [
    "LinearCode",
    "RepairPartition",
    "LrcSpec",
    "LocalityReport",
    "CosetWeightTable",
    "single_parity_code",
    "hamming_code",
    "random_linear_code",
    "hamming_length_exponent",
    "linear_lrc_generator",
    "linear_lrc_generator_array",
    "sample_lrc_codeword",
    "validate_locality",
    "coset_weight_table",
]
