"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are Python ints used as bitsets: bit ``j`` of the
int holds coordinate ``j``. String forms list coordinate 0 first, so
``BitVector.from_str("110")`` has bits 0 and 1 set. XOR on ints is
word-parallel, which is what elimination and enumeration lean on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, DimensionMismatch

SPAN_BUDGET_LOG2 = 24


def _mask(n: int) -> int:
    return (1 << n) - 1


def _bits_to_int(bits: np.ndarray) -> int:
    packed = np.packbits(np.asarray(bits, dtype=np.uint8) & 1, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _int_to_bits(value: int, length: int) -> np.ndarray:
    nbytes = (length + 7) // 8
    raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length]


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        s = s.strip()
        if any(c not in "01" for c in s):
            raise ValueError(f"not a 0/1 string: {s!r}")
        return cls(len(s), sum(1 << j for j, c in enumerate(s) if c == "1"))

    @classmethod
    def from_iterable(cls, values: Iterable[int]) -> "BitVector":
        vals = [int(v) & 1 for v in values]
        return cls(len(vals), sum(1 << j for j, v in enumerate(vals) if v))

    @classmethod
    def from_array(cls, arr) -> "BitVector":
        arr = np.asarray(arr)
        return cls(arr.size, _bits_to_int(arr.ravel()))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    def to_array(self) -> np.ndarray:
        return _int_to_bits(self.bits, self.length)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise DimensionMismatch("xor of vectors with different lengths")
        return BitVector(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def restrict(self, keep: Sequence[int]) -> "BitVector":
        out = 0
        for pos, j in enumerate(keep):
            if not 0 <= j < self.length:
                raise IndexError(j)
            out |= ((self.bits >> j) & 1) << pos
        return BitVector(len(keep), out)


@dataclass(frozen=True)
class BitMatrix:
    """Immutable binary matrix stored as a tuple of row bitsets."""

    cols: int
    rows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        lim = 1 << self.cols
        for r in self.rows:
            if r < 0 or r >= lim:
                raise ValueError("row has bits set beyond column count")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: int | None = None) -> "BitMatrix":
        vecs = [BitVector.from_str(r) for r in rows]
        if cols is None:
            cols = vecs[0].length if vecs else 0
        if any(v.length != cols for v in vecs):
            raise DimensionMismatch("rows of unequal length")
        return cls(cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_array(cls, arr) -> "BitMatrix":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise DimensionMismatch("expected a 2-D array")
        packed = np.packbits(arr, axis=1, bitorder="little")
        rows = tuple(int.from_bytes(row.tobytes(), "little") for row in packed)
        return cls(arr.shape[1], rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << j for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> "BitMatrix":
        return cls(cols, (0,) * nrows)

    def to_array(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.cols), dtype=np.uint8)
        return np.stack([_int_to_bits(r, self.cols) for r in self.rows])

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_array(self.to_array().T)

    def column(self, j: int) -> BitVector:
        return BitVector(self.nrows, sum(((r >> j) & 1) << i for i, r in enumerate(self.rows)))

    def matvec_left(self, msg: BitVector) -> BitVector:
        """Row-vector product ``msg @ self`` (encoding with a generator)."""
        if msg.length != self.nrows:
            raise DimensionMismatch("message length != number of rows")
        out = 0
        for i, r in enumerate(self.rows):
            if (msg.bits >> i) & 1:
                out ^= r
        return BitVector(self.cols, out)

    def matvec(self, x: BitVector) -> BitVector:
        """Column-vector product ``self @ x``."""
        if x.length != self.cols:
            raise DimensionMismatch("vector length != number of columns")
        return BitVector(self.nrows, sum(((r & x.bits).bit_count() & 1) << i for i, r in enumerate(self.rows)))

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows))


def _xor_basis(rows: Iterable[int]) -> dict[int, int]:
    """Insert rows into an XOR basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return basis


def rank(m: BitMatrix) -> int:
    return len(_xor_basis(m.rows))


def column_submatrix(m: BitMatrix, keep: Sequence[int]) -> BitMatrix:
    keep = list(keep)
    for j in keep:
        if not 0 <= j < m.cols:
            raise IndexError(f"column {j} out of range for {m.cols} columns")
    if not keep:
        return BitMatrix(0, (0,) * m.nrows)
    return BitMatrix.from_array(m.to_array()[:, keep])


class SolveStatus(enum.Enum):
    UNIQUE = "unique"
    AMBIGUOUS = "ambiguous"
    INCONSISTENT = "inconsistent"


def solve_consistent(m: BitMatrix, rhs: BitVector) -> tuple[SolveStatus, BitVector | None]:
    """Solve ``m @ s = rhs`` by Gauss-Jordan elimination.

    Returns ``(status, s)`` where ``s`` is set only for a unique solution.
    """
    if rhs.length != m.nrows:
        raise DimensionMismatch(f"rhs length {rhs.length} != rows {m.nrows}")
    n = m.cols
    flag = 1 << n
    work = [r | (flag if (rhs.bits >> i) & 1 else 0) for i, r in enumerate(m.rows)]
    pivots: list[int] = []
    top = 0
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        prow = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    if any(w == flag for w in work[top:]):
        return SolveStatus.INCONSISTENT, None
    if len(pivots) < n:
        return SolveStatus.AMBIGUOUS, None
    s = 0
    for i, col in enumerate(pivots):
        if work[i] & flag:
            s |= 1 << col
    return SolveStatus.UNIQUE, BitVector(n, s)


def row_basis(m: BitMatrix) -> list[int]:
    """Independent rows spanning the row space, sorted by leading bit."""
    basis = _xor_basis(m.rows)
    return [basis[k] for k in sorted(basis)]


def enumerate_span(g: BitMatrix) -> Iterator[BitVector]:
    """Stream every vector of the row space of ``g`` exactly once (Gray-code order)."""
    basis = row_basis(g)
    if len(basis) > SPAN_BUDGET_LOG2:
        raise BudgetExceeded(f"span of dimension {len(basis)} exceeds 2^{SPAN_BUDGET_LOG2}")
    v = 0
    yield BitVector(g.cols, v)
    for i in range(1, 1 << len(basis)):
        v ^= basis[(i & -i).bit_length() - 1]
        yield BitVector(g.cols, v)


def combination_array(g: BitMatrix) -> np.ndarray:
    """All ``2**rows`` XOR combinations of the rows, as a uint64 array.

    Entry ``m`` is ``msg @ g`` where bit ``i`` of ``m`` selects row ``i``;
    when the rows are independent this is the codebook indexed by message.
    """
    if g.nrows > SPAN_BUDGET_LOG2:
        raise BudgetExceeded(f"{g.nrows} rows exceeds enumeration budget")
    if g.cols > 63:
        raise BudgetExceeded("combination_array needs cols <= 63")
    out = np.zeros(1, dtype=np.uint64)
    for r in g.rows:
        out = np.concatenate([out, out ^ np.uint64(r)])
    return out


def hamming_weight(v: BitVector) -> int:
    return v.bits.bit_count()


def hamming_distance(a: BitVector, b: BitVector) -> int:
    if a.length != b.length:
        raise DimensionMismatch("distance between vectors of different lengths")
    return (a.bits ^ b.bits).bit_count()


def matrix_to_text(m: BitMatrix) -> str:
    lines = [f"{m.nrows} {m.cols}"]
    lines += [str(m.row(i)) for i in range(m.nrows)]
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> BitMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    nrows, cols = (int(t) for t in lines[0].split())
    body = lines[1:]
    if len(body) != nrows:
        raise DimensionMismatch(f"header declares {nrows} rows, found {len(body)}")
    if nrows == 0:
        return BitMatrix.zeros(0, cols)
    return BitMatrix.from_strings(body, cols)


__all__ = [
    "BitVector",
    "BitMatrix",
    "SolveStatus",
    "rank",
    "column_submatrix",
    "solve_consistent",
    "row_basis",
    "enumerate_span",
    "combination_array",
    "hamming_weight",
    "hamming_distance",
    "matrix_to_text",
    "matrix_from_text",
]
