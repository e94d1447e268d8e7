import itertools
import math

import numpy as np
import pytest

from lrcap.blockstats import (
    BecOutput,
    BlockChannel,
    bec_block_mi,
    bec_block_mi_bruteforce,
    bec_block_output_prob,
    bsc_block_mi,
    bsc_block_output_prob,
    hamming_rho3_bsc_mi,
    local_code_bec_mi_exact,
    local_code_bsc_mi,
)
from lrcap.codes import hamming_code, random_linear_code, single_parity_code
from lrcap.errors import BudgetExceeded, DimensionMismatch, DomainError
from lrcap.gf2 import BitMatrix, BitVector, column_submatrix, rank
from lrcap.infofn import binary_entropy

P_BEC = [round(0.05 * i, 2) for i in range(21)]
P_BSC = [round(0.05 * i, 2) for i in range(11)]

# mpmath (40 digits) summation over all outputs of the codebook
MI_BSC_PARITY_R1_P010 = 0.37104292927485869976
MI_BSC_PARITY_R2_P005 = 0.57104680546233882597
MI_BSC_HAMMING7_P010 = 0.45235930762711394301
MI_BEC_HAMMING7_P020 = 0.56266605714285714286


def parity_words(r):
    return [c for c in range(2 ** (r + 1)) if bin(c).count("1") % 2 == 0]


def bec_prob_oracle(y: BecOutput, p: float, words) -> float:
    total = 0.0
    for c in words:
        pr = 1.0
        for j in range(y.length):
            if (y.erasures >> j) & 1:
                pr *= p
            elif ((y.bits >> j) & 1) == ((c >> j) & 1):
                pr *= 1.0 - p
            else:
                pr = 0.0
        total += pr
    return total / len(words)


def bsc_prob_oracle(y: BitVector, p: float, words) -> float:
    delta = y.length
    return sum(p ** bin(y.bits ^ c).count("1") * (1 - p) ** (delta - bin(y.bits ^ c).count("1"))
               for c in words) / len(words)


def all_bec_outputs(delta):
    return [BecOutput.from_symbols(s) for s in itertools.product((0, 1, None), repeat=delta)]


def test_bec_output_roundtrip():
    y = BecOutput.from_str("0?1")
    assert y.symbols() == [0, None, 1]
    assert str(y) == "0?1"
    assert y.n_erased == 1 and y.unerased_positions() == [0, 2]
    with pytest.raises(ValueError):
        BecOutput(3, 0b001, 0b001)


def test_block_channel_validation():
    assert BlockChannel("bec", 1.0).shannon_capacity == 0.0
    assert BlockChannel("bsc", 0.5).shannon_capacity == 0.0
    with pytest.raises(DomainError):
        BlockChannel("bsc", 0.6)
    with pytest.raises(DomainError):
        BlockChannel("awgn", 0.1)


def test_bec_output_prob_examples():
    assert bec_block_output_prob(BecOutput.from_str("000"), 0.0, 2) == 0.25
    assert bec_block_output_prob(BecOutput.from_str("???"), 1.0, 2) == 1.0
    assert bec_block_output_prob(BecOutput.from_str("110"), 0.5, 2) == 0.03125
    assert bec_block_output_prob(BecOutput.from_str("100"), 0.3, 2) == 0.0
    with pytest.raises(DimensionMismatch):
        bec_block_output_prob(BecOutput.from_str("00"), 0.3, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("p", [0.0, 0.2, 0.5, 0.9, 1.0])
def test_bec_output_prob_matches_codebook_sum(r, p):
    words = parity_words(r)
    for y in all_bec_outputs(r + 1):
        assert bec_block_output_prob(y, p, r) == pytest.approx(bec_prob_oracle(y, p, words), abs=1e-15)


@pytest.mark.parametrize("r", range(1, 9))
def test_output_probabilities_normalize(r):
    outputs = all_bec_outputs(r + 1)
    for p in (0.0, 0.1, 0.35, 0.5, 0.8, 1.0):
        assert abs(math.fsum(bec_block_output_prob(y, p, r) for y in outputs) - 1) <= 1e-12
    for p in (0.0, 0.1, 0.25, 0.5):
        tot = math.fsum(bsc_block_output_prob(BitVector(r + 1, b), p, r) for b in range(2 ** (r + 1)))
        assert abs(tot - 1) <= 1e-12


def test_bec_mi_examples():
    assert bec_block_mi(0.0, 2) == pytest.approx(2 / 3, abs=1e-15)
    assert bec_block_mi(1.0, 5) == 0.0
    assert bec_block_mi(0.5, 1) == 0.375
    assert bec_block_mi_bruteforce(0.5, 1) == pytest.approx(0.375, abs=1e-15)


@pytest.mark.parametrize("r", range(1, 9))
def test_bec_closed_form_vs_enumeration(r):
    for p in P_BEC:
        assert abs(bec_block_mi(p, r) - bec_block_mi_bruteforce(p, r)) <= 1e-9
    assert bec_block_mi_bruteforce(0.0, r) == pytest.approx(r / (r + 1), abs=1e-12)
    assert bec_block_mi_bruteforce(1.0, r) == 0.0


def test_bec_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        bec_block_mi_bruteforce(0.3, 13)


def test_bsc_output_prob_examples():
    assert bsc_block_output_prob(BitVector.from_str("00"), 0.1, 1) == pytest.approx(0.41, abs=1e-15)
    assert bsc_block_output_prob(BitVector.from_str("01"), 0.1, 1) == pytest.approx(0.09, abs=1e-15)
    for r in (1, 3, 6):
        for b in range(2 ** (r + 1)):
            assert bsc_block_output_prob(BitVector(r + 1, b), 0.5, r) == 2.0 ** -(r + 1)
    with pytest.raises(DomainError):
        bsc_block_output_prob(BitVector.from_str("00"), 0.6, 1)


@pytest.mark.parametrize("r", [1, 2, 3, 5])
@pytest.mark.parametrize("p", [0.0, 0.05, 0.2, 0.5])
def test_bsc_output_prob_matches_codebook_sum(r, p):
    words = parity_words(r)
    for b in range(2 ** (r + 1)):
        y = BitVector(r + 1, b)
        assert bsc_block_output_prob(y, p, r) == pytest.approx(bsc_prob_oracle(y, p, words), abs=1e-15)


def test_bsc_mi_examples():
    assert bsc_block_mi(0.0, 2) == pytest.approx(2 / 3, abs=1e-15)
    assert bsc_block_mi(0.5, 4) == pytest.approx(0.0, abs=1e-15)
    assert bsc_block_mi(0.1, 1) == pytest.approx(MI_BSC_PARITY_R1_P010, abs=1e-14)
    assert bsc_block_mi(0.05, 2) == pytest.approx(MI_BSC_PARITY_R2_P005, abs=1e-14)


@pytest.mark.parametrize("r", range(1, 9))
def test_bsc_closed_form_vs_coset_formula(r):
    code = single_parity_code(r)
    for p in P_BSC:
        assert abs(bsc_block_mi(p, r) - local_code_bsc_mi(code, p)) <= 1e-12


def test_local_code_bsc_mi_hamming():
    code = hamming_code(3)
    assert local_code_bsc_mi(code, 0.1) == pytest.approx(MI_BSC_HAMMING7_P010, abs=1e-13)
    assert local_code_bsc_mi(code, 0.5) == pytest.approx(0.0, abs=1e-15)
    assert local_code_bsc_mi(code, 0.0) == pytest.approx(4 / 7, abs=1e-15)


def test_local_code_bsc_mi_is_zero_at_half_for_any_code():
    rng = np.random.default_rng(9)
    for _ in range(5):
        code = random_linear_code(8, int(rng.integers(1, 8)), rng)
        assert local_code_bsc_mi(code, 0.5) == pytest.approx(0.0, abs=1e-14)


def rank_oracle_bec_mi(code, p):
    """Sum over erasure patterns of Pr(E) * rank(G on unerased columns), via gf2.rank."""
    delta = code.length
    total = 0.0
    for mask in range(2**delta):
        t = bin(mask).count("1")
        keep = [j for j in range(delta) if not (mask >> j) & 1]
        total += p**t * (1 - p) ** (delta - t) * rank(column_submatrix(code.generator, keep))
    return total / delta


@pytest.mark.parametrize("code", [single_parity_code(3), hamming_code(3),
                                  random_linear_code(8, 4, np.random.default_rng(2))])
def test_local_code_bec_mi_matches_rank_sum(code):
    for p in (0.0, 0.15, 0.5, 0.85, 1.0):
        assert local_code_bec_mi_exact(code, p) == pytest.approx(rank_oracle_bec_mi(code, p), abs=1e-13)


@pytest.mark.parametrize("r", range(1, 9))
def test_local_code_bec_mi_parity_equals_closed_form(r):
    code = single_parity_code(r)
    for p in P_BEC:
        assert abs(local_code_bec_mi_exact(code, p) - bec_block_mi(p, r)) <= 1e-9
    assert local_code_bec_mi_exact(code, 0.0) == pytest.approx(r / (r + 1), abs=1e-15)
    assert local_code_bec_mi_exact(code, 1.0) == 0.0


def test_local_code_bec_mi_hamming_frozen():
    assert local_code_bec_mi_exact(hamming_code(3), 0.2) == pytest.approx(MI_BEC_HAMMING7_P020, abs=1e-13)


def test_hamming_closed_form_examples():
    assert hamming_rho3_bsc_mi(0.1, 6) == pytest.approx(local_code_bsc_mi(hamming_code(3), 0.1), abs=1e-6)
    assert hamming_rho3_bsc_mi(0.1, 6) == pytest.approx(0.4524, abs=5e-5)
    assert hamming_rho3_bsc_mi(0.5, 6) == pytest.approx(0.0, abs=1e-15)
    # direct substitution at p=0 gives 1 - log2(r+2)/(r+1), the [7,4] rate
    assert hamming_rho3_bsc_mi(0.0, 6) == pytest.approx(4 / 7, abs=1e-15)
    assert hamming_rho3_bsc_mi(0.0, 6) == pytest.approx(1 - math.log2(8) / 7, abs=1e-15)
    with pytest.raises(DomainError):
        hamming_rho3_bsc_mi(0.1, 5)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_hamming_closed_form_vs_coset_table(m):
    code = hamming_code(m)
    r = code.length - 1
    for p in np.linspace(0, 0.5, 51):
        assert abs(hamming_rho3_bsc_mi(float(p), r) - local_code_bsc_mi(code, float(p))) <= 1e-6


@pytest.mark.parametrize("r", [1, 2, 4, 8])
def test_monotone_in_p(r):
    ps = np.arange(0, 0.5005, 0.001)
    bec = [bec_block_mi(float(p), r) for p in ps]
    bsc = [bsc_block_mi(float(p), r) for p in ps]
    assert all(a >= b for a, b in zip(bec, bec[1:]))
    assert all(a >= b - 1e-15 for a, b in zip(bsc, bsc[1:]))


@pytest.mark.parametrize("r", range(1, 11))
def test_block_mi_below_shannon(r):
    for p in np.linspace(0, 1, 41):
        assert bec_block_mi(float(p), r) <= 1 - p + 1e-12
    for p in np.linspace(0, 0.5, 41):
        assert bsc_block_mi(float(p), r) <= 1 - binary_entropy(float(p)) + 1e-12
