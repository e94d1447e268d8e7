import json
import math

import numpy as np
import pytest

from lrcap.blockstats import BecOutput, bsc_block_mi
from lrcap.codes import linear_lrc_generator
from lrcap.errors import DimensionMismatch, DomainError
from lrcap.experiments import (
    TrialReport,
    _summarize,
    bec_decode,
    bec_decode_success_rate,
    bec_transmit,
    bsc_ml_block_error,
    bsc_ml_decode_tiny,
    bsc_transmit,
    estimate_L_I,
    full_rank_probability,
    rank_success_rate,
)
from lrcap.gf2 import BitMatrix, BitVector


def test_transmit_trivial():
    x = BitVector.from_str("1011001")
    rng = np.random.default_rng(1)
    y = bec_transmit(x, 0.0, rng)
    assert y.n_erased == 0 and y.bits == x.bits
    assert bsc_transmit(x, 0.0, rng) == x
    y = bec_transmit(x, 1.0, rng)
    assert y.n_erased == x.length and y.bits == 0
    with pytest.raises(DomainError):
        bec_transmit(x, 1.2, rng)
    with pytest.raises(DomainError):
        bsc_transmit(x, 0.6, rng)


def test_bec_erasure_fraction_concentrates():
    n = 10**6
    rng = np.random.default_rng(7)
    erased = 0
    for _ in range(n // 1000):
        erased += bec_transmit(BitVector.zeros(1000), 0.3, rng).n_erased
    sigma = math.sqrt(0.3 * 0.7 / n)
    assert abs(erased / n - 0.3) <= 3 * sigma


def test_bsc_flip_fraction_concentrates():
    n = 200_000
    rng = np.random.default_rng(8)
    flips = sum(bsc_transmit(BitVector.zeros(1000), 0.1, rng).weight() for _ in range(n // 1000))
    assert abs(flips / n - 0.1) <= 3 * math.sqrt(0.09 / n)


def test_L_I_endpoints():
    rep = estimate_L_I(30, 2, 0.0, 20, seed=1)
    assert rep.estimate == 1.0 and rep.std_error == 0.0 and rep.target == 1.0
    rep = estimate_L_I(30, 2, 1.0, 20, seed=1)
    assert rep.estimate == 0.0 and rep.target == 0.0


def test_L_I_counts_group_survival():
    # every coordinate is counted iff its whole group is unerased
    rep = estimate_L_I(12, 3, 0.3, 2000, seed=3)
    assert rep.within(3)
    assert rep.target == pytest.approx(0.7**4)


def test_L_I_reproducible_and_se_scaling():
    a = estimate_L_I(60, 2, 0.5, 50, seed=11)
    b = estimate_L_I(60, 2, 0.5, 50, seed=11)
    assert a == b
    big = estimate_L_I(60, 2, 0.5, 5000, seed=11)
    ratio = a.std_error / big.std_error
    assert 5 <= ratio <= 20  # sqrt(100) = 10 within a factor 2


def test_L_I_domain():
    with pytest.raises(DomainError):
        estimate_L_I(10, 2, 0.5, 10, 0)
    with pytest.raises(DomainError):
        estimate_L_I(9, 2, 1.5, 10, 0)
    with pytest.raises(DomainError):
        estimate_L_I(9, 2, 0.5, 0, 0)


def test_full_rank_probability():
    assert full_rank_probability(1) == 0.5
    assert full_rank_probability(200) == pytest.approx(0.288788095, abs=1e-9)


def test_rank_success_endpoints():
    rep = rank_success_rate(30, 10, 2, 0.0, 300, seed=2)
    assert rep.estimate > 0.28
    rep = rank_success_rate(30, 5, 2, 1.0, 20, seed=2)
    assert rep.estimate == 0.0


def test_rank_success_reproducible():
    assert rank_success_rate(30, 8, 2, 0.3, 50, 5) == rank_success_rate(30, 8, 2, 0.3, 50, 5)


def test_rank_success_non_increasing_in_k():
    reps = [rank_success_rate(60, k, 2, 0.4, 300, seed=9) for k in (10, 20, 25, 30, 35)]
    for a, b in zip(reps, reps[1:]):
        slack = 3 * math.hypot(a.std_error, b.std_error)
        assert b.estimate <= a.estimate + slack


def test_rank_success_domain():
    with pytest.raises(DomainError):
        rank_success_rate(30, 31, 2, 0.5, 10, 0)
    with pytest.raises(DomainError):
        rank_success_rate(31, 5, 2, 0.5, 10, 0)


def test_bec_decode_examples():
    g = BitMatrix.from_strings(["111"])
    assert bec_decode(g, BecOutput.from_str("?1?")) == BitVector.from_str("1")
    assert bec_decode(g, BecOutput.from_str("???")) is None
    with pytest.raises(DimensionMismatch):
        bec_decode(g, BecOutput.from_str("??"))
    with pytest.raises(RuntimeError):
        bec_decode(BitMatrix.from_strings(["11"]), BecOutput.from_str("10"))


def test_bec_decode_never_wrong():
    for t in range(60):
        g = linear_lrc_generator(24, 10, 2, [4, t])
        rng = np.random.default_rng([4, t, 1])
        msg = BitVector.from_array(rng.integers(0, 2, size=10))
        y = bec_transmit(g.matvec_left(msg), 0.4, rng)
        dec = bec_decode(g, y)
        assert dec is None or dec == msg


def test_bec_decode_rate_small():
    rep = bec_decode_success_rate(30, 8, 2, 0.2, 100, seed=3)
    assert 0.0 < rep.estimate <= 1.0


def test_ml_decode_examples():
    book = [BitVector.from_str("000"), BitVector.from_str("111")]
    assert bsc_ml_decode_tiny(book, BitVector.from_str("001")) == 0
    assert bsc_ml_decode_tiny(book, BitVector.from_str("111")) == 1
    tie = [BitVector.from_str("01"), BitVector.from_str("10")]
    assert bsc_ml_decode_tiny(tie, BitVector.from_str("00")) == 0
    with pytest.raises(DomainError):
        bsc_ml_decode_tiny([], BitVector.from_str("0"))
    with pytest.raises(DimensionMismatch):
        bsc_ml_decode_tiny(book, BitVector.from_str("01"))


def test_ml_block_error_trend():
    # n = 12, r = 2: threshold bsc_block_mi(0.05, 2) is about 0.56 bits per symbol
    rates = {}
    for words in (4, 16, 64):
        rep = bsc_ml_block_error(12, 2, words, 0.05, 400, seed=21)
        assert rep.target == pytest.approx(bsc_block_mi(0.05, 2))
        rates[words] = rep
    assert math.log2(64) / 12 < rates[64].target
    assert rates[4].estimate <= rates[16].estimate + 3 * rates[16].std_error
    assert rates[16].estimate <= rates[64].estimate + 3 * rates[64].std_error
    assert rates[4].estimate < rates[64].estimate


def test_trial_report_json_roundtrip():
    rep = estimate_L_I(30, 2, 0.5, 10, seed=4)
    text = rep.to_json()
    assert set(json.loads(text)) == {"trials", "estimate", "std_error", "target", "seed"}
    assert TrialReport.from_json(text) == rep


def test_summarize_order_insensitive():
    vals = np.random.default_rng(0).random(1001)
    a = _summarize(vals, 0.5, 0)
    b = _summarize(vals[::-1].copy(), 0.5, 0)
    assert a == b
    assert a.std_error == pytest.approx(np.std(vals, ddof=1) / math.sqrt(vals.size))
