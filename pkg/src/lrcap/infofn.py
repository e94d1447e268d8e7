"""Scalar information-theoretic functions (all logarithms base 2)."""

from __future__ import annotations

import math
from typing import Iterable

from .errors import DomainError, InvalidDistribution

BISECTION_TOL = 1e-12
BISECTION_MAX_ITER = 64


def _xlog2x(x: float) -> float:
    # 0 log 0 := 0
    return x * math.log2(x) if x > 0.0 else 0.0


def binary_entropy(x: float) -> float:
    """Binary entropy h(x) = -x log2 x - (1-x) log2 (1-x), in bits."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"binary_entropy: x={x!r} not in [0, 1]")
    return -_xlog2x(x) - _xlog2x(1.0 - x)


def binary_entropy_inv(y: float) -> float:
    """Inverse of h restricted to [0, 1/2], by bisection.

    The result is within ``BISECTION_TOL`` of the true preimage. Close to
    y = 1 the entropy function is flat to second order, so float rounding in
    ``y`` itself limits how well a round trip can recover ``x``.
    """
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"binary_entropy_inv: y={y!r} not in [0, 1]")
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < y:
            lo = mid
        else:
            hi = mid
        if hi - lo <= BISECTION_TOL:
            break
    return 0.5 * (lo + hi)


def capacity_from_bias(t: float) -> float:
    """1 - h((1-t)/2) for bias t in [0, 1], accurate when t is small.

    Subtracting h from 1 near h = 1 loses all relative precision, so small
    biases use the series sum_k t^(2k) / (2k (2k-1) ln 2).
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"capacity_from_bias: t={t!r} not in [0, 1]")
    if t <= 0.5:
        t2 = t * t
        term, total, k = t2, 0.0, 1
        while term > 1e-18 * total or k == 1:
            total += term / (2 * k * (2 * k - 1))
            term *= t2
            k += 1
            if term == 0.0:
                break
        return total / math.log(2.0)
    minus = (1.0 - t) * math.log1p(-t) if t < 1.0 else 0.0
    return ((1.0 + t) * math.log1p(t) + minus) / (2.0 * math.log(2.0))


def bsc_capacity(p: float) -> float:
    """Shannon capacity 1 - h(p) of BSC(p), for p in [0, 1/2]."""
    if not 0.0 <= p <= 0.5:
        raise DomainError(f"bsc_capacity: p={p!r} not in [0, 1/2]")
    return capacity_from_bias(1.0 - 2.0 * p)


def entropy(weights: Iterable[float], atol: float = 1e-9) -> float:
    """Shannon entropy in bits of a finite distribution."""
    w = [float(v) for v in weights]
    if not w:
        raise InvalidDistribution("empty distribution")
    if any(v < 0.0 for v in w):
        raise InvalidDistribution("negative weight in distribution")
    total = math.fsum(w)
    if abs(total - 1.0) > atol:
        raise InvalidDistribution(f"weights sum to {total!r}, not 1")
    return -math.fsum(_xlog2x(v) for v in w)


__all__ = ["binary_entropy", "binary_entropy_inv", "bsc_capacity", "capacity_from_bias", "entropy"]
