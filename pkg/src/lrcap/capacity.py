"""Capacity values and bounds for LRCs over binary-input channels.

Every query returns :class:`CapacityResult` objects tagged with the kind of
statement they represent, since exact values (BEC) and bounds (BSC, general
symmetric channels, multi-erasure locality) must not be conflated.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import asdict, dataclass

from .blockstats import bec_block_mi, bsc_block_mi, hamming_rho3_penalty
from .codes import hamming_length_exponent
from .errors import DomainError
from .infofn import binary_entropy_inv, bsc_capacity, capacity_from_bias

log = logging.getLogger(__name__)

CLAMP_LOG_THRESHOLD = 1e-9


class BoundKind(str, enum.Enum):
    EXACT = "exact"
    LOWER = "lower_bound"
    UPPER = "upper_bound"


@dataclass(frozen=True)
class CapacityResult:
    channel: str
    param: float
    r: int
    rho: int
    value: float
    kind: BoundKind

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


def _clamp(x: float, what: str) -> float:
    if x < 0.0 or x > 1.0:
        y = min(max(x, 0.0), 1.0)
        if abs(x - y) > CLAMP_LOG_THRESHOLD:
            log.warning("%s = %.3e clamped to [0, 1]", what, x)
        return y
    return x


def _check_r(r: int) -> None:
    if r < 1:
        raise DomainError(f"locality r={r} must be >= 1")


def _check_unit(x: float, name: str, hi: float = 1.0) -> None:
    if not 0.0 <= x <= hi:
        raise DomainError(f"{name}={x} not in [0, {hi}]")


def cap_bec_lrc(p: float, r: int) -> CapacityResult:
    """Exact LRC capacity of BEC(p): 1 - p - (1-p)^(r+1)/(r+1)."""
    _check_unit(p, "p")
    _check_r(r)
    v = _clamp(bec_block_mi(p, r), "cap_bec_lrc")
    return CapacityResult("bec", p, r, 2, v, BoundKind.EXACT)


def gap(capacity: float, lrc_value: float) -> float:
    """Shannon capacity minus the LRC-constrained value."""
    _check_unit(capacity, "capacity")
    _check_unit(lrc_value, "lrc_value")
    return capacity - lrc_value


def cap_bsc_lrc_bounds(p: float, r: int) -> tuple[CapacityResult, CapacityResult]:
    """Lower (parity-block random coding) and upper (BEC reduction) bounds for BSC(p)."""
    _check_unit(p, "p", 0.5)
    _check_r(r)
    c = bsc_capacity(p)
    lower = _clamp(bsc_block_mi(p, r), "bsc lower")
    upper = _clamp(c - c ** (r + 1) / (r + 1), "bsc upper")
    return (
        CapacityResult("bsc", p, r, 2, lower, BoundKind.LOWER),
        CapacityResult("bsc", p, r, 2, upper, BoundKind.UPPER),
    )


def bsc_bound_gaps(p: float, r: int) -> tuple[float, float]:
    """(Shannon - upper, Shannon - lower) for BSC(p), without cancellation.

    Near p = 1/2 both gaps drop below the resolution of the bounds
    themselves; here they keep full relative precision.
    """
    _check_unit(p, "p", 0.5)
    _check_r(r)
    t = 1.0 - 2.0 * p
    return capacity_from_bias(t) ** (r + 1) / (r + 1), capacity_from_bias(t ** (r + 1)) / (r + 1)


def cap_general_bounds(cap_w: float, r: int) -> tuple[CapacityResult, CapacityResult]:
    """Bounds for any binary-input symmetric DMC, through its capacity only.

    The lower bound evaluates the BSC achievable rate at the flip probability
    of the BSC with the same capacity; the upper bound is the BEC capacity
    formula at the matching erasure probability.
    """
    _check_unit(cap_w, "cap_w")
    _check_r(r)
    q = binary_entropy_inv(1.0 - cap_w)
    bias = (1.0 - 2.0 * q) ** (r + 1)
    lower = cap_w - capacity_from_bias(bias) / (r + 1)
    upper = cap_w - cap_w ** (r + 1) / (r + 1)
    return (
        CapacityResult("general", cap_w, r, 2, _clamp(lower, "general lower"), BoundKind.LOWER),
        CapacityResult("general", cap_w, r, 2, _clamp(upper, "general upper"), BoundKind.UPPER),
    )


def cap_bec_rho_converse(p: float, rho: int, r: int) -> CapacityResult:
    """Converse for (rho, r) locality over BEC(p)."""
    _check_unit(p, "p")
    _check_r(r)
    if rho < 2:
        raise DomainError(f"rho={rho} must be >= 2")
    v = 1.0 - p - (rho - 1) * (1.0 - p) ** (r + 1) / (r + 1)
    return CapacityResult("bec", p, r, rho, _clamp(v, "bec rho converse"), BoundKind.UPPER)


def cap_bsc_hamming_rho3_lower(p: float, r: int) -> CapacityResult:
    """Achievable rate over BSC(p) with Hamming local codes of length r+1 (rho = 3)."""
    hamming_length_exponent(r)
    _check_unit(p, "p", 0.5)
    v = bsc_capacity(p) - hamming_rho3_penalty(p, r)
    return CapacityResult("bsc", p, r, 3, _clamp(v, "bsc hamming lower"), BoundKind.LOWER)


def cap_bec_hamming_rho3_lower(p: float, r: int) -> CapacityResult:
    """Hamming-local achievable rate transferred to BEC(p).

    BEC(p) is more capable than the BSC with equal capacity, i.e. flip
    probability h^-1(p), so the BSC rate at that flip probability carries over.
    """
    hamming_length_exponent(r)
    _check_unit(p, "p")
    q = binary_entropy_inv(p)
    v = 1.0 - p - hamming_rho3_penalty(q, r)
    return CapacityResult("bec", p, r, 3, _clamp(v, "bec hamming lower"), BoundKind.LOWER)


__all__ = [
    "BoundKind",
    "CapacityResult",
    "cap_bec_lrc",
    "gap",
    "cap_bsc_lrc_bounds",
    "bsc_bound_gaps",
    "cap_general_bounds",
    "cap_bec_rho_converse",
    "cap_bsc_hamming_rho3_lower",
    "cap_bec_hamming_rho3_lower",
]
