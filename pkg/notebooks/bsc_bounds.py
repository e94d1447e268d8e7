"""
Bounds for the binary symmetric channel
=======================================

For BSC(p) the LRC capacity is bracketed. Random coding over parity blocks
gives the lower bound; comparing with the erasure channel of equal capacity
gives the upper bound. Any binary-input symmetric channel is handled the
same way through its capacity alone.
"""

import numpy as np

from lrcap import bsc_block_mi, cap_bsc_lrc_bounds, cap_general_bounds
from lrcap.capacity import bsc_bound_gaps

# bounds on a coarse grid of flip probabilities
for p in np.linspace(0, 0.5, 6):
    lo, up = cap_bsc_lrc_bounds(float(p), 2)
    print(f"p={p:.2f}  lower={lo.value:.5f}  upper={up.value:.5f}")

# the lower bound is the per-symbol mutual information of one parity block
print("block MI at p=0.1, r=1:", bsc_block_mi(0.1, 1))

# near p = 1/2 the two bounds round to the same double, the gaps do not
print("gaps at p=0.49, r=6:", bsc_bound_gaps(0.49, 6))

# a general channel with capacity 0.531 (the BSC(0.1) capacity)
lo, up = cap_general_bounds(0.531, 1)
print(f"general capW=0.531 r=1: [{lo.value:.5f}, {up.value:.5f}]")
