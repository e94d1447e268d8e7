"""
Monte Carlo checks of the ensemble arguments
============================================

Two quantities the proofs compute at finite length: the expected fraction
of coordinates that survive together with their repair group, and the
probability that the unerased columns of a random parity-LRC generator
have full rank.
"""

from lrcap import bec_decode_success_rate, estimate_L_I, rank_success_rate

# surviving-group fraction against (1-p)^(r+1)
rep = estimate_L_I(3000, 2, 0.5, 2000, seed=7)
print(rep.to_json(), "within 3 sigma:", rep.within(3))

# full rank of the surviving columns, and end-to-end erasure decoding
print(rank_success_rate(300, 92, 2, 0.5, 200, seed=7).to_json())
print(bec_decode_success_rate(300, 80, 2, 0.5, 100, seed=7).to_json())

# past the number of surviving columns the rank condition fails
print(rank_success_rate(300, 160, 2, 0.5, 100, seed=7).estimate)
