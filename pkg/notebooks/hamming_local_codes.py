"""
Hamming local codes and coset enumerators
=========================================

With (rho, r) locality each repair group must correct rho-1 erasures. For
rho = 3 and r+1 = 2^m - 1, Hamming local codes give an achievable rate.
Their mutual information follows from coset weight enumerators, and
perfectness collapses it to a closed form.
"""

from lrcap import (
    cap_bec_hamming_rho3_lower,
    cap_bec_rho_converse,
    coset_weight_table,
    hamming_code,
    hamming_rho3_bsc_mi,
    local_code_bsc_mi,
)

code = hamming_code(3)
table = coset_weight_table(code)

# all nonzero cosets of a perfect code share one weight distribution
print(table.counts[:3])

# enumerator values form a distribution over cosets
vals = table.enumerator_values(0.1)
print("sum over cosets:", vals.sum())

# coset-table MI against the closed form
print("table  :", local_code_bsc_mi(code, 0.1))
print("closed :", hamming_rho3_bsc_mi(0.1, 6))

# over the BEC the achievable rate stays below the rho = 3 converse
for p in (0.0, 0.2, 0.5):
    lo = cap_bec_hamming_rho3_lower(p, 6).value
    up = cap_bec_rho_converse(p, 3, 6).value
    print(f"p={p:.1f}  lower={lo:.4f}  converse={up:.4f}")
