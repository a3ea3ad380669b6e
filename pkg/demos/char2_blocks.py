"""Singular block matrices over GF(2).

Builds one random block matrix S for each of the three hypotheses and shows
that it is singular, then checks that singular alternating matrices of even
order lose at least two dimensions of rank.

    python demos/char2_blocks.py
"""

import numpy as np

from wdg.char2 import HYPOTHESES, assemble_S, alternating_kernel_dim, random_singular_symmetric, random_spec
from wdg.linalg import rank_gf2

rng = np.random.default_rng(1)
for h in HYPOTHESES:
    spec = random_spec(rng, h, max_n=2, max_groups=2, max_copies=2)
    s = assemble_S(spec)
    print(f"hypothesis {h}: n={spec.n} Gamma={spec.gamma} m={spec.m} copies={spec.k}")
    print(f"  S has order {spec.order} and rank {rank_gf2(s)} over GF(2)")
    for row in s:
        print("   ", "".join(".1"[x] for x in row))

dims = [alternating_kernel_dim(random_singular_symmetric(rng)) for _ in range(200)]
print(f"kernel dimensions of 200 singular alternating matrices: {sorted(set(dims))}")
