"""Clearing the wide part of a random lam and reading off the determinant
block by block.

For an odd diagram with at least three weight-1 nodes, a random lam usually
touches degree-2 roots eps_s - eps_t that reach too far.  faithfulize
removes them with determinant-preserving changes of basis, after which the
Gram matrix is block triangular.

    python demos/faithful_factorization.py
"""

import numpy as np

from wdg import PartitionInput, diagram_from_input
from wdg.faithful import chain, factor_determinant, faithfulize, offending, pq_partition
from wdg.gram import LambdaAssignment, Z, gram_det, gram_structure

d = diagram_from_input(PartitionInput("B", 7, (4, 2), (3,)))
print(f"B7 weights {d.weights}, segment ends {chain(d)}")

part = pq_partition(d)
print("block sizes |Q_l| =", [len(q) for q in part.q_sets[:-1]], " last block", len(part.final_block()))

rng = np.random.default_rng(0)
targets = gram_structure(d).targets
lam = LambdaAssignment(Z, {r: int(v) for r, v in zip(targets, rng.integers(-5, 6, len(targets)))})
print(f"random lam: {len(offending(d, lam))} offending roots, det = {gram_det(d, lam)}")

clean = faithfulize(d, lam)
print(f"after faithfulize: {len(offending(d, clean))} offending roots, det = {gram_det(d, clean)}")

f = factor_determinant(d, clean)
print(f"block dets {f.block_dets}, last block det {f.final_det}")
prod = int(np.prod(f.block_dets))
print(f"(prod)^2 * last = {prod * prod * f.final_det}, |det G| = {abs(f.gram_det)}, identity holds: {f.identity_holds}")
