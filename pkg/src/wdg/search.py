"""Brute-force enumeration of {0,1} assignments on the degree-2 roots.

Each assignment is a bitmask over the targets of the Gram structure.  The
GF(2) Gram matrix of a mask is the XOR of the per-target matrices, so a whole
batch of masks is evaluated with a handful of numpy operations.
"""

from __future__ import annotations

import numpy as np

from .diagrams import WeightedDiagram
from .gram import LambdaAssignment, Z, gram_structure
from .linalg import det_bareiss, det_gf2_batch

DEFAULT_CAP = 20
CHUNK = 1 << 15


class CapExceeded(ValueError):
    pass


def _check_cap(d: WeightedDiagram, cap: int) -> int:
    m = len(gram_structure(d).targets)
    if m > cap:
        raise CapExceeded(f"{m} degree-2 roots exceed the enumeration cap {cap}")
    return m


def gf2_rows(per_target: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """Row bitsets of the GF(2) Gram matrix for each mask in `masks`."""
    masks = np.asarray(masks, dtype=np.uint64)
    rows = np.zeros((masks.shape[0], per_target.shape[1]), dtype=np.uint64)
    for t in range(per_target.shape[0]):
        on = ((masks >> np.uint64(t)) & np.uint64(1)).astype(bool)
        rows[on] ^= per_target[t]
    return rows


def masks_by_weight(m: int) -> np.ndarray:
    """All 2^m masks, fewest set bits first, ties broken by value."""
    masks = np.arange(1 << m, dtype=np.uint64)
    return masks[np.lexsort((masks, np.bitwise_count(masks)))]


def mask_to_lambda(targets, mask: int) -> LambdaAssignment:
    return LambdaAssignment(Z, {t: 1 for i, t in enumerate(targets) if mask >> i & 1})


def exhaustive_gf2(d: WeightedDiagram, cap: int = DEFAULT_CAP) -> bool:
    """True iff the GF(2) Gram determinant vanishes for all 2^m assignments."""
    m = _check_cap(d, cap)
    st = gram_structure(d)
    if st.size == 0:
        return False
    if not st.entries or st.size % 2:
        return True
    per_target = st.gf2_masks()
    for start in range(0, 1 << m, CHUNK):
        masks = np.arange(start, min(start + CHUNK, 1 << m), dtype=np.uint64)
        if det_gf2_batch(gf2_rows(per_target, masks), st.size).any():
            return False
    return True


def search_unimodular(d: WeightedDiagram, cap: int = DEFAULT_CAP) -> LambdaAssignment | None:
    """The first {0,1} assignment (fewest ones first) with integer det +-1.

    Only masks whose GF(2) determinant is 1 can have an odd integer
    determinant, so those are the only ones sent to exact elimination.
    """
    m = _check_cap(d, cap)
    st = gram_structure(d)
    if st.size == 0:
        return LambdaAssignment(Z, {})
    if st.size % 2:
        return None
    per_target = st.gf2_masks()
    coeff = st.coefficient_matrix()
    order = masks_by_weight(m)
    for start in range(0, order.size, CHUNK):
        masks = order[start:start + CHUNK]
        odd = det_gf2_batch(gf2_rows(per_target, masks), st.size)
        for mask in masks[odd.astype(bool)]:
            mask = int(mask)
            bits = [(mask >> t) & 1 for t in range(m)]
            g = np.tensordot(np.array(bits, dtype=np.int64), coeff, axes=1)
            if det_bareiss(g.tolist()) in (1, -1):
                return mask_to_lambda(st.targets, mask)
    return None


__all__ = [
    "CapExceeded",
    "DEFAULT_CAP",
    "exhaustive_gf2",
    "gf2_rows",
    "mask_to_lambda",
    "masks_by_weight",
    "search_unimodular",
]
