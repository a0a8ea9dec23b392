"""Permutations in arrival-order convention.

A permutation of {1..n} is stored as a plain integer array whose entry at
position j (0-based j-1) is the rank of the j-th arriving item; n is the
highest rank.  Functions accept any integer sequence and return numpy arrays.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ._kernels import merge_count

ArrayLike = Sequence[int] | np.ndarray


def as_permutation(p: ArrayLike) -> np.ndarray:
    """Coerce to an int64 array, validating it is a permutation of {1..n}."""
    arr = np.asarray(p, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    n = arr.shape[0]
    seen = np.zeros(n, dtype=bool)
    if n and (arr.min() < 1 or arr.max() > n):
        raise ValueError("entries must lie in {1..n}")
    seen[arr - 1] = True
    if not seen.all():
        raise ValueError("entries must be a bijection on {1..n}")
    return arr


def is_permutation(p: ArrayLike) -> bool:
    try:
        as_permutation(p)
    except (ValueError, TypeError):
        return False
    return True


def inversion_count(p: ArrayLike) -> int:
    """Number of pairs i<j with p[i] > p[j].  O(n log n) via merge counting."""
    arr = np.ascontiguousarray(p, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    return int(merge_count(arr))


def inverse(p: ArrayLike) -> np.ndarray:
    """Inverse permutation: entry k is the position (1-based) at which rank k arrived."""
    arr = as_permutation(p)
    out = np.empty_like(arr)
    out[arr - 1] = np.arange(1, arr.shape[0] + 1, dtype=np.int64)
    return out


def reverse(p: ArrayLike) -> np.ndarray:
    """The permutation read right to left."""
    arr = np.asarray(p, dtype=np.int64)
    return arr[::-1].copy()
