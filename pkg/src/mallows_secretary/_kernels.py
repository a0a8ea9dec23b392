"""Compiled inner loops: inversion counting and the insertion-line placement.

Both are O(n log n) per permutation so that simulations stay usable up to
n ~ 1e6 and sample counts ~ 1e6.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def merge_count(values):
    """Number of inverted pairs (i<j with values[i] > values[j]), bottom-up merge sort."""
    n = values.shape[0]
    src = values.copy()
    dst = np.empty(n, np.int64)
    count = np.int64(0)
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[i] <= src[j]:
                    dst[k] = src[i]
                    i += 1
                else:
                    dst[k] = src[j]
                    j += 1
                    count += mid - i
                k += 1
            while i < mid:
                dst[k] = src[i]
                i += 1
                k += 1
            while j < hi:
                dst[k] = src[j]
                j += 1
                k += 1
        src, dst = dst, src
        width *= 2
    return count


@njit(cache=True)
def merge_count_rows(rows):
    """merge_count applied to each row of a 2-d array."""
    out = np.empty(rows.shape[0], np.int64)
    for r in range(rows.shape[0]):
        out[r] = merge_count(rows[r])
    return out


@njit(cache=True)
def place_rows(x):
    """Materialize insertion lines for a batch of insertion-count vectors.

    Row r of ``x`` holds (X_2, ..., X_n): value j was put down with x[r, j-2]
    previously placed values to its right (value 1 opened the line).  Later
    insertions never reorder earlier values, so value j ends up with exactly
    X_j smaller values to its right.  Working downward from value n, value j
    therefore occupies the (j - X_j)-th free slot from the left; a Fenwick
    tree over free slots serves the order-statistics query in O(log n).

    Returns an int64 array of shape (rows, n); entry [r, t] is the value at
    position t+1 of the finished line.
    """
    rows, nm1 = x.shape
    n = nm1 + 1
    out = np.empty((rows, n), np.int64)
    tree = np.empty(n + 1, np.int64)
    top = 1
    while top * 2 <= n:
        top *= 2
    for r in range(rows):
        for i in range(1, n + 1):
            tree[i] = i & (-i)  # Fenwick of all-ones: every slot free
        for j in range(n, 0, -1):
            rank = j - (x[r, j - 2] if j >= 2 else 0)
            pos = 0
            rem = rank
            bit = top
            while bit > 0:
                nxt = pos + bit
                if nxt <= n and tree[nxt] < rem:
                    pos = nxt
                    rem -= tree[nxt]
                bit >>= 1
            slot = pos + 1
            out[r, slot - 1] = j
            while slot <= n:
                tree[slot] -= 1
                slot += slot & (-slot)
    return out
