"""Pure-Python longest-common-subsequence kernel.

Reference implementation and import-time fallback for the compiled
extension. Operates on sequences of ints (token ids).
"""

from __future__ import annotations

from typing import Sequence


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    """Length of the longest order-preserving common subsequence, O(|a|*|b|)."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    if m > n:
        # iterate over the shorter row
        a, b = b, a
        n, m = m, n
    prev = [0] * (m + 1)
    cur = [0] * (m + 1)
    for i in range(1, n + 1):
        ai = a[i - 1]
        for j in range(1, m + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                left = cur[j - 1]
                up = prev[j]
                cur[j] = left if left >= up else up
        prev, cur = cur, prev
    return prev[m]
