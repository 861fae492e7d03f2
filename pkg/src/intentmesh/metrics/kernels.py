"""Kernel selection: compiled LCS when available, pure Python otherwise.

The compiled and pure kernels share one contract (ints in, int out); parity
is enforced by tests and benchmarks/kernel_bench.py compares their speed.
"""

from __future__ import annotations

from typing import Sequence

from . import _lcs_py

try:
    from . import _lcs as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
except ImportError:
    _impl = _lcs_py
    BACKEND = "python"


def lcs_length_ids(a_ids: Sequence[int], b_ids: Sequence[int]) -> int:
    return _impl.lcs_length(a_ids, b_ids)


def lcs_length(a_tokens: Sequence[str], b_tokens: Sequence[str]) -> int:
    """LCS length over token sequences (empty input gives 0)."""
    ids: dict[str, int] = {}
    a_ids = [ids.setdefault(tok, len(ids)) for tok in a_tokens]
    b_ids = [ids.setdefault(tok, len(ids)) for tok in b_tokens]
    return _impl.lcs_length(a_ids, b_ids)
