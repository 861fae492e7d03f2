"""ROUGE-L: longest-common-subsequence recall/precision/F-measure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import EmptyInputError
from . import kernels
from .porter import stem


@dataclass(frozen=True)
class RougeResult:
    lcs_len: int
    recall: float
    precision: float
    f_measure: float

    def to_dict(self) -> dict:
        return {
            "lcs_len": self.lcs_len,
            "recall": self.recall,
            "precision": self.precision,
            "f_measure": self.f_measure,
        }


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest order-preserving (not necessarily contiguous) common subsequence."""
    return kernels.lcs_length(a, b)


def rouge_l(
    candidate: Sequence[str],
    reference: Sequence[str],
    stemming: bool = True,
    beta: float = 1.0,
) -> RougeResult:
    if not candidate or not reference:
        raise EmptyInputError("candidate and reference must be non-empty")
    if beta <= 0:
        raise ValueError("beta must be positive")
    if stemming:
        candidate = [stem(tok) for tok in candidate]
        reference = [stem(tok) for tok in reference]
    lcs = kernels.lcs_length(candidate, reference)
    recall = lcs / len(reference)
    precision = lcs / len(candidate)
    if recall == 0.0 and precision == 0.0:
        f_measure = 0.0
    else:
        beta_sq = beta * beta
        f_measure = (1.0 + beta_sq) * precision * recall / (recall + beta_sq * precision)
    return RougeResult(lcs_len=lcs, recall=recall, precision=precision, f_measure=f_measure)
