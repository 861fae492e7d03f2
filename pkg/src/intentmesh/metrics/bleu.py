"""Corpus-level BLEU with clipped n-gram precisions and brevity penalty.

No smoothing: any used n-gram order with zero precision zeroes the score.
Counts are pooled across the corpus before the ratio is taken, so the
result is permutation-invariant over pairs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..errors import ConfigInvalidError, EmptyCorpusError, EmptyInputError

TokenPair = tuple[Sequence[str], Sequence[str]]


@dataclass(frozen=True)
class BleuConfig:
    max_n: int = 2
    weights: tuple[float, ...] = (0.5, 0.5)

    def validate(self) -> None:
        if self.max_n < 1:
            raise ConfigInvalidError("max_n must be >= 1")
        if len(self.weights) != self.max_n:
            raise ConfigInvalidError(f"need {self.max_n} weights, got {len(self.weights)}")
        if any(w < 0 for w in self.weights):
            raise ConfigInvalidError("weights must be non-negative")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise ConfigInvalidError(f"weights must sum to 1, got {sum(self.weights)}")

    @classmethod
    def uniform(cls, max_n: int) -> "BleuConfig":
        return cls(max_n=max_n, weights=tuple(1.0 / max_n for _ in range(max_n)))


BLEU2 = BleuConfig(max_n=2, weights=(0.5, 0.5))


@dataclass(frozen=True)
class NgramPrecision:
    clipped: int
    total: int

    @property
    def value(self) -> float:
        return self.clipped / self.total if self.total else 0.0

    def to_dict(self) -> dict:
        return {"clipped": self.clipped, "total": self.total, "value": self.value}


@dataclass(frozen=True)
class BleuComponents:
    precisions: tuple[NgramPrecision, ...]
    brevity_penalty: float
    score: float

    def to_dict(self) -> dict:
        return {
            "precisions": [p.to_dict() for p in self.precisions],
            "brevity_penalty": self.brevity_penalty,
            "score": self.score,
        }


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(pairs: Sequence[TokenPair], cfg: BleuConfig = BLEU2) -> BleuComponents:
    """BLEU over (candidate, reference) token-sequence pairs, corpus-pooled."""
    cfg.validate()
    if not pairs:
        raise EmptyCorpusError("corpus_bleu needs at least one pair")

    clipped = [0] * cfg.max_n
    totals = [0] * cfg.max_n
    candidate_length = 0
    reference_length = 0
    for candidate, reference in pairs:
        if not candidate or not reference:
            raise EmptyInputError("candidate and reference must be non-empty")
        candidate_length += len(candidate)
        reference_length += len(reference)
        for n in range(1, cfg.max_n + 1):
            cand_counts = _ngrams(candidate, n)
            ref_counts = _ngrams(reference, n)
            clipped[n - 1] += sum(min(count, ref_counts[gram]) for gram, count in cand_counts.items())
            totals[n - 1] += max(len(candidate) - n + 1, 0)

    precisions = tuple(NgramPrecision(c, t) for c, t in zip(clipped, totals))
    if candidate_length > reference_length:
        brevity_penalty = 1.0
    else:
        brevity_penalty = math.exp(1.0 - reference_length / candidate_length)

    log_sum = 0.0
    for weight, precision in zip(cfg.weights, precisions):
        if weight == 0.0:
            continue
        if precision.value == 0.0:
            return BleuComponents(precisions=precisions, brevity_penalty=brevity_penalty, score=0.0)
        log_sum += weight * math.log(precision.value)

    return BleuComponents(
        precisions=precisions,
        brevity_penalty=brevity_penalty,
        score=brevity_penalty * math.exp(log_sum),
    )


def sentence_bleu(candidate: Sequence[str], reference: Sequence[str], cfg: BleuConfig = BLEU2) -> float:
    """One pair scored as its own corpus; used for per-sentence spread columns."""
    return corpus_bleu([(candidate, reference)], cfg).score
