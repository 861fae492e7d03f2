"""Translation-quality metrics: BLEU, METEOR, ROUGE-L and aggregation."""

from .bleu import BLEU2, BleuComponents, BleuConfig, NgramPrecision, corpus_bleu, sentence_bleu
from .bench import CorpusPair, evaluate_corpus, read_corpus_jsonl
from .kernels import BACKEND as KERNEL_BACKEND
from .kernels import lcs_length
from .meteor import (
    DEFAULT_STAGES,
    MeteorAlignment,
    align_exact,
    align_greedy,
    chunk_count,
    meteor_corpus_average,
    meteor_sentence,
)
from .porter import stem
from .rouge import RougeResult, rouge_l
from .stats import ScoreStats, aggregate_stats
from .tokens import tokenize

__all__ = [
    "BLEU2",
    "BleuComponents",
    "BleuConfig",
    "CorpusPair",
    "DEFAULT_STAGES",
    "KERNEL_BACKEND",
    "MeteorAlignment",
    "NgramPrecision",
    "RougeResult",
    "ScoreStats",
    "aggregate_stats",
    "align_exact",
    "align_greedy",
    "chunk_count",
    "corpus_bleu",
    "evaluate_corpus",
    "lcs_length",
    "meteor_corpus_average",
    "meteor_sentence",
    "read_corpus_jsonl",
    "rouge_l",
    "sentence_bleu",
    "stem",
    "tokenize",
]
