"""Benchmark corpus evaluation: grouped score tables as JSON reports.

Corpus format is JSON Lines, one object per line:
    {"agent_type": str, "model": str, "candidate": str, "reference": str}
Reports mirror the grouped-table shape: per metric, one row per
(agent_type, model) group with n / mu / sigma columns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import CorpusInvalidError, EmptyCorpusError
from .bleu import BLEU2, BleuConfig, corpus_bleu, sentence_bleu
from .meteor import DEFAULT_STAGES, meteor_sentence
from .rouge import rouge_l
from .stats import aggregate_stats
from .tokens import tokenize
from . import kernels

KNOWN_METRICS = ("bleu2", "meteor", "rougeL")

_REQUIRED_FIELDS = ("agent_type", "model", "candidate", "reference")


@dataclass(frozen=True)
class CorpusPair:
    agent_type: str
    model: str
    candidate: str
    reference: str


def read_corpus_jsonl(path: str) -> list[CorpusPair]:
    pairs: list[CorpusPair] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                doc = json.loads(line)
            except json.JSONDecodeError:
                raise CorpusInvalidError(line_no, f"line {line_no}: not valid JSON")
            if not isinstance(doc, dict):
                raise CorpusInvalidError(line_no, f"line {line_no}: expected an object")
            for fieldname in _REQUIRED_FIELDS:
                if fieldname not in doc or not isinstance(doc[fieldname], str) or not doc[fieldname].strip():
                    raise CorpusInvalidError(line_no, f"line {line_no}: missing or empty field {fieldname!r}")
            pairs.append(
                CorpusPair(
                    agent_type=doc["agent_type"],
                    model=doc["model"],
                    candidate=doc["candidate"],
                    reference=doc["reference"],
                )
            )
    if not pairs:
        raise EmptyCorpusError(f"corpus {path} has no pairs")
    return pairs


def _grouped(pairs: Sequence[CorpusPair]) -> list[tuple[tuple[str, str], list[CorpusPair]]]:
    groups: dict[tuple[str, str], list[CorpusPair]] = {}
    for pair in pairs:
        groups.setdefault((pair.agent_type, pair.model), []).append(pair)
    return sorted(groups.items())


def evaluate_corpus(
    pairs: Sequence[CorpusPair],
    metrics: Iterable[str] = KNOWN_METRICS,
    bleu_cfg: BleuConfig = BLEU2,
    rouge_stemming: bool = True,
    rouge_beta: float = 1.0,
) -> list[dict]:
    """One report per metric, rows grouped and sorted by (agent_type, model)."""
    selected = list(metrics)
    for name in selected:
        if name not in KNOWN_METRICS:
            raise ValueError(f"unknown metric {name!r}; known: {', '.join(KNOWN_METRICS)}")
    if not pairs:
        raise EmptyCorpusError("no pairs to evaluate")

    tokenized = [(p, tokenize(p.candidate), tokenize(p.reference)) for p in pairs]
    groups = _grouped(pairs)
    token_map = {id(p): (c, r) for p, c, r in tokenized}

    reports = []
    for name in selected:
        rows = []
        for (agent_type, model), members in groups:
            token_pairs = [token_map[id(p)] for p in members]
            row: dict = {"agent_type": agent_type, "model": model}
            if name == "bleu2":
                scores = [sentence_bleu(c, r, bleu_cfg) for c, r in token_pairs]
                stats = aggregate_stats(scores)
                row.update(stats.to_dict())
                row["corpus_score"] = corpus_bleu(token_pairs, bleu_cfg).score
            elif name == "meteor":
                scores = [meteor_sentence(c, r, DEFAULT_STAGES).score for c, r in token_pairs]
                row.update(aggregate_stats(scores).to_dict())
            else:
                scores = [rouge_l(c, r, stemming=rouge_stemming, beta=rouge_beta).f_measure for c, r in token_pairs]
                row.update(aggregate_stats(scores).to_dict())
            rows.append(row)
        reports.append(
            {
                "metric": name,
                "groups": rows,
                "metadata": _metadata(name, bleu_cfg, rouge_stemming, rouge_beta),
            }
        )
    return reports


def _metadata(name: str, bleu_cfg: BleuConfig, rouge_stemming: bool, rouge_beta: float) -> dict:
    meta = {"tokenizer": "lowercase, punctuation split off, whitespace", "kernel_backend": kernels.BACKEND}
    if name == "bleu2":
        meta.update(
            {
                "level": "corpus_score pooled; mu/sigma over per-sentence scores",
                "max_n": bleu_cfg.max_n,
                "weights": list(bleu_cfg.weights),
                "smoothing": "none",
            }
        )
    elif name == "meteor":
        meta.update(
            {
                "level": "sentence-level average",
                "stages": ["exact", "stem"],
                "synonyms": "omitted (no lexical database)",
            }
        )
    else:
        meta.update({"level": "average F-measure", "stemming": rouge_stemming, "beta": rouge_beta})
    return meta
