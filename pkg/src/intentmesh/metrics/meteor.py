"""Unigram-alignment translation metric with a fragmentation penalty.

Alignment is built stage by stage (exact token match first, then stemmed),
each candidate token matching at most one reference token. Among
maximal-cardinality alignments the fewest-chunks one is preferred; the
production aligner approximates that greedily with a two-token lookahead,
and an exhaustive minimizer is provided for small-input verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import EmptyCorpusError, EmptyInputError
from .porter import stem
from .stats import ScoreStats, aggregate_stats

MatchStage = Callable[[str], str]


def _exact(token: str) -> str:
    return token


DEFAULT_STAGES: tuple[MatchStage, ...] = (_exact, stem)
STAGE_NAMES = {_exact: "exact", stem: "stem"}


@dataclass(frozen=True)
class MeteorAlignment:
    matches: int
    chunks: int
    precision: float
    recall: float
    f_mean: float
    penalty: float
    score: float
    pairs: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "matches": self.matches,
            "chunks": self.chunks,
            "precision": self.precision,
            "recall": self.recall,
            "f_mean": self.f_mean,
            "penalty": self.penalty,
            "score": self.score,
        }


def chunk_count(pairs: Sequence[tuple[int, int]]) -> int:
    """Maximal runs of matches contiguous and order-preserving on both sides."""
    ordered = sorted(pairs)
    chunks = 0
    prev = None
    for cand_idx, ref_idx in ordered:
        if prev is None or (cand_idx, ref_idx) != (prev[0] + 1, prev[1] + 1):
            chunks += 1
        prev = (cand_idx, ref_idx)
    return chunks


def _stage_options(
    candidate: Sequence[str],
    reference: Sequence[str],
    stage: MatchStage,
    matched: dict[int, int],
    used_ref: set[int],
) -> dict[int, list[int]]:
    ref_keys = [stage(tok) for tok in reference]
    options: dict[int, list[int]] = {}
    for c, tok in enumerate(candidate):
        if c in matched:
            continue
        key = stage(tok)
        refs = [r for r, rk in enumerate(ref_keys) if rk == key and r not in used_ref]
        if refs:
            options[c] = refs
    return options


def _window_breaks(
    c: int,
    r: int,
    options: dict[int, list[int]],
    matched: dict[int, int],
    used_ref: set[int],
    lookahead: int,
) -> int:
    """Chunk starts caused in [c, c+lookahead] if (c, r) is taken.

    Future tokens are simulated with plain continuity preference; tokens
    already matched by an earlier stage keep their pairing.
    """
    breaks = 0 if matched.get(c - 1) == r - 1 else 1
    sim_used = set(used_ref)
    sim_used.add(r)
    prev_ref = r
    for j in range(c + 1, c + 1 + lookahead):
        if j in matched:
            next_ref = matched[j]
        else:
            avail = [x for x in options.get(j, ()) if x not in sim_used]
            if not avail:
                break
            next_ref = prev_ref + 1 if prev_ref + 1 in avail else min(avail)
            sim_used.add(next_ref)
        if next_ref != prev_ref + 1:
            breaks += 1
        prev_ref = next_ref
    return breaks


def align_greedy(
    candidate: Sequence[str],
    reference: Sequence[str],
    stages: Sequence[MatchStage] = DEFAULT_STAGES,
    lookahead: int = 2,
) -> tuple[tuple[int, int], ...]:
    """Stage-by-stage greedy alignment with bounded lookahead.

    Always reaches maximal cardinality per stage (any occurrence choice
    does); the lookahead only steers which occurrences pair, to keep the
    chunk count near minimal.
    """
    matched: dict[int, int] = {}
    used_ref: set[int] = set()
    for stage in stages:
        options = _stage_options(candidate, reference, stage, matched, used_ref)
        for c in sorted(options):
            refs = [r for r in options[c] if r not in used_ref]
            if not refs:
                continue
            best = min(refs, key=lambda r: (_window_breaks(c, r, options, matched, used_ref, lookahead), r))
            matched[c] = best
            used_ref.add(best)
    return tuple(sorted(matched.items()))


def align_exact(
    candidate: Sequence[str],
    reference: Sequence[str],
    stages: Sequence[MatchStage] = DEFAULT_STAGES,
) -> tuple[tuple[int, int], ...]:
    """Exhaustive fewest-chunks alignment; oracle for small inputs.

    Enumerates, stage by stage, every way of adding a maximum number of
    stage matches, and keeps a completed alignment with the smallest chunk
    count (ties broken by lexicographic pair order).
    """

    def stage_max(options: dict[int, list[int]], stage: MatchStage) -> int:
        per_key_cand: dict[str, int] = {}
        per_key_refs: dict[str, set[int]] = {}
        for c, refs in options.items():
            key = stage(candidate[c])
            per_key_cand[key] = per_key_cand.get(key, 0) + 1
            per_key_refs.setdefault(key, set()).update(refs)
        return sum(min(count, len(per_key_refs[key])) for key, count in per_key_cand.items())

    def extend(stage_idx: int, matched: dict[int, int], used_ref: set[int]):
        if stage_idx == len(stages):
            yield dict(matched)
            return
        stage = stages[stage_idx]
        options = _stage_options(candidate, reference, stage, matched, used_ref)
        cand_positions = sorted(options)
        required = stage_max(options, stage)

        def assign(i: int, taken: int):
            if i == len(cand_positions):
                if taken == required:
                    yield from extend(stage_idx + 1, matched, used_ref)
                return
            c = cand_positions[i]
            for r in options[c]:
                if r in used_ref:
                    continue
                matched[c] = r
                used_ref.add(r)
                yield from assign(i + 1, taken + 1)
                del matched[c]
                used_ref.discard(r)
            # skipping c is allowed; the cardinality gate at the end keeps
            # only stage-maximal alignments
            yield from assign(i + 1, taken)

        yield from assign(0, 0)

    best_pairs: tuple[tuple[int, int], ...] | None = None
    best_chunks = None
    for alignment in extend(0, {}, set()):
        pairs = tuple(sorted(alignment.items()))
        chunks = chunk_count(pairs)
        key = (chunks, pairs)
        if best_chunks is None or key < (best_chunks, best_pairs):
            best_chunks, best_pairs = chunks, pairs
    return best_pairs if best_pairs is not None else ()


def score_alignment(
    pairs: Sequence[tuple[int, int]], candidate_len: int, reference_len: int
) -> MeteorAlignment:
    matches = len(pairs)
    if matches == 0:
        return MeteorAlignment(0, 0, 0.0, 0.0, 0.0, 0.0, 0.0, ())
    chunks = chunk_count(pairs)
    precision = matches / candidate_len
    recall = matches / reference_len
    f_mean = 10.0 * precision * recall / (recall + 9.0 * precision)
    penalty = 0.5 * (chunks / matches) ** 3
    return MeteorAlignment(
        matches=matches,
        chunks=chunks,
        precision=precision,
        recall=recall,
        f_mean=f_mean,
        penalty=penalty,
        score=f_mean * (1.0 - penalty),
        pairs=tuple(pairs),
    )


def meteor_sentence(
    candidate: Sequence[str],
    reference: Sequence[str],
    stages: Sequence[MatchStage] = DEFAULT_STAGES,
) -> MeteorAlignment:
    if not candidate or not reference:
        raise EmptyInputError("candidate and reference must be non-empty")
    pairs = align_greedy(candidate, reference, stages)
    return score_alignment(pairs, len(candidate), len(reference))


def meteor_corpus_average(
    pairs: Sequence[tuple[Sequence[str], Sequence[str]]],
    stages: Sequence[MatchStage] = DEFAULT_STAGES,
) -> ScoreStats:
    """Sentence-level average (and spread) over the corpus."""
    if not pairs:
        raise EmptyCorpusError("meteor_corpus_average needs at least one pair")
    return aggregate_stats([meteor_sentence(c, r, stages).score for c, r in pairs])
