"""Tokenization used by every translation-quality metric.

One pinned rule so all expected values stay stable: lowercase, punctuation
split off as separate tokens, then whitespace split.
"""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"\w+|[^\w\s]")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())
