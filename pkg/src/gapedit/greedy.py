"""Greedy gap decision driver.

Repeatedly asks an alignment oracle for the longest prefix of the remaining
B-suffix that matches some nearby A-window, and advances past it. A string
pair within distance k decomposes into at most 2k + 1 such pieces, so
2k + 1 rounds suffice to cross the whole string when the pair is close; a
far pair cannot be crossed because every greedy jump can be charged against
genuine edits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class GapVerdict(Enum):
    SMALL = "small"  # consistent with edit distance <= k
    LARGE = "large"  # consistent with edit distance above the gap threshold


@dataclass
class GreedyTrace:
    """Per-round record of the oracle answers, for auditing."""

    starts: list = field(default_factory=list)
    jumps: list = field(default_factory=list)
    hints: list = field(default_factory=list)


def greedy_match(a, b, k: int, oracle, trace: GreedyTrace | None = None) -> GapVerdict:
    """Run 2k + 1 oracle rounds starting at B-position 1.

    `oracle(i_b)` must return a jump length d >= 0 (an exact or relaxed
    longest-alignment value for B starting at i_b). Returns SMALL iff the
    cursor passes position n.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(b)
    if len(a) != n:
        raise ValueError("equal lengths required")
    i_b = 1
    for _ in range(2 * k + 1):
        if i_b > n:
            break
        d = oracle(i_b)
        if trace is not None:
            trace.starts.append(i_b)
            trace.jumps.append(d)
            hint = getattr(oracle, "last_hint", None)
            trace.hints.append(hint)
        i_b += max(d, 1)
    return GapVerdict.SMALL if i_b > n else GapVerdict.LARGE
