"""Sublinear-time gap edit distance.

Decision procedures that distinguish pairs within edit distance k from
pairs far beyond it (past 40 k^2, or past 10 k l at coarser granularity l),
with three preprocessing regimes: none, A only, or both strings.
"""

from __future__ import annotations

from .greedy import GapVerdict, GreedyTrace, greedy_match
from .hashing import HashConfig, OpCounters
from .instances import (Instance, gen_large_side, gen_periodic, gen_planted,
                        load_instance, save_instance)
from .no_prep import NoPrepOracle
from .one_sided import OneSidedIndex, OneSidedOracle
from .strings import (ByteString, edit_distance_at_most, edit_distance_exact,
                      exact_hwave)
from .two_sided import TwoSidedIndex, TwoSidedOracle
from .wave import OneSidedWaveIndex, WaveTable, gap_wave

__all__ = [
    "ByteString", "GapVerdict", "GreedyTrace", "HashConfig", "Instance",
    "OneSidedIndex", "OneSidedOracle", "OneSidedWaveIndex", "OpCounters",
    "TwoSidedIndex", "TwoSidedOracle", "WaveTable", "edit_distance_at_most",
    "edit_distance_exact", "exact_hwave", "gap_match", "gap_wave",
    "gen_large_side", "gen_periodic", "gen_planted", "greedy_match",
    "load_instance", "save_instance",
]


def gap_match(a: ByteString, b: ByteString, k: int, mode: str = "noprep",
              seed=None, cfg: HashConfig | None = None,
              trace: GreedyTrace | None = None):
    """Decide the k versus 40 k^2 gap. Returns (verdict, query counters).

    Modes: "noprep" hashes both strings per call, "onesided" preprocesses
    A, "twosided" preprocesses both (cells computed lazily from A's
    hashes), "exact" uses the brute-force alignment referee.
    """
    if cfg is None:
        cfg = HashConfig.from_seed(seed)
    counters = OpCounters()
    if mode == "exact":
        from .strings import max_k_alignment_bruteforce

        def oracle(i_b):
            return max_k_alignment_bruteforce(a, b, i_b, k)
    elif mode == "noprep":
        oracle = NoPrepOracle(a, b, k, cfg, counters)
    elif mode == "onesided":
        index = OneSidedIndex.preprocess(a, k, cfg)
        index.counters = counters
        oracle = OneSidedOracle(index, b, counters)
    elif mode == "twosided":
        index = TwoSidedIndex.preprocess(a, k, cfg)
        index.counters = counters
        oracle = TwoSidedOracle(index, b, counters)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    verdict = greedy_match(a, b, k, oracle, trace=trace)
    return verdict, counters
