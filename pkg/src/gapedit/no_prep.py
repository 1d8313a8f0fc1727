"""Alignment oracle without preprocessing, via a birthday split of shifts.

Every candidate shift c in [-k, k] factors as c = a * r + b with
r = ceil(sqrt(k)), |a| <= r and 0 <= b < r. Instead of hashing one range
per shift (2k + 1 states), we keep 2r + 1 shifted views of A and r shifted
views of B over one shared sample set; a shift-c alignment shows up as a
hash collision between the view pair (a, b). All views reuse the same base
positions, so both sides of any probe compare exactly the same sampled
offsets.

Probed ranges are shaved by k on both ends, which keeps every candidate
window inside the strings for every shift; matches are therefore reported
up to an edit slack proportional to k rather than exactly.
"""

from __future__ import annotations

import math

import numpy as np

from .hashing import (HashConfig, OpCounters, RollingHashState, SampleSet,
                      draw_sample)
from .strings import ByteString


class NoPrepOracle:
    """Longest-alignment oracle built per query pair, sublinear in n."""

    def __init__(self, a: ByteString, b: ByteString, k: int, cfg: HashConfig,
                 counters: OpCounters | None = None,
                 granularity: int | None = None):
        n = len(b)
        if len(a) != n:
            raise ValueError("equal lengths required")
        self.n = n
        self.k = k
        self.r = math.isqrt(k)
        if self.r * self.r < k:
            self.r += 1
        self.counters = counters if counters is not None else OpCounters()
        rng = cfg.sampling_rng()
        self.samples = draw_sample(n, granularity if granularity else k, rng)
        r = self.r
        self.a_states = {
            a_coef: RollingHashState(a, self.samples.shift(a_coef * r), cfg,
                                     self.counters)
            for a_coef in range(-r, r + 1)
        }
        self.b_states = {
            b_off: RollingHashState(b, self.samples.shift(-b_off), cfg,
                                    self.counters)
            for b_off in range(r)
        }
        self.last_hint = None

    def _probe(self, i_b: int, d: int) -> tuple[bool, int | None]:
        """Do the k-shaved sampled windows agree for some shift pair?"""
        k, r = self.k, self.r
        lo = i_b + k
        hi = i_b + d - k - 1
        if hi < lo:
            return True, None
        b_hashes = {}
        for b_off, st in self.b_states.items():
            b_hashes.setdefault(st.retrieve(lo - b_off, hi - b_off), b_off)
        for a_coef, st in self.a_states.items():
            h = st.retrieve(lo + a_coef * r, hi + a_coef * r)
            if h in b_hashes:
                return True, a_coef * r + b_hashes[h]
        return False, None

    def max_align(self, i_b: int) -> int:
        """Largest probed window length that still collides; at least
        min(2k, remaining length) because fully shaved windows are empty."""
        n, k = self.n, self.k
        lo = min(2 * k, n - i_b + 1)
        hi = n - i_b + 1
        self.last_hint = 0
        while lo < hi:
            mid = (lo + hi + 1) // 2
            ok, hint = self._probe(i_b, mid)
            if ok:
                lo = mid
                if hint is not None:
                    self.last_hint = hint
            else:
                hi = mid - 1
        return lo

    def __call__(self, i_b: int) -> int:
        self.counters.oracle_queries += 1
        return self.max_align(i_b)
