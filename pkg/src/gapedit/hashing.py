"""Subsampled polynomial rolling hashes.

A sample set S is a sorted collection of 1-based positions. A rolling hash
state over S stores prefix hashes H[t] = H[t-1] * x + sym(S[t]) mod p, so
the hash of the sampled positions inside any range [i, j] comes from two
binary searches and one modular combination:

    hash(S cap [i, j]) = H[hi] - H[lo] * x^(hi - lo) mod p

with H over the first lo (resp. hi) sampled positions. An empty range
hashes to 0. Shifted views reuse the same base positions with an additive
offset, so the two sides of a comparison always sample the same set.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .mers61 import P61, mulmod, mulmod_vec, submod_vec

MAX_N = 1 << 26


@dataclass
class OpCounters:
    """Work accounting for sublinearity measurements."""

    init_steps: int = 0  # characters folded into prefix hashes
    retrievals: int = 0  # range-hash retrievals answered
    table_lookups: int = 0  # membership probes against prebuilt tables
    oracle_queries: int = 0  # alignment-oracle invocations

    def merge(self, other: "OpCounters") -> None:
        self.init_steps += other.init_steps
        self.retrievals += other.retrievals
        self.table_lookups += other.table_lookups
        self.oracle_queries += other.oracle_queries


@dataclass(frozen=True)
class HashConfig:
    """Shared hash parameters. Both strings of one comparison must use the
    same (p, x) and the same sample draw for hashes to be comparable."""

    x: int
    p: int = P61
    rng_seed: int | None = None

    @classmethod
    def from_seed(cls, seed) -> "HashConfig":
        ss = np.random.SeedSequence(seed)
        x_ss, _ = ss.spawn(2)
        rng = np.random.default_rng(x_ss)
        x = int(rng.integers(2, P61 - 1))
        try:
            seed_val = int(seed)
        except (TypeError, ValueError):
            seed_val = None
        return cls(x=x, rng_seed=seed_val)

    def sampling_rng(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.rng_seed)
        _, samp_ss = ss.spawn(2)
        return np.random.default_rng(samp_ss)


@dataclass(frozen=True)
class SampleSet:
    """Sorted base positions plus an additive offset (a shifted view)."""

    indices: np.ndarray  # sorted unique int64, base positions
    n: int
    rate: float
    offset: int = 0

    def __len__(self) -> int:
        return int(self.indices.size)

    def shift(self, a: int) -> "SampleSet":
        return SampleSet(self.indices, self.n, self.rate, self.offset + a)

    def positions(self) -> np.ndarray:
        return self.indices + self.offset


def sample_rate(n: int, granularity: int) -> float:
    return min(4.0 * math.log(n) / granularity, 1.0) if n > 1 else 1.0


def draw_sample(n: int, granularity: int, rng: np.random.Generator,
                force_anchors: np.ndarray | None = None) -> SampleSet:
    """Include each position of [1, n] independently at rate
    min(4 ln n / granularity, 1), then union in any forced anchors."""
    rate = sample_rate(n, granularity)
    if rate >= 1.0:
        idx = np.arange(1, n + 1, dtype=np.int64)
    else:
        keep = rng.random(n) < rate
        idx = np.nonzero(keep)[0].astype(np.int64) + 1
    if force_anchors is not None and len(force_anchors):
        anchors = np.asarray(force_anchors, dtype=np.int64)
        anchors = anchors[(anchors >= 1) & (anchors <= n)]
        idx = np.union1d(idx, anchors)
    return SampleSet(idx, n, rate)


class RollingHashState:
    """Prefix hashes over one shifted view of a sample set on one string."""

    def __init__(self, string, samples: SampleSet, cfg: HashConfig,
                 counters: OpCounters | None = None):
        n = len(string)
        if n > MAX_N:
            raise ValueError("string too long for collision guarantee")
        if cfg.p <= n * n * (string.sigma + 1):
            raise ValueError("modulus too small for this length and alphabet")
        self.cfg = cfg
        self.samples = samples
        self.counters = counters if counters is not None else OpCounters()
        syms = string.gather(samples.positions())
        m = syms.size
        h = np.zeros(m + 1, dtype=np.uint64)
        acc = 0
        x, p = cfg.x, cfg.p
        for t in range(m):
            acc = (acc * x + int(syms[t])) % p
            h[t + 1] = acc
        self.prefix = h
        self.counters.init_steps += m
        # powers of x up to the number of sampled positions
        xp = np.zeros(m + 1, dtype=np.uint64)
        xp[0] = 1
        v = 1
        for t in range(1, m + 1):
            v = (v * x) % p
            xp[t] = v
        self.xpow = xp

    def _locate(self, i: int, j: int) -> tuple[int, int]:
        base = self.samples.indices
        off = self.samples.offset
        lo = int(np.searchsorted(base, i - off, side="left"))
        hi = int(np.searchsorted(base, j - off, side="right"))
        return lo, hi

    def retrieve(self, i: int, j: int) -> int:
        """Hash of the sampled positions inside [i, j] (view coordinates)."""
        self.counters.retrievals += 1
        lo, hi = self._locate(i, j)
        if hi <= lo:
            return 0
        head = mulmod(int(self.prefix[lo]), int(self.xpow[hi - lo]))
        return (int(self.prefix[hi]) - head) % self.cfg.p

    def retrieve_many(self, i_arr: np.ndarray, j_arr: np.ndarray) -> np.ndarray:
        """Vectorized retrieve for parallel ranges."""
        base = self.samples.indices
        off = self.samples.offset
        i_arr = np.asarray(i_arr, dtype=np.int64)
        j_arr = np.asarray(j_arr, dtype=np.int64)
        self.counters.retrievals += int(i_arr.size)
        lo = np.searchsorted(base, i_arr - off, side="left")
        hi = np.searchsorted(base, j_arr - off, side="right")
        cnt = np.maximum(hi - lo, 0)
        head = mulmod_vec(self.prefix[lo], self.xpow[cnt])
        out = submod_vec(self.prefix[np.maximum(hi, lo)], head)
        return np.where(cnt > 0, out, np.uint64(0))


def sidecar_dump(cfg: HashConfig, samples: SampleSet) -> str:
    return json.dumps({
        "p": cfg.p,
        "x": cfg.x,
        "rng_seed": cfg.rng_seed,
        "n": samples.n,
        "rate": samples.rate,
        "sample": samples.indices.tolist(),
    })


def sidecar_load(text: str) -> tuple[HashConfig, SampleSet]:
    d = json.loads(text)
    cfg = HashConfig(x=int(d["x"]), p=int(d["p"]), rng_seed=d.get("rng_seed"))
    samples = SampleSet(np.asarray(d["sample"], dtype=np.int64),
                        int(d["n"]), float(d["rate"]))
    return cfg, samples
