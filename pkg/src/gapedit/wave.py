"""Gap decision at the coarser threshold k versus 10 k l.

A sparsified wavefront tracks, per number of waves i and per diagonal j
(multiples of l in [-k, k]), how far into B an alignment can reach using i
rounds of slack l. Row transitions either pay l characters of slack (stay
or move one diagonal step) or extend along a near-diagonal run reported by
a shift-alignment oracle:

    m       = max( h[i-1][j] + l,  h[i-1][j-l] + l,  h[i-1][j+l] + l )
    h[i][j] = m + align(i_a = m + j + 1, i_b = m + 1)

so one wave both crosses an edit (or a diagonal rounding step) and rides
the following run. Row 0 holds the initial run: h[0][0] = align(1, 1).
The pair is declared within distance k when h[k][0] reaches past n.

`align(i_a, i_b)` approximates the longest d with B[i_b .. i_b+d-1] equal
to A[i_a+c .. i_a+c+d-1] for some |c| <= l, under the promise
|i_a - i_b| <= k. Three interchangeable backends are provided: a per-pair
birthday-split oracle (no preprocessing), an indexed one (A preprocessed),
and the same index with B's sampled hashes precomputed too (both sides
preprocessed, query phase touches neither string).
"""

from __future__ import annotations

import math

import numpy as np

from .greedy import GapVerdict
from .hashing import (HashConfig, OpCounters, RollingHashState, SampleSet,
                      draw_sample)
from .one_sided import OneSidedIndex, anchor_positions
from .strings import ByteString

NEG_INF = float("-inf")


class WaveTable:
    """Rows of sparse diagonal values; missing entries are -inf."""

    def __init__(self):
        self.rows: list[dict[int, int]] = []

    def append(self, row: dict[int, int]) -> None:
        self.rows.append(dict(row))

    def get(self, i: int, j: int):
        if 0 <= i < len(self.rows):
            return self.rows[i].get(j, NEG_INF)
        return NEG_INF


def greedy_wave(a: ByteString, b: ByteString, k: int, ell: int, oracle,
                table: WaveTable | None = None) -> GapVerdict:
    """Run k wave rounds; SMALL iff diagonal 0 reaches past n."""
    if k < 1 or ell < 1 or ell > k:
        raise ValueError("need 1 <= l <= k")
    n = len(b)
    if len(a) != n:
        raise ValueError("equal lengths required")
    diagonals = list(range(-(k // ell) * ell, (k // ell) * ell + 1, ell))

    def extend(m: int, j: int) -> int:
        i_b = m + 1
        i_a = m + j + 1
        if m >= n or i_a < 1 or i_a > n:
            return m
        return m + oracle(i_a, i_b)

    row = {j: (extend(0, 0) if j == 0 else NEG_INF) for j in diagonals}
    if table is not None:
        table.append(row)
    for _ in range(k):
        if row.get(0, NEG_INF) >= n:
            break
        new = {}
        for j in diagonals:
            m = NEG_INF
            for dj in (0, -ell, ell):
                src = row.get(j + dj, NEG_INF)
                if src != NEG_INF:
                    m = max(m, src + ell)
            if m != NEG_INF:
                new[j] = extend(m, j)
        row = new
        if table is not None:
            table.append(row)
    return GapVerdict.SMALL if row.get(0, NEG_INF) >= n else GapVerdict.LARGE


def wave_jump_violations(table: WaveTable, ell: int, n: int) -> list:
    """Monotone jump property: any reachable cell dominates earlier cells
    within diagonal reach, h[i'][j'] >= min(h[i][j] + l*(i'-i), n)."""
    out = []
    rows = table.rows
    for i in range(len(rows)):
        for j, v in rows[i].items():
            if v == NEG_INF:
                continue
            for i2 in range(i + 1, len(rows)):
                reach = ell * (i2 - i)
                for j2, v2 in rows[i2].items():
                    if abs(j2 - j) <= reach and v2 < min(v + reach, n):
                        out.append((i, j, i2, j2, v, v2))
    return out


class NoPrepShiftOracle:
    """Shift-alignment oracle without preprocessing.

    Shifts relative to B factor as a * r + b_off with r = ceil(sqrt(k));
    states cover a in [-2r, 2r] (total offsets up to k + l in magnitude)
    and b_off in [0, r). Probes shave l characters from each end; only the
    a-values compatible with the promised offset i_a - i_b and |c| <= l
    are scanned, so reported matches have |c| <= l + 2r <= 3l.
    """

    def __init__(self, a: ByteString, b: ByteString, k: int, ell: int,
                 cfg: HashConfig, counters: OpCounters | None = None):
        n = len(b)
        if len(a) != n:
            raise ValueError("equal lengths required")
        r = math.isqrt(k)
        if r * r < k:
            r += 1
        if ell < r:
            raise ValueError("granularity below sqrt(k) is unsupported here")
        self.n, self.k, self.ell, self.r = n, k, ell, r
        self.counters = counters if counters is not None else OpCounters()
        rng = cfg.sampling_rng()
        self.samples = draw_sample(n, ell, rng)
        self.a_states = {
            ac: RollingHashState(a, self.samples.shift(ac * r), cfg,
                                 self.counters)
            for ac in range(-2 * r, 2 * r + 1)
        }
        self.b_states = {
            bo: RollingHashState(b, self.samples.shift(-bo), cfg,
                                 self.counters)
            for bo in range(r)
        }
        self.last_hint = None

    def _probe(self, i_a: int, i_b: int, d: int) -> bool:
        ell, r = self.ell, self.r
        delta = i_a - i_b
        lo = i_b + ell
        hi = i_b + d - ell - 1
        if hi < lo:
            return True
        b_hashes = {}
        for bo, st in self.b_states.items():
            b_hashes.setdefault(st.retrieve(lo - bo, hi - bo), bo)
        a_lo = max(math.floor((delta - ell) / r), -2 * r)
        a_hi = min(math.ceil((delta + ell) / r), 2 * r)
        for ac in range(a_lo, a_hi + 1):
            h = self.a_states[ac].retrieve(lo + ac * r, hi + ac * r)
            if h in b_hashes:
                self.last_hint = ac * r + b_hashes[h] - delta
                return True
        return False

    def __call__(self, i_a: int, i_b: int) -> int:
        self.counters.oracle_queries += 1
        n, ell = self.n, self.ell
        lo = min(2 * ell, n - i_b + 1)
        hi = n - i_b + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._probe(i_a, i_b, mid):
                lo = mid
            else:
                hi = mid - 1
        return lo


class BruteForceShiftOracle:
    """Exact shift-alignment oracle; referee for tests and the exact mode."""

    def __init__(self, a: ByteString, b: ByteString, k: int, ell: int):
        from .strings import max_shift_alignment_bruteforce
        self._f = max_shift_alignment_bruteforce
        self.a, self.b, self.k, self.ell = a, b, k, ell

    def __call__(self, i_a: int, i_b: int) -> int:
        return self._f(self.a, self.b, i_a, i_b, self.ell, self.k)


class OneSidedWaveIndex:
    """Shift-alignment tables over A alone, bucketed by start position and
    shift at granularity l. Layout mirrors the plain one-sided index with a
    third axis for the shift bucket."""

    def __init__(self, n: int, k: int, ell: int, cfg: HashConfig,
                 samples: SampleSet, tables: dict | None = None,
                 dense: list | None = None,
                 counters: OpCounters | None = None):
        self.n, self.k, self.ell, self.cfg = n, k, ell, cfg
        self.samples = samples
        self.tables = tables
        self.dense = dense
        self.counters = counters if counters is not None else OpCounters()
        self.num_cols = -(-n // ell)
        self.shift_cols = range(-(k // ell) - 1, k // ell + 2)
        self.exponents = max(n, 1).bit_length() - 1

    @classmethod
    def preprocess(cls, a: ByteString, k: int, ell: int, cfg: HashConfig,
                   force_general: bool = False) -> "OneSidedWaveIndex":
        n = len(a)
        counters = OpCounters()
        rng = cfg.sampling_rng()
        samples = draw_sample(n, ell, rng,
                              force_anchors=anchor_positions(n, ell))
        idx = cls(n, k, ell, cfg, samples, counters=counters)
        if samples.rate >= 1.0 and not force_general:
            idx._build_dense(a)
        else:
            idx._build_tables(a)
        return idx

    def _canonical_starts(self, e: int) -> np.ndarray:
        s = self.samples.indices
        starts = np.union1d(s + 1, s - (1 << e) + 1)
        return starts[(starts >= 2 - (1 << e)) & (starts <= self.n + 1)]

    def _build_tables(self, a: ByteString) -> None:
        k, n, ell = self.k, self.n, self.ell
        states = {
            sh: RollingHashState(a, self.samples.shift(sh), self.cfg,
                                 self.counters)
            for sh in range(-k, k + 1)
        }
        tables: dict = {}
        for e in range(self.exponents + 1):
            w = 1 << e
            starts = self._canonical_starts(e)
            buf_h, buf_ci, buf_ca = [], [], []
            for sh, st in states.items():
                ok = (starts + sh >= 1) & (starts + sh + w - 1 <= n)
                i_ok = starts[ok]
                if not i_ok.size:
                    continue
                h = st.retrieve_many(i_ok + sh, i_ok + sh + w - 1)
                ci = i_ok // ell
                ca = sh // ell
                for d1 in (-1, 0, 1):
                    c1 = ci + d1
                    keep = (c1 >= 0) & (c1 < self.num_cols)
                    for d2 in (-1, 0, 1):
                        c2 = ca + d2
                        if c2 not in self.shift_cols:
                            continue
                        buf_h.append(h[keep])
                        buf_ci.append(c1[keep])
                        buf_ca.append(np.full(int(keep.sum()), c2,
                                              dtype=np.int64))
            if not buf_h:
                continue
            h = np.concatenate(buf_h)
            c1 = np.concatenate(buf_ci)
            c2 = np.concatenate(buf_ca)
            key = c1 * (len(self.shift_cols) + 4) + (c2 - self.shift_cols.start)
            order = np.lexsort((h, key))
            h, c1, c2, key = h[order], c1[order], c2[order], key[order]
            cuts = np.nonzero(np.diff(key))[0] + 1
            for seg_h, seg_c1, seg_c2 in zip(np.split(h, cuts),
                                             np.split(c1, cuts),
                                             np.split(c2, cuts)):
                tables[(e, int(seg_c1[0]), int(seg_c2[0]))] = np.unique(seg_h)
        self.tables = tables

    def _build_dense(self, a: ByteString) -> None:
        state = RollingHashState(a, self.samples, self.cfg, self.counters)
        dense = []
        for e in range(self.exponents + 1):
            w = 1 << e
            u = np.arange(1, self.n - w + 2, dtype=np.int64)
            h = state.retrieve_many(u, u + w - 1)
            order = np.lexsort((u, h))
            dense.append((h[order], u[order]))
        self.dense = dense

    def member(self, e: int, col_i: int, col_a: int, h: int) -> bool:
        self.counters.table_lookups += 1
        if self.dense is not None:
            return self._member_dense(e, col_i, col_a, h)
        cell = self.tables.get((e, col_i, col_a))
        if cell is None:
            return False
        pos = int(np.searchsorted(cell, np.uint64(h)))
        return pos < cell.size and int(cell[pos]) == h

    def _member_dense(self, e: int, col_i: int, col_a: int, h: int) -> bool:
        if not (0 <= col_i < self.num_cols) or col_a not in self.shift_cols:
            return False
        if e >= len(self.dense):
            return False
        ell, k, w = self.ell, self.k, 1 << e
        i_lo = max((col_i - 1) * ell, 2 - w)
        i_hi = min((col_i + 2) * ell - 1, self.n + 1)
        a_lo = max((col_a - 1) * ell, -k)
        a_hi = min((col_a + 2) * ell - 1, k)
        if i_hi < i_lo or a_hi < a_lo:
            return False
        u_lo = max(i_lo + a_lo, 1)
        u_hi = min(i_hi + a_hi, self.n - w + 1)
        if u_hi < u_lo:
            return False
        hs, us = self.dense[e]
        left = int(np.searchsorted(hs, np.uint64(h), side="left"))
        right = int(np.searchsorted(hs, np.uint64(h), side="right"))
        if right <= left:
            return False
        seg = us[left:right]
        pos = int(np.searchsorted(seg, u_lo, side="left"))
        return pos < seg.size and int(seg[pos]) <= u_hi


def wave_process_b(index: OneSidedWaveIndex, b: ByteString,
                   counters: OpCounters | None = None) -> RollingHashState:
    return RollingHashState(b, index.samples, index.cfg,
                            counters if counters is not None else index.counters)


def one_sided_max_shift_align(index: OneSidedWaveIndex,
                              b_state: RollingHashState,
                              i_a: int, i_b: int) -> int:
    """Binary expansion of the shift-alignment length: scan window lengths
    by descending powers of two, advancing past each window whose B-hash
    is filed near the current start bucket and the query's shift bucket."""
    remaining = index.n - i_b + 1
    if remaining <= 0:
        return 0
    col_a = (i_a - i_b) // index.ell
    cur = i_b
    for e in range(remaining.bit_length() - 1, -1, -1):
        d = 1 << e
        if cur + d - 1 > index.n:
            continue
        h = b_state.retrieve(cur, cur + d - 1)
        col_i = min(cur // index.ell, index.num_cols - 1)
        if index.member(e, col_i, col_a, h):
            cur += d
    return cur - i_b


class IndexedShiftOracle:
    def __init__(self, index: OneSidedWaveIndex, b: ByteString,
                 counters: OpCounters | None = None,
                 b_state: RollingHashState | None = None):
        self.index = index
        self.counters = counters if counters is not None else OpCounters()
        self.b_state = (b_state if b_state is not None
                        else wave_process_b(index, b, self.counters))
        self.last_hint = None

    def __call__(self, i_a: int, i_b: int) -> int:
        self.counters.oracle_queries += 1
        return one_sided_max_shift_align(self.index, self.b_state, i_a, i_b)


def gap_wave(a: ByteString, b: ByteString, k: int, ell: int, mode: str,
             seed=None, cfg: HashConfig | None = None,
             table: WaveTable | None = None):
    """Decide the k versus 10 k l gap. Returns (verdict, query counters).

    Modes: "noprep" builds hashes per pair; "onesided" preprocesses A;
    "twosided" additionally precomputes B's sampled hashes so the wave
    itself only touches prebuilt state; "exact" uses the brute-force
    referee oracle.
    """
    if cfg is None:
        cfg = HashConfig.from_seed(seed)
    query_counters = OpCounters()
    if mode == "exact":
        oracle = BruteForceShiftOracle(a, b, k, ell)
    elif mode == "noprep":
        oracle = NoPrepShiftOracle(a, b, k, ell, cfg, query_counters)
    elif mode in ("onesided", "twosided"):
        index = OneSidedWaveIndex.preprocess(a, k, ell, cfg)
        if mode == "twosided":
            prep_counters = OpCounters()
            b_state = wave_process_b(index, b, prep_counters)
            b_state.counters = query_counters  # lookups after init are query work
            index.counters = query_counters
            oracle = IndexedShiftOracle(index, b, query_counters, b_state)
        else:
            index.counters = query_counters
            oracle = IndexedShiftOracle(index, b, query_counters)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    verdict = greedy_wave(a, b, k, ell, oracle, table=table)
    return verdict, query_counters
