"""Strings over a small integer alphabet plus exact edit-distance oracles.

Symbols are 1..sigma; positions are 1-based. Reads outside [1, n] return the
sentinel value sigma + 1, which never equals any in-range symbol on either
string, so shifted comparisons near the boundaries behave like comparisons
against fresh characters.

The exact oracles here (banded DP with doubling, a quadratic referee, and an
h-wave variant) serve both the public `exact` entry points and the test
suite's independent ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ByteString:
    """Immutable 1-based string of symbols in 1..sigma."""

    data: np.ndarray  # int64, values in 1..sigma
    sigma: int

    def __post_init__(self):
        d = np.asarray(self.data, dtype=np.int64)
        object.__setattr__(self, "data", d)
        if d.size and (d.min() < 1 or d.max() > self.sigma):
            raise ValueError("symbol out of range 1..sigma")

    def __len__(self) -> int:
        return int(self.data.size)

    @property
    def sentinel(self) -> int:
        return self.sigma + 1

    def at(self, i: int) -> int:
        """Symbol at 1-based position i; sentinel outside [1, n]."""
        if 1 <= i <= len(self):
            return int(self.data[i - 1])
        return self.sentinel

    def window(self, i: int, j: int) -> np.ndarray:
        """Symbols at positions i..j inclusive, sentinel-padded out of range."""
        if j < i:
            return np.empty(0, dtype=np.int64)
        out = np.full(j - i + 1, self.sentinel, dtype=np.int64)
        lo = max(i, 1)
        hi = min(j, len(self))
        if hi >= lo:
            out[lo - i : hi - i + 1] = self.data[lo - 1 : hi]
        return out

    def gather(self, idx: np.ndarray) -> np.ndarray:
        """Symbols at an array of 1-based positions, sentinel out of range."""
        idx = np.asarray(idx, dtype=np.int64)
        out = np.full(idx.shape, self.sentinel, dtype=np.int64)
        ok = (idx >= 1) & (idx <= len(self))
        out[ok] = self.data[idx[ok] - 1]
        return out

    @classmethod
    def from_bytes(cls, raw: bytes, sigma: int) -> "ByteString":
        d = np.frombuffer(raw, dtype=np.uint8).astype(np.int64) + 1
        return cls(d, sigma)

    def to_bytes(self) -> bytes:
        return (self.data - 1).astype(np.uint8).tobytes()


def edit_distance_quadratic(a: ByteString, b: ByteString) -> int:
    """Textbook full-table edit distance. Slow referee for tests."""
    n, m = len(a), len(b)
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ai = a.at(i)
        for j in range(1, m + 1):
            cost = 0 if ai == b.at(j) else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev = cur
    return prev[m]


def _banded_ed(a: np.ndarray, b: np.ndarray, w: int) -> int:
    """Edit distance restricted to |i - j| <= w; returns a value > w iff the
    band cannot realize distance <= w.

    Rows are indexed by i; within a row, offset o in 0..2w maps to
    j = i - w + o. Vectorized over offsets with a prefix-min pass for the
    insert (left-neighbor) dependency.
    """
    n, m = a.size, b.size
    if abs(n - m) > w:
        return w + 1
    big = n + m + 1
    width = 2 * w + 1
    offs = np.arange(width, dtype=np.int64)
    # Row i = 0: dp[0][j] = j for j in 0..m.
    j0 = offs - w
    row = np.where((j0 >= 0) & (j0 <= m), np.abs(j0), big)
    for i in range(1, n + 1):
        j = i - w + offs
        valid = (j >= 0) & (j <= m)
        jc = np.clip(j, 1, max(m, 1))
        match = np.where((j >= 1) & (j <= m), b[jc - 1] == a[i - 1], False)
        diag = row + np.where(match, 0, 1)  # row[o] was dp[i-1][j-1]
        up = np.concatenate((row[1:], [big])) + 1  # dp[i-1][j] + 1
        cand = np.minimum(diag, up)
        cand = np.where(valid, cand, big)
        # Insert step: dp[i][j] <= dp[i][j-1] + 1; resolve with a running
        # minimum of cand[o] - o, then add o back.
        shifted = np.minimum.accumulate(cand - offs) + offs
        row = np.minimum(cand, shifted)
        row = np.where(valid, row, big)
        if row.min() > w:
            return w + 1
    o_final = m - n + w
    v = int(row[o_final])
    return v if v <= w else w + 1


def edit_distance_exact(a: ByteString, b: ByteString) -> int:
    """Exact edit distance via banded DP with doubling band widths."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return max(n, m)
    w = max(1, abs(n - m))
    while True:
        v = _banded_ed(a.data, b.data, w)
        if v <= w:
            return v
        if w >= max(n, m):
            return v
        w = min(2 * w, max(n, m))


def edit_distance_at_most(a: ByteString, b: ByteString, t: int) -> bool:
    """True iff edit distance <= t; certified by a width-t band."""
    if t < 0:
        return False
    if t >= max(len(a), len(b)):
        return True
    return _banded_ed(a.data, b.data, t) <= t


def exact_hwave(a: ByteString, b: ByteString, k: int) -> bool:
    """Wave formulation of the <= k decision: h[i][j] is the largest prefix
    of a alignable to a prefix of b with i edits ending on diagonal j
    (positions in b lead a by j). True iff h[k][0] >= n when |a| == |b|.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("equal lengths required")

    def slide(h: int, j: int) -> int:
        # extend the run of matches from a-position h+1, b-position h+j+1
        while h < n and 1 <= h + j + 1 <= n and a.at(h + 1) == b.at(h + j + 1):
            h += 1
        return h

    neg = -(10 * n + 10)
    prev = {0: slide(0, 0)}
    for _ in range(k):
        cur = {}
        for j in range(-k, k + 1):
            best = neg
            # sub from same diagonal, ins from j-1 (a-prefix unchanged),
            # del from j+1 (a advances without b)
            for dj, cost in ((0, 1), (-1, 0), (1, 1)):
                src = prev.get(j + dj, neg)
                if src < 0:
                    continue
                best = max(best, src + cost)
            if best < 0:
                continue
            best = min(best, n)
            cur[j] = slide(best, j) if best < n else n
        prev = cur
    return prev.get(0, neg) >= n


Op = tuple[str, int, int]  # (kind, a_pos, b_symbol_or_0)


def optimal_edit_script(a: ByteString, b: ByteString) -> list[Op]:
    """One optimal script transforming a into b.

    Ops reference positions in the original a and are ordered by descending
    position so earlier ops do not invalidate later positions:
      ("sub", i, c)  replace a[i] with c
      ("del", i, 0)  delete a[i]
      ("ins", i, c)  insert c after a[i] (i may be 0)
    """
    n, m = len(a), len(b)
    dp = np.zeros((n + 1, m + 1), dtype=np.int64)
    dp[:, 0] = np.arange(n + 1)
    dp[0, :] = np.arange(m + 1)
    cols = np.arange(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        cost = (b.data != a.at(i)).astype(np.int64)
        cand = np.minimum(dp[i - 1, 1:] + 1, dp[i - 1, :-1] + cost)
        # fold in the left-neighbor (+1 per step) dependency with a
        # running minimum of cand[j] - j
        head = np.concatenate(([dp[i, 0]], cand))
        dp[i] = np.minimum(head,
                           np.minimum.accumulate(head - cols) + cols)
    ops: list[Op] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i, j] == dp[i - 1, j - 1] + (0 if a.at(i) == b.at(j) else 1):
            if a.at(i) != b.at(j):
                ops.append(("sub", i, b.at(j)))
            i -= 1
            j -= 1
        elif i > 0 and dp[i, j] == dp[i - 1, j] + 1:
            ops.append(("del", i, 0))
            i -= 1
        else:
            ops.append(("ins", i, b.at(j)))
            j -= 1
    ops.sort(key=lambda op: op[1], reverse=True)
    return ops


def apply_script(a: ByteString, ops: list[Op]) -> ByteString:
    vals = list(a.data)
    for kind, i, c in sorted(ops, key=lambda op: op[1], reverse=True):
        if kind == "sub":
            vals[i - 1] = c
        elif kind == "del":
            del vals[i - 1]
        else:
            vals.insert(i, c)
    return ByteString(np.array(vals, dtype=np.int64), a.sigma)


def decompose(a: ByteString, b: ByteString) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Split a and b into matched interval lists induced by one optimal
    script: alternating untouched runs (equal substrings) and per-edit
    pieces. Returns (a_intervals, b_intervals) of equal length, where the
    t-th intervals correspond; intervals are (start, end) 1-based inclusive,
    end = start - 1 for an empty piece. With e edits, at most 2e + 1 pairs.
    """
    ops = optimal_edit_script(a, b)
    # Intervals over a, kept in sync with intervals over the evolving b-side
    # copy. Start with one pair covering everything, then split around each
    # edit from right to left.
    a_iv = [(1, len(a))]
    b_iv = [(1, len(a))]

    def locate(pos: int, pieces: list[tuple[int, int]], allow_empty_right: bool):
        # find the interval containing a-position pos
        for t, (s, e) in enumerate(pieces):
            if s <= pos <= e:
                return t
        raise AssertionError("position not covered")

    edited = [False]
    for kind, i, _c in ops:  # ops already sorted by descending position
        if kind == "ins":
            # insert after a-position i: split the pair whose a-interval
            # contains boundary between i and i+1; attach to the left side
            t = None
            for u, (s, e) in enumerate(a_iv):
                if s <= i <= e or (s == i + 1 and e >= s) or (s > e and s == i + 1):
                    t = u
                    break
                if e < i and (u + 1 == len(a_iv) or a_iv[u + 1][0] > i + 1):
                    t = u
                    break
            if t is None:
                t = len(a_iv) - 1
            sa, ea = a_iv[t]
            sb, eb = b_iv[t]
            off = i - sa  # chars of this a-interval kept to the left
            a_left = (sa, i)
            a_mid = (i + 1, i)  # empty on the a side
            a_right = (i + 1, ea)
            b_left = (sb, sb + off)
            b_mid = (sb + off + 1, sb + off + 1)
            b_right = (sb + off + 2, eb + 1)
            a_iv[t : t + 1] = [a_left, a_mid, a_right]
            b_iv[t : t + 1] = [b_left, b_mid, b_right]
            edited[t : t + 1] = [edited[t], True, edited[t]]
            # everything right of t on the b side shifts by +1
            for u in range(t + 3, len(b_iv)):
                s, e = b_iv[u]
                b_iv[u] = (s + 1, e + 1)
        else:
            t = locate(i, a_iv, False)
            sa, ea = a_iv[t]
            sb, eb = b_iv[t]
            off = i - sa
            a_left = (sa, i - 1)
            a_mid = (i, i)
            a_right = (i + 1, ea)
            if kind == "sub":
                b_left = (sb, sb + off - 1)
                b_mid = (sb + off, sb + off)
                b_right = (sb + off + 1, eb)
                shift = 0
            else:  # del: b-side piece is empty
                b_left = (sb, sb + off - 1)
                b_mid = (sb + off, sb + off - 1)
                b_right = (sb + off, eb - 1)
                shift = -1
            a_iv[t : t + 1] = [a_left, a_mid, a_right]
            b_iv[t : t + 1] = [b_left, b_mid, b_right]
            edited[t : t + 1] = [edited[t], True, edited[t]]
            for u in range(t + 3, len(b_iv)):
                s, e = b_iv[u]
                b_iv[u] = (s + shift, e + shift)

    # Merge away empty untouched pairs introduced by splits at run ends.
    out_a, out_b = [], []
    for t, (ia, ib) in enumerate(zip(a_iv, b_iv)):
        if not edited[t] and ia[1] < ia[0] and ib[1] < ib[0]:
            continue
        out_a.append(ia)
        out_b.append(ib)
    return out_a, out_b


def check_decomposition(a: ByteString, b: ByteString,
                        a_iv: list[tuple[int, int]], b_iv: list[tuple[int, int]]) -> bool:
    """Validate: intervals partition both strings in order, corresponding
    pieces have edit distance <= 1, and untouched pieces are equal."""
    if len(a_iv) != len(b_iv):
        return False

    def covers(iv, n):
        pos = 1
        for s, e in iv:
            if s != pos:
                return False
            if e >= s:
                pos = e + 1
        return pos == n + 1

    if not covers(a_iv, len(a)) or not covers(b_iv, len(b)):
        return False
    total = 0
    for (sa, ea), (sb, eb) in zip(a_iv, b_iv):
        pa = a.window(sa, ea) if ea >= sa else np.empty(0, dtype=np.int64)
        pb = b.window(sb, eb) if eb >= sb else np.empty(0, dtype=np.int64)
        if pa.size == pb.size and pa.size and np.array_equal(pa, pb):
            continue
        xa = ByteString(pa, max(a.sigma, b.sigma))
        xb = ByteString(pb, max(a.sigma, b.sigma))
        d = edit_distance_exact(xa, xb)
        if d > 1:
            return False
        total += d
    return total <= edit_distance_exact(a, b)


def hamming(u: np.ndarray, v: np.ndarray) -> int:
    return int(np.count_nonzero(np.asarray(u) != np.asarray(v)))


def max_k_alignment_bruteforce(a: ByteString, b: ByteString, i_b: int, k: int) -> int:
    """Largest d such that some shift c in [-k, k] gives an exact match
    B[i_b .. i_b+d-1] == A[i_b+c .. i_b+c+d-1]; 0 if none. Reads past the
    end are sentinel mismatches, so d never exceeds n - i_b + 1 on the B
    side and alignment against A never claims out-of-range characters."""
    n = len(b)
    best = 0
    max_d = n - i_b + 1
    if max_d <= 0:
        return 0
    bw = b.window(i_b, i_b + max_d - 1)
    for c in range(-k, k + 1):
        aw = a.window(i_b + c, i_b + c + max_d - 1)
        neq = np.nonzero(aw != bw)[0]
        d = max_d if neq.size == 0 else int(neq[0])
        best = max(best, d)
    return best


def max_shift_alignment_bruteforce(a: ByteString, b: ByteString, i_a: int, i_b: int,
                                   ell: int, k: int) -> int:
    """Largest d such that B[i_b .. i_b+d-1] matches A[i_a+c .. i_a+c+d-1]
    exactly for some |c| <= ell, with the additional promise-window
    constraint |i_a + c - i_b| <= k; 0 if none."""
    n = len(b)
    best = 0
    max_d = n - i_b + 1
    if max_d <= 0:
        return 0
    bw = b.window(i_b, i_b + max_d - 1)
    for c in range(-ell, ell + 1):
        if abs(i_a + c - i_b) > k:
            continue
        aw = a.window(i_a + c, i_a + c + max_d - 1)
        neq = np.nonzero(aw != bw)[0]
        d = max_d if neq.size == 0 else int(neq[0])
        best = max(best, d)
    return best


def has_approximate_alignment(a: ByteString, b: ByteString, i_b: int, d: int,
                              max_shift: int, ed_bound: int,
                              hint: int | None = None) -> bool:
    """Check the relaxed alignment guarantee behind a reported value d:
    some shift |c| <= max_shift gives edit distance <= ed_bound between
    B[i_b .. i_b+d-1] and A[i_b+c .. i_b+c+d-1]."""
    if d <= ed_bound:
        return True
    sigma = max(a.sigma, b.sigma)
    bw = ByteString(b.window(i_b, i_b + d - 1), sigma + 1)

    def ok(c: int) -> bool:
        aw = ByteString(a.window(i_b + c, i_b + c + d - 1), sigma + 1)
        return edit_distance_at_most(aw, bw, ed_bound)

    if hint is not None and abs(hint) <= max_shift and ok(hint):
        return True
    for c in range(-max_shift, max_shift + 1):
        if c == hint:
            continue
        if ok(c):
            return True
    return False
