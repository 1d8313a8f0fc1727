"""Modular arithmetic mod the Mersenne prime 2^61 - 1.

Scalar paths use plain Python integers (arbitrary precision makes the
straightforward expressions exact). The vector paths split 64-bit operands
into 32-bit halves so products never overflow numpy's uint64.
"""

from __future__ import annotations

import numpy as np

P61 = (1 << 61) - 1

_MASK32 = np.uint64(0xFFFFFFFF)
_MASK29 = np.uint64((1 << 29) - 1)
_MASK61 = np.uint64(P61)


def mulmod(a: int, b: int) -> int:
    return (a * b) % P61


def _fold61(v: np.ndarray) -> np.ndarray:
    # v < 2^63; one fold brings it under 2^62, a conditional subtract finishes.
    v = (v >> np.uint64(61)) + (v & _MASK61)
    v = (v >> np.uint64(61)) + (v & _MASK61)
    return np.where(v >= _MASK61, v - _MASK61, v)


def mulmod_vec(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise (a * b) mod (2^61 - 1) for uint64 arrays with values < p."""
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    ah = a >> np.uint64(32)
    al = a & _MASK32
    bh = b >> np.uint64(32)
    bl = b & _MASK32
    # a*b = ah*bh*2^64 + (ah*bl + al*bh)*2^32 + al*bl, with 2^64 = 8 (mod p).
    hi = ah * bh  # < 2^58
    mid = ah * bl + al * bh  # < 2^62
    lo = al * bl  # < 2^64
    mid_hi = mid >> np.uint64(29)  # mid = mid_hi*2^29 + mid_lo; mid*2^32 = mid_hi*2^61 + mid_lo*2^32
    mid_lo = mid & _MASK29
    acc = (hi << np.uint64(3)) + mid_hi + (mid_lo << np.uint64(32))
    acc = _fold61(acc)
    lo = _fold61(lo)
    return _fold61(acc + lo)


def submod_vec(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    return np.where(a >= b, a - b, a + _MASK61 - b)
