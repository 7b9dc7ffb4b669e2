"""Compiled exact-cover kernel (numba); same search as the pure-Python version."""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True)
def _pop(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


@njit(cache=True)
def _search(holders, clash, opt_items, n_items, n_opts, out):
    """Write solutions (option ids, -1 padded) into ``out``; return the count.

    If ``out`` fills up, the count keeps growing so the caller can retry.
    """
    ow = holders.shape[1]
    iw = opt_items.shape[1]
    depth = n_items + 1
    live = np.zeros((depth, ow), np.uint64)
    unc = np.zeros((depth, iw), np.uint64)
    cand = np.zeros((depth, n_opts), np.int32)
    ncand = np.zeros(depth, np.int32)
    pos = np.zeros(depth, np.int32)
    chosen = np.zeros(depth, np.int32)
    one = np.uint64(1)
    for j in range(n_opts):
        live[0, j >> 6] |= one << np.uint64(j & 63)
    for i in range(n_items):
        unc[0, i >> 6] |= one << np.uint64(i & 63)
    found = 0
    level = 0
    expand = True
    while level >= 0:
        if expand:
            expand = False
            best = -1
            best_n = n_opts + 1
            for w in range(iw):
                word = unc[level, w]
                while word:
                    low = word & (~word + one)
                    word ^= low
                    i = w * 64 + int(_pop(low - one))
                    n = 0
                    for t in range(ow):
                        n += int(_pop(live[level, t] & holders[i, t]))
                    if n < best_n:
                        best, best_n = i, n
                        if n == 0:
                            break
                if best_n == 0:
                    break
            if best < 0:
                if found < out.shape[0]:
                    for t in range(level):
                        out[found, t] = chosen[t]
                found += 1
                level -= 1
                continue
            if best_n == 0:
                level -= 1
                continue
            c = 0
            for t in range(ow):
                word = live[level, t] & holders[best, t]
                while word:
                    low = word & (~word + one)
                    word ^= low
                    cand[level, c] = t * 64 + int(_pop(low - one))
                    c += 1
            ncand[level] = c
            pos[level] = 0
        if pos[level] < ncand[level]:
            j = cand[level, pos[level]]
            pos[level] += 1
            chosen[level] = j
            for t in range(ow):
                live[level + 1, t] = live[level, t] & ~clash[j, t]
            for t in range(iw):
                unc[level + 1, t] = unc[level, t] & ~opt_items[j, t]
            level += 1
            expand = True
        else:
            level -= 1
    return found


def _pack(bits_list, n_bits):
    words = (n_bits + 63) // 64
    arr = np.zeros((len(bits_list), max(words, 1)), np.uint64)
    mask = (1 << 64) - 1
    for r, x in enumerate(bits_list):
        for w in range(words):
            arr[r, w] = (x >> (64 * w)) & mask
    return arr


def exact_covers_compiled(n_items, holders, clash, opt_items):
    """Inputs are the int bitsets built by ``designs.exact_covers``."""
    n_opts = len(opt_items)
    h = _pack(holders, n_opts)
    c = _pack(clash, n_opts)
    o = _pack(opt_items, n_items)
    cap = 4096
    while True:
        out = np.full((cap, max(n_items, 1)), -1, np.int32)
        found = _search(h, c, o, n_items, n_opts, out)
        if found <= cap:
            return [sorted(int(x) for x in row if x >= 0) for row in out[:found]]
        cap = found
