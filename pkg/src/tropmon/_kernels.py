"""Compiled inner loops for monoid enumeration.

Elements are rows of base-``b`` digits (row-major, ``b`` = carrier size).
Products go through precomputed ``add``/``mul`` tables on digits, so one
kernel serves every finite semiring. Keys map to element indices either
through a dense table indexed by key or an open-addressing hash table.
"""

import numpy as np
from numba import njit

DONE = 0
GROW = 1  # element arrays full
REHASH = 2  # hash table too loaded
LIMIT = 3  # element limit reached
FOUND = 4  # stop key discovered

_MIX = np.uint64(0x9E3779B97F4A7C15)


@njit(cache=True, inline="always")
def _slot(key, mask):
    h = np.uint64(key) * _MIX
    h ^= h >> np.uint64(31)
    return np.int64(h & np.uint64(mask))


@njit(cache=True)
def table_find(dense, tkeys, tvals, key):
    if dense:
        return tvals[key]
    mask = tkeys.shape[0] - 1
    s = _slot(key, mask)
    while True:
        k = tkeys[s]
        if k == key:
            return tvals[s]
        if k < 0:
            return -1
        s = (s + 1) & mask


@njit(cache=True)
def table_insert(dense, tkeys, tvals, key, idx):
    if dense:
        tvals[key] = idx
        return
    mask = tkeys.shape[0] - 1
    s = _slot(key, mask)
    while tkeys[s] >= 0:
        s = (s + 1) & mask
    tkeys[s] = key
    tvals[s] = idx


@njit(cache=True)
def rehash(keys, count, tkeys, tvals):
    tkeys[:] = -1
    for i in range(count):
        table_insert(False, tkeys, tvals, keys[i], i)


@njit(cache=True)
def find_many(dense, tkeys, tvals, query):
    out = np.empty(query.shape[0], np.int32)
    for i in range(query.shape[0]):
        out[i] = table_find(dense, tkeys, tvals, query[i])
    return out


@njit(cache=True)
def run(digits, keys, parent, letter, cayley, store_cayley, count, pos, old_count, gen_from,
        dense, tkeys, tvals, gens, add_tab, mul_tab, n, base, zero, limit, stop_key):
    """Right-multiply elements ``pos..`` by every generator until closed.

    Elements below ``old_count`` only need generators from ``gen_from`` on
    (they are already closed under the earlier ones). Returns
    ``(pos, count, status)``; on GROW/REHASH/LIMIT the caller may fix the
    storage and call again with the returned ``pos`` and ``count``.
    """
    ngens = gens.shape[0]
    nn = n * n
    cap = keys.shape[0]
    tmp = np.empty(nn, np.uint8)
    while pos < count:
        g0 = gen_from if pos < old_count else 0
        for g in range(g0, ngens):
            key = np.int64(0)
            mult = np.int64(1)
            for r in range(n):
                for c in range(n):
                    acc = zero
                    for m in range(n):
                        acc = add_tab[acc, mul_tab[digits[pos, r * n + m], gens[g, m * n + c]]]
                    tmp[r * n + c] = acc
                    key += np.int64(acc) * mult
                    mult *= base
            idx = table_find(dense, tkeys, tvals, key)
            if idx < 0:
                if count >= limit:
                    return pos, count, LIMIT
                if count >= cap:
                    return pos, count, GROW
                if not dense and 2 * (count + 1) > tkeys.shape[0]:
                    return pos, count, REHASH
                idx = count
                table_insert(dense, tkeys, tvals, key, idx)
                for q in range(nn):
                    digits[idx, q] = tmp[q]
                keys[idx] = key
                parent[idx] = pos
                letter[idx] = g
                count += 1
                if key == stop_key:
                    if store_cayley:
                        cayley[pos, g] = idx
                    return pos, count, FOUND
            if store_cayley:
                cayley[pos, g] = idx
        pos += 1
    return pos, count, DONE
