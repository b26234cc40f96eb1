# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled twin of cornergap._matching: the same sweep, carried modulo several primes at once."""

from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref


cdef inline size_t _slot(unordered_map[uint64_t, size_t]& index, vector[uint64_t]& vals,
                         uint64_t key, size_t width):
    cdef unordered_map[uint64_t, size_t].iterator it = index.find(key)
    cdef size_t s
    if it != index.end():
        return deref(it).second
    s = index.size()
    index[key] = s
    vals.resize(vals.size() + width, 0)
    return s


cdef vector[uint64_t] _sweep(vector[vector[int]]& forward, vector[uint64_t]& primes):
    cdef size_t width = primes.size()
    cdef unordered_map[uint64_t, size_t] cur_index, nxt_index
    cdef vector[uint64_t] cur_vals, nxt_vals, out
    cdef vector[uint64_t] cur_keys, nxt_keys
    cdef uint64_t mask, key, bit
    cdef size_t v, t, s, src, dst, r
    cdef int off

    cur_keys.push_back(0)
    for r in range(width):
        cur_vals.push_back(1)

    for v in range(forward.size()):
        nxt_index.clear()
        nxt_vals.clear()
        for s in range(cur_keys.size()):
            mask = cur_keys[s]
            src = s * width
            if mask & 1:
                dst = _slot(nxt_index, nxt_vals, mask >> 1, width) * width
                for r in range(width):
                    nxt_vals[dst + r] = (nxt_vals[dst + r] + cur_vals[src + r]) % primes[r]
            else:
                for t in range(forward[v].size()):
                    off = forward[v][t]
                    bit = (<uint64_t>1) << off
                    if not (mask & bit):
                        dst = _slot(nxt_index, nxt_vals, (mask | bit) >> 1, width) * width
                        for r in range(width):
                            nxt_vals[dst + r] = (nxt_vals[dst + r] + cur_vals[src + r]) % primes[r]
        nxt_keys.assign(nxt_index.size(), 0)
        for kv in nxt_index:
            nxt_keys[kv.second] = kv.first
        cur_keys.swap(nxt_keys)
        cur_vals.swap(nxt_vals)
        if cur_keys.empty():
            break

    out.assign(width, 0)
    for s in range(cur_keys.size()):
        if cur_keys[s] == 0:
            for r in range(width):
                out[r] = cur_vals[s * width + r]
    return out


def count_mod(forward, primes):
    """Perfect-matching count modulo each prime (all < 2**62); offsets must lie in 1..63."""
    cdef vector[vector[int]] fw
    cdef vector[int] row
    cdef vector[uint64_t] ps
    for p in primes:
        if p <= 1 or p >= (1 << 62):
            raise ValueError("moduli must lie in 2..2**62-1")
        ps.push_back(p)
    for offsets in forward:
        row.clear()
        for off in offsets:
            if off <= 0 or off >= 64:
                raise ValueError("forward offsets must lie in 1..63")
            row.push_back(off)
        fw.push_back(row)
    return list(_sweep(fw, ps))
