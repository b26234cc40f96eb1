"""Pure-Python perfect-matching counter over a linear vertex order.

Vertices are numbered 0..N-1 and each edge is stored once, as a forward
offset from its smaller endpoint.  The sweep keeps, for every partial
matching of the vertices already passed, the set of later vertices that are
already covered (bit 0 = the current vertex).  Counts with the same covered
set are merged, which is what keeps the state space small on lattice
regions: the frontier is about one row wide.
"""

from __future__ import annotations


def count_by_sweep(forward: list[tuple[int, ...]]) -> int:
    states = {0: 1}
    for offsets in forward:
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, cnt in states.items():
            if mask & 1:
                key = mask >> 1
                nxt[key] = get(key, 0) + cnt
                continue
            for off in offsets:
                bit = 1 << off
                if not mask & bit:
                    key = (mask | bit) >> 1
                    nxt[key] = get(key, 0) + cnt
        states = nxt
        if not states:
            return 0
    return states.get(0, 0)
