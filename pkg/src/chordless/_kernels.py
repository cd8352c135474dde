"""Compiled inner loops for the chordless-cycle search.

The search is a depth-first expansion of chordless paths driven by an explicit
stack, so path length is bounded by ``n`` rather than the interpreter's
recursion limit. All state lives in numpy arrays owned by the caller; the
main loop can stop when its output buffer fills and resume later from the
exact same point.

Everything here is plain numba-compatible Python. Without numba (or with
``NUMBA_DISABLE_JIT=1``) the same code runs interpreted.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


# slots of the ``st`` state vector
DEPTH = 0  # current path length t; 0 means no path is active
NEXT = 1  # index of the next triplet to load
BASE = 2  # path length of the root frame
WRAP = 3  # vertex blocked around the root frame (u of the triplet), or -1
PENDING = 4  # >0: a caller-loaded path of this length awaits its first frame
KEY = 5  # label of u_2, the smallest label on the path
OUT_POS = 6
OUT_CNT = 7
STAMP = 8  # BFS generation counter
N_STATE = 9

# slots of the ``stats`` vector
VISITS = 0
RECURSIONS = 1
LONGEST = 2
HOLES = 3
COUNTERS = 4  # blocking-counter invariant violations
DEAD_ENDS = 5  # expanded frames whose subtree emitted nothing
REVISITS = 6  # candidate equal to u_1 slipped through the filter
PRUNED = 7  # frames skipped because u_t was unreachable in the BFS
N_STATS = 8

FINISHED = 0
BUFFER_FULL = 1
LIMIT_REACHED = 2


@njit(cache=True)
def is_edge(bits, a, b):
    return (bits[a, b >> 3] >> (b & 7)) & 1 == 1


@njit(cache=True)
def block_neighbors(indptr, indices, blocked, v):
    for c in range(indptr[v], indptr[v + 1]):
        blocked[indices[c]] += 1


@njit(cache=True)
def unblock_neighbors(indptr, indices, blocked, v):
    for c in range(indptr[v], indptr[v + 1]):
        w = indices[c]
        if blocked[w] > 0:
            blocked[w] -= 1


@njit(cache=True)
def pruned_bfs(indptr, indices, label, blocked, key, root, end, pi, seen, stamp, queue):
    """BFS from ``root`` over vertices that are ``root``, ``end``, or have
    ``label > key`` and ``blocked == 0``.

    Reached vertices get ``seen[w] = stamp`` and predecessor ``pi[w]``;
    ``pi[root] = root``.
    """
    seen[root] = stamp
    pi[root] = root
    queue[0] = root
    head = 0
    tail = 1
    while head < tail:
        a = queue[head]
        head += 1
        for c in range(indptr[a], indptr[a + 1]):
            w = indices[c]
            if seen[w] == stamp:
                continue
            if w != end and (label[w] <= key or blocked[w] != 0):
                continue
            seen[w] = stamp
            pi[w] = a
            queue[tail] = w
            tail += 1


@njit(cache=True)
def _enter(indptr, indices, bits, label, path, t, cursor, entry_holes, expanded,
           blocked, pi_ok, pi, seen, queue, st, stats, use_bfs, check):
    stats[RECURSIONS] += 1
    if t > stats[LONGEST]:
        stats[LONGEST] = t
    ut = path[t - 1]
    entry_holes[t - 1] = stats[HOLES]

    if check >= 2:
        # counters must equal the number of neighbors among u_2 .. u_{t-1}
        for w in range(label.shape[0]):
            cnt = 0
            for i in range(1, t - 1):
                if is_edge(bits, w, path[i]):
                    cnt += 1
            if blocked[w] != cnt:
                stats[COUNTERS] += 1
                break

    if use_bfs:
        stamp = st[STAMP] + 1
        st[STAMP] = stamp
        pruned_bfs(indptr, indices, label, blocked, st[KEY], path[0], ut, pi, seen, stamp, queue)
        if seen[ut] != stamp:
            stats[PRUNED] += 1
            expanded[t - 1] = 0
            cursor[t - 1] = indptr[ut + 1]
            return
        for c in range(indptr[ut], indptr[ut + 1]):
            pi_ok[c] = 1 if seen[indices[c]] == stamp else 0

    expanded[t - 1] = 1
    block_neighbors(indptr, indices, blocked, ut)
    cursor[t - 1] = indptr[ut]


@njit(cache=True)
def search(indptr, indices, bits, label, trip, path, cursor, entry_holes, expanded,
           blocked, pi_ok, pi, seen, queue, st, stats, out, out_len,
           use_bfs, check, emit, hole_limit):
    """Run (or resume) the search until done, the buffer fills, or the limit hits.

    Returns FINISHED, BUFFER_FULL or LIMIT_REACHED.
    """
    n = label.shape[0]
    while True:
        t = st[DEPTH]
        if t == 0:
            if st[PENDING] > 0:
                t = st[PENDING]
                st[PENDING] = 0
                st[DEPTH] = t
                _enter(indptr, indices, bits, label, path, t, cursor, entry_holes, expanded,
                       blocked, pi_ok, pi, seen, queue, st, stats, use_bfs, check)
                continue
            i = st[NEXT]
            if i >= trip.shape[0]:
                return FINISHED
            st[NEXT] = i + 1
            u = trip[i, 1]
            path[0] = trip[i, 0]
            path[1] = u
            path[2] = trip[i, 2]
            st[KEY] = label[u]
            st[BASE] = 3
            st[WRAP] = u
            st[DEPTH] = 3
            block_neighbors(indptr, indices, blocked, u)
            _enter(indptr, indices, bits, label, path, 3, cursor, entry_holes, expanded,
                   blocked, pi_ok, pi, seen, queue, st, stats, use_bfs, check)
            continue

        ut = path[t - 1]
        c = cursor[t - 1]
        if c < indptr[ut + 1]:
            if emit and (st[OUT_POS] + t + 1 > out.shape[0] or st[OUT_CNT] >= out_len.shape[0]):
                return BUFFER_FULL
            cursor[t - 1] = c + 1
            stats[VISITS] += 1
            v = indices[c]
            if label[v] <= st[KEY] or blocked[v] != 1:
                continue
            if use_bfs and pi_ok[c] == 0:
                continue
            if check and v == path[0]:
                stats[REVISITS] += 1
                continue
            if is_edge(bits, v, path[0]):
                stats[HOLES] += 1
                if t + 1 > stats[LONGEST]:
                    stats[LONGEST] = t + 1
                if emit:
                    pos = st[OUT_POS]
                    for j in range(t):
                        out[pos + j] = path[j]
                    out[pos + t] = v
                    st[OUT_POS] = pos + t + 1
                    out_len[st[OUT_CNT]] = t + 1
                    st[OUT_CNT] += 1
                if hole_limit >= 0 and stats[HOLES] >= hole_limit:
                    return LIMIT_REACHED
            else:
                path[t] = v
                t += 1
                st[DEPTH] = t
                _enter(indptr, indices, bits, label, path, t, cursor, entry_holes, expanded,
                       blocked, pi_ok, pi, seen, queue, st, stats, use_bfs, check)
        else:
            if expanded[t - 1]:
                unblock_neighbors(indptr, indices, blocked, ut)
                if stats[HOLES] == entry_holes[t - 1]:
                    stats[DEAD_ENDS] += 1
            t -= 1
            if t < st[BASE]:
                if st[WRAP] >= 0:
                    unblock_neighbors(indptr, indices, blocked, st[WRAP])
                    if check:
                        for w in range(n):
                            if blocked[w] != 0:
                                stats[COUNTERS] += 1
                                break
                t = 0
            st[DEPTH] = t


def new_state():
    return np.zeros(N_STATE, dtype=np.int64)


def new_stats():
    return np.zeros(N_STATS, dtype=np.int64)
