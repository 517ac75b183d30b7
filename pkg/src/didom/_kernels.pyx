# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled branch-and-bound kernels for word-sized instances.

Mirrors didom._bnb_py: same branching rules, same tie-breaking, identical
optima and witnesses.  Handles at most 64 universe bits and 64 sets; the
dispatcher in didom.kernels routes wider instances to the pure backend.
"""

from libc.stdint cimport uint64_t

from time import monotonic

from didom.errors import SolveTimeout

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZ64(x)    __builtin_ctzll((unsigned long long)(x))
    """
    int POPCNT64(uint64_t x) nogil
    int CTZ64(uint64_t x) nogil

DEF POLL = 4096
DEF MAXN = 64

cdef uint64_t ONE = 1


# ---------------------------------------------------------------------------
# Minimum set cover
# ---------------------------------------------------------------------------

cdef struct CoverState:
    uint64_t masks[MAXN]
    uint64_t covers[MAXN]      # element -> bitmask over set indices
    uint64_t conflict[MAXN]    # element -> union of sets containing it
    int n_sets
    int best_size
    uint64_t best_mask         # chosen sets as an index bitmask
    long ticks
    double deadline            # negative: none
    bint timed_out


cdef int _cover_dfs(CoverState* st, uint64_t uncovered, uint64_t avail,
                    uint64_t chosen, int count):
    cdef uint64_t rem, low, cand, lc, live_mask, dropped, ci, cj, excl, cov_e
    cdef uint64_t cov[MAXN]
    cdef int e, i, j, cnt, last, forced, branch_cnt, branch_e, max_cov
    cdef int lb, simple, n_cand, a, b, tmp
    cdef int cand_idx[MAXN]

    st.ticks += 1
    if st.ticks % POLL == 0 and st.deadline >= 0 and monotonic() > st.deadline:
        st.timed_out = True
        return -1

    live_mask = 0
    branch_e = -1
    while True:
        if uncovered == 0:
            if count < st.best_size:
                st.best_size = count
                st.best_mask = chosen
            return 0
        forced = -1
        branch_cnt = st.n_sets + 1
        branch_e = -1
        rem = uncovered
        while rem:
            low = rem & (0 - rem)
            rem ^= low
            e = CTZ64(low)
            cand = st.covers[e] & avail
            cnt = 0
            last = -1
            while cand:
                lc = cand & (0 - cand)
                cand ^= lc
                i = CTZ64(lc)
                if st.masks[i] & uncovered:
                    cnt += 1
                    last = i
                    if cnt >= 2 and cnt >= branch_cnt:
                        break
            if cnt == 0:
                return 0
            if cnt == 1:
                forced = last
                break
            if cnt < branch_cnt:
                branch_cnt = cnt
                branch_e = e
        if forced >= 0:
            chosen |= ONE << forced
            count += 1
            uncovered &= ~st.masks[forced]
            avail &= ~(ONE << forced)
            if count >= st.best_size:
                return 0
            continue
        # subsumption over live coverages; ties keep the lower index
        live_mask = 0
        rem = avail
        while rem:
            low = rem & (0 - rem)
            rem ^= low
            i = CTZ64(low)
            ci = st.masks[i] & uncovered
            if ci:
                cov[i] = ci
                live_mask |= low
        dropped = 0
        max_cov = 0
        rem = live_mask
        while rem:
            low = rem & (0 - rem)
            rem ^= low
            i = CTZ64(low)
            ci = cov[i]
            cand = live_mask & ~low
            last = 0
            while cand:
                lc = cand & (0 - cand)
                cand ^= lc
                j = CTZ64(lc)
                cj = cov[j]
                if (ci & ~cj) == 0 and (ci != cj or j < i):
                    dropped |= low
                    last = 1
                    break
            if last == 0:
                cnt = POPCNT64(ci)
                if cnt > max_cov:
                    max_cov = cnt
        if dropped:
            avail &= ~dropped
            continue
        break
    # conflict (packing) and count/max-size lower bounds
    lb = 0
    rem = uncovered
    while rem:
        low = rem & (0 - rem)
        e = CTZ64(low)
        lb += 1
        rem &= ~st.conflict[e]
    simple = (POPCNT64(uncovered) + max_cov - 1) / max_cov
    if simple > lb:
        lb = simple
    if count + lb >= st.best_size:
        return 0
    # candidates covering branch_e, sorted by coverage desc then index asc
    n_cand = 0
    rem = st.covers[branch_e] & live_mask
    while rem:
        low = rem & (0 - rem)
        rem ^= low
        cand_idx[n_cand] = CTZ64(low)
        n_cand += 1
    for a in range(1, n_cand):
        tmp = cand_idx[a]
        b = a - 1
        while b >= 0 and (
            POPCNT64(cov[cand_idx[b]]) < POPCNT64(cov[tmp])
            or (POPCNT64(cov[cand_idx[b]]) == POPCNT64(cov[tmp]) and cand_idx[b] > tmp)
        ):
            cand_idx[b + 1] = cand_idx[b]
            b -= 1
        cand_idx[b + 1] = tmp
    excl = 0
    for a in range(n_cand):
        i = cand_idx[a]
        excl |= ONE << i
        if count + 1 < st.best_size:
            if _cover_dfs(st, uncovered & ~st.masks[i], avail & ~excl,
                          chosen | (ONE << i), count + 1) < 0:
                return -1
    return 0


def min_set_cover(masks, universe, deadline=None):
    """Word-sized twin of didom._bnb_py.min_set_cover."""
    cdef CoverState st
    cdef uint64_t uni
    cdef uint64_t union_all = 0, m, rem, low, cov_bits, conf, uncovered, best_greedy
    cdef int n_sets = len(masks)
    cdef int i, e, best_i, best_c, c, greedy_size
    if n_sets > MAXN or universe >> MAXN:
        raise ValueError("compiled kernel limited to 64 bits / 64 sets")
    uni = <uint64_t> universe
    if uni == 0:
        return 0, ()
    for i in range(n_sets):
        m = <uint64_t> masks[i]
        st.masks[i] = m & uni
        union_all |= st.masks[i]
    if uni & ~union_all:
        return None
    st.n_sets = n_sets
    rem = uni
    while rem:
        low = rem & (0 - rem)
        rem ^= low
        e = CTZ64(low)
        cov_bits = 0
        conf = 0
        for i in range(n_sets):
            if st.masks[i] >> e & 1:
                cov_bits |= ONE << i
                conf |= st.masks[i]
        st.covers[e] = cov_bits
        st.conflict[e] = conf
    # greedy incumbent: max new coverage, tie lowest index
    uncovered = uni
    best_greedy = 0
    greedy_size = 0
    while uncovered:
        best_i = -1
        best_c = 0
        for i in range(n_sets):
            c = POPCNT64(st.masks[i] & uncovered)
            if c > best_c:
                best_c = c
                best_i = i
        best_greedy |= ONE << best_i
        greedy_size += 1
        uncovered &= ~st.masks[best_i]
    st.best_size = greedy_size
    st.best_mask = best_greedy
    st.ticks = 0
    st.deadline = -1.0 if deadline is None else <double> deadline
    st.timed_out = False
    _cover_dfs(&st, uni, (ONE << n_sets) - 1 if n_sets < 64 else ~(<uint64_t> 0), 0, 0)
    if st.timed_out:
        raise SolveTimeout("solve exceeded its deadline")
    chosen = []
    rem = st.best_mask
    while rem:
        low = rem & (0 - rem)
        rem ^= low
        chosen.append(CTZ64(low))
    return st.best_size, tuple(chosen)


# ---------------------------------------------------------------------------
# Maximum independent set
# ---------------------------------------------------------------------------

cdef struct MisState:
    uint64_t adj[MAXN]
    uint64_t closed[MAXN]
    int n
    int best_size
    uint64_t best_mask
    long ticks
    double deadline
    bint timed_out


cdef int _clique_cover_bound(MisState* st, uint64_t avail):
    cdef uint64_t rem = avail, low, clique, cand, lu
    cdef int cnt = 0
    while rem:
        low = rem & (0 - rem)
        clique = low
        cand = rem & st.adj[CTZ64(low)]
        while cand:
            lu = cand & (0 - cand)
            clique |= lu
            cand &= st.adj[CTZ64(lu)]
        rem &= ~clique
        cnt += 1
    return cnt


cdef int _mis_dfs(MisState* st, uint64_t avail, int size, uint64_t mask):
    cdef uint64_t rem, low
    cdef int v, d, best_v, best_d, changed

    st.ticks += 1
    if st.ticks % POLL == 0 and st.deadline >= 0 and monotonic() > st.deadline:
        st.timed_out = True
        return -1

    while True:
        changed = 0
        rem = avail
        while rem:
            low = rem & (0 - rem)
            rem ^= low
            v = CTZ64(low)
            if POPCNT64(st.adj[v] & avail) <= 1:
                avail &= ~st.closed[v]
                size += 1
                mask |= low
                changed = 1
                break
        if changed == 0:
            break
    if avail == 0:
        if size > st.best_size:
            st.best_size = size
            st.best_mask = mask
        return 0
    if size + _clique_cover_bound(st, avail) <= st.best_size:
        return 0
    best_v = -1
    best_d = -1
    rem = avail
    while rem:
        low = rem & (0 - rem)
        rem ^= low
        v = CTZ64(low)
        d = POPCNT64(st.adj[v] & avail)
        if d > best_d:
            best_d = d
            best_v = v
    if _mis_dfs(st, avail & ~st.closed[best_v], size + 1, mask | (ONE << best_v)) < 0:
        return -1
    return _mis_dfs(st, avail & ~(ONE << best_v), size, mask)


def max_independent_set(adj, n, deadline=None):
    """Word-sized twin of didom._bnb_py.max_independent_set."""
    cdef MisState st
    cdef uint64_t avail, g_mask, rem, low, full
    cdef int cn = n
    cdef int v, d, best_v, best_d, g_size
    if cn > MAXN:
        raise ValueError("compiled kernel limited to 64 vertices")
    if cn == 0:
        return 0, 0
    for v in range(cn):
        st.adj[v] = <uint64_t> adj[v]
        st.closed[v] = st.adj[v] | (ONE << v)
    st.n = cn
    full = (ONE << cn) - 1 if cn < 64 else ~(<uint64_t> 0)
    # greedy incumbent: repeatedly take a minimum-degree vertex
    avail = full
    g_mask = 0
    g_size = 0
    while avail:
        best_v = -1
        best_d = cn + 1
        rem = avail
        while rem:
            low = rem & (0 - rem)
            rem ^= low
            v = CTZ64(low)
            d = POPCNT64(st.adj[v] & avail)
            if d < best_d:
                best_d = d
                best_v = v
        g_mask |= ONE << best_v
        g_size += 1
        avail &= ~st.closed[best_v]
    st.best_size = g_size
    st.best_mask = g_mask
    st.ticks = 0
    st.deadline = -1.0 if deadline is None else <double> deadline
    st.timed_out = False
    _mis_dfs(&st, full, 0, 0)
    if st.timed_out:
        raise SolveTimeout("solve exceeded its deadline")
    return st.best_size, int(st.best_mask)
