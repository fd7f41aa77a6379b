# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels for graphs of at most 64 vertices.

Same contracts as ``_kernels_py``; adjacency rows are packed into uint64.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXV = 64

MAX_VERTICES = MAXV


cdef inline int lowbit(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int i) noexcept nogil:
    return (<uint64_t>1) << i


cdef int _load(rows, uint64_t* out) except -1:
    cdef int n = len(rows)
    if n > MAXV:
        raise ValueError(f"compiled kernels handle at most {MAXV} vertices, got {n}")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return n


# ---------------------------------------------------------------- holes

cdef struct HoleState:
    uint64_t rows[MAXV]
    int path[MAXV]
    int best[MAXV]
    int best_len
    int min_len
    int odd_only
    long long nodes
    uint64_t nbr_s
    uint64_t higher


cdef inline bint _acceptable(HoleState* st, int length) noexcept nogil:
    return (length >= st.min_len and length < st.best_len
            and ((length & 1) or not st.odd_only))


cdef void _extend(HoleState* st, int m, uint64_t blocked) noexcept nogil:
    # path[0..m-1] holds the current induced path; m >= 2
    cdef int tail = st.path[m - 1]
    cdef uint64_t cands = st.rows[tail] & st.higher & ~blocked
    cdef uint64_t nblocked = blocked | st.rows[tail] | bit(tail)
    cdef int w, i
    st.nodes += 1
    while cands:
        w = lowbit(cands)
        cands &= cands - 1
        if st.nbr_s & bit(w):
            if w > st.path[1] and _acceptable(st, m + 1):
                for i in range(m):
                    st.best[i] = st.path[i]
                st.best[m] = w
                st.best_len = m + 1
        elif m + 2 < st.best_len:
            st.path[m] = w
            _extend(st, m + 1, nblocked)


def find_hole(rows, int min_len, int max_len, bint odd_only):
    cdef HoleState st
    cdef int n = _load(rows, st.rows)
    cdef int s, v
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else bit(n) - 1
    cdef uint64_t todo
    st.best_len = max_len + 1
    st.min_len = min_len
    st.odd_only = odd_only
    st.nodes = 0
    with nogil:
        for s in range(n):
            if n - s < min_len or st.best_len <= min_len:
                break
            st.higher = full & ~((bit(s) << 1) - 1) if s < 63 else 0
            st.nbr_s = st.rows[s] & st.higher
            st.path[0] = s
            todo = st.nbr_s
            while todo:
                v = lowbit(todo)
                todo &= todo - 1
                st.path[1] = v
                _extend(&st, 2, 0)
    if st.best_len > max_len:
        return None, st.nodes
    return [st.best[i] for i in range(st.best_len)], st.nodes


# --------------------------------------------------------------- clique

cdef struct CliqueState:
    uint64_t rows[MAXV]
    int r[MAXV]
    int best[MAXV]
    int best_size
    long long nodes


cdef void _expand(CliqueState* st, int depth, uint64_t p) noexcept nogil:
    cdef int order[MAXV]
    cdef int bounds[MAXV]
    cdef int cnt = 0
    cdef int color = 0
    cdef int idx, v, i
    cdef uint64_t q, rest = p, newp
    st.nodes += 1
    while rest:
        color += 1
        q = rest
        while q:
            v = lowbit(q)
            q &= ~st.rows[v] & ~bit(v)
            rest &= ~bit(v)
            order[cnt] = v
            bounds[cnt] = color
            cnt += 1
    for idx in range(cnt - 1, -1, -1):
        if depth + bounds[idx] <= st.best_size:
            return
        v = order[idx]
        st.r[depth] = v
        newp = p & st.rows[v]
        if newp:
            _expand(st, depth + 1, newp)
        elif depth + 1 > st.best_size:
            for i in range(depth + 1):
                st.best[i] = st.r[i]
            st.best_size = depth + 1
        p &= ~bit(v)


def max_clique(rows):
    cdef CliqueState st
    cdef int n = _load(rows, st.rows)
    st.best_size = 0
    st.nodes = 0
    if n:
        with nogil:
            _expand(&st, 0, (~(<uint64_t>0)) if n == 64 else bit(n) - 1)
    return sorted(st.best[i] for i in range(st.best_size)), st.nodes


# ------------------------------------------------------------- coloring

cdef struct ColorState:
    uint64_t rows[MAXV]
    uint64_t avail[MAXV]
    int colors[MAXV]
    int n
    int k
    long long nodes


cdef bint _assign(ColorState* st, int i, int used) noexcept nogil:
    cdef uint64_t allowed, later, b, touched, t
    cdef int c, u, lim
    cdef bint dead
    st.nodes += 1
    if i == st.n:
        return True
    lim = used + 1 if used + 1 < st.k else st.k
    allowed = st.avail[i] & ((bit(lim) - 1) if lim < 64 else ~(<uint64_t>0))
    later = (st.rows[i] >> (i + 1) << (i + 1)) if i < 63 else 0
    while allowed:
        c = lowbit(allowed)
        allowed &= allowed - 1
        b = bit(c)
        touched = 0
        dead = False
        t = later
        while t:
            u = lowbit(t)
            t &= t - 1
            if st.avail[u] & b:
                st.avail[u] ^= b
                touched |= bit(u)
                if not st.avail[u]:
                    dead = True
                    break
        if not dead:
            st.colors[i] = c
            if _assign(st, i + 1, used if used > c + 1 else c + 1):
                return True
            st.colors[i] = -1
        while touched:
            u = lowbit(touched)
            touched &= touched - 1
            st.avail[u] |= b
    return False


def color(rows, int k):
    cdef ColorState st
    cdef int n = _load(rows, st.rows)
    cdef bint ok
    if n == 0:
        return [], 1
    if k <= 0:
        return None, 1
    if k > MAXV:
        k = MAXV
    st.n = n
    st.k = k
    st.nodes = 0
    for i in range(n):
        st.avail[i] = (bit(k) - 1) if k < 64 else ~(<uint64_t>0)
        st.colors[i] = -1
    with nogil:
        ok = _assign(&st, 0, 0)
    if not ok:
        return None, st.nodes
    return [st.colors[i] for i in range(n)], st.nodes
