# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: ordered-pair progression scan and branch-and-bound.

Mirrors capkit._kernels_py exactly (same branching order, same node
accounting); the pure module is the reference twin.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


def scan_pairs(long long[::1] members, int m, int n, int k,
               const unsigned char[::1] bitset,
               Py_ssize_t start, Py_ssize_t stop):
    """See capkit._kernels_py.scan_pairs; membership must be a dense bitset."""
    cdef Py_ssize_t nm = members.shape[0]
    if stop > nm:
        stop = nm
    if start < 0 or n <= 0 or n > 64 or k < 3 or k > 64:
        raise ValueError("scan_pairs: bad arguments")

    cdef int* digs = <int*> malloc(nm * n * sizeof(int))
    cdef long long* pw = <long long*> malloc(n * sizeof(long long))
    if digs == NULL or pw == NULL:
        free(digs); free(pw)
        raise MemoryError()

    cdef Py_ssize_t i, ia, ib
    cdef int j, t, dup_i, dup_j
    cdef long long x, e, a_idx
    cdef long long pairs = 0
    cdef Py_ssize_t found_a = -1, found_b = -1
    cdef int* da
    cdef int* db
    cdef int diff_j, cur_j
    cdef int ok
    cdef long long tenc[64]
    cdef int cur[64]

    with nogil:
        pw[0] = 1
        for j in range(1, n):
            pw[j] = pw[j - 1] * m
        for i in range(nm):
            x = members[i]
            for j in range(n):
                digs[i * n + j] = <int> (x % m)
                x //= m

        for ia in range(start, stop):
            a_idx = members[ia]
            da = digs + ia * n
            for ib in range(nm):
                if ib == ia:
                    continue
                pairs += 1
                db = digs + ib * n
                tenc[0] = a_idx
                tenc[1] = members[ib]
                for j in range(n):
                    cur[j] = db[j]
                ok = 1
                for t in range(2, k):
                    e = 0
                    for j in range(n):
                        diff_j = db[j] - da[j]
                        if diff_j < 0:
                            diff_j += m
                        cur_j = cur[j] + diff_j
                        if cur_j >= m:
                            cur_j -= m
                        cur[j] = cur_j
                        e += cur_j * pw[j]
                    if not (bitset[e >> 3] >> (e & 7)) & 1:
                        ok = 0
                        break
                    tenc[t] = e
                if ok:
                    # proper iff all k encodings distinct
                    for dup_i in range(k):
                        for dup_j in range(dup_i + 1, k):
                            if tenc[dup_i] == tenc[dup_j]:
                                ok = 0
                                break
                        if not ok:
                            break
                if ok:
                    found_a = ia
                    found_b = ib
                    break
            if found_a >= 0:
                break

    free(digs)
    free(pw)
    return found_a, found_b, pairs


cdef struct BBState:
    unsigned long long* comp      # N*N*W completion masks
    unsigned long long* stack     # (N+2)*W candidate scratch
    int* chosen
    int n_chosen
    int N
    int W
    int best_size
    int* best_set
    int best_len
    long long nodes
    double deadline
    int timed_out


cdef void _bb_dfs(BBState* st, int depth) noexcept nogil:
    cdef unsigned long long* cand = st.stack + depth * st.W
    cdef unsigned long long* child = st.stack + (depth + 1) * st.W
    cdef int W = st.W
    cdef int w, x, c, pc
    cdef unsigned long long forb, word
    while True:
        st.nodes += 1
        if st.timed_out:
            return
        if (st.nodes & 0xFFF) == 0 and _now() > st.deadline:
            st.timed_out = 1
            return
        pc = 0
        for w in range(W):
            pc += __builtin_popcountll(cand[w])
        if st.n_chosen + pc <= st.best_size:
            return
        if pc == 0:
            st.best_size = st.n_chosen
            st.best_len = st.n_chosen
            memcpy(st.best_set, st.chosen, st.n_chosen * sizeof(int))
            return
        x = -1
        for w in range(W):
            if cand[w]:
                x = w * 64 + __builtin_ctzll(cand[w])
                break
        # include x
        for w in range(W):
            forb = 0
            for c in range(st.n_chosen):
                forb |= st.comp[(<long long> st.chosen[c] * st.N + x) * W + w]
            child[w] = cand[w] & ~forb
        child[x >> 6] &= ~((<unsigned long long> 1) << (x & 63))
        st.chosen[st.n_chosen] = x
        st.n_chosen += 1
        _bb_dfs(st, depth + 1)
        st.n_chosen -= 1
        if st.timed_out:
            return
        # exclude x and continue at this depth
        cand[x >> 6] &= ~((<unsigned long long> 1) << (x & 63))


def bb_run(unsigned long long[::1] comp, int n_points, int w_words,
           init_chosen, unsigned long long[::1] init_cand,
           double budget_s, int best_init):
    """See capkit._kernels_py.bb_run; comp is packed as N*N*W uint64 words."""
    cdef BBState st
    cdef int i
    cdef list init_list = list(init_chosen)
    cdef int n_init = len(init_list)

    st.N = n_points
    st.W = w_words
    st.comp = &comp[0]
    st.stack = <unsigned long long*> malloc((n_points + 2) * w_words * sizeof(unsigned long long))
    st.chosen = <int*> malloc((n_points + n_init + 1) * sizeof(int))
    st.best_set = <int*> malloc((n_points + n_init + 1) * sizeof(int))
    if st.stack == NULL or st.chosen == NULL or st.best_set == NULL:
        free(st.stack); free(st.chosen); free(st.best_set)
        raise MemoryError()
    for i in range(n_init):
        st.chosen[i] = init_list[i]
    st.n_chosen = n_init
    st.best_size = best_init
    st.best_len = -1
    st.nodes = 0
    st.deadline = _now() + budget_s
    st.timed_out = 0
    for i in range(w_words):
        st.stack[i] = init_cand[i]

    with nogil:
        _bb_dfs(&st, 0)

    best = None
    if st.best_len >= 0:
        best = [st.best_set[i] for i in range(st.best_len)]
    nodes = st.nodes
    exhausted = not st.timed_out
    free(st.stack)
    free(st.chosen)
    free(st.best_set)
    return best, nodes, exhausted
