# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the reference."""
from libc.stdint cimport int32_t, uint8_t, uint64_t
from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memcmp, memset

from math import comb

from . import _pykernels
from .errors import BudgetExceeded

ctypedef struct KeyIdx:
    uint64_t key
    int32_t idx


cdef int _cmp_keyidx(const void* a, const void* b) noexcept nogil:
    cdef const KeyIdx* x = <const KeyIdx*>a
    cdef const KeyIdx* y = <const KeyIdx*>b
    if x.key < y.key:
        return -1
    if x.key > y.key:
        return 1
    return (x.idx > y.idx) - (x.idx < y.idx)


cdef inline int _find(int32_t* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def fiber_components(int n, edges, int degree, budget):
    cdef int m = len(edges)
    total = comb(m + degree - 1, degree)
    if total > budget:
        raise BudgetExceeded(f"degree-{degree} fiber scan", total, budget)
    cdef int bits = max(1, degree.bit_length())
    if m == 0 or degree == 0 or n * bits > 64 or m > 255 or total > 2**31 - 1:
        return _pykernels.fiber_components(n, edges, degree, budget)

    cdef Py_ssize_t N = total
    cdef int d = degree
    cdef uint8_t* seqs = <uint8_t*>malloc(N * d)
    cdef KeyIdx* ki = <KeyIdx*>malloc(N * sizeof(KeyIdx))
    cdef int32_t* parent = <int32_t*>malloc(N * sizeof(int32_t))
    cdef int32_t* best = <int32_t*>malloc(N * sizeof(int32_t))
    cdef uint64_t* inc = <uint64_t*>malloc(m * sizeof(uint64_t))
    cdef int32_t* first = <int32_t*>malloc(m * sizeof(int32_t))
    cdef int* c = <int*>malloc(d * sizeof(int))
    if not (seqs and ki and parent and best and inc and first and c):
        free(seqs); free(ki); free(parent); free(best); free(inc); free(first); free(c)
        raise MemoryError()

    cdef Py_ssize_t i, j, k, g, idx
    cdef int p, e, ra, rb, comps, v
    cdef uint64_t key, mask
    cdef uint8_t* s
    cdef Py_ssize_t nfibers = 0
    split = []
    try:
        for e in range(m):
            u0, v0 = edges[e]
            inc[e] = ((<uint64_t>1) << (bits * <int>u0)) + ((<uint64_t>1) << (bits * <int>v0))
            first[e] = -1
        for p in range(d):
            c[p] = 0
        with nogil:
            i = 0
            while True:
                key = 0
                s = seqs + i * d
                for p in range(d):
                    s[p] = <uint8_t>c[p]
                    key += inc[c[p]]
                ki[i].key = key
                ki[i].idx = <int32_t>i
                i += 1
                p = d - 1
                while p >= 0 and c[p] == m - 1:
                    p -= 1
                if p < 0:
                    break
                c[p] += 1
                for k in range(p + 1, d):
                    c[k] = c[p]
            qsort(ki, N, sizeof(KeyIdx), _cmp_keyidx)

        mask = ((<uint64_t>1) << bits) - 1
        i = 0
        while i < N:
            j = i + 1
            while j < N and ki[j].key == ki[i].key:
                j += 1
            nfibers += 1
            g = j - i
            if g >= 2:
                with nogil:
                    for k in range(g):
                        parent[k] = <int32_t>k
                    for k in range(g):
                        s = seqs + <Py_ssize_t>ki[i + k].idx * d
                        for p in range(d):
                            if p > 0 and s[p] == s[p - 1]:
                                continue
                            e = s[p]
                            if first[e] < 0:
                                first[e] = <int32_t>k
                            else:
                                ra = _find(parent, <int>k)
                                rb = _find(parent, first[e])
                                if ra != rb:
                                    parent[ra] = rb
                    for e in range(m):
                        first[e] = -1
                    comps = 0
                    for k in range(g):
                        if _find(parent, <int>k) == k:
                            comps += 1
                            best[k] = -1
                    if comps >= 2:
                        # exponent-vector lex order is the reverse of sorted-sequence order,
                        # so the lex-least exponent vector is the largest sequence
                        for k in range(g):
                            ra = _find(parent, <int>k)
                            if best[ra] < 0 or memcmp(seqs + <Py_ssize_t>ki[i + k].idx * d,
                                                      seqs + <Py_ssize_t>ki[i + best[ra]].idx * d, d) > 0:
                                best[ra] = <int32_t>k
                if comps >= 2:
                    mins = []
                    for k in range(g):
                        if parent[k] == k:
                            vec = [0] * m
                            s = seqs + <Py_ssize_t>ki[i + best[k]].idx * d
                            for p in range(d):
                                vec[s[p]] += 1
                            mins.append(tuple(vec))
                    key = ki[i].key
                    b = tuple(int((key >> (bits * v)) & mask) for v in range(n))
                    split.append((b, sorted(mins)))
            i = j
    finally:
        free(seqs); free(ki); free(parent); free(best); free(inc); free(first); free(c)
    split.sort()
    return total, nfibers, split


# ---------------------------------------------------------------------------

cdef int _feasible(int n, int* x, int* adj, int* deg, int* supply, int* demand,
                   int* flow, int* seen, int* via, int* reach, int* queue) noexcept nogil:
    cdef int v, u, w, k, head, tail, end, amt, need, nb
    need = 0
    for v in range(n):
        if x[v]:
            nb = 0
            for k in range(deg[v]):
                nb += x[adj[v * n + k]]
            if x[v] > nb:
                return 0
        need += x[v]
        supply[v] = x[v]
        demand[v] = x[v]
    memset(flow, 0, n * n * sizeof(int))
    while need > 0:
        tail = 0
        for v in range(n):
            via[v] = -1
            reach[v] = -1
            seen[v] = 0
            if supply[v] > 0:
                seen[v] = 1
                queue[tail] = v
                tail += 1
        head = 0
        end = -1
        while head < tail and end < 0:
            u = queue[head]
            head += 1
            for k in range(deg[u]):
                v = adj[u * n + k]
                if reach[v] >= 0:
                    continue
                reach[v] = u
                if demand[v] > 0:
                    end = v
                    break
                for w in range(n):
                    if flow[w * n + v] > 0 and not seen[w]:
                        seen[w] = 1
                        via[w] = v
                        queue[tail] = w
                        tail += 1
        if end < 0:
            return 0
        amt = demand[end]
        u = reach[end]
        while via[u] >= 0:
            w = via[u]
            if flow[u * n + w] < amt:
                amt = flow[u * n + w]
            u = reach[w]
        if supply[u] < amt:
            amt = supply[u]
        u = reach[end]
        flow[u * n + end] += amt
        while via[u] >= 0:
            w = via[u]
            flow[u * n + w] -= amt
            u = reach[w]
            flow[u * n + w] += amt
        supply[u] -= amt
        demand[end] -= amt
        need -= amt
    return 1


def degree_vector_feasible(x, edges):
    return _pykernels.degree_vector_feasible(x, edges)


def lattice_count(int n, edges, int t, budget):
    total = _pykernels.composition_count(n, 2 * t, t)
    if total > budget:
        raise BudgetExceeded(f"lattice enumeration at t={t}", total, budget)
    if n > 64:
        return _pykernels.lattice_count(n, edges, t, budget)
    cdef int* buf = <int*>malloc((n * n * 2 + n * 12) * sizeof(int))
    if not buf:
        raise MemoryError()
    cdef int* adj = buf
    cdef int* flow = buf + n * n
    cdef int* x = flow + n * n
    cdef int* deg = x + n
    cdef int* supply = deg + n
    cdef int* demand = supply + n
    cdef int* seen = demand + n
    cdef int* via = seen + n
    cdef int* reach = via + n
    cdef int* queue = reach + n
    cdef int* lo = queue + n
    cdef int* left = lo + n
    cdef int i, v, last
    cdef long long count = 0
    for v in range(n):
        deg[v] = 0
        x[v] = 0
    for e in edges:
        a, b = e
        adj[a * n + deg[a]] = b
        deg[a] += 1
        adj[b * n + deg[b]] = a
        deg[b] += 1
    try:
        with nogil:
            if n == 1:
                if 2 * t <= t:
                    count = 1
            else:
                # odometer over x[0..n-2]; x[n-1] is forced by the sum
                last = n - 1
                i = 0
                left[0] = 2 * t
                x[0] = left[0] - t * (n - 1)
                if x[0] < 0:
                    x[0] = 0
                while i >= 0:
                    if x[i] > t or x[i] > left[i]:
                        i -= 1
                        if i >= 0:
                            x[i] += 1
                        continue
                    if i == last - 1:
                        x[last] = left[i] - x[i]
                        if x[last] <= t and _feasible(n, x, adj, deg, supply, demand,
                                                      flow, seen, via, reach, queue):
                            count += 1
                        x[i] += 1
                        continue
                    left[i + 1] = left[i] - x[i]
                    i += 1
                    x[i] = left[i] - t * (n - 1 - i)
                    if x[i] < 0:
                        x[i] = 0
    finally:
        free(buf)
    return int(count)


# ---------------------------------------------------------------------------

cdef struct CanonState:
    int n
    int nbits
    uint64_t adj[64]
    int perm[64]
    int best_perm[64]
    uint64_t best
    int have_best


cdef void _canon(CanonState* st, int k, uint64_t used, uint64_t code) noexcept nogil:
    cdef int v, i, done
    cdef uint64_t col, new
    if k == st.n:
        if not st.have_best or code < st.best:
            st.best = code
            st.have_best = 1
            for i in range(st.n):
                st.best_perm[i] = st.perm[i]
        return
    done = k * (k - 1) // 2 + k
    for v in range(st.n):
        if (used >> v) & 1:
            continue
        col = 0
        for i in range(k):
            col = (col << 1) | ((st.adj[st.perm[i]] >> v) & 1)
        new = (code << k) | col
        if st.have_best and new > (st.best >> (st.nbits - done)):
            continue
        st.perm[k] = v
        _canon(st, k + 1, used | ((<uint64_t>1) << v), new)


def canonical_form(int n, adj):
    if n > 11:
        return _pykernels.canonical_form(n, adj)
    cdef CanonState st
    cdef int v
    st.n = n
    st.nbits = n * (n - 1) // 2
    st.have_best = 0
    st.best = 0
    for v in range(n):
        st.adj[v] = adj[v]
    with nogil:
        _canon(&st, 0, 0, 0)
    return int(st.best), tuple(st.best_perm[v] for v in range(n))
