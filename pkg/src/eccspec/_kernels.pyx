# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS distances, canonical labeling, census invariants.

Same semantics as ``eccspec._kernels_py`` (the pure-Python reference); the
parity tests drive both backends over the same corpora.  Arithmetic that can
outgrow 64 bits (fraction-free elimination pivots, characteristic-polynomial
intermediates) runs in 128-bit integers; the guarded input ranges (n <= 10,
entries bounded by the diameter) keep every product far inside that.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc, PyMem_Realloc
from libc.stdint cimport int64_t, uint32_t, uint64_t

cdef extern from *:
    ctypedef long long int128 "__int128"
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "compiled"
UNREACHABLE = -1

DEF C_UNREACH = -1

DEF MAXN_CANON = 16
DEF MAXN_CENSUS = 10
DEF STATE_CAP = 500000


cdef object _i128_to_py(int128 v):
    cdef bint neg = v < 0
    if neg:
        v = -v
    cdef uint64_t hi = <uint64_t> (v >> 64)
    cdef uint64_t lo = <uint64_t> v
    out = (int(hi) << 64) | int(lo)
    return -out if neg else out


cdef int _load_adj(n, adj, uint64_t *out) except -1:
    cdef int nn = n
    cdef int i
    if nn < 1 or nn > 64:
        raise ValueError("vertex count must be in 1..64")
    for i in range(nn):
        out[i] = adj[i]
    return nn


# ---------------------------------------------------------------------------
# BFS distances

cdef void _bfs(int n, uint64_t *adj, int src, int *dist) noexcept nogil:
    cdef int i, v, d
    cdef uint64_t seen, frontier, nxt, mask
    for i in range(n):
        dist[i] = C_UNREACH
    dist[src] = 0
    seen = (<uint64_t> 1) << src
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        mask = frontier
        while mask:
            v = __builtin_ctzll(mask)
            mask &= mask - 1
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        mask = nxt
        while mask:
            v = __builtin_ctzll(mask)
            mask &= mask - 1
            dist[v] = d
        seen |= nxt
        frontier = nxt


def bfs_dist_row(n, adj, src):
    """Distances from src; UNREACHABLE for vertices in other components."""
    cdef uint64_t cadj[64]
    cdef int dist[64]
    cdef int nn = _load_adj(n, adj, cadj)
    _bfs(nn, cadj, src, dist)
    return [dist[i] for i in range(nn)]


def all_pairs_dist(n, adj):
    """n x n hop-distance matrix as a list of rows (UNREACHABLE sentinel)."""
    cdef uint64_t cadj[64]
    cdef int dist[64]
    cdef int nn = _load_adj(n, adj, cadj)
    cdef int s
    out = []
    for s in range(nn):
        _bfs(nn, cadj, s, dist)
        out.append([dist[i] for i in range(nn)])
    return out


def is_connected(n, adj):
    cdef uint64_t cadj[64]
    cdef int nn = _load_adj(n, adj, cadj)
    cdef uint64_t seen = 1, frontier = 1, nxt, mask
    cdef int v
    while frontier:
        nxt = 0
        mask = frontier
        while mask:
            v = __builtin_ctzll(mask)
            mask &= mask - 1
            nxt |= cadj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == ((<uint64_t> 1) << nn) - 1 if nn < 64 else seen == <uint64_t> -1


# ---------------------------------------------------------------------------
# canonical labeling

cdef void _wl_colors(int n, uint64_t *adj, int *colors) noexcept nogil:
    """Neighborhood-refinement colors, ranked by (color, count-vector)."""
    cdef int sig[MAXN_CANON][MAXN_CANON + 1]
    cdef int order[MAXN_CANON]
    cdef int newc[MAXN_CANON]
    cdef int i, j, v, u, ncol, rank, changed, cmp_res
    cdef uint64_t mask
    for i in range(n):
        colors[i] = 0
    ncol = 1
    while True:
        for v in range(n):
            sig[v][0] = colors[v]
            for j in range(ncol):
                sig[v][1 + j] = 0
            mask = adj[v]
            while mask:
                u = __builtin_ctzll(mask)
                mask &= mask - 1
                sig[v][1 + colors[u]] += 1
        # insertion-sort vertex indices by signature (lexicographic)
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            v = order[i]
            j = i - 1
            while j >= 0:
                cmp_res = _sig_cmp(sig[order[j]], sig[v], ncol + 1)
                if cmp_res <= 0:
                    break
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = v
        rank = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if _sig_cmp(sig[order[i - 1]], sig[order[i]], ncol + 1) != 0:
                rank += 1
            newc[order[i]] = rank
        changed = 0
        for v in range(n):
            if newc[v] != colors[v]:
                changed = 1
            colors[v] = newc[v]
        if not changed:
            return
        ncol = rank + 1


cdef inline int _sig_cmp(int *a, int *b, int length) noexcept nogil:
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef struct _StateBuf:
    uint32_t *rem
    uint64_t *rows
    int count
    int cap


cdef int _buf_init(_StateBuf *buf, int cap) except -1:
    buf.rem = <uint32_t *> PyMem_Malloc(cap * sizeof(uint32_t))
    buf.rows = <uint64_t *> PyMem_Malloc(cap * MAXN_CANON * sizeof(uint64_t))
    buf.count = 0
    buf.cap = cap
    if buf.rem == NULL or buf.rows == NULL:
        raise MemoryError()
    return 0


cdef int _buf_grow(_StateBuf *buf) except -1:
    cdef int cap = buf.cap * 2
    if cap > STATE_CAP:
        cap = STATE_CAP
    if buf.count >= cap:
        raise RuntimeError("canonical labeling state explosion")
    buf.rem = <uint32_t *> PyMem_Realloc(buf.rem, cap * sizeof(uint32_t))
    buf.rows = <uint64_t *> PyMem_Realloc(buf.rows, cap * MAXN_CANON * sizeof(uint64_t))
    if buf.rem == NULL or buf.rows == NULL:
        raise MemoryError()
    buf.cap = cap
    return 0


cdef void _buf_free(_StateBuf *buf):
    if buf.rem != NULL:
        PyMem_Free(buf.rem)
    if buf.rows != NULL:
        PyMem_Free(buf.rows)
    buf.rem = NULL
    buf.rows = NULL


cdef int128 _canon_impl(int n, uint64_t *adj) except? -1:
    """Minimal packed lower-triangle bit string over refinement-consistent
    orderings; see the pure-Python reference for the pruning argument."""
    cdef int colors[MAXN_CANON]
    cdef int block[MAXN_CANON]
    cdef int kept[MAXN_CANON]
    cdef int i, j, k, v, u, col, nkept, si, twin
    cdef uint64_t best, r, bit
    cdef uint32_t rem, rem2
    cdef int128 out = 0
    cdef _StateBuf cur, nxt
    cdef uint64_t *rowp
    cdef uint64_t *childp
    if n <= 1:
        return 0
    _wl_colors(n, adj, colors)
    for i in range(n):
        block[i] = colors[i]
    # counting sort of position colors
    cdef int cnt[MAXN_CANON]
    for i in range(n):
        cnt[i] = 0
    for i in range(n):
        cnt[colors[i]] += 1
    k = 0
    for i in range(n):
        for j in range(cnt[i]):
            block[k] = i
            k += 1
    _buf_init(&cur, 64)
    _buf_init(&nxt, 64)
    try:
        cur.count = 1
        cur.rem[0] = (1 << n) - 1
        for i in range(MAXN_CANON):
            cur.rows[i] = 0
        for k in range(n):
            col = block[k]
            # pass 1: global minimum candidate row over all states
            best = <uint64_t> -1
            for si in range(cur.count):
                rem = cur.rem[si]
                rowp = cur.rows + si * MAXN_CANON
                nkept = 0
                for v in range(n):
                    if not (rem >> v) & 1 or colors[v] != col:
                        continue
                    twin = 0
                    for j in range(nkept):
                        u = kept[j]
                        if (adj[u] & ~((<uint64_t> 1) << v)) == (adj[v] & ~((<uint64_t> 1) << u)):
                            twin = 1
                            break
                    if twin:
                        continue
                    kept[nkept] = v
                    nkept += 1
                    if rowp[v] < best:
                        best = rowp[v]
            if k:
                out = (out << k) | <int128> (best >> (64 - k))
            # pass 2: expand achievers
            nxt.count = 0
            for si in range(cur.count):
                rem = cur.rem[si]
                rowp = cur.rows + si * MAXN_CANON
                nkept = 0
                for v in range(n):
                    if not (rem >> v) & 1 or colors[v] != col:
                        continue
                    twin = 0
                    for j in range(nkept):
                        u = kept[j]
                        if (adj[u] & ~((<uint64_t> 1) << v)) == (adj[v] & ~((<uint64_t> 1) << u)):
                            twin = 1
                            break
                    if twin:
                        continue
                    kept[nkept] = v
                    nkept += 1
                    if rowp[v] != best:
                        continue
                    if nxt.count >= nxt.cap:
                        _buf_grow(&nxt)
                    rem2 = rem & ~(<uint32_t> 1 << v)
                    nxt.rem[nxt.count] = rem2
                    childp = nxt.rows + nxt.count * MAXN_CANON
                    bit = (<uint64_t> 1) << (63 - k)
                    for u in range(n):
                        if (rem2 >> u) & 1:
                            childp[u] = rowp[u] | (bit if (adj[v] >> u) & 1 else 0)
                        else:
                            childp[u] = 0
                    for u in range(n, MAXN_CANON):
                        childp[u] = 0
                    nxt.count += 1
            # dedup identical states
            if nxt.count > 1:
                seen = set()
                j = 0
                for si in range(nxt.count):
                    key = (<bytes> (<char *> (nxt.rows + si * MAXN_CANON))[:MAXN_CANON * 8]
                           + (<bytes> (<char *> &nxt.rem[si])[:4]))
                    if key in seen:
                        continue
                    seen.add(key)
                    if j != si:
                        nxt.rem[j] = nxt.rem[si]
                        for u in range(MAXN_CANON):
                            nxt.rows[j * MAXN_CANON + u] = nxt.rows[si * MAXN_CANON + u]
                    j += 1
                nxt.count = j
            cur, nxt = nxt, cur
        return out
    finally:
        _buf_free(&cur)
        _buf_free(&nxt)


def canon_bits(n, adj):
    """Canonical form of the graph, packed as an int of n(n-1)/2 bits."""
    cdef uint64_t cadj[MAXN_CANON]
    cdef int nn = n
    cdef int i
    if nn < 1 or nn > MAXN_CANON:
        raise ValueError(f"canonical labeling supports 1 <= n <= {MAXN_CANON}")
    for i in range(nn):
        cadj[i] = adj[i]
    return _i128_to_py(_canon_impl(nn, cadj))


def children_canon(n, adj):
    """Canonical forms of every one-vertex extension of an n-vertex graph."""
    cdef uint64_t cadj[MAXN_CANON]
    cdef uint64_t work[MAXN_CANON]
    cdef int nn = n
    cdef int i
    cdef uint32_t sub, full
    if nn < 1 or nn >= MAXN_CANON:
        raise ValueError(f"children_canon supports 1 <= n <= {MAXN_CANON - 1}")
    for i in range(nn):
        cadj[i] = adj[i]
    full = (1 << nn) - 1
    out = []
    for sub in range(1, full + 1):
        for i in range(nn):
            work[i] = cadj[i] | ((<uint64_t> ((sub >> i) & 1)) << nn)
        work[nn] = sub
        out.append(_i128_to_py(_canon_impl(nn + 1, work)))
    return out


# ---------------------------------------------------------------------------
# census invariants

cdef int _rank_shift(int n, int64_t *e, int shift) noexcept nogil:
    """Rank of E + shift*I by fraction-free elimination in 128-bit ints."""
    cdef int128 a[MAXN_CENSUS][MAXN_CENSUS]
    cdef int128 prev, piv, tmp
    cdef int i, j, k, pr, pc, rank
    for i in range(n):
        for j in range(n):
            a[i][j] = e[i * MAXN_CENSUS + j]
        a[i][i] += shift
    prev = 1
    rank = 0
    for k in range(n):
        pr = -1
        pc = -1
        for i in range(k, n):
            for j in range(k, n):
                if a[i][j] != 0:
                    pr = i
                    pc = j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != k:
            for j in range(n):
                tmp = a[k][j]
                a[k][j] = a[pr][j]
                a[pr][j] = tmp
        if pc != k:
            for i in range(n):
                tmp = a[i][k]
                a[i][k] = a[i][pc]
                a[i][pc] = tmp
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) / prev
            a[i][k] = 0
        prev = piv
        rank += 1
    return rank


def census_stats(n, adj):
    """(diam, |V1|, m(-1), m(-2), m(0), charpoly coeffs ascending)."""
    cdef uint64_t cadj[MAXN_CENSUS]
    cdef int dist[MAXN_CENSUS][MAXN_CENSUS]
    cdef int ecc[MAXN_CENSUS]
    cdef int64_t e[MAXN_CENSUS * MAXN_CENSUS]
    cdef int128 c[MAXN_CENSUS + 2]
    cdef int128 cnew[MAXN_CENSUS + 2]
    cdef int128 t[MAXN_CENSUS + 2]
    cdef int128 v[MAXN_CENSUS]
    cdef int128 v2[MAXN_CENSUS]
    cdef int128 acc
    cdef int nn = n
    cdef int i, j, k, r, d, diam, v1, m1, m2, m0, clen, tlen, jlo
    if nn < 1 or nn > MAXN_CENSUS:
        raise ValueError(f"census_stats supports 1 <= n <= {MAXN_CENSUS}")
    for i in range(nn):
        cadj[i] = adj[i]
    for i in range(nn):
        _bfs(nn, cadj, i, dist[i])
        for j in range(nn):
            if dist[i][j] == C_UNREACH:
                raise ValueError("census_stats requires a connected graph")
    diam = 0
    v1 = 0
    for i in range(nn):
        ecc[i] = 0
        for j in range(nn):
            if dist[i][j] > ecc[i]:
                ecc[i] = dist[i][j]
        if ecc[i] > diam:
            diam = ecc[i]
        if ecc[i] == 1:
            v1 += 1
    for i in range(nn):
        for j in range(nn):
            d = dist[i][j]
            if i != j and d == (ecc[i] if ecc[i] < ecc[j] else ecc[j]):
                e[i * MAXN_CENSUS + j] = d
            else:
                e[i * MAXN_CENSUS + j] = 0
    m1 = nn - _rank_shift(nn, e, 1)
    m2 = nn - _rank_shift(nn, e, 2)
    m0 = nn - _rank_shift(nn, e, 0)
    # Samuelson-Berkowitz characteristic polynomial (descending order in c)
    c[0] = 1
    c[1] = -e[0]
    clen = 2
    for r in range(1, nn):
        t[0] = 1
        t[1] = -e[r * MAXN_CENSUS + r]
        tlen = 2
        for i in range(r):
            v[i] = e[i * MAXN_CENSUS + r]
        for k in range(r):
            acc = 0
            for i in range(r):
                acc += e[r * MAXN_CENSUS + i] * v[i]
            t[tlen] = -acc
            tlen += 1
            for i in range(r):
                acc = 0
                for j in range(r):
                    acc += e[i * MAXN_CENSUS + j] * v[j]
                v2[i] = acc
            for i in range(r):
                v[i] = v2[i]
        for i in range(r + 2):
            acc = 0
            jlo = i - (tlen - 1)
            if jlo < 0:
                jlo = 0
            for j in range(jlo, (i if i < clen - 1 else clen - 1) + 1):
                acc += t[i - j] * c[j]
            cnew[i] = acc
        for i in range(r + 2):
            c[i] = cnew[i]
        clen = r + 2
    coeffs = tuple(_i128_to_py(c[nn - i]) for i in range(nn + 1))
    return (diam, v1, m1, m2, m0, coeffs)
