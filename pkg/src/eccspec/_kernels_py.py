"""Pure-Python kernels: BFS distances, canonical labeling, census invariants.

This module is the reference implementation of the hot-path kernels.  The
compiled extension ``eccspec._kernels`` implements the same functions with the
same semantics; ``eccspec.kernels`` picks whichever is importable.  Everything
here works on adjacency *bitsets*: a graph on n vertices is a sequence ``adj``
of n ints where bit j of ``adj[i]`` is set iff ij is an edge.

Canonical labeling is iterated neighborhood partition refinement followed by
backtracking over the remaining cell orderings, minimizing the packed
lower-triangle adjacency bit string.  Two sound prunings keep symmetric inputs
tractable: twin candidates (equal open or closed neighborhoods) collapse to a
single branch, and frontier states that agree on the remaining vertices and
their placed-adjacency histories are merged.
"""

BACKEND = "pure-python"

_STATE_CAP = 500_000
_ROW_BITS = 64  # placed-adjacency rows are kept left-aligned in a 64-bit word

UNREACHABLE = -1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bfs_dist_row(n, adj, src):
    """Distances from src; UNREACHABLE for vertices in other components."""
    dist = [UNREACHABLE] * n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def all_pairs_dist(n, adj):
    """n x n hop-distance matrix as a list of rows (UNREACHABLE sentinel)."""
    return [bfs_dist_row(n, adj, v) for v in range(n)]


def is_connected(n, adj):
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def _wl_colors(n, adj):
    """Canonically ranked neighborhood-refinement color classes.

    Signatures are (own color, neighbor-color count vector); ranks are dense
    and stable under isomorphism.  The count-vector ordering matches the
    compiled kernel exactly, which keeps canonical forms backend-independent.
    """
    colors = [0] * n
    ncol = 1
    while True:
        sigs = []
        for v in range(n):
            counts = [0] * ncol
            for u in _bits(adj[v]):
                counts[colors[u]] += 1
            sigs.append((colors[v], tuple(counts)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new
        ncol = len(rank)


def canon_bits(n, adj):
    """Canonical form of the graph, packed as an int of n(n-1)/2 bits.

    The bit string is the lower triangle row by row (equivalently the graph6
    data bit order), minimized over all vertex orderings consistent with the
    refined color classes.  Equal results iff the graphs are isomorphic.
    """
    if n <= 1:
        return 0
    colors = _wl_colors(n, adj)
    block = sorted(colors)  # color of each position
    full = (1 << n) - 1
    # state: (remaining-vertex mask, per-vertex placed-adjacency rows)
    states = [(full, (0,) * n)]
    out = 0
    for k in range(n):
        col = block[k]
        shift = _ROW_BITS - 1 - k
        best = None
        chosen = []
        for si, (rem, rows) in enumerate(states):
            kept = []
            for v in _bits(rem):
                if colors[v] != col:
                    continue
                twin = False
                for u in kept:
                    if (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                        twin = True
                        break
                if twin:
                    continue
                kept.append(v)
                r = rows[v]
                if best is None or r < best:
                    best = r
                    chosen = [(si, v)]
                elif r == best:
                    chosen.append((si, v))
        if k:
            out = (out << k) | (best >> (_ROW_BITS - k))
        merged = {}
        for si, v in chosen:
            rem, rows = states[si]
            rem2 = rem & ~(1 << v)
            av = adj[v]
            rows2 = tuple(
                (rows[u] | (((av >> u) & 1) << shift)) if (rem2 >> u) & 1 else 0
                for u in range(n)
            )
            merged[(rem2, rows2)] = None
        states = list(merged)
        if len(states) > _STATE_CAP:
            raise RuntimeError("canonical labeling state explosion")
    return out


def children_canon(n, adj):
    """Canonical forms of every one-vertex extension of an n-vertex graph.

    The new vertex n is attached to each nonempty subset of 0..n-1; returns
    2^n - 1 canonical forms (with repeats; callers deduplicate).
    """
    res = []
    base = list(adj) + [0]
    for sub in range(1, 1 << n):
        cadj = [base[v] | (((sub >> v) & 1) << n) for v in range(n)]
        cadj.append(sub)
        res.append(canon_bits(n + 1, cadj))
    return res


def _ecc_entries(n, dist):
    """Eccentricities and the largest-distance matrix rows; requires connected."""
    ecc = [max(row) for row in dist]
    mat = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            d = dist[u][v]
            if d == min(ecc[u], ecc[v]):
                mat[u][v] = d
                mat[v][u] = d
    return ecc, mat


def _rank(n, mat):
    """Rank over the rationals by fraction-free elimination (full pivoting)."""
    a = [row[:] for row in mat]
    prev = 1
    rank = 0
    for k in range(n):
        pr = pc = -1
        for i in range(k, n):
            for j in range(k, n):
                if a[i][j]:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != k:
            a[k], a[pr] = a[pr], a[k]
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
        rank += 1
    return rank


def _charpoly(n, mat):
    """det(xI - M) by the division-free Samuelson-Berkowitz recurrence.

    Returns coefficients in ascending degree order, length n+1, monic.
    """
    if n == 0:
        return [1]
    c = [1, -mat[0][0]]  # descending-degree coefficients, leading first
    for r in range(1, n):
        a_rr = mat[r][r]
        row = mat[r][:r]
        colv = [mat[i][r] for i in range(r)]
        t = [1, -a_rr]
        v = colv
        for _ in range(r):
            t.append(-sum(row[i] * v[i] for i in range(r)))
            v = [sum(mat[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                s += t[i - j] * c[j]
            new.append(s)
        c = new
    return c[::-1]


def census_stats(n, adj):
    """(diam, |V1|, m(-1), m(-2), m(0), charpoly coeffs ascending).

    Multiplicities are rank-based: m(c) = n - rank(E - cI) for the
    largest-distance matrix E.  Raises ValueError on disconnected input.
    """
    dist = all_pairs_dist(n, adj)
    if any(UNREACHABLE in row for row in dist):
        raise ValueError("census_stats requires a connected graph")
    ecc, mat = _ecc_entries(n, dist)
    diam = max(ecc)
    v1 = sum(1 for e in ecc if e == 1)
    shifted1 = [[mat[i][j] + (i == j) for j in range(n)] for i in range(n)]
    shifted2 = [[mat[i][j] + 2 * (i == j) for j in range(n)] for i in range(n)]
    m1 = n - _rank(n, shifted1)
    m2 = n - _rank(n, shifted2)
    m0 = n - _rank(n, mat)
    coeffs = tuple(_charpoly(n, mat))
    return diam, v1, m1, m2, m0, coeffs
