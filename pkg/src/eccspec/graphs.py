"""Immutable simple graphs with bitset adjacency, metric data, and builders.

Vertices are dense indices 0..n-1 with n <= 64 so each neighborhood fits one
machine word.  Graphs are immutable after construction; every builder returns
a fresh Graph, which makes them safe to share across census workers.

Named constructions follow a fixed vertex order (clique block first, then the
joined part in the documented order of its builder) so golden matrices in
tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels

MAX_VERTICES = 64

UNREACHABLE = kernels.UNREACHABLE


class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitset of v."""

    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_adj(cls, rows):
        g = cls.__new__(cls)
        n = len(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        for v, row in enumerate(rows):
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> n:
                raise ValueError(f"adjacency row {v} references vertices >= {n}")
        for u in range(n):
            for v in range(u + 1, n):
                if ((rows[u] >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def has_edge(self, u, v):
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def neighbors(self, v):
        mask = self.adj[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.has_edge(u, v)]

    def edge_count(self):
        return sum(self.degree(v) for v in range(self.n)) // 2

    def max_degree(self):
        return max(self.degree(v) for v in range(self.n))

    def relabel(self, perm):
        """New graph with vertex v renamed perm[v]."""
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph.from_adj(rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Metrics:
    """All-pairs distances, eccentricities, diameter, eccentricity levels.

    On disconnected graphs every unreachable distance, each affected
    eccentricity, and the diameter carry the UNREACHABLE sentinel (-1) and
    ``levels`` is empty; metric consumers must check connectivity first.
    """

    dist: tuple
    ecc: tuple
    diam: int
    levels: dict

    def level(self, i):
        return self.levels.get(i, frozenset())


def is_connected(g: Graph) -> bool:
    return kernels.is_connected(g.n, g.adj)


def bfs_metrics(g: Graph) -> Metrics:
    """Breadth-first metric data; tolerates disconnected input via sentinels."""
    dist = kernels.all_pairs_dist(g.n, g.adj)
    if any(UNREACHABLE in row for row in dist):
        ecc = tuple(UNREACHABLE for _ in range(g.n))
        return Metrics(tuple(map(tuple, dist)), ecc, UNREACHABLE, {})
    ecc = tuple(max(row) for row in dist)
    diam = max(ecc)
    levels = {}
    for v, e in enumerate(ecc):
        levels.setdefault(e, set()).add(v)
    levels = {e: frozenset(vs) for e, vs in levels.items()}
    return Metrics(tuple(map(tuple, dist)), ecc, diam, levels)


# ---------------------------------------------------------------------------
# builders

def empty_graph(n):
    return Graph(n)


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph.from_adj(rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << n) - 1) ^ g_mask
    rows = [row | h_mask for row in g.adj]
    rows += [(hrow << g.n) | g_mask for hrow in h.adj]
    return Graph.from_adj(rows)


def complete_multipartite(parts):
    """Complete multipartite graph; vertices grouped part by part in order."""
    parts = list(parts)
    if len(parts) < 2:
        raise ValueError("need at least 2 parts")
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    bounds = []
    start = 0
    for p in parts:
        bounds.append((start, start + p))
        start += p
    edges = []
    for i, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(n, edges)


def mixed_extension_star(t0, p, ts):
    """Star with its center blown up to a clique K_t0 joined to every other
    cell, one independent cell of size p, and clique cells of the given sizes;
    non-center cells are pairwise non-adjacent.

    Vertex order: center clique, then the independent cell, then the clique
    cells in the given order.
    """
    ts = list(ts)
    if t0 < 1:
        raise ValueError("center clique size must be >= 1")
    if p < 0:
        raise ValueError("independent cell size must be >= 0")
    if any(t < 2 for t in ts):
        raise ValueError("clique cell sizes must be >= 2")
    center = complete(t0)
    tail_cells = []
    if p > 0:
        tail_cells.append(empty_graph(p))
    tail_cells.extend(complete(t) for t in ts)
    if not tail_cells:
        return center
    tail = tail_cells[0]
    for cell in tail_cells[1:]:
        tail = disjoint_union(tail, cell)
    return join(center, tail)


def bull():
    """Triangle 0,1,2 with pendant vertices 3 at 1 and 4 at 2."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


# Small graphs that appear joined to a clique in the multiplicity families.
# Each builder fixes the vertex order used by the canonical family graphs.
H_DESCRIPTORS = {
    "2K1": lambda: empty_graph(2),
    "3K1": lambda: empty_graph(3),
    "4K1": lambda: empty_graph(4),
    "5K1": lambda: empty_graph(5),
    "K2uK1": lambda: disjoint_union(complete(2), empty_graph(1)),
    "2K1uK2": lambda: disjoint_union(empty_graph(2), complete(2)),
    "P3uK1": lambda: disjoint_union(path(3), empty_graph(1)),
    "2K2": lambda: disjoint_union(complete(2), complete(2)),
    "P4": lambda: path(4),
    "K3uK1": lambda: disjoint_union(complete(3), empty_graph(1)),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "K1uP4": lambda: disjoint_union(empty_graph(1), path(4)),
    "H1": bull,
}

# The seven order-4 descriptors paired with K_{n-4}, in catalog order.
G1_DESCRIPTORS = ("4K1", "2K1uK2", "P3uK1", "2K2", "P4", "K3uK1", "C4")

# The three order-5 descriptors paired with K_{n-5}.
ORDER5_DESCRIPTORS = ("C5", "K1uP4", "H1")


def join_clique_with(r, descriptor):
    """K_r joined with the named small graph (clique vertices first)."""
    if descriptor not in H_DESCRIPTORS:
        raise ValueError(f"unknown descriptor {descriptor!r}")
    if r < 1:
        raise ValueError("clique part must be nonempty")
    return join(complete(r), H_DESCRIPTORS[descriptor]())


@dataclass(frozen=True)
class FamilyId:
    """Named graph constructions used throughout the verification suites."""

    kind: str
    params: tuple

    @classmethod
    def complete(cls, n):
        return cls("complete", (n,))

    @classmethod
    def path(cls, n):
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n):
        return cls("cycle", (n,))

    @classmethod
    def multipartite(cls, parts):
        return cls("multipartite", tuple(parts))

    @classmethod
    def join_clique(cls, r, descriptor):
        return cls("join_clique", (r, descriptor))

    @classmethod
    def mixed_star(cls, t0, p, ts):
        return cls("mixed_star", (t0, p, tuple(ts)))

    @classmethod
    def g1(cls, index, n):
        return cls("g1", (index, n))

    @classmethod
    def thm5(cls, index, n):
        return cls("thm5", (index, n))


def build_family(fid: FamilyId) -> Graph:
    """Materialize a FamilyId; order-validity ranges are deliberately not
    enforced so callers can probe outside them."""
    kind, params = fid.kind, fid.params
    if kind == "complete":
        return complete(params[0])
    if kind == "path":
        return path(params[0])
    if kind == "cycle":
        return cycle(params[0])
    if kind == "multipartite":
        return complete_multipartite(params)
    if kind == "join_clique":
        return join_clique_with(*params)
    if kind == "mixed_star":
        return mixed_extension_star(*params)
    if kind == "g1":
        index, n = params
        if not 0 <= index < len(G1_DESCRIPTORS):
            raise ValueError(f"g1 index {index} out of range 0..6")
        return join_clique_with(n - 4, G1_DESCRIPTORS[index])
    if kind == "thm5":
        index, n = params
        if not 0 <= index < len(G1_DESCRIPTORS) + len(ORDER5_DESCRIPTORS):
            raise ValueError(f"thm5 index {index} out of range 0..9")
        if index < len(G1_DESCRIPTORS):
            return join_clique_with(n - 4, G1_DESCRIPTORS[index])
        return join_clique_with(n - 5,
                                ORDER5_DESCRIPTORS[index - len(G1_DESCRIPTORS)])
    raise ValueError(f"unknown family kind {kind!r}")


def max_mult_families(n):
    """The ten (name, Graph) pairs attaining m(-1) = n-5 at large orders."""
    fams = [(f"K{n-4}v{d}", join_clique_with(n - 4, d)) for d in G1_DESCRIPTORS]
    fams += [(f"K{n-5}v{d}", join_clique_with(n - 5, d)) for d in ORDER5_DESCRIPTORS]
    return fams


def theorem1_families(n):
    """Every family graph named by the m(-1) = n-i (i <= 5) characterization
    that exists at order n, as (name, Graph) pairs."""
    fams = [(f"K{n}", complete(n))]
    if n == 4:
        fams.append(("P4", path(4)))
    if n >= 3:
        fams.append((f"K{n-2}v2K1", join_clique_with(n - 2, "2K1")))
    if n >= 4:
        fams.append((f"K{n-3}vK2uK1", join_clique_with(n - 3, "K2uK1")))
        fams.append((f"K{n-3}v3K1", join_clique_with(n - 3, "3K1")))
    if n >= 5:
        fams.extend((f"K{n-4}v{d}", join_clique_with(n - 4, d))
                    for d in G1_DESCRIPTORS)
    if n >= 6:
        fams.extend((f"K{n-5}v{d}", join_clique_with(n - 5, d))
                    for d in ORDER5_DESCRIPTORS)
    return fams


def is_mixed_star_shape(g: Graph) -> bool:
    """Whether g is a star mixed extension: a nonempty clique of universal
    vertices joined onto pairwise non-adjacent cells that are cliques or
    independent vertices.  Equivalently, diameter <= 2, the eccentricity-1
    set is nonempty, and every component of the remainder is a clique."""
    met = bfs_metrics(g)
    if met.diam == 1:
        return True
    if met.diam != 2 or not met.level(1):
        return False
    rest = set(range(g.n)) - met.level(1)
    while rest:
        comp = {min(rest)}
        stack = [min(rest)]
        while stack:
            for u in g.neighbors(stack.pop()):
                if u in rest and u not in comp:
                    comp.add(u)
                    stack.append(u)
        comp = sorted(comp)
        if not all(g.has_edge(u, v) for i, u in enumerate(comp)
                   for v in comp[i + 1:]):
            return False
        rest -= set(comp)
    return True


# ---------------------------------------------------------------------------
# twin (duplicate / co-duplicate) vertex classes

def duplicate_classes(g: Graph):
    """Maximal classes of >= 2 vertices with equal open neighborhoods
    ("duplicate", pairwise non-adjacent) or equal closed neighborhoods
    ("co-duplicate", pairwise adjacent).  The two kinds never overlap."""
    open_groups = {}
    closed_groups = {}
    for v in range(g.n):
        open_groups.setdefault(g.adj[v], []).append(v)
        closed_groups.setdefault(g.adj[v] | (1 << v), []).append(v)
    out = []
    for vs in open_groups.values():
        if len(vs) >= 2:
            out.append((frozenset(vs), "duplicate"))
    for vs in closed_groups.values():
        if len(vs) >= 2:
            out.append((frozenset(vs), "co-duplicate"))
    out.sort(key=lambda cl: (min(cl[0]), cl[1]))
    return out


# ---------------------------------------------------------------------------
# graph6 codec (n <= 62, single-byte size header)

def graph6_encode(g: Graph) -> bytes:
    """Standard graph6: size byte n+63, then the upper-triangle bits in
    column order packed big-endian into 6-bit groups, each group +63."""
    n = g.n
    if n > 62:
        raise ValueError("graph6 single-byte header supports n <= 62")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [n + 63]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = (group << 1) | b
        out.append(group + 63)
    return bytes(out)


def graph6_decode(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    data = data.rstrip(b"\n")
    if not data:
        raise ValueError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte outside 63..126")
    n = data[0] - 63
    if n > 62:
        raise ValueError("graph6 multi-byte headers (n > 62) not supported")
    if n < 1:
        raise ValueError("graph6 order must be >= 1")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise ValueError(f"graph6 length {len(data)} != expected {expected} for n={n}")
    bits = []
    for byte in data[1:]:
        group = byte - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 data")
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    return Graph.from_adj(rows)


# ---------------------------------------------------------------------------
# edge-list text fixtures ("n=K" header, one "u v" edge per line, 0-indexed)

def parse_edge_list(text) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise ValueError(f"line {lineno}: expected 'n=<count>' header")
            n = int(line[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("missing 'n=<count>' header")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_rational(text) -> Fraction:
    return Fraction(text)
