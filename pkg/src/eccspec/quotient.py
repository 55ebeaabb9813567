"""Equitable quotient machinery for block matrices with J/I cell structure.

A BlockSpec describes a symmetric matrix whose off-diagonal blocks are
constant (s_ij * J) and whose diagonal blocks are s_ii * J + p_i * I.  For
such matrices the quotient matrix q_ij = s_ij * n_j (i != j),
q_ii = s_ii * n_i + p_i carries the remaining spectrum exactly:

    P(M, x) = P(Q, x) * prod_i (x - p_i)^(n_i - 1)

verify_spectrum_identity checks that identity as exact polynomials, with the
full n x n characteristic polynomial as the brute-force side.

Block detection is deliberately restricted to the join shapes the
multiplicity families use: a clique of eccentricity-1 vertices joined to a
graph whose remaining vertices all have eccentricity 2.  Non-clique tail
components fall back to singleton blocks, which always satisfy the J/I form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .eccentricity import ecc_matrix
from .exactalg import IntMatrix, IntPolynomial, berkowitz_charpoly
from .graphs import Graph


@dataclass(frozen=True)
class BlockSpec:
    """Sizes n_i, symmetric off-diagonal constants s_ij, and (s_ii, p_i)
    diagonal cell parameters of a block-structured symmetric matrix."""

    sizes: tuple
    s: tuple  # l x l symmetric integer matrix, s[i][j] for i != j and s_ii
    p: tuple  # diagonal identity coefficients p_i

    def __post_init__(self):
        l = len(self.sizes)
        object.__setattr__(self, "sizes", tuple(int(x) for x in self.sizes))
        object.__setattr__(self, "s", tuple(tuple(int(x) for x in row)
                                            for row in self.s))
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if any(sz < 1 for sz in self.sizes):
            raise ValueError("block sizes must be >= 1")
        if len(self.s) != l or any(len(row) != l for row in self.s):
            raise ValueError("s must be l x l")
        if len(self.p) != l:
            raise ValueError("p must have one entry per block")
        for i in range(l):
            for j in range(i + 1, l):
                if self.s[i][j] != self.s[j][i]:
                    raise ValueError(f"s[{i}][{j}] != s[{j}][{i}]")

    @property
    def block_count(self):
        return len(self.sizes)

    @property
    def order(self):
        return sum(self.sizes)

    def to_text(self):
        """Compact fixture form: 'l; n1 .. nl; s row-major; p1 .. pl'."""
        l = self.block_count
        return "; ".join([
            str(l),
            " ".join(map(str, self.sizes)),
            " ".join(str(self.s[i][j]) for i in range(l) for j in range(l)),
            " ".join(map(str, self.p)),
        ])

    @classmethod
    def from_text(cls, text):
        chunks = [c.strip() for c in text.split(";")]
        if len(chunks) != 4:
            raise ValueError("expected 'l; sizes; s matrix; p vector'")
        l = int(chunks[0])
        sizes = tuple(int(x) for x in chunks[1].split())
        flat = [int(x) for x in chunks[2].split()]
        p = tuple(int(x) for x in chunks[3].split())
        if len(sizes) != l or len(flat) != l * l or len(p) != l:
            raise ValueError("inconsistent block counts in spec text")
        s = tuple(tuple(flat[i * l + j] for j in range(l)) for i in range(l))
        return cls(sizes, s, p)


@dataclass(frozen=True)
class QuotientResult:
    """Quotient matrix plus the leftover eigenvalues {p_i : n_i - 1}."""

    q: IntMatrix
    leftover: tuple  # pairs (p_i, n_i - 1)


def realize(spec: BlockSpec) -> IntMatrix:
    """The explicit order-n symmetric matrix described by the block spec."""
    n = spec.order
    rows = [[0] * n for _ in range(n)]
    bounds = []
    start = 0
    for sz in spec.sizes:
        bounds.append((start, start + sz))
        start += sz
    for bi, (a0, a1) in enumerate(bounds):
        for bj, (b0, b1) in enumerate(bounds):
            sij = spec.s[bi][bj]
            for u in range(a0, a1):
                for v in range(b0, b1):
                    rows[u][v] = sij
            if bi == bj:
                for u in range(a0, a1):
                    rows[u][u] = sij + spec.p[bi]
    return IntMatrix(rows)


def quotient(spec: BlockSpec) -> QuotientResult:
    l = spec.block_count
    q = [[spec.s[i][j] * spec.sizes[j] + (spec.p[i] if i == j else 0)
          for j in range(l)] for i in range(l)]
    leftover = tuple((spec.p[i], spec.sizes[i] - 1) for i in range(l)
                     if spec.sizes[i] > 1)
    return QuotientResult(IntMatrix(q), leftover)


def spec_charpoly(spec: BlockSpec) -> IntPolynomial:
    """P(Q, x) * prod (x - p_i)^(n_i - 1): the spectrum the quotient predicts."""
    res = quotient(spec)
    poly = berkowitz_charpoly(res.q)
    for value, mult in res.leftover:
        poly = poly * (IntPolynomial.x_minus(value) ** mult)
    return poly


def verify_spectrum_identity(spec: BlockSpec) -> bool:
    """Exact polynomial identity between the full matrix charpoly and the
    quotient-plus-leftover factorization."""
    return berkowitz_charpoly(realize(spec)) == spec_charpoly(spec)


def detect_join_blockspec(g: Graph) -> Optional[BlockSpec]:
    """BlockSpec of the eccentricity matrix when g is a clique of
    eccentricity-1 vertices joined onto an eccentricity-2 remainder.

    Cells: the eccentricity-1 clique; each clique component of the remainder;
    all isolated remainder vertices as one independent cell; vertices of
    non-clique components individually (singleton blocks keep the J/I form
    applicable).  Returns None when the graph has no such join structure.
    The realized spec equals the eccentricity matrix with vertices grouped
    cell by cell, which for the clique-first family builders is the identity
    grouping, so the equality is entrywise there; it is asserted on every
    success.
    """
    e = ecc_matrix(g)
    met = e.metrics
    if met.diam == 1:
        spec = BlockSpec((g.n,), ((1,),), (-1,))
        assert realize(spec) == e.m
        return spec
    if met.diam != 2:
        return None
    v1 = sorted(met.level(1))
    if not v1:
        return None
    v2 = sorted(met.level(2))
    tail_cells = []
    isolated = []
    for comp in _components(g, v2):
        if len(comp) == 1:
            isolated.extend(comp)
        elif _is_clique(g, comp):
            tail_cells.append(sorted(comp))
        else:
            tail_cells.extend([v] for v in sorted(comp))
    if isolated:
        tail_cells.append(sorted(isolated))
    tail_cells.sort(key=lambda c: c[0])
    cells = [list(v1)] + tail_cells
    sizes = tuple(len(c) for c in cells)
    l = len(cells)
    s = [[0] * l for _ in range(l)]
    p = [0] * l
    for i, ci in enumerate(cells):
        u = ci[0]
        if len(ci) > 1:
            w = ci[1]
            s[i][i] = e.m[u, w]
            p[i] = -s[i][i]
        for j in range(i + 1, l):
            v = cells[j][0]
            s[i][j] = s[j][i] = e.m[u, v]
    spec = BlockSpec(sizes, tuple(map(tuple, s)), tuple(p))
    order = [v for cell in cells for v in cell]
    regrouped = IntMatrix([[e.m[u, v] for v in order] for u in order])
    assert realize(spec) == regrouped, \
        "detected block spec must realize the matrix"
    return spec


def _components(g: Graph, vertices):
    verts = set(vertices)
    comps = []
    while verts:
        start = min(verts)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u in verts and u not in comp:
                    comp.add(u)
                    frontier.append(u)
        comps.append(sorted(comp))
        verts -= comp
    return comps


def _is_clique(g: Graph, vertices):
    return all(g.has_edge(u, v) for i, u in enumerate(vertices)
               for v in vertices[i + 1:])
