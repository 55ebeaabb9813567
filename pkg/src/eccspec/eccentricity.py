"""The central objects: largest-distance (eccentricity) matrices and their
spectra -- eigenvalue multiplicities, characteristic polynomials,
irreducibility, median eigenvalues and the HL-index.

The matrix keeps the entry d(u,v) exactly when it equals the smaller of the
two eccentricities and zeroes it otherwise, so every row retains at least one
largest distance.  Multiplicity queries go through exact integer rank of the
shifted matrix, never through floating eigensolvers: a monic integer
characteristic polynomial has only integer rational roots, so rational-shift
ranks decide everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    DEFAULT_BRACKET_WIDTH,
    IntMatrix,
    IntPolynomial,
    RationalInterval,
    SymmetricSpectrum,
    bareiss_rank,
    berkowitz_charpoly,
    inertia_at,
)
from .graphs import Graph, Metrics, bfs_metrics, duplicate_classes


@dataclass(frozen=True)
class EccMatrix:
    """Eccentricity matrix of a connected graph together with its metrics."""

    base: Graph
    metrics: Metrics
    m: IntMatrix


def ecc_matrix(g: Graph) -> EccMatrix:
    """Largest-distance matrix: entry d(u,v) iff d(u,v) = min(ecc(u), ecc(v))."""
    met = bfs_metrics(g)
    if met.diam < 0:
        raise ValueError("eccentricity matrix requires a connected graph")
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        du = met.dist[u]
        for v in range(u + 1, n):
            d = du[v]
            if d == min(met.ecc[u], met.ecc[v]):
                rows[u][v] = d
                rows[v][u] = d
    return EccMatrix(g, met, IntMatrix(rows))


def multiplicity(g: Graph, xi) -> int:
    """m(xi): eigenvalue multiplicity of xi = p/q in the eccentricity
    spectrum, as n - rank(q*E - p*I)."""
    e = ecc_matrix(g)
    return matrix_multiplicity(e.m, xi)


def matrix_multiplicity(m: IntMatrix, xi) -> int:
    xi = Fraction(xi)
    shifted = m.shifted(xi.denominator, xi.numerator)
    return m.n - bareiss_rank(shifted)


def acharpoly(g: Graph) -> IntPolynomial:
    """Characteristic polynomial of the eccentricity matrix, exact and monic."""
    return berkowitz_charpoly(ecc_matrix(g).m)


def is_irreducible(e: EccMatrix) -> bool:
    """True iff the nonzero-support graph of the matrix is connected, which
    for symmetric matrices is exactly irreducibility."""
    n = e.m.n
    if n == 1:
        return True
    support = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and e.m[u, v]:
                support[u] |= 1 << v
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        mask = frontier
        while mask:
            low = mask & -mask
            nxt |= support[low.bit_length() - 1]
            mask ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << n) - 1


def median_positions(n):
    """The two median positions H = floor((n+1)/2), L = ceil((n+1)/2)."""
    return (n + 1) // 2, (n + 2) // 2


def median_eigenvalue_is(g: Graph, xi):
    """Whether xi occupies the median positions H and L of the eccentricity
    spectrum (eigenvalues ordered decreasingly); returns (at_H, at_L)."""
    e = ecc_matrix(g)
    ine = inertia_at(e.m, Fraction(xi))
    h, l = median_positions(g.n)
    at = lambda pos: ine.n_plus < pos <= ine.n_plus + ine.n_zero
    return at(h), at(l)


def hl_index(g: Graph, width=DEFAULT_BRACKET_WIDTH) -> RationalInterval:
    """Enclosure of max(|xi_H|, |xi_L|); a point when both medians are
    certified rational by inertia."""
    e = ecc_matrix(g)
    spec = SymmetricSpectrum(e.m)
    h, l = median_positions(g.n)
    bh = spec.bracket(h, width)
    bl = spec.bracket(l, width)
    ah = _abs_interval(bh)
    al = _abs_interval(bl)
    return RationalInterval(max(ah.lo, al.lo), max(ah.hi, al.hi))


def _abs_interval(iv: RationalInterval) -> RationalInterval:
    if iv.lo >= 0:
        return iv
    if iv.hi <= 0:
        return RationalInterval(-iv.hi, -iv.lo)
    return RationalInterval(Fraction(0), max(-iv.lo, iv.hi))


def twin_eigenvalue_predictions(g: Graph):
    """Guaranteed eigenvalue lower bounds from duplicate / co-duplicate
    classes: each class of size k forces multiplicity >= k-1 at the
    eigenvalue determined by the class kind and its common eccentricity."""
    met = bfs_metrics(g)
    out = []
    for vs, kind in duplicate_classes(g):
        k = len(vs)
        e = met.ecc[min(vs)]
        if kind == "duplicate":
            xi = Fraction(-2) if e == 2 else Fraction(0)
        else:
            xi = Fraction(-1) if e == 1 else Fraction(0)
        out.append((xi, k - 1))
    return out


@dataclass(frozen=True)
class SpectrumSummary:
    """Bundle of exact spectral facts about one graph's eccentricity matrix."""

    n: int
    charpoly: IntPolynomial
    mult_table: dict
    median_h: RationalInterval
    median_l: RationalInterval
    hl: RationalInterval

    def to_dict(self):
        def iv(b):
            return {"lo": str(b.lo), "hi": str(b.hi), "exact": b.is_point()}

        return {
            "n": self.n,
            "charpoly_ascending": self.charpoly.ascending_list(),
            "multiplicities": {str(k): v for k, v in self.mult_table.items()},
            "median_upper": iv(self.median_h),
            "median_lower": iv(self.median_l),
            "hl_index": iv(self.hl),
        }


def spectrum_summary(g: Graph, xis=(-2, -1, 0), width=DEFAULT_BRACKET_WIDTH):
    e = ecc_matrix(g)
    spec = SymmetricSpectrum(e.m)
    h, l = median_positions(g.n)
    bh = spec.bracket(h, width)
    bl = spec.bracket(l, width)
    ah, al = _abs_interval(bh), _abs_interval(bl)
    hl = RationalInterval(max(ah.lo, al.lo), max(ah.hi, al.hi))
    table = {Fraction(x): matrix_multiplicity(e.m, x) for x in xis}
    return SpectrumSummary(g.n, berkowitz_charpoly(e.m), table, bh, bl, hl)


__all__ = [
    "EccMatrix",
    "SpectrumSummary",
    "acharpoly",
    "ecc_matrix",
    "hl_index",
    "is_irreducible",
    "matrix_multiplicity",
    "median_eigenvalue_is",
    "median_positions",
    "multiplicity",
    "spectrum_summary",
    "twin_eigenvalue_predictions",
]
