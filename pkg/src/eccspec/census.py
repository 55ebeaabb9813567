"""Isomorph-free enumeration of connected graphs and bulk classification by
eccentricity-spectral invariants.

Enumeration is level-wise augmentation: every connected graph on n vertices
arises from a connected graph on n-1 vertices by attaching one new vertex to
a nonempty subset of the old ones (every connected graph has a non-cut
vertex), and a global canonical-form set removes isomorphs.  Canonical forms
are exact -- partition refinement plus backtracking, never hash-probabilistic
-- because the verification counts are exact claims.

The persisted store is newline-delimited and greppable: one graph per line,
canonical graph6, TAB, CSV of invariants, TAB, the exact ascending
characteristic-polynomial coefficients.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from multiprocessing import Pool

from . import kernels
from .graphs import Graph, theorem1_families

ENUMERATION_LIMIT = 10  # n=10 is best-effort (hours in pure-python mode)
CANONICAL_LIMIT = 16

#: connected graphs per order, used as enumeration self-checks
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
                    8: 11117, 9: 261080, 10: 11716571}


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical graph6 string plus a derived 64-bit hash.

    Equal canonical forms iff isomorphic graphs; the hash is for cheap
    bucketing only and every collision is confirmed against the full form.
    """

    canon: str
    hash64: int


def bits_to_graph6(n, bits) -> str:
    """graph6 string of a packed lower-triangle bit form (the canonical bit
    order and the graph6 data bit order coincide)."""
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    val = bits << pad
    groups = (nbits + 5) // 6
    chars = [chr(n + 63)]
    for i in range(groups - 1, -1, -1):
        chars.append(chr(((val >> (6 * i)) & 63) + 63))
    return "".join(chars)


def bits_to_graph(n, bits) -> Graph:
    nbits = n * (n - 1) // 2
    rows = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if (bits >> (nbits - 1 - idx)) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            idx += 1
    return Graph.from_adj(rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Deterministic canonical labeling by iterated neighborhood refinement
    and backtracking over the remaining cell orderings, minimizing the
    adjacency bit string."""
    if g.n > CANONICAL_LIMIT:
        raise ValueError(f"canonical labeling supports n <= {CANONICAL_LIMIT}")
    bits = kernels.canon_bits(g.n, g.adj)
    s = bits_to_graph6(g.n, bits)
    h = int.from_bytes(hashlib.blake2b(s.encode(), digest_size=8).digest(), "big")
    return CanonicalForm(s, h)


def canonical_bits(g: Graph) -> int:
    if g.n > CANONICAL_LIMIT:
        raise ValueError(f"canonical labeling supports n <= {CANONICAL_LIMIT}")
    return kernels.canon_bits(g.n, g.adj)


# ---------------------------------------------------------------------------
# enumeration

_census_cache = {1: (0,)}


def _enum_chunk(args):
    n_parent, parents = args
    out = set()
    for bits in parents:
        g = bits_to_graph(n_parent, bits)
        out.update(kernels.children_canon(n_parent, g.adj))
    return out


def _level_bits(n, jobs=1):
    """Sorted canonical bit forms of all connected graphs of order n."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_LIMIT}")
    cached = _census_cache.get(n)
    if cached is not None:
        return cached
    parents = _level_bits(n - 1, jobs)
    seen = set()
    if jobs > 1 and len(parents) >= jobs:
        chunks = [(n - 1, parents[i::jobs * 4]) for i in range(jobs * 4)]
        with Pool(jobs) as pool:
            for part in pool.imap_unordered(_enum_chunk, chunks):
                seen |= part
    else:
        seen = _enum_chunk((n - 1, parents))
    level = tuple(sorted(seen))
    _census_cache[n] = level
    return level


def enumerate_connected(n, jobs=1):
    """One canonical representative per isomorphism class of connected graphs
    of order n, in deterministic (canonical-form) order."""
    for bits in _level_bits(n, jobs):
        yield bits_to_graph(n, bits)


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class CensusRecord:
    """Canonical key plus the exact spectral invariants of one graph."""

    canon: str
    n: int
    diam: int
    v1_size: int
    mult_minus1: int
    mult_minus2: int
    mult_zero: int
    charpoly: tuple  # ascending integer coefficients, length n+1
    family_tags: tuple

    @property
    def charpoly_digest(self) -> str:
        payload = ",".join(map(str, self.charpoly)).encode()
        return hashlib.blake2b(payload, digest_size=8).hexdigest()

    def to_line(self) -> str:
        inv = ",".join([
            str(self.n), str(self.diam), str(self.v1_size),
            str(self.mult_minus1), str(self.mult_minus2), str(self.mult_zero),
            ";".join(self.family_tags),
        ])
        poly = ",".join(map(str, self.charpoly))
        return f"{self.canon}\t{inv}\t{poly}"

    @classmethod
    def from_line(cls, line: str):
        canon, inv, poly = line.rstrip("\n").split("\t")
        fields = inv.split(",")
        tags = tuple(t for t in fields[6].split(";") if t)
        return cls(
            canon=canon,
            n=int(fields[0]), diam=int(fields[1]), v1_size=int(fields[2]),
            mult_minus1=int(fields[3]), mult_minus2=int(fields[4]),
            mult_zero=int(fields[5]),
            charpoly=tuple(int(c) for c in poly.split(",")),
            family_tags=tags,
        )


def _classify_chunk(args):
    n, bits_list = args
    out = []
    for bits in bits_list:
        g = bits_to_graph(n, bits)
        out.append((bits, kernels.census_stats(n, g.adj)))
    return out


def family_tag_map(n):
    """canonical bits -> sorted tag names of the multiplicity-family graphs
    of order n."""
    tags = {}
    for name, g in theorem1_families(n):
        if g.n > CANONICAL_LIMIT:
            continue
        bits = kernels.canon_bits(g.n, g.adj)
        tags.setdefault(bits, set()).add(name)
    return {bits: tuple(sorted(names)) for bits, names in tags.items()}


def classify(n, store_path=None, jobs=1):
    """One CensusRecord per connected graph of order n, sorted by canonical
    form; optionally persisted (idempotent: re-runs write identical bytes)."""
    level = _level_bits(n, jobs)
    tag_map = family_tag_map(n)
    records = []
    if jobs > 1 and len(level) >= jobs:
        chunks = [(n, level[i::jobs * 4]) for i in range(jobs * 4)]
        with Pool(jobs) as pool:
            results = [item for part in pool.imap_unordered(_classify_chunk, chunks)
                       for item in part]
        results.sort()
    else:
        results = _classify_chunk((n, level))
    for bits, (diam, v1, m1, m2, m0, coeffs) in results:
        records.append(CensusRecord(
            canon=bits_to_graph6(n, bits),
            n=n, diam=diam, v1_size=v1,
            mult_minus1=m1, mult_minus2=m2, mult_zero=m0,
            charpoly=coeffs,
            family_tags=tag_map.get(bits, ()),
        ))
    records.sort(key=lambda r: r.canon)
    if store_path is not None:
        write_store(records, store_path)
    return records


def write_store(records, path):
    try:
        with open(path, "w", encoding="ascii") as fh:
            for rec in records:
                fh.write(rec.to_line() + "\n")
    except OSError as exc:
        raise OSError(f"cannot write census store {path}: {exc}") from exc


def read_store(path):
    try:
        with open(path, "r", encoding="ascii") as fh:
            return [CensusRecord.from_line(line) for line in fh if line.strip()]
    except OSError as exc:
        raise OSError(f"cannot read census store {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# queries

def query(records, predicate=None, **field_eq):
    """Filter records by a callable predicate and/or field equality kwargs."""
    out = []
    for rec in records:
        if predicate is not None and not predicate(rec):
            continue
        if any(getattr(rec, key) != val for key, val in field_eq.items()):
            continue
        out.append(rec)
    return out


def cospectral_mates(records, target: CensusRecord):
    """Records sharing the target's exact characteristic polynomial but not
    its canonical form (witnesses against spectral determination)."""
    return [r for r in records
            if r.charpoly == target.charpoly and r.canon != target.canon]


def multiplicity_of(rec: CensusRecord, xi) -> int:
    """Exact multiplicity of any rational xi, answered from the stored
    characteristic polynomial (the record fields cover -1, -2, 0)."""
    from fractions import Fraction

    from .exactalg import IntPolynomial, root_multiplicity

    return root_multiplicity(IntPolynomial(rec.charpoly), Fraction(xi))


def integer_root_multiplicities(coeffs):
    """All integer roots of the monic ascending-coefficient polynomial with
    their multiplicities, by repeated exact synthetic division."""
    out = {}
    work = list(coeffs)
    # strip x^k
    zero_mult = 0
    while len(work) > 1 and work[0] == 0:
        work = work[1:]
        zero_mult += 1
    if zero_mult:
        out[0] = zero_mult
    if len(work) <= 1:
        return out
    tail = abs(work[0])
    candidates = sorted({d for d in range(1, tail + 1) if tail % d == 0})
    for base in candidates:
        for r in (base, -base):
            mult = 0
            while len(work) > 1:
                # synthetic division by (x - r), integer-exact for monic input
                acc = 0
                quot = []
                for c in reversed(work[1:]):
                    acc = acc * r + c
                    quot.append(acc)
                if acc * r + work[0] != 0:
                    break
                work = quot[::-1]
                mult += 1
            if mult:
                out[r] = mult
    return out


def high_multiplicity_hits(records, i_bound=3, exclude=(-2, -1, 0)):
    """Exploratory scan: records with an integer eigenvalue xi outside
    ``exclude`` of multiplicity >= n - i_bound, plus a note when the
    non-integer residual spectrum is large enough that a non-integer xi could
    in principle reach that multiplicity.  Informational only."""
    hits = []
    for rec in records:
        roots = integer_root_multiplicities(rec.charpoly)
        threshold = rec.n - i_bound
        if threshold < 1:
            continue
        flagged = {xi: m for xi, m in roots.items()
                   if m >= threshold and xi not in exclude}
        residual = rec.n - sum(roots.values())
        note = ""
        if residual >= 2 * threshold:
            note = f"non-integer residual of degree {residual}"
        if flagged or note:
            hits.append((rec, flagged, note))
    return hits
