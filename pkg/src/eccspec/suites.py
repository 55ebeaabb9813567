"""Verification suites: structured family checks, census scans, table
identities, and randomized property checks, all emitting machine-readable
reports.

Every check is exact; random corpora come from one seeded generator whose
seed is recorded in the report, so failures are reproducible.  A suite passes
iff all of its entries pass.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import census as census_mod
from .eccentricity import (
    acharpoly,
    ecc_matrix,
    hl_index,
    matrix_multiplicity,
    median_eigenvalue_is,
    multiplicity,
    twin_eigenvalue_predictions,
)
from .exactalg import (
    IntMatrix,
    IntPolynomial,
    SymmetricSpectrum,
    bareiss_det,
    bareiss_rank,
    berkowitz_charpoly,
    inertia_at,
    lagrange_interpolate,
    poly_divide_exact,
    root_multiplicity,
)
from .graphs import (
    Graph,
    bfs_metrics,
    complete,
    complete_multipartite,
    cycle,
    graph6_decode,
    join,
    join_clique_with,
    max_mult_families,
    mixed_extension_star,
    path,
    theorem1_families,
)
from .quotient import BlockSpec, spec_charpoly, realize

REPORT_FORMAT_VERSION = 1

MAX_FAMILY_ORDER = 40
CENSUS_MAX = 9


@dataclass(frozen=True)
class CheckEntry:
    claim: str
    instance: str
    expected: str
    actual: str
    passed: bool

    def to_dict(self):
        return {"claim": self.claim, "instance": self.instance,
                "expected": self.expected, "actual": self.actual,
                "pass": self.passed}

    @classmethod
    def from_dict(cls, d):
        return cls(d["claim"], d["instance"], d["expected"], d["actual"],
                   d["pass"])


@dataclass
class VerificationReport:
    suite: str
    params: dict
    entries: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def check(self, claim, instance, expected, actual):
        entry = CheckEntry(claim, instance, str(expected), str(actual),
                           str(expected) == str(actual))
        self.entries.append(entry)
        return entry.passed

    def check_bool(self, claim, instance, ok, detail=""):
        entry = CheckEntry(claim, instance, "pass", detail if detail else
                           ("pass" if ok else "fail"), bool(ok))
        self.entries.append(entry)
        return entry.passed

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    @property
    def counts(self):
        passed = sum(1 for e in self.entries if e.passed)
        return {"total": len(self.entries), "passed": passed,
                "failed": len(self.entries) - passed}

    def to_dict(self):
        return {
            "version": REPORT_FORMAT_VERSION,
            "suite": self.suite,
            "params": self.params,
            "entries": [e.to_dict() for e in self.entries],
            "counts": self.counts,
            "notes": list(self.notes),
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        rep = cls(d["suite"], d["params"],
                  [CheckEntry.from_dict(e) for e in d["entries"]],
                  list(d["notes"]), d["wall_time_s"])
        return rep

    def text_summary(self):
        lines = [f"suite {self.suite}: "
                 f"{self.counts['passed']}/{self.counts['total']} checks passed"
                 f" in {self.wall_time_s:.2f}s"]
        for e in self.entries:
            mark = "ok  " if e.passed else "FAIL"
            lines.append(f"  {mark} {e.claim} [{e.instance}] "
                         f"expected={e.expected} actual={e.actual}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time_s = time.perf_counter() - t0
        return rep
    return wrapper


def _census_records(n, cache=None, jobs=1):
    if cache is not None and n in cache:
        return cache[n]
    recs = census_mod.classify(n, jobs=jobs)
    if cache is not None:
        cache[n] = recs
    return recs


# ---------------------------------------------------------------------------
# multiplicity characterization suite (parts i..v)

THM1_DEFAULT_N = {
    "i": tuple(range(2, 10)),
    "ii": tuple(range(4, 10)),
    "iii": tuple(range(4, 10)),
    "iv": (9, 16, 20),
    "v": (16, 20, 33),
}


def _expected_class(part, n):
    """The family graphs that should attain the part's multiplicity at order
    n, as (name, Graph) pairs, plus the multiplicity value.  Below the
    family's minimum constructible order the list is empty."""
    if part == "i":
        return n - 1, [(f"K{n}", complete(n))]
    if part == "ii":
        return n - 2, []
    if part == "iii":
        if n < 3:
            return n - 3, []
        fams = [(f"K{n-2}v2K1", join_clique_with(n - 2, "2K1"))]
        if n == 4:
            fams.append(("P4", path(4)))
        return n - 3, fams
    if part == "iv":
        if n < 4:
            return n - 4, []
        return n - 4, [(f"K{n-3}vK2uK1", join_clique_with(n - 3, "K2uK1")),
                       (f"K{n-3}v3K1", join_clique_with(n - 3, "3K1"))]
    if part == "v":
        if n < 6:
            return n - 5, []
        return n - 5, max_mult_families(n)
    raise ValueError(f"unknown part {part!r}")


@_timed
def suite_theorem1(part, n_values=None, census_cache=None, jobs=1):
    """Characterization of connected graphs with m(-1) = n-i for one i.

    The membership direction (every named family graph attains the claimed
    multiplicity) runs at any order up to 40; the exhaustiveness direction
    (no other graph attains it) scans the census and is range-enforced:
    parts i and ii over 2..9 / 4..9, part iii over 4..9, part iv at 9.
    """
    if part not in THM1_DEFAULT_N:
        raise ValueError(f"unknown part {part!r}; expected one of i..v")
    if n_values is None:
        n_values = THM1_DEFAULT_N[part]
    n_values = tuple(sorted(set(int(n) for n in n_values)))
    if any(n > MAX_FAMILY_ORDER for n in n_values):
        raise ValueError(f"family checks support n <= {MAX_FAMILY_ORDER}")
    if part == "ii" and any(n > CENSUS_MAX for n in n_values):
        raise ValueError("the nonexistence part is a pure census scan; "
                         f"it needs n <= {CENSUS_MAX}")
    rep = VerificationReport(f"thm1-{part}", {"part": part, "n": list(n_values)})
    for n in n_values:
        target, fams = _expected_class(part, n)
        if target < 0 or (part != "ii" and not fams):
            rep.notes.append(f"n={n} below the family's minimum order; skipped")
            continue
        for name, g in fams:
            rep.check(f"m(-1) = n-{n - target} for every member of the "
                      "characterized family",
                      f"n={n} {name}", target, multiplicity(g, -1))
        census_ok = (
            (part in ("i", "ii") and n <= CENSUS_MAX)
            or (part == "iii" and 4 <= n <= CENSUS_MAX)
            or (part == "iv" and n == CENSUS_MAX)
        )
        if census_ok:
            recs = _census_records(n, census_cache, jobs)
            hits = sorted(r.canon for r in recs if r.mult_minus1 == target)
            expected = sorted(census_mod.canonical_form(g).canon
                              for _, g in fams)
            rep.check("no connected graph outside the characterized family "
                      f"attains m(-1) = n-{n - target}",
                      f"n={n} census scan", expected, hits)
            if part in ("iii", "iv"):
                by_canon = {r.canon: r for r in recs}
                for name, g in fams:
                    rec = by_canon[census_mod.canonical_form(g).canon]
                    mates = census_mod.cospectral_mates(recs, rec)
                    rep.check("the family member is determined by its "
                              "eccentricity spectrum (no cospectral mates)",
                              f"n={n} {name}", [], [m.canon for m in mates])
        elif part == "v" and n <= CENSUS_MAX:
            recs = _census_records(n, census_cache, jobs)
            klass = [(r.canon, r.family_tags) for r in recs
                     if r.mult_minus1 == target]
            rep.notes.append(
                f"n={n} is below the n>=16 validity threshold; census reports "
                f"{len(klass)} graphs with m(-1)=n-5 (informational only): "
                f"{klass}")
    return rep


# ---------------------------------------------------------------------------
# characteristic-polynomial table suite

_X = IntPolynomial((0, 1))
_XP1 = IntPolynomial((1, 1))
_XP2 = IntPolynomial((2, 1))
_QUAD = IntPolynomial((-4, 2, 1))  # x^2 + 2x - 4


@dataclass(frozen=True)
class TableRow:
    label: str
    clique: int  # clique order is n - clique
    descriptor: str
    one_exp: int  # exponent of (x+1) is n - one_exp
    fixed: tuple  # additional fixed factors as (IntPolynomial, exponent)
    quotient_affine: tuple  # ascending coeffs as (a, b) meaning a*n + b
    informational: str = ""


TABLE_ROWS = (
    TableRow("K{n-4}v4K1", 4, "4K1", 5, ((_XP2, 3),),
             ((2, -14), (-1, -1), (0, 1))),
    TableRow("K{n-4}v2K1uK2", 4, "2K1uK2", 5, ((_XP2, 1), (_X, 1)),
             ((4, -32), (-2, -10), (-1, 3), (0, 1))),
    TableRow("K{n-4}vP3uK1", 4, "P3uK1", 5, ((_XP2, 1),),
             ((0, 8), (4, -20), (-2, -6), (-1, 3), (0, 1))),
    TableRow("K{n-4}v2K2", 4, "2K2", 5, ((_X, 2), (_XP2, 1)),
             ((-2, 6), (-1, 3), (0, 1))),
    TableRow("K{n-4}vP4", 4, "P4", 5, (),
             ((0, 16), (8, -16), (0, -12), (-4, 4), (-1, 5), (0, 1))),
    TableRow("K{n-4}vK3uK1", 4, "K3uK1", 5, ((_X, 2),),
             ((0, -12), (-4, 4), (-1, 5), (0, 1))),
    TableRow("K{n-4}vC4", 4, "C4", 5, ((_XP2, 2),),
             ((4, -12), (0, 0), (-1, 1), (0, 1))),
    TableRow("K{n-5}vC5", 5, "C5", 5, ((_QUAD, 2),),
             ((-1, 1), (0, 1))),
    TableRow("K{n-5}vK1uP4", 5, "K1uP4", 5, ((_QUAD, 1),),
             ((4, -36), (-2, -10), (-1, 3), (0, 1))),
    TableRow("K{n-5}vH1", 5, "H1", 5, ((_QUAD, 1),),
             ((4, -20), (-2, -2), (-1, 3), (0, 1))),
    TableRow("K{n-3}vK2uK1", 3, "K2uK1", 4, ((_X, 1),),
             ((0, -8), (-3, 1), (-1, 4), (0, 1))),
    TableRow("K{n-3}v3K1", 3, "3K1", 4, ((_XP2, 2),),
             ((1, -7), (-1, 0), (0, 1))),
    # The published 2K2 row fails its (x+2) division; this derived row is the
    # identity the matrix actually satisfies and is reported separately.
    TableRow("K{n-4}v2K2", 4, "2K2", 5, ((_X, 2),),
             ((0, -16), (-4, 0), (-1, 5), (0, 1)),
             informational="derived replacement for the failing printed row"),
)


def _row_factors(row: TableRow, n: int) -> IntPolynomial:
    out = _XP1 ** (n - row.one_exp)
    for poly, k in row.fixed:
        out = out * (poly ** k)
    return out


def _row_claim(row: TableRow) -> str:
    fixed = f"(x+1)^(n-{row.one_exp})"
    for poly, k in row.fixed:
        part = "x" if poly == _X else ("(x+2)" if poly == _XP2 else "(x^2+2x-4)")
        fixed += f" * {part}" + (f"^{k}" if k > 1 else "")
    quot = ", ".join(f"{a}n+{b}" if a else str(b)
                     for a, b in row.quotient_affine)
    claim = (f"charpoly factors as {fixed} times a quotient with ascending "
             f"coefficients [{quot}]")
    if row.informational:
        claim = f"[{row.informational}] {claim}"
    return claim


@_timed
def suite_tables(n_samples=(16, 17, 18, 19, 20)):
    """Exact verification of the published characteristic-polynomial table
    rows as polynomial identities in the order n.

    For each row: compute the exact charpoly at every sample order, divide
    out the stated fixed factors, interpolate each quotient coefficient as an
    affine function of n from two samples, confirm agreement at the others,
    and match the printed affine forms.
    """
    n_samples = tuple(sorted(set(int(n) for n in n_samples)))
    if len(n_samples) < 3:
        raise ValueError("need at least 3 sample orders")
    if min(n_samples) < 16:
        raise ValueError("table identities are stated for n >= 16")
    rep = VerificationReport("tables", {"n": list(n_samples)})
    rep.notes.append(
        "the order-5 join rows (C5, K1uP4, H1) are published with a K_{n-4} "
        "clique label; the polynomial degrees require K_{n-5}, which is what "
        "this suite builds and verifies")
    for row in TABLE_ROWS:
        claim = _row_claim(row)
        quotients = {}
        failure = None
        for n in n_samples:
            g = join_clique_with(n - row.clique, row.descriptor)
            q = poly_divide_exact(acharpoly(g), _row_factors(row, n))
            if q is None:
                failure = (f"fixed factor does not divide charpoly at n={n} "
                           f"(row {row.label})")
                break
            if q.degree != len(row.quotient_affine) - 1:
                failure = (f"quotient degree {q.degree} != "
                           f"{len(row.quotient_affine) - 1} at n={n}")
                break
            quotients[n] = q
        if failure is not None:
            rep.check_bool(claim, f"rows at n={list(n_samples)}", False, failure)
            if row.label == "K{n-4}v2K2" and not row.informational:
                rep.notes.append(
                    "the printed 2K2 row is erroneous: its (x+2) factor never "
                    "divides; the derived identity with (x^2-(n-1)x-4)(x+4) "
                    "-- reported as a separate informational row -- is what "
                    "the matrix satisfies")
            continue
        n0, n1 = n_samples[0], n_samples[1]
        fitted = []
        for j in range(len(row.quotient_affine)):
            coeffs = lagrange_interpolate([
                (n0, quotients[n0].coeffs[j] if j <= quotients[n0].degree else 0),
                (n1, quotients[n1].coeffs[j] if j <= quotients[n1].degree else 0),
            ])
            b = coeffs[0]
            a = coeffs[1] if len(coeffs) > 1 else Fraction(0)
            fitted.append((a, b))
        ok = True
        detail = "matches printed affine forms at all samples"
        for n in n_samples[2:]:
            for j, (a, b) in enumerate(fitted):
                got = quotients[n].coeffs[j] if j <= quotients[n].degree else 0
                if a * n + b != got:
                    ok = False
                    detail = f"interpolated coefficient {j} disagrees at n={n}"
        for j, (a, b) in enumerate(fitted):
            pa, pb = row.quotient_affine[j]
            if (Fraction(pa), Fraction(pb)) != (a, b):
                ok = False
                detail = (f"coefficient {j} is {a}n+{b}, printed form says "
                          f"{pa}n+{pb}")
        rep.check_bool(claim, f"n in {list(n_samples)}", ok, detail)
    return rep


# ---------------------------------------------------------------------------
# randomized / census property suite

LEMMA_TRIALS = {
    "unit_diag_rank": 500,
    "block_identity": 200,
    "interlacing": 200,
    "mixed_stars": 100,
    "multipartite": 100,
    "triangle": 1000,
    "rank_charpoly": 500,
    "poly_roundtrip": 200,
}


def _random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def _random_connected(rng, nmax=10):
    while True:
        n = rng.randint(2, nmax)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.9))
        from .graphs import is_connected
        if is_connected(g):
            return g


def _random_symmetric(rng, nmax=8, bound=5):
    n = rng.randint(2, nmax)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
    return IntMatrix(rows)


def _bracket_ge(spec_a, i_a, spec_b, i_b, width=Fraction(1, 2 ** 40)):
    """Exact-where-possible decision of xi_{i_a}(A) >= xi_{i_b}(B).

    Disjoint brackets decide immediately; a rational-certified side is
    decided by an inertia count on the other; a persistent both-irrational
    overlap is treated as a tie (the compared values agree to 2^-40).
    """
    ba = spec_a.bracket(i_a, width)
    bb = spec_b.bracket(i_b, width)
    if ba.is_point():
        return spec_b.count_gt(ba.lo) < i_b  # xi_b <= ba
    if bb.is_point():
        return spec_a.count_ge(bb.lo) >= i_a  # xi_a >= bb
    if ba.lo >= bb.hi:
        return True
    if ba.hi < bb.lo:
        return False
    return True  # overlap at width 2^-40: tie


@_timed
def suite_lemmas(seed=0, trials=None, census_cache=None, jobs=1):
    """Randomized and census-wide property checks backing the supporting
    results: full rank of unit-diagonal {0,a} matrices, the equitable
    quotient spectrum identity, eigenvalue interlacing and the principal-
    submatrix multiplicity bound, twin-class eigenvalue predictions, the
    mixed-star and complete-multipartite multiplicity formulas, the
    eccentricity-level structure facts, and the diameter bounds."""
    counts = dict(LEMMA_TRIALS)
    if trials is not None:
        counts = {k: max(1, int(trials)) for k in counts}
    rng = random.Random(seed)
    rep = VerificationReport("lemmas", {"seed": seed, "trials": counts})

    # full rank of symmetric unit-diagonal matrices with off-diagonals in {0,a}
    bad = []
    for t in range(counts["unit_diag_rank"]):
        n = rng.randint(1, 12)
        a = rng.choice((2, 3, 5))
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = a * rng.randint(0, 1)
        if bareiss_rank(IntMatrix(rows)) != n:
            bad.append(t)
    rep.check("symmetric unit-diagonal matrices with off-diagonal entries in "
              "{0,a}, a>=2, have full rank",
              f"{counts['unit_diag_rank']} seeded trials, n<=12", [], bad)

    # equitable quotient spectrum identity on random block specs
    bad = []
    for t in range(counts["block_identity"]):
        l = rng.randint(1, 4)
        sizes = tuple(rng.randint(1, 5) for _ in range(l))
        s = [[0] * l for _ in range(l)]
        for i in range(l):
            s[i][i] = rng.randint(0, 3)
            for j in range(i + 1, l):
                s[i][j] = s[j][i] = rng.randint(0, 3)
        p = tuple(rng.randint(-3, 3) for _ in range(l))
        spec = BlockSpec(sizes, tuple(map(tuple, s)), p)
        if berkowitz_charpoly(realize(spec)) != spec_charpoly(spec):
            bad.append(spec.to_text())
    rep.check("P(M) = P(Q) * prod (x - p_i)^(n_i - 1) for J/I block matrices",
              f"{counts['block_identity']} seeded random specs", [], bad)

    # interlacing and the principal-submatrix multiplicity bound
    bad_inter = []
    bad_bound = []
    for t in range(counts["interlacing"]):
        m = _random_symmetric(rng)
        n = m.n
        k = rng.randint(1, n)
        idx = sorted(rng.sample(range(n), k))
        sub = m.principal_submatrix(idx)
        spec_m = SymmetricSpectrum(m)
        spec_s = SymmetricSpectrum(sub)
        for i in range(1, k + 1):
            if not _bracket_ge(spec_m, i, spec_s, i):
                bad_inter.append((t, i, "upper"))
            if not _bracket_ge(spec_s, i, spec_m, n - k + i):
                bad_inter.append((t, i, "lower"))
        for xi in (-2, -1, 0, 1):
            mm = n - bareiss_rank(m.shifted(1, xi))
            ms = k - bareiss_rank(sub.shifted(1, xi))
            if mm > n - k + ms:
                bad_bound.append((t, xi))
    rep.check("principal submatrices interlace: xi_i(M) >= xi_i(M*) >= "
              "xi_{n-k+i}(M)",
              f"{counts['interlacing']} seeded random symmetric matrices",
              [], bad_inter)
    rep.check("m_M(xi) <= n - k + m_M*(xi) for principal submatrices, "
              "xi in {-2,-1,0,1}",
              f"{counts['interlacing']} seeded random symmetric matrices",
              [], bad_bound)

    # mixed extensions of a star: m(-1) = t0 - 1.  The published "exactly one
    # positive eigenvalue" iff is true only in the only-if direction (checked
    # census-wide below); K4 v 4K1 = S(4,-4) already has two positive
    # eigenvalues, so the sampled direction asserts the multiplicity only.
    bad = []
    for t in range(counts["mixed_stars"]):
        t0 = rng.randint(1, 5)
        while True:
            p = rng.randint(0, 5)
            q = rng.randint(0, 3)
            if p + 2 * q + t0 > 14:
                continue
            # skip parameterizations that collapse to a complete graph
            if (q == 0 and p <= 1) or (q == 1 and p == 0):
                continue
            break
        ts = [rng.randint(2, 4) for _ in range(q)]
        g = mixed_extension_star(t0, p, ts)
        if g.n > 14:
            continue
        e = ecc_matrix(g)
        if matrix_multiplicity(e.m, -1) != t0 - 1:
            bad.append((t0, p, tuple(ts)))
    rep.check("star mixed extensions have m(-1) = t0 - 1",
              f"{counts['mixed_stars']} seeded samples", [], bad)
    rep.notes.append(
        "the published characterization of one positive eigenvalue is an "
        "equivalence; its membership direction fails already at n=8 "
        "(K3v5K1, K4v4K1, K5v3K1 are star mixed extensions with two "
        "positive eigenvalues) while the direction the multiplicity proofs "
        "use -- one positive eigenvalue implies the star join shape -- "
        "holds census-wide and is checked below")

    # complete multipartite joins: m(-1), m(-2), equal-part eigenvalues
    bad = []
    for t in range(counts["multipartite"]):
        r = rng.randint(0, 4)
        k = rng.randint(1 if r >= 1 else 2, 5)
        parts = sorted((rng.randint(2, 5) for _ in range(k)), reverse=True)
        if r + sum(parts) > 16:
            continue
        core = complete_multipartite(parts) if k >= 2 else \
            Graph(parts[0])  # single part: independent set
        g = join(complete(r), core) if r >= 1 else core
        e = ecc_matrix(g)
        n = g.n
        if r >= 1 and k >= 2:
            if matrix_multiplicity(e.m, -1) != r - 1:
                bad.append(("m(-1)", r, tuple(parts)))
        if r >= 1:
            m2 = matrix_multiplicity(e.m, -2)
            if ((r, k) not in ((1, 4), (2, 3))) != (m2 == n - r - k):
                bad.append(("m(-2)", r, tuple(parts)))
            sizes = sorted(set(parts))
            for v in sizes:
                cnt = parts.count(v)
                if matrix_multiplicity(e.m, 2 * v - 2) != cnt - 1:
                    bad.append(("equal-part", r, tuple(parts), v))
        else:
            expected = IntPolynomial((2, 1)) ** (n - k)
            for v in parts:
                expected = expected * IntPolynomial.x_minus(2 * v - 2)
            if berkowitz_charpoly(e.m) != expected:
                bad.append(("spectrum", r, tuple(parts)))
    rep.check("complete multipartite joins match the published multiplicity "
              "formulas for -1, -2, and equal-part eigenvalues",
              f"{counts['multipartite']} seeded samples", [], bad)

    # split graphs K_r v (n-r)K_1: m(-1) = r - 1
    bad = []
    for r in range(1, 9):
        for extra in range(2, 7):
            g = join_clique_with(r, "2K1") if extra == 2 else \
                join(complete(r), Graph(extra))
            if multiplicity(g, -1) != r - 1:
                bad.append((r, extra))
    rep.check("K_r joined to an independent set has m(-1) = r - 1",
              "r in 1..8, independent part 2..6", [], bad)

    # triangle inequality over random connected graphs
    bad = []
    for t in range(counts["triangle"]):
        g = _random_connected(rng, 10)
        met = bfs_metrics(g)
        for u in range(g.n):
            for v in range(g.n):
                for w in range(g.n):
                    if met.dist[u][w] > met.dist[u][v] + met.dist[v][w]:
                        bad.append((t, u, v, w))
    rep.check("hop distances satisfy the triangle inequality",
              f"{counts['triangle']} seeded random connected graphs", [], bad)

    # rank / charpoly consistency and coefficient identities
    bad = []
    for t in range(counts["rank_charpoly"]):
        m = _random_symmetric(rng)
        cp = berkowitz_charpoly(m)
        if bareiss_rank(m) != m.n - root_multiplicity(cp, 0):
            bad.append((t, "rank"))
        if cp.coeffs[m.n - 1] != -m.trace():
            bad.append((t, "trace"))
        if cp.coeffs[0] != (-1) ** m.n * bareiss_det(m):
            bad.append((t, "det"))
    rep.check("rank = n - m(0), charpoly subleading coefficient = -trace, "
              "constant term = (-1)^n det",
              f"{counts['rank_charpoly']} seeded random symmetric matrices",
              [], bad)

    # inertia monotonicity in the shift point
    bad = []
    for t in range(50):
        m = _random_symmetric(rng, 7, 4)
        cs = sorted(rng.randint(-12, 12) for _ in range(3))
        plus = [inertia_at(m, c).n_plus for c in cs]
        if any(plus[i] < plus[i + 1] for i in range(len(plus) - 1)):
            bad.append(t)
    rep.check("raising the shift point never increases the count of larger "
              "eigenvalues", "50 seeded random matrices", [], bad)

    # exact polynomial division round trip
    bad = []
    for t in range(counts["poly_roundtrip"]):
        a = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]
                          + [1])
        b = IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]
                          + [1])
        if poly_divide_exact(a * b, b) != a:
            bad.append(t)
    rep.check("poly_divide_exact(a*b, b) = a for monic a, b",
              f"{counts['poly_roundtrip']} seeded random pairs", [], bad)

    _census_property_checks(rep, census_cache, jobs)
    _diameter_bound_checks(rep)
    return rep


def _census_property_checks(rep, census_cache, jobs):
    """Census-wide structure checks at orders up to 8."""
    from .graphs import is_mixed_star_shape

    bad_levels = []
    bad_v1card = []
    bad_empty_v1 = []
    bad_diam_bound = []
    bad_twins = []
    bad_minimum = []
    bad_mults = []
    bad_complete = []
    bad_ecc_def = []
    bad_onepos = []
    for n in range(2, 9):
        recs = _census_records(n, census_cache, jobs)
        kn_canon = census_mod.canonical_form(complete(n)).canon
        for rec in recs:
            g = graph6_decode(rec.canon)
            met = bfs_metrics(g)
            k = n - rec.mult_minus1
            if rec.v1_size and rec.diam > 2:
                bad_levels.append(rec.canon)
            if (rec.diam == 1) != (rec.canon == kn_canon):
                bad_complete.append(rec.canon)
            if rec.v1_size and rec.canon != kn_canon:
                if rec.v1_size not in (n - k, n - k + 1):
                    bad_v1card.append(rec.canon)
            if rec.v1_size == 0 and rec.diam >= 2:
                kmax = (n - 1) // (rec.diam - 1) if rec.diam > 1 else 0
                if kmax >= 1 and rec.mult_minus1 > n - kmax - 1:
                    bad_empty_v1.append(rec.canon)
            if rec.diam >= 4 and rec.mult_minus1 > n - 5:
                bad_diam_bound.append(rec.canon)
            if rec.mult_minus1 == n - 5 and not 2 <= rec.diam <= 4:
                bad_diam_bound.append(rec.canon)
            e = ecc_matrix(g)
            for xi, lower in twin_eigenvalue_predictions(g):
                if matrix_multiplicity(e.m, xi) < lower:
                    bad_twins.append((rec.canon, str(xi)))
            ine = inertia_at(e.m, -1)
            if ((ine.n_minus == 0 and ine.n_zero >= 1)
                    != (rec.canon == kn_canon)):
                bad_minimum.append(rec.canon)
            if inertia_at(e.m, 0).n_plus == 1 and not is_mixed_star_shape(g):
                bad_onepos.append(rec.canon)
            cp = IntPolynomial(rec.charpoly)
            if (root_multiplicity(cp, -1) != rec.mult_minus1
                    or root_multiplicity(cp, -2) != rec.mult_minus2
                    or root_multiplicity(cp, 0) != rec.mult_zero):
                bad_mults.append(rec.canon)
            for u in range(n):
                for v in range(u + 1, n):
                    keep = met.dist[u][v] == min(met.ecc[u], met.ecc[v])
                    if (e.m[u, v] != 0) != keep:
                        bad_ecc_def.append(rec.canon)
    rep.check("a vertex of eccentricity 1 forces diameter <= 2",
              "census n<=8", [], bad_levels)
    rep.check("diameter 1 exactly for the complete graph",
              "census n<=8", [], bad_complete)
    rep.check("|V1| is n-k or n-k+1 when V1 is nonempty, k = n - m(-1)",
              "census n<=8", [], bad_v1card)
    rep.check("empty V1 with n >= k(d-1)+1 forces m(-1) <= n-k-1",
              "census n<=8", [], bad_empty_v1)
    rep.check("diameter >= 4 forces m(-1) <= n-5, and m(-1) = n-5 forces "
              "2 <= d <= 4", "census n<=8", [], bad_diam_bound)
    rep.check("twin classes force their predicted eigenvalue multiplicities",
              "census n<=8", [], bad_twins)
    rep.check("-1 is the smallest eigenvalue exactly for the complete graph",
              "census n<=8", [], bad_minimum)
    rep.check("exactly one positive eigenvalue implies the star-mixed-"
              "extension join shape", "census n<=8", [], bad_onepos)
    rep.check("rank-based multiplicities equal charpoly root multiplicities",
              "census n<=8, xi in {-2,-1,0}", [], bad_mults)
    rep.check("nonzero matrix entries are exactly the distances attaining "
              "min eccentricity", "census n<=8", [], bad_ecc_def)


def _diameter_bound_checks(rep):
    """m(-1) <= n-5 for diameter >= 4 on structured graphs up to n=14."""
    bad = []
    cases = []
    for n in range(5, 15):
        cases.append((f"P{n}", path(n)))
    for n in range(8, 15):
        cases.append((f"C{n}", cycle(n)))
    for rows_, cols in ((2, 5), (2, 6), (2, 7), (3, 5)):
        n = rows_ * cols
        edges = []
        for i in range(rows_):
            for j in range(cols):
                v = i * cols + j
                if j + 1 < cols:
                    edges.append((v, v + 1))
                if i + 1 < rows_:
                    edges.append((v, v + cols))
        cases.append((f"grid{rows_}x{cols}", Graph(n, edges)))
    # spider trees (three legs from a center)
    for legs in ((2, 2, 2), (3, 3, 3), (4, 4, 4), (2, 3, 4)):
        edges = []
        nxt = 1
        for leg in legs:
            prev = 0
            for _ in range(leg):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        cases.append((f"spider{legs}", Graph(nxt, edges)))
    for name, g in cases:
        met = bfs_metrics(g)
        if met.diam >= 4 and multiplicity(g, -1) > g.n - 5:
            bad.append(name)
    rep.check("diameter >= 4 forces m(-1) <= n-5",
              "paths, cycles, grids, spiders up to n=14 by direct rank",
              [], bad)


# ---------------------------------------------------------------------------
# median eigenvalue / HL-index suite

@_timed
def suite_median(n_values=(20,)):
    """Median eigenvalues of the characterized families: for every family
    graph at each order, both median positions carry -1 and the HL index is
    exactly 1."""
    n_values = tuple(sorted(set(int(n) for n in n_values)))
    if any(n < 11 for n in n_values):
        raise ValueError("median checks need n >= 11 so that m(-1) reaches "
                         "the median positions")
    rep = VerificationReport("median", {"n": list(n_values)})
    for n in n_values:
        for name, g in theorem1_families(n):
            at_h, at_l = median_eigenvalue_is(g, -1)
            rep.check("both median eigenvalues equal -1",
                      f"n={n} {name}", (True, True), (at_h, at_l))
            iv = hl_index(g)
            rep.check("the HL index is exactly 1",
                      f"n={n} {name}", "[1, 1]", f"[{iv.lo}, {iv.hi}]")
    return rep


# ---------------------------------------------------------------------------
# registry

def run_suite(name, n_values=None, seed=0, trials=None, census_cache=None,
              jobs=1):
    if name.startswith("thm1-"):
        part = name.split("-", 1)[1]
        return suite_theorem1(part, n_values, census_cache=census_cache,
                              jobs=jobs)
    if name == "tables":
        return suite_tables(n_values if n_values else (16, 17, 18, 19, 20))
    if name == "lemmas":
        return suite_lemmas(seed=seed, trials=trials,
                            census_cache=census_cache, jobs=jobs)
    if name == "median":
        return suite_median(n_values if n_values else (20,))
    raise ValueError(f"unknown suite {name!r}")


ALL_SUITES = ("thm1-i", "thm1-ii", "thm1-iii", "thm1-iv", "thm1-v",
              "tables", "lemmas", "median")
