"""Arbitrary-precision integer matrices and polynomials: rank, characteristic
polynomials, inertia at rational shift points, and eigenvalue bracketing.

Every multiplicity question is answered through exact integer or rational
arithmetic -- fraction-free elimination for rank, the division-free
Samuelson-Berkowitz recurrence for characteristic polynomials, and symmetric
rational elimination for inertia.  There is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

DEFAULT_BRACKET_WIDTH = Fraction(1, 2 ** 20)


class IntMatrix:
    """Dense square matrix of Python ints; immutable."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_symmetric(self):
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.n))

    def shifted(self, q, p):
        """q*M - p*I; the integer matrix whose kernel dimension is m(p/q)."""
        return IntMatrix([[q * self.rows[i][j] - (p if i == j else 0)
                           for j in range(self.n)] for i in range(self.n)])

    def principal_submatrix(self, indices):
        idx = list(indices)
        return IntMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"


class IntPolynomial:
    """Univariate polynomial with int coefficients, ascending degree order.

    Normalized: no trailing zero coefficients; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x_minus(cls, r):
        return cls((-r, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def ascending_list(self):
        """Canonical printed form: ascending coefficient list."""
        return list(self.coeffs) if self.coeffs else [0]

    def descending_csv(self):
        """CLI rendering: comma-separated coefficients, highest degree first."""
        return ",".join(str(c) for c in reversed(self.ascending_list()))

    def __repr__(self):
        return f"IntPolynomial({self.ascending_list()})"


class Inertia(NamedTuple):
    """Counts of eigenvalues above / at / below a rational shift point."""

    n_plus: int
    n_zero: int
    n_minus: int


class RationalInterval(NamedTuple):
    """Exact rational enclosure; lo == hi means the value is certified."""

    lo: Fraction
    hi: Fraction

    def is_point(self):
        return self.lo == self.hi

    def width(self):
        return self.hi - self.lo


# ---------------------------------------------------------------------------
# rank and determinant (fraction-free elimination, full pivoting)

def _bareiss(rows, n):
    """Shared elimination; returns (rank, last pivot, swap parity)."""
    a = [list(row) for row in rows]
    prev = 1
    rank = 0
    parity = 1
    piv = 1
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
            parity = -parity
        if pc != k:
            for row in a:
                row[k], row[pc] = row[pc], row[k]
            parity = -parity
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = piv
        rank += 1
    return rank, piv, parity


def bareiss_rank(m: IntMatrix) -> int:
    """Exact rank over the rationals; the input matrix is not mutated.

    Pivots are chosen as the first row-major nonzero of the remaining
    submatrix, so the elimination is deterministic.
    """
    rank, _, _ = _bareiss(m.rows, m.n)
    return rank


def bareiss_det(m: IntMatrix) -> int:
    rank, piv, parity = _bareiss(m.rows, m.n)
    if rank < m.n:
        return 0
    return parity * piv


# ---------------------------------------------------------------------------
# characteristic polynomial (division-free)

def berkowitz_charpoly(m: IntMatrix) -> IntPolynomial:
    """det(xI - M), monic of degree n, by the Samuelson-Berkowitz recurrence.

    Division-free, so coefficients stay in Z with no intermediate fractions.
    """
    n = m.n
    rows = m.rows
    if n == 0:
        return IntPolynomial((1,))
    c = [1, -rows[0][0]]  # descending-degree coefficients of the 1x1 leading block
    for r in range(1, n):
        top = rows[r][:r]
        v = [rows[i][r] for i in range(r)]
        t = [1, -rows[r][r]]
        for _ in range(r):
            t.append(-sum(top[i] * v[i] for i in range(r)))
            v = [sum(rows[i][j] * v[j] for j in range(r)) for i in range(r)]
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                s += t[i - j] * c[j]
            new.append(s)
        c = new
    return IntPolynomial(c[::-1])


# ---------------------------------------------------------------------------
# inertia by symmetric rational elimination with 1x1 / 2x2 pivots

def inertia_at(m: IntMatrix, c) -> Inertia:
    """Eigenvalue counts of the symmetric matrix m relative to the rational c.

    Works on q*M - p*I for c = p/q (positive scaling preserves signs), using
    symmetric Gaussian elimination with 1x1 pivots on nonzero diagonal entries
    and 2x2 hyperbolic blocks when the active diagonal vanishes.
    """
    if not m.is_symmetric():
        raise ValueError("inertia_at requires a symmetric matrix")
    c = Fraction(c)
    q, p = c.denominator, c.numerator
    n = m.n
    s = [[Fraction(q * m.rows[i][j] - (p if i == j else 0)) for j in range(n)]
         for i in range(n)]
    alive = list(range(n))
    n_plus = n_minus = n_zero = 0
    while alive:
        pivot = next((i for i in alive if s[i][i]), None)
        if pivot is not None:
            d = s[pivot][pivot]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            alive.remove(pivot)
            for a in alive:
                f = s[a][pivot]
                if f:
                    f /= d
                    for b in alive:
                        s[a][b] -= f * s[pivot][b]
            continue
        pair = next(((i, j) for i in alive for j in alive
                     if j > i and s[i][j]), None)
        if pair is None:
            n_zero += len(alive)
            break
        i, j = pair
        b = s[i][j]
        n_plus += 1
        n_minus += 1
        alive.remove(i)
        alive.remove(j)
        for a in alive:
            sai, saj = s[a][i], s[a][j]
            if sai or saj:
                for t in alive:
                    s[a][t] -= (sai * s[j][t] + saj * s[i][t]) / b
    return Inertia(n_plus, n_zero, n_minus)


class SymmetricSpectrum:
    """Memoized inertia queries and eigenvalue bracketing for one matrix.

    Eigenvalues are indexed from the top: index 1 is the largest.  Brackets
    are half-open rational enclosures (lo, hi] shrunk by bisection on inertia
    counts, starting from integer Gershgorin bounds; a bisection point that
    lands exactly on an eigenvalue certifies it and collapses the bracket.
    """

    def __init__(self, m: IntMatrix):
        if not m.is_symmetric():
            raise ValueError("symmetric matrix required")
        self.m = m
        self.n = m.n
        self._inertia = {}
        radius = 0
        for i in range(m.n):
            row_sum = sum(abs(x) for x in m.rows[i])
            radius = max(radius, row_sum)
        self.lower = -radius - 1
        self.upper = radius

    def inertia(self, c) -> Inertia:
        c = Fraction(c)
        got = self._inertia.get(c)
        if got is None:
            got = inertia_at(self.m, c)
            self._inertia[c] = got
        return got

    def count_gt(self, c):
        return self.inertia(c).n_plus

    def count_ge(self, c):
        ine = self.inertia(c)
        return ine.n_plus + ine.n_zero

    def bracket(self, i, width=DEFAULT_BRACKET_WIDTH) -> RationalInterval:
        """Enclosure of the i-th largest eigenvalue (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"eigenvalue index {i} out of range 1..{self.n}")
        lo = Fraction(self.lower)  # invariant: lo < xi_i <= hi
        hi = Fraction(self.upper)
        # Integer phase first, probing hi once at unit width, so integer
        # eigenvalues certify exactly instead of shrinking forever.
        while hi - lo >= 2:
            mid = Fraction((int(lo) + int(hi)) // 2)
            ine = self.inertia(mid)
            if ine.n_plus >= i:
                lo = mid
            elif ine.n_plus + ine.n_zero >= i:
                return RationalInterval(mid, mid)
            else:
                hi = mid
        ine = self.inertia(hi)
        if ine.n_plus + ine.n_zero >= i:
            return RationalInterval(hi, hi)
        while hi - lo > width:
            mid = (lo + hi) / 2
            ine = self.inertia(mid)
            if ine.n_plus >= i:
                lo = mid
            elif ine.n_plus + ine.n_zero >= i:
                return RationalInterval(mid, mid)
            else:
                hi = mid
        return RationalInterval(lo, hi)


def eigenvalue_bracket(m: IntMatrix, i: int,
                       width=DEFAULT_BRACKET_WIDTH) -> RationalInterval:
    """Rational interval of width <= ``width`` containing the i-th largest
    eigenvalue of the symmetric matrix m; collapses to a point when the
    eigenvalue is rational and certified by an exact inertia hit."""
    return SymmetricSpectrum(m).bracket(i, width)


# ---------------------------------------------------------------------------
# polynomial division, root multiplicities, interpolation

def poly_divide_exact(num: IntPolynomial,
                      den: IntPolynomial) -> Optional[IntPolynomial]:
    """Quotient num/den when den divides num exactly, else None.

    The divisor must be nonzero and monic, which keeps the whole division
    inside Z.
    """
    if den.is_zero():
        raise ValueError("division by zero polynomial")
    if not den.is_monic():
        raise ValueError("divisor must be monic")
    if num.is_zero():
        return IntPolynomial.zero()
    if num.degree < den.degree:
        return None
    rem = list(num.coeffs)
    dc = den.coeffs
    dd = den.degree
    qd = num.degree - dd
    quot = [0] * (qd + 1)
    for k in range(qd, -1, -1):
        coef = rem[k + dd]
        quot[k] = coef
        if coef:
            for j, d in enumerate(dc):
                rem[k + j] -= coef * d
    if any(rem[:dd]):
        return None
    return IntPolynomial(quot)


def root_multiplicity(p: IntPolynomial, r) -> int:
    """Largest k such that (x - r)^k divides p, for rational r.

    Repeated exact synthetic division; nothing beyond rational arithmetic is
    ever needed because the division happens only when the remainder p(r)
    vanishes.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root multiplicities")
    r = Fraction(r)
    coeffs = [Fraction(c) for c in p.coeffs]
    mult = 0
    while len(coeffs) > 1 and p_eval(coeffs, r) == 0:
        coeffs = _synth_div(coeffs, r)
        mult += 1
    return mult


def _synth_div(coeffs, r):
    """Quotient of the ascending-coefficient polynomial by (x - r); the
    caller guarantees r is a root."""
    n = len(coeffs)
    quot = [Fraction(0)] * (n - 1)
    acc = Fraction(0)
    for i in range(n - 1, 0, -1):
        acc = acc * r + coeffs[i]
        quot[i - 1] = acc
    return quot


def p_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(points):
    """Exact rational coefficients (ascending) of the unique polynomial of
    degree < len(points) through the given (x, y) pairs."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x values")
    out = [Fraction(0)]
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            # basis *= (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
            denom *= xi - xj
        scale = yi / denom
        if len(basis) > len(out):
            out.extend([Fraction(0)] * (len(basis) - len(out)))
        for k, c in enumerate(basis):
            out[k] += c * scale
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)
