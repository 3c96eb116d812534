"""Exact elements of the cyclotomic field Q(zeta_m).

Values are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) with
Fraction coefficients, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod(num, den):
    # integer polynomials, low degree first, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficients (low degree first) of the m-th cyclotomic polynomial."""
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            p, r = _poly_divmod(p, cyclotomic_poly(d))
            assert not any(r)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def _power_table(m):
    """Row k holds zeta_m^k in the power basis."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            nxt = [a - top * b for a, b in zip(nxt, phi[:-1])]
        cur = nxt
    return tuple(rows)


class Cyclotomic:
    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        self.m = m
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def rational(cls, q, m=1):
        deg = len(cyclotomic_poly(m)) - 1
        return cls(m, [Fraction(q)] + [0] * (deg - 1))

    @classmethod
    def zeta(cls, m, k=1):
        return cls(m, _power_table(m)[k % m])

    @classmethod
    def from_counts(cls, m, counts, scale=1):
        """scale * sum_k counts[k] zeta_m^k for an integer histogram ``counts``."""
        table = _power_table(m)
        deg = len(table[0])
        acc = [0] * deg
        for k, c in enumerate(counts):
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        acc[i] += c * t
        scale = Fraction(scale)
        return cls(m, [scale * a for a in acc])

    def lift(self, M):
        """The same number viewed in Q(zeta_M), M a multiple of m."""
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError("modulus must be a multiple")
        step = M // self.m
        table = _power_table(M)
        acc = [Fraction(0)] * len(table[0])
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(table[(i * step) % M]):
                    if t:
                        acc[j] += c * t
        return Cyclotomic(M, acc)

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other, self.m)
        if other.m == self.m:
            return self, other
        M = self.m * other.m // gcd(self.m, other.m)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        return Cyclotomic(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        table = _power_table(a.m)
        deg = len(table[0])
        acc = [Fraction(0)] * deg
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    xy = x * y
                    for k, t in enumerate(table[(i + j) % a.m]):
                        if t:
                            acc[k] += xy * t
        return Cyclotomic(a.m, acc)

    __rmul__ = __mul__

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_zero(self):
        return not any(self.coeffs)

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0]

    def normalized(self):
        """Smallest modulus carrying the same number (for comparison/printing)."""
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0])
        for d in range(1, self.m + 1):
            if self.m % d == 0 and d < self.m:
                cand = self._descend(d)
                if cand is not None:
                    return cand
        return self

    def _descend(self, d):
        # try to write self as a polynomial in zeta_m^(m/d)
        table = _power_table(d)
        deg = len(table[0])
        rows = [self.lift_basis_vector(d, k) for k in range(deg)]
        # solve sum_k c_k rows[k] = coeffs; rows are sparse power-table rows
        from .intlinalg import transpose  # local to avoid a cycle at import
        A = transpose(rows)
        sol = _solve_rational(A, list(self.coeffs))
        if sol is None:
            return None
        return Cyclotomic(d, sol)

    def lift_basis_vector(self, d, k):
        return _power_table(self.m)[(k * (self.m // d)) % self.m]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        n = self.normalized()
        return hash((n.m, n.coeffs))

    def render(self):
        n = self.normalized()
        if n.is_rational():
            return str(n.coeffs[0])
        terms = []
        for k, c in enumerate(n.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*zeta_{n.m}^{k}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Cyclotomic({self.render()})"

    def to_json(self):
        n = self.normalized()
        return {"modulus": n.m, "coeffs": [str(c) for c in n.coeffs]}


def _solve_rational(A, b):
    """Gaussian elimination over Q; returns a solution or None."""
    rows = len(A)
    cols = len(A[0]) if A else 0
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    piv = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    if any(M[i][cols] for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(piv):
        sol[c] = M[i][cols]
    return sol


def phase_sum(m, exponents, scale=1):
    """scale * sum zeta_m^e over an iterable of exponents."""
    counts = [0] * m
    for e in exponents:
        counts[e % m] += 1
    return Cyclotomic.from_counts(m, counts, scale)
