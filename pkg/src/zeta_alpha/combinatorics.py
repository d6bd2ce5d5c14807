"""Exact combinatorial families: Stirling, Eulerian, Bernoulli, rising factorials.

Triangles are computed by their defining recurrences with full-row
memoization — no closed-form binomial sums, so there is no cancellation to
worry about and every entry is an exact integer:

    S(l+1, j)  =  S(l, j-1) + j*S(l, j)            (second kind)
    s(n, m)    =  s(n-1, m-1) - (n-1)*s(n-1, m)    (first kind, signed)
    E(l+1, j)  =  (j+1)*E(l, j) + (l+1-j)*E(l, j-1)

Stirling numbers of the first kind are stored *signed* (they appear with an
explicit (-1)^k factor in the closed form for the expansion coefficients at
integer exponents).

Bernoulli polynomials are built from their defining properties — B_0 = 1,
B_k' = k*B_{k-1}, integral over [0,1] zero — by integrate-and-normalize, and
Bernoulli numbers are B_n = B_n(0), so B_1 = -1/2. The classical recurrence
is kept to the test suite as an independent check.

Also here: the cleared-denominator kernels of sum(n^lambda * (1-t)^(n-1)),
in three independently computed forms, used by the exact cross-checks.
"""

from __future__ import annotations

import threading
from math import comb

from gmpy2 import mpq

from .exact_algebra import RationalPolynomial, rat

__all__ = [
    "TriangleCache", "stirling1", "stirling2", "eulerian",
    "bernoulli_number", "bernoulli_polynomial",
    "rising_factorial", "norlund_integral",
    "power_sum_kernel_direct", "power_sum_kernel_stirling2",
    "power_sum_kernel_eulerian",
]


class TriangleCache:
    """Memoized triangle of one of the three integer families.

    Rows are immutable tuples once published; growth happens under a lock
    (single writer), so completed rows can be read from any thread.
    """

    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    EULERIAN = "eulerian"

    def __init__(self, kind: str):
        if kind not in (self.STIRLING1, self.STIRLING2, self.EULERIAN):
            raise ValueError(f"unknown triangle kind: {kind!r}")
        self.kind = kind
        self._lock = threading.Lock()
        if kind == self.EULERIAN:
            self._rows: list[tuple[int, ...]] = [(), (1,)]   # row index = lambda
        else:
            self._rows = [(1,)]                              # row 0: s(0,0)=S(0,0)=1

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if n >= len(self._rows):
            with self._lock:
                while n >= len(self._rows):
                    self._rows.append(self._next_row())
        return self._rows[n]

    def _next_row(self) -> tuple[int, ...]:
        if self.kind == self.STIRLING2:
            lam = len(self._rows) - 1
            prev = self._rows[lam]
            get = lambda j: prev[j] if 0 <= j <= lam else 0
            return tuple(get(j - 1) + j * get(j) for j in range(lam + 2))
        if self.kind == self.STIRLING1:
            n = len(self._rows) - 1
            prev = self._rows[n]
            get = lambda m: prev[m] if 0 <= m <= n else 0
            return tuple(get(m - 1) - n * get(m) for m in range(n + 2))
        # Eulerian: previous row is lambda = len-1, entries j = 0..lambda-1
        lam = len(self._rows) - 1
        prev = self._rows[lam]
        get = lambda j: prev[j] if 0 <= j < lam else 0
        return tuple((j + 1) * get(j) + (lam + 1 - j) * get(j - 1)
                     for j in range(lam + 1))

    def value(self, n: int, m: int) -> int:
        r = self.row(n)
        if 0 <= m < len(r):
            return r[m]
        return 0


_stirling1_cache = TriangleCache(TriangleCache.STIRLING1)
_stirling2_cache = TriangleCache(TriangleCache.STIRLING2)
_eulerian_cache = TriangleCache(TriangleCache.EULERIAN)


def stirling1(n: int, m: int) -> int:
    """Signed Stirling number of the first kind s(n, m); 0 when m > n."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    return _stirling1_cache.value(n, m)


def stirling2(lam: int, j: int) -> int:
    """Stirling number of the second kind S(lam, j); 0 when j > lam."""
    if lam < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    return _stirling2_cache.value(lam, j)


def eulerian(lam: int, j: int) -> int:
    """Eulerian number E(lam, j) (permutations of lam with j descents)."""
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    if j < 0 or j >= lam:
        return 0
    return _eulerian_cache.value(lam, j)


# -- Bernoulli ----------------------------------------------------------------

_bernoulli_polys: list[RationalPolynomial] = [RationalPolynomial((1,))]
_bernoulli_lock = threading.Lock()


def _antiderivative(p: RationalPolynomial) -> RationalPolynomial:
    """Term-wise antiderivative with zero constant term."""
    return RationalPolynomial(
        [0] + [c / (i + 1) for i, c in enumerate(p.coefficients)])


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(t): B_0 = 1, B_k' = k*B_{k-1}, with zero mean on [0,1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bernoulli_polys):
        with _bernoulli_lock:
            while n >= len(_bernoulli_polys):
                k = len(_bernoulli_polys)
                raw = _antiderivative(_bernoulli_polys[k - 1] * k)
                # subtract the mean so that the [0,1] integral vanishes
                mean = _antiderivative(raw).eval_rational(1)
                _bernoulli_polys.append(raw - RationalPolynomial((mean,)))
    return _bernoulli_polys[n]


def bernoulli_number(n: int) -> mpq:
    """B_n = B_n(0); convention B_1 = -1/2, B_n = 0 for odd n >= 3."""
    return bernoulli_polynomial(n).coefficient(0)


# -- rising factorial and its [0,1] integral ----------------------------------

def rising_factorial(k: int) -> RationalPolynomial:
    """The polynomial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = RationalPolynomial((1,))
    for i in range(k):
        p = p * RationalPolynomial((i, 1))
    return p


def norlund_integral(k: int) -> mpq:
    """Exact integral of (x)_k over [0,1], by term-wise integration."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _antiderivative(rising_factorial(k)).eval_rational(1)


# -- kernels of sum(n^lambda * (1-t)^(n-1)) -----------------------------------
#
# The sum is a rational function with denominator t^(lambda+1); the kernels
# below are that sum multiplied by t^(lambda+1), i.e. polynomials in t of
# degree <= lambda - 1 (degree 0 for lambda = 0). Three routes:
#
#   direct    : start from the geometric kernel 1 (lambda = 0) and apply the
#               derivative step that turns n^lambda into n^(lambda+1);
#   stirling2 : sum over j of (-1)^(lambda+j) * j! * S(lambda, j) * t^(lambda-j);
#   eulerian  : sum over j of E(lambda, j) * (1-t)^(lambda-j-1).

def power_sum_kernel_direct(lam: int) -> RationalPolynomial:
    """Kernel via repeated multiply-by-(1-t), negate-derivative steps."""
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    g = RationalPolynomial((1,))
    one_minus_t = RationalPolynomial((1, -1))
    for m in range(lam):
        h = one_minus_t * g
        # d/dt of h/t^(m+1), recleared to denominator t^(m+2), negated
        g = h * (m + 1) - h.derivative().shift_mul()
    return g


def power_sum_kernel_stirling2(lam: int) -> RationalPolynomial:
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam == 0:
        return RationalPolynomial((1,))
    coeffs = [mpq(0)] * lam
    fact = 1
    for j in range(1, lam + 1):
        fact *= j
        sign = 1 if (lam + j) % 2 == 0 else -1
        coeffs[lam - j] += sign * fact * stirling2(lam, j)
    return RationalPolynomial(coeffs)


def power_sum_kernel_eulerian(lam: int) -> RationalPolynomial:
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam == 0:
        return RationalPolynomial((1,))
    one_minus_t = RationalPolynomial((1, -1))
    powers = [RationalPolynomial((1,))]
    for _ in range(lam - 1):
        powers.append(powers[-1] * one_minus_t)
    acc = RationalPolynomial.zero()
    for j in range(lam):
        acc = acc + powers[lam - j - 1] * eulerian(lam, j)
    return acc
