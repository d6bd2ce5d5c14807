"""Tests for the combinatorial triangles, Bernoulli family, and power-sum kernels.

The triangle values are checked against brute-force definitions (set
partitions, permutation descents, log-series coefficients) so the recurrences
never certify themselves.
"""

import math
from fractions import Fraction
from itertools import permutations

import pytest
from gmpy2 import mpq

from zeta_alpha.combinatorics import (
    bernoulli_number,
    bernoulli_polynomial,
    eulerian,
    norlund_integral,
    power_sum_kernel_direct,
    power_sum_kernel_eulerian,
    power_sum_kernel_stirling2,
    rising_factorial,
    stirling1,
    stirling2,
)
from zeta_alpha.exact_algebra import RationalPolynomial


# -- brute-force oracles ------------------------------------------------------

def _partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [head]] + part[i + 1:]
        yield [[head]] + part


def _stirling2_brute(n, j):
    return sum(1 for p in _partitions(list(range(n))) if len(p) == j)


def _eulerian_brute(n, j):
    count = 0
    for perm in permutations(range(n)):
        descents = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
        if descents == j:
            count += 1
    return count


def _stirling1_brute(n, m):
    """n! * [t^n] (log(1+t))^m / m!  via exact series arithmetic."""
    # log(1+t) = t - t^2/2 + t^3/3 - ... truncated past degree n
    log_series = [Fraction(0)] + [Fraction((-1) ** (k + 1), k)
                                  for k in range(1, n + 1)]
    power = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(m):
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(power):
            if a == 0:
                continue
            for j in range(1, n + 1 - i):
                out[i + j] += a * log_series[j]
        power = out
    return int(power[n] * math.factorial(n) / math.factorial(m))


def test_stirling2_matches_set_partitions():
    for n in range(9):
        for j in range(n + 2):
            assert stirling2(n, j) == _stirling2_brute(n, j)


def test_eulerian_matches_descent_counts():
    for n in range(1, 8):
        for j in range(n):
            assert eulerian(n, j) == _eulerian_brute(n, j)


def test_stirling1_matches_log_series():
    for n in range(9):
        for m in range(n + 1):
            assert stirling1(n, m) == _stirling1_brute(n, m)


def test_triangle_known_rows():
    assert [stirling2(4, j) for j in range(5)] == [0, 1, 7, 6, 1]
    assert [eulerian(4, j) for j in range(4)] == [1, 11, 11, 1]
    assert [stirling1(4, m) for m in range(5)] == [0, -6, 11, -6, 1]
    assert stirling1(0, 0) == stirling2(0, 0) == 1
    assert stirling2(5, 7) == 0
    assert eulerian(5, 9) == 0


def test_triangle_index_validation():
    with pytest.raises(ValueError):
        stirling1(-1, 0)
    with pytest.raises(ValueError):
        stirling2(2, -1)
    with pytest.raises(ValueError):
        eulerian(0, 0)


def test_eulerian_rows_sum_to_factorial():
    for n in range(1, 10):
        assert sum(eulerian(n, j) for j in range(n)) == math.factorial(n)


def test_stirling2_rows_sum_to_bell():
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    for n, b in enumerate(bell):
        assert sum(stirling2(n, j) for j in range(n + 1)) == b


# -- Bernoulli ----------------------------------------------------------------

def test_bernoulli_numbers_known_values():
    expected = {0: mpq(1), 1: mpq(-1, 2), 2: mpq(1, 6), 3: mpq(0),
                4: mpq(-1, 30), 6: mpq(1, 42), 8: mpq(-1, 30),
                10: mpq(5, 66), 12: mpq(-691, 2730)}
    for n, value in expected.items():
        assert bernoulli_number(n) == value
    for n in range(3, 30, 2):
        assert bernoulli_number(n) == 0


def test_bernoulli_polynomial_difference_equation():
    # B_n(x+1) - B_n(x) = n x^(n-1)
    for n in range(1, 12):
        b = bernoulli_polynomial(n)
        shifted = _compose_shift(b, 1)
        diff = shifted - b
        expected = RationalPolynomial([0] * (n - 1) + [n])
        assert diff == expected


def test_bernoulli_polynomial_integral_vanishes():
    # integral over [0,1] is zero for n >= 1, one for n = 0
    for n in range(0, 12):
        b = bernoulli_polynomial(n)
        total = mpq(0)
        for i, c in enumerate(b.coefficients):
            total += c / (i + 1)
        assert total == (1 if n == 0 else 0)


def _compose_shift(p: RationalPolynomial, a: int) -> RationalPolynomial:
    """p(x + a) by Horner over polynomial arithmetic."""
    x_plus_a = RationalPolynomial((a, 1))
    acc = RationalPolynomial.zero()
    for c in reversed(list(p.coefficients)):
        acc = acc * x_plus_a + c
    return acc


# -- rising factorials and the integral table ---------------------------------

def test_rising_factorial_values():
    assert rising_factorial(0) == RationalPolynomial((1,))
    assert rising_factorial(1) == RationalPolynomial((0, 1))
    # x(x+1)(x+2) = x^3 + 3x^2 + 2x
    assert rising_factorial(3) == RationalPolynomial((0, 2, 3, 1))
    for k in range(1, 10):
        assert rising_factorial(k).eval_rational(1) == math.factorial(k)


def test_norlund_integral_values():
    assert norlund_integral(1) == mpq(1, 2)
    assert norlund_integral(2) == mpq(5, 6)     # integral of x^2 + x
    assert norlund_integral(3) == mpq(9, 4)
    with pytest.raises(ValueError):
        norlund_integral(0)


def test_norlund_integral_from_scratch():
    for k in range(1, 15):
        poly = rising_factorial(k)
        total = mpq(0)
        for i, c in enumerate(poly.coefficients):
            total += c / (i + 1)
        assert norlund_integral(k) == total


# -- power-sum kernels --------------------------------------------------------

def test_kernel_lambda_zero_and_one():
    assert power_sum_kernel_direct(0) == RationalPolynomial((1,))
    assert power_sum_kernel_direct(1) == RationalPolynomial((1,))
    assert power_sum_kernel_stirling2(1) == RationalPolynomial((1,))
    assert power_sum_kernel_eulerian(1) == RationalPolynomial((1,))


def test_kernel_lambda_four_closed_form():
    # sum n^4 (1-t)^(n-1) = (24 - 36 t + 14 t^2 - t^3) / t^5
    expected = RationalPolynomial((24, -36, 14, -1))
    assert power_sum_kernel_direct(4) == expected
    assert power_sum_kernel_stirling2(4) == expected
    assert power_sum_kernel_eulerian(4) == expected


def test_kernel_routes_agree():
    for lam in range(0, 13):
        direct = power_sum_kernel_direct(lam)
        assert direct == power_sum_kernel_stirling2(lam)
        assert direct == power_sum_kernel_eulerian(lam)


def test_kernel_matches_truncated_series():
    # compare against a literal partial sum of n^lam (1-t)^(n-1) at t = 1/2,
    # where the geometric decay makes the truncation error easy to dominate
    t = Fraction(1, 2)
    for lam in range(0, 7):
        kernel = power_sum_kernel_direct(lam)
        value = Fraction(kernel.eval_rational(t).numerator,
                         kernel.eval_rational(t).denominator)
        value /= t ** (lam + 1)
        partial = sum(Fraction(n) ** lam * (1 - t) ** (n - 1)
                      for n in range(1, 200))
        assert abs(value - partial) < Fraction(1, 10 ** 20)


def test_kernel_degree_and_leading_terms():
    for lam in range(1, 11):
        kernel = power_sum_kernel_direct(lam)
        coeffs = list(kernel.coefficients)
        assert len(coeffs) == max(lam, 1)       # degree lam - 1
        assert coeffs[0] == math.factorial(lam)  # t -> 0: lam! / t^(lam+1) pole
