"""Exact zeta values at nonpositive integers, two independent ways.

zeta(1-lambda) comes out of the shifted series evaluated at s = 1, where
every surviving term is an exact rational: the k = 0 contribution collapses
to -1 (lambda = 1) or 0, and each k = j term contributes the derivative
value alpha'_j(1) against a signed Stirling-2 weight.  Euler's classical
Bernoulli formula gives the same number through a completely separate chain
(Bernoulli polynomials), and the report compares the two exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .alpha import build_alpha_prime, build_alpha_table, default_alpha_table
from .combinatorics import bernoulli_number, stirling2
from .errors import PreconditionViolated
from .exact_algebra import Rational

__all__ = [
    "LAMBDA_CAP",
    "SpecialValueReport",
    "ResidueCheck",
    "ResidueReport",
    "zeta_nonpositive",
    "k0_term",
    "zeta_via_euler",
    "residue_identities",
]

#: Default ceiling on the shift order; Stirling rows and derivative tables
#: stay trivially cheap below it.
LAMBDA_CAP = 40

_FACTORIALS: list[int] = [1]


def _factorial(n: int) -> int:
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


@dataclass(frozen=True)
class SpecialValueReport:
    """Exact zeta(1-lambda) with its reconciliation against Euler's formula."""

    lam: int
    via_alpha_prime: Rational
    via_euler: Rational
    delta_term: Rational
    agree: bool


@dataclass(frozen=True)
class ResidueCheck:
    name: str
    index: int
    expected: Rational
    actual: Rational

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ResidueReport:
    checks: tuple[ResidueCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> Sequence[ResidueCheck]:
        return [c for c in self.checks if not c.ok]


def k0_term(lam: int) -> mpq:
    """The k = 0 contribution (-1)^lam sum_j (-1)^(j-1) (j-1)! S(lam, j).

    Evaluates to -1 for lam = 1 and to 0 for every larger lam.
    """
    if lam < 1:
        raise PreconditionViolated(f"shift order must be >= 1, got {lam}")
    total = mpq(0)
    for j in range(1, lam + 1):
        sign = 1 if (j - 1) % 2 == 0 else -1
        total += sign * _factorial(j - 1) * stirling2(lam, j)
    return total if lam % 2 == 0 else -total


def zeta_via_euler(lam: int) -> mpq:
    """Euler's formula zeta(1-lambda) = (-1)^(lambda+1) B_lambda / lambda."""
    if lam < 1:
        raise PreconditionViolated(f"shift order must be >= 1, got {lam}")
    value = bernoulli_number(lam) / lam
    return value if lam % 2 else -value


def zeta_nonpositive(lam: int, *, max_lambda: int = LAMBDA_CAP) -> SpecialValueReport:
    """Exact zeta(1-lambda), derived from the series collapse at s = 1.

    zeta(1-lambda) = delta + (-1)^lam sum_{k=1}^{lam} alpha'_k(1) (-1)^k k! S(lam, k),
    where delta is the k = 0 term.  The Euler-formula value is computed through
    the independent Bernoulli chain and compared exactly.
    """
    if not 1 <= lam <= max_lambda:
        raise PreconditionViolated(
            f"shift order must be in [1, {max_lambda}], got {lam}"
        )
    primes = build_alpha_prime(lam)
    acc = mpq(0)
    for k in range(1, lam + 1):
        sign = 1 if k % 2 == 0 else -1
        acc += sign * primes.value(k) * _factorial(k) * stirling2(lam, k)
    if lam % 2:
        acc = -acc
    delta = k0_term(lam)
    via_prime = delta + acc
    via_euler = zeta_via_euler(lam)
    return SpecialValueReport(
        lam=lam,
        via_alpha_prime=via_prime,
        via_euler=via_euler,
        delta_term=delta,
        agree=via_prime == via_euler,
    )


def residue_identities(m_max: int) -> ResidueReport:
    """Exact checks of the special evaluations pinned by residues.

    Verifies alpha_k(-k) = (-1)^k/k! for k <= 2*m_max+2, and for m <= m_max
    both alpha_{2m+2}(-2m-1) = B_{2m+2}/(2m+2)! and
    alpha_{2m+2}(-2m) = -(2m+1) B_{2m+2}/(2m+2)!.
    """
    if m_max < 0:
        raise PreconditionViolated(f"m_max must be >= 0, got {m_max}")
    k_top = 2 * m_max + 2
    table = default_alpha_table()
    if k_top > table.max_k:
        table = build_alpha_table(k_top, self_check=False)
    checks: list[ResidueCheck] = []
    for k in range(0, k_top + 1):
        expected = mpq((-1) ** k, _factorial(k))
        actual = table.alpha(k).eval_rational(mpq(-k))
        checks.append(ResidueCheck("value_at_minus_k", k, expected, actual))
    for m in range(0, m_max + 1):
        k = 2 * m + 2
        base = bernoulli_number(k) / _factorial(k)
        poly = table.alpha(k)
        checks.append(
            ResidueCheck(
                "odd_argument", m, base, poly.eval_rational(mpq(-(2 * m + 1)))
            )
        )
        checks.append(
            ResidueCheck(
                "even_argument",
                m,
                -(2 * m + 1) * base,
                poly.eval_rational(mpq(-2 * m)),
            )
        )
    return ResidueReport(checks=tuple(checks))
