"""The coefficient family alpha_k(s) of the expansion of (-log(1-t)/t)^(s-1).

What is stored is the reduced family beta_k(s) = alpha_k(s)/(s-1) for k >= 1
(alpha_0 = 1): every beta_k is a polynomial of degree k-1 with strictly
positive rational coefficients, so positivity is a checkable invariant and
divisibility by (s-1) is structural rather than asserted.

Two independent recursions produce the table:

  primary   alpha_{k+1}(s) = 1/(k(k+1)(k+2)) *
                sum_{j=1..k} alpha_j(s) * j * (k + k^2 + s(2k+2-j))
                             / ((k-j+1)(k-j+2)),        k >= 1
  cross     alpha_{k+1}(s) = (s-1)/(k+2) - 1/(k+1) *
                sum_{j=1..k} (j - (s-1)(k-j+1))/(k-j+2) * alpha_j(s)

The primary form is homogeneous in alpha_1..alpha_k, so it runs directly on
the beta_k (seeded with beta_1 = 1/2); the cross form is kept as an
independent implementation and checked against the primary for small k at
build time.

Also here: the derivative values alpha_k'(1) (their own first-order
recursion, plus the exact rising-factorial-integral route), the per-term
magnitude bound used by truncation certificates, the structural
divisibility/residue property checks, and the closed form at integer s via
signed Stirling numbers of the first kind.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .combinatorics import bernoulli_number, norlund_integral, stirling1
from .errors import IndexOutOfTable, PrecisionTooLow
from .exact_algebra import RationalPolynomial, rat
from .hp import HPComplex, abs_offset_lower, abs_offset_upper, down_ctx, up_ctx, work_ctx

__all__ = [
    "AlphaTable", "AlphaPrimeTable", "build_alpha_table", "build_alpha_prime",
    "alpha_eval", "alpha_seq_numeric", "alpha_prime_via_integral",
    "theorem1_bound", "check_structural_properties", "alpha_via_stirling1",
    "StructuralReport", "PropertyCheck", "default_alpha_table",
    "DEFAULT_TABLE_K", "MAX_TABLE_K", "BOUND_SAMPLE_POINTS",
]

# default size of the lazily built shared table; hard cap guards the CLI
DEFAULT_TABLE_K = 64
MAX_TABLE_K = 2000

#: Canonical sample points ("re" or "re,im") at which the growth bound is
#: exercised by the verification suites.
BOUND_SAMPLE_POINTS = ("2", "1/2", "-3/2", "3,4", "1/2,14")


class AlphaTable:
    """Immutable store of beta_k = alpha_k/(s-1) for 1 <= k <= max_k."""

    def __init__(self, beta: Iterable[RationalPolynomial]):
        betas = tuple(beta)
        object.__setattr__(self, "_beta", betas)
        object.__setattr__(self, "_alpha_cache", {})
        object.__setattr__(self, "_alpha_lock", threading.Lock())

    @property
    def max_k(self) -> int:
        return len(self._beta)

    @property
    def alpha0(self) -> RationalPolynomial:
        return RationalPolynomial((1,))

    def beta(self, k: int) -> RationalPolynomial:
        if not 1 <= k <= self.max_k:
            raise IndexOutOfTable(f"beta_{k} not in table (max_k={self.max_k})")
        return self._beta[k - 1]

    def alpha(self, k: int) -> RationalPolynomial:
        """alpha_k as an explicit polynomial, (s-1)*beta_k for k >= 1."""
        if k == 0:
            return self.alpha0
        if not 1 <= k <= self.max_k:
            raise IndexOutOfTable(f"alpha_{k} not in table (max_k={self.max_k})")
        cached = self._alpha_cache.get(k)
        if cached is None:
            with self._alpha_lock:
                cached = self._alpha_cache.get(k)
                if cached is None:
                    cached = self._beta[k - 1] * RationalPolynomial((-1, 1))
                    self._alpha_cache[k] = cached
        return cached

    def betas(self) -> tuple[RationalPolynomial, ...]:
        return self._beta


class AlphaPrimeTable:
    """Derivative values alpha_k'(1), index 0 .. max_k."""

    def __init__(self, values: Iterable[mpq]):
        self._values = tuple(values)

    @property
    def max_k(self) -> int:
        return len(self._values) - 1

    def value(self, k: int) -> mpq:
        if not 0 <= k <= self.max_k:
            raise IndexOutOfTable(f"alpha_{k}'(1) not in table (max_k={self.max_k})")
        return self._values[k]

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)


def _build_beta_rows(max_k: int) -> list[list[mpq]]:
    """Coefficient rows of beta_1..beta_max_k via the primary recursion."""
    if max_k < 1:
        return []
    rows: list[list[mpq]] = [[mpq(1, 2)]]
    for k in range(1, max_k):
        acc = [mpq(0)] * (k + 1)
        for j in range(1, k + 1):
            denom = (k - j + 1) * (k - j + 2)
            a = mpq(j * (k + k * k), denom)
            b = mpq(j * (2 * k + 2 - j), denom)
            row = rows[j - 1]
            for i, c in enumerate(row):
                acc[i] += c * a
                acc[i + 1] += c * b
        scale = mpq(1, k * (k + 1) * (k + 2))
        rows.append([c * scale for c in acc])
    return rows


def _build_alpha_cross(max_k: int) -> list[RationalPolynomial]:
    """alpha_0..alpha_max_k via the independent cross-check recursion."""
    alphas = [RationalPolynomial((1,))]
    if max_k >= 1:
        alphas.append(RationalPolynomial((mpq(-1, 2), mpq(1, 2))))
    for k in range(1, max_k):
        acc = [mpq(0)] * (k + 2)
        for j in range(1, k + 1):
            a = mpq(k + 1, k - j + 2)
            b = -mpq(k - j + 1, k - j + 2)
            for i, c in enumerate(alphas[j].coefficients):
                acc[i] += c * a
                acc[i + 1] += c * b
        inv = mpq(-1, k + 1)
        lead = mpq(1, k + 2)
        acc = [c * inv for c in acc]
        acc[0] -= lead
        acc[1] += lead
        alphas.append(RationalPolynomial(acc))
    return alphas


CROSS_CHECK_K = 30


def build_alpha_table(max_k: int, self_check: bool = True) -> AlphaTable:
    """Exact beta_k for k <= max_k (primary recursion, cross-checked).

    The cross-check recomputes alpha_k independently for
    k <= min(max_k, 30) and insists on identical polynomials; a mismatch
    means a broken build and raises ArithmeticError.
    """
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    rows = _build_beta_rows(max_k)
    betas = [RationalPolynomial(row) for row in rows]
    table = AlphaTable(betas)
    if self_check and max_k >= 1:
        check_k = min(max_k, CROSS_CHECK_K)
        cross = _build_alpha_cross(check_k)
        for k in range(1, check_k + 1):
            if table.alpha(k) != cross[k]:
                raise ArithmeticError(
                    f"recursion cross-check failed at k={k}: "
                    f"{table.alpha(k)!r} != {cross[k]!r}")
    return table


_default_table: AlphaTable | None = None
_default_table_lock = threading.Lock()


def default_alpha_table() -> AlphaTable:
    """Shared table used for removable-singularity handling and the CLI."""
    global _default_table
    if _default_table is None:
        with _default_table_lock:
            if _default_table is None:
                _default_table = build_alpha_table(DEFAULT_TABLE_K)
    return _default_table


RationalLike = Union[int, mpq]


def alpha_eval(table: AlphaTable, k: int,
               s: RationalLike | HPComplex) -> mpq | HPComplex:
    """alpha_k(s): exact for rational s, precision-tracked for complex s."""
    if isinstance(s, HPComplex):
        if k == 0:
            return HPComplex(1, precision=s.precision)
        beta_val = table.beta(k).eval_complex(s)
        return (s - 1) * beta_val
    s = rat(s)
    if k == 0:
        return mpq(1)
    return (s - 1) * table.beta(k).eval_rational(s)


def alpha_seq_numeric(s: HPComplex, N: int) -> list[HPComplex]:
    """alpha_0(s)..alpha_N(s) at fixed s, O(N^2), with guard precision.

    Accumulation runs at working + ceil(log2 N) + 32 bits; results are
    rounded back to the working precision of s.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if s.precision < 64:
        raise PrecisionTooLow("need >= 64 bits for the numeric recursion")
    guard = s.precision + max(N.bit_length(), 1) + 32
    with work_ctx(guard):
        values = _alpha_seq_raw(mpc(s.mpc_value), N)
    out = []
    for v in values:
        with work_ctx(s.precision):
            out.append(HPComplex(mpc(v), precision=s.precision))
    return out


def _alpha_seq_raw(z: mpc, N: int) -> list[mpc]:
    """Numeric primary recursion; must run inside an active gmpy2 context.

    Keeps three parallel arrays so the inner loop is six scalar operations
    per term: P_j = alpha_j*j, Q_j = P_j*z, R_j = Q_j*j.
    """
    one = mpfr(1)
    alphas = [mpc(1)]
    a1 = (z - 1) / 2
    alphas.append(a1)
    P = [mpc(0), a1]
    Q = [mpc(0), a1 * z]
    R = [mpc(0), a1 * z]
    inv_c = [one / ((m + 1) * (m + 2)) for m in range(N)]
    for k in range(1, N):
        A = mpfr(k + k * k)
        B = mpfr(2 * k + 2)
        acc = mpc(0)
        for j in range(1, k + 1):
            acc += (P[j] * A + Q[j] * B - R[j]) * inv_c[k - j]
        nxt = acc / (k * (k + 1) * (k + 2))
        alphas.append(nxt)
        p = nxt * (k + 1)
        q = p * z
        P.append(p)
        Q.append(q)
        R.append(q * (k + 1))
    return alphas[:N + 1]


def build_alpha_prime(max_k: int) -> AlphaPrimeTable:
    """alpha_k'(1) for k <= max_k by the first-order recursion.

    alpha_{k+1}'(1) = 1/(k+2) - 1/(k+1) * sum_{j=1..k} j/(k-j+2) * alpha_j'(1),
    starting from alpha_0'(1) = 0 (alpha_0 is constant).
    """
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    values = [mpq(0)]
    for k in range(0, max_k):
        acc = mpq(0)
        for j in range(1, k + 1):
            acc += values[j] * mpq(j, k - j + 2)
        nxt = mpq(1, k + 2) - acc / (k + 1)
        values.append(nxt)
    return AlphaPrimeTable(values[:max_k + 1])


def alpha_prime_via_integral(k: int) -> mpq:
    """alpha_k'(1) as (1/(k*k!)) * integral of the rising factorial."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return norlund_integral(k) / (k * factorial(k))


def magnitude_constant_upper(s: HPComplex) -> mpfr:
    """Round-up value of c_s = (|s-1|/(|s|+1))*(|s|+2)*2^(|s|+1)."""
    prec = s.precision
    z = s.mpc_value
    su = abs_offset_upper(z, 0, prec)
    sd = abs_offset_lower(z, 0, prec)
    s1u = abs_offset_upper(z, -1, prec)
    with down_ctx(prec):
        denom = sd + 1
    with up_ctx(prec):
        return (s1u / denom) * (su + 2) * gmpy2.exp2(su + 1)


def theorem1_bound(s: HPComplex, k: int) -> mpfr:
    """Upper bound on |alpha_k(s)|: c_s*(1+log(k+1))^(|s|+1)/(k+1).

    c_s = (|s-1|/(|s|+1))*(|s|+2)*2^(|s|+1). Everything is evaluated with
    directed rounding so the result can never under-report.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    prec = s.precision
    z = s.mpc_value
    su = abs_offset_upper(z, 0, prec)
    c = magnitude_constant_upper(s)
    with up_ctx(prec):
        log_term = 1 + gmpy2.log(mpfr(k + 1))
        return c * log_term ** (su + 1) / (k + 1)


def alpha_via_stirling1(k: int, s: int) -> mpq:
    """alpha_k at integer s >= 1 via the signed Stirling-1 closed form."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be a positive integer")
    sign = -1 if k % 2 else 1
    return sign * mpq(factorial(s - 1), factorial(s + k - 1)) \
        * stirling1(s + k - 1, s - 1)


# -- structural property checks -----------------------------------------------

@dataclass(frozen=True)
class PropertyCheck:
    name: str
    index: int
    ok: bool
    detail: str = ""


@dataclass
class StructuralReport:
    k_max: int
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[PropertyCheck]:
        return [c for c in self.checks if not c.ok]

    def by_name(self, name: str) -> list[PropertyCheck]:
        return [c for c in self.checks if c.name == name]


def _divisibility_check(p: RationalPolynomial, root: mpq) -> tuple[bool, str]:
    rem = p.eval_rational(root)
    if rem == 0:
        return True, ""
    return False, f"remainder {rem} at root {root}"


def check_structural_properties(table: AlphaTable, k_max: int) -> StructuralReport:
    """Exact divisibility and residue identities, reported per property per k.

    Checked for all applicable k <= k_max (and m with 2m+2 <= k_max):
      * (s+k-1) divides alpha_k for odd k >= 3
      * (s+k-2) divides alpha_k for odd k >= 1
      * (s+k-2) divides 2*alpha_{k+1} - alpha_k for even k >= 0
      * alpha_k(-k) = (-1)^k/k!
      * alpha_{2m+2}(-2m-1) = B_{2m+2}/(2m+2)!
      * alpha_{2m+2}(-2m) = -(2m+1)*B_{2m+2}/(2m+2)!
    """
    if k_max > table.max_k:
        raise IndexOutOfTable(
            f"k_max={k_max} exceeds table max_k={table.max_k}")
    report = StructuralReport(k_max=k_max)
    add = report.checks.append

    for k in range(3, k_max + 1, 2):
        ok, detail = _divisibility_check(table.alpha(k), mpq(1 - k))
        add(PropertyCheck("divides_s_plus_k_minus_1", k, ok, detail))

    for k in range(1, k_max + 1, 2):
        ok, detail = _divisibility_check(table.alpha(k), mpq(2 - k))
        add(PropertyCheck("divides_s_plus_k_minus_2", k, ok, detail))

    for k in range(0, k_max, 2):
        p = table.alpha(k + 1) * 2 - table.alpha(k)
        ok, detail = _divisibility_check(p, mpq(2 - k))
        add(PropertyCheck("divides_combination", k, ok, detail))

    for k in range(0, k_max + 1):
        expected = mpq(-1 if k % 2 else 1, factorial(k))
        got = alpha_eval(table, k, -k)
        ok = got == expected
        add(PropertyCheck("value_at_minus_k", k, ok,
                          "" if ok else f"{got} != {expected}"))

    m = 0
    while 2 * m + 2 <= k_max:
        k = 2 * m + 2
        b = bernoulli_number(k) / factorial(k)
        got_odd = alpha_eval(table, k, -(2 * m + 1))
        ok = got_odd == b
        add(PropertyCheck("residue_odd_argument", m, ok,
                          "" if ok else f"{got_odd} != {b}"))
        got_even = alpha_eval(table, k, -2 * m)
        expected = -(2 * m + 1) * b
        ok = got_even == expected
        add(PropertyCheck("residue_even_argument", m, ok,
                          "" if ok else f"{got_even} != {expected}"))
        m += 1

    return report
