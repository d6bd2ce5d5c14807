"""Certified evaluation of the gamma/zeta series built on the alpha family.

Every evaluator here follows the same certify-first discipline: before any
terms are summed, a closed-form tail bound is walked along a doubling schedule
of truncation points until it drops below the requested tolerance.  Only then
is the partial sum computed, once, at that truncation point.  The bound that
certified the truncation is returned alongside the value, so callers get a
machine-checkable error budget rather than a hope.

Two tail estimates are combined (per summand family, whichever is smaller):

* a logarithmic-growth estimate derived from the global coefficient bound
  c_s*(1+log(k+1))^(|s|+1)/(k+1), integrated into an incomplete-gamma tail;
* a positivity-based estimate: |alpha_k(s)| <= |s-1|*beta_k(ceil(|s|)) for the
  positive-coefficient cofactor beta, whose integer-argument values admit the
  elementary bound (A+log(k+1))^(M-2)/(k+1) with A = 109/64 >= 1+log 2.

All bound arithmetic uses directed rounding so a reported certificate can
never under-state the true tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .alpha import (
    AlphaTable,
    _alpha_seq_raw,
    default_alpha_table,
    magnitude_constant_upper,
)
from .combinatorics import eulerian, stirling2
from .errors import BudgetExceeded, NotDivisible, PoleAt, PreconditionViolated
from .exact_algebra import RationalPolynomial
from .hp import (
    HPComplex,
    abs_offset_upper,
    down_ctx,
    up_ctx,
    work_ctx,
)
from .oracle import OracleConfig, gamma_ref, trigamma_ref

__all__ = [
    "DEFAULT_TERM_CAP",
    "LAMBDA_MAX",
    "SeriesResult",
    "tail_bound",
    "gamma_series",
    "gamma_zeta_series",
    "zeta_from_series",
    "zeta_shift_stirling2",
    "zeta_shift_eulerian",
    "zeta_plus1_trigamma",
    "euler_gamma_limit",
    "achievable_tolerance",
]

#: Hard ceiling on the truncation point the doubling schedule may reach.
DEFAULT_TERM_CAP = 200_000

#: Largest shift order accepted by the weighted evaluators.
LAMBDA_MAX = 12

#: Integer arguments up to this value take the streaming fast path, which
#: costs O(s) per term instead of O(k).
INTEGER_FAST_MAX = 40

# Binary-exact constant A = 109/64 = 1.703125 >= 1 + log 2, used by the
# positivity-based tail estimate.
_LOG_SHIFT_NUM = 109
_LOG_SHIFT_DEN = 64


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series together with its certificate.

    ``tail_bound`` is a rigorous round-up bound on the modulus of the
    discarded tail; ``terms_used`` is the first truncation point on the
    doubling schedule whose bound met ``target_tol``.
    """

    value: HPComplex
    terms_used: int
    tail_bound: mpfr
    target_tol: mpfr

    def __str__(self) -> str:  # pragma: no cover - convenience only
        return (
            f"{self.value} (N={self.terms_used}, "
            f"tail<={float(self.tail_bound):.3e})"
        )


@dataclass(frozen=True)
class _TailPiece:
    """One summand family k -> mass * alpha_k(s)/(s+k-c_shift) in a tail.

    ``pole_offset`` is the largest j such that a factor (s+k-j) appears in
    the family's denominator; it widens the schedule's starting point so the
    denominator lower bounds hold.  ``extra_factors`` counts additional
    denominator factors (s+k-i) with i < c_shift, each bounded below by
    (N+1+Re s-(c_shift-1)) over the tail.
    """

    mass: mpq
    c_shift: int
    pole_offset: int
    extra_factors: int = 0


# ---------------------------------------------------------------------------
# tail certificates
# ---------------------------------------------------------------------------


def _upper_gamma_closed(n: int, u: mpfr) -> mpfr:
    """Gamma(n+1, u) = n! e^-u sum_{m<=n} u^m/m!, rounded up.

    ``u`` must be a round-down value; the caller is responsible for the
    active rounding mode being RoundUp.
    """
    term = mpfr(1)
    acc = mpfr(1)
    for m in range(1, n + 1):
        term = term * u / m
        acc += term
    return math.factorial(n) * gmpy2.exp(-u) * acc


def _schedule_start(su: mpfr, pole_offset: int, precision: int) -> int:
    """Smallest admissible truncation point for one summand family."""
    a_prime = _ceil_up(su + 1, precision)
    with up_ctx(precision):
        floor = max(
            2 * (su + 2) + 2 * max(pole_offset, 0),
            gmpy2.exp(mpfr(a_prime) / 2),
        )
    return max(int(gmpy2.ceil(floor)), 1)


def _ceil_up(x: mpfr, precision: int) -> int:
    with up_ctx(precision):
        return int(gmpy2.ceil(mpfr(x)))


def _log_tail_value(s: HPComplex, n_terms: int, precision: int) -> mpfr:
    """The incomplete-gamma tail estimate 2 e c_s Gamma(a'+1, 1+log(N+1)).

    Valid whenever ``n_terms`` is at least the family's schedule start; the
    value itself does not depend on the denominator shift.
    """
    z = s.mpc_value
    su = abs_offset_upper(z, 0, precision)
    a_prime = _ceil_up(su + 1, precision)
    c = magnitude_constant_upper(s)
    with down_ctx(precision):
        u = 1 + gmpy2.log(mpfr(n_terms + 1))
    with up_ctx(precision):
        return 2 * gmpy2.exp(mpfr(1)) * c * _upper_gamma_closed(a_prime, u)


def tail_bound(s: HPComplex, n_terms: int, pole_offset: int) -> mpfr:
    """Certified bound on sum_{k>n_terms} |alpha_k(s)/(s+k-j)|, j = pole_offset.

    Raises PreconditionViolated when ``n_terms`` is below the admissible
    starting point for the given family, where the closed form is not yet
    known to dominate the tail.
    """
    prec = s.precision
    su = abs_offset_upper(s.mpc_value, 0, prec)
    start = _schedule_start(su, pole_offset, prec)
    if n_terms < start:
        raise PreconditionViolated(
            f"truncation point {n_terms} below admissible start {start} "
            f"for |s|<={su}, pole offset {pole_offset}"
        )
    return _log_tail_value(s, n_terms, prec)


def _positivity_tail(
    s: HPComplex, n_terms: int, c_shift: int, precision: int
) -> mpfr | None:
    """Positivity-based estimate of sum_{k>n} beta-hat_k/(k+Re s-c).

    beta-hat_k is the integer-argument majorant of |alpha_k(s)|/|s-1|; the
    caller multiplies by |s-1| and the family mass.  Returns None when the
    estimate's own preconditions fail at this truncation point.
    """
    z = s.mpc_value
    su = abs_offset_upper(z, 0, precision)
    with down_ctx(precision):
        num = mpfr(n_terms + 1) + z.real - c_shift
    if num <= 0:
        return None
    if su <= 1:
        # |alpha_k/(s-1)| <= 1/(2k): tail sum <= 1/(2 rho N) with
        # rho = min(1, (N+1+Re s-c)/(N+1)).
        with down_ctx(precision):
            rho = num / (n_terms + 1)
        if rho > 1:
            rho = mpfr(1)
        with up_ctx(precision):
            return 1 / (2 * rho * n_terms)
    big_m = _ceil_up(su, precision)
    a = big_m - 2
    shift = mpq(_LOG_SHIFT_NUM, _LOG_SHIFT_DEN)
    if n_terms < max(64, big_m):
        return None
    with down_ctx(precision):
        rho = num / (n_terms + 3)
        u = mpfr(shift) + gmpy2.log(mpfr(n_terms + 1))
    if rho > 1:
        rho = mpfr(1)
    with up_ctx(precision):
        return gmpy2.exp(mpfr(shift)) * _upper_gamma_closed(a, u) / rho


def _piece_bound(
    s: HPComplex,
    n_terms: int,
    piece: _TailPiece,
    precision: int,
    log_value: mpfr | None,
    s1_upper: mpfr,
) -> mpfr | None:
    """Best available tail bound for one summand family, or None.

    ``log_value`` must already be gated on this family's schedule start
    (pass None when the closed form is not yet admissible).
    """
    candidates = []
    if log_value is not None:
        candidates.append(log_value)
    tight = _positivity_tail(s, n_terms, piece.c_shift, precision)
    if tight is not None:
        with up_ctx(precision):
            candidates.append(tight * s1_upper)
    if not candidates:
        return None
    best = min(candidates)
    with up_ctx(precision):
        scaled = best * mpfr(piece.mass)
    if piece.extra_factors:
        with down_ctx(precision):
            lo = mpfr(n_terms + 1) + s.mpc_value.real - (piece.c_shift - 1)
            lo_pow = lo ** piece.extra_factors
        if lo <= 0:
            return None
        with up_ctx(precision):
            scaled = scaled / lo_pow
    return scaled


def _certify(
    s: HPComplex,
    tol: mpfr,
    pieces: Sequence[_TailPiece],
    term_cap: int,
    precision: int,
) -> tuple[int, mpfr]:
    """Walk the doubling schedule until the combined tail bound meets tol.

    Returns (truncation point, certified bound).  Raises BudgetExceeded with
    the best bound seen when even the capped truncation point fails.
    """
    z = s.mpc_value
    su = abs_offset_upper(z, 0, precision)
    s1u = abs_offset_upper(z, -1, precision)
    starts = [_schedule_start(su, p.pole_offset, precision) for p in pieces]
    start = max(64, max(starts))
    schedule = []
    n = min(start, term_cap)
    while n < term_cap:
        schedule.append(n)
        n *= 2
    schedule.append(term_cap)

    best: mpfr | None = None
    for n in schedule:
        log_value = _log_tail_value(s, n, precision)
        total = mpfr(0)
        for piece, piece_start in zip(pieces, starts):
            b = _piece_bound(
                s, n, piece, precision,
                log_value if n >= piece_start else None, s1u,
            )
            if b is None:
                total = None
                break
            with up_ctx(precision):
                total += b
        if total is None:
            continue
        if best is None or total < best:
            best = total
        if total <= tol:
            return n, total
    raise BudgetExceeded(
        f"tail bound stuck at {best} > tol {tol} with {schedule[-1]} terms",
        best_bound=best,
        terms=schedule[-1],
    )


# ---------------------------------------------------------------------------
# coefficient streams
# ---------------------------------------------------------------------------


def _exact_positive_int(z: mpc) -> int | None:
    if z.imag == 0 and z.real >= 1 and gmpy2.is_integer(z.real):
        return int(z.real)
    return None


def _stream_integer(s_int: int, n_terms: int) -> Iterator[mpfr]:
    """alpha_k(m+1) = m! e_{m-1}(1, 1/2, ..., 1/(k+m-1))/(k+m), streamed.

    The elementary symmetric functions of the harmonic arguments are updated
    incrementally as the argument list grows, so each term costs O(m).
    Assumes the caller's context is active.
    """
    m = s_int - 1
    elem = [mpfr(0)] * m
    elem[0] = mpfr(1)
    for n in range(1, m):
        for j in range(min(n, m - 1), 0, -1):
            elem[j] += elem[j - 1] / n
    fact = math.factorial(m)
    for k in range(n_terms + 1):
        yield fact * elem[m - 1] / (k + m)
        n = k + m
        for j in range(m - 1, 0, -1):
            elem[j] += elem[j - 1] / n


def _alpha_stream(z: mpc, n_terms: int) -> Iterable:
    """Sequence alpha_0..alpha_N at the active context's precision."""
    s_int = _exact_positive_int(z)
    if s_int == 1:
        return [mpfr(1)] + [mpfr(0)] * n_terms
    if s_int is not None and 2 <= s_int <= INTEGER_FAST_MAX:
        return _stream_integer(s_int, n_terms)
    return _alpha_seq_raw(mpc(z), n_terms)


# ---------------------------------------------------------------------------
# poles and removable terms
# ---------------------------------------------------------------------------


def _min_abs(z: mpc, offsets: Iterable[int], precision: int) -> mpfr:
    with work_ctx(precision):
        return min(abs(z + off) for off in offsets)


def _dist_to_nonpositive_ints(z: mpc, precision: int) -> mpfr:
    re = z.real
    if re > 0:
        return _min_abs(z, [0], precision)
    nearest = int(gmpy2.rint_round(-re))
    return _min_abs(z, [max(n, 0) for n in (nearest - 1, nearest, nearest + 1)], precision)


def _dist_to_gamma_zeta_poles(z: mpc, precision: int) -> mpfr:
    """Distance to {1, 0, -1} plus the odd integers -3, -5, ..."""
    cands = [-1, 0, 1]
    re = z.real
    if re < -2:
        nearest_odd = 2 * int(gmpy2.rint_round((-re - 3) / 2)) + 3
        cands.extend(m for m in (nearest_odd - 2, nearest_odd, nearest_odd + 2) if m >= 3)
    else:
        cands.append(3)
    return _min_abs(z, cands, precision)


def _require_away_from(
    s: HPComplex, distance: mpfr, what: str
) -> None:
    threshold = mpfr(2) ** -(s.precision // 2)
    if distance < threshold:
        raise PoleAt(str(s), f"{what} (distance {float(distance):.3e})")


def _removable_terms(
    s: HPComplex,
    shifts: Sequence[int],
    n_terms: int,
    table: AlphaTable,
) -> dict[int, dict[int, RationalPolynomial]]:
    """Map k -> {c: quotient polynomial} for terms whose denominator s+k-c
    nearly vanishes at an exact cancellation point of alpha_k.

    Raises PoleAt when a near-vanishing denominator is not cancelled, or the
    cancellation cannot be checked exactly because k exceeds the table.
    """
    z = s.mpc_value
    prec = s.precision
    threshold = mpfr(2) ** -(prec // 4)
    out: dict[int, dict[int, RationalPolynomial]] = {}
    for c in shifts:
        center = float(c) - float(z.real)
        base = int(math.floor(center))
        for k in range(base - 1, base + 3):
            if k < 1 or k > n_terms:
                continue
            with work_ctx(prec):
                d = abs(z + (k - c))
            if d >= threshold:
                continue
            if k > table.max_k:
                raise PoleAt(
                    str(s),
                    f"term k={k} lands on a zero denominator beyond the "
                    f"exact table (max_k={table.max_k})",
                )
            root = mpq(c - k)
            try:
                quotient = table.alpha(k).divide_linear(root)
            except NotDivisible:
                raise PoleAt(
                    str(s), f"denominator s+{k}-{c} vanishes without cancellation"
                ) from None
            out.setdefault(k, {})[c] = quotient
    return out


def _poly_at(poly: RationalPolynomial, z: mpc) -> mpc:
    """Horner evaluation at the active context's precision."""
    acc = mpc(0)
    for coeff in reversed(poly.coefficients):
        acc = acc * z + mpfr(coeff)
    return acc


# ---------------------------------------------------------------------------
# shared evaluator scaffolding
# ---------------------------------------------------------------------------


def _as_tol(tol, precision: int) -> mpfr:
    with down_ctx(precision):
        t = mpfr(tol)
    if not t > 0:
        raise PreconditionViolated(f"tolerance must be positive, got {tol}")
    if t < mpfr(2) ** (-precision + 16):
        raise PreconditionViolated(
            f"tolerance {tol} is below 2^-(precision-16) for precision {precision}"
        )
    return t


def _guard_precision(precision: int, n_terms: int) -> int:
    return precision + n_terms.bit_length() + 32


def _finish(
    s: HPComplex, value: mpc, n_terms: int, bound: mpfr, tol: mpfr
) -> SeriesResult:
    return SeriesResult(
        value=HPComplex(value, precision=s.precision),
        terms_used=n_terms,
        tail_bound=bound,
        target_tol=tol,
    )


def _eval_single(
    s: HPComplex,
    tol: mpfr,
    c_shift: int,
    *,
    term_cap: int,
    table: AlphaTable | None,
    skip_k0: bool = False,
    negate: bool = False,
) -> SeriesResult:
    """Core engine for sums of alpha_k(s)/(s+k-c) over k >= 0 (or 1)."""
    prec = s.precision
    pieces = [_TailPiece(mass=mpq(1), c_shift=c_shift, pole_offset=c_shift)]
    n_cert, bound = _certify(s, tol, pieces, term_cap, prec)
    table = table or default_alpha_table()
    removable = _removable_terms(s, [c_shift], n_cert, table)
    guard = _guard_precision(prec, n_cert)
    with work_ctx(guard):
        z = mpc(s.mpc_value)
        acc = mpc(0)
        for k, a_k in enumerate(_alpha_stream(z, n_cert)):
            if skip_k0 and k == 0:
                continue
            special = removable.get(k)
            if special:
                acc += _poly_at(special[c_shift], z)
            else:
                acc += a_k / (z + (k - c_shift))
        if negate:
            acc = -acc
    return _finish(s, acc, n_cert, bound, tol)


# ---------------------------------------------------------------------------
# public evaluators
# ---------------------------------------------------------------------------


def gamma_series(
    s: HPComplex,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
) -> SeriesResult:
    """Gamma(s) = sum_k alpha_k(s)/(s+k), certified to ``tol``.

    Refuses points within 2^-(precision/2) of the poles 0, -1, -2, ...
    """
    tol = _as_tol(tol, s.precision)
    _require_away_from(
        s, _dist_to_nonpositive_ints(s.mpc_value, s.precision), "gamma pole"
    )
    return _eval_single(s, tol, 0, term_cap=term_cap, table=table)


def gamma_zeta_series(
    s: HPComplex,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
) -> SeriesResult:
    """Gamma(s)zeta(s) = sum_k alpha_k(s)/(s+k-1), certified to ``tol``.

    The pole set is {1, 0, -1} together with the odd integers -3, -5, ...;
    at even negative integers the vanishing term cancels exactly and the
    series evaluates the (finite) product value.
    """
    tol = _as_tol(tol, s.precision)
    _require_away_from(
        s, _dist_to_gamma_zeta_poles(s.mpc_value, s.precision), "gamma*zeta pole"
    )
    return _eval_single(s, tol, 1, term_cap=term_cap, table=table)


def zeta_from_series(
    s: HPComplex,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
    oracle_config: OracleConfig | None = None,
) -> SeriesResult:
    """zeta(s) via the Gamma(s)zeta(s) series divided by a Gamma reference.

    The inner series is certified at tol*|Gamma(s)| (round-down), so the
    reported tail bound, scaled back by |Gamma(s)|, still covers the
    division.
    """
    prec = s.precision
    tol = _as_tol(tol, prec)
    cfg = oracle_config or OracleConfig(precision=prec + 16)
    g = gamma_ref(s, cfg)
    with down_ctx(prec):
        g_low = abs(g.mpc_value)
        inner_tol = tol * g_low
    inner = gamma_zeta_series(s, inner_tol, term_cap=term_cap, table=table)
    with work_ctx(prec + 16):
        value = inner.value.mpc_value / g.mpc_value
    with up_ctx(prec):
        bound = inner.tail_bound / g_low
    return SeriesResult(
        value=HPComplex(value, precision=prec),
        terms_used=inner.terms_used,
        tail_bound=bound,
        target_tol=tol,
    )


def _stirling2_weights(lam: int) -> list[tuple[int, int]]:
    """Pairs (c, C) with the k-th summand weight sum_j C_j/(s+k-c_j).

    C_j = (-1)^(lam+j) j! S(lam, j) and c_j = j+1.
    """
    out = []
    for j in range(1, lam + 1):
        sign = -1 if (lam + j) % 2 else 1
        out.append((j + 1, sign * math.factorial(j) * int(stirling2(lam, j))))
    return out


def _check_lambda(lam: int) -> None:
    if not 1 <= lam <= LAMBDA_MAX:
        raise PreconditionViolated(
            f"shift order must be in [1, {LAMBDA_MAX}], got {lam}"
        )


def zeta_shift_stirling2(
    s: HPComplex,
    lam: int,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
) -> SeriesResult:
    """Gamma(s)zeta(s-lam) as sum_k alpha_k(s) sum_j C_j/(s+k-j-1).

    C_j are the signed factorial-weighted set-partition counts; the k=0
    denominators require s to stay away from 2, ..., lam+1.
    """
    prec = s.precision
    tol = _as_tol(tol, prec)
    _check_lambda(lam)
    weights = _stirling2_weights(lam)
    z = s.mpc_value
    _require_away_from(
        s,
        _min_abs(z, [-c for c, _ in weights], prec),
        "leading-term denominator zero",
    )
    pieces = _pieces_for("shift-stirling2", lam)
    n_cert, bound = _certify(s, tol, pieces, term_cap, prec)
    table = table or default_alpha_table()
    removable = _removable_terms(s, [c for c, _ in weights], n_cert, table)
    guard = _guard_precision(prec, n_cert)
    with work_ctx(guard):
        zz = mpc(z)
        acc = mpc(0)
        for k, a_k in enumerate(_alpha_stream(zz, n_cert)):
            special = removable.get(k)
            if special is None:
                w = mpc(0)
                for c, cw in weights:
                    w += mpfr(cw) / (zz + (k - c))
                acc += a_k * w
            else:
                for c, cw in weights:
                    quotient = special.get(c)
                    if quotient is None:
                        acc += cw * a_k / (zz + (k - c))
                    else:
                        acc += cw * _poly_at(quotient, zz)
    return _finish(s, acc, n_cert, bound, tol)


def zeta_shift_eulerian(
    s: HPComplex,
    lam: int,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
) -> SeriesResult:
    """Gamma(s)zeta(s-lam) with descent-count weights over falling products.

    The k-th summand is alpha_k(s) sum_j E(lam,j)(lam-j-1)! / prod_{i=j+2}^{lam+1}(s+k-i).
    Equivalent to the set-partition form; kept separate as a consistency
    cross-check.
    """
    prec = s.precision
    tol = _as_tol(tol, prec)
    _check_lambda(lam)
    z = s.mpc_value
    factor_shifts = list(range(2, lam + 2))
    _require_away_from(
        s, _min_abs(z, [-c for c in factor_shifts], prec), "leading-term denominator zero"
    )
    coeffs = [
        (j, math.factorial(lam - j - 1) * int(eulerian(lam, j)))
        for j in range(lam)
    ]
    pieces = _pieces_for("shift-eulerian", lam)
    n_cert, bound = _certify(s, tol, pieces, term_cap, prec)
    table = table or default_alpha_table()
    removable = _removable_terms(s, factor_shifts, n_cert, table)
    guard = _guard_precision(prec, n_cert)
    with work_ctx(guard):
        zz = mpc(z)
        acc = mpc(0)
        for k, a_k in enumerate(_alpha_stream(zz, n_cert)):
            special = removable.get(k)
            if special is None:
                # prefix[i] = prod_{c=2}^{i} (s+k-c); the falling product for
                # weight j is prefix[lam+1]/prefix[j+1].
                prefix = [mpc(1)] * (lam + 2)
                for c in factor_shifts:
                    prefix[c] = prefix[c - 1] * (zz + (k - c))
                inv_full = 1 / prefix[lam + 1]
                w = mpc(0)
                for j, cw in coeffs:
                    w += cw * prefix[j + 1] * inv_full
                acc += a_k * w
            else:
                for j, cw in coeffs:
                    acc += cw * _falling_product_term(
                        zz, k, range(j + 2, lam + 2), special, a_k
                    )
    return _finish(s, acc, n_cert, bound, tol)


def _falling_product_term(
    zz: mpc,
    k: int,
    shifts: Iterable[int],
    special: dict[int, RationalPolynomial],
    a_k,
) -> mpc:
    """alpha_k(s) / prod_c (s+k-c), with an exact quotient replacing the
    vanishing factor when the product contains one.

    At most one factor can vanish (the shifts differ by integers), so the
    quotient polynomial absorbs alpha_k/(s+k-c*) and the remaining factors
    divide it as usual.
    """
    quotient = None
    prod = mpc(1)
    for c in shifts:
        if quotient is None and c in special:
            quotient = special[c]
        else:
            prod *= zz + (k - c)
    if quotient is None:
        return a_k / prod
    return _poly_at(quotient, zz) / prod


def zeta_plus1_trigamma(
    s: HPComplex,
    tol,
    *,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
    oracle_config: OracleConfig | None = None,
) -> SeriesResult:
    """Gamma(s)zeta(s+1) = sum_k alpha_k(s) psi'(s+k).

    The trigamma weights are generated by one reference evaluation at s and
    the exact downward recurrence psi'(w+1) = psi'(w) - 1/w^2.  Over the
    tail psi'(s+k) <= 1/(k+Re s-1), matching the c=1 certificate family.
    """
    prec = s.precision
    tol = _as_tol(tol, prec)
    _require_away_from(
        s, _dist_to_nonpositive_ints(s.mpc_value, prec), "trigamma pole"
    )
    pieces = [_TailPiece(mass=mpq(1), c_shift=1, pole_offset=1)]
    n_cert, bound = _certify(s, tol, pieces, term_cap, prec)
    guard = _guard_precision(prec, n_cert)
    cfg = oracle_config or OracleConfig(precision=guard)
    seed = trigamma_ref(HPComplex(s.mpc_value, precision=guard), cfg)
    with work_ctx(guard):
        zz = mpc(s.mpc_value)
        w = mpc(seed.mpc_value)
        acc = mpc(0)
        for k, a_k in enumerate(_alpha_stream(zz, n_cert)):
            acc += a_k * w
            d = zz + k
            w = w - 1 / (d * d)
    return _finish(s, acc, n_cert, bound, tol)


def euler_gamma_limit(
    tol,
    *,
    precision: int = 128,
    term_cap: int = DEFAULT_TERM_CAP,
    table: AlphaTable | None = None,
) -> SeriesResult:
    """Euler's constant as -sum_{k>=1} alpha_k(0)/k."""
    s = HPComplex(0, precision=precision)
    tol = _as_tol(tol, precision)
    return _eval_single(
        s, tol, 0, term_cap=term_cap, table=table, skip_k0=True, negate=True
    )


def _pieces_for(identity: str, lam: int | None) -> list[_TailPiece]:
    if identity in ("gamma", "eulergamma"):
        return [_TailPiece(mass=mpq(1), c_shift=0, pole_offset=0)]
    if identity in ("gammazeta", "zeta", "trigamma"):
        return [_TailPiece(mass=mpq(1), c_shift=1, pole_offset=1)]
    if identity == "shift-stirling2":
        _check_lambda(lam)
        return [
            _TailPiece(mass=mpq(abs(cw)), c_shift=c, pole_offset=c)
            for c, cw in _stirling2_weights(lam)
        ]
    if identity == "shift-eulerian":
        _check_lambda(lam)
        return [
            _TailPiece(
                mass=mpq(math.factorial(lam - j - 1) * int(eulerian(lam, j))),
                c_shift=lam + 1,
                pole_offset=lam + 1,
                extra_factors=lam - j - 1,
            )
            for j in range(lam)
        ]
    raise ValueError(f"unknown identity {identity!r}")


def achievable_tolerance(
    s: HPComplex,
    *,
    identity: str = "gammazeta",
    lam: int | None = None,
    n_budget: int = 4096,
) -> mpfr:
    """Smallest certified tail bound reachable within ``n_budget`` terms.

    Useful for choosing a tolerance before calling an evaluator: any target
    at or above the returned value will certify with at most ``n_budget``
    terms.  For the ``zeta`` identity the returned bound applies to the
    Gamma-weighted series, before division by |Gamma(s)|.
    """
    prec = s.precision
    pieces = _pieces_for(identity, lam)
    try:
        _, bound = _certify(s, mpfr(0), pieces, n_budget, prec)
    except BudgetExceeded as exc:
        if exc.best_bound is None:
            raise
        return exc.best_bound
    return bound
