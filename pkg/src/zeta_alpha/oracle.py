"""Independent reference evaluators: zeta, gamma, trigamma.

These are the second route for every numeric claim in the package. They share
no code with the series evaluators: zeta goes through Euler-Maclaurin with
Bernoulli corrections, gamma and trigamma through upward recurrence shifts
into the region where their classical asymptotic series converge fast.

Precision here is heuristic, not certified: parameters are chosen with ample
margin for the desk-scale domain (|s| up to ~50, precision up to ~256 bits),
and the agreement of two independent methods within stated tolerances is the
acceptance mechanism, not a proof of either.
"""

from __future__ import annotations

from dataclasses import dataclass

import gmpy2
from gmpy2 import mpc, mpfr

from .combinatorics import bernoulli_number
from .errors import PoleAt, PreconditionViolated
from .hp import HPComplex, work_ctx

__all__ = ["OracleConfig", "zeta_em", "gamma_ref", "trigamma_ref",
           "nonpositive_integer_distance"]


@dataclass(frozen=True)
class OracleConfig:
    precision: int = 128
    em_terms: int | None = None
    em_correction_order: int = 15

    def __post_init__(self):
        if self.precision < 64:
            raise PreconditionViolated("oracle precision must be >= 64 bits")
        if not 1 <= self.em_correction_order <= 30:
            raise PreconditionViolated("em_correction_order must be in [1, 30]")

    @property
    def effective_em_terms(self) -> int:
        if self.em_terms is not None:
            return self.em_terms
        return max(50, 2 * self.precision // 3)


_DEFAULT_CFG = OracleConfig()


def nonpositive_integer_distance(z: mpc) -> mpfr:
    """Distance from z to the set {0, -1, -2, ...}."""
    re = z.real
    if re > 0:
        nearest = 0
    else:
        nearest = int(gmpy2.rint_round(re))
        if nearest > 0:
            nearest = 0
    with work_ctx(max(z.real.precision, 64)):
        return abs(z - nearest)


def _pole_guard(z: mpc, precision: int, what: str) -> None:
    threshold = mpfr(2) ** (-(precision // 2))
    if nonpositive_integer_distance(z) < threshold:
        raise PoleAt(str(z), f"{what} pole at nonpositive integer near {z}")


def zeta_em(s: HPComplex, cfg: OracleConfig | None = None) -> HPComplex:
    """Riemann zeta via Euler-Maclaurin:

        zeta(s) = sum_{n<M} n^-s + M^(1-s)/(s-1) + M^-s/2
                  + sum_{r=1..R} B_{2r}/(2r)! * (s)_{2r-1} * M^(-s-2r+1)

    with (s)_j the rising factorial. Valid for Re s > -2R + 1, s != 1.
    """
    cfg = cfg or _DEFAULT_CFG
    prec = cfg.precision
    work = prec + 24
    z = s.mpc_value
    with work_ctx(work):
        z = mpc(z)
        if abs(z - 1) < mpfr(2) ** (-(prec // 2)):
            raise PoleAt(str(z), "zeta pole at s = 1")
        R = cfg.em_correction_order
        if not z.real > -2 * R + 1:
            raise PreconditionViolated(
                f"Re s = {z.real} out of Euler-Maclaurin range (need > {-2*R + 1})")
        M = cfg.effective_em_terms
        acc = mpc(0)
        for n in range(1, M):
            acc += mpfr(n) ** (-z)
        Mf = mpfr(M)
        m_pow = Mf ** (1 - z)            # M^(1-s)
        acc += m_pow / (z - 1)
        m_pow = m_pow / Mf               # M^(-s)
        acc += m_pow / 2
        # correction terms: B_{2r}/(2r)! * s(s+1)...(s+2r-2) * M^(-s-2r+1)
        inv_m2 = 1 / (Mf * Mf)
        m_pow = m_pow * Mf               # M^(-s+1); each r multiplies by M^-2
        rising = mpc(z)                  # (s)_{2r-1}, starting at r = 1
        fact = 2                         # (2r)!, starting at r = 1
        for r in range(1, R + 1):
            if r > 1:
                rising = rising * (z + (2 * r - 3)) * (z + (2 * r - 2))
                fact *= (2 * r - 1) * (2 * r)
            m_pow = m_pow * inv_m2
            acc += bernoulli_number(2 * r) / fact * rising * m_pow
        result = acc
    return HPComplex(result, precision=prec)


_LN2PI_HALF_CACHE: dict[int, mpfr] = {}


def _half_ln_two_pi(work: int) -> mpfr:
    v = _LN2PI_HALF_CACHE.get(work)
    if v is None:
        v = gmpy2.log(2 * gmpy2.const_pi()) / 2
        _LN2PI_HALF_CACHE[work] = v
    return v


def _stirling_target(precision: int) -> int:
    return max(22, (2 * precision) // 5)


def _log_gamma_asymptotic(w: mpc, work: int) -> mpc:
    """log gamma for Re w >= the Stirling target, by the Bernoulli series."""
    main = (w - mpfr(1) / 2) * gmpy2.log(w) - w + _half_ln_two_pi(work)
    scale = abs(main) + 1
    cutoff = scale * mpfr(2) ** (-work + 8)
    acc = mpc(0)
    w2 = w * w
    pw = w                       # w^(2r-1)
    last = gmpy2.inf()
    for r in range(1, 64):
        b = bernoulli_number(2 * r)
        term = mpc(b / ((2 * r) * (2 * r - 1))) / pw
        mag = abs(term)
        if mag > last:
            break                # asymptotic tail turning; stop at the floor
        acc += term
        if mag < cutoff:
            break
        last = mag
        pw = pw * w2
    return main + acc


def gamma_ref(s: HPComplex, cfg: OracleConfig | None = None) -> HPComplex:
    """Gamma via recurrence shift + Stirling series (reflection for Re s < 1/2)."""
    cfg = cfg or _DEFAULT_CFG
    prec = cfg.precision
    work = prec + 32
    with work_ctx(work):
        z = mpc(s.mpc_value)
        _pole_guard(z, prec, "gamma")
        if z.real < mpfr(1) / 2:
            # gamma(z) = pi / (sin(pi z) * gamma(1 - z))
            pi = gmpy2.const_pi()
            recip = gamma_ref(HPComplex(1 - z, precision=work),
                              OracleConfig(precision=work,
                                           em_terms=cfg.em_terms,
                                           em_correction_order=cfg.em_correction_order))
            result = pi / (gmpy2.sin(pi * z) * recip.mpc_value)
        else:
            target = _stirling_target(prec)
            shift = max(0, int(gmpy2.ceil(target - z.real)))
            w = z + shift
            log_g = _log_gamma_asymptotic(w, work)
            result = gmpy2.exp(log_g)
            for i in range(shift):
                result = result / (z + i)
    return HPComplex(result, precision=prec)


def trigamma_ref(s: HPComplex, cfg: OracleConfig | None = None) -> HPComplex:
    """Trigamma via recurrence shift + asymptotic series.

        psi1(w) ~ 1/w + 1/(2 w^2) + sum_{r>=1} B_{2r} * w^(-2r-1)
    """
    cfg = cfg or _DEFAULT_CFG
    prec = cfg.precision
    work = prec + 32
    with work_ctx(work):
        z = mpc(s.mpc_value)
        _pole_guard(z, prec, "trigamma")
        if z.real < mpfr(1) / 2:
            # psi1(z) + psi1(1-z) = pi^2 / sin^2(pi z)
            pi = gmpy2.const_pi()
            other = trigamma_ref(HPComplex(1 - z, precision=work),
                                 OracleConfig(precision=work,
                                              em_terms=cfg.em_terms,
                                              em_correction_order=cfg.em_correction_order))
            sin_piz = gmpy2.sin(pi * z)
            result = pi * pi / (sin_piz * sin_piz) - other.mpc_value
        else:
            target = _stirling_target(prec)
            shift = max(0, int(gmpy2.ceil(target - z.real)))
            acc = mpc(0)
            for i in range(shift):
                d = z + i
                acc += 1 / (d * d)
            w = z + shift
            inv_w = 1 / w
            inv_w2 = inv_w * inv_w
            tail = inv_w + inv_w2 / 2
            cutoff = (abs(tail) + 1) * mpfr(2) ** (-work + 8)
            pw = inv_w * inv_w2          # w^(-3)
            last = gmpy2.inf()
            for r in range(1, 64):
                term = mpc(bernoulli_number(2 * r)) * pw
                mag = abs(term)
                if mag > last:
                    break
                tail += term
                if mag < cutoff:
                    break
                last = mag
                pw = pw * inv_w2
            result = acc + tail
    return HPComplex(result, precision=prec)
