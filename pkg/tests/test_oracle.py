"""Cross-checks of the reference evaluators against mpmath and functional equations.

mpmath shares no code with the package's series machinery, so agreement here
is meaningful independent evidence, not a tautology.
"""

import mpmath
import pytest
from gmpy2 import mpc, mpfr

from zeta_alpha import (
    HPComplex,
    OracleConfig,
    PoleAt,
    PreconditionViolated,
    gamma_ref,
    trigamma_ref,
    zeta_em,
)
from zeta_alpha.oracle import nonpositive_integer_distance


def _to_mp(z: HPComplex) -> mpmath.mpc:
    """Exact mpfr -> mpmath transfer through the binary mantissa/exponent."""
    def part(x):
        m, e = x.as_mantissa_exp()
        return mpmath.ldexp(int(m), int(e))

    return mpmath.mpc(part(z.real), part(z.imag))


def _close(ours: HPComplex, theirs, tol="1e-30") -> bool:
    return mpmath.fabs(_to_mp(ours) - theirs) < mpmath.mpf(tol)


# points given as (re, im) pairs of exact strings both sides can parse
POINTS = [("2", "0"), ("3.5", "0"), ("0.5", "0"), ("-1.5", "0"),
          ("2", "3"), ("0.5", "14.125"), ("-2.25", "1")]


def test_zeta_against_mpmath(oracle_128):
    with mpmath.workprec(256):
        for re, im in POINTS:
            ours = zeta_em(HPComplex(re, im), oracle_128)
            theirs = mpmath.zeta(mpmath.mpc(mpmath.mpf(re), mpmath.mpf(im)))
            assert _close(ours, theirs), (re, im)


def test_zeta_known_closed_forms(oracle_128):
    with mpmath.workprec(256):
        assert _close(zeta_em(HPComplex(2), oracle_128), mpmath.pi ** 2 / 6)
        assert _close(zeta_em(HPComplex(4), oracle_128), mpmath.pi ** 4 / 90)
        assert _close(zeta_em(HPComplex(0), oracle_128), mpmath.mpf("-0.5"))
        assert _close(zeta_em(HPComplex(-1), oracle_128),
                      mpmath.mpf(-1) / 12)


def test_zeta_at_256_bits_with_explicit_budget():
    cfg = OracleConfig(precision=256, em_terms=300, em_correction_order=25)
    with mpmath.workprec(400):
        ours = zeta_em(HPComplex(3, precision=256), cfg)
        assert _close(ours, mpmath.zeta(3), tol="1e-70")
        ours = zeta_em(HPComplex("0.5", "14.125", precision=256), cfg)
        theirs = mpmath.zeta(mpmath.mpc("0.5", "14.125"))
        assert _close(ours, theirs, tol="1e-70")


def test_gamma_against_mpmath(oracle_128):
    with mpmath.workprec(256):
        for re, im in POINTS:
            ours = gamma_ref(HPComplex(re, im), oracle_128)
            theirs = mpmath.gamma(mpmath.mpc(mpmath.mpf(re), mpmath.mpf(im)))
            assert _close(ours, theirs), (re, im)


def test_gamma_half_is_sqrt_pi(oracle_128):
    with mpmath.workprec(256):
        assert _close(gamma_ref(HPComplex("0.5"), oracle_128),
                      mpmath.sqrt(mpmath.pi))


def test_gamma_recurrence(oracle_128):
    # gamma(z + 1) = z * gamma(z), including through the reflection branch
    for re, im in [("0.25", "0"), ("-0.75", "0.5"), ("3.125", "-2")]:
        z = HPComplex(re, im)
        lhs = gamma_ref(z + 1, oracle_128)
        rhs = z * gamma_ref(z, oracle_128)
        assert abs(lhs - rhs) < mpfr("1e-30"), (re, im)


def test_trigamma_against_mpmath(oracle_128):
    with mpmath.workprec(256):
        for re, im in POINTS:
            ours = trigamma_ref(HPComplex(re, im), oracle_128)
            theirs = mpmath.polygamma(
                1, mpmath.mpc(mpmath.mpf(re), mpmath.mpf(im)))
            assert _close(ours, theirs), (re, im)


def test_trigamma_known_value(oracle_128):
    # psi1(1) = pi^2/6, psi1(2) = pi^2/6 - 1
    with mpmath.workprec(256):
        assert _close(trigamma_ref(HPComplex(1), oracle_128),
                      mpmath.pi ** 2 / 6)
        assert _close(trigamma_ref(HPComplex(2), oracle_128),
                      mpmath.pi ** 2 / 6 - 1)


def test_trigamma_recurrence(oracle_128):
    for re, im in [("0.3", "0"), ("-1.3", "0.25"), ("5.5", "2")]:
        z = HPComplex(re, im)
        lhs = trigamma_ref(z + 1, oracle_128)
        rhs = trigamma_ref(z, oracle_128) - 1 / (z * z)
        assert abs(lhs - rhs) < mpfr("1e-30"), (re, im)


def test_pole_refusals(oracle_128):
    with pytest.raises(PoleAt):
        zeta_em(HPComplex(1), oracle_128)
    with pytest.raises(PoleAt):
        gamma_ref(HPComplex(0), oracle_128)
    with pytest.raises(PoleAt):
        gamma_ref(HPComplex(-3), oracle_128)
    with pytest.raises(PoleAt):
        gamma_ref(HPComplex(-3 + 2.0 ** -70), oracle_128)
    with pytest.raises(PoleAt):
        trigamma_ref(HPComplex(-2), oracle_128)


def test_zeta_euler_maclaurin_range_guard(oracle_128):
    # default order 15 only reaches Re s > -29
    with pytest.raises(PreconditionViolated):
        zeta_em(HPComplex(-30), oracle_128)


def test_config_validation():
    with pytest.raises(PreconditionViolated):
        OracleConfig(precision=32)
    with pytest.raises(PreconditionViolated):
        OracleConfig(em_correction_order=0)
    with pytest.raises(PreconditionViolated):
        OracleConfig(em_correction_order=31)
    assert OracleConfig(precision=192).effective_em_terms == 128
    assert OracleConfig(precision=64).effective_em_terms == 50
    assert OracleConfig(em_terms=77).effective_em_terms == 77


def test_nonpositive_integer_distance():
    assert nonpositive_integer_distance(mpc(5, 0)) == 5
    assert nonpositive_integer_distance(mpc(-3, 0)) == 0
    assert nonpositive_integer_distance(mpc(-2.5, 0)) == 0.5
    assert nonpositive_integer_distance(mpc(0.5, 0)) == 0.5
    assert nonpositive_integer_distance(mpc(-1, 2)) == 2
    d = nonpositive_integer_distance(mpc(1.5, 1))
    assert abs(d * d - mpfr("3.25")) < mpfr("1e-15")
