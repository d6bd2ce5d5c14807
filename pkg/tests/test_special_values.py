"""Tests for exact zeta values at nonpositive integers and residue identities."""

import pytest
from gmpy2 import mpq

from zeta_alpha import (
    PreconditionViolated,
    k0_term,
    residue_identities,
    zeta_nonpositive,
)
from zeta_alpha.special_values import LAMBDA_CAP, zeta_via_euler

KNOWN = {
    1: mpq(-1, 2),      # zeta(0)
    2: mpq(-1, 12),     # zeta(-1)
    3: mpq(0),          # zeta(-2)
    4: mpq(1, 120),     # zeta(-3)
    5: mpq(0),          # zeta(-4)
    6: mpq(-1, 252),    # zeta(-5)
    8: mpq(1, 240),     # zeta(-7)
    12: mpq(691, 32760),  # zeta(-11): the 691 is the classic misprint trap
}


def test_known_values():
    for lam, expected in KNOWN.items():
        report = zeta_nonpositive(lam)
        assert report.via_alpha_prime == expected, lam
        assert report.via_euler == expected, lam
        assert report.agree


def test_even_arguments_vanish():
    # zeta(-2m) = 0 for m >= 1, i.e. odd lam >= 3
    for lam in range(3, 40, 2):
        assert zeta_nonpositive(lam).via_alpha_prime == 0


def test_routes_agree_up_to_cap():
    for lam in range(1, LAMBDA_CAP + 1):
        report = zeta_nonpositive(lam)
        assert report.agree, lam
        assert report.lam == lam


def test_delta_term():
    # the k = 0 contribution is -1 at lam = 1 and vanishes for lam >= 2
    assert k0_term(1) == -1
    assert zeta_nonpositive(1).delta_term == -1
    for lam in range(2, 15):
        assert k0_term(lam) == 0


def test_euler_route_standalone():
    assert zeta_via_euler(1) == mpq(-1, 2)
    assert zeta_via_euler(2) == mpq(-1, 12)
    assert zeta_via_euler(4) == mpq(1, 120)


def test_range_validation():
    for bad in (0, -3, LAMBDA_CAP + 1):
        with pytest.raises(PreconditionViolated):
            zeta_nonpositive(bad)
    with pytest.raises(PreconditionViolated):
        k0_term(0)
    with pytest.raises(PreconditionViolated):
        zeta_via_euler(-1)
    # the cap is configurable for callers who pre-built a bigger table
    report = zeta_nonpositive(45, max_lambda=60)
    assert report.agree


def test_residue_identities_all_pass():
    report = residue_identities(10)
    assert report.all_ok
    assert not report.failures()
    kinds = {c.name for c in report.checks}
    assert "value_at_minus_k" in kinds
    assert "odd_argument" in kinds
    assert "even_argument" in kinds


def test_residue_identities_spot_values():
    report = residue_identities(2)
    by = {(c.name, c.index): c for c in report.checks}
    # alpha_k(-k) = (-1)^k / k!
    assert by[("value_at_minus_k", 3)].expected == mpq(-1, 6)
    # alpha_2(-1) = B_2/2! = 1/12
    assert by[("odd_argument", 0)].expected == mpq(1, 12)
    # alpha_2(0) = -1 * B_2/2! = -1/12
    assert by[("even_argument", 0)].expected == mpq(-1, 12)
    for check in report.checks:
        assert check.ok


def test_residue_validation():
    with pytest.raises(PreconditionViolated):
        residue_identities(-1)
