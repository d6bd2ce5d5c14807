"""Acceptance suite: one test per published guarantee, at its stated tolerance.

Each test prints a single ``[criterion NN] ...: PASS/FAIL`` line (visible with
``pytest -s`` and in failure reports) and carries its runtime budget where one
is part of the guarantee.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from fractions import Fraction
from random import Random

import mpmath
import pytest
from gmpy2 import mpc, mpfr, mpq

from zeta_alpha import (
    HPComplex,
    PreconditionViolated,
    achievable_tolerance,
    alpha_prime_via_integral,
    build_alpha_prime,
    build_alpha_table,
    check_structural_properties,
    euler_gamma_limit,
    gamma_series,
    load_table,
    residue_identities,
    save_table,
    tail_bound,
    zeta_from_series,
    zeta_nonpositive,
    zeta_plus1_trigamma,
    zeta_shift_eulerian,
    zeta_shift_stirling2,
)
from zeta_alpha.cli import _bound_point_worker
from zeta_alpha.combinatorics import (
    power_sum_kernel_direct,
    power_sum_kernel_eulerian,
    power_sum_kernel_stirling2,
)
from zeta_alpha.exact_algebra import RationalPolynomial, rat_from_str
from zeta_alpha.hp import work_ctx
from zeta_alpha.series_eval import _alpha_seq_raw
from zeta_alpha.special_values import zeta_via_euler


@contextmanager
def criterion(num: int, summary: str):
    try:
        yield
    except BaseException:
        print(f"[criterion {num:02d}] {summary}: FAIL")
        raise
    print(f"[criterion {num:02d}] {summary}: PASS")


# frozen derivative values at s = 1, k = 0..20
TABLE_ALPHA_PRIME = [
    "0", "1/2", "5/24", "1/8", "251/2880", "19/288", "19087/362880",
    "751/17280", "1070017/29030400", "2857/89600", "26842253/958003200",
    "434293/17418240", "703604254357/31384184832000",
    "8181904909/402361344000", "1166309819657/62768369664000",
    "5044289/295206912", "8092989203533249/512189896458240000",
    "5026792806787/342372925440000",
    "12600467236042756559/919636959090769920000",
    "69028763155644023/5377993912811520000",
    "8136836498467582599787/674400436666564608000000",
]


def test_criterion_01_derivative_table_exact():
    with criterion(1, "21 frozen derivative values, < 1 s"):
        t0 = time.perf_counter()
        primes = build_alpha_prime(20)
        elapsed = time.perf_counter() - t0
        for k, text in enumerate(TABLE_ALPHA_PRIME):
            assert primes.value(k) == rat_from_str(text), f"k={k}"
        assert elapsed < 1.0, f"took {elapsed:.2f} s"


def test_criterion_02_low_order_polynomials(table_50):
    with criterion(2, "alpha_k verbatim for k <= 4"):
        q = mpq
        shift = RationalPolynomial((-1, 1))     # (s - 1)
        expected = {
            0: RationalPolynomial((1,)),
            1: RationalPolynomial((q(1, 2),)) * shift,
            2: RationalPolynomial((q(1, 12), q(1, 8))) * shift,
            3: RationalPolynomial((q(1, 24), q(1, 16), q(1, 48))) * shift,
            4: RationalPolynomial(
                (q(19, 720), q(23, 576), q(7, 384), q(1, 384))) * shift,
        }
        for k, poly in expected.items():
            assert table_50.alpha(k) == poly, f"k={k}"


def test_criterion_03_integral_cross_check():
    with criterion(3, "recursion equals rising-factorial integral, k <= 20"):
        primes = build_alpha_prime(20)
        for k in range(1, 21):
            assert primes.value(k) == alpha_prime_via_integral(k), f"k={k}"


def test_criterion_04_special_values_to_40():
    with criterion(4, "exact zeta(1-lambda) matches Bernoulli route, < 5 s"):
        t0 = time.perf_counter()
        for lam in range(1, 41):
            report = zeta_nonpositive(lam)
            assert report.agree, f"lambda={lam}"
            assert report.via_euler == zeta_via_euler(lam)
        elapsed = time.perf_counter() - t0
        assert zeta_nonpositive(1).via_alpha_prime == mpq(-1, 2)
        for lam in range(3, 41, 2):
            assert zeta_nonpositive(lam).via_alpha_prime == 0
        assert elapsed < 5.0, f"took {elapsed:.2f} s"


def test_criterion_05_structural_suite():
    with criterion(5, "divisibility/residue identities, k <= 41, < 30 s"):
        t0 = time.perf_counter()
        table = build_alpha_table(41, self_check=False)
        report = check_structural_properties(table, 41)
        assert report.all_ok, report.failures()
        residues = residue_identities(15)
        assert residues.all_ok, residues.failures()
        elapsed = time.perf_counter() - t0
        assert elapsed < 30.0, f"took {elapsed:.2f} s"


def test_criterion_06_positivity_to_200(table_200):
    with criterion(6, "beta_k coefficients strictly positive, k <= 200"):
        for k in range(1, 201):
            poly = table_200.beta(k)
            assert poly.degree == k - 1
            assert all(c > 0 for c in poly.coefficients), f"k={k}"


def test_criterion_07_growth_bound_to_1e4():
    with criterion(7, "growth bound dominates |alpha_k|, k <= 10^4, 5 points"):
        from zeta_alpha.alpha import BOUND_SAMPLE_POINTS

        items = [(i, s_text, 10_000, 128)
                 for i, s_text in enumerate(BOUND_SAMPLE_POINTS)]
        with ProcessPoolExecutor(max_workers=len(items)) as pool:
            results = sorted(pool.map(_bound_point_worker, items))
        for idx, ok, worst in results:
            assert ok, f"point {BOUND_SAMPLE_POINTS[idx]}: worst ratio {worst}"
            assert float(worst) < 1.0


def _mp(z: HPComplex) -> mpmath.mpc:
    def part(x):
        m, e = x.as_mantissa_exp()
        return mpmath.ldexp(int(m), int(e))

    return mpmath.mpc(part(z.real), part(z.imag))


def test_criterion_08_numeric_identities(table_200):
    with criterion(8, "five series identities certified at stated tol, < 5 min"):
        t0 = time.perf_counter()
        tol = 1e-3
        with mpmath.workprec(192):
            cases = [
                ("zeta(2)", zeta_from_series(HPComplex(2), tol),
                 mpmath.pi ** 2 / 6, tol),
                ("gamma(1/2)", gamma_series(HPComplex(Fraction(1, 2)), tol),
                 mpmath.sqrt(mpmath.pi), tol),
                ("shift(3,1)",
                 zeta_shift_stirling2(HPComplex(3), 1, tol, table=table_200),
                 mpmath.pi ** 2 / 3, tol),
                ("trigamma(2)", zeta_plus1_trigamma(HPComplex(2), tol),
                 mpmath.zeta(3), tol),
                ("eulergamma", euler_gamma_limit(1e-2),
                 mpmath.mpf("0.57721566490153286"), 1e-2),
            ]
            for name, result, truth, case_tol in cases:
                assert float(result.tail_bound) <= case_tol, \
                    f"{name}: bound {result.tail_bound} > {case_tol}"
                err = mpmath.fabs(_mp(result.value) - truth)
                assert err <= 2 * case_tol, f"{name}: error {err}"
        elapsed = time.perf_counter() - t0
        assert elapsed < 300.0, f"took {elapsed:.2f} s"


def test_criterion_09_certificate_soundness():
    with criterion(9, "tail bound dominates observed remainder, 30 random s"):
        rng = Random(20260825)
        for trial in range(30):
            re = 1.5 + 4.5 * rng.random()
            im = -5.0 + 10.0 * rng.random()
            s = HPComplex(re, im)
            n = 64
            while True:
                try:
                    bound = tail_bound(s, n, 1)
                    break
                except PreconditionViolated:
                    n *= 2
            with work_ctx(192):
                z = mpc(s.mpc_value)
                alphas = _alpha_seq_raw(z, 4 * n)
                v_n = sum(a / (z + k - 1)
                          for k, a in enumerate(alphas[:n + 1]))
                v_4n = sum(a / (z + k - 1) for k, a in enumerate(alphas))
                observed = abs(v_4n - v_n)
            assert mpfr(observed) <= bound, \
                f"s={re}+{im}i N={n}: observed {observed} > bound {bound}"


def test_criterion_10_method_agreement():
    with criterion(10, "Stirling-2 and Eulerian routes within 4*tol, 20 points"):
        rng = Random(1729)
        for trial in range(20):
            lam = rng.randint(1, 4)
            # hundredths with a nonzero last digit: never an integer, so the
            # k=0 denominators stay clear of their zeros at 2..lam+1
            re = Fraction(rng.randint(22, 57) * 10 + rng.randint(1, 9), 100)
            im = Fraction(rng.choice([-1, 1]) * rng.randint(35, 100), 100)
            s = HPComplex(re, im)
            tol = max(
                float(achievable_tolerance(s, identity="shift-stirling2",
                                           lam=lam, n_budget=1024)),
                float(achievable_tolerance(s, identity="shift-eulerian",
                                           lam=lam, n_budget=1024)),
                1e-3,
            )
            r1 = zeta_shift_stirling2(s, lam, tol)
            r2 = zeta_shift_eulerian(s, lam, tol)
            diff = abs(r1.value - r2.value)
            assert diff <= 4 * mpfr(tol), \
                f"s={re}+{im}i lam={lam}: diff {diff} > 4*{tol}"


def test_criterion_11_kernel_routes_exact():
    with criterion(11, "three power-sum kernel routes identical, lambda <= 10"):
        for lam in range(0, 11):
            direct = power_sum_kernel_direct(lam)
            assert direct == power_sum_kernel_stirling2(lam), f"lambda={lam}"
            assert direct == power_sum_kernel_eulerian(lam), f"lambda={lam}"
            assert direct.degree <= 11     # well inside order 12


def test_criterion_12_cache_round_trip(tmp_path, table_200):
    with criterion(12, "200-entry cache round-trip byte-identical"):
        p1 = tmp_path / "a.cache"
        p2 = tmp_path / "b.cache"
        save_table(table_200, p1)
        loaded = load_table(p1)             # checksum verified on load
        assert loaded.max_k == 200
        assert loaded.betas() == table_200.betas()
        save_table(loaded, p2)
        assert p1.read_bytes() == p2.read_bytes()
