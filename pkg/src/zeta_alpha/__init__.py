"""Exact coefficient tables and certified series evaluation for gamma/zeta identities.

The package is organized bottom-up:

* :mod:`zeta_alpha.exact_algebra` — exact rationals and dense polynomials
* :mod:`zeta_alpha.combinatorics` — Stirling/Eulerian/Bernoulli families
* :mod:`zeta_alpha.alpha` — the alpha_k(s) table, derivative values, bounds
* :mod:`zeta_alpha.oracle` — independent reference evaluators (zeta, gamma, trigamma)
* :mod:`zeta_alpha.series_eval` — certified numeric evaluation of the series identities
* :mod:`zeta_alpha.special_values` — exact zeta values at nonpositive integers
* :mod:`zeta_alpha.cache` — on-disk table cache
* :mod:`zeta_alpha.cli` — the ``zeta-alpha`` command
"""

from .alpha import (AlphaPrimeTable, AlphaTable, alpha_eval,
                    alpha_prime_via_integral, alpha_seq_numeric,
                    alpha_via_stirling1, build_alpha_prime, build_alpha_table,
                    check_structural_properties, default_alpha_table,
                    magnitude_constant_upper, theorem1_bound)
from .cache import load_table, save_table
from .errors import (BudgetExceeded, CacheFormatError, IndexOutOfTable,
                     NotDivisible, PoleAt, PrecisionTooLow,
                     PreconditionViolated, ZetaAlphaError)
from .exact_algebra import RationalPolynomial, rat, rat_from_str, rat_to_str
from .hp import (DEFAULT_PRECISION, MIN_PRECISION, HPComplex,
                 abs_offset_lower, abs_offset_upper, parse_complex, work_ctx)
from .oracle import OracleConfig, gamma_ref, trigamma_ref, zeta_em
from .series_eval import (SeriesResult, achievable_tolerance,
                          euler_gamma_limit, gamma_series, gamma_zeta_series,
                          tail_bound, zeta_from_series, zeta_plus1_trigamma,
                          zeta_shift_eulerian, zeta_shift_stirling2)
from .special_values import (ResidueReport, SpecialValueReport, k0_term,
                             residue_identities, zeta_nonpositive)

__version__ = "0.1.0"

__all__ = [
    "AlphaPrimeTable", "AlphaTable", "DEFAULT_PRECISION", "HPComplex",
    "MIN_PRECISION", "OracleConfig",
    "RationalPolynomial", "ResidueReport", "SeriesResult",
    "SpecialValueReport",
    "abs_offset_lower", "abs_offset_upper",
    "achievable_tolerance", "alpha_eval", "alpha_prime_via_integral",
    "alpha_seq_numeric", "alpha_via_stirling1", "build_alpha_prime",
    "build_alpha_table", "check_structural_properties", "default_alpha_table",
    "euler_gamma_limit", "gamma_ref", "gamma_series", "gamma_zeta_series",
    "k0_term", "load_table", "magnitude_constant_upper", "parse_complex",
    "rat", "rat_from_str", "rat_to_str", "residue_identities", "save_table",
    "tail_bound", "theorem1_bound", "trigamma_ref", "work_ctx", "zeta_em",
    "zeta_from_series", "zeta_nonpositive", "zeta_plus1_trigamma",
    "zeta_shift_eulerian", "zeta_shift_stirling2",
    "BudgetExceeded", "CacheFormatError", "IndexOutOfTable", "NotDivisible",
    "PoleAt", "PrecisionTooLow", "PreconditionViolated", "ZetaAlphaError",
    "__version__",
]
