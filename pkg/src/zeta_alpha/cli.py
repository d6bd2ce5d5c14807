"""Command-line front end: exact tables, certified evaluation, verification.

Output is one JSON object per line by default (``--format csv|plain`` for
tabular or bare output).  Exit codes are a stable contract:

    0  success (verify: all checks passed)
    1  verification failure
    2  flag/usage errors (argparse's own convention)
    3  exact-table limit exceeded
    4  truncation budget exhausted before certification
    5  evaluation at/too near a pole
    6  cache version mismatch or corruption
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Sequence

import gmpy2
from gmpy2 import mpfr, mpq

from . import cache as cache_mod
from . import series_eval, special_values
from .alpha import (
    BOUND_SAMPLE_POINTS,
    DEFAULT_TABLE_K,
    MAX_TABLE_K,
    alpha_seq_numeric,
    build_alpha_prime,
    build_alpha_table,
    check_structural_properties,
    default_alpha_table,
    theorem1_bound,
)
from .errors import (
    BudgetExceeded,
    CacheFormatError,
    IndexOutOfTable,
    PoleAt,
    PreconditionViolated,
    ZetaAlphaError,
)
from .exact_algebra import rat_from_str, rat_to_str
from .hp import DEFAULT_PRECISION, HPComplex, parse_complex, work_ctx

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_TABLE_LIMIT = 3
EXIT_BUDGET = 4
EXIT_POLE = 5
EXIT_CACHE = 6



@dataclass
class OutputRecord:
    kind: str  # exact | numeric | report
    payload: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def as_object(self) -> dict:
        obj = {"kind": self.kind}
        obj.update(self.payload)
        obj.update(self.metadata)
        return obj


class _Emitter:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv_keys: tuple[str, ...] | None = None

    def emit(self, record: OutputRecord) -> None:
        obj = record.as_object()
        if self.fmt == "json":
            print(json.dumps(obj), file=self.stream)
        elif self.fmt == "csv":
            keys = tuple(obj.keys())
            if keys != self._csv_keys:
                print(",".join(keys), file=self.stream)
                self._csv_keys = keys
            print(",".join(_csv_cell(obj[k]) for k in keys), file=self.stream)
        else:  # plain
            main_key = _PLAIN_MAIN.get(record.kind)
            if main_key and main_key in obj:
                print(obj[main_key], file=self.stream)
            else:
                print(" ".join(f"{k}={obj[k]}" for k in obj), file=self.stream)


_PLAIN_MAIN = {"exact": "expr", "numeric": "value"}


def _csv_cell(value) -> str:
    text = str(value)
    if "," in text or '"' in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


def _mpfr_str(x) -> str:
    """Decimal form with enough digits to round-trip the binary value."""
    if not isinstance(x, mpfr):
        x = mpfr(x)
    digits = max(17, int(x.precision * 0.30103) + 2)
    return format(x, f".{digits}g")


def _complex_payload(value: HPComplex) -> dict:
    z = value.mpc_value
    return {"value": _mpfr_str(z.real), "value_im": _mpfr_str(z.imag)}


def _series_record(name: str, s_text: str, result: series_eval.SeriesResult,
                   extra: dict | None = None) -> OutputRecord:
    payload = {"identity": name, "s": s_text}
    if extra:
        payload.update(extra)
    payload.update(_complex_payload(result.value))
    return OutputRecord(
        kind="numeric",
        payload=payload,
        metadata={
            "precision": result.value.precision,
            "terms_used": result.terms_used,
            "tail_bound": _mpfr_str(result.tail_bound),
            "target_tol": _mpfr_str(result.target_tol),
        },
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _table_for(k: int):
    if k > MAX_TABLE_K:
        raise IndexOutOfTable(
            f"k={k} beyond the hard table cap {MAX_TABLE_K}"
        )
    table = default_alpha_table()
    if k <= table.max_k:
        return table
    path = cache_mod.default_cache_path()
    if path is not None and path.exists():
        try:
            cached = cache_mod.load_table(path)
            if cached.max_k >= k:
                return cached
        except CacheFormatError:
            pass  # fall through to a fresh build; cache cmds surface errors
    return build_alpha_table(k, self_check=False)


def cmd_alpha(args, emitter: _Emitter) -> int:
    k = args.k
    if args.prime:
        if k < 1:
            raise PreconditionViolated("--prime needs k >= 1")
        value = build_alpha_prime(k).value(k)
        emitter.emit(OutputRecord("exact", {"k": k, "expr": rat_to_str(value),
                                            "what": "alpha_prime_at_1"}))
        return EXIT_OK
    if args.at is not None:
        table = _table_for(k)
        try:
            s_exact = rat_from_str(args.at)
        except ValueError:
            s_exact = None
        if s_exact is not None:
            value = table.alpha(k).eval_rational(s_exact)
            emitter.emit(OutputRecord("exact", {"k": k, "s": args.at,
                                                "expr": rat_to_str(value)}))
        else:
            s = parse_complex(args.at, precision=args.prec)
            poly = table.alpha(k)
            value = poly.eval_complex(s)
            rec = OutputRecord("numeric",
                               {"k": k, "s": args.at},
                               {"precision": s.precision})
            rec.payload.update(_complex_payload(value))
            emitter.emit(rec)
        return EXIT_OK
    # default / --exact: canonical polynomial
    table = _table_for(k)
    if k == 0:
        expr = "1"
    else:
        expr = f"(s-1)*({table.beta(k).to_pretty()})"
    emitter.emit(OutputRecord("exact", {"k": k, "expr": expr}))
    return EXIT_OK


_EVALUATORS: dict[str, Callable] = {
    "gamma": lambda s, args: series_eval.gamma_series(s, args.tol),
    "gammazeta": lambda s, args: series_eval.gamma_zeta_series(s, args.tol),
    "zeta": lambda s, args: series_eval.zeta_from_series(s, args.tol),
    "shift-stirling2": lambda s, args: series_eval.zeta_shift_stirling2(
        s, _need_lambda(args), args.tol),
    "shift-eulerian": lambda s, args: series_eval.zeta_shift_eulerian(
        s, _need_lambda(args), args.tol),
    "trigamma": lambda s, args: series_eval.zeta_plus1_trigamma(s, args.tol),
}


def _need_lambda(args) -> int:
    if args.lam is None:
        raise PreconditionViolated("this identity requires --lambda")
    return args.lam


def cmd_eval(args, emitter: _Emitter) -> int:
    if args.identity == "eulergamma":
        result = series_eval.euler_gamma_limit(args.tol, precision=args.prec)
        emitter.emit(_series_record("eulergamma", "-", result))
        return EXIT_OK
    if args.s is None:
        raise PreconditionViolated("--s is required for this identity")
    s = parse_complex(args.s, precision=args.prec)
    result = _EVALUATORS[args.identity](s, args)
    extra = {"lambda": args.lam} if args.identity.startswith("shift-") else None
    emitter.emit(_series_record(args.identity, args.s, result, extra))
    return EXIT_OK


def cmd_special(args, emitter: _Emitter) -> int:
    if (args.lam is None) == (args.range is None):
        raise PreconditionViolated("exactly one of --lambda / --range required")
    if args.lam is not None:
        lams = [args.lam]
    else:
        lo, hi = args.range
        if not 1 <= lo <= hi:
            raise PreconditionViolated(f"bad range {lo}..{hi}")
        lams = list(range(lo, hi + 1))
    ok = True
    for lam in lams:
        rep = special_values.zeta_nonpositive(lam)
        ok = ok and rep.agree
        emitter.emit(OutputRecord("exact", {
            "lambda": lam,
            "expr": rat_to_str(rep.via_alpha_prime),
            "via_euler": rat_to_str(rep.via_euler),
            "delta_term": rat_to_str(rep.delta_term),
            "agree": rep.agree,
        }))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# -- verify suites ----------------------------------------------------------


def _bound_point_worker(item: tuple[int, str, int, int]) -> tuple[int, bool, str]:
    idx, s_text, kmax, prec = item
    s = parse_complex(s_text, precision=prec)
    seq = alpha_seq_numeric(s, kmax)
    worst = mpfr(0)
    ok = True
    for k, a in enumerate(seq):
        bound = theorem1_bound(s, k)
        mag = abs(a.mpc_value if isinstance(a, HPComplex) else a)
        if mag > bound:
            ok = False
        ratio = mag / bound
        if ratio > worst:
            worst = ratio
    return idx, ok, worst.__format__(".6g")


def _verify_structure(kmax: int, emitter: _Emitter) -> bool:
    table = build_alpha_table(kmax, self_check=False) \
        if kmax > default_alpha_table().max_k else default_alpha_table()
    report = check_structural_properties(table, kmax)
    positivity = all(
        all(c > 0 for c in table.beta(k).coefficients)
        and table.beta(k).degree == k - 1
        for k in range(1, kmax + 1)
    )
    m_max = min((kmax - 2) // 2, 15) if kmax >= 2 else 0
    residues = special_values.residue_identities(m_max)
    ok = report.all_ok and positivity and residues.all_ok
    emitter.emit(OutputRecord("report", {
        "suite": "structure",
        "kmax": kmax,
        "checks": len(report.checks) + len(residues.checks) + kmax,
        "positivity": positivity,
        "ok": ok,
    }))
    return ok


def _verify_identities(emitter: _Emitter, seed: int, points: int,
                       parallel: bool) -> bool:
    rng = Random(seed)
    ok = True
    done = 0
    for i in range(points):
        lam = rng.randint(1, 4)
        re_tenths = rng.randint(22, 58)
        if re_tenths % 10 == 0:
            re_tenths += 1      # integers 2..lam+1 zero a k=0 denominator
        re = mpq(re_tenths, 10)
        im = mpq(rng.choice([-1, 1]) * rng.randint(35, 100), 100)
        with work_ctx(DEFAULT_PRECISION):
            z = gmpy2.mpc(mpfr(re), mpfr(im))
        s = HPComplex(z, precision=DEFAULT_PRECISION)
        tol = max(
            float(series_eval.achievable_tolerance(
                s, identity="shift-stirling2", lam=lam, n_budget=1024)),
            float(series_eval.achievable_tolerance(
                s, identity="shift-eulerian", lam=lam, n_budget=1024)),
            1e-3,
        )
        r1 = series_eval.zeta_shift_stirling2(s, lam, tol)
        r2 = series_eval.zeta_shift_eulerian(s, lam, tol)
        diff = abs((r1.value - r2.value).mpc_value)
        point_ok = diff <= 4 * mpfr(tol)
        ok = ok and point_ok
        done += 1
        emitter.emit(OutputRecord("report", {
            "suite": "identities", "point": f"{float(re)}{float(im):+}i",
            "lambda": lam, "tol": f"{tol:.3g}",
            "difference": diff.__format__(".3g"), "ok": point_ok,
        }))
    return ok and done == points


def _verify_bounds(kmax: int, emitter: _Emitter, parallel: bool) -> bool:
    items = [(i, s_text, kmax, 128)
             for i, s_text in enumerate(BOUND_SAMPLE_POINTS)]
    if parallel:
        with ProcessPoolExecutor() as pool:
            results = sorted(pool.map(_bound_point_worker, items))
    else:
        results = [_bound_point_worker(item) for item in items]
    ok = True
    for idx, point_ok, worst in results:
        ok = ok and point_ok
        emitter.emit(OutputRecord("report", {
            "suite": "bounds", "s": BOUND_SAMPLE_POINTS[idx], "kmax": kmax,
            "worst_ratio": worst, "ok": point_ok,
        }))
    return ok


def cmd_verify(args, emitter: _Emitter) -> int:
    ok = True
    if args.suite in ("structure", "all"):
        ok = _verify_structure(args.kmax, emitter) and ok
    if args.suite in ("identities", "all"):
        ok = _verify_identities(emitter, args.seed, args.points,
                                args.parallel) and ok
    if args.suite in ("bounds", "all"):
        ok = _verify_bounds(args.bound_kmax, emitter, args.parallel) and ok
    emitter.emit(OutputRecord("report", {"suite": args.suite, "ok": ok}))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cache_path(args):
    path = args.path or cache_mod.default_cache_path()
    if path is None:
        raise PreconditionViolated(
            "no cache path: pass PATH or set ZETA_ALPHA_CACHE"
        )
    return path


def cmd_cache(args, emitter: _Emitter) -> int:
    path = _cache_path(args)
    if args.action == "save":
        kmax = args.kmax or DEFAULT_TABLE_K
        if kmax > MAX_TABLE_K:
            raise IndexOutOfTable(f"kmax={kmax} beyond hard cap {MAX_TABLE_K}")
        table = build_alpha_table(kmax, self_check=False)
        cache_mod.save_table(table, path)
        emitter.emit(OutputRecord("report", {
            "action": "save", "path": str(path), "max_k": table.max_k,
            "ok": True,
        }))
    else:
        table = cache_mod.load_table(path, kmax=args.kmax)
        emitter.emit(OutputRecord("report", {
            "action": "load", "path": str(path), "max_k": table.max_k,
            "ok": True,
        }))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta-alpha",
        description="Exact and certified-numeric tools for the alpha_k(s) "
                    "coefficient family and its gamma/zeta series.",
    )
    parser.add_argument("--format", choices=("json", "csv", "plain"),
                        default="json", help="output format (default json)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_alpha = sub.add_parser("alpha", help="exact alpha_k polynomials/values")
    p_alpha.add_argument("k", type=int)
    p_alpha.add_argument("--at", metavar="S",
                         help="evaluate at s (rational or re,im)")
    p_alpha.add_argument("--exact", action="store_true",
                         help="print the canonical polynomial (default)")
    p_alpha.add_argument("--prime", action="store_true",
                         help="print alpha_k'(1) instead")
    p_alpha.add_argument("--prec", type=int, default=DEFAULT_PRECISION)
    p_alpha.set_defaults(func=cmd_alpha)

    p_eval = sub.add_parser("eval", help="certified series evaluation")
    p_eval.add_argument("identity", choices=(
        "gamma", "gammazeta", "zeta", "shift-stirling2", "shift-eulerian",
        "trigamma", "eulergamma"))
    p_eval.add_argument("--s", help="evaluation point: re or re,im")
    p_eval.add_argument("--lambda", dest="lam", type=int,
                        help="shift order for shift-* identities")
    p_eval.add_argument("--tol", type=float, default=1e-3)
    p_eval.add_argument("--prec", type=int, default=DEFAULT_PRECISION)
    p_eval.set_defaults(func=cmd_eval)

    p_special = sub.add_parser("special", help="exact zeta(1-lambda)")
    p_special.add_argument("--lambda", dest="lam", type=int)
    p_special.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    p_special.set_defaults(func=cmd_special)

    p_verify = sub.add_parser("verify", help="verification suites")
    p_verify.add_argument("--suite", choices=(
        "structure", "identities", "bounds", "all"), default="all")
    p_verify.add_argument("--kmax", type=int, default=41,
                          help="exact-structure depth")
    p_verify.add_argument("--bound-kmax", type=int, default=2000,
                          help="numeric magnitude-bound depth")
    p_verify.add_argument("--points", type=int, default=6,
                          help="random points for the identities suite")
    p_verify.add_argument("--seed", type=int, default=20260825)
    p_verify.add_argument("--parallel", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_cache = sub.add_parser("cache", help="save/load the exact table")
    p_cache.add_argument("action", choices=("save", "load"))
    p_cache.add_argument("path", nargs="?", default=None,
                         help="cache file (default $ZETA_ALPHA_CACHE)")
    p_cache.add_argument("--kmax", type=int, default=None)
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emitter = _Emitter(args.format)
    try:
        return args.func(args, emitter)
    except PreconditionViolated as exc:
        print(f"zeta-alpha: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexOutOfTable as exc:
        print(f"zeta-alpha: {exc}", file=sys.stderr)
        return EXIT_TABLE_LIMIT
    except BudgetExceeded as exc:
        emitter.emit(OutputRecord("report", {
            "error": "budget-exceeded", "detail": str(exc),
            "best_bound": None if exc.best_bound is None
            else exc.best_bound.__format__(".6g"),
            "terms": exc.terms,
        }))
        return EXIT_BUDGET
    except PoleAt as exc:
        emitter.emit(OutputRecord("report", {
            "error": "pole", "point": exc.point, "detail": str(exc),
        }))
        return EXIT_POLE
    except CacheFormatError as exc:
        print(f"zeta-alpha: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except ZetaAlphaError as exc:  # residual library errors: usage-shaped
        print(f"zeta-alpha: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
