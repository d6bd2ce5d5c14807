"""High-precision complex scalars on top of gmpy2.

``HPComplex`` is a thin immutable wrapper around ``gmpy2.mpc`` that carries an
explicit precision in bits. Arithmetic between two wrapped values is performed
at the *minimum* of the two precisions (the result never pretends to know more
than its least precise input); plain Python ints, ``fractions.Fraction`` and
``gmpy2.mpq`` scalars are treated as exact and inherit the other operand's
precision.

The module also exposes the rounding-context helpers used by the certified
bound computations: ``up_ctx``/``down_ctx`` give gmpy2 contexts with directed
rounding so monotone bound formulas can be evaluated rigorously.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpc, mpfr, mpq

from .errors import PrecisionTooLow

__all__ = ["HPComplex", "MIN_PRECISION", "DEFAULT_PRECISION",
           "up_ctx", "down_ctx", "work_ctx", "parse_complex",
           "abs_offset_upper", "abs_offset_lower"]

MIN_PRECISION = 64
DEFAULT_PRECISION = 128

Scalar = Union[int, Fraction, mpq, float, str, mpfr]


def work_ctx(precision: int) -> gmpy2.context:
    """Round-to-nearest context at the given precision."""
    return gmpy2.context(precision=precision)


def up_ctx(precision: int) -> gmpy2.context:
    """Round-toward-+inf context (for rigorous upper bounds on nonnegatives)."""
    return gmpy2.context(precision=precision, round=gmpy2.RoundUp)


def down_ctx(precision: int) -> gmpy2.context:
    """Round-toward--inf context (for rigorous lower bounds)."""
    return gmpy2.context(precision=precision, round=gmpy2.RoundDown)


def _check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise PrecisionTooLow(
            f"precision {precision} below minimum {MIN_PRECISION} bits")
    return int(precision)


def _to_mpfr_part(value: Scalar, precision: int) -> mpfr:
    if isinstance(value, Fraction):
        value = mpq(value.numerator, value.denominator)
    with work_ctx(precision):
        return mpfr(value)


class HPComplex:
    """Immutable arbitrary-precision complex number with tracked precision."""

    __slots__ = ("_z", "_prec")

    def __init__(self, re: Scalar | mpc | complex = 0, im: Scalar | None = None,
                 precision: int = DEFAULT_PRECISION):
        precision = _check_precision(precision)
        if isinstance(re, HPComplex):
            raise TypeError("use .with_precision() to re-wrap an HPComplex")
        if isinstance(re, (mpc, complex)) and im is None:
            with work_ctx(precision):
                z = mpc(re)
        else:
            re_part = _to_mpfr_part(re, precision)
            im_part = _to_mpfr_part(0 if im is None else im, precision)
            with work_ctx(precision):
                z = mpc(re_part, im_part)
        object.__setattr__(self, "_z", z)
        object.__setattr__(self, "_prec", precision)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _wrap(cls, z: mpc, precision: int) -> "HPComplex":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_z", z)
        object.__setattr__(obj, "_prec", precision)
        return obj

    def with_precision(self, precision: int) -> "HPComplex":
        precision = _check_precision(precision)
        with work_ctx(precision):
            return HPComplex._wrap(mpc(self._z), precision)

    # -- accessors ------------------------------------------------------------

    @property
    def precision(self) -> int:
        return self._prec

    @property
    def mpc_value(self) -> mpc:
        return self._z

    @property
    def real(self) -> mpfr:
        return self._z.real

    @property
    def imag(self) -> mpfr:
        return self._z.imag

    def is_zero(self) -> bool:
        return self._z == 0

    def __complex__(self) -> complex:
        return complex(self._z)

    def __abs__(self) -> mpfr:
        with work_ctx(self._prec):
            return abs(self._z)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> tuple[mpc | mpq | int, int] | None:
        """Return (raw operand, result precision), or None if unsupported."""
        if isinstance(other, HPComplex):
            return other._z, min(self._prec, other._prec)
        if isinstance(other, (int, mpq)):
            return other, self._prec
        if isinstance(other, Fraction):
            return mpq(other.numerator, other.denominator), self._prec
        if isinstance(other, (float, mpfr, complex, mpc)):
            return other, self._prec
        return None

    def _binop(self, other, op):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        raw, prec = coerced
        with work_ctx(prec):
            return HPComplex._wrap(op(self._z, raw), prec)

    def _rbinop(self, other, op):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        raw, prec = coerced
        with work_ctx(prec):
            return HPComplex._wrap(op(raw, self._z), prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._rbinop(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._rbinop(other, lambda a, b: a / b)

    def __neg__(self):
        return HPComplex._wrap(-self._z, self._prec)

    def __eq__(self, other):
        if isinstance(other, HPComplex):
            return self._z == other._z
        if isinstance(other, (int, float, complex, mpfr, mpc, mpq)):
            return self._z == other
        return NotImplemented

    def __hash__(self):
        return hash(self._z)

    def __repr__(self):
        return f"HPComplex({self._z!r}, precision={self._prec})"

    def __str__(self):
        return str(self._z)


def _real_offset_interval(z: mpc, offset, precision: int) -> tuple[mpfr, mpfr]:
    """Enclosure of Re(z) + offset (offset exact real: int or mpq)."""
    with down_ctx(precision):
        lo = z.real + offset
    with up_ctx(precision):
        hi = z.real + offset
    return lo, hi


def abs_offset_upper(z: mpc, offset, precision: int) -> mpfr:
    """Rigorous upper bound on |z + offset| for an exact real offset.

    Complex subtraction under a directed-rounding context is not monotone in
    |.| (the real part may change sign), so the parts are bounded separately
    and combined with round-up arithmetic.
    """
    lo, hi = _real_offset_interval(z, offset, precision)
    # abs/max must run inside the directed context: the ambient context may
    # have lower precision and would silently re-round the interval endpoints.
    with up_ctx(precision):
        rr = max(abs(lo), abs(hi))
        ii = abs(z.imag)
        return gmpy2.sqrt(rr * rr + ii * ii)


def abs_offset_lower(z: mpc, offset, precision: int) -> mpfr:
    """Rigorous lower bound on |z + offset| (0 when the interval straddles 0)."""
    lo, hi = _real_offset_interval(z, offset, precision)
    with down_ctx(precision):
        if lo <= 0 <= hi:
            rr = mpfr(0)
        else:
            rr = min(abs(lo), abs(hi))
        ii = abs(z.imag)
        return gmpy2.sqrt(rr * rr + ii * ii)


def parse_complex(text: str, precision: int = DEFAULT_PRECISION) -> HPComplex:
    """Parse ``"re"`` or ``"re,im"`` into an HPComplex.

    Parts may be any mpfr-readable decimal, or an exact rational ``p/q``.
    """
    parts = text.split(",")
    if len(parts) == 1:
        re_s, im_s = parts[0].strip(), "0"
    elif len(parts) == 2:
        re_s, im_s = parts[0].strip(), parts[1].strip()
    else:
        raise ValueError(f"cannot parse complex value {text!r} (use 're' or 're,im')")

    def _part(token: str):
        if "/" in token:
            return mpq(token)
        return token

    return HPComplex(_part(re_s), _part(im_s), precision=precision)
