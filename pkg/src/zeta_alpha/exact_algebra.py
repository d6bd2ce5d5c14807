"""Exact rational arithmetic and dense univariate polynomials.

Rationals are ``gmpy2.mpq`` throughout: GMP keeps them in lowest terms with a
positive denominator, hashes them compatibly with ``fractions.Fraction``, and
``str()`` already yields the canonical ``num/den`` form (denominator omitted
when it is 1) used by the serialization layer and the cache file format.

``RationalPolynomial`` stores coefficients densely, lowest power first, in a
tuple with no trailing zeros (the zero polynomial is the empty tuple). All
operations return new objects; nothing mutates in place. Evaluation is exact
Horner for rational arguments, and precision-tracked Horner via ``HPComplex``
for complex ones.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from gmpy2 import mpq

from .errors import NotDivisible
from .hp import HPComplex, work_ctx

__all__ = ["Rational", "rat", "rat_to_str", "rat_from_str",
           "RationalPolynomial", "poly_to_json", "poly_from_json"]

Rational = mpq
RationalLike = Union[int, str, Fraction, mpq]


def rat(value: RationalLike = 0, den: RationalLike | None = None) -> mpq:
    """Coerce to an exact rational (lowest terms, positive denominator)."""
    if den is not None:
        return mpq(value) / mpq(den)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def rat_to_str(value: mpq) -> str:
    """Canonical base-10 form: ``num/den``, or just ``num`` when den == 1."""
    return str(mpq(value))


def rat_from_str(text: str) -> mpq:
    """Inverse of :func:`rat_to_str`. Rejects anything with a decimal point."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    return mpq(text)


class RationalPolynomial:
    """Dense polynomial over the rationals, coefficients lowest power first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def _from_trusted(cls, coeffs: list[mpq]) -> "RationalPolynomial":
        # internal: coeffs already mpq and trailing-zero-free
        obj = object.__new__(cls)
        object.__setattr__(obj, "_coeffs", tuple(coeffs))
        return obj

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        """The polynomial ``s``."""
        return cls((0, 1))

    # -- basic structure ------------------------------------------------------

    @property
    def coefficients(self) -> tuple[mpq, ...]:
        return self._coeffs

    def coefficient(self, power: int) -> mpq:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return mpq(0)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, mpq, Fraction)):
            return self == RationalPolynomial((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other) -> "RationalPolynomial":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and out[-1] == 0:
            out.pop()
        return RationalPolynomial._from_trusted(out)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial._from_trusted([-c for c in self._coeffs])

    def __sub__(self, other) -> "RationalPolynomial":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, mpq, Fraction)):
            c = rat(other)
            if c == 0:
                return RationalPolynomial.zero()
            return RationalPolynomial._from_trusted([a * c for a in self._coeffs])
        if isinstance(other, RationalPolynomial):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return RationalPolynomial.zero()
            out = [mpq(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
            return RationalPolynomial._from_trusted(out)
        return NotImplemented

    __rmul__ = __mul__

    def shift_mul(self) -> "RationalPolynomial":
        """Multiply by the variable (exact degree bump, no convolution)."""
        if not self._coeffs:
            return self
        return RationalPolynomial._from_trusted([mpq(0), *self._coeffs])

    def derivative(self) -> "RationalPolynomial":
        cs = [i * c for i, c in enumerate(self._coeffs)][1:]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPolynomial._from_trusted(cs)

    # -- evaluation -----------------------------------------------------------

    def eval_rational(self, x: RationalLike) -> mpq:
        """Exact Horner evaluation."""
        x = rat(x)
        acc = mpq(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: HPComplex) -> HPComplex:
        """Horner evaluation at an HPComplex point, at the point's precision."""
        with work_ctx(x.precision):
            acc = x.mpc_value * 0
            for c in reversed(self._coeffs):
                acc = acc * x.mpc_value + c
        return HPComplex(acc, precision=x.precision)

    # -- division -------------------------------------------------------------

    def divide_linear(self, root: RationalLike) -> "RationalPolynomial":
        """Exact quotient by ``(s - root)`` via synthetic division.

        Raises :class:`NotDivisible` when the remainder (= self(root)) is not
        zero; nothing is returned partially.
        """
        root = rat(root)
        if not self._coeffs:
            return self
        quotient = [mpq(0)] * (len(self._coeffs) - 1)
        acc = mpq(0)
        for i in range(len(self._coeffs) - 1, 0, -1):
            acc = acc * root + self._coeffs[i]
            quotient[i - 1] = acc
        remainder = acc * root + self._coeffs[0]
        if remainder != 0:
            raise NotDivisible(
                f"remainder {remainder} dividing by (s - {root})")
        while quotient and quotient[-1] == 0:
            quotient.pop()
        return RationalPolynomial._from_trusted(quotient)

    # -- formatting -----------------------------------------------------------

    def __str__(self) -> str:
        return self.to_pretty()

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self._coeffs]})"

    def to_pretty(self, variable: str = "s") -> str:
        """Human form, highest power first: ``1/8*s + 1/12``."""
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = rat_to_str(mag)
            else:
                var = variable if power == 1 else f"{variable}^{power}"
                body = var if mag == 1 else f"{rat_to_str(mag)}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def _coerce_poly(value) -> RationalPolynomial | None:
    if isinstance(value, RationalPolynomial):
        return value
    if isinstance(value, (int, mpq, Fraction)):
        return RationalPolynomial((value,))
    return None


def poly_to_json(poly: RationalPolynomial) -> list[str]:
    """Coefficient list as canonical rational strings, lowest power first."""
    return [rat_to_str(c) for c in poly.coefficients]


def poly_from_json(items: Sequence[str]) -> RationalPolynomial:
    return RationalPolynomial([rat_from_str(s) for s in items])
