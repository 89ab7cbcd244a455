"""Exact Gaussian-rational scalars."""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Any, Union

from weighted_core_ep.exceptions import BackendMismatchError

__all__ = ["ONE", "ZERO", "GaussianRational", "RationalLike"]

RationalLike = Union[int, Fraction, str, "GaussianRational"]


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, numbers.Complex):
        raise BackendMismatchError(
            f"Floating value {value!r} cannot enter the exact backend"
        )
    raise TypeError(f"Cannot interpret {value!r} as a rational number")


class GaussianRational:
    """Complex number with rational real and imaginary parts.

    Instances are immutable and always canonical: both parts are reduced
    ``Fraction`` objects. Arithmetic accepts ints and fractions but
    refuses floats, so exact and floating values never mix silently.
    """

    __slots__ = ("_imag", "_real")

    _real: Fraction
    _imag: Fraction

    def __init__(self, real: Any = 0, imag: Any = 0) -> None:
        if isinstance(real, GaussianRational):
            if imag:
                raise TypeError("imag must be omitted for a GaussianRational")
            self._real, self._imag = real._real, real._imag
            return
        self._real = _as_fraction(real)
        self._imag = _as_fraction(imag)

    @classmethod
    def _make(cls, real: Fraction, imag: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        obj._real = real
        obj._imag = imag
        return obj

    @classmethod
    def coerce(cls, value: Any) -> GaussianRational:
        """Convert ints, fractions and rational strings; pass through."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls._make(_as_fraction(value), _ZERO_FRACTION)

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``"a/b"``, ``"a/b+c/d i"``, ``"-i"`` and similar forms."""
        compact = "".join(text.split())
        if not compact:
            raise ValueError("Empty rational literal")
        if not compact.endswith("i"):
            return cls._make(Fraction(compact), _ZERO_FRACTION)
        body = compact[:-1]
        # Split before the sign of the imaginary part; rational literals
        # carry no exponents, so any later sign starts the imaginary part.
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            real_text, imag_text = body[:split], body[split:]
        else:
            real_text, imag_text = "0", body
        if imag_text in ("", "+"):
            imag = Fraction(1)
        elif imag_text == "-":
            imag = Fraction(-1)
        else:
            imag = Fraction(imag_text)
        return cls._make(Fraction(real_text), imag)

    @property
    def real(self) -> Fraction:
        return self._real

    @property
    def imag(self) -> Fraction:
        return self._imag

    def conjugate(self) -> GaussianRational:
        if not self._imag:
            return self
        return GaussianRational._make(self._real, -self._imag)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self._real * self._real + self._imag * self._imag

    def is_real(self) -> bool:
        return not self._imag

    # Arithmetic

    @staticmethod
    def _other(value: Any) -> GaussianRational | None:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, numbers.Rational):
            return GaussianRational._make(_as_fraction(value), _ZERO_FRACTION)
        if isinstance(value, numbers.Complex):
            raise BackendMismatchError(
                f"Cannot combine exact scalar with floating value {value!r}"
            )
        return None

    def __add__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational._make(self._real + o._real, self._imag + o._imag)

    __radd__ = __add__

    def __sub__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return GaussianRational._make(self._real - o._real, self._imag - o._imag)

    def __rsub__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._real, self._imag, o._real, o._imag
        if not b and not d:
            return GaussianRational._make(a * c, _ZERO_FRACTION)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other: Any) -> GaussianRational:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def reciprocal(self) -> GaussianRational:
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        if not self._imag:
            return GaussianRational._make(1 / self._real, _ZERO_FRACTION)
        norm = self.abs2()
        return GaussianRational._make(self._real / norm, -self._imag / norm)

    def __neg__(self) -> GaussianRational:
        return GaussianRational._make(-self._real, -self._imag)

    def __pos__(self) -> GaussianRational:
        return self

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** -exponent
        result = _ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison and conversion

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._real == other._real and self._imag == other._imag
        if isinstance(other, int | Fraction):
            return not self._imag and self._real == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._imag:
            return hash(self._real)
        return hash((self._real, self._imag))

    def __bool__(self) -> bool:
        return bool(self._real) or bool(self._imag)

    def __complex__(self) -> complex:
        return complex(float(self._real), float(self._imag))

    def __str__(self) -> str:
        if not self._imag:
            return str(self._real)
        if self._imag == 1:
            imag = "i"
        elif self._imag == -1:
            imag = "-i"
        else:
            imag = f"{self._imag}i"
        if not self._real:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{self._real}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"


_ZERO_FRACTION = Fraction(0)
_ONE = GaussianRational._make(Fraction(1), _ZERO_FRACTION)
ZERO = GaussianRational._make(_ZERO_FRACTION, _ZERO_FRACTION)
ONE = _ONE
