"""Exact arithmetic over the Gaussian rationals Q(i).

Every parameter handled by the library (Harish-Chandra parameters,
infinitesimal characters, Laplacian eigenvalues) is a vector of
:class:`GaussianRational` values.  Nothing is ever rounded.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

__all__ = [
    "GaussianRational",
    "ParamVector",
    "gq",
    "gq_add",
    "gq_mul",
    "gq_neg",
    "lex_compare",
    "dot",
    "parse_scalar",
]

Scalar = Union["GaussianRational", Fraction, int, str]


@total_ordering
class GaussianRational:
    """A complex number ``re + im*i`` with rational real and imaginary parts.

    Instances are immutable and hashable.  Both parts are
    :class:`fractions.Fraction`, so they are always reduced with a positive
    denominator and structural equality is mathematical equality.

    The ordering is lexicographic on ``(re, im)``.  It has no algebraic
    meaning; it only exists to pick canonical orbit representatives.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Fraction | int | str = 0, im: Fraction | int | str = 0):
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def re_num(self) -> int:
        return self._re.numerator

    @property
    def re_den(self) -> int:
        return self._re.denominator

    @property
    def im_num(self) -> int:
        return self._im.numerator

    @property
    def im_den(self) -> int:
        return self._im.denominator

    def is_real(self) -> bool:
        return self._im == 0

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Field norm ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> GaussianRational:
        return self

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> GaussianRational:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self._re, self._im) < (other._re, other._im)

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        im = self._im
        if im == 1:
            im_part = "i"
        elif im == -1:
            im_part = "-i"
        else:
            im_part = f"{im}i"
        if self._re == 0:
            return im_part
        sign = "" if im_part.startswith("-") else "+"
        return f"{self._re}{sign}{im_part}"

    def to_json(self) -> list[str]:
        """Four decimal strings ``[re_num, re_den, im_num, im_den]``."""
        return [str(self.re_num), str(self.re_den), str(self.im_num), str(self.im_den)]

    @classmethod
    def from_json(cls, payload) -> GaussianRational:
        """Inverse of :meth:`to_json`; also accepts a scalar string like ``"1/2-3i"``."""
        if isinstance(payload, str):
            return parse_scalar(payload)
        if not isinstance(payload, (list, tuple)) or len(payload) != 4:
            raise ValueError(f"expected a 4-element array of integer strings, got {payload!r}")
        try:
            rn, rd, in_, id_ = (int(x) for x in payload)
        except (TypeError, ValueError):
            raise ValueError(f"non-integer entry in {payload!r}") from None
        if rd <= 0 or id_ <= 0:
            raise ValueError(f"denominators must be positive in {payload!r}")
        return cls(Fraction(rn, rd), Fraction(in_, id_))


_RAT = r"[0-9]+(?:/[0-9]+)?"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>[+-]?{_RAT})(?=[+-]|$))?"
    rf"(?:(?P<isign>[+-]?)(?P<im>{_RAT})?\*?i)?$"
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse strings such as ``"3"``, ``"-1/2"``, ``"i"``, ``"2-3/4i"`` or ``"1/2*i"``."""
    s = text.replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not s or m is None or (m.group("re") is None and "i" not in s):
        raise ValueError(f"cannot parse Gaussian rational from {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if s.endswith("i"):
        im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


def gq(x: Scalar) -> GaussianRational:
    """Coerce ints, fractions and strings to :class:`GaussianRational`."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, complex):
        raise TypeError("floating-point complex values are not accepted; use strings or Fractions")
    raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")


def gq_add(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a + b


def gq_mul(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    return a * b


def gq_neg(a: GaussianRational) -> GaussianRational:
    return -a


def lex_compare(a: GaussianRational, b: GaussianRational) -> int:
    """Return -1, 0 or 1 comparing real parts first, then imaginary parts."""
    ka, kb = (a.re, a.im), (b.re, b.im)
    return (ka > kb) - (ka < kb)


class ParamVector(tuple):
    """Immutable vector of Gaussian rationals.

    Behaves as a tuple, so equality against plain tuples of equal scalars
    works.  Entries are coerced on construction.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[Scalar] = ()):
        return super().__new__(cls, (gq(x) for x in entries))

    def __neg__(self) -> ParamVector:
        return ParamVector(-x for x in self)

    def __add__(self, other):
        if not isinstance(other, ParamVector):
            return NotImplemented
        _check_lengths(self, other)
        return ParamVector(x + y for x, y in zip(self, other))

    def __sub__(self, other):
        if not isinstance(other, ParamVector):
            return NotImplemented
        _check_lengths(self, other)
        return ParamVector(x - y for x, y in zip(self, other))

    def scale(self, c: Scalar) -> ParamVector:
        c = gq(c)
        return ParamVector(c * x for x in self)

    def concat(self, other: Sequence[Scalar]) -> ParamVector:
        return ParamVector(tuple(self) + tuple(ParamVector(other)))

    def __getitem__(self, idx):
        out = super().__getitem__(idx)
        return ParamVector(out) if isinstance(idx, slice) else out

    def __repr__(self) -> str:
        return "ParamVector(" + ", ".join(str(x) for x in self) + ")"

    def to_json(self) -> list[list[str]]:
        return [x.to_json() for x in self]

    @classmethod
    def from_json(cls, payload) -> ParamVector:
        if not isinstance(payload, list):
            raise ValueError(f"coordinates must be a JSON array, got {payload!r}")
        return cls(GaussianRational.from_json(x) for x in payload)


def _check_lengths(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")


def dot(u: Sequence[Scalar], v: Sequence[Scalar], scale: Fraction | int | str = 1) -> GaussianRational:
    """Complex-bilinear form ``scale * sum(u_i * v_i)``.

    This is the bilinear (not Hermitian) extension, so ``dot((i,), (i,)) == -1``.
    """
    _check_lengths(u, v)
    total = GaussianRational(0)
    for x, y in zip(u, v):
        total = total + gq(x) * gq(y)
    return total * Fraction(scale)
