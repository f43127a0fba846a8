"""Exact dyadic rationals: integers divided by a power of two.

A value is stored as ``mantissa / 2**exponent`` with ``exponent >= 0`` and
the pair reduced until the exponent is 0 or the mantissa is odd, so every
value has exactly one representation.  Addition, subtraction, products and
halving stay inside the type, which is what makes node values, trapezoid
integrals and equation residuals exactly representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, slots=True)
class Dyadic:
    mantissa: int
    exponent: int = 0

    def __post_init__(self) -> None:
        m, e = self.mantissa, self.exponent
        if e < 0:
            raise ValueError(f"exponent must be >= 0, got {e}")
        if m == 0:
            e = 0
        else:
            twos = (m & -m).bit_length() - 1
            shift = min(twos, e)
            m >>= shift
            e -= shift
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    # -- construction -------------------------------------------------

    @classmethod
    def of(cls, value: "Dyadic | int | Fraction | str") -> "Dyadic":
        """Coerce an int, power-of-two Fraction, or string like ``-3/16``."""
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a dyadic rational")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} does not have a power-of-two denominator")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse ``p``, ``p/q`` with q a power of two, or ``p/2^e``."""
        s = text.strip()
        num, sep, den = s.partition("/")
        try:
            mantissa = int(num)
        except ValueError:
            raise ValueError(f"bad dyadic literal {text!r}") from None
        if not sep:
            return cls(mantissa)
        den = den.strip()
        if den.startswith("2^"):
            try:
                exp = int(den[2:])
            except ValueError:
                raise ValueError(f"bad dyadic literal {text!r}") from None
            if exp < 0:
                raise ValueError(f"bad dyadic literal {text!r}")
            return cls(mantissa, exp)
        try:
            q = int(den)
        except ValueError:
            raise ValueError(f"bad dyadic literal {text!r}") from None
        if q <= 0 or q & (q - 1):
            raise ValueError(f"denominator of {text!r} is not a power of two")
        return cls(mantissa, q.bit_length() - 1)

    # -- conversion ---------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.mantissa)
        return f"{self.mantissa}/{1 << self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.mantissa}, {self.exponent})"

    @property
    def is_integer(self) -> bool:
        return self.exponent == 0

    def floor_times_pow2(self, bits: int) -> int:
        """floor(value * 2**bits); right shifts round toward minus infinity."""
        t = bits - self.exponent
        return self.mantissa << t if t >= 0 else self.mantissa >> -t

    def times_pow2(self, bits: int) -> "Dyadic":
        """value * 2**bits, exact for either sign of ``bits``."""
        if bits >= self.exponent:
            return Dyadic(self.mantissa << (bits - self.exponent))
        return Dyadic(self.mantissa, self.exponent - bits)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = max(self.exponent, o.exponent)
        return Dyadic(
            (self.mantissa << (e - self.exponent)) + (o.mantissa << (e - o.exponent)), e
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.mantissa), self.exponent)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Dyadic(self.mantissa * o.mantissa, self.exponent + o.exponent)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.mantissa != 0

    # -- ordering -----------------------------------------------------

    def _diff_sign(self, other: "Dyadic") -> int:
        e = max(self.exponent, other.exponent)
        d = (self.mantissa << (e - self.exponent)) - (other.mantissa << (e - other.exponent))
        return (d > 0) - (d < 0)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._diff_sign(o) >= 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.mantissa == o.mantissa and self.exponent == o.exponent

    def __hash__(self):
        return hash(self.as_fraction())


ZERO = Dyadic(0)
ONE = Dyadic(1)
