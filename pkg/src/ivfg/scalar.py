"""Exact fixed-point membership values.

Every membership degree, path length, distance and status is a whole number
of ten-thousandths.  Addition, subtraction and comparison are therefore
exact, which matters because antipodal adjacency and self-median checks are
equality tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from typing import Union

SCALE = 10_000
DIGITS = 4

_LITERAL = re.compile(r"^(\d+)(?:\.(\d{1,4}))?$")

ScalarLike = Union["Scalar", str, int, float, Decimal]


@dataclass(frozen=True, order=True)
class Scalar:
    """A non-negative decimal with exactly four fractional digits.

    ``units`` is the value multiplied by 10**4.
    """

    units: int

    def __post_init__(self):
        if not isinstance(self.units, int) or isinstance(self.units, bool):
            raise TypeError(f"Scalar units must be int, got {type(self.units).__name__}")
        if self.units < 0:
            raise ValueError(f"Scalar cannot be negative ({self.units} units)")

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse a decimal literal such as ``"0.3"`` or ``"1.0250"``.

        More than four fractional digits, signs and exponents are rejected.
        """
        m = _LITERAL.match(text.strip())
        if m is None:
            raise ValueError(f"not a decimal literal with at most {DIGITS} fractional digits: {text!r}")
        whole, frac = m.group(1), m.group(2) or ""
        return cls(int(whole) * SCALE + int(frac.ljust(DIGITS, "0")))

    @classmethod
    def of(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a membership value")
        if isinstance(value, int):
            return cls(value * SCALE)
        if isinstance(value, float):
            # repr gives the shortest round-tripping literal, e.g. 0.3 -> "0.3"
            return cls.parse(repr(value))
        if isinstance(value, Decimal):
            return cls.parse(format(value, "f"))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.units + other.units)

    def __radd__(self, other):
        # lets builtin sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.units - other.units)

    def __bool__(self) -> bool:
        return self.units != 0

    def to_decimal(self) -> Decimal:
        return Decimal(self.units).scaleb(-DIGITS)

    def __str__(self) -> str:
        whole, frac = divmod(self.units, SCALE)
        return f"{whole}.{frac:0{DIGITS}d}"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"


ZERO = Scalar(0)
ONE = Scalar(SCALE)
