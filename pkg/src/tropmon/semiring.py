"""Boolean, min-plus and max-plus semirings over the naturals, and their
truncations at a threshold ``t`` (values saturate at ``t``).

Values are plain Python ints. The absorbing zero of the min-plus and max-plus
families (``inf`` and ``-inf`` respectively) is the reserved sentinel
``ABSORB``, the largest unsigned 64-bit value. Finite payloads live in
``0 .. ABSORB - 1``. The boolean family uses its native carrier ``{0, 1}``.
"""

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError

ABSORB = (1 << 64) - 1
MAX_FINITE = ABSORB - 1


class Family(enum.Enum):
    MIN_PLUS = "min-plus"
    MAX_PLUS = "max-plus"
    BOOLEAN = "boolean"


@dataclass(frozen=True)
class SemiringSpec:
    """Which semiring, and the saturation threshold (``None`` = infinite)."""

    family: Family
    t: Optional[int] = None

    def __post_init__(self):
        if self.family is Family.BOOLEAN:
            if self.t is not None:
                raise ValueError("the boolean semiring takes no threshold")
        elif self.t is not None and (not isinstance(self.t, int) or self.t < 0):
            raise ValueError(f"threshold must be a natural number, got {self.t!r}")

    @property
    def finite(self):
        """True when the carrier is finite (boolean, or a quotient)."""
        return self.family is Family.BOOLEAN or self.t is not None

    @property
    def carrier_size(self):
        if self.family is Family.BOOLEAN:
            return 2
        if self.t is None:
            raise ValueError("infinite semiring has no carrier size")
        return self.t + 2

    def elements(self):
        """All elements of a finite carrier, finite payloads first."""
        if self.family is Family.BOOLEAN:
            return [0, 1]
        if self.t is None:
            raise ValueError("cannot list the elements of an infinite semiring")
        return list(range(self.t + 1)) + [ABSORB]

    def __str__(self):
        if self.family is Family.BOOLEAN:
            return "boolean"
        return f"{self.family.value}({'inf' if self.t is None else f't={self.t}'})"


def min_plus(t=None):
    return SemiringSpec(Family.MIN_PLUS, t)


def max_plus(t=None):
    return SemiringSpec(Family.MAX_PLUS, t)


BOOLEAN = SemiringSpec(Family.BOOLEAN)


def is_valid(spec, v):
    if not isinstance(v, int) or isinstance(v, bool):
        return False
    if spec.family is Family.BOOLEAN:
        return v in (0, 1)
    if v == ABSORB:
        return True
    if spec.t is None:
        return 0 <= v <= MAX_FINITE
    return 0 <= v <= spec.t


def sr_zero(spec):
    return 0 if spec.family is Family.BOOLEAN else ABSORB


def sr_one(spec):
    return 1 if spec.family is Family.BOOLEAN else 0


def sr_add(spec, a, b):
    family = spec.family
    if family is Family.MIN_PLUS:
        # ABSORB is the largest int, so plain min treats it as +inf
        return a if a <= b else b
    if family is Family.MAX_PLUS:
        if a == ABSORB:
            return b
        if b == ABSORB:
            return a
        return a if a >= b else b
    return a | b


def sr_mul(spec, a, b):
    if spec.family is Family.BOOLEAN:
        return a & b
    if a == ABSORB or b == ABSORB:
        return ABSORB
    s = a + b
    if spec.t is not None:
        return s if s < spec.t else spec.t
    if s > MAX_FINITE:
        raise OverflowError(f"{a} + {b} exceeds the 64-bit natural range")
    return s


def reduce(spec, v):
    """Image of an infinite-semiring value in the quotient ``spec``."""
    if v == ABSORB or spec.t is None:
        return v
    return v if v < spec.t else spec.t


def sentinel_token(spec):
    return "-inf" if spec.family is Family.MAX_PLUS else "inf"


def sr_format(spec, v):
    if v == ABSORB and spec.family is not Family.BOOLEAN:
        return sentinel_token(spec)
    return str(v)


def sr_parse(spec, token):
    token = token.strip()
    if token in ("inf", "-inf"):
        if spec.family is Family.BOOLEAN or token != sentinel_token(spec):
            raise ParseError(f"{token!r} is not an element of {spec}")
        return ABSORB
    if not token.isascii() or not token.isdigit():
        raise ParseError(f"bad token {token!r}")
    v = int(token)
    if v > MAX_FINITE or not is_valid(spec, v):
        raise ParseError(f"{token} is not an element of {spec}")
    return v
