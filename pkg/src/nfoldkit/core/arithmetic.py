"""Checked and saturating integer arithmetic.

Python integers never wrap, so overflow is detected against an explicit
signed 63-bit limit. Bound formulas saturate at ``SATURATED`` instead of
raising; callers treat a saturated value as "no useful cap".
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

INT_LIMIT = 2**63 - 1
SATURATED = INT_LIMIT


class NFoldError(Exception):
    """Base class for all nfoldkit errors."""


class ArithmeticOverflowError(NFoldError, ArithmeticError):
    """Raised when an exact integer leaves the supported range."""


def checked(value: int) -> int:
    """Return ``value`` or raise if it exceeds the supported range."""
    if value > INT_LIMIT or value < -INT_LIMIT:
        raise ArithmeticOverflowError(f"integer overflow: {value} exceeds ±{INT_LIMIT}")
    return value


def checked_dot(left: Sequence[int], right: Sequence[int]) -> int:
    """Dot product with overflow detection on every partial sum."""
    if len(left) != len(right):
        raise ValueError(f"length mismatch: {len(left)} vs {len(right)}")
    total = 0
    for a, b in zip(left, right, strict=True):
        if a and b:
            total = checked(total + checked(a * b))
    return total


def checked_sum(values: Iterable[int]) -> int:
    total = 0
    for value in values:
        total = checked(total + value)
    return total


def is_saturated(value: int) -> bool:
    return value >= SATURATED


def saturating_add(a: int, b: int) -> int:
    return min(a + b, SATURATED)


def saturating_mul(a: int, b: int) -> int:
    """Multiply non-negative integers, saturating at ``SATURATED``."""
    if a < 0 or b < 0:
        raise ValueError("saturating_mul expects non-negative operands")
    if a == 0 or b == 0:
        return 0
    if a > SATURATED // b:
        return SATURATED
    return a * b


def saturating_pow(base: int, exponent: int) -> int:
    """Raise a non-negative base to a non-negative power, saturating."""
    if base < 0 or exponent < 0:
        raise ValueError("saturating_pow expects non-negative operands")
    result = 1
    for _ in range(exponent):
        result = saturating_mul(result, base)
        if is_saturated(result):
            return SATURATED
    return result


def l1_norm(vector: Sequence[int]) -> int:
    return sum(abs(v) for v in vector)


def linf_norm(vector: Sequence[int]) -> int:
    return max((abs(v) for v in vector), default=0)


def sign(value: int) -> int:
    return (value > 0) - (value < 0)


def is_conformal(inner: Sequence[int], outer: Sequence[int]) -> bool:
    """True iff ``inner ⊑ outer``: same orthant and |inner_j| ≤ |outer_j|."""
    for z, y in zip(inner, outer, strict=True):
        if z == 0:
            continue
        if z * y < 0 or abs(z) > abs(y):
            return False
    return True


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
