"""Divided difference operators."""

from typing import Dict

from src.errors import DomainError, InexactDivisionError
from src.polyring import LaurentPoly, Monomial


def divided_difference(f: LaurentPoly, i: int) -> LaurentPoly:
    """
    (f - s_i f) / (x_i - x_{i+1}).

    The numerator is antisymmetric in x_i, x_{i+1}, so the quotient is a
    polynomial. It is computed by synthetic division in x_i over the ring of
    the remaining variables, and the remainder is asserted to vanish.

    Raises:
        DomainError: If i < 1 or f has a negative power of x_i or x_{i+1}
        InexactDivisionError: If the remainder is nonzero
    """
    if i < 1:
        raise DomainError(f"Divided differences are indexed from 1, got {i}")
    for var in (i, i + 1):
        low, _ = f.exponent_range(var)
        if low < 0:
            raise DomainError(f"∂{i} needs nonnegative powers of x{var}, got {f}")

    numerator = f - f.swap_variables(i, i + 1)
    if numerator.is_zero():
        return LaurentPoly.zero()

    # numerator = sum_a c_a x_i^a with c_a free of x_i
    by_power: Dict[int, Dict[Monomial, int]] = {}
    for mono, coeff in numerator.items():
        power, rest = mono.split(i)
        bucket = by_power.setdefault(power, {})
        bucket[rest] = bucket.get(rest, 0) + coeff
    top = max(by_power)
    next_var = LaurentPoly.var(i + 1)

    quotient = LaurentPoly.zero()
    carry = LaurentPoly.zero()
    for power in range(top, 0, -1):
        carry = LaurentPoly(by_power.get(power, {})) + next_var * carry
        quotient = quotient + carry.times_monomial(Monomial(((i, power - 1),)))
    remainder = LaurentPoly(by_power.get(0, {})) + next_var * carry
    if remainder:
        raise InexactDivisionError(f"∂{i} left remainder {remainder} on {f}")
    return quotient
