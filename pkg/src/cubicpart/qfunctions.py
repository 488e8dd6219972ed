"""Canonical q-series building blocks.

Euler products f_k = (q^k; q^k)_inf, the theta series psi (triangular-
number support) and phi (square support), and eta-quotient q-expansions
with the fractional leading power carried in the integer offset field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from .series import Ring, TruncatedSeries, one

__all__ = ["euler_product", "psi", "phi", "EtaExpansionRequest", "eta_expansion"]


def euler_product(k: int, order: int, ring: Ring) -> TruncatedSeries:
    """The expansion of prod_{j>=1} (1 - q^{kj}) to the given order.

    Pentagonal-number support: coefficient (-1)^j at exponent k*j*(3j+-1)/2,
    zero elsewhere.  O(sqrt(order/k)) nonzero terms.
    """
    if k < 1:
        raise ValueError(f"euler_product expects k >= 1, got {k}")
    coeffs = [0] * order
    if order > 0:
        coeffs[0] = 1
    j = 1
    while True:
        e1 = k * j * (3 * j - 1) // 2
        e2 = k * j * (3 * j + 1) // 2
        if e1 >= order:
            break
        sign = -1 if j % 2 else 1
        coeffs[e1] = sign
        if e2 < order:
            coeffs[e2] = sign
        j += 1
    return TruncatedSeries(ring, coeffs, 0, order)


def psi(order: int, ring: Ring) -> TruncatedSeries:
    """Theta series with coefficient 1 at each triangular number k(k+1)/2."""
    coeffs = [0] * order
    k = 0
    while k * (k + 1) // 2 < order:
        coeffs[k * (k + 1) // 2] = 1
        k += 1
    return TruncatedSeries(ring, coeffs, 0, order)


def phi(order: int, ring: Ring) -> TruncatedSeries:
    """Theta series 1 + 2*sum_{j>=1} q^(j^2)."""
    coeffs = [0] * order
    if order > 0:
        coeffs[0] = 1
    j = 1
    while j * j < order:
        coeffs[j * j] = 2
        j += 1
    return TruncatedSeries(ring, coeffs, 0, order)


@dataclass(frozen=True)
class EtaExpansionRequest:
    """Expansion request for prod_{delta | N} (q^{delta/24} f_delta)^{r_delta}.

    The exponent map must be supported on divisors of the level, not all
    zero, and satisfy sum(delta * r_delta) == 0 mod 24 so the leading
    power is an integer.
    """

    level: int
    exponents: Dict[int, int] = field(default_factory=dict)
    order: int = 0
    ring: Ring = Ring()

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        if not any(self.exponents.values()):
            raise ValueError("exponent map has no nonzero entry")
        for delta in self.exponents:
            if delta < 1 or self.level % delta != 0:
                raise ValueError(f"{delta} does not divide the level {self.level}")

    @property
    def weighted_sum(self) -> int:
        return sum(d * r for d, r in self.exponents.items())


def eta_expansion(req: EtaExpansionRequest) -> TruncatedSeries:
    """q-expansion of the eta-quotient described by the request.

    The result has offset sum(delta * r_delta) / 24 and integer
    coefficients; the order of the result is req.order (exponents of the
    final q-expansion, offset included).
    """
    total = req.weighted_sum
    if total % 24 != 0:
        raise ValueError(
            f"sum(delta * r_delta) = {total} is {total % 24} mod 24, not 0:"
            " leading power would be fractional"
        )
    offset = total // 24
    if offset < 0:
        raise ValueError(f"negative leading exponent {offset} (Laurent tails unsupported)")
    inner_order = req.order - offset
    if inner_order <= 0:
        return TruncatedSeries(req.ring, (), offset, max(req.order, offset))
    prod = one(req.ring, inner_order)
    for delta in sorted(req.exponents):
        r = req.exponents[delta]
        if r == 0:
            continue
        prod = prod * euler_product(delta, inner_order, req.ring).pow(r)
    return prod.shift(offset)
