"""Partition counting with colored even parts, plus the classical identities.

Two families: partitions whose even parts come in c colors, and their
overpartition variant where the first occurrence of each kind (part value
plus color) may additionally be overlined.  Counts are computed by two
independent routes -- generating-function series and a combinatorial
dynamic program -- so each can serve as the other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .series import Ring, TruncatedSeries, ZZ
from .qfunctions import euler_product, psi

__all__ = [
    "CUBIC",
    "OVERCUBIC",
    "PartitionFamily",
    "generating_series",
    "count_direct",
    "CheckReport",
    "check_functional_equation",
    "check_lemma_product",
    "check_named_identity",
]

CUBIC = "cubic"
OVERCUBIC = "overcubic"


@dataclass(frozen=True)
class PartitionFamily:
    """A counting family: kind ('cubic' or 'overcubic') and color count c >= 1.

    kind='cubic' with c=1 is ordinary partition counting; c=2 counts
    partitions whose even parts come in two colors.
    """

    kind: str
    colors: int

    def __post_init__(self) -> None:
        if self.kind not in (CUBIC, OVERCUBIC):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.colors < 1:
            raise ValueError(f"colors must be >= 1, got {self.colors}")


def generating_series(fam: PartitionFamily, order: int, ring: Ring) -> TruncatedSeries:
    """Counting series of the family, truncated at the given order.

    cubic:     1 / (f1 * f2^(c-1))
    overcubic: f4^(c-1) / (f1^2 * f2^(2c-3))

    For overcubic c=1 the exponent 2c-3 = -1 is taken literally, so f2
    lands in the numerator (ordinary overpartitions).
    """
    c = fam.colors
    e1 = euler_product(1, order, ring)
    e2 = euler_product(2, order, ring)
    if fam.kind == CUBIC:
        s = e1.inverse()
        if c > 1:
            s = s * e2.inverse().pow(c - 1)
        return s
    s = e1.inverse().pow(2)
    s = s * e2.pow(-(2 * c - 3))
    if c > 1:
        s = s * euler_product(4, order, ring).pow(c - 1)
    return s


def count_direct(fam: PartitionFamily, n: int) -> int:
    """Exact count by dynamic programming over part kinds.

    A kind is a (part value, color) pair: odd values have one kind, even
    values have c kinds.  Equal parts of equal color are interchangeable
    (multiset semantics), handled by the unbounded-knapsack iteration
    order.  For the overcubic family each kind also contributes one
    optional overlined copy, i.e. a factor (1 + q^v) on top of the
    unbounded 1 / (1 - q^v).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    ways = [0] * (n + 1)
    ways[0] = 1
    overlined = fam.kind == OVERCUBIC
    for v in range(1, n + 1):
        kinds = 1 if v % 2 else fam.colors
        for _ in range(kinds):
            for s in range(v, n + 1):
                ways[s] += ways[s - v]
            if overlined:
                for s in range(n, v - 1, -1):
                    ways[s] += ways[s - v]
    return ways[n]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a coefficient-wise comparison of two series."""

    equal: bool
    order: int
    first_mismatch: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return f"equal through order {self.order}"
        return (
            f"mismatch at exponent {self.first_mismatch}:"
            f" {self.lhs} != {self.rhs} (compared to order {self.order})"
        )


def _compare(lhs: TruncatedSeries, rhs: TruncatedSeries, order: int) -> CheckReport:
    a = lhs.coefficients(order)
    b = rhs.coefficients(order)
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return CheckReport(False, order, n, x, y)
    return CheckReport(True, order)


def check_functional_equation(c: int, order: int) -> CheckReport:
    """Compare F_c(q) against psi(q) * psi(q^2)^(c-1) * F_c(q^2)^2.

    Both sides are expanded independently and compared coefficient-wise
    through the given order.
    """
    if c < 1:
        raise ValueError(f"colors must be >= 1, got {c}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    fam = PartitionFamily(CUBIC, c)
    lhs = generating_series(fam, order, ZZ)
    half = -(-order // 2)
    rhs = psi(order, ZZ)
    if c > 1:
        rhs = rhs * psi(half, ZZ).substitute_power(2).pow(c - 1)
    rhs = rhs * generating_series(fam, half, ZZ).substitute_power(2).pow(2)
    return _compare(lhs, rhs, order)


def check_lemma_product(p: int, order: int) -> CheckReport:
    """Compare F_{p-1}(q) against psi(q) * prod_i psi(q^(2^i))^(p*2^(i-1)).

    The product is truncated at the least I with 2^I >= order; later
    factors are 1 + O(q^(2^i)) and cannot touch exponents below order.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    lhs = generating_series(PartitionFamily(CUBIC, p - 1), order, ZZ)
    rhs = psi(order, ZZ)
    i = 1
    while (1 << i) < order:
        step = 1 << i
        factor = psi(-(-order // step), ZZ).substitute_power(step)
        rhs = rhs * factor.pow(p * (1 << (i - 1)))
        i += 1
    return _compare(lhs, rhs, order)


def check_named_identity(identity: str, order: int) -> CheckReport:
    """Verify one of the two classical progression identities.

    ramanujan-p5n4:  sum p(5n+4) q^n      = 5 f5^5 / f1^6
    chan-a2-3n2:     sum a_2(3n+2) q^n    = 3 f3^3 f6^3 / (f1^4 f2^4)
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if identity == "ramanujan-p5n4":
        big = 5 * order + 5
        counts = generating_series(PartitionFamily(CUBIC, 1), big, ZZ)
        lhs = counts.extract_progression(5, 4)
        rhs = euler_product(5, order, ZZ).pow(5) * euler_product(1, order, ZZ).pow(-6)
        rhs = rhs.scale(5)
    elif identity == "chan-a2-3n2":
        big = 3 * order + 3
        counts = generating_series(PartitionFamily(CUBIC, 2), big, ZZ)
        lhs = counts.extract_progression(3, 2)
        rhs = (
            euler_product(3, order, ZZ).pow(3)
            * euler_product(6, order, ZZ).pow(3)
            * euler_product(1, order, ZZ).pow(-4)
            * euler_product(2, order, ZZ).pow(-4)
        )
        rhs = rhs.scale(3)
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return _compare(lhs, rhs, order)
