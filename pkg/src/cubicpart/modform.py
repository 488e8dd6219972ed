"""Eta-quotient bookkeeping and Hecke action on q-expansions.

An eta-quotient is a finite product prod_{delta | N} eta(delta z)^{r_delta}.
This module decides candidacy for level N (integral weight plus the two
mod-24 exponent sums), builds the associated Kronecker-symbol character,
evaluates the order of vanishing at each cusp 1/d in exact rationals,
computes the Sturm bound for the space, and applies T_p to a truncated
q-expansion.

Everything here is metadata plus coefficient manipulation: no space of
modular forms is ever computed.  Holomorphy at the cusps together with
the candidacy conditions is accepted as membership, which is all the
congruence certificates need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Optional, Tuple

from .arith import kronecker
from .series import TruncatedSeries

__all__ = [
    "EtaQuotient",
    "CharacterDescriptor",
    "CandidacyReport",
    "CuspOrderTable",
    "weight",
    "check_candidacy",
    "character_eval",
    "cusp_orders",
    "sturm_bound",
    "hecke_tp",
    "hecke_tp_factored",
]


@dataclass(frozen=True)
class EtaQuotient:
    """Level N and the exponent r_delta of each eta(delta z) factor."""

    level: int
    exponents: Dict[int, int]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        for delta in self.exponents:
            if delta < 1 or self.level % delta != 0:
                raise ValueError(f"{delta} does not divide the level {self.level}")

    def divisors(self) -> list[int]:
        n = self.level
        return [d for d in range(1, n + 1) if n % d == 0]

    def __str__(self) -> str:
        body = " ".join(
            f"{d}^{self.exponents[d]}" for d in sorted(self.exponents)
            if self.exponents[d] != 0
        )
        return f"eta-quotient[N={self.level}: {body or '1'}]"


def weight(eq: EtaQuotient) -> "int | Fraction":
    """Half the exponent sum; an int when integral, else an exact Fraction."""
    w = Fraction(sum(eq.exponents.values()), 2)
    return int(w) if w.denominator == 1 else w


@dataclass(frozen=True)
class CharacterDescriptor:
    """The character d -> ((-1)^l * s | d) with s = prod delta^{r_delta}.

    s is stored as a reduced positive fraction.  Square factors of
    numerator and denominator contribute (x^2 | d) = 1 at every d coprime
    to x, and evaluation is only consumed at arguments coprime to the
    level here, so they are cleared before the Kronecker symbol is taken.
    """

    weight: int
    s_numerator: int
    s_denominator: int

    def __str__(self) -> str:
        return f"(-1)^{self.weight} * {self.s_numerator}/{self.s_denominator}"


def _squarefree_kernel(n: int) -> int:
    """Product of the primes dividing n an odd number of times (n >= 1)."""
    kernel = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            kernel *= d
        d += 1
    return kernel * n


def character_eval(ch: CharacterDescriptor, d: int) -> int:
    a = _squarefree_kernel(ch.s_numerator * ch.s_denominator)
    if ch.weight % 2:
        a = -a
    return kronecker(a, d)


@dataclass(frozen=True)
class CandidacyReport:
    """Outcome of the three candidacy conditions for level-N modularity.

    The exponent sums are reported mod 24; the character is present only
    when the weight is integral (it carries the sign (-1)^weight).
    """

    weight_integral: bool
    delta_sum_mod24: int
    colevel_sum_mod24: int
    character: Optional[CharacterDescriptor]

    @property
    def passes(self) -> bool:
        return (
            self.weight_integral
            and self.delta_sum_mod24 == 0
            and self.colevel_sum_mod24 == 0
        )

    def __bool__(self) -> bool:
        return self.passes


def check_candidacy(eq: EtaQuotient) -> CandidacyReport:
    """Evaluate the weight-integrality and mod-24 exponent-sum conditions.

    Failures are reported, not raised.
    """
    n = eq.level
    delta_sum = sum(d * r for d, r in eq.exponents.items())
    colevel_sum = sum((n // d) * r for d, r in eq.exponents.items())
    w = weight(eq)
    character = None
    if isinstance(w, int):
        s = Fraction(1)
        for d, r in eq.exponents.items():
            s *= Fraction(d) ** r
        character = CharacterDescriptor(w, s.numerator, s.denominator)
    return CandidacyReport(
        weight_integral=isinstance(w, int),
        delta_sum_mod24=delta_sum % 24,
        colevel_sum_mod24=colevel_sum % 24,
        character=character,
    )


@dataclass(frozen=True)
class CuspOrderTable:
    """Order of vanishing at each cusp 1/d, d running over divisors of N.

    The formula depends only on the denominator d of the cusp, so one
    entry per divisor covers every cusp of Gamma_0(N).
    """

    orders: Dict[int, Fraction]

    @property
    def is_holomorphic(self) -> bool:
        return all(v >= 0 for v in self.orders.values())

    def __str__(self) -> str:
        return " ".join(f"{d}:{self.orders[d]}" for d in sorted(self.orders))


def cusp_orders(eq: EtaQuotient) -> CuspOrderTable:
    """Vanishing order (N/24) sum gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta)
    at each cusp denominator d | N, in exact rational arithmetic.
    """
    n = eq.level
    table: Dict[int, Fraction] = {}
    for d in eq.divisors():
        total = Fraction(0)
        for delta, r in eq.exponents.items():
            g = gcd(d, delta)
            total += Fraction(g * g * r, gcd(d, n // d) * d * delta)
        table[d] = Fraction(n, 24) * total
    return CuspOrderTable(table)


def sturm_bound(ell: int, n: int) -> int:
    """floor((ell*N/12) * prod_{p | N} (1 + 1/p)), exact rationals throughout."""
    if ell < 1 or n < 1:
        raise ValueError(f"need weight >= 1 and level >= 1, got ({ell}, {n})")
    bound = Fraction(ell * n, 12)
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            bound *= 1 + Fraction(1, p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        bound *= 1 + Fraction(1, m)
    return int(bound)  # Fraction.__int__ truncates toward zero; bound > 0


def hecke_tp(
    f: TruncatedSeries, p: int, ell: int, ch: CharacterDescriptor
) -> TruncatedSeries:
    """Apply T_p: b(n) = a(pn) + chi(p) p^(ell-1) a(n/p), a(n/p) = 0 for p ∤ n.

    The input must have offset 0 (pad leading zeros first), so every a(m)
    with m < f.order is addressable.  The result keeps every b(n) the
    truncation determines: order floor((f.order - 1)/p) + 1.
    """
    if f.offset != 0:
        raise ValueError(
            f"hecke_tp needs offset 0, got {f.offset}: pad with with_zero_offset()"
        )
    if f.order < 1:
        raise ValueError("hecke_tp needs at least the constant coefficient")
    if p < 2:
        raise ValueError(f"p must be prime, got {p}")
    tail = f.ring.normalize(character_eval(ch, p) * p ** (ell - 1))
    new_order = (f.order - 1) // p + 1
    out = [0] * new_order
    for n in range(new_order):
        b = f.coeffs[p * n]
        if tail and n % p == 0:
            b += tail * f.coeffs[n // p]
        out[n] = b
    return TruncatedSeries(f.ring, out, 0, new_order)


def hecke_tp_factored(
    g: TruncatedSeries,
    h_of_qp: TruncatedSeries,
    p: int,
    ell: int,
    ch: CharacterDescriptor,
) -> TruncatedSeries:
    """T_p of a product g*h, for h supported on exponents divisible by p.

    In a mod-p ring, (g h)|T_p = (g|T_p) * h(z/p): the contraction sends
    the coefficient of q^(pn) in h to the coefficient of q^n.  Cheaper
    than multiplying first, and the two routes cross-check each other.
    """
    if g.ring.modulus != p:
        raise ValueError(
            f"factored Hecke action is a mod-p identity; ring is {g.ring}, p = {p}"
        )
    if h_of_qp.ring != g.ring:
        raise ValueError(f"ring mismatch: {g.ring} vs {h_of_qp.ring}")
    for i, c in enumerate(h_of_qp.coeffs):
        e = h_of_qp.offset + i
        if c != 0 and e % p != 0:
            raise ValueError(
                f"h has a term q^{e} outside ZZ[[q^{p}]]: exponent {e} not divisible by {p}"
            )
    contracted = h_of_qp.extract_progression(p, 0)
    return hecke_tp(g, p, ell, ch) * contracted
