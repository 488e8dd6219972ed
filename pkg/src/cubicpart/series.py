"""Exact truncated formal power series over ZZ and ZZ/mZZ.

A TruncatedSeries stores the coefficients of exponents ``offset`` through
``order - 1``; exponents below ``offset`` are zero, exponents at or above
``order`` are *unknown* (not zero).  All values are immutable after
construction and every operation is a pure function of its inputs, so
series may be shared freely between threads.

Coefficients over the exact-integer ring are arbitrary-precision Python
ints.  Over a mod-m ring they are reduced representatives in [0, m-1].
Multiplication is schoolbook convolution; for mod-m rings with small m a
numpy int64 convolution is used when it cannot overflow, which produces
bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = ["Ring", "ZZ", "zmod", "TruncatedSeries", "one", "zero", "monomial"]

# Engage numpy only when the schoolbook loop would be noticeably slower.
_NUMPY_MIN_WORK = 1 << 14


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers (modulus None) or integers mod m.

    The modulus, when present, must be >= 2.  Primality is not required;
    Sturm-certificate pipelines happen to use prime moduli but the ring
    does not care.
    """

    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def normalize(self, value: int) -> int:
        if self.modulus is None:
            return value
        return value % self.modulus

    def is_unit(self, value: int) -> bool:
        if self.modulus is None:
            return value in (1, -1)
        return gcd(value, self.modulus) == 1

    def invert(self, value: int) -> int:
        """Multiplicative inverse of a unit; ValueError on non-units."""
        if self.modulus is None:
            if value in (1, -1):
                return value
            raise ValueError(f"{value} is not a unit in the exact-integer ring")
        try:
            return pow(value, -1, self.modulus)
        except ValueError:
            raise ValueError(
                f"{value} is not a unit modulo {self.modulus}"
            ) from None

    def __str__(self) -> str:
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"


ZZ = Ring()


def zmod(m: int) -> Ring:
    """The ring of integers modulo m (m >= 2)."""
    return Ring(m)


class TruncatedSeries:
    """Coefficient vector indexed by exponent, with truncation tracking.

    ``coeffs[i]`` is the coefficient of q^(offset+i).  The truncation
    order is pessimistic: operations never fabricate coefficients beyond
    what their inputs determine.
    """

    __slots__ = ("ring", "offset", "coeffs", "order")

    def __init__(
        self,
        ring: Ring,
        coeffs: Iterable[int] = (),
        offset: int = 0,
        order: Optional[int] = None,
    ):
        if offset < 0:
            raise ValueError(f"offset must be >= 0, got {offset}")
        cs = [ring.normalize(c) for c in coeffs]
        if order is None:
            order = offset + len(cs)
        if order < offset:
            raise ValueError(f"order {order} is below offset {offset}")
        want = order - offset
        if len(cs) < want:
            cs.extend([0] * (want - len(cs)))
        elif len(cs) > want:
            del cs[want:]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- access ---------------------------------------------------------

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n.  Exponents >= order are unknown, not zero."""
        if n >= self.order:
            raise IndexError(
                f"coefficient of q^{n} unknown: series truncated at order {self.order}"
            )
        if n < self.offset:
            return 0
        return self.coeffs[n - self.offset]

    def coefficients(self, stop: Optional[int] = None) -> list[int]:
        """Coefficients of q^0 .. q^(stop-1) as a plain list."""
        if stop is None:
            stop = self.order
        if stop > self.order:
            raise IndexError(
                f"coefficients up to {stop} unknown: series truncated at {self.order}"
            )
        out = [0] * min(self.offset, stop)
        out.extend(self.coeffs[: max(stop - self.offset, 0)])
        return out

    def __eq__(self, other: object) -> bool:
        """Semantic equality: same ring, same order, same coefficients."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        return self.coefficients() == other.coefficients()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return (
            f"TruncatedSeries({self.ring}, q^{self.offset}*[{head}{tail}],"
            f" order={self.order})"
        )

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            n = self.offset + i
            if n == 0:
                terms.append(str(c))
            else:
                cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{cs}q^{n}" if n > 1 else f"{cs}q")
            if len(terms) > 12:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order})"

    # -- arithmetic -----------------------------------------------------

    def _require_same_ring(self, other: TruncatedSeries) -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._require_same_ring(other)
        offset = min(self.offset, other.offset)
        order = min(self.order, other.order)
        if order <= offset:
            return TruncatedSeries(self.ring, (), offset, max(order, offset))
        a = self.coefficients(order)[offset:]
        b = other.coefficients(order)[offset:]
        return TruncatedSeries(
            self.ring, [x + y for x, y in zip(a, b)], offset, order
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.ring, [-c for c in self.coeffs], self.offset, self.order
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, k: int) -> TruncatedSeries:
        """Multiply every coefficient by the integer k."""
        return TruncatedSeries(
            self.ring, [k * c for c in self.coeffs], self.offset, self.order
        )

    def mul(self, other: TruncatedSeries) -> TruncatedSeries:
        """Product, truncated pessimistically.

        result.order = min(a.order + b.offset, b.order + a.offset): the
        first exponent either factor's unknown tail could pollute.
        """
        self._require_same_ring(other)
        offset = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        la, lb = len(self.coeffs), len(other.coeffs)
        rl = order - offset  # == min(la, lb)
        if rl <= 0:
            return TruncatedSeries(self.ring, (), offset, order)
        m = self.ring.modulus
        if (
            m is not None
            and la * lb >= _NUMPY_MIN_WORK
            and min(la, lb) * (m - 1) * (m - 1) < 2**62
        ):
            conv = np.convolve(
                np.array(self.coeffs, dtype=np.int64),
                np.array(other.coeffs, dtype=np.int64),
            )
            out = (conv[:rl] % m).tolist()
            return TruncatedSeries(self.ring, out, offset, order)
        acc = [0] * rl
        a, b = self.coeffs, other.coeffs
        if la > lb:
            a, b, la, lb = b, a, lb, la
        for i in range(min(la, rl)):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(lb, rl - i)):
                acc[i + j] += ai * b[j]
        return TruncatedSeries(self.ring, acc, offset, order)

    __mul__ = mul

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse via b_n = -a0^{-1} sum a_i b_{n-i}.

        Requires offset 0 and a unit constant term.  Zero coefficients of
        the input are skipped, so inverting a sparse series (an Euler
        product, say) costs O(order * nnz).
        """
        if self.offset != 0:
            raise ValueError(
                f"cannot invert a series with leading exponent {self.offset}"
            )
        if self.order < 1:
            raise ValueError("cannot invert: constant term not represented")
        a0 = self.coeffs[0]
        if not self.ring.is_unit(a0):
            raise ValueError(
                f"cannot invert: leading coefficient {a0} is not a unit in {self.ring}"
            )
        inv0 = self.ring.invert(a0)
        norm = self.ring.normalize
        nz = [(i, c) for i, c in enumerate(self.coeffs) if i > 0 and c != 0]
        out = [0] * (self.order)
        out[0] = norm(inv0)
        for n in range(1, self.order):
            s = 0
            for i, ai in nz:
                if i > n:
                    break
                s += ai * out[n - i]
            if s:
                out[n] = norm(-inv0 * s)
        return TruncatedSeries(self.ring, out, 0, self.order)

    def pow(self, e: int) -> TruncatedSeries:
        """Integer power by repeated squaring; negative e via inverse()."""
        if e == 0:
            return one(self.ring, self.order)
        if e < 0:
            return self.inverse().pow(-e)
        base = self
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __pow__(self, e: int) -> TruncatedSeries:
        return self.pow(e)

    # -- structural operations ------------------------------------------

    def substitute_power(self, k: int) -> TruncatedSeries:
        """The substitution q -> q^k (k >= 1)."""
        if k < 1:
            raise ValueError(f"substitution power must be >= 1, got {k}")
        if k == 1:
            return self
        out = [0] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                out[k * i] = c
        return TruncatedSeries(self.ring, out, k * self.offset, k * self.order)

    def reduce_mod(self, m: int) -> TruncatedSeries:
        """Reduce an exact-integer series into the mod-m ring.

        Reducing a series already in ZZ/m is a no-op (idempotence);
        reducing across distinct moduli is refused, information is gone.
        """
        if self.ring.modulus == m:
            return self
        if not self.ring.is_exact:
            raise ValueError(f"cannot rereduce a {self.ring} series mod {m}")
        return TruncatedSeries(Ring(m), self.coeffs, self.offset, self.order)

    def extract_progression(self, p: int, r: int) -> TruncatedSeries:
        """The series of coefficients along exponents p*n + r.

        result.order = ceil((order - r) / p): the count of progression
        exponents whose coefficients are determined.
        """
        if p < 1:
            raise ValueError(f"progression modulus must be >= 1, got {p}")
        if not 0 <= r < p:
            raise ValueError(f"residue {r} out of range [0, {p})")
        if p == 1 and r == 0 and self.offset == 0:
            return self
        new_order = max(-(-(self.order - r) // p), 0)
        out = [0] * new_order
        for n in range(new_order):
            e = p * n + r
            if e >= self.offset:
                out[n] = self.coeffs[e - self.offset]
        return TruncatedSeries(self.ring, out, 0, new_order)

    def with_zero_offset(self) -> TruncatedSeries:
        """Materialize the leading zeros, giving an equal series with offset 0."""
        if self.offset == 0:
            return self
        return TruncatedSeries(
            self.ring, (0,) * self.offset + self.coeffs, 0, self.order
        )

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k (k >= 0): raises offset and order by k."""
        if k < 0:
            raise ValueError(f"shift must be >= 0, got {k}")
        return TruncatedSeries(self.ring, self.coeffs, self.offset + k, self.order + k)


def one(ring: Ring, order: int) -> TruncatedSeries:
    """The constant series 1, truncated at the given order."""
    return TruncatedSeries(ring, [1] if order > 0 else [], 0, order)


def zero(ring: Ring, order: int) -> TruncatedSeries:
    """The zero series, truncated at the given order."""
    return TruncatedSeries(ring, (), 0, order)


def monomial(ring: Ring, c: int, n: int, order: int) -> TruncatedSeries:
    """The single term c*q^n, truncated at the given order."""
    s = zero(ring, order)
    if n < order:
        cs = [0] * (order - n)
        cs[0] = c
        s = TruncatedSeries(ring, cs, n, order)
    return s
