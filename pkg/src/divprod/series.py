"""Exact truncated formal power series over arbitrary-precision rationals.

A series of order N carries coefficients for x^0 .. x^N inclusive and nothing
beyond.  All arithmetic is exact: coefficients are Python ints or
`fractions.Fraction` values (always in lowest terms, positive denominator),
and no floating point is used anywhere.  Binary operations on series of
different orders truncate to the smaller order, so precision loss is always
explicit in the result's order.

Instances are immutable; every operation is a pure function returning a new
series, so values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Union

Coefficient = Union[int, Fraction]


def _nonzero_terms(coeffs: tuple, upto: int) -> list[tuple[int, Coefficient]]:
    return [(i, c) for i, c in enumerate(coeffs[: upto + 1]) if c]


class TruncatedSeries:
    """A formal power series truncated at a fixed order.

    ``coeffs`` has length ``order + 1``; index i holds the coefficient of x^i.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient], order: int | None = None):
        cs = tuple(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(cs) > order + 1:
                raise ValueError(
                    f"{len(cs)} coefficients exceed order {order}"
                )
            if len(cs) < order + 1:
                cs = cs + (0,) * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("a truncated series needs at least the x^0 coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order)

    def __getitem__(self, i: int) -> Coefficient:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Coefficient]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(tuple(a[i] + b[i] for i in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(tuple(a[i] - b[i] for i in range(n + 1)))

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        # Cauchy product; iterate the sparser operand's nonzero terms on the
        # outside so products against binomial/theta factors stay cheap.
        anz = _nonzero_terms(self.coeffs, n)
        bnz = _nonzero_terms(other.coeffs, n)
        if len(anz) > len(bnz):
            anz, bnz = bnz, anz
        out: list[Coefficient] = [0] * (n + 1)
        for i, ci in anz:
            lim = n - i
            for j, cj in bnz:
                if j > lim:
                    break
                out[i + j] += ci * cj
        return TruncatedSeries(tuple(out))

    def __rmul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse up to this series' order.

        Forward substitution on a0*b_i = -sum_{k=1}^{i} a_k b_{i-k}.
        Raises ValueError if the constant term is zero.
        """
        a = self.coeffs
        a0 = a[0]
        if a0 == 0:
            raise ValueError("not invertible as a formal series: zero constant term")
        if a0 == 1:
            inv0: Coefficient = 1
        elif a0 == -1:
            inv0 = -1
        else:
            inv0 = Fraction(1) / a0
        n = self.order
        tail = [(k, a[k]) for k in range(1, n + 1) if a[k]]
        b: list[Coefficient] = [0] * (n + 1)
        b[0] = inv0
        for i in range(1, n + 1):
            s: Coefficient = 0
            for k, ak in tail:
                if k > i:
                    break
                s += ak * b[i - k]
            if s:
                b[i] = -(inv0 * s)
        return TruncatedSeries(tuple(b))

    def shift(self, s: int) -> "TruncatedSeries":
        """Multiply by x^s: coefficients move up s slots, order stays fixed,
        and the top s coefficients fall off the truncation edge."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if s == 0:
            return self
        n = self.order
        kept = self.coeffs[: max(n + 1 - s, 0)]
        return TruncatedSeries((0,) * min(s, n + 1) + kept)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_integral(self) -> bool:
        """True when every coefficient has denominator 1."""
        return all(c.denominator == 1 for c in self.coeffs)


def binomial_factor(n: int, e: int, order: int) -> TruncatedSeries:
    """Expansion of (1 - x^n)^e to the given order, for any integer e.

    e >= 0 expands by the binomial theorem; e < 0 by the negative-binomial
    series sum_k C(k+|e|-1, |e|-1) x^(n*k).  Coefficients are integers.
    """
    if n < 1:
        raise ValueError("factor degree n must be >= 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [0] * (order + 1)
    if e >= 0:
        for k in range(min(e, order // n) + 1):
            out[n * k] = -comb(e, k) if k % 2 else comb(e, k)
    else:
        q = -e
        for k in range(order // n + 1):
            out[n * k] = comb(k + q - 1, q - 1)
    return TruncatedSeries(tuple(out))


def apply_binomial_factor(coeffs: list, n: int, e: int) -> None:
    """Multiply a coefficient list in place by (1 - x^n)^e, e any integer.

    Each (1 - x^n) application is c[i] -= c[i-n] taken downward; each inverse
    application is the prefix recurrence c[i] += c[i-n] taken upward.  Exact,
    and equivalent to a Cauchy product with binomial_factor(n, e, order).
    """
    if n < 1:
        raise ValueError("factor degree n must be >= 1")
    top = len(coeffs) - 1
    if e >= 0:
        for _ in range(e):
            for i in range(top, n - 1, -1):
                coeffs[i] -= coeffs[i - n]
    else:
        for _ in range(-e):
            for i in range(n, top + 1):
                coeffs[i] += coeffs[i - n]
