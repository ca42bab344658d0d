"""Exact arithmetic primitives, signatures and volume normalizations.

Everything here is pure and exact: integers, ``fractions.Fraction`` and
pi-monomials.  No floating point is used anywhere in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, InvalidSignature, UnsupportedConversion

__all__ = [
    "dfact2",
    "f2",
    "f2_poly",
    "bracket",
    "Signature",
    "genus",
    "proj_dim",
    "is_holo_abelian",
    "PiValue",
    "mv_convert",
    "parse_rational",
    "format_rational",
]


def dfact2(a: int) -> int:
    """Double factorial a!! = a(a-2)(a-4)... with (-1)!! = 0!! = 1."""
    if a < -1:
        raise DomainError(f"double factorial undefined for {a}")
    out = 1
    while a > 1:
        out *= a
        a -= 2
    return out


def f2(a: int, n: int) -> Fraction:
    """Two-step factorial ratio.

    f2(a, 1) = 1/(a+2) and, for n >= 2, f2(a, n) = a!!/(a-2(n-2))!!.
    The n = 1 case is defined for every a >= -1 (callers that need the
    indicator-guarded version use :func:`bracket`).
    """
    if n < 1:
        raise DomainError(f"f2 needs n >= 1, got {n}")
    if n == 1:
        if a < -1:
            raise DomainError(f"f2({a}, 1) undefined")
        return Fraction(1, a + 2)
    if a - 2 * (n - 2) < -1:
        raise DomainError(f"f2({a}, {n}) undefined: {a - 2 * (n - 2)}!! has no value")
    return Fraction(dfact2(a), dfact2(a - 2 * (n - 2)))


def f2_poly(a: int, n: int) -> Fraction:
    """Polynomial continuation of :func:`f2`.

    For n >= 2 this is the 2-step falling product a(a-2)...(a-2(n-3)),
    which agrees with f2 on its domain and extends it to every integer a.
    The genus-zero volume sum and the joining-count formulas need this
    continuation when an order is too small for the factorial quotient.
    """
    if n < 1:
        raise DomainError(f"f2_poly needs n >= 1, got {n}")
    if n == 1:
        if a == -2:
            raise DomainError("f2_poly(-2, 1) is a pole")
        return Fraction(1, a + 2)
    prod = 1
    for j in range(n - 2):
        prod *= a - 2 * j
    return Fraction(prod)


def bracket(a: int, r: int) -> Fraction:
    """Indicator-guarded ratio: 0 for a < 2(r-1), else f2(a, r+1).

    Total on all integers: for r = 0 the guard is extended to a >= -1 so
    that the 1/(a+2) factor is always defined (the lone extra point being
    a = -2, where the unguarded expression would be a pole).
    """
    if r < 0:
        raise DomainError(f"bracket needs r >= 0, got {r}")
    if a < 2 * (r - 1):
        return Fraction(0)
    if r == 0 and a < -1:
        return Fraction(0)
    return f2(a, r + 1)


_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" with the sign on the numerator only."""
    m = _RATIONAL_RE.match(text.strip())
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise DomainError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Serialize exactly as "p/q", or "p" when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class Signature:
    """A labeled order vector mu = (m_1, ..., m_n) for k-differentials."""

    k: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidSignature(f"k must be >= 1, got {self.k}")
        if not self.orders:
            raise InvalidSignature("signature needs at least one order")
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))

    @property
    def n(self) -> int:
        return len(self.orders)

    def is_finite_area(self) -> bool:
        """True when every order exceeds -2k."""
        return all(m > -2 * self.k for m in self.orders)

    def __str__(self) -> str:
        return f"k={self.k}; mu={','.join(str(m) for m in self.orders)}"


def genus(sig: Signature) -> int:
    """Genus g with sum(orders) = k(2g-2)."""
    total = sum(sig.orders) + 2 * sig.k
    if total % (2 * sig.k) != 0 or total < 0:
        raise InvalidSignature(f"no valid genus for {sig}")
    return total // (2 * sig.k)


def is_holo_abelian(sig: Signature) -> bool:
    """True iff every order is a nonnegative multiple of k."""
    return all(m >= 0 and m % sig.k == 0 for m in sig.orders)


def proj_dim(sig: Signature) -> int:
    """Projectivized stratum dimension.

    2g-3+n in general; 2g-2+n for the abelian components (k = 1 and all
    orders nonnegative).
    """
    g = genus(sig)
    if sig.k == 1 and is_holo_abelian(sig):
        return 2 * g - 2 + sig.n
    return 2 * g - 3 + sig.n


@dataclass(frozen=True)
class PiValue:
    """An exact rational multiple of an integer power of pi."""

    coefficient: Fraction
    pi_power: int

    def __post_init__(self):
        if self.pi_power < 0:
            raise DomainError("pi_power must be >= 0")
        if self.coefficient == 0:
            object.__setattr__(self, "pi_power", 0)

    def __str__(self) -> str:
        if self.pi_power == 0:
            return format_rational(self.coefficient)
        return f"{format_rational(self.coefficient)}*pi^{self.pi_power}"


def _mv_prefactor(sig: Signature) -> tuple[Fraction, int]:
    """Rational prefactor and pi power for the flat-volume normalization.

    k = 1, n = 1:     2 (2 pi i)^{2g} / (2g-1)!
    k = 2, odd orders: 2^{2g+1} (-1)^{g-1+n/2} pi^{2g-2+n} / (2g-3+n)!

    Powers of i from (2 pi i)^{even} are folded into the rational sign.
    """
    g = genus(sig)
    if sig.k == 1 and sig.n == 1:
        power = 2 * g
        coeff = Fraction(2 * 2**power * (-1) ** g, factorial(2 * g - 1))
        return coeff, power
    if sig.k == 2 and all(m % 2 != 0 and m > -2 for m in sig.orders):
        power = 2 * g - 2 + sig.n
        sign = (-1) ** (g - 1 + sig.n // 2)
        coeff = Fraction(2 ** (2 * g + 1) * sign, factorial(2 * g - 3 + sig.n))
        return coeff, power
    raise UnsupportedConversion(f"no normalization formula for {sig}")


def mv_convert(sig: Signature, v: Fraction, kind: str = "completed-volume") -> PiValue:
    """Convert an intersection-theoretic volume to the flat normalization.

    ``kind`` is "stratum-volume" or "completed-volume"; both use the same
    prefactor for a given signature, the flag records which quantity is
    being converted.  Applicable for k = 1 with n = 1, and for k = 2 with
    all orders odd and > -2.
    """
    if kind not in ("stratum-volume", "completed-volume"):
        raise UnsupportedConversion(f"unknown conversion kind {kind!r}")
    coeff, power = _mv_prefactor(sig)
    return PiValue(coeff * v, power)
