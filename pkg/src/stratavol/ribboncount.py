"""Algebraic identity engine for the two-singularity joining counts.

The genus-zero stratum with orders (m1, m2, -4g_1, ..., -4g_h) governs how
h one-faced building blocks (block i of genus g_i, with e_i = 2g_i - 1
edges and enhancement kappa_i = 4g_i - 2) can be joined along a single
cycle separating the two singularities.  This module implements the
difference-operator alpha, the vanishing sum certifying the
maximal-element independence, the per-partition joining counts, and the
two global counts g_count / f_count that both evaluate to
vol * prod(kappa_i / 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .core import bracket, f2, f2_poly
from .errors import DomainError, InvalidSignature
from .volumes import vol_q0_two_poles

__all__ = [
    "StarData",
    "PartitionIJK",
    "partition_ijk",
    "admissible_partitions",
    "alpha_closed",
    "alpha_brute",
    "alpha_pole",
    "s_sum",
    "n_count",
    "g_count",
    "f_count",
    "vandermonde_check",
]


@dataclass(frozen=True)
class StarData:
    """Orders of the two singularities plus the block genera."""

    m1: int
    m2: int
    genera: tuple[int, ...]

    def __post_init__(self):
        if self.m1 < 1 or self.m1 % 2 == 0 or self.m2 < 1 or self.m2 % 2 == 0:
            raise InvalidSignature(f"orders must be odd and positive, got {(self.m1, self.m2)}")
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        if any(g < 1 for g in self.genera) or not self.genera:
            raise InvalidSignature("genera must be a nonempty list of integers >= 1")

    @property
    def h(self) -> int:
        return len(self.genera)

    def kappa(self, i: int) -> int:
        return 4 * self.genera[i - 1] - 2

    def edges(self, i: int) -> int:
        return 2 * self.genera[i - 1] - 1

    def is_genus_zero(self) -> bool:
        return self.m1 + self.m2 + 4 == sum(4 * g for g in self.genera)

    def require_genus_zero(self):
        if not self.is_genus_zero():
            raise InvalidSignature(
                f"(m1, m2, genera) = {(self.m1, self.m2, self.genera)} is not genus zero")


@dataclass(frozen=True)
class PartitionIJK:
    """A partition of the block indices 1..h into I, J, K."""

    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]
    c1: int
    c2: int

    def is_admissible(self) -> bool:
        return self.c1 > 0 and self.c2 > 0 and bool(self.K)


def partition_ijk(data: StarData, I, J, K) -> PartitionIJK:
    I, J, K = tuple(sorted(I)), tuple(sorted(J)), tuple(sorted(K))
    blocks = sorted(I + J + K)
    if blocks != list(range(1, data.h + 1)):
        raise InvalidSignature(f"I, J, K must partition 1..{data.h}")
    c1 = data.m1 + 2 - sum(4 * data.genera[i - 1] for i in I)
    c2 = data.m2 + 2 - sum(4 * data.genera[j - 1] for j in J)
    return PartitionIJK(I, J, K, c1, c2)


def admissible_partitions(data: StarData):
    """All partitions with c1 > 0, c2 > 0 and K nonempty."""
    for assign in product((0, 1, 2), repeat=data.h):
        I = tuple(i + 1 for i in range(data.h) if assign[i] == 0)
        J = tuple(i + 1 for i in range(data.h) if assign[i] == 1)
        K = tuple(i + 1 for i in range(data.h) if assign[i] == 2)
        part = partition_ijk(data, I, J, K)
        if part.is_admissible():
            yield part


def _subsets(seq):
    for r in range(len(seq) + 1):
        yield from combinations(seq, r)


def _c2_of(m2: int, lprime_genera, picked) -> int:
    return m2 + 2 - 4 * sum(lprime_genera[i] for i in picked)


def alpha_closed(eps: int, u: int, m2: int, lprime_genera, h_size: int) -> Fraction:
    """Closed form of the alpha difference operator.

    alpha^eps(u) = -u [c + u - 2]_{|H| + eps} f2(m2 - c - u, |L'| + 1)
    with c = m2 + 2 - 4 * (total genus of L').
    """
    if eps not in (0, 1) or h_size < 0:
        raise DomainError("need eps in {0, 1} and h_size >= 0")
    lp = tuple(lprime_genera)
    c = m2 + 2 - 4 * sum(lp)
    return -u * bracket(c + u - 2, h_size + eps) * f2(m2 - c - u, len(lp) + 1)


def alpha_brute(eps: int, u: int, m2: int, lprime_genera, h_size: int) -> Fraction:
    """Subset-sum definition of the alpha operator (the oracle side).

    Sum over J' inside L' of (-1)^{|L' \\ J'|} c_{J'} f2(m2, |J'| + 1)
    [c_{L'} - 2 + 2 |L' \\ J'| + u]_{|H| + |L' \\ J'| + eps}.
    """
    if eps not in (0, 1) or h_size < 0:
        raise DomainError("need eps in {0, 1} and h_size >= 0")
    lp = tuple(lprime_genera)
    c_full = m2 + 2 - 4 * sum(lp)
    total = Fraction(0)
    for picked in _subsets(range(len(lp))):
        dropped = len(lp) - len(picked)
        c_j = _c2_of(m2, lp, picked)
        total += (
            (-1) ** dropped
            * c_j
            * f2(m2, len(picked) + 1)
            * bracket(c_full - 2 + 2 * dropped + u, h_size + dropped + eps)
        )
    return total


def alpha_pole(eps: int, u: int, m2: int, lprime_genera, h_size: int) -> bool:
    """True at the singular family where the closed form does not apply.

    At eps = 0, |H| = 0 and u = -c the closed form hits the pole of the
    order-zero guarded ratio; both evaluations stay finite but the
    equality fails there.
    """
    c = m2 + 2 - 4 * sum(lprime_genera)
    return eps == 0 and h_size == 0 and c + u == 0


def s_sum(m1: int, m2: int, lprime_genera, u_genera) -> Fraction:
    """The vanishing sum over splittings of the complement blocks.

    With c = m2 + 2 - 4 g(L') and the maximal block's 4 g_h determined by
    the genus-zero closure m1 + m2 + 4 = 4 (g(L') + g(U) + g_h), this is

      sum over I' | H = U of f2(m1, |I'|+1) [c-1]_{|H|}
        * ((m1 - 2|I'| + 2)(c1(I' + h) - 1) + c1(I')(c - 2|H| + 1))

    and evaluates to 0 for every input.
    """
    lp, up = tuple(lprime_genera), tuple(u_genera)
    c = m2 + 2 - 4 * sum(lp)
    four_gh = m1 + m2 + 4 - 4 * (sum(lp) + sum(up))
    total = Fraction(0)
    for picked in _subsets(range(len(up))):
        h_sz = len(up) - len(picked)
        c1 = m1 + 2 - 4 * sum(up[i] for i in picked)
        c1h = c1 - four_gh
        total += (
            f2_poly(m1, len(picked) + 1)
            * bracket(c - 1, h_sz)
            * ((m1 - 2 * len(picked) + 2) * (c1h - 1) + c1 * (c - 2 * h_sz + 1))
        )
    return total


def _d_sum(data: StarData, subset) -> int:
    return sum(data.kappa(i) for i in subset)


def n_count(data: StarData, part: PartitionIJK, h_location: str) -> Fraction:
    """Joining count of one partition, normalized by the rotation factor.

    The maximal block h plays a special role; ``h_location`` must name the
    set among I, J, K that contains it.
    """
    h = data.h
    located = {"in_I": part.I, "in_J": part.J, "in_K": part.K}.get(h_location)
    if located is None:
        raise DomainError(f"unknown h_location {h_location!r}")
    if h not in located:
        raise DomainError(f"block {h} is not in {h_location}")
    if not part.is_admissible():
        raise DomainError("partition is not admissible")
    c1, c2, K = part.c1, part.c2, part.K
    pre = f2_poly(data.m1, len(part.I) + 1) * f2_poly(data.m2, len(part.J) + 1)
    kk = len(K)
    if h_location == "in_I":
        s = sum((-1) ** len(L) * bracket(c2 - 1 - _d_sum(data, L), kk) for L in _subsets(K))
        return c2 * pre * (c1 - 1) * s
    if h_location == "in_J":
        s = sum((-1) ** len(L) * bracket(c2 - 3 - _d_sum(data, L), kk) for L in _subsets(K))
        return c1 * pre * (c2 - 1) * s
    rest = tuple(i for i in K if i != h)
    s_with = sum(
        (-1) ** len(L) * bracket(c1 - 3 - _d_sum(data, L), kk)
        for L in _subsets(K) if h in L
    )
    s_without = sum(
        (-1) ** len(L) * bracket(c1 - 1 - _d_sum(data, L), kk) for L in _subsets(rest)
    )
    return c1 * c2 * pre * (s_with + s_without)


def _rotation_factor(data: StarData) -> int:
    out = 1
    for i in range(1, data.h + 1):
        out *= data.edges(i)
    return out


def g_count(data: StarData) -> Fraction:
    """Total joining count: rotation factor times the partition sum.

    Equals vol(m1, m2, genera) * prod(kappa_i / 2) for genus-zero data.
    """
    data.require_genus_zero()
    total = Fraction(0)
    for part in admissible_partitions(data):
        h = data.h
        loc = "in_I" if h in part.I else ("in_J" if h in part.J else "in_K")
        total += n_count(data, part, loc)
    return _rotation_factor(data) * total


def f_count(data: StarData) -> Fraction:
    """Polynomial-side total over the same partitions.

    Per partition: c1 f2(m1,|I|+1) c2 f2(m2,|J|+1)
    sum_{L in K} (-1)^{|L|} [c2 - 2 - D_L]_{|K|}.  The inner bracket is
    anchored at the larger of the two orders (the roles of the two
    singularities are normalized so the second one dominates); without
    that normalization the alternating sum miscounts a small family of
    configurations.  Equals g_count for genus-zero data.
    """
    data.require_genus_zero()
    if data.m1 > data.m2:
        data = StarData(data.m2, data.m1, data.genera)
    total = Fraction(0)
    for part in admissible_partitions(data):
        s = sum(
            (-1) ** len(L) * bracket(part.c2 - 2 - _d_sum(data, L), len(part.K))
            for L in _subsets(part.K)
        )
        total += (
            part.c1 * f2_poly(data.m1, len(part.I) + 1)
            * part.c2 * f2_poly(data.m2, len(part.J) + 1)
            * s
        )
    return _rotation_factor(data) * total


def closed_form_count(data: StarData) -> Fraction:
    """vol(m1, m2, genera) * prod(kappa_i / 2), the target of both counts."""
    data.require_genus_zero()
    out = vol_q0_two_poles(data.m1, data.m2, data.genera)
    for i in range(1, data.h + 1):
        out *= Fraction(data.kappa(i), 2)
    return out


def vandermonde_check(m2: int, lprime_genera, u: int) -> bool:
    """Two-step Vandermonde convolution:

    sum_r (-1)^r C(|L'|-1, r) f2(m2, |L'|+1-r) f2(c + u + 2r - 2, r + 2)
      = f2(m2 - c - u, |L'| + 1)

    with c = m2 + 2 - 4 g(L').  Raises DomainError naming the failing side
    when either expression is undefined.
    """
    lp = tuple(lprime_genera)
    if not lp:
        raise DomainError("need a nonempty block list")
    c = m2 + 2 - 4 * sum(lp)
    n = len(lp)
    try:
        lhs = Fraction(0)
        for r in range(n):
            lhs += (-1) ** r * _binom(n - 1, r) * f2(m2, n + 1 - r) * f2(c + u + 2 * r - 2, r + 2)
    except DomainError as exc:
        raise DomainError(f"left side undefined: {exc}") from exc
    try:
        rhs = f2(m2 - c - u, n + 1)
    except DomainError as exc:
        raise DomainError(f"right side undefined: {exc}") from exc
    return lhs == rhs


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out
