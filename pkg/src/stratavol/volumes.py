"""Stratum-volume oracle.

Resolution chain for a volume query: built-in empty strata, genus-zero
closed forms for quadratic differentials, then a user-supplied table.
Missing volumes raise; zero is a meaningful value and is never implied.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import Signature, dfact2, f2_poly, format_rational, parse_rational
from .errors import DomainError, DuplicateKey, InvalidSignature, MissingVolume, ParseError

__all__ = [
    "VolumeTable",
    "VolumeQuery",
    "canonical_key",
    "key_line",
    "parse_table",
    "merge_tables",
    "vol_q0_two_poles",
    "vol_sf_bottom",
    "lookup",
]

Key = tuple[int, tuple[int, ...]]

# Quadratic strata known to be empty: orders canonicalized, k = 2.
EMPTY_QUADRATIC: frozenset[tuple[int, ...]] = frozenset({(3, 1), (1, -1)})


def canonical_key(k: int, orders) -> Key:
    return k, tuple(sorted(orders, reverse=True))


def key_line(key: Key) -> str:
    """Render a key as a table line stub: ``k=1; mu=4,-2,-4``."""
    k, orders = key
    return f"k={k}; mu={','.join(str(m) for m in orders)}"


@dataclass(frozen=True)
class VolumeTable:
    entries: dict[Key, Fraction] = field(default_factory=dict)
    source: str = "inline"

    def get(self, key: Key) -> Fraction | None:
        return self.entries.get(key)


@dataclass(frozen=True)
class VolumeQuery:
    sig: Signature
    role: str = "main"             # main | sun | flower | bottom


def parse_table(text: str, source: str = "inline") -> VolumeTable:
    """Parse ``k=<int>; mu=<c1,c2,...>; vol=<p/q>`` lines.

    ``#`` starts a comment, blank lines are skipped, keys are canonicalized
    by sorting the orders descending; a repeated canonical key is an error.
    """
    entries: dict[Key, Fraction] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != 3:
            raise ParseError(f"expected 3 fields, got {len(fields)}: {raw!r}", line_no)
        parsed = {}
        for fld in fields:
            name, _, value = fld.partition("=")
            parsed[name.strip()] = value.strip()
        if set(parsed) != {"k", "mu", "vol"}:
            raise ParseError(f"expected k=, mu=, vol= fields: {raw!r}", line_no)
        try:
            k = int(parsed["k"])
            orders = tuple(int(c) for c in parsed["mu"].split(","))
            vol = parse_rational(parsed["vol"])
        except (ValueError, DomainError) as exc:
            raise ParseError(str(exc), line_no) from exc
        key = canonical_key(k, orders)
        if key in entries:
            raise DuplicateKey(f"{key_line(key)} defined twice in {source}")
        entries[key] = vol
    return VolumeTable(entries, source)


def merge_tables(tables: list[VolumeTable]) -> VolumeTable:
    """Combine tables; a later table may not redefine an earlier key."""
    entries: dict[Key, Fraction] = {}
    sources = []
    for table in tables:
        sources.append(table.source)
        for key, vol in table.entries.items():
            if key in entries:
                raise DuplicateKey(f"{key_line(key)} redefined by {table.source}")
            entries[key] = vol
    return VolumeTable(entries, "+".join(sources) or "inline")


def vol_q0_two_poles(m1: int, m2: int, genera) -> Fraction:
    """Genus-zero quadratic volume for orders (m1, m2, -4g_1, ..., -4g_h).

    Sum over subsets I of the pole set with positive perimeter
    c_I = m1 + 2 - sum_{i in I} 4 g_i of c_I f2(m1,|I|+1) f2(m2,|I^c|+1),
    evaluated in the polynomial continuation of f2.
    """
    genera = tuple(genera)
    if m1 < 1 or m2 < 1 or m1 % 2 == 0 or m2 % 2 == 0 or any(g < 1 for g in genera):
        raise InvalidSignature(f"need two positive odd orders and genera >= 1, got {(m1, m2, genera)}")
    if m1 + m2 != sum(4 * g for g in genera) - 4:
        raise InvalidSignature(f"orders {(m1, m2, genera)} are not a genus-zero signature")
    total = Fraction(0)
    idx = range(len(genera))
    for r in range(len(genera) + 1):
        for I in combinations(idx, r):
            c = m1 + 2 - sum(4 * genera[i] for i in I)
            if c > 0:
                total += c * f2_poly(m1, r + 1) * f2_poly(m2, len(genera) - r + 1)
    return total


def vol_sf_bottom(m: int, r: int) -> Fraction:
    """Volume m!!/(m-2(r-1))!! of a sunflower bottom with r flowers (k = 2)."""
    if m < 1 or m % 2 == 0 or r < 1:
        raise DomainError(f"need odd m >= 1 and r >= 1, got {(m, r)}")
    if m - 2 * (r - 1) < -1:
        raise DomainError(f"vol_sf_bottom({m}, {r}) out of domain")
    return Fraction(dfact2(m), dfact2(m - 2 * (r - 1)))


def _match_q0_shape(orders: tuple[int, ...]) -> tuple[int, int, tuple[int, ...]] | None:
    """Match (m1, m2, -4g...) with two positive odd orders, genus zero."""
    pos = [m for m in orders if m % 2 != 0 and m > 0]
    rest = [m for m in orders if not (m % 2 != 0 and m > 0)]
    if len(pos) != 2 or not rest:
        return None
    if any(m >= 0 or m % 4 != 0 for m in rest):
        return None
    if sum(orders) != -4:
        return None
    return pos[0], pos[1], tuple(-m // 4 for m in rest)


def _match_bottom_shape(orders: tuple[int, ...]) -> tuple[int, int] | None:
    """Match (m, p, -4g...) with one positive and one negative odd order."""
    odd_pos = [m for m in orders if m % 2 != 0 and m > 0]
    odd_neg = [m for m in orders if m % 2 != 0 and m < 0]
    rest = [m for m in orders if m % 2 == 0]
    if len(odd_pos) != 1 or len(odd_neg) != 1 or not rest:
        return None
    if any(m >= 0 or m % 4 != 0 for m in rest):
        return None
    if sum(orders) != -4:
        return None
    m, r = odd_pos[0], len(rest)
    if m - 2 * (r - 1) < -1:
        return None
    return m, r


def _closed_form(sig: Signature) -> Fraction | None:
    if sig.k != 2:
        return None
    q0 = _match_q0_shape(sig.orders)
    if q0 is not None:
        return vol_q0_two_poles(*q0)
    bottom = _match_bottom_shape(sig.orders)
    if bottom is not None:
        return vol_sf_bottom(*bottom)
    return None


def lookup(query: VolumeQuery, table: VolumeTable) -> Fraction:
    """Resolve a stratum volume.

    Order: built-in empty quadratic strata, genus-zero quadratic closed
    forms, table entry.  A table entry shadowed by a closed form is checked
    for agreement and a mismatch is surfaced as a warning, never masked.
    """
    sig = query.sig
    key = canonical_key(sig.k, sig.orders)
    if sig.k == 2 and key[1] in EMPTY_QUADRATIC:
        return Fraction(0)
    closed = _closed_form(sig)
    if closed is not None:
        stored = table.get(key)
        if stored is not None and stored != closed:
            warnings.warn(
                f"table entry {key_line(key)}; vol={format_rational(stored)} disagrees "
                f"with closed form {format_rational(closed)}; using the closed form",
                stacklevel=2,
            )
        return closed
    stored = table.get(key)
    if stored is not None:
        return stored
    raise MissingVolume([key_line(key)])
