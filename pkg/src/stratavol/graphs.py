"""Two-level boundary graphs: sunflowers and special simple stars.

A graph has top-level vertices (one distinguished "sun" for sunflowers,
holomorphic-abelian "flowers" otherwise) joined by vertical edges to
genus-zero bottom vertices.  Marked points are labeled 1..n and each lives
on exactly one vertex.  Every edge carries the orders at its two branches
and the enhancement kappa = m_top + k.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import Signature, genus, is_holo_abelian, proj_dim
from .errors import InvalidSignature

__all__ = [
    "TopVertex",
    "BottomVertex",
    "Edge",
    "TwoLevelGraph",
    "validate",
    "edge_data",
    "aut_order",
    "h_ab",
    "prefactor",
    "kappa_product",
    "vertex_signatures",
    "top_dim_check",
    "enumerate_sunflowers",
    "enumerate_special_stars",
    "all_graphs",
    "canonical_str",
    "to_json_dict",
]

logger = logging.getLogger(__name__)

SUNFLOWER = "Sunflower"
SPECIAL_STAR = "SpecialStar"


@dataclass(frozen=True)
class TopVertex:
    genus: int
    legs: tuple[int, ...]          # marking indices, 1-based
    is_sun: bool
    is_abelian_flower: bool


@dataclass(frozen=True)
class BottomVertex:
    genus: int
    legs: tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    top: int                       # index into tops
    bottom: int                    # index into bottoms
    m_top: int
    m_bot: int
    kappa: int


@dataclass(frozen=True)
class TwoLevelGraph:
    k: int
    mu: Signature
    kind: str                      # SUNFLOWER or SPECIAL_STAR
    tops: tuple[TopVertex, ...]
    bottoms: tuple[BottomVertex, ...]
    edges: tuple[Edge, ...]

    def __str__(self) -> str:
        return canonical_str(self)


def _flower_edge(k: int, top_idx: int, bottom_idx: int, flower_genus: int) -> Edge:
    m_top = k * (2 * flower_genus - 2)
    return Edge(top_idx, bottom_idx, m_top, -2 * k - m_top, m_top + k)


def _sunflower_graph(sig: Signature, petals: tuple[tuple[int, tuple[int, ...]], ...]) -> TwoLevelGraph:
    """Assemble a sunflower from (marking index, flower genus multiset) petals.

    Petals must be given by ascending marking index with each multiset
    sorted descending; edge order is: per petal, sun edge first, then
    flower edges.
    """
    k = sig.k
    g = genus(sig)
    petal_markings = [i for i, _ in petals]
    sun_legs = tuple(i for i in range(1, sig.n + 1) if i not in petal_markings)
    sun_genus = g - sum(sum(fl) for _, fl in petals)

    tops = [TopVertex(sun_genus, sun_legs, True, False)]
    bottoms = []
    edges = []
    for b, (mark, flowers) in enumerate(petals):
        bottoms.append(BottomVertex(0, (mark,)))
        m_i = sig.orders[mark - 1]
        m_top = m_i - 2 * k * sum(flowers)
        edges.append(Edge(0, b, m_top, -2 * k - m_top, m_top + k))
        for fg in flowers:
            tops.append(TopVertex(fg, (), False, True))
            edges.append(_flower_edge(k, len(tops) - 1, b, fg))
    return TwoLevelGraph(k, sig, SUNFLOWER, tuple(tops), tuple(bottoms), tuple(edges))


def _star_graph(sig: Signature, parts: tuple[int, ...]) -> TwoLevelGraph:
    """Assemble a special star from a descending partition of the genus."""
    k = sig.k
    tops = []
    edges = []
    for part in parts:
        tops.append(TopVertex(part, (), False, True))
        edges.append(_flower_edge(k, len(tops) - 1, 0, part))
    center = BottomVertex(0, tuple(range(1, sig.n + 1)))
    return TwoLevelGraph(k, sig, SPECIAL_STAR, tuple(tops), (center,), tuple(edges))


def _vertex_order_sums(g: TwoLevelGraph) -> tuple[list[int], list[int]]:
    """Sum of adjacent orders (legs and edge branches) per top/bottom vertex."""
    top_sums = [sum(g.mu.orders[i - 1] for i in v.legs) for v in g.tops]
    bot_sums = [sum(g.mu.orders[i - 1] for i in v.legs) for v in g.bottoms]
    for e in g.edges:
        top_sums[e.top] += e.m_top
        bot_sums[e.bottom] += e.m_bot
    return top_sums, bot_sums


def _adjacent_top_orders(g: TwoLevelGraph, top_idx: int) -> list[int]:
    v = g.tops[top_idx]
    orders = [g.mu.orders[i - 1] for i in v.legs]
    orders += [e.m_top for e in g.edges if e.top == top_idx]
    return orders


def validate(g: TwoLevelGraph) -> list[str]:
    """Return all invariant violations, or [] for a well-formed graph."""
    errs: list[str] = []
    k = g.k
    try:
        total_genus = genus(g.mu)
    except InvalidSignature as exc:
        return [f"invalid signature: {exc}"]

    if g.kind not in (SUNFLOWER, SPECIAL_STAR):
        return [f"unknown kind {g.kind!r}"]

    suns = [i for i, v in enumerate(g.tops) if v.is_sun]
    if len(suns) > 1:
        errs.append("more than one sun vertex")

    # tree / compact type
    if len(g.edges) != len(g.tops) + len(g.bottoms) - 1:
        errs.append("edge count violates compact type (not a tree)")
    else:
        seen = {("t", 0)}
        frontier = [("t", 0)]
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for e in g.edges:
            adj.setdefault(("t", e.top), []).append(("b", e.bottom))
            adj.setdefault(("b", e.bottom), []).append(("t", e.top))
        while frontier:
            node = frontier.pop()
            for nxt in adj.get(node, []):
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(seen) != len(g.tops) + len(g.bottoms):
            errs.append("graph is not connected")

    # markings
    marks = [i for v in list(g.tops) + list(g.bottoms) for i in v.legs]
    if sorted(marks) != list(range(1, g.mu.n + 1)):
        errs.append("markings are not distributed exactly once")

    # per-vertex order sums
    top_sums, bot_sums = _vertex_order_sums(g)
    for i, v in enumerate(g.tops):
        if top_sums[i] != k * (2 * v.genus - 2):
            errs.append(f"order sum mismatch on top vertex {i}")
    for i, v in enumerate(g.bottoms):
        if bot_sums[i] != k * (2 * v.genus - 2):
            errs.append(f"order sum mismatch on bottom vertex {i}")

    # edges
    for i, e in enumerate(g.edges):
        if e.m_top + e.m_bot != -2 * k:
            errs.append(f"m_top + m_bot != -2k on edge {i}")
        if e.kappa != e.m_top + k:
            errs.append(f"kappa != m_top + k on edge {i}")
        if e.kappa < 1:
            errs.append(f"kappa < 1 on edge {i}")

    # flowers
    for i, v in enumerate(g.tops):
        if not v.is_abelian_flower:
            continue
        deg = sum(1 for e in g.edges if e.top == i)
        if v.genus < 1:
            errs.append(f"abelian flower {i} has genus < 1")
        if v.legs:
            errs.append(f"abelian flower {i} carries markings")
        if deg != 1:
            errs.append(f"abelian flower {i} has {deg} edges (needs exactly 1)")
        for e in g.edges:
            if e.top == i and e.m_top != k * (2 * v.genus - 2):
                errs.append(f"abelian flower order mismatch on edge {g.edges.index(e)}")

    if g.kind == SUNFLOWER:
        if not suns or suns[0] != 0:
            errs.append("sunflower must have the sun as top vertex 0")
        else:
            sun = g.tops[0]
            touched = {e.bottom for e in g.edges if e.top == 0}
            if touched != set(range(len(g.bottoms))):
                errs.append("sun is not connected to every bottom vertex")
            if is_holo_abelian(Signature(k, tuple(_adjacent_top_orders(g, 0)))):
                errs.append("sun vertex is of holomorphic abelian type")
            special_pts = len(sun.legs) + sum(1 for e in g.edges if e.top == 0)
            if sun.genus == 0 and special_pts < 3:
                errs.append("sun vertex unstable")
            if any(not v.is_abelian_flower for v in g.tops[1:]):
                errs.append("non-flower top vertex besides the sun")
        for i, v in enumerate(g.bottoms):
            if v.genus != 0:
                errs.append(f"bottom vertex {i} has nonzero genus")
            if len(v.legs) != 1:
                errs.append(f"bottom vertex {i} must carry exactly one marking")
            flowers = sum(1 for e in g.edges if e.bottom == i and g.tops[e.top].is_abelian_flower)
            if flowers < 1:
                errs.append(f"bottom vertex {i} unstable")
    else:
        if suns:
            errs.append("special star must not contain a sun vertex")
        if len(g.bottoms) != 1:
            errs.append("special star needs a single central vertex")
        else:
            center = g.bottoms[0]
            if center.genus != 0:
                errs.append("central vertex must have genus zero")
            want_legs = 1 if (g.mu.n == 1 and k == 1) else 2
            if len(center.legs) != want_legs or g.mu.n != want_legs:
                errs.append("central vertex marking count is wrong")
            if len(center.legs) + len(g.edges) < 3:
                errs.append("bottom vertex 0 unstable")
        if sum(v.genus for v in g.tops) != total_genus:
            errs.append("flower genera do not add up to the total genus")

    return errs


def edge_data(g: TwoLevelGraph) -> list[tuple[int, int, int]]:
    """(m_top, m_bot, kappa) triples in canonical edge order."""
    return [(e.m_top, e.m_bot, e.kappa) for e in g.edges]


def aut_order(g: TwoLevelGraph) -> int:
    """Order of the automorphism group.

    Automorphisms permute flowers of equal genus attached to the same
    bottom vertex (all of them, for a star); markings are labeled and
    never move.
    """
    out = 1
    if g.kind == SPECIAL_STAR:
        parts = Counter(v.genus for v in g.tops)
        for mult in parts.values():
            out *= _factorial(mult)
        return out
    for b in range(len(g.bottoms)):
        genera = Counter(g.tops[e.top].genus for e in g.edges
                         if e.bottom == b and g.tops[e.top].is_abelian_flower)
        for mult in genera.values():
            out *= _factorial(mult)
    return out


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def h_ab(g: TwoLevelGraph) -> int:
    """Number of holomorphic abelian top components (flowers)."""
    return sum(1 for v in g.tops if v.is_abelian_flower)


def prefactor(g: TwoLevelGraph) -> Fraction:
    """1 / (aut_order * k^h_ab), the graph's recursion weight."""
    return Fraction(1, aut_order(g) * g.k ** h_ab(g))


def kappa_product(g: TwoLevelGraph) -> int:
    out = 1
    for e in g.edges:
        out *= e.kappa
    return out


def vertex_signatures(g: TwoLevelGraph) -> list[Signature]:
    """Signatures of all vertices: tops first, then bottoms.

    Flowers are reported with k = 1 orders (branch order divided by k),
    matching the abelian-differential convention used for their volumes.
    """
    out: list[Signature] = []
    for i, v in enumerate(g.tops):
        orders = _adjacent_top_orders(g, i)
        if v.is_abelian_flower:
            out.append(Signature(1, tuple(m // g.k for m in orders)))
        else:
            out.append(Signature(g.k, tuple(orders)))
    for i, v in enumerate(g.bottoms):
        orders = [g.mu.orders[j - 1] for j in v.legs]
        orders += [e.m_bot for e in g.edges if e.bottom == i]
        out.append(Signature(g.k, tuple(orders)))
    return out


def top_dim_check(g: TwoLevelGraph) -> bool:
    """Projectivized top-level dimension equals the stratum dimension.

    Unprojectivized vertex dimensions are 2g-2+n for the sun and 2g-1+n
    for abelian flowers (n counts legs plus edges at the vertex).
    """
    total = 0
    for i, v in enumerate(g.tops):
        n_v = len(v.legs) + sum(1 for e in g.edges if e.top == i)
        if v.is_abelian_flower:
            total += 2 * v.genus - 1 + n_v
        else:
            total += 2 * v.genus - 2 + n_v
    return total - 1 == proj_dim(g.mu)


def _partitions(n: int, max_part: int | None = None):
    """Partitions of n as descending tuples, reverse-lexicographic order."""
    if n == 0:
        yield ()
        return
    if max_part is None:
        max_part = n
    for p in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def enumerate_special_stars(sig: Signature) -> list[TwoLevelGraph]:
    """All special simple star graphs of the signature, canonical order.

    Nonempty only for n = 2 (or n = 1 with k = 1), one graph per partition
    of the genus into flower genera, partitions in reverse-lexicographic
    order.  A single-marking center needs at least two flowers to be
    stable.
    """
    g = genus(sig)
    single = sig.n == 1 and sig.k == 1
    if not (sig.n == 2 or single):
        return []
    min_parts = 2 if single else 1
    out = []
    for parts in _partitions(g):
        if len(parts) < min_parts:
            continue
        out.append(_star_graph(sig, parts))
    return out


def _flower_genus_bound(m: int, k: int) -> int:
    """Largest total flower genus at a marking of order m (kappa >= 1)."""
    return (m + k - 1) // (2 * k)


def enumerate_sunflowers(sig: Signature) -> list[TwoLevelGraph]:
    """All sunflower graphs of the signature, in canonical order.

    A graph is determined by a nonempty set S of markings moved to bottom
    vertices and, per marking, a nonempty multiset of flower genera.  The
    filters are: sun-edge enhancement >= 1, sun genus >= 0, the sun not of
    holomorphic abelian type, and sun stability (genus-zero suns need at
    least three special points; rejections are logged).

    Canonical order: graphs sharing the bottom-marking set S form a block;
    blocks sort by (|S|, minimal sun-edge enhancement profile over the
    block, S), and inside a block richer flower assignments come first
    (per-marking genus multisets compared descending).
    """
    g = genus(sig)
    k = sig.k
    n = sig.n
    markings = range(1, n + 1)
    bounds = {i: min(_flower_genus_bound(sig.orders[i - 1], k), g) for i in markings}
    usable = [i for i in markings if bounds[i] >= 1]

    blocks: dict[tuple[int, ...], list[TwoLevelGraph]] = {}
    for mask in product((0, 1), repeat=len(usable)):
        S = tuple(i for i, on in zip(usable, mask) if on)
        if not S:
            continue
        per_marking = []
        for i in S:
            choices = []
            for total in range(1, bounds[i] + 1):
                choices.extend((i, parts) for parts in _partitions(total))
            per_marking.append(choices)
        for combo in product(*per_marking):
            flower_total = sum(sum(parts) for _, parts in combo)
            if flower_total > g:
                continue
            graph = _sunflower_graph(sig, tuple(combo))
            sun = graph.tops[0]
            sun_orders = _adjacent_top_orders(graph, 0)
            if is_holo_abelian(Signature(k, tuple(sun_orders))):
                continue
            special_pts = len(sun.legs) + len(S)
            if sun.genus == 0 and special_pts < 3:
                logger.warning("unstable genus-zero sun dropped for %s (bottoms %s)", sig, S)
                continue
            blocks.setdefault(S, []).append(graph)

    def petal_data(graph: TwoLevelGraph):
        sun_edges = [e for e in graph.edges if e.top == 0]
        kappas = tuple(e.kappa for e in sun_edges)
        genera = tuple(
            tuple(sorted((graph.tops[e.top].genus for e in graph.edges
                          if e.bottom == b and e.top != 0), reverse=True))
            for b in range(len(graph.bottoms)))
        return kappas, genera

    ordered = []
    block_keys = []
    for S, graphs in blocks.items():
        kappa_profiles = [petal_data(gr)[0] for gr in graphs]
        block_keys.append((len(S), min(kappa_profiles), S))
    for _, S in sorted(zip(block_keys, blocks.keys())):
        ordered.extend(sorted(blocks[S], key=lambda gr: petal_data(gr)[1], reverse=True))
    return ordered


def all_graphs(sig: Signature) -> list[TwoLevelGraph]:
    """Stars then sunflowers, each in canonical order."""
    return enumerate_special_stars(sig) + enumerate_sunflowers(sig)


def canonical_str(g: TwoLevelGraph) -> str:
    """One-line canonical serialization, the graph's identity."""
    if g.kind == SPECIAL_STAR:
        center = ",".join(str(m) for m in g.mu.orders)
        parts = ",".join(str(v.genus) for v in g.tops)
        return f"ST{{k={g.k};center=[{center}];parts=[{parts}]}}"
    sun = g.tops[0]
    legs = ",".join(str(i) for i in sun.legs)
    petals = []
    for b, v in enumerate(g.bottoms):
        flowers = sorted((g.tops[e.top].genus for e in g.edges
                          if e.bottom == b and e.top != 0), reverse=True)
        petals.append(f"{{leg={v.legs[0]},flowers=[{','.join(str(x) for x in flowers)}]}}")
    return f"SF{{k={g.k};sun={{g={sun.genus},legs=[{legs}]}};petals=[{','.join(petals)}]}}"


def to_json_dict(g: TwoLevelGraph) -> dict:
    """JSON-ready mirror of the canonical serialization plus edge data."""
    out: dict = {
        "k": g.k,
        "kind": g.kind,
        "mu": list(g.mu.orders),
        "edge_data": [list(t) for t in edge_data(g)],
    }
    if g.kind == SPECIAL_STAR:
        out["center"] = list(g.mu.orders)
        out["parts"] = [v.genus for v in g.tops]
    else:
        sun = g.tops[0]
        out["sun"] = {"g": sun.genus, "legs": list(sun.legs)}
        out["petals"] = [
            {
                "leg": v.legs[0],
                "flowers": sorted((g.tops[e.top].genus for e in g.edges
                                   if e.bottom == b and e.top != 0), reverse=True),
            }
            for b, v in enumerate(g.bottoms)
        ]
    return out
