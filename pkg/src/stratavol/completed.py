"""Completed-volume recursion over the enumerated boundary graphs.

The completed volume of a stratum is its own volume plus, for every
sunflower and special star graph, the weighted product of the edge
enhancements and all vertex volumes.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PiValue,
    Signature,
    dfact2,
    format_rational,
    mv_convert,
    parse_rational,
)
from .errors import DomainError, MissingVolume, UnsupportedConversion
from .graphs import (
    TwoLevelGraph,
    all_graphs,
    canonical_str,
    h_ab,
    kappa_product,
    prefactor,
    to_json_dict,
    vertex_signatures,
)
from .volumes import VolumeQuery, VolumeTable, lookup

__all__ = [
    "Contribution",
    "Report",
    "contribution",
    "completed_volume",
    "coefficient_Cgg",
    "render",
]


@dataclass(frozen=True)
class Contribution:
    graph: TwoLevelGraph
    prefactor: Fraction
    kappa_prod: int
    vol_prod: Fraction

    @property
    def total(self) -> Fraction:
        return self.prefactor * self.kappa_prod * self.vol_prod


@dataclass(frozen=True)
class Report:
    sig: Signature
    main_vol: Fraction
    contributions: tuple[Contribution, ...]
    mv_value: PiValue | None = None
    mv_note: str | None = None

    @property
    def completed_vol(self) -> Fraction:
        return self.main_vol + sum((c.total for c in self.contributions), Fraction(0))


def _vertex_roles(graph: TwoLevelGraph) -> list[str]:
    roles = []
    for v in graph.tops:
        roles.append("flower" if v.is_abelian_flower else "sun")
    roles.extend("bottom" for _ in graph.bottoms)
    return roles


def contribution(graph: TwoLevelGraph, table: VolumeTable) -> Contribution:
    """Evaluate one graph: prefactor times kappa product times vertex volumes.

    Missing vertex volumes are collected across all vertices and reported
    together with the graph's serialization.
    """
    vol_prod = Fraction(1)
    missing: list[str] = []
    for sig, role in zip(vertex_signatures(graph), _vertex_roles(graph)):
        try:
            vol_prod *= lookup(VolumeQuery(sig, role), table)
        except MissingVolume as exc:
            missing.extend(exc.keys)
    if missing:
        raise MissingVolume(missing, context=canonical_str(graph))
    return Contribution(graph, prefactor(graph), kappa_product(graph), vol_prod)


def completed_volume(sig: Signature, table: VolumeTable) -> Report:
    """Evaluate the full recursion for a signature.

    All unresolved volume keys (main stratum and every graph vertex) are
    collected into a single error rather than failing on the first one.
    """
    missing: list[str] = []
    main_vol = Fraction(0)
    try:
        main_vol = lookup(VolumeQuery(sig, "main"), table)
    except MissingVolume as exc:
        missing.extend(exc.keys)
    contribs: list[Contribution] = []
    for graph in all_graphs(sig):
        try:
            contribs.append(contribution(graph, table))
        except MissingVolume as exc:
            missing.extend(exc.keys)
    if missing:
        raise MissingVolume(missing)
    report = Report(sig, main_vol, tuple(contribs))
    try:
        mv = mv_convert(sig, report.completed_vol, "completed-volume")
        return Report(sig, main_vol, tuple(contribs), mv_value=mv)
    except UnsupportedConversion as exc:
        return Report(sig, main_vol, tuple(contribs), mv_note=str(exc))


def coefficient_Cgg(mvec, gvec) -> Fraction:
    """Closed-form sunflower coefficient from per-marking flower data.

    ``mvec`` lists the (odd) marking orders, ``gvec`` the flower-genus
    multiset placed at each marking (empty where the marking stays on the
    sun).  Per active marking the factor is

        m!!/(m-2(r-1))!! * (m-4g+2)/(r! 2^r) * r!/|Aut| * prod(2 gamma - 1)

    with r parts summing to g; |Aut| permutes equal parts.
    """
    if len(mvec) != len(gvec):
        raise DomainError("mvec and gvec must have equal length")
    out = Fraction(1)
    for m, flowers in zip(mvec, gvec):
        flowers = tuple(flowers)
        if not flowers:
            continue
        r = len(flowers)
        g = sum(flowers)
        if m - 2 * (r - 1) < -1:
            raise DomainError(f"coefficient undefined for order {m} with {r} parts")
        aut = 1
        for mult in Counter(flowers).values():
            aut *= _fact(mult)
        out *= Fraction(dfact2(m), dfact2(m - 2 * (r - 1)))
        out *= Fraction(m - 4 * g + 2, _fact(r) * 2**r)
        out *= Fraction(_fact(r), aut)
        for gamma in flowers:
            out *= 2 * gamma - 1
    return out


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _label(i: int, ascii_only: bool) -> str:
    if i == 0:
        return "main" if ascii_only else "•"
    return f"D{i}" if ascii_only else "D" + str(i).translate(_SUBSCRIPTS)


def render(report: Report, format: str = "table") -> str:
    """Render a report as an aligned table, CSV, or JSON."""
    if format == "table":
        return _render_table(report)
    if format == "csv":
        return _render_csv(report)
    if format == "json":
        return _render_json(report)
    raise ValueError(f"unknown format {format!r}")


def _rows(report: Report, ascii_only: bool) -> list[tuple[str, str, str, str, str]]:
    rows = [(_label(0, ascii_only), "1", "1",
             format_rational(report.main_vol), format_rational(report.main_vol))]
    for i, c in enumerate(report.contributions, start=1):
        rows.append((
            _label(i, ascii_only),
            format_rational(c.prefactor),
            str(c.kappa_prod),
            format_rational(c.vol_prod),
            format_rational(c.total),
        ))
    return rows


_HEADER = ("Γ", "prefactor", "∏κ_e", "∏vol", "vol(Γ)")


def _render_table(report: Report) -> str:
    rows = _rows(report, ascii_only=False)
    widths = [max(len(r[i]) for r in rows + [_HEADER]) for i in range(5)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(_HEADER, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    lines.append(f"completed = {format_rational(report.completed_vol)}")
    if report.mv_value is not None:
        lines.append(f"flat normalization = {report.mv_value}")
    elif report.mv_note:
        lines.append(f"flat normalization omitted: {report.mv_note}")
    return "\n".join(lines) + "\n"


def _render_csv(report: Report) -> str:
    lines = ["graph,prefactor,kappa_prod,vol_prod,total"]
    for r in _rows(report, ascii_only=True):
        lines.append(",".join(r))
    lines.append(f"completed,,,,{format_rational(report.completed_vol)}")
    return "\n".join(lines) + "\n"


def _render_json(report: Report) -> str:
    doc = {
        "signature": list(report.sig.orders),
        "k": report.sig.k,
        "main_vol": format_rational(report.main_vol),
        "rows": [
            {
                "label": _label(i, ascii_only=True),
                "graph": canonical_str(c.graph),
                "graph_data": to_json_dict(c.graph),
                "prefactor": format_rational(c.prefactor),
                "kappa_prod": c.kappa_prod,
                "vol_prod": format_rational(c.vol_prod),
                "total": format_rational(c.total),
            }
            for i, c in enumerate(report.contributions, start=1)
        ],
        "completed_vol": format_rational(report.completed_vol),
    }
    if report.mv_value is not None:
        doc["mv_value"] = str(report.mv_value)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_report_json(text: str) -> dict:
    """Inverse of the JSON rendering, with rationals restored."""
    doc = json.loads(text)
    doc["main_vol"] = parse_rational(doc["main_vol"])
    doc["completed_vol"] = parse_rational(doc["completed_vol"])
    for row in doc["rows"]:
        row["prefactor"] = parse_rational(row["prefactor"])
        row["vol_prod"] = parse_rational(row["vol_prod"])
        row["total"] = parse_rational(row["total"])
    return doc
