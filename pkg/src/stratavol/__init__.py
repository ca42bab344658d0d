"""Exact graph-sum recursion for volumes of strata of k-differentials."""

from .core import (
    PiValue,
    Signature,
    bracket,
    dfact2,
    f2,
    f2_poly,
    format_rational,
    genus,
    is_holo_abelian,
    mv_convert,
    parse_rational,
    proj_dim,
)
from .completed import (
    Contribution,
    Report,
    coefficient_Cgg,
    completed_volume,
    contribution,
    render,
)
from .errors import (
    DomainError,
    DuplicateKey,
    InvalidSignature,
    MissingVolume,
    ParseError,
    StratavolError,
    UnsupportedConversion,
)
from .graphs import (
    TwoLevelGraph,
    all_graphs,
    aut_order,
    canonical_str,
    edge_data,
    enumerate_special_stars,
    enumerate_sunflowers,
    h_ab,
    kappa_product,
    prefactor,
    top_dim_check,
    validate,
    vertex_signatures,
)
from .ribboncount import (
    PartitionIJK,
    StarData,
    alpha_brute,
    alpha_closed,
    f_count,
    g_count,
    n_count,
    s_sum,
    vandermonde_check,
)
from .volumes import (
    VolumeQuery,
    VolumeTable,
    canonical_key,
    key_line,
    lookup,
    merge_tables,
    parse_table,
    vol_q0_two_poles,
    vol_sf_bottom,
)

__version__ = "0.1.0"
