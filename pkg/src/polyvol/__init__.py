"""Exact volumes of graph polytopes by several independent methods."""

from .bipartite import (
    BipartiteGraph,
    alpha_profile,
    from_graph,
    is_side_symmetric,
    perm_volume,
    symmetric_volume,
)
from .closed import (
    altsum_identity,
    euler_numbers,
    family_volume,
    path_generating_coefficients,
)
from .ehrhart import (
    EhrhartFit,
    HStar,
    ehrhart_fit,
    ehrhart_volume,
    hstar,
    hstar_volume,
    lattice_count,
)
from .errors import (
    DSLError,
    MethodNotApplicable,
    ParameterError,
    PolyvolError,
    SizeError,
)
from .graphs import (
    FamilySpec,
    Graph,
    bipartition,
    build_family,
    connected_components,
    delete_vertex,
    from_edges,
    graph_from_dsl,
    join_graphs,
    load_edge_list,
    parse_spec,
    strip_isolated,
)
from .mc import mc_volume
from .poly import Polynomial, interpolate
from .rational import Rational, format_rational
from .rvf import rvf_volume
from .series import eigen_residual, series_partial, series_target, trace_quadrature
from .slices import (
    SlicedVolume,
    sliced_complete_bipartite,
    sliced_eval,
    sliced_join,
    sliced_multiple,
    sliced_null,
)

__all__ = [name for name in dir() if not name.startswith("_")]
