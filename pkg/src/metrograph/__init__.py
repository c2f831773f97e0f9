"""metrograph: tau constants and resistance invariants of metrized graphs."""

from .graph import (
    Edge,
    MetrizedGraph,
    StructureReport,
    from_edge_list,
    find_bridges,
    join_at_vertex,
    make_adequate,
    normalize,
    read_edge_csv,
    scale,
    structure_report,
    subdivide_edge,
    write_edge_csv,
)
from .laplacian import (
    DiscreteLaplacian,
    PseudoInverse,
    build_laplacian,
    hutchinson_trace,
    pseudo_inverse,
    resistance,
    resistance_matrix,
    resistance_sum_checks,
    spectral_trace,
    voltage,
)
from .tau import (
    EdgeResistanceData,
    TauResult,
    edge_resistance_data,
    genus_identity_residual,
    kirchhoff_index,
    prepare,
    special_structure_constants,
    tau_bounds_check,
    tau_fixed_point,
    tau_integral_oracle,
    tau_special,
    tau_trace,
)
from .families import (
    circle,
    complete,
    hexagonal_torus,
    mm_graph,
    path,
    random_connected_graph,
    random_tree,
    tt_graph,
)
from .analytic import (
    HexSpectrum,
    TrigSumValue,
    csc_cot_identities,
    hex_eigenvalues,
    hex_trace_pinv,
    hex_trace_pinv_square,
    kirchhoff_hex_bounds,
    lattice_integral,
    tau_hex_analytic,
    tau_hex_approx,
    tau_hex_bounds,
    tau_hex_closed,
    trig_sum,
    trig_sum_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
