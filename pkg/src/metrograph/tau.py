"""The tau constant and related invariants.

Three computation routes are provided and cross-checked:

* ``tau_fixed_point`` -- the per-edge formula with a fixed base vertex,
* ``tau_trace``       -- the pseudo-inverse trace identity (per bridgeless
  block, combined through additivity at bridges),
* ``tau_special``     -- the closed form for regular graphs with equal edge
  lengths and equal endpoint resistances.

Every bridge edge contributes exactly length/4 to tau (the limit of its
summand as the complementary resistance grows without bound); the split
recorded in :class:`TauResult` places that mass in the second term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (
    IndexOutOfRange,
    NumericalInconsistency,
    PreconditionNotMet,
    SpecialConditionsNotMet,
    TooLarge,
)
from .graph import MetrizedGraph, find_bridges, from_edge_list, make_adequate, subdivide_edge
from .laplacian import (
    DiscreteLaplacian,
    PseudoInverse,
    build_laplacian,
    pseudo_inverse,
    resistance,
)

#: a combinatorial non-bridge whose endpoint resistance reaches this fraction
#: of its own length signals catastrophic cancellation in R_i
_R_CONSISTENCY = 1e-9


@dataclass(frozen=True)
class EdgeResistanceData:
    """Per-edge resistance data for the tau formulas.

    ``r_endpoints`` is the resistance between the endpoints in the full
    graph; ``complement_resistance`` is the resistance through the rest of
    the graph (infinite for a bridge), recovered from the parallel-circuit
    relation r = L R / (L + R).
    """

    edge_id: int
    length: float
    r_endpoints: float
    complement_resistance: float
    is_bridge: bool


@dataclass(frozen=True)
class TauResult:
    tau: float
    first_term: float
    second_term: float
    method: str
    base_vertex: Optional[int] = None
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "first_term": self.first_term,
            "second_term": self.second_term,
            "method": self.method,
            "base_vertex": self.base_vertex,
            "diagnostics": dict(self.diagnostics),
        }


def prepare(G: MetrizedGraph) -> tuple[MetrizedGraph, PseudoInverse]:
    """Adequate graph plus dense pseudo-inverse, the common entry point."""
    H = G if G.is_adequate() else make_adequate(G)
    return H, pseudo_inverse(build_laplacian(H))


def edge_resistance_data(
    G: MetrizedGraph, Lp: PseudoInverse
) -> list[EdgeResistanceData]:
    """Per-edge (length, endpoint resistance, complement resistance, bridge).

    Bridges are identified combinatorially, never by comparing r to the
    edge length numerically.
    """
    bridges = set(find_bridges(G))
    out: list[EdgeResistanceData] = []
    for e in G.edges:
        r = resistance(Lp, e.a, e.b)
        if e.id in bridges:
            out.append(
                EdgeResistanceData(e.id, e.length, r, math.inf, True)
            )
            continue
        if r >= e.length * (1.0 - _R_CONSISTENCY):
            raise NumericalInconsistency(
                f"edge {e.id}: non-bridge with r={r} at length {e.length}"
            )
        R = e.length * r / (e.length - r)
        out.append(EdgeResistanceData(e.id, e.length, r, R, False))
    return out


def _first_term(edge_data: list[EdgeResistanceData]) -> float:
    """(1/12) sum of L^3/(L+R)^2 over non-bridges, via (L-r)^2/L.

    The two forms agree because L/(L+R) = 1 - r/L; the (L-r)^2/L form never
    touches the ill-conditioned R_i.  Bridges contribute zero here.
    """
    terms = [
        (d.length - d.r_endpoints) ** 2 / d.length
        for d in edge_data
        if not d.is_bridge
    ]
    return math.fsum(terms) / 12.0


def tau_fixed_point(
    G: MetrizedGraph, Lp: PseudoInverse, p: int = 0
) -> TauResult:
    """Tau by the fixed-base-vertex edge formula.

    The second term sums (r(a,p) - r(b,p))^2 / L over all edges; for a
    bridge that difference is exactly the edge length, which realizes the
    length/4 bridge contribution.  The result is independent of p.
    """
    if not (0 <= p < G.vertex_count):
        raise IndexOutOfRange(f"base vertex {p} outside [0, {G.vertex_count})")
    data = edge_resistance_data(G, Lp)
    first = _first_term(data)
    M = Lp.matrix
    rp = np.diag(M) - 2.0 * M[:, p] + M[p, p]
    second = math.fsum(
        (rp[e.a] - rp[e.b]) ** 2 / e.length for e in G.edges
    ) / 4.0
    return TauResult(
        tau=first + second,
        first_term=first,
        second_term=second,
        method="fixed_point",
        base_vertex=p,
        diagnostics=_diagnostics(G, data),
    )


def _bridgeless_components(
    G: MetrizedGraph, bridge_ids: set[int]
) -> list[MetrizedGraph]:
    """Connected components of G minus its bridges, as standalone graphs.

    Single-vertex components are dropped (they carry no edges and no tau).
    """
    parent = list(range(G.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in G.edges:
        if e.id not in bridge_ids:
            ra, rb = find(e.a), find(e.b)
            parent[ra] = rb
    groups: dict[int, list] = {}
    for e in G.edges:
        if e.id in bridge_ids:
            continue
        groups.setdefault(find(e.a), []).append(e)
    comps = []
    for edges in groups.values():
        verts = sorted({v for e in edges for v in (e.a, e.b)})
        index = {v: i for i, v in enumerate(verts)}
        comps.append(
            from_edge_list([(index[e.a], index[e.b], e.length) for e in edges])
        )
    return comps


def tau_trace(G: MetrizedGraph, Lp: PseudoInverse) -> TauResult:
    """Tau by the pseudo-inverse trace identity.

    For a bridgeless graph the second term is
    (1/4) [ (4/v) tr(L+) + sum (1/L)(l+_aa - l+_bb)^2 ]  (the edge sum is
    the positive-part rewriting of -(1/2) sum l_qs (l+_qq - l+_ss)^2 over
    vertex pairs; the Laplacian off-diagonals are negative).  The identity does
    not survive bridges, so a graph with bridges is decomposed at them:
    each bridge contributes length/4 and each 2-edge-connected block is
    handled by the identity on its own pseudo-inverse (tau is additive over
    one-point unions).
    """
    data = edge_resistance_data(G, Lp)
    first = _first_term(data)
    bridge_ids = {d.edge_id for d in data if d.is_bridge}
    if not bridge_ids:
        second = _trace_second_term(G, Lp)
    else:
        second = math.fsum(
            d.length for d in data if d.is_bridge
        ) / 4.0
        for comp in _bridgeless_components(G, bridge_ids):
            comp_Lp = pseudo_inverse(build_laplacian(comp))
            second += _trace_second_term(comp, comp_Lp)
    return TauResult(
        tau=first + second,
        first_term=first,
        second_term=second,
        method="trace",
        diagnostics=_diagnostics(G, data),
    )


def _trace_second_term(G: MetrizedGraph, Lp: PseudoInverse) -> float:
    M = Lp.matrix
    v = G.vertex_count
    diag_sum = math.fsum(
        (M[e.a, e.a] - M[e.b, e.b]) ** 2 / e.length for e in G.edges
    )
    return 0.25 * ((4.0 / v) * Lp.trace + diag_sum)


def check_special_conditions(
    G: MetrizedGraph, Lp: PseudoInverse, rel_tol: float = 1e-9
) -> list[str]:
    """Failed preconditions of the special tau formula (empty if it applies).

    Checks r-regularity, equal edge lengths, absence of self-loops, parallel
    edges and bridges, and equality of the endpoint resistances across all
    edges (the measurable surrogate for equal complement resistances).
    """
    failures: list[str] = []
    val = G.valences()
    if any(d != val[0] for d in val):
        failures.append("not regular")
    lengths = [e.length for e in G.edges]
    L0 = lengths[0]
    if any(abs(L - L0) > rel_tol * L0 for L in lengths):
        failures.append("edge lengths not equal")
    if G.has_self_loops():
        failures.append("has self-loops")
    if G.has_multi_edges():
        failures.append("has parallel edges")
    if find_bridges(G):
        failures.append("has bridges")
    rs = [resistance(Lp, e.a, e.b) for e in G.edges]
    r0 = rs[0]
    if any(abs(r - r0) > rel_tol * abs(r0) for r in rs):
        failures.append("endpoint resistances not equal across edges")
    return failures


def tau_special(G: MetrizedGraph, Lp: PseudoInverse) -> TauResult:
    """Tau by the closed regular-graph formula.

    For a normalized graph: tau = (1/12)(1 - 2(v-1)/(r v))^2 + tr(L+)/v.
    A non-normalized equal-length graph is handled through the linear
    scaling of both tau and tr(L+) with total length.
    """
    failures = check_special_conditions(G, Lp)
    if failures:
        raise SpecialConditionsNotMet(failures)
    v = G.vertex_count
    r = G.valences()[0]
    ell = G.total_length
    first = ell * (1.0 - 2.0 * (v - 1) / (r * v)) ** 2 / 12.0
    second = Lp.trace / v
    return TauResult(
        tau=first + second,
        first_term=first,
        second_term=second,
        method="special",
        diagnostics={"regular_degree": r, "total_length": ell},
    )


def special_structure_constants(
    G: MetrizedGraph, Lp: PseudoInverse
) -> dict[str, float]:
    """Predicted vs measured structure constants of the special case.

    For a bridgeless normalized graph with equal lengths and equal
    complement resistances: L_i = 1/e, R_i = (v-1)/(e g), and six sum
    identities follow.  Returns predictions and max residuals against the
    values measured from the pseudo-inverse.  Lengths are interpreted on
    the normalized scale (total length 1) regardless of the input scale.
    """
    failures = check_special_conditions(G, Lp)
    if failures:
        raise SpecialConditionsNotMet(failures)
    v, e, g = G.vertex_count, G.edge_count, G.genus
    ell = G.total_length
    data = edge_resistance_data(G, Lp)
    # normalized-scale measurements
    L_meas = [d.length / ell for d in data]
    R_meas = [d.complement_resistance / ell for d in data]
    L_pred = 1.0 / e
    R_pred = (v - 1) / (e * g)
    sums = {
        "ratio_R": (R_pred / (L_pred + R_pred), max(R / (L + R) for L, R in zip(L_meas, R_meas))),
        "ratio_L": (L_pred / (L_pred + R_pred), max(L / (L + R) for L, R in zip(L_meas, R_meas))),
        "sum_LR_over_LplusR": ((v - 1) / e, math.fsum(L * R / (L + R) for L, R in zip(L_meas, R_meas))),
        "sum_L2_over_LplusR": (g / e, math.fsum(L * L / (L + R) for L, R in zip(L_meas, R_meas))),
        "sum_LR2": (((v - 1) / e) ** 2, math.fsum(L * R * R / (L + R) ** 2 for L, R in zip(L_meas, R_meas))),
        "sum_L3": ((g / e) ** 2, math.fsum(L ** 3 / (L + R) ** 2 for L, R in zip(L_meas, R_meas))),
    }
    report = {
        "predicted_edge_length": L_pred,
        "predicted_complement_resistance": R_pred,
        "measured_edge_length": L_meas[0],
        "measured_complement_resistance": R_meas[0],
    }
    for name, (pred, meas) in sums.items():
        report[f"{name}_predicted"] = pred
        report[f"{name}_residual"] = abs(meas - pred)
    r_deg = G.valences()[0]
    if r_deg == 3:
        cubic_pred = (1.0 + 2.0 / v) ** 2 / 9.0
        report["cubic_first_sum_predicted"] = cubic_pred
        report["cubic_first_sum_residual"] = abs(
            sums["sum_L3"][1] - cubic_pred
        )
    return report


def genus_identity_residual(
    G: MetrizedGraph, edge_data: list[EdgeResistanceData]
) -> float:
    """Residual of  sum L_i/(L_i + R_i) = g  (bridges contribute zero)."""
    total = math.fsum(
        1.0 - d.r_endpoints / d.length for d in edge_data if not d.is_bridge
    )
    return total - G.genus


def kirchhoff_index(Lp: PseudoInverse) -> float:
    """Kirchhoff index: half the all-pairs resistance sum, v * tr(L+)."""
    return Lp.dimension * Lp.trace


def tau_bounds_check(
    G: MetrizedGraph, result: TauResult, report: Optional[dict] = None
) -> dict:
    """Bound checks for a regular normalized equal-length graph.

    Requires regularity, equal edge lengths, total length 1 and edge
    connectivity equal to the degree.  Returns per-bound pass flags and
    slack values; the conjectural 1/108 floor is reported as a flag only.
    """
    from .graph import edge_connectivity, structure_report

    val = G.valences()
    r = val[0]
    if any(d != r for d in val):
        raise PreconditionNotMet("not regular")
    if r < 3:
        raise PreconditionNotMet(f"degree {r} < 3 outside the bounds' scope")
    lengths = [e.length for e in G.edges]
    if any(abs(L - lengths[0]) > 1e-9 * lengths[0] for L in lengths):
        raise PreconditionNotMet("edge lengths not equal")
    if abs(G.total_length - 1.0) > 1e-9:
        raise PreconditionNotMet("graph not normalized")
    lam = edge_connectivity(G)
    if lam != r:
        raise PreconditionNotMet(f"edge connectivity {lam} != degree {r}")
    v = G.vertex_count
    tau = result.tau
    upper = 1.0 / 12.0 - (v - 1) * (r - 2) / (3.0 * v * r * r)
    lower = 1.0 / 12.0 - (v - 1) * ((r - 1) * v * v - 5 * v + 6) / (
        3.0 * r * r * v ** 3
    )
    out = {
        "upper_bound": upper,
        "upper_holds": tau <= upper + 1e-12,
        "upper_slack": upper - tau,
        "lower_bound": lower,
        "lower_holds": tau >= lower - 1e-12,
        "lower_slack": tau - lower,
        "conjectural_floor": 1.0 / 108.0,
        "above_conjectural_floor": tau > 1.0 / 108.0,
    }
    if r == 3:
        cubic_floor = 1.0 / 108.0 + (7.0 * v * v - 11.0 * v + 6.0) / (
            27.0 * v ** 3
        )
        out["cubic_floor"] = cubic_floor
        out["cubic_floor_holds"] = tau >= cubic_floor - 1e-12
    if report is not None:
        report.update(out)
    return out


def tau_integral_oracle(
    G: MetrizedGraph, mesh: int = 256, p: int = 0, max_vertices: int = 12
) -> float:
    """Brute-force tau: (1/4) integral of (d/dx r(x,p))^2 over the graph.

    Every edge is sampled at ``mesh`` equal sub-intervals; the interior
    sample points are realized as temporary subdivision vertices with a
    fresh pseudo-inverse each, so this route shares no code path with the
    closed formulas.  The resistance is quadratic along an edge, so each
    sub-interval slope is the exact midpoint derivative and the midpoint
    rule converges at second order.
    """
    if G.vertex_count > max_vertices:
        raise TooLarge(f"oracle limited to {max_vertices} vertices")
    if mesh < 2:
        raise ValueError("mesh must be at least 2")
    H = G if G.is_adequate() else make_adequate(G)
    base = pseudo_inverse(build_laplacian(H))
    M = base.matrix
    rp_base = np.diag(M) - 2.0 * M[:, p] + M[p, p]
    total = 0.0
    for e in H.edges:
        h = e.length / mesh
        samples = [rp_base[e.a]]
        for s in range(1, mesh):
            sub = subdivide_edge(H, e.id, s / mesh)
            sub_Lp = pseudo_inverse(build_laplacian(sub))
            x = sub.vertex_count - 1
            samples.append(resistance(sub_Lp, x, p))
        samples.append(rp_base[e.b])
        slopes = np.diff(samples) / h
        total += float(np.sum(slopes**2) * h)
    return 0.25 * total


def _diagnostics(
    G: MetrizedGraph, edge_data: list[EdgeResistanceData]
) -> dict:
    return {
        "genus_residual": genus_identity_residual(G, edge_data),
        "bridge_count": sum(1 for d in edge_data if d.is_bridge),
    }


def tau_result_json(
    G: MetrizedGraph, result: TauResult, normalized: bool
) -> dict:
    """Flat JSON-ready dict for a tau result."""
    d = result.as_dict()
    d.update(
        {
            "v": G.vertex_count,
            "e": G.edge_count,
            "genus": G.genus,
            "normalized": normalized,
        }
    )
    return d
