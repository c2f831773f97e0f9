"""Discrete Laplacian, pseudo-inverse, resistance and voltage functions.

The Laplacian of a metrized graph (on an adequate vertex set) has
off-diagonal entries -1/L_k for the edge of length L_k joining two vertices
and zero row sums.  Its Moore-Penrose pseudo-inverse is doubly centered and
encodes the resistance function ``r(p,q) = l+_pp - 2 l+_pq + l+_qq`` and the
voltage function ``j_p(q,s) = l+_pp - l+_pq - l+_ps + l+_qs``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import IndexOutOfRange, SingularBeyondNullspace
from .graph import MetrizedGraph, make_adequate

#: default vertex cap for the dense (L + J/v)^-1 route
DENSE_LIMIT = 6_000


@dataclass(frozen=True)
class DiscreteLaplacian:
    """Symmetric v x v Laplacian together with the (adequate) source graph."""

    matrix: np.ndarray
    graph: MetrizedGraph

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class PseudoInverse:
    """Dense symmetric pseudo-inverse of a discrete Laplacian."""

    matrix: np.ndarray
    graph: MetrizedGraph

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))


def build_laplacian(G: MetrizedGraph) -> DiscreteLaplacian:
    """Discrete Laplacian of G on an adequate vertex set.

    If G has self-loops or parallel edges it is made adequate first; the
    original vertex indices are preserved (new vertices are appended), so
    resistance queries on original vertices remain valid.
    """
    H = G if G.is_adequate() else make_adequate(G)
    v = H.vertex_count
    L = np.zeros((v, v))
    for e in H.edges:
        w = 1.0 / e.length
        L[e.a, e.b] -= w
        L[e.b, e.a] -= w
        L[e.a, e.a] += w
        L[e.b, e.b] += w
    return DiscreteLaplacian(L, H)


def pseudo_inverse(L: DiscreteLaplacian, method: str = "dense") -> PseudoInverse:
    """Moore-Penrose pseudo-inverse of the Laplacian.

    ``dense``    : (L + J/v)^-1 - J/v, one factorization for everything.
    ``spectral`` : V diag(1/lambda) V^T over the nonzero eigenpairs.

    Raises :class:`SingularBeyondNullspace` when the matrix is singular
    beyond the expected one-dimensional nullspace (a disconnected input).
    """
    A = L.matrix
    v = A.shape[0]
    if method == "dense":
        J = np.full((v, v), 1.0 / v)
        try:
            M = np.linalg.inv(A + J)
        except np.linalg.LinAlgError as exc:
            raise SingularBeyondNullspace(str(exc)) from exc
        Lp = M - J
    elif method == "spectral":
        eigval, eigvec = np.linalg.eigh(A)
        scale = abs(eigval[-1]) if v > 1 else 1.0
        tol = 1e-10 * max(scale, 1.0)
        nonzero = eigval > tol
        if np.count_nonzero(~nonzero) != 1:
            raise SingularBeyondNullspace(
                f"{np.count_nonzero(~nonzero)} near-zero eigenvalues"
            )
        V = eigvec[:, nonzero]
        Lp = (V / eigval[nonzero]) @ V.T
    else:
        raise ValueError(f"unknown method {method!r}")
    Lp = 0.5 * (Lp + Lp.T)
    # cheap sanity probe of L L+ L = L on a random vector
    rng = np.random.default_rng(0)
    x = rng.standard_normal(v)
    lhs = A @ (Lp @ (A @ x))
    rhs = A @ x
    denom = np.linalg.norm(rhs) or 1.0
    if np.linalg.norm(lhs - rhs) > 1e-6 * denom:
        raise SingularBeyondNullspace("L L+ L deviates from L")
    return PseudoInverse(Lp, L.graph)


def resistance(Lp: PseudoInverse, p: int, q: int) -> float:
    """Effective resistance r(p, q) between two vertices."""
    v = Lp.dimension
    if not (0 <= p < v and 0 <= q < v):
        raise IndexOutOfRange(f"vertex pair ({p}, {q}) outside [0, {v})")
    M = Lp.matrix
    return float(M[p, p] - 2.0 * M[p, q] + M[q, q])


def resistance_matrix(Lp: PseudoInverse) -> np.ndarray:
    """All-pairs resistance matrix from the pseudo-inverse diagonal."""
    d = np.diag(Lp.matrix)
    return d[:, None] + d[None, :] - 2.0 * Lp.matrix


def voltage(Lp: PseudoInverse, p: int, q: int, s: int) -> float:
    """Voltage j_p(q, s): potential at q, unit current s -> p, ground p."""
    v = Lp.dimension
    if not (0 <= p < v and 0 <= q < v and 0 <= s < v):
        raise IndexOutOfRange(f"vertex triple ({p}, {q}, {s}) outside [0, {v})")
    M = Lp.matrix
    return float(M[p, p] - M[p, q] - M[p, s] + M[q, s])


def resistance_sum_checks(
    Lp: PseudoInverse, pairs: Optional[list[tuple[int, int]]] = None
) -> dict[str, float]:
    """Residuals of the trace identities for resistance and voltage sums.

    Checks ``sum_q r(p,q) = v l+_pp + tr(L+)`` for every p, and
    ``sum_s j_s(p,q) = tr(L+) + v l+_pq`` for the sampled pairs.
    """
    M = Lp.matrix
    v = Lp.dimension
    tr = Lp.trace
    R = resistance_matrix(Lp)
    res_residual = float(
        np.max(np.abs(R.sum(axis=1) - (v * np.diag(M) + tr)))
    )
    if pairs is None:
        pairs = [(0, q) for q in range(min(v, 8))]
    vol_residual = 0.0
    for p, q in pairs:
        total = sum(voltage(Lp, s, p, q) for s in range(v))
        vol_residual = max(vol_residual, abs(total - (tr + v * M[p, q])))
    return {
        "resistance_sum_residual": res_residual,
        "voltage_sum_residual": float(vol_residual),
        "row_sum_residual": float(np.max(np.abs(M.sum(axis=1)))),
    }


def spectral_trace(L: DiscreteLaplacian) -> float:
    """tr(L+) as the sum of reciprocal nonzero Laplacian eigenvalues."""
    eigval = np.linalg.eigvalsh(L.matrix)
    return float(np.sum(1.0 / eigval[1:]))


def hutchinson_trace(
    L: DiscreteLaplacian,
    probes: int = 64,
    seed: int = 0,
    cg_tol: float = 1e-8,
) -> tuple[float, float]:
    """Stochastic estimate of tr(L+) with Rademacher probes and CG solves.

    Returns (estimate, half-width of a 95 percent confidence interval).
    Intended for graphs too large for the dense route; each probe is
    projected onto the complement of the all-ones nullspace before solving.
    """
    import scipy.sparse as sp
    import scipy.sparse.linalg as spla

    A = L.matrix if hasattr(L, "matrix") else L
    if not sp.issparse(A):
        A = sp.csr_matrix(A)
    v = A.shape[0]
    rng = np.random.default_rng(seed)
    samples = np.empty(probes)
    for i in range(probes):
        z = rng.integers(0, 2, size=v) * 2.0 - 1.0
        z -= z.mean()
        x, info = spla.cg(A, z, rtol=cg_tol, maxiter=20 * v)
        if info != 0:
            raise SingularBeyondNullspace(f"CG failed to converge (info={info})")
        x -= x.mean()
        samples[i] = z @ x
    est = float(samples.mean())
    half = float(1.96 * samples.std(ddof=1) / np.sqrt(probes))
    return est, half


def laplacian_from_sparse_graph(G: MetrizedGraph):
    """Sparse CSR Laplacian for large graphs (Hutchinson route)."""
    import scipy.sparse as sp

    H = G if G.is_adequate() else make_adequate(G)
    v = H.vertex_count
    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    for e in H.edges:
        w = 1.0 / e.length
        rows += [e.a, e.b, e.a, e.b]
        cols += [e.b, e.a, e.a, e.b]
        vals += [-w, -w, w, w]
    A = sp.csr_matrix((vals, (rows, cols)), shape=(v, v))
    return A, H
