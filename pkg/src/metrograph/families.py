"""Generators for the graph families under study.

All generators emit unit edge lengths; normalize afterwards when the
normalized tau is wanted.  Vertex numbering is frozen per family (the
constructions are stated with 1-based labels, stored 0-based) so generated
Laplacians are reproducible byte-for-byte.
"""

from __future__ import annotations

import warnings
from typing import Optional

import numpy as np

from .errors import DegenerateChord, ParameterOutOfRange, ParityViolation
from .graph import MetrizedGraph, from_edge_list


def circle(n: int) -> MetrizedGraph:
    """Cycle with n unit edges; n=1 is a self-loop, n=2 a parallel pair."""
    if n < 1:
        raise ParameterOutOfRange(f"circle needs n >= 1, got {n}")
    return from_edge_list([(i, (i + 1) % n, 1.0) for i in range(n)])


def complete(v: int) -> MetrizedGraph:
    """Complete graph K_v with unit edges."""
    if v < 2:
        raise ParameterOutOfRange(f"complete needs v >= 2, got {v}")
    return from_edge_list(
        [(p, q, 1.0) for p in range(v) for q in range(p + 1, v)]
    )


def path(n_edges: int) -> MetrizedGraph:
    """Path with n unit edges (a tree; every edge a bridge)."""
    if n_edges < 1:
        raise ParameterOutOfRange("path needs at least one edge")
    return from_edge_list([(i, i + 1, 1.0) for i in range(n_edges)])


def hexagonal_torus(n: int, m: int) -> MetrizedGraph:
    """Hexagonal net around a torus H(n, m): cubic, 2(n+1)(m+1) vertices.

    Built from the tensor-product adjacency
    I_(n+1) (x) A(C_(2m+2)) + B_(n+1) (x) F_(2m+2) + transpose,
    where B is the cyclic one-step shift and F marks the (2k, 2k-1) pairs.
    Vertex order is block-major: vertex = block * (2m+2) + position, which
    fixes the 12x12 Laplacian of H(2, 1) exactly.

    Degenerate small parameters (n=0, or m=0 with n=0) can produce parallel
    edges; integer adjacency multiplicities are kept as parallel edges.
    """
    if n < 0 or m < 0:
        raise ParameterOutOfRange(f"H(n,m) needs n, m >= 0, got ({n}, {m})")
    N, M = n + 1, 2 * (m + 1)
    B = np.zeros((N, N), dtype=int)
    for i in range(N):
        B[i, (i + 1) % N] += 1
    F = np.zeros((M, M), dtype=int)
    for k in range(1, M, 2):
        F[k, k - 1] = 1
    AC = np.zeros((M, M), dtype=int)
    for i in range(M):
        AC[i, (i + 1) % M] += 1
        AC[(i + 1) % M, i] += 1
    A = (
        np.kron(np.eye(N, dtype=int), AC)
        + np.kron(B, F)
        + np.kron(B.T, F.T)
    )
    records: list[tuple[int, int, float]] = []
    v = N * M
    for p in range(v):
        for q in range(p, v):
            mult = A[p, q] if p != q else A[p, p] // 2
            records += [(p, q, 1.0)] * int(mult)
    return from_edge_list(records)


def mm_graph(a: int, b: int) -> MetrizedGraph:
    """Cubic graph MM(a, b) on 4ab vertices.

    Two circles A and B of ab vertices each, a circles C_k of 2b vertices,
    and two connecting edges per (k, j): the odd C_k positions attach to
    circle A with stride a, the even positions to circle B likewise.
    """
    if a < 2 or b < 2:
        raise ParameterOutOfRange(f"mm_graph needs a, b >= 2, got ({a}, {b})")
    if a < 3 or b < 3:
        warnings.warn(
            f"MM({a},{b}): parameters below 3 are outside the intended range",
            stacklevel=2,
        )
    ab = a * b
    edges_1b: list[tuple[int, int]] = []
    for i in range(1, ab + 1):  # circle A on 1..ab
        edges_1b.append((i, i % ab + 1))
    for i in range(1, ab + 1):  # circle B on ab+1..2ab
        edges_1b.append((ab + i, ab + i % ab + 1))
    for k in range(1, a + 1):  # circles C_k, 2b vertices each
        base = 2 * ab + 2 * b * (k - 1)
        for t in range(1, 2 * b + 1):
            edges_1b.append((base + t, base + t % (2 * b) + 1))
    for k in range(1, a + 1):
        base = 2 * ab + 2 * b * (k - 1)
        for j in range(1, b + 1):
            edges_1b.append((base + 2 * j - 1, a * (j - 1) + k))
            edges_1b.append((base + 2 * j, ab + a * (j - 1) + k))
    return from_edge_list([(p - 1, q - 1, 1.0) for p, q in edges_1b])


def tt_graph(a: int, b: int, c: int) -> MetrizedGraph:
    """Cubic graph TT(a, b, c): chorded 3-Cayley tree on 3*2^a - 2 vertices.

    The tree has k = 3*2^(a-1) - 2 inner vertices (labels 1..k, breadth
    first from the degree-3 root) and 3*2^(a-1) outer vertices (labels
    k+1 .. 3*2^a - 2 in tree order).  Chords join outer position i to
    i + b for odd i and to i + c - 1 for even i, cyclically; b and c must
    have different parity.  A chord that degenerates to a self-loop or
    duplicates another edge is an error, not silently repaired.
    """
    if a < 1 or b < 1 or c < 1:
        raise ParameterOutOfRange(
            f"tt_graph needs positive parameters, got ({a}, {b}, {c})"
        )
    if b % 2 == c % 2:
        raise ParityViolation(f"b={b} and c={c} must differ in parity")
    n_outer = 3 * 2 ** (a - 1)
    k = n_outer - 2
    edges_1b: list[tuple[int, int]] = []
    current = [1]
    next_label = 2
    for level in range(a):
        children_per = 3 if level == 0 else 2
        nxt: list[int] = []
        for parent in current:
            for _ in range(children_per):
                edges_1b.append((parent, next_label))
                nxt.append(next_label)
                next_label += 1
        current = nxt

    def outer(i: int) -> int:
        i %= n_outer
        return k + (i if i else n_outer)

    seen = {frozenset(e) for e in edges_1b}
    for i in range(1, n_outer + 1):
        offset = b if i % 2 == 1 else c - 1
        p, q = outer(i), outer(i + offset)
        if p == q:
            raise DegenerateChord(f"chord at outer position {i} is a self-loop")
        key = frozenset((p, q))
        if key in seen:
            raise DegenerateChord(
                f"chord at outer position {i} duplicates edge ({p}, {q})"
            )
        seen.add(key)
        edges_1b.append((p, q))
    return from_edge_list([(p - 1, q - 1, 1.0) for p, q in edges_1b])


def random_connected_graph(
    v: int,
    extra_edges: int,
    seed: int,
    bridgeless: bool = False,
    max_tries: int = 200,
) -> MetrizedGraph:
    """Random connected multigraph for property tests.

    A random spanning tree plus ``extra_edges`` uniform chords, with edge
    lengths drawn log-uniform in [0.5, 2].  With ``bridgeless`` the sample
    is rejected until no bridges remain.
    """
    from .graph import find_bridges

    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        records: list[tuple[int, int, float]] = []
        order = rng.permutation(v)
        for i in range(1, v):
            j = order[rng.integers(0, i)]
            records.append((int(order[i]), int(j), 1.0))
        for _ in range(extra_edges):
            p, q = rng.integers(0, v, size=2)
            records.append((int(p), int(q), 1.0))
        lengths = np.exp(rng.uniform(np.log(0.5), np.log(2.0), len(records)))
        records = [(p, q, float(L)) for (p, q, _), L in zip(records, lengths)]
        G = from_edge_list(records)
        if not bridgeless:
            return G
        if not find_bridges(G) and not G.has_self_loops():
            return G
    raise RuntimeError("failed to sample a bridgeless graph")


def random_tree(n_edges: int, seed: int) -> MetrizedGraph:
    """Uniform random attachment tree with unit edge lengths."""
    rng = np.random.default_rng(seed)
    records = [(0, 1, 1.0)]
    for w in range(2, n_edges + 1):
        records.append((int(rng.integers(0, w)), w, 1.0))
    return from_edge_list(records)
