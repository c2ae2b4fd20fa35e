"""Ksi centrality, normalized ksi centrality, clustering and boundary counts.

For a node ``i`` with open neighborhood ``N(i)``, the boundary count
``b_i = |E(N(i), V \\ N(i))|`` is the number of edges with exactly one
endpoint inside ``N(i)``.  The node itself lies outside its own
neighborhood, so the ``d_i`` edges incident to ``i`` always contribute,
which gives ``d_i <= b_i <= d_i (n - d_i)``.  From it:

* ksi centrality             ``xi_i     = b_i / d_i``
* normalized ksi centrality  ``xi_hat_i = b_i / (d_i (n - d_i))``

with the degree-zero conventions ``xi_i = 1`` and ``xi_hat_i = 1/n``.

Three independent computation paths are provided and must agree:

1. the neighborhood scan (default production path, exact integer
   counting in ``O(sum_i sum_{j~i} d_j)``),
2. a dense adjacency identity ``b_i = (A^2 (J - A))_ii`` with J the
   all-ones matrix,
3. a dense Laplacian identity: expanding ``(D - A)^3`` termwise gives
   ``diag(L^3)_i = d_i^3 + 2 d_i^2 + b_i`` exactly, in integers.

The dense paths exist for cross-verification and are capped at
``DEFAULT_MATRIX_CAP`` nodes; both stay integer-exact in float64 because
every intermediate is an integer far below 2**53.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import CapacityError, Graph

__all__ = [
    "CentralityVector",
    "DEFAULT_MATRIX_CAP",
    "boundary_edge_count",
    "boundary_counts",
    "boundary_counts_via_adjacency",
    "boundary_counts_via_laplacian",
    "laplacian_cubic_diagonal",
    "ksi",
    "ksi_normalized",
    "ksi_vector",
    "ksi_normalized_vector",
    "ksi_via_adjacency_matrix",
    "ksi_normalized_via_laplacian",
    "local_clustering",
    "clustering_vector",
    "average_ksi",
    "average_ksi_normalized",
    "average_clustering",
]

DEFAULT_MATRIX_CAP = 5000

MEASURE_KSI = "ksi"
MEASURE_KSI_NORMALIZED = "ksi_normalized"
MEASURE_CLUSTERING = "clustering"


@dataclass(frozen=True)
class CentralityVector:
    """Per-node values of one measure, indexed by node id."""

    measure: str
    values: np.ndarray
    graph_n: int


def _adjacency_sparse(g: Graph) -> sp.csr_matrix:
    data = np.ones(g.indices.shape[0], dtype=np.int64)
    return sp.csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))


def _scan_sums(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Per node: sum of neighbor degrees, and 2|E(N(i))| (edge ends inside N(i))."""
    if g.n == 0:
        z = np.zeros(0, dtype=np.int64)
        return z, z
    a = _adjacency_sparse(g)
    nbr_degree_sum = np.asarray(a @ g.degrees.astype(np.int64)).ravel()
    within2 = np.asarray(a.multiply(a @ a).sum(axis=1)).ravel().astype(np.int64)
    return nbr_degree_sum, within2


def boundary_counts(g: Graph) -> np.ndarray:
    """Boundary counts ``b_i`` for all nodes, as exact int64.

    Neighborhood scan: for each neighbor j of i, count j's edge ends that
    leave N(i), i.e. ``b_i = sum_{j~i} d_j - 2 |E(N(i))|``.
    """
    nbr_degree_sum, within2 = _scan_sums(g)
    return nbr_degree_sum - within2


def _neighborhood_scan(g: Graph, i: int) -> tuple[int, int]:
    """(edge ends leaving N(i), edge ends inside N(i)) by sorted-membership tests."""
    nbrs = g.neighbors(i)
    outside = 0
    inside = 0
    for j in nbrs:
        nb_j = g.neighbors(int(j))
        pos = np.searchsorted(nbrs, nb_j)
        pos[pos == nbrs.size] = 0
        hits = int((nbrs[pos] == nb_j).sum())
        inside += hits
        outside += int(nb_j.size) - hits
    return outside, inside


def boundary_edge_count(g: Graph, i) -> int:
    """``|E(N(i), V \\ N(i))|`` for a single node, by direct neighborhood scan."""
    i = g.check_node(i)
    outside, _ = _neighborhood_scan(g, i)
    return outside


def ksi(g: Graph, i) -> float:
    """Ksi centrality of node ``i`` (1.0 at isolated nodes)."""
    i = g.check_node(i)
    d = int(g.degrees[i])
    if d == 0:
        return 1.0
    return boundary_edge_count(g, i) / d


def ksi_normalized(g: Graph, i) -> float:
    """Normalized ksi centrality of node ``i`` (1/n at isolated nodes)."""
    i = g.check_node(i)
    d = int(g.degrees[i])
    if d == 0:
        return 1.0 / g.n
    return boundary_edge_count(g, i) / (d * (g.n - d))


def local_clustering(g: Graph, i) -> float:
    """Local clustering coefficient ``2|E(N(i))| / (d_i (d_i - 1))``; 0 when d_i <= 1."""
    i = g.check_node(i)
    d = int(g.degrees[i])
    if d <= 1:
        return 0.0
    _, inside = _neighborhood_scan(g, i)
    return inside / (d * (d - 1))


def ksi_vector(g: Graph, counts: np.ndarray | None = None) -> CentralityVector:
    """Ksi centrality for every node via the scan path."""
    b = boundary_counts(g) if counts is None else counts
    d = g.degrees
    values = np.ones(g.n)
    nz = d > 0
    values[nz] = b[nz] / d[nz]
    return CentralityVector(MEASURE_KSI, values, g.n)


def ksi_normalized_vector(g: Graph, counts: np.ndarray | None = None) -> CentralityVector:
    """Normalized ksi centrality for every node via the scan path."""
    b = boundary_counts(g) if counts is None else counts
    d = g.degrees
    if g.n == 0:
        return CentralityVector(MEASURE_KSI_NORMALIZED, np.zeros(0), 0)
    values = np.full(g.n, 1.0 / g.n)
    nz = d > 0
    values[nz] = b[nz] / (d[nz] * (g.n - d[nz]))
    return CentralityVector(MEASURE_KSI_NORMALIZED, values, g.n)


def clustering_vector(g: Graph) -> CentralityVector:
    """Local clustering coefficient for every node (0 where the degree is <= 1)."""
    _, within2 = _scan_sums(g)
    d = g.degrees
    values = np.zeros(g.n)
    big = d >= 2
    values[big] = within2[big] / (d[big] * (d[big] - 1))
    return CentralityVector(MEASURE_CLUSTERING, values, g.n)


def _dense_adjacency(g: Graph, cap: int) -> np.ndarray:
    if g.n > cap:
        raise CapacityError(
            f"n={g.n} exceeds the dense-matrix cap {cap}; "
            "use the scan path (boundary_counts / ksi_vector) instead"
        )
    a = np.zeros((g.n, g.n))
    if g.m:
        rows = np.repeat(np.arange(g.n), g.degrees)
        a[rows, g.indices] = 1.0
    return a


def boundary_counts_via_adjacency(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
    """Boundary counts from the dense identity ``b_i = (A^2 (J - A))_ii``."""
    a = _dense_adjacency(g, cap)
    a2 = a @ a
    # (A^2 (J - A))_ii = rowsum(A^2)_i - sum_j (A^2)_ij a_ji, with A symmetric
    vals = a2.sum(axis=1) - np.einsum("ij,ij->i", a2, a)
    return np.rint(vals).astype(np.int64)


def ksi_via_adjacency_matrix(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> CentralityVector:
    """Ksi centrality by explicit matrix products, ``(A^2 (J-A))_ii / (A^2)_ii``.

    Nodes of degree zero are patched to 1 per convention.  Intended for
    cross-checking the scan path on graphs with at most ``cap`` nodes.
    """
    b = boundary_counts_via_adjacency(g, cap)
    return ksi_vector(g, counts=b)


def laplacian_cubic_diagonal(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
    """``diag(L^3)`` as exact int64, with ``L = D - A``."""
    a = _dense_adjacency(g, cap)
    lap = np.diag(g.degrees.astype(float)) - a
    l2 = lap @ lap
    return np.rint(np.einsum("ij,ij->i", l2, lap)).astype(np.int64)


def boundary_counts_via_laplacian(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
    """Boundary counts from ``diag(L^3)_i = d_i^3 + 2 d_i^2 + b_i`` (exact integers)."""
    cubic = laplacian_cubic_diagonal(g, cap)
    d = g.degrees.astype(np.int64)
    return cubic - d**3 - 2 * d**2


def ksi_normalized_via_laplacian(g: Graph, cap: int = DEFAULT_MATRIX_CAP) -> CentralityVector:
    """Normalized ksi centrality via the Laplacian cubic-diagonal identity.

    Isolated nodes are patched to 1/n per convention.
    """
    b = boundary_counts_via_laplacian(g, cap)
    return ksi_normalized_vector(g, counts=b)


def _require_nodes(g: Graph):
    if g.n == 0:
        raise ValueError("average is undefined for an empty graph")


def average_ksi(g: Graph) -> float:
    """Mean ksi centrality over all nodes (degree-zero convention included)."""
    _require_nodes(g)
    return float(ksi_vector(g).values.mean())


def average_ksi_normalized(g: Graph) -> float:
    """Mean normalized ksi centrality over all nodes."""
    _require_nodes(g)
    return float(ksi_normalized_vector(g).values.mean())


def average_clustering(g: Graph) -> float:
    """Mean local clustering coefficient over all nodes."""
    _require_nodes(g)
    return float(clustering_vector(g).values.mean())
