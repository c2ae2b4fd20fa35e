"""Algebraic connectivity, exact small-graph Cheeger constants, and
verification of the centrality lower bounds that involve them.

Two inequalities are checked.  The connectivity bound states that
``n * xi_hat_i >= lambda2`` for every node (and hence for the average).
The Cheeger bounds state that ``xi_i >= h(G)`` whenever ``2 d_i <= n``,
and that ``xi_hat_i >= h(G) / (n - d_i)`` in that case
(``>= h(G) / d_i`` otherwise); both follow from taking ``S = N(i)`` or
its complement in the definition of ``h``.  A product-form variant
(``xi_hat_i >= h * (n - d_i)``) is additionally *reported* for
reference: it is not implied by the definitions and generally fails,
so it is never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .centrality import boundary_counts, ksi_normalized_vector
from .graph import CapacityError, Graph

__all__ = [
    "SpectralSummary",
    "CheegerResult",
    "ConnectivityBoundReport",
    "CheegerBoundReport",
    "DENSE_EIG_CUTOFF",
    "CHEEGER_CAP",
    "laplacian_dense",
    "algebraic_connectivity",
    "cheeger_exact",
    "verify_lambda2_bound",
    "verify_cheeger_bounds",
]

DENSE_EIG_CUTOFF = 2000
CHEEGER_CAP = 22


@dataclass(frozen=True)
class SpectralSummary:
    """Second-smallest Laplacian eigenvalue with solver diagnostics."""

    lambda2: float
    method: str
    residual: float


@dataclass(frozen=True)
class CheegerResult:
    """Exact Cheeger constant with the minimizing vertex set."""

    h: Fraction
    witness_set: tuple
    n_evaluated: int


def laplacian_dense(g: Graph) -> np.ndarray:
    """Dense Laplacian ``L = D - A`` as float64."""
    a = np.zeros((g.n, g.n))
    if g.m:
        rows = np.repeat(np.arange(g.n), g.degrees)
        a[rows, g.indices] = 1.0
    return np.diag(g.degrees.astype(float)) - a


def algebraic_connectivity(g: Graph, dense_cutoff: int = DENSE_EIG_CUTOFF) -> SpectralSummary:
    """Second-smallest eigenvalue of the Laplacian.

    Uses a dense symmetric eigensolver up to ``dense_cutoff`` nodes and a
    Lanczos iteration above it, with the all-ones kernel vector deflated
    by shifting it to the top of the spectrum.  On a disconnected graph
    the result is ~0.
    """
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least two nodes")
    if g.n <= dense_cutoff:
        lap = laplacian_dense(g)
        w, v = scipy.linalg.eigh(lap, subset_by_index=[1, 1])
        lam = float(w[0])
        vec = v[:, 0]
        residual = float(np.linalg.norm(lap @ vec - lam * vec))
        return SpectralSummary(lam, "dense_eigh", residual)

    data = np.ones(g.indices.shape[0])
    a = sp.csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))
    lap = sp.diags(g.degrees.astype(float)) - a
    shift = float(2 * g.degrees.max() + 1)  # >= lambda_max, moves the 1-vector out of the way
    ones = np.ones(g.n)

    def matvec(x):
        return lap @ x + shift * (x.sum() / g.n) * ones

    op = spla.LinearOperator((g.n, g.n), matvec=matvec, dtype=float)
    w, v = spla.eigsh(op, k=1, which="SA", maxiter=20000)
    lam = float(w[0])
    vec = v[:, 0]
    residual = float(np.linalg.norm(lap @ vec - lam * vec))
    return SpectralSummary(lam, "iterative", residual)


def cheeger_exact(g: Graph, cap: int = CHEEGER_CAP) -> CheegerResult:
    """Exact ``h(G) = min_{0 < |S| <= n/2} |E(S, S~)| / |S|`` by subset enumeration.

    Gray-code enumeration keeps the cut size incrementally updated, so
    the whole 2^n sweep costs O(1) bit work per subset.  Ties are broken
    toward the lexicographically smallest witness set, which makes the
    result independent of enumeration order.
    """
    n = g.n
    if n < 2:
        raise ValueError("Cheeger constant needs at least two nodes")
    if n > cap:
        raise CapacityError(
            f"exact Cheeger enumeration is capped at n={cap} (got n={n}); "
            "use the algebraic-connectivity bounds instead"
        )
    neighbor_mask = [0] * n
    for i in range(n):
        acc = 0
        for j in g.neighbors(i):
            acc |= 1 << int(j)
        neighbor_mask[i] = acc
    deg = [int(d) for d in g.degrees]
    half = n // 2

    best_cut = best_size = None
    best_set: tuple | None = None
    evaluated = 0
    mask = 0
    size = 0
    cut = 0
    for step in range(1, 1 << n):
        bit = (step & -step).bit_length() - 1
        flag = 1 << bit
        if mask & flag:
            mask ^= flag
            size -= 1
            cut -= deg[bit] - 2 * (neighbor_mask[bit] & mask).bit_count()
        else:
            cut += deg[bit] - 2 * (neighbor_mask[bit] & mask).bit_count()
            mask ^= flag
            size += 1
        if 1 <= size <= half:
            evaluated += 1
            if best_cut is None or cut * best_size < best_cut * size:
                best_cut, best_size = cut, size
                best_set = tuple(i for i in range(n) if mask >> i & 1)
            elif cut * best_size == best_cut * size:
                cand = tuple(i for i in range(n) if mask >> i & 1)
                if cand < best_set:
                    best_set = cand
    return CheegerResult(Fraction(best_cut, best_size), best_set, evaluated)


@dataclass(frozen=True)
class ConnectivityBoundReport:
    """Outcome of checking ``n * xi_hat_i >= lambda2`` per node and on average."""

    lambda2: SpectralSummary
    tolerance: float
    slack: np.ndarray
    min_slack: float
    min_node: int
    average_slack: float
    holds_per_node: bool
    holds_average: bool

    def to_dict(self) -> dict:
        return {
            "lambda2": self.lambda2.lambda2,
            "lambda2_method": self.lambda2.method,
            "lambda2_residual": self.lambda2.residual,
            "tolerance": self.tolerance,
            "min_slack": self.min_slack,
            "min_node": self.min_node,
            "average_slack": self.average_slack,
            "holds_per_node": self.holds_per_node,
            "holds_average": self.holds_average,
        }


def verify_lambda2_bound(g: Graph, tol: float = 1e-6) -> ConnectivityBoundReport:
    """Check the connectivity lower bound at every node and for the average.

    Slack at node i is ``n * xi_hat_i - lambda2``; the bound holds when
    every slack is >= -tol.
    """
    if g.n < 2:
        raise ValueError("bound verification needs at least two nodes")
    summary = algebraic_connectivity(g)
    xh = ksi_normalized_vector(g).values
    slack = g.n * xh - summary.lambda2
    min_node = int(np.argmin(slack))
    average_slack = float(g.n * xh.mean() - summary.lambda2)
    return ConnectivityBoundReport(
        lambda2=summary,
        tolerance=tol,
        slack=slack,
        min_slack=float(slack[min_node]),
        min_node=min_node,
        average_slack=average_slack,
        holds_per_node=bool(slack.min() >= -tol),
        holds_average=average_slack >= -tol,
    )


@dataclass(frozen=True)
class CheegerBoundReport:
    """Exact-arithmetic outcome of the Cheeger-based centrality bounds.

    ``xi_bound``: ``xi_i >= h`` over nodes with ``2 d_i <= n``.
    ``xi_hat_bound``: ``xi_hat_i >= h/(n-d_i)`` (or ``h/d_i`` for
    high-degree nodes), all nodes.
    ``product_form``: the reference-only variant ``xi_hat_i >= h*(n-d_i)``
    (or ``h*d_i``); recorded, never asserted.
    """

    cheeger: CheegerResult
    xi_bound_checked: int
    xi_bound_holds: bool
    xi_bound_min_margin: Fraction | None
    xi_hat_bound_holds: bool
    xi_hat_bound_min_margin: Fraction | None
    product_form_holds: bool
    product_form_violations: int

    def to_dict(self) -> dict:
        return {
            "h": str(self.cheeger.h),
            "h_float": float(self.cheeger.h),
            "witness_set": list(self.cheeger.witness_set),
            "subsets_evaluated": self.cheeger.n_evaluated,
            "xi_bound": {
                "nodes_checked": self.xi_bound_checked,
                "holds": self.xi_bound_holds,
                "min_margin": None if self.xi_bound_min_margin is None else str(self.xi_bound_min_margin),
            },
            "xi_hat_bound": {
                "holds": self.xi_hat_bound_holds,
                "min_margin": None if self.xi_hat_bound_min_margin is None else str(self.xi_hat_bound_min_margin),
            },
            "xi_hat_product_form": {
                "holds": self.product_form_holds,
                "violations": self.product_form_violations,
            },
        }


def verify_cheeger_bounds(g: Graph, cap: int = CHEEGER_CAP) -> CheegerBoundReport:
    """Check the Cheeger-based bounds in exact rational arithmetic."""
    result = cheeger_exact(g, cap=cap)
    h = result.h
    n = g.n
    b = boundary_counts(g)
    deg = g.degrees

    xi_checked = 0
    xi_holds = True
    xi_margin: Fraction | None = None
    xh_holds = True
    xh_margin: Fraction | None = None
    prod_violations = 0

    for i in range(n):
        d = int(deg[i])
        bi = int(b[i])
        xi_val = Fraction(bi, d) if d else Fraction(1)
        xh_val = Fraction(bi, d * (n - d)) if d else Fraction(1, n)
        low_degree = 2 * d <= n

        if low_degree:
            xi_checked += 1
            margin = xi_val - h
            if xi_margin is None or margin < xi_margin:
                xi_margin = margin
            if margin < 0:
                xi_holds = False

        divisor = (n - d) if low_degree else d
        margin = xh_val - h / divisor
        if xh_margin is None or margin < xh_margin:
            xh_margin = margin
        if margin < 0:
            xh_holds = False

        if xh_val < h * divisor:
            prod_violations += 1

    return CheegerBoundReport(
        cheeger=result,
        xi_bound_checked=xi_checked,
        xi_bound_holds=xi_holds,
        xi_bound_min_margin=xi_margin,
        xi_hat_bound_holds=xh_holds,
        xi_hat_bound_min_margin=xh_margin,
        product_form_holds=prod_violations == 0,
        product_form_violations=prod_violations,
    )
