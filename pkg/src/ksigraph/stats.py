"""Distribution summaries and the ensemble experiments built on them.

Skewness is the adjusted Fisher-Pearson sample statistic
``g1 * sqrt(n(n-1)) / (n-2)`` and shape labels use configurable
thresholds (defaults +-0.5): above the upper threshold is right-skewed,
below the lower is left-skewed, otherwise centered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import FamilyParams, analytic_centrality
from .centrality import (
    CentralityVector,
    average_clustering,
    boundary_counts,
    clustering_vector,
    ksi_normalized_vector,
    ksi_vector,
)
from .generators import gen_barabasi_albert, gen_ring_lattice, gen_watts_strogatz
from .graph import Graph
from .parallel import ordered_map

__all__ = [
    "DistributionSummary",
    "NetworkReport",
    "SHAPE_THRESHOLDS",
    "summarize",
    "shape_classify",
    "network_report",
    "ratio_series_ws",
    "ba_size_invariance",
]

SHAPE_THRESHOLDS = (-0.5, 0.5)

RIGHT_SKEWED = "right_skewed"
CENTERED = "centered"
LEFT_SKEWED = "left_skewed"


@dataclass(frozen=True)
class DistributionSummary:
    """Moments plus an equal-width histogram covering [min, max]."""

    count: int
    mean: float
    variance: float
    skewness: float
    min: float
    max: float
    bin_edges: np.ndarray
    bin_counts: np.ndarray

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "mean": self.mean,
            "variance": self.variance,
            "skewness": self.skewness,
            "min": self.min,
            "max": self.max,
            "bin_edges": [float(x) for x in self.bin_edges],
            "bin_counts": [int(c) for c in self.bin_counts],
        }


def _values_array(values) -> np.ndarray:
    if isinstance(values, CentralityVector):
        values = values.values
    return np.asarray(values, dtype=float)


def summarize(values, bins: int = 50) -> DistributionSummary:
    """Summary statistics and histogram of a value vector.

    Sample variance uses the n-1 denominator (0 for a single value);
    skewness is defined as 0 for constant input or fewer than 3 values.
    A degenerate min == max vector collapses to a single zero-width bin.
    """
    arr = _values_array(values)
    if arr.size == 0:
        raise ValueError("cannot summarize an empty value vector")
    bins = int(bins)
    if bins < 1:
        raise ValueError("need at least one histogram bin")
    count = int(arr.size)
    mean = float(arr.mean())
    dev = arr - mean
    m2 = float((dev**2).mean())
    variance = m2 * count / (count - 1) if count >= 2 else 0.0
    if count >= 3 and m2 > 0.0:
        g1 = float((dev**3).mean()) / m2**1.5
        skewness = g1 * math.sqrt(count * (count - 1)) / (count - 2)
    else:
        skewness = 0.0
    lo = float(arr.min())
    hi = float(arr.max())
    if lo == hi:
        edges = np.array([lo, hi])
        counts = np.array([count], dtype=np.int64)
    else:
        counts, edges = np.histogram(arr, bins=bins, range=(lo, hi))
        counts = counts.astype(np.int64)
    return DistributionSummary(count, mean, variance, skewness, lo, hi, edges, counts)


def shape_classify(summary: DistributionSummary, thresholds=SHAPE_THRESHOLDS) -> str:
    """Label a distribution by its sample skewness."""
    if summary.count < 3:
        raise ValueError("shape classification needs at least three values")
    lower, upper = thresholds
    if summary.skewness > upper:
        return RIGHT_SKEWED
    if summary.skewness < lower:
        return LEFT_SKEWED
    return CENTERED


@dataclass(frozen=True)
class NetworkReport:
    """Whole-graph centrality report: averages, per-measure summaries, shape."""

    graph_id: str
    n: int
    m: int
    average_xi: float
    average_xi_hat: float
    average_clustering: float
    summaries: dict
    shape_label: str | None

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "average_xi": self.average_xi,
            "average_xi_hat": self.average_xi_hat,
            "average_clustering": self.average_clustering,
            "summaries": {k: s.to_dict() for k, s in self.summaries.items()},
            "shape_label": self.shape_label,
        }


def network_report(g: Graph, graph_id: str = "graph", bins: int = 50,
                   thresholds=SHAPE_THRESHOLDS) -> NetworkReport:
    """Compute both averages, per-measure summaries and the shape label.

    The label comes from the xi distribution (None when n < 3).
    """
    if g.n < 1:
        raise ValueError("network report needs at least one node")
    b = boundary_counts(g)
    xi = ksi_vector(g, counts=b)
    xh = ksi_normalized_vector(g, counts=b)
    cl = clustering_vector(g)
    summaries = {
        "xi": summarize(xi, bins=bins),
        "xi_norm": summarize(xh, bins=bins),
        "clustering": summarize(cl, bins=bins),
    }
    label = shape_classify(summaries["xi"], thresholds) if g.n >= 3 else None
    return NetworkReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        average_xi=float(xi.values.mean()),
        average_xi_hat=float(xh.values.mean()),
        average_clustering=float(cl.values.mean()),
        summaries=summaries,
        shape_label=label,
    )


def _ring_reference(n: int, k: int) -> tuple[float, float]:
    """(Xi, Xi_hat) of the unrewired lattice; closed form when it applies."""
    if n >= 3 * k + 1:
        fc = analytic_centrality(FamilyParams("ring_lattice", n, k))
        return float(fc.average_xi), float(fc.average_xi_hat)
    g0 = gen_ring_lattice(n, k)
    b = boundary_counts(g0)
    return (
        float(ksi_vector(g0, counts=b).values.mean()),
        float(ksi_normalized_vector(g0, counts=b).values.mean()),
    )


def ratio_series_ws(n: int, k: int, p_grid, seeds, threads: int = 1) -> list[dict]:
    """Lattice-to-rewired ratio curves for a Watts-Strogatz sweep.

    For each rewiring probability p the ratios Xi(G0)/Xi(Gp) and
    Xi_hat(G0)/Xi_hat(Gp) are averaged over the given seeds, with the
    G0 values taken from the ring-lattice closed form.
    """
    n, k = int(n), int(k)
    if k < 1 or 2 * k >= n:
        raise ValueError(f"need 1 <= k and 2k < n, got n={n}, k={k}")
    p_grid = [float(p) for p in p_grid]
    for p in p_grid:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"rewiring probability must lie in [0, 1], got {p}")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    xi0, xh0 = _ring_reference(n, k)

    def cell(args):
        p, seed = args
        g = gen_watts_strogatz(n, k, p, seed=seed)
        b = boundary_counts(g)
        xi_p = float(ksi_vector(g, counts=b).values.mean())
        xh_p = float(ksi_normalized_vector(g, counts=b).values.mean())
        return xi0 / xi_p, xh0 / xh_p

    cells = [(p, s) for p in p_grid for s in seeds]
    results = ordered_map(cell, cells, threads=threads)
    series = []
    for idx, p in enumerate(p_grid):
        block = results[idx * len(seeds) : (idx + 1) * len(seeds)]
        series.append(
            {
                "p": p,
                "xi_ratio": float(np.mean([r[0] for r in block])),
                "xi_hat_ratio": float(np.mean([r[1] for r in block])),
            }
        )
    return series


def ba_size_invariance(n_grid, k_ratio_grid, seeds, threads: int = 1) -> list[dict]:
    """Seed-averaged (Xi_hat, Xi) per (n, attachment ratio) cell.

    Used to check that Xi_hat at fixed m_attach/n barely moves with n
    while Xi grows with it.
    """
    n_grid = [int(n) for n in n_grid]
    ratios = [float(r) for r in k_ratio_grid]
    for r in ratios:
        if not 0.0 < r < 1.0:
            raise ValueError(f"attachment ratio must lie in (0, 1), got {r}")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")

    def cell(args):
        n, ratio, seed = args
        m_attach = max(1, round(ratio * n))
        g = gen_barabasi_albert(n, m_attach, seed=seed)
        b = boundary_counts(g)
        return (
            float(ksi_normalized_vector(g, counts=b).values.mean()),
            float(ksi_vector(g, counts=b).values.mean()),
        )

    cells = [(n, r, s) for n in n_grid for r in ratios for s in seeds]
    results = ordered_map(cell, cells, threads=threads)
    rows = []
    idx = 0
    for n in n_grid:
        for r in ratios:
            block = results[idx : idx + len(seeds)]
            idx += len(seeds)
            rows.append(
                {
                    "n": n,
                    "k_ratio": r,
                    "m_attach": max(1, round(r * n)),
                    "average_xi_hat": float(np.mean([b_[0] for b_ in block])),
                    "average_xi": float(np.mean([b_[1] for b_ in block])),
                }
            )
    return rows
