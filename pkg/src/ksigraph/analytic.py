"""Closed-form centrality values for special graph families, plus
Erdos-Renyi expectations with sparse-regime asymptotics and a seeded
Monte-Carlo cross-check.

Family values are exact rationals derived from the boundary counts of
the actual constructions, so the scan path must reproduce them bit for
bit; deterministic builders for each family live here to keep that
oracle self-contained.  Nested-triangle wiring is prism-like: the three
vertices of triangle t connect to the corresponding vertices of
triangle t+1.

Validity ranges matter.  The wheel rim formulas hold for n >= 4 (the
n = 3 wheel is the complete graph on four nodes, where every value is
1); the ring-lattice closed form (k+3)/2 requires n >= 3k+1 so that the
second neighbor shell cannot wrap around the ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .centrality import boundary_counts, ksi_normalized_vector, ksi_vector
from .generators import gen_erdos_renyi, gen_ring_lattice
from .graph import Graph, build_graph
from .parallel import ordered_map

__all__ = [
    "ANALYTIC_FAMILIES",
    "FamilyParams",
    "VertexClass",
    "FamilyCentrality",
    "ErExpectation",
    "SparseErAsymptotics",
    "MonteCarloQuantity",
    "ErMonteCarloReport",
    "build_star",
    "build_windmill",
    "build_wheel",
    "build_nested_triangles",
    "build_family",
    "analytic_centrality",
    "per_node_values",
    "er_expected",
    "er_sparse_asymptotics",
    "monte_carlo_er",
]

ANALYTIC_FAMILIES = ("star", "windmill", "wheel", "nested_triangles", "ring_lattice")


@dataclass(frozen=True)
class FamilyParams:
    """Parameters selecting one analytic graph family instance.

    ``n`` means: leaf count (star), clique count (windmill), rim size
    (wheel), triangle count (nested_triangles), node count (ring_lattice).
    ``k`` is the clique size (windmill) or half-degree (ring_lattice).
    """

    family: str
    n: int
    k: int | None = None

    def validate(self) -> "FamilyParams":
        f, n, k = self.family, self.n, self.k
        if f not in ANALYTIC_FAMILIES:
            raise ValueError(f"unknown family {f!r}; choose from {ANALYTIC_FAMILIES}")
        if f == "star" and n < 1:
            raise ValueError("star needs at least one leaf")
        if f == "windmill":
            if k is None or k < 2:
                raise ValueError("windmill needs clique size k >= 2")
            if n < 1:
                raise ValueError("windmill needs at least one clique")
        if f == "wheel" and n < 3:
            raise ValueError("wheel needs rim size n >= 3")
        if f == "nested_triangles" and n < 3:
            raise ValueError("nested triangles need n >= 3")
        if f == "ring_lattice":
            if k is None or k < 1:
                raise ValueError("ring lattice needs half-degree k >= 1")
            if n < 3 * k + 1:
                raise ValueError(
                    f"closed form requires n >= 3k+1 so the second neighbor shell "
                    f"cannot wrap; got n={n}, k={k}"
                )
        return self


@dataclass(frozen=True)
class VertexClass:
    label: str
    count: int
    xi: Fraction
    xi_hat: Fraction


@dataclass(frozen=True)
class FamilyCentrality:
    """Exact per-class values and graph averages for one family instance."""

    params: FamilyParams
    total_nodes: int
    classes: tuple[VertexClass, ...]
    average_xi: Fraction
    average_xi_hat: Fraction


# ---------------------------------------------------------------------------
# deterministic builders

def build_star(n_leaves: int) -> Graph:
    """Star on n_leaves + 1 nodes; node 0 is the center."""
    return build_graph(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])


def build_windmill(n_cliques: int, k: int) -> Graph:
    """n_cliques copies of K_k joined at central node 0."""
    edges = []
    for b in range(n_cliques):
        base = 1 + b * k
        members = range(base, base + k)
        edges.extend((u, v) for u in members for v in members if u < v)
        edges.extend((0, u) for u in members)
    return build_graph(n_cliques * k + 1, edges)


def build_wheel(n_rim: int) -> Graph:
    """Hub node 0 joined to an n_rim-cycle on nodes 1..n_rim."""
    edges = [(0, r) for r in range(1, n_rim + 1)]
    edges += [(r, r % n_rim + 1) for r in range(1, n_rim + 1)]
    return build_graph(n_rim + 1, edges)


def build_nested_triangles(n_tri: int) -> Graph:
    """Chain of n_tri triangles; vertex (t, c) is node 3t + c."""
    edges = []
    for t in range(n_tri):
        a = 3 * t
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        if t + 1 < n_tri:
            edges += [(a + c, a + 3 + c) for c in range(3)]
    return build_graph(3 * n_tri, edges)


def build_family(params: FamilyParams) -> Graph:
    """Construct the actual graph an analytic instance describes."""
    params.validate()
    f, n, k = params.family, params.n, params.k
    if f == "star":
        return build_star(n)
    if f == "windmill":
        return build_windmill(n, k)
    if f == "wheel":
        return build_wheel(n)
    if f == "nested_triangles":
        return build_nested_triangles(n)
    return gen_ring_lattice(n, k)


# ---------------------------------------------------------------------------
# closed forms

def analytic_centrality(params: FamilyParams) -> FamilyCentrality:
    """Exact per-class xi / xi_hat values and graph averages.

    All values are rationals; the averages are simplified closed forms
    that agree exactly with the weighted class means (unit tests pin
    both representations against graphs built by :func:`build_family`).
    """
    params.validate()
    f, n, k = params.family, params.n, params.k
    F = Fraction

    if f == "star":
        total = n + 1
        classes = (
            VertexClass("center", 1, F(1), F(1)),
            VertexClass("leaf", n, F(n), F(1)),
        )
        avg_xi = F(n * n + 1, n + 1)
        avg_xh = F(1)
    elif f == "windmill":
        total = n * k + 1
        classes = (
            VertexClass("center", 1, F(1), F(1)),
            VertexClass("clique", n * k, F(n), F(n, n * k + 1 - k)),
        )
        avg_xi = F(1 + n * n * k, n * k + 1)
        # blade sum carries a factor k: n*k vertices at n/(nk+1-k) each
        avg_xh = F(n * n * k + n * k + 1 - k, (n * k + 1) * (n * k + 1 - k))
    elif f == "wheel":
        total = n + 1
        if n == 3:
            # wheel on 4 nodes is complete; every value is 1
            classes = (
                VertexClass("hub", 1, F(1), F(1)),
                VertexClass("rim", 3, F(1), F(1)),
            )
            avg_xi = F(1)
            avg_xh = F(1)
        else:
            classes = (
                VertexClass("hub", 1, F(1), F(1)),
                VertexClass("rim", n, F(n + 2, 3), F(n + 2, 3 * (n - 2))),
            )
            avg_xi = F(n * n + 2 * n + 3, 3 * (n + 1))
            avg_xh = F((n + 6) * (n - 1), 3 * (n + 1) * (n - 2))
    elif f == "nested_triangles":
        total = 3 * n
        if n == 3:
            # the middle triangle touches two end triangles, not interior ones
            classes = (
                VertexClass("end", 6, F(8, 3), F(8, 9 * (n - 1))),
                VertexClass("middle", 3, F(3), F(3, 3 * n - 4)),
            )
        else:
            classes = tuple(
                c
                for c in (
                    VertexClass("end", 6, F(8, 3), F(8, 9 * (n - 1))),
                    VertexClass("near_end", 6, F(13, 4), F(13, 4 * (3 * n - 4))),
                    VertexClass("interior", 3 * (n - 4), F(7, 2), F(7, 2 * (3 * n - 4))),
                )
                if c.count > 0
            )
        avg_xi = F(21 * n - 13, 6 * n)
        avg_xh = F(63 * n * n - 102 * n + 7, 18 * n * (n - 1) * (3 * n - 4))
    else:  # ring_lattice
        total = n
        classes = (
            VertexClass("node", n, F(k + 3, 2), F(k + 3, 2 * (n - 2 * k))),
        )
        avg_xi = F(k + 3, 2)
        avg_xh = F(k + 3, 2 * (n - 2 * k))

    return FamilyCentrality(params, total, classes, avg_xi, avg_xh)


def per_node_values(params: FamilyParams) -> tuple[list[Fraction], list[Fraction]]:
    """Exact (xi, xi_hat) per node, aligned with :func:`build_family` node ids."""
    fc = analytic_centrality(params)
    f, n = params.family, params.n
    by_label = {c.label: c for c in fc.classes}

    def cls_of(node: int) -> VertexClass:
        if f == "star":
            return by_label["center" if node == 0 else "leaf"]
        if f == "windmill":
            return by_label["center" if node == 0 else "clique"]
        if f == "wheel":
            return by_label["hub" if node == 0 else "rim"]
        if f == "nested_triangles":
            t = node // 3
            if t in (0, n - 1):
                return by_label["end"]
            if n == 3:
                return by_label["middle"]
            if t in (1, n - 2):
                return by_label["near_end"]
            return by_label["interior"]
        return by_label["node"]

    xi = [cls_of(i).xi for i in range(fc.total_nodes)]
    xi_hat = [cls_of(i).xi_hat for i in range(fc.total_nodes)]
    return xi, xi_hat


# ---------------------------------------------------------------------------
# Erdos-Renyi expectations

@dataclass(frozen=True)
class ErExpectation:
    """Exact G(n, p) expectations of the boundary count and both measures.

    ``xi_hat`` carries the isolated-node boundary term p(1-p)^(n-1)/n on
    top of the leading p(1-(1-p)^(n-1)) + (1-p^n)/n; without it the
    expression is off by exactly that amount (verified by exhaustive
    enumeration over all graphs with n <= 5).  Per-node expectations and
    graph averages coincide because nodes are exchangeable.
    """

    n: int
    p: float
    e_boundary: float
    xi: float
    xi_hat: float
    average_xi: float
    average_xi_hat: float


def er_expected(n: int, p: float) -> ErExpectation:
    """Closed-form G(n, p) expectations."""
    n = int(n)
    if n < 1:
        raise ValueError("need at least one node")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n == 1:
        return ErExpectation(1, p, 0.0, 1.0, 1.0, 1.0, 1.0)
    q = 1.0 - p
    e_boundary = p * (n - 1) * (1.0 + p * q * (n - 2))
    xi = 1.0 + p * (n - 1) * q * (1.0 - q ** (n - 2))
    xi_hat = p * (1.0 - q ** (n - 1)) + (1.0 - p**n) / n + p * q ** (n - 1) / n
    return ErExpectation(n, p, e_boundary, xi, xi_hat, xi, xi_hat)


@dataclass(frozen=True)
class SparseErAsymptotics:
    """Leading-order G(n, lambda/n) approximations next to the exact values."""

    n: int
    lam: float
    approx_average_xi_hat: float
    approx_average_xi: float
    exact: ErExpectation
    # |exact - approx| * n^2 for xi_hat; the approximation error is O(1/n^2)
    fitted_constant_xi_hat: float


def er_sparse_asymptotics(n: int, lam: float) -> SparseErAsymptotics:
    """Sparse-regime approximations Xi_hat ~ (1 + lam(1-e^-lam))/n, Xi ~ 1 + lam(1-e^-lam)."""
    n = int(n)
    if n < 1:
        raise ValueError("need at least one node")
    if lam < 0 or lam > n:
        raise ValueError(f"need 0 <= lambda <= n, got lambda={lam}, n={n}")
    growth = lam * (1.0 - math.exp(-lam))
    approx_xh = (1.0 + growth) / n
    approx_xi = 1.0 + growth
    exact = er_expected(n, lam / n)
    fitted = abs(exact.average_xi_hat - approx_xh) * n * n
    return SparseErAsymptotics(n, lam, approx_xh, approx_xi, exact, fitted)


# ---------------------------------------------------------------------------
# Monte-Carlo verification

@dataclass(frozen=True)
class MonteCarloQuantity:
    name: str
    sample_mean: float
    sample_sd: float
    standard_error: float | None
    expected: float
    z_score: float | None

    @property
    def within_3se(self) -> bool | None:
        if self.z_score is None:
            return None
        return abs(self.z_score) <= 3.0


@dataclass(frozen=True)
class ErMonteCarloReport:
    n: int
    p: float
    samples: int
    quantities: tuple[MonteCarloQuantity, ...]

    def quantity(self, name: str) -> MonteCarloQuantity:
        for q in self.quantities:
            if q.name == name:
                return q
        raise KeyError(name)


def monte_carlo_er(n: int, p: float, samples: int, seed=None, threads: int = 1) -> ErMonteCarloReport:
    """Sampled G(n, p) means next to the closed forms, with z-scores.

    Per sample: a probe node is drawn uniformly, then the graph, both from
    one child stream of ``SeedSequence(seed)``; the boundary count is read
    at the probe node and the averages over all nodes.  With one sample no
    standard error (and no z-score) is reported.
    """
    n = int(n)
    samples = int(samples)
    if samples < 1:
        raise ValueError("need at least one sample")
    if n < 1:
        raise ValueError("need at least one node")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")

    children = np.random.SeedSequence(seed).spawn(samples)

    def one(child):
        rng = np.random.default_rng(child)
        probe = int(rng.integers(0, n))
        g = gen_erdos_renyi(n, p, seed=rng)
        b = boundary_counts(g)
        return (
            float(b[probe]),
            float(ksi_normalized_vector(g, counts=b).values.mean()),
            float(ksi_vector(g, counts=b).values.mean()),
        )

    rows = np.array(ordered_map(one, children, threads=threads))
    expected = er_expected(n, p)
    names = ("boundary", "average_xi_hat", "average_xi")
    targets = (expected.e_boundary, expected.average_xi_hat, expected.average_xi)
    quantities = []
    for col, (name, target) in enumerate(zip(names, targets)):
        vals = rows[:, col]
        mean = float(vals.mean())
        if samples >= 2:
            sd = float(vals.std(ddof=1))
            se = sd / math.sqrt(samples)
            if se > 0:
                z = (mean - target) / se
            else:
                z = 0.0 if mean == target else math.copysign(math.inf, mean - target)
        else:
            sd = 0.0
            se = None
            z = None
        quantities.append(MonteCarloQuantity(name, mean, sd, se, target, z))
    return ErMonteCarloReport(n, p, samples, tuple(quantities))
