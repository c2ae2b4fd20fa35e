"""Seeded random and deterministic graph generators.

Randomness contract: every generator that takes ``seed`` builds a fresh
``numpy.random.Generator`` backed by PCG64 via ``numpy.random.default_rng``
and consumes draws in the order documented in its docstring, so a given
(parameters, seed) pair reproduces the same graph bit for bit on any
platform.  ``seed`` may be anything ``default_rng`` accepts (an int, a
``SeedSequence``, or an existing ``Generator``).  Ensemble code should
derive one child per member with ``numpy.random.SeedSequence(seed).spawn``.

Generation of a single graph is single-threaded by design; generate
several graphs concurrently with independent seeds instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, build_graph

__all__ = [
    "GenSpec",
    "FAMILIES",
    "generate",
    "gen_erdos_renyi",
    "gen_ring_lattice",
    "gen_watts_strogatz",
    "gen_barabasi_albert",
    "gen_havel_hakimi",
    "gen_bhl",
]

FAMILIES = (
    "erdos_renyi",
    "ring_lattice",
    "watts_strogatz",
    "barabasi_albert",
    "havel_hakimi",
    "bhl",
)


@dataclass(frozen=True)
class GenSpec:
    """One generator invocation: family name, family parameters, seed."""

    family: str
    params: dict
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(
            {"family": self.family, "params": self.params, "seed": self.seed},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        obj = json.loads(text)
        return cls(family=obj["family"], params=dict(obj["params"]), seed=obj.get("seed"))


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by a :class:`GenSpec`."""
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown generator family {spec.family!r}; choose from {FAMILIES}")
    fn = {
        "erdos_renyi": gen_erdos_renyi,
        "ring_lattice": gen_ring_lattice,
        "watts_strogatz": gen_watts_strogatz,
        "barabasi_albert": gen_barabasi_albert,
        "havel_hakimi": gen_havel_hakimi,
        "bhl": gen_bhl,
    }[spec.family]
    kwargs = dict(spec.params)
    if spec.family not in ("ring_lattice", "havel_hakimi"):
        kwargs["seed"] = spec.seed
    return fn(**kwargs)


def gen_erdos_renyi(n: int, p: float, seed=None) -> Graph:
    """G(n, p): each of the C(n, 2) pairs appears independently with probability p.

    Draw order: for i = 0..n-2, one uniform per pair (i, j) with j = i+1..n-1.
    """
    n = int(n)
    if n < 0:
        raise ValueError("node count must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    rows = []
    for i in range(n - 1):
        u = rng.random(n - 1 - i)
        hits = np.flatnonzero(u < p)
        if hits.size:
            rows.append(
                np.column_stack([np.full(hits.size, i, dtype=np.int64), i + 1 + hits])
            )
    edges = np.concatenate(rows) if rows else np.zeros((0, 2), dtype=np.int64)
    return build_graph(n, edges)


def gen_ring_lattice(n: int, k: int) -> Graph:
    """Ring lattice: node i adjacent to i+-1 .. i+-k (mod n); regular of degree 2k."""
    n, k = int(n), int(k)
    if k < 0:
        raise ValueError("half-degree k must be non-negative")
    if k > 0 and 2 * k >= n:
        raise ValueError(f"ring lattice needs 2k < n, got n={n}, k={k}")
    edges = [(i, (i + t) % n) for i in range(n) for t in range(1, k + 1)]
    return build_graph(n, edges)


def gen_watts_strogatz(n: int, k: int, p_rewire: float, seed=None) -> Graph:
    """Ring lattice with each edge's far endpoint rewired with probability p_rewire.

    Edges are scanned in canonical order (i = 0..n-1, offset t = 1..k) and
    one uniform is drawn per edge.  A rewire draws uniform candidates until
    one avoids self-loops and current duplicates (up to n attempts, then the
    original edge is kept), so the edge count m = n*k is always preserved.
    """
    n, k = int(n), int(k)
    if not 0.0 <= p_rewire <= 1.0:
        raise ValueError(f"rewiring probability must lie in [0, 1], got {p_rewire}")
    if k < 0:
        raise ValueError("half-degree k must be non-negative")
    if k > 0 and 2 * k >= n:
        raise ValueError(f"ring lattice needs 2k < n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(n)]
    for i in range(n):
        for t in range(1, k + 1):
            j = (i + t) % n
            adj[i].add(j)
            adj[j].add(i)
    for i in range(n):
        for t in range(1, k + 1):
            if rng.random() >= p_rewire:
                continue
            j_old = (i + t) % n
            for _ in range(n):
                c = int(rng.integers(0, n))
                if c != i and c not in adj[i]:
                    adj[i].discard(j_old)
                    adj[j_old].discard(i)
                    adj[i].add(c)
                    adj[c].add(i)
                    break
    edges = [(i, j) for i in range(n) for j in adj[i] if i < j]
    return build_graph(n, edges)


def gen_barabasi_albert(n: int, m_attach: int, seed=None) -> Graph:
    """Degree-preferential growth: clique seed, then m_attach edges per new node.

    The seed graph is a clique on the first ``m_attach`` nodes.  Each new
    node draws ``m_attach`` distinct targets proportional to the degrees
    frozen at its arrival; repeated draws are rejected and redrawn.  While
    every existing degree is zero (only possible with m_attach = 1 at the
    first step) the draw falls back to uniform.
    """
    n, m_attach = int(n), int(m_attach)
    if not 1 <= m_attach < n:
        raise ValueError(f"need 1 <= m_attach < n, got n={n}, m_attach={m_attach}")
    rng = np.random.default_rng(seed)
    edges: list[tuple[int, int]] = list(combinations(range(m_attach), 2))
    deg = np.zeros(n, dtype=np.int64)
    deg[:m_attach] = m_attach - 1
    for v in range(m_attach, n):
        cum = np.cumsum(deg[:v])
        total = int(cum[-1])
        chosen: set[int] = set()
        while len(chosen) < m_attach:
            if total == 0:
                t = int(rng.integers(0, v))
            else:
                t = int(np.searchsorted(cum, rng.random() * total, side="right"))
            if t not in chosen:
                chosen.add(t)
        for t in sorted(chosen):
            edges.append((v, t))
            deg[t] += 1
        deg[v] = m_attach
    return build_graph(n, edges)


def gen_havel_hakimi(degrees) -> Graph:
    """Deterministic realization of a graphical degree sequence.

    Repeatedly connects the highest-degree unsatisfied node (ties broken by
    smallest id) to the next-highest-degree nodes.  Raises ``ValueError``
    naming the first failing step when the sequence is not graphical.
    """
    seq = [int(d) for d in degrees]
    n = len(seq)
    for i, d in enumerate(seq):
        if d < 0:
            raise ValueError(f"non-graphical degree sequence: degree {d} of node {i} is negative")
        if d > n - 1:
            raise ValueError(
                f"non-graphical degree sequence: degree {d} of node {i} exceeds n-1={n - 1}"
            )
    if sum(seq) % 2:
        raise ValueError("non-graphical degree sequence: odd degree sum")
    remaining = [[d, i] for i, d in enumerate(seq)]
    edges: list[tuple[int, int]] = []
    step = 0
    while True:
        remaining.sort(key=lambda t: (-t[0], t[1]))
        d, u = remaining[0]
        if d == 0:
            break
        step += 1
        if d > len(remaining) - 1:
            raise ValueError(
                f"non-graphical degree sequence at step {step}: "
                f"node {u} needs {d} edges but only {len(remaining) - 1} other nodes remain"
            )
        remaining[0][0] = 0
        for t in range(1, d + 1):
            if remaining[t][0] == 0:
                raise ValueError(
                    f"non-graphical degree sequence at step {step}: "
                    f"node {u} needs {d} edges but only {t - 1} nodes with spare capacity remain"
                )
            remaining[t][0] -= 1
            edges.append((u, remaining[t][1]))
    return build_graph(n, edges)


def gen_bhl(n: int, n0: int, m: int, seed=None, theta: float = 0.9,
            max_degree_retries: int = 100) -> Graph:
    """Neighbor-of-neighbor growth on top of a random-degree core.

    Phase 1 draws ``n0`` degrees uniformly from {m, ..., n0-m}, bumps one
    entry if the sum is odd, and realizes the sequence deterministically
    (non-graphical draws are retried with fresh randomness, up to
    ``max_degree_retries`` times).  Phase 2 grows to ``n`` nodes; each new
    node places ``m`` edges: the first target is a uniform random existing
    node (the anchor), and each subsequent edge attaches, with probability
    ``theta``, to a uniform random neighbor of the anchor (10 attempts,
    then a fresh uniform draw).  Attaching to neighbors of a random node
    is implicitly degree-biased, so heavy-tailed degrees and high
    clustering emerge without an explicit preferential step, and the
    resulting ksi distribution stays single-moded.  Duplicate targets are
    always rejected, so the growth phase adds exactly ``(n - n0) * m``
    edges.
    """
    n, n0, m = int(n), int(n0), int(m)
    if not 1 <= m < n0:
        raise ValueError(f"need 1 <= m < n0, got m={m}, n0={n0}")
    if 2 * m > n0:
        raise ValueError(f"initial degrees are drawn from {{m..n0-m}}; need 2m <= n0, got m={m}, n0={n0}")
    if n < n0:
        raise ValueError(f"need n >= n0, got n={n}, n0={n0}")
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"triad-closure probability must lie in [0, 1], got {theta}")
    rng = np.random.default_rng(seed)

    base = None
    for _ in range(max_degree_retries):
        degs = rng.integers(m, n0 - m + 1, size=n0)
        if degs.sum() % 2:
            adjustable = np.flatnonzero(degs < n0 - m)
            if adjustable.size:
                degs[adjustable[0]] += 1
            else:
                degs[0] -= 1
        try:
            base = gen_havel_hakimi(degs.tolist())
            break
        except ValueError:
            continue
    if base is None:
        raise ValueError(
            f"failed to realize an initial degree sequence after {max_degree_retries} attempts"
        )
    if n == n0:
        return base

    nbr_list: list[list[int]] = [[] for _ in range(n)]
    for i in range(n0):
        nbr_list[i] = [int(j) for j in base.neighbors(i)]
    edges = [(int(u), int(v)) for u, v in base.edge_array()]

    for v in range(n0, n):
        chosen: set[int] = set()
        anchor: int | None = None
        for _ in range(m):
            target = None
            if anchor is not None and rng.random() < theta:
                pool = nbr_list[anchor]
                for _ in range(10):
                    cand = pool[int(rng.integers(0, len(pool)))]
                    if cand != v and cand not in chosen:
                        target = cand
                        break
            if target is None:
                while True:
                    t = int(rng.integers(0, v))
                    if t not in chosen:
                        target = t
                        break
            if anchor is None:
                anchor = target
            chosen.add(target)
            edges.append((v, target))
            nbr_list[target].append(v)
            nbr_list[v].append(target)
    return build_graph(n, edges)
