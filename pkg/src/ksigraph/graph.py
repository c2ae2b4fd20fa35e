"""Immutable undirected simple graphs with edge-list text I/O.

Nodes are dense integers ``0..n-1``.  Adjacency is stored in compressed
sparse row (CSR) arrays with every neighbor list sorted ascending, which
keeps membership tests cheap and makes a constructed graph safe to read
from any number of worker threads.  Construction normalizes its input:
self-loops are dropped and duplicate edges (in either orientation) are
merged, with the dropped counts reported on the module logger.

Edge-list text format: one ``u v`` pair per whitespace-separated line,
lines starting with ``#`` are comments, labels are arbitrary non-negative
integers and get compacted to dense ids in first-appearance order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "ParsedEdgeList",
    "EdgeListParseError",
    "CapacityError",
    "build_graph",
    "parse_edge_list",
    "serialize_edge_list",
    "connected_components",
]

logger = logging.getLogger(__name__)


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CapacityError(ValueError):
    """The requested computation exceeds a configured size cap."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    ``indptr``/``indices`` form a CSR adjacency structure; the neighbor
    list of node ``i`` is ``indices[indptr[i]:indptr[i+1]]``, sorted
    ascending.  All arrays are read-only after construction.
    """

    n: int
    m: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray

    def check_node(self, i) -> int:
        i = int(i)
        if not 0 <= i < self.n:
            raise IndexError(f"node {i} out of range for graph with n={self.n}")
        return i

    def neighbors(self, i) -> np.ndarray:
        """Sorted array of the neighbors of node ``i``."""
        i = self.check_node(i)
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def edge_array(self) -> np.ndarray:
        """Canonical ``(m, 2)`` edge array with ``u < v``, lexicographically sorted."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )


@dataclass(frozen=True)
class ParsedEdgeList:
    """Result of :func:`parse_edge_list`.

    ``labels[i]`` is the original integer label of compacted node ``i``.
    """

    graph: Graph
    labels: np.ndarray
    dropped_self_loops: int
    dropped_duplicates: int


def _normalize_edges(n: int, edges) -> tuple[np.ndarray, int, int]:
    """Canonical (u < v, unique, loop-free) edge array plus dropped counts."""
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False)
    else:
        arr = np.array(list(edges), dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64), 0, 0
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be an iterable of (u, v) pairs")
    bad = (arr < 0) | (arr >= n)
    if bad.any():
        r = int(np.flatnonzero(bad.any(axis=1))[0])
        raise ValueError(
            f"endpoint out of range in edge ({arr[r, 0]}, {arr[r, 1]}) for n={n}"
        )
    loops = arr[:, 0] == arr[:, 1]
    n_loops = int(loops.sum())
    arr = arr[~loops]
    if arr.shape[0] == 0:
        return np.zeros((0, 2), dtype=np.int64), n_loops, 0
    canon = np.column_stack([np.minimum(arr[:, 0], arr[:, 1]), np.maximum(arr[:, 0], arr[:, 1])])
    canon = np.unique(canon, axis=0)
    n_dupes = arr.shape[0] - canon.shape[0]
    return canon, n_loops, n_dupes


def _graph_from_canonical(n: int, canon: np.ndarray) -> Graph:
    both = np.concatenate([canon, canon[:, ::-1]]) if canon.size else canon.reshape(0, 2)
    degrees = np.bincount(both[:, 0], minlength=n).astype(np.int64) if n else np.zeros(0, np.int64)
    order = np.lexsort((both[:, 1], both[:, 0])) if both.size else np.zeros(0, np.intp)
    indices = both[order, 1] if both.size else np.zeros(0, np.int64)
    indptr = np.concatenate([[0], np.cumsum(degrees)]).astype(np.int64)
    for a in (indptr, indices, degrees):
        a.setflags(write=False)
    return Graph(n=n, m=int(canon.shape[0]), indptr=indptr, indices=indices, degrees=degrees)


def build_graph(n: int, edges) -> Graph:
    """Build a simple graph on ``n`` nodes from an iterable of (u, v) pairs.

    Endpoints must lie in ``[0, n)``.  Self-loops and duplicates (in
    either orientation) are silently normalized away; the dropped counts
    go to the module logger.  The result does not depend on the input
    edge order.
    """
    n = int(n)
    if n < 0:
        raise ValueError("node count must be non-negative")
    canon, n_loops, n_dupes = _normalize_edges(n, edges)
    if n_loops or n_dupes:
        logger.warning(
            "normalized edge input: dropped %d self-loop(s), merged %d duplicate(s)",
            n_loops,
            n_dupes,
        )
    return _graph_from_canonical(n, canon)


def parse_edge_list(text) -> ParsedEdgeList:
    """Parse edge-list text into a graph with compacted node ids.

    ``text`` may be a string or a file-like object.  Lines starting with
    ``#`` (and blank lines) are skipped; every other line must hold
    exactly two non-negative integer labels.  Labels are compacted to
    ``0..n-1`` in order of first appearance.
    """
    if hasattr(text, "read"):
        text = text.read()
    label_to_id: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, f"expected two node labels, got {len(tokens)}")
        pair = []
        for tok in tokens:
            try:
                label = int(tok)
            except ValueError:
                raise EdgeListParseError(lineno, f"non-integer node label {tok!r}") from None
            if label < 0:
                raise EdgeListParseError(lineno, f"negative node label {label}")
            if label not in label_to_id:
                label_to_id[label] = len(label_to_id)
            pair.append(label_to_id[label])
        edges.append((pair[0], pair[1]))
    n = len(label_to_id)
    canon, n_loops, n_dupes = _normalize_edges(n, edges)
    if n_loops or n_dupes:
        logger.warning(
            "edge list normalized: dropped %d self-loop(s), merged %d duplicate(s)",
            n_loops,
            n_dupes,
        )
    labels = np.fromiter(label_to_id.keys(), dtype=np.int64, count=n)
    labels.setflags(write=False)
    return ParsedEdgeList(_graph_from_canonical(n, canon), labels, n_loops, n_dupes)


def serialize_edge_list(g: Graph, comments=()) -> str:
    """Render a graph as edge-list text (``u v`` per line, u < v, sorted).

    Optional ``comments`` are emitted first, then a ``# nodes=<n> edges=<m>``
    header, then the edges.  ``parse_edge_list`` round-trips the result.
    """
    lines = [f"# {c}" for c in comments]
    lines.append(f"# nodes={g.n} edges={g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edge_array())
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                w = int(w)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components
