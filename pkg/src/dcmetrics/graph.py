"""Immutable weighted graphs and degree/strength profiling.

A graph is a set of labelled nodes plus positive-weight edges (or arcs).
Internally the adjacency is stored in CSR form (index pointers, neighbor
indices, weights) so that metric kernels can run vectorised over numpy
arrays; node labels are the only identity exposed to callers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphBuildError

Edge = tuple[str, str, float]


@dataclass(frozen=True)
class BuildReport:
    """What construction had to clean up: merged parallels and dropped self-loops."""

    merged_edges: int = 0
    self_loops_dropped: int = 0


@dataclass(frozen=True, eq=False)
class Graph:
    """Weighted graph, directed or undirected, immutable after construction.

    ``indptr``/``indices``/``weights`` hold the out-adjacency in CSR form;
    for undirected graphs every edge appears in both endpoint rows. Directed
    graphs additionally materialise the in-adjacency (``in_indptr`` ...),
    where row i lists the senders j of arcs j -> i with weight w_ji.
    """

    nodes: tuple[str, ...]
    directed: bool
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    in_indptr: np.ndarray | None = None
    in_indices: np.ndarray | None = None
    in_weights: np.ndarray | None = None
    build_report: BuildReport = field(default_factory=BuildReport)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        """Logical edges: undirected edges are counted once, arcs individually."""
        nnz = int(self.indices.size)
        return nnz if self.directed else nnz // 2

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node label: {label!r}") from None

    @property
    def _index(self) -> dict[str, int]:
        # lazily built once; object.__setattr__ because the dataclass is frozen
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {label: i for i, label in enumerate(self.nodes)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def neighbors(self, label: str) -> Iterator[tuple[str, float]]:
        """Out-neighbors of a node as (label, weight) pairs, in storage order."""
        i = self.index_of(label)
        lo, hi = self.indptr[i], self.indptr[i + 1]
        for k in range(lo, hi):
            yield self.nodes[self.indices[k]], float(self.weights[k])

    def weight(self, source: str, target: str) -> float:
        """Weight of the edge/arc source->target, 0.0 when absent."""
        i = self.index_of(source)
        j = self.index_of(target)
        lo, hi = self.indptr[i], self.indptr[i + 1]
        for k in range(lo, hi):
            if self.indices[k] == j:
                return float(self.weights[k])
        return 0.0

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def in_degrees(self) -> np.ndarray:
        if not self.directed:
            return np.diff(self.indptr)
        assert self.in_indptr is not None
        return np.diff(self.in_indptr)

    def isolate_mask(self) -> np.ndarray:
        """True for nodes with no incident edge at all (no in- and no out-arcs)."""
        mask = self.out_degrees() == 0
        if self.directed:
            mask &= self.in_degrees() == 0
        return mask

    def isolates(self) -> frozenset[str]:
        return frozenset(np.asarray(self.nodes, dtype=object)[self.isolate_mask()])

    def edges(self) -> Iterator[Edge]:
        """Logical edge list: every arc for directed graphs, each undirected
        edge once (in the orientation it is first stored)."""
        seen = set()
        for i in range(self.n):
            for k in range(self.indptr[i], self.indptr[i + 1]):
                j = int(self.indices[k])
                if not self.directed:
                    if (j, i) in seen:
                        continue
                    seen.add((i, j))
                yield self.nodes[i], self.nodes[j], float(self.weights[k])

    def total_weight(self) -> float:
        """Sum of arc weights; undirected edges are counted once."""
        s = float(self.weights.sum())
        return s if self.directed else s / 2.0


@dataclass(frozen=True, eq=False)
class DegreeProfile:
    """Per-node degrees and strengths plus the global quantities every
    metric needs: node count, extremal weights, total weight."""

    labels: tuple[str, ...]
    directed: bool
    degree: np.ndarray | None
    strength: np.ndarray | None
    out_degree: np.ndarray | None
    in_degree: np.ndarray | None
    out_strength: np.ndarray | None
    in_strength: np.ndarray | None
    n: int
    edge_count: int
    min_weight: float
    max_weight: float
    total_weight: float

    def degree_map(self) -> dict[str, int]:
        deg = self.degree if not self.directed else self.out_degree + self.in_degree
        return {lab: int(d) for lab, d in zip(self.labels, deg)}

    def strength_map(self) -> dict[str, float]:
        s = self.strength if not self.directed else self.out_strength + self.in_strength
        return {lab: float(v) for lab, v in zip(self.labels, s)}


def build_graph(
    edges: Iterable[Edge],
    directed: bool = False,
    nodes: Sequence[str] = (),
) -> Graph:
    """Build a graph from (source, target, weight) triples.

    Parallel edges are merged by summing their weights; self-loops are
    dropped (both counted in the build report). Node order is first
    appearance: pre-declared ``nodes`` first, then edge endpoints. A
    pre-declared node that no edge touches stays in the graph as an
    explicit isolate; isolates cannot arise any other way.

    Raises GraphBuildError on an empty edge list, an empty label, or a
    weight that is not a strictly positive finite number.
    """
    labels: list[str] = []
    index: dict[str, int] = {}

    def node_id(label: str) -> int:
        if not isinstance(label, str) or not label:
            raise GraphBuildError(f"node labels must be non-empty strings, got {label!r}")
        i = index.get(label)
        if i is None:
            i = len(labels)
            index[label] = i
            labels.append(label)
        return i

    # per-node ordered neighbor -> accumulated weight
    out_adj: list[dict[int, float]] = []
    in_adj: list[dict[int, float]] = []

    def ensure(i: int) -> None:
        while len(out_adj) <= i:
            out_adj.append({})
            in_adj.append({})

    for label in nodes:
        node_id(label)

    merged = 0
    self_loops = 0
    empty = True
    for edge in edges:
        empty = False
        try:
            src, dst, w = edge
        except (TypeError, ValueError):
            raise GraphBuildError(f"edges must be (source, target, weight) triples, got {edge!r}")
        w = float(w)
        if not np.isfinite(w) or w <= 0.0:
            raise GraphBuildError(f"edge {src!r} -> {dst!r} has non-positive weight {w!r}")
        i = node_id(src)
        j = node_id(dst)
        ensure(max(i, j))
        if i == j:
            self_loops += 1
            continue
        if directed:
            if j in out_adj[i]:
                merged += 1
                out_adj[i][j] += w
                in_adj[j][i] += w
            else:
                out_adj[i][j] = w
                in_adj[j][i] = w
        else:
            if j in out_adj[i]:
                merged += 1
                out_adj[i][j] += w
                out_adj[j][i] += w
            else:
                out_adj[i][j] = w
                out_adj[j][i] = w
    if empty:
        raise GraphBuildError("empty edge list: a graph needs at least one edge")
    ensure(len(labels) - 1)

    def to_csr(adj: list[dict[int, float]]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        counts = [len(row) for row in adj]
        indptr = np.zeros(len(adj) + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int64)
        weights = np.empty(indptr[-1], dtype=np.float64)
        pos = 0
        for row in adj:
            for j, w in row.items():
                indices[pos] = j
                weights[pos] = w
                pos += 1
        indices.setflags(write=False)
        weights.setflags(write=False)
        indptr.setflags(write=False)
        return indptr, indices, weights

    indptr, indices, weights = to_csr(out_adj)
    report = BuildReport(merged_edges=merged, self_loops_dropped=self_loops)
    if directed:
        in_indptr, in_indices, in_weights = to_csr(in_adj)
        return Graph(
            nodes=tuple(labels),
            directed=True,
            indptr=indptr,
            indices=indices,
            weights=weights,
            in_indptr=in_indptr,
            in_indices=in_indices,
            in_weights=in_weights,
            build_report=report,
        )
    return Graph(
        nodes=tuple(labels),
        directed=False,
        indptr=indptr,
        indices=indices,
        weights=weights,
        build_report=report,
    )


def segment_sum(values: np.ndarray, indptr: np.ndarray) -> np.ndarray:
    """Per-row sums of a CSR value array. Rows are contiguous, so the
    accumulation order within each row is the storage order (deterministic)."""
    n = indptr.size - 1
    if values.size == 0:
        return np.zeros(n)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    return np.bincount(rows, weights=values, minlength=n)


def profile(graph: Graph) -> DegreeProfile:
    """Compute the degree/strength profile of a graph in one pass."""
    if graph.directed:
        out_deg = graph.out_degrees()
        in_deg = graph.in_degrees()
        out_str = segment_sum(graph.weights, graph.indptr)
        assert graph.in_indptr is not None and graph.in_weights is not None
        in_str = segment_sum(graph.in_weights, graph.in_indptr)
        return DegreeProfile(
            labels=graph.nodes,
            directed=True,
            degree=None,
            strength=None,
            out_degree=out_deg,
            in_degree=in_deg,
            out_strength=out_str,
            in_strength=in_str,
            n=graph.n,
            edge_count=graph.edge_count,
            min_weight=float(graph.weights.min()),
            max_weight=float(graph.weights.max()),
            total_weight=graph.total_weight(),
        )
    deg = graph.out_degrees()
    strength = segment_sum(graph.weights, graph.indptr)
    return DegreeProfile(
        labels=graph.nodes,
        directed=False,
        degree=deg,
        strength=strength,
        out_degree=None,
        in_degree=None,
        out_strength=None,
        in_strength=None,
        n=graph.n,
        edge_count=graph.edge_count,
        min_weight=float(graph.weights.min()),
        max_weight=float(graph.weights.max()),
        total_weight=graph.total_weight(),
    )


@dataclass(frozen=True)
class ValidationReport:
    """Advisory flags; none of these are errors.

    ``sub_unit_weight_edges`` lists edges with weight < 1 (the analytic
    bounds assume weights >= 1), ``connected`` reports whether the graph is
    (weakly) connected, ``isolated_nodes`` lists explicitly added isolates,
    and ``weight_homogeneous`` is set when min == max weight, i.e. the graph
    is effectively unweighted.
    """

    sub_unit_weight_edges: tuple[Edge, ...]
    connected: bool
    isolated_nodes: tuple[str, ...]
    weight_homogeneous: bool

    @property
    def flags(self) -> tuple[str, ...]:
        notes = []
        if self.sub_unit_weight_edges:
            notes.append(
                "weights below 1: " + ", ".join(f"{u}-{v}={w:g}" for u, v, w in self.sub_unit_weight_edges)
            )
        if not self.connected:
            notes.append("graph is not connected")
        if self.isolated_nodes:
            notes.append("isolated nodes: " + ", ".join(self.isolated_nodes))
        if self.weight_homogeneous:
            notes.append("all weights equal: graph is effectively unweighted")
        return tuple(notes)

    @property
    def ok(self) -> bool:
        return not self.flags


def is_connected(graph: Graph) -> bool:
    """Weak connectivity: directed arcs are walked in both directions."""
    n = graph.n
    if n <= 1:
        return True
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        i = stack.pop()
        for k in range(graph.indptr[i], graph.indptr[i + 1]):
            j = int(graph.indices[k])
            if not seen[j]:
                seen[j] = True
                stack.append(j)
        if graph.directed:
            assert graph.in_indptr is not None and graph.in_indices is not None
            for k in range(graph.in_indptr[i], graph.in_indptr[i + 1]):
                j = int(graph.in_indices[k])
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
    return bool(seen.all())


def validate(graph: Graph) -> ValidationReport:
    """Advisory validation: sub-unit weights, connectivity, weight homogeneity."""
    sub_unit = tuple(e for e in graph.edges() if e[2] < 1.0)
    return ValidationReport(
        sub_unit_weight_edges=sub_unit,
        connected=is_connected(graph),
        isolated_nodes=tuple(sorted(graph.isolates())),
        weight_homogeneous=float(graph.weights.min()) == float(graph.weights.max()),
    )
