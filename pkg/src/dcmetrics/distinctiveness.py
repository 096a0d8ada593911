"""The five distinctiveness centrality metrics, their bounds, and normalization.

All five metrics reward ties to sparsely connected neighbors and penalize
ties to hubs; the exponent ``alpha`` (>= 1) sharpens the penalty. Base-10
logarithms are used throughout, which is what makes the published reference
values reproduce exactly.

Directed graphs get in/out variants: the in-score of a node values arcs
received from senders with low out-degree, the out-score values arcs sent
to receivers with low in-degree.

Every kernel is a pure function of (graph, alpha, direction) and runs in
O(edges) after a single O(edges) precomputation pass; per-node sums are
accumulated in adjacency storage order, so results are bit-reproducible
for a given graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .graph import Graph, segment_sum

METRICS = ("d1", "d2", "d3", "d4", "d5")
DIRECTIONS = ("undirected", "in", "out")

__all__ = [
    "METRICS",
    "MetricSpec",
    "CentralityVector",
    "BoundsRecord",
    "d1",
    "d2",
    "d3",
    "d4",
    "d5",
    "distinctiveness",
    "all_distinctiveness",
    "bounds",
    "normalize",
    "negative_contribution_threshold",
]


@dataclass(frozen=True)
class MetricSpec:
    """Identifies one scored quantity: which metric, at which alpha, which direction."""

    metric: str
    alpha: float = 1.0
    direction: str = "undirected"
    relaxed_alpha: bool = False

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}, expected one of {METRICS}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}, expected one of {DIRECTIONS}")
        a = float(self.alpha)
        if not math.isfinite(a):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        if self.relaxed_alpha:
            if a <= 0:
                raise ValueError(f"alpha must be > 0 in relaxed mode, got {a}")
        elif a < 1:
            raise ValueError(f"alpha must be >= 1 (pass relaxed_alpha=True to explore 0 < alpha < 1), got {a}")


@dataclass(frozen=True, eq=False)
class CentralityVector:
    """Per-node scores for one metric, plus which nodes were scored 0 as isolates."""

    metric: str
    alpha: float | None
    direction: str
    labels: tuple[str, ...]
    values: np.ndarray
    isolates: frozenset[str] = frozenset()
    normalized: bool = False

    def __post_init__(self):
        if len(self.labels) != self.values.size:
            raise ValueError("one score per node required")
        if not np.all(np.isfinite(self.values)):
            raise ValueError(f"non-finite score in {self.metric} vector")

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])

    def as_dict(self) -> dict[str, float]:
        return {lab: float(v) for lab, v in zip(self.labels, self.values)}

    def items(self):
        return self.as_dict().items()


@dataclass(frozen=True)
class BoundsRecord:
    """Analytic (lower, upper) envelope for one metric at given n, weight range, alpha."""

    metric: str
    alpha: float
    n: int
    min_weight: float
    max_weight: float
    lower: float
    upper: float

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(
                f"degenerate bounds for {self.metric}: lower {self.lower} > upper {self.upper}"
            )


def _resolve_direction(graph: Graph, direction: str | None) -> str:
    if direction is None:
        if graph.directed:
            raise ValueError("directed graph: specify direction='in' or direction='out'")
        return "undirected"
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}, expected one of {DIRECTIONS}")
    if graph.directed and direction == "undirected":
        raise ValueError("direction='undirected' is only valid for undirected graphs")
    if not graph.directed and direction != "undirected":
        raise ValueError(f"direction={direction!r} is only valid for directed graphs")
    return direction


def _adjacency_view(graph: Graph, direction: str):
    """CSR view for the requested direction plus the neighbor-side degree and
    alpha-strength source arrays.

    For 'in', row i lists senders j of arcs j->i; the penalising quantities
    are the sender's out-degree and out-strength. For 'out', row i lists
    receivers j; the quantities are the receiver's in-degree/in-strength.
    """
    if direction == "undirected":
        return graph.indptr, graph.indices, graph.weights, graph.out_degrees(), graph.indptr, graph.weights
    if direction == "in":
        assert graph.in_indptr is not None
        return (
            graph.in_indptr,
            graph.in_indices,
            graph.in_weights,
            graph.out_degrees(),
            graph.indptr,
            graph.weights,
        )
    assert graph.in_indptr is not None
    return (
        graph.indptr,
        graph.indices,
        graph.weights,
        graph.in_degrees(),
        graph.in_indptr,
        graph.in_weights,
    )


def all_distinctiveness(
    graph: Graph,
    alpha: float = 1.0,
    direction: str | None = None,
    relaxed_alpha: bool = False,
    metrics: tuple[str, ...] = METRICS,
) -> dict[str, CentralityVector]:
    """Compute several distinctiveness metrics in one pass over the edges.

    The per-(graph, alpha) quantities (neighbor degrees, alpha-strengths,
    total weight) are computed once and shared by all requested kernels.
    """
    direction = _resolve_direction(graph, direction)
    for m in metrics:
        MetricSpec(m, alpha, direction, relaxed_alpha)
    alpha = float(alpha)

    indptr, indices, weights, nbr_degree, s_indptr, s_weights = _adjacency_view(graph, direction)
    n = graph.n
    if n < 2:
        raise ValueError("distinctiveness needs at least 2 nodes")
    isolates = graph.isolates()

    deg_f = nbr_degree.astype(np.float64)
    out: dict[str, CentralityVector] = {}

    def vector(metric: str, values: np.ndarray) -> CentralityVector:
        return CentralityVector(
            metric=metric,
            alpha=alpha,
            direction=direction,
            labels=graph.nodes,
            values=values,
            isolates=isolates,
        )

    # neighbor arrays are indexed per edge entry before any log/pow so that
    # isolates (degree 0, never referenced) cannot inject inf/nan
    if "d1" in metrics or "d2" in metrics:
        # penalty log10((n-1)/g^alpha), kept as a single log of the ratio:
        # neighbors of full degree give exactly 0 at alpha=1, and exact
        # score ties (equal degree products) stay bitwise ties
        per_edge = np.log10((n - 1) / np.power(deg_f[indices], alpha))
        if "d1" in metrics:
            out["d1"] = vector("d1", segment_sum(weights * per_edge, indptr))
        if "d2" in metrics:
            out["d2"] = vector("d2", segment_sum(per_edge, indptr))

    if "d3" in metrics or "d4" in metrics:
        wpow = np.power(weights, alpha)
        s_alpha = segment_sum(np.power(s_weights, alpha), s_indptr)
        if "d3" in metrics:
            # total weight: undirected edges are counted once, arcs all summed
            total = graph.total_weight()
            denom = s_alpha[indices] - wpow + 1.0
            out["d3"] = vector("d3", segment_sum(weights * np.log10(total / denom), indptr))
        if "d4" in metrics:
            out["d4"] = vector("d4", segment_sum(np.power(weights, alpha + 1.0) / s_alpha[indices], indptr))

    if "d5" in metrics:
        out["d5"] = vector("d5", segment_sum(1.0 / np.power(deg_f[indices], alpha), indptr))

    return {m: out[m] for m in metrics}


def _single(metric: str, graph: Graph, alpha, direction, relaxed_alpha) -> CentralityVector:
    return all_distinctiveness(graph, alpha, direction, relaxed_alpha, metrics=(metric,))[metric]


def d1(graph: Graph, alpha: float = 1.0, direction: str | None = None, relaxed_alpha: bool = False) -> CentralityVector:
    """Weighted distinctiveness: arc weights scaled by log10((n-1)/g_j^alpha)."""
    return _single("d1", graph, alpha, direction, relaxed_alpha)


def d2(graph: Graph, alpha: float = 1.0, direction: str | None = None, relaxed_alpha: bool = False) -> CentralityVector:
    """Unweighted distinctiveness: d1 with every arc weight treated as 1."""
    return _single("d2", graph, alpha, direction, relaxed_alpha)


def d3(graph: Graph, alpha: float = 1.0, direction: str | None = None, relaxed_alpha: bool = False) -> CentralityVector:
    """Global-weight distinctiveness: penalty based on the neighbor's remaining
    alpha-strength relative to the total weight in the graph."""
    return _single("d3", graph, alpha, direction, relaxed_alpha)


def d4(graph: Graph, alpha: float = 1.0, direction: str | None = None, relaxed_alpha: bool = False) -> CentralityVector:
    """Weighted proportional distinctiveness: w^(alpha+1) over the neighbor's
    alpha-strength; strictly positive for non-isolated nodes."""
    return _single("d4", graph, alpha, direction, relaxed_alpha)


def d5(graph: Graph, alpha: float = 1.0, direction: str | None = None, relaxed_alpha: bool = False) -> CentralityVector:
    """Proportional distinctiveness: sum of reciprocal neighbor degrees^alpha."""
    return _single("d5", graph, alpha, direction, relaxed_alpha)


def distinctiveness(
    graph: Graph,
    metric: str,
    alpha: float = 1.0,
    direction: str | None = None,
    relaxed_alpha: bool = False,
) -> CentralityVector:
    """Dispatch a single metric by its identifier 'd1'..'d5'."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")
    return _single(metric, graph, alpha, direction, relaxed_alpha)


def bounds(
    metric: str,
    n: int,
    min_weight: float = 1.0,
    max_weight: float = 1.0,
    alpha: float = 1.0,
    relaxed_alpha: bool = False,
) -> BoundsRecord:
    """Analytic lower/upper bounds for a metric on a connected graph with
    ``n`` nodes and weights in [min_weight, max_weight].

    The d1/d2/d4/d5 bounds are tight (a uniform-weight star hub attains the
    upper ones); the d3 pair is a loose envelope and is never attained.
    """
    MetricSpec(metric, alpha, "undirected", relaxed_alpha)
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    m = float(min_weight)
    M = float(max_weight)
    if not (math.isfinite(m) and math.isfinite(M)) or m <= 0 or m > M:
        raise ValueError(f"need 0 < min_weight <= max_weight, got {min_weight!r}, {max_weight!r}")
    alpha = float(alpha)
    log_n1 = math.log10(n - 1)

    if metric == "d1":
        upper = M * (n - 1) * log_n1
        lower = (1.0 - alpha) * M * (n - 1) * log_n1
    elif metric == "d2":
        upper = (n - 1) * log_n1
        lower = (1.0 - alpha) * (n - 1) * log_n1
    elif metric == "d3":
        log_ratio = math.log10(((n - 2) * M + m) / ((n - 2) * M**alpha + 1.0))
        if (n - 2) * (M**alpha - M) < m - 1.0:
            lower = m * log_ratio
        else:
            lower = (n - 1) * M * log_ratio
        upper = (n - 1) * M * math.log10(n * (n - 1) * M / 2.0)
    elif metric == "d4":
        upper = (n - 1) * M
        lower = m / (1.0 + (n - 2) * (M / m) ** alpha)
    else:  # d5
        upper = float(n - 1)
        lower = 1.0 / (n - 1) ** alpha

    return BoundsRecord(
        metric=metric, alpha=alpha, n=int(n), min_weight=m, max_weight=M, lower=lower, upper=upper
    )


def normalize(vector: CentralityVector, record: BoundsRecord) -> CentralityVector:
    """Map scores through (score - lower) / (upper - lower)."""
    if vector.normalized:
        raise ValueError("vector is already normalized")
    if vector.metric != record.metric:
        raise ValueError(f"bounds are for {record.metric!r}, vector is {vector.metric!r}")
    if vector.alpha is None or float(vector.alpha) != record.alpha:
        raise ValueError(f"bounds alpha {record.alpha} does not match vector alpha {vector.alpha}")
    span = record.upper - record.lower
    if span <= 0:
        raise ValueError(f"degenerate bounds (upper == lower == {record.upper:g}), cannot normalize")
    return replace(vector, values=(vector.values - record.lower) / span, normalized=True)


def negative_contribution_threshold(n: int, alpha: float = 1.0) -> float:
    """Neighbor degree above which a connection contributes negatively to d1/d2.

    Returns (n-1)^(1/alpha); at alpha=1 this is n-1, which no degree can
    exceed, so every contribution is non-negative.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha!r}")
    return float((n - 1) ** (1.0 / alpha))
