"""File formats: tab-separated edge lists, a minimal GEXF subset, and
CSV/JSON result tables.

Edge-list format (UTF-8, LF, '.' decimal point regardless of locale):

    # comment
    undirected            <- optional directive on the first data line
    A<TAB>B<TAB>2.5       <- edge; weight optional, defaults to 1
    Z                     <- single field: declares an isolated node
"""

from __future__ import annotations

import json
import warnings
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .distinctiveness import CentralityVector
from .errors import ParseError
from .graph import Graph, build_graph

__all__ = [
    "parse_edge_list",
    "write_edge_list",
    "parse_gexf_minimal",
    "GexfFeatureWarning",
    "ResultTable",
]


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format above into a Graph."""
    directed = False
    first_data_line = True
    edges: list[tuple[str, str, float]] = []
    declared: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if first_data_line:
            first_data_line = False
            if len(fields) == 1:
                if line.strip() in ("directed", "undirected"):
                    directed = line.strip() == "directed"
                    continue
                raise ParseError(
                    f"unknown directive {line.strip()!r}: the first line must be "
                    f"'directed', 'undirected', or an edge",
                    lineno,
                )
        if len(fields) == 1:
            # single field after the first line: an isolated-node declaration
            label = fields[0].strip()
            if not label:
                raise ParseError("empty node label", lineno)
            declared.append(label)
            continue
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 1-3 tab-separated fields, got {len(fields)}", lineno)
        src, dst = fields[0].strip(), fields[1].strip()
        if not src or not dst:
            raise ParseError("empty node label", lineno)
        if len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise ParseError(f"bad weight {fields[2]!r}", lineno) from None
            if not w > 0:
                raise ParseError(f"weight must be positive, got {fields[2]}", lineno)
        else:
            w = 1.0
        edges.append((src, dst, w))
    if not edges and not declared:
        raise ParseError("document contains no edges")
    return build_graph(edges, directed=directed, nodes=declared)


def write_edge_list(graph: Graph) -> str:
    """Serialize a Graph to the edge-list format.

    Emits the directedness directive, then the edges; when the edge order
    alone would not reproduce the graph's node order on re-parse (isolates,
    or nodes first touched out of sequence), every node is declared up
    front so that parse(write(g)) rebuilds an identical graph.
    """
    edges = list(graph.edges())
    appearance: list[str] = []
    seen: set[str] = set()
    for u, v, _ in edges:
        for lab in (u, v):
            if lab not in seen:
                seen.add(lab)
                appearance.append(lab)
    lines = ["directed" if graph.directed else "undirected"]
    if tuple(appearance) != graph.nodes:
        lines.extend(graph.nodes)
    for u, v, w in edges:
        lines.append(f"{u}\t{v}\t{w!r}")
    return "\n".join(lines) + "\n"


class GexfFeatureWarning(UserWarning):
    """A GEXF feature outside the supported subset was ignored."""


def _localname(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def parse_gexf_minimal(text: str) -> Graph:
    """Parse a minimal GEXF 1.x document: nodes, edges, edge weights, and
    defaultedgetype. Dynamics, hierarchy, attributes, and visual styling are
    ignored with a GexfFeatureWarning each. Node identity is the node id.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise ParseError(f"not well-formed XML: {exc}") from None
    graph_el = None
    for el in root.iter():
        if _localname(el.tag) == "graph":
            graph_el = el
            break
    if graph_el is None:
        raise ParseError("no <graph> element found")

    mode = graph_el.get("defaultedgetype", "undirected")
    if mode not in ("directed", "undirected"):
        warnings.warn(GexfFeatureWarning(f"defaultedgetype={mode!r} not supported, treating as undirected"))
        mode = "undirected"
    directed = mode == "directed"
    if graph_el.get("mode") == "dynamic" or graph_el.get("timeformat"):
        warnings.warn(GexfFeatureWarning("dynamic graph attributes ignored"))

    node_ids: list[str] = []
    known: set[str] = set()
    edges: list[tuple[str, str, float]] = []
    ignored: set[str] = set()

    for el in graph_el.iter():
        name = _localname(el.tag)
        if name == "node":
            nid = el.get("id")
            if nid is None:
                raise ParseError("<node> without id attribute")
            if nid not in known:
                known.add(nid)
                node_ids.append(nid)
            for child in el:
                cname = _localname(child.tag)
                if cname == "nodes":
                    ignored.add("nested node hierarchies")
                elif cname == "attvalues":
                    ignored.add("node attvalues")
                elif cname not in ("node",):
                    ignored.add(f"node child <{cname}>")
        elif name == "edge":
            src, dst = el.get("source"), el.get("target")
            if src is None or dst is None:
                raise ParseError("<edge> without source/target")
            if el.get("start") or el.get("end"):
                ignored.add("dynamic edge spells")
            if el.get("type") not in (None, mode):
                ignored.add("per-edge type overrides")
            w = el.get("weight")
            try:
                weight = float(w) if w is not None else 1.0
            except ValueError:
                raise ParseError(f"bad edge weight {w!r}") from None
            edges.append((src, dst, weight))
        elif name in ("attributes", "attvalues"):
            ignored.add("attribute definitions")

    for src, dst, _ in edges:
        for ref in (src, dst):
            if ref not in known:
                raise ParseError(f"edge references missing node {ref!r}")
    for feature in sorted(ignored):
        warnings.warn(GexfFeatureWarning(f"{feature} ignored"))
    return build_graph(edges, directed=directed, nodes=node_ids)


def _column_name(vector: CentralityVector) -> str:
    name = vector.metric
    if vector.direction in ("in", "out"):
        name += f"-{vector.direction}"
    if vector.alpha is not None:
        name += f"@{vector.alpha:g}"
    if vector.normalized:
        name += ":norm"
    return name


@dataclass(frozen=True)
class ResultTable:
    """Scores laid out nodes-by-metrics; column order is insertion order,
    node order is graph order."""

    labels: tuple[str, ...]
    columns: tuple[tuple[str, tuple[float, ...]], ...]

    @classmethod
    def from_vectors(cls, vectors: list[CentralityVector]) -> "ResultTable":
        if not vectors:
            raise ValueError("need at least one vector")
        labels = vectors[0].labels
        for v in vectors[1:]:
            if v.labels != labels:
                raise ValueError("all vectors in a table must share the node set and order")
        return cls(
            labels=labels,
            columns=tuple((_column_name(v), tuple(float(x) for x in v.values)) for v in vectors),
        )

    def to_csv(self) -> str:
        """CSV with 6-significant-digit cells, ',' separators, LF endings."""
        header = "node," + ",".join(name for name, _ in self.columns)
        lines = [header]
        for i, lab in enumerate(self.labels):
            cells = ",".join(f"{vals[i]:.6g}" for _, vals in self.columns)
            lines.append(f"{lab},{cells}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        """JSON with full double precision."""
        payload = {
            "nodes": list(self.labels),
            "columns": [{"name": name, "values": list(vals)} for name, vals in self.columns],
        }
        return json.dumps(payload, indent=2) + "\n"
