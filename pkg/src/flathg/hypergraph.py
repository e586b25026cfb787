"""Finite 3-hypergraphs: validation, girth, pair classes, cores, named families.

Vertices are opaque strings. An admissible hypergraph is finite and linear,
has no loops or isolated vertices, and keeps every 2-vertex edge disjoint
from all other edges. All values are immutable and all operations are pure,
so everything here is safe to share across threads.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
from dataclasses import dataclass

logger = logging.getLogger(__name__)

Edge = frozenset[str]
Pair = frozenset[str]

INFINITE: float = math.inf

FAMILY_KINDS = ("n_cycle", "beam", "fan", "nested", "s7_marker")

_DOT_FILL = {0: "lightcoral", 1: "lightskyblue", 2: "palegreen"}


class HypergraphParseError(ValueError):
    """Structurally malformed input, as opposed to an inadmissible hypergraph."""


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph with ordered vertex labels and 2- or 3-vertex edges."""

    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def edge_list(self) -> list[tuple[str, ...]]:
        """Edges as sorted tuples, in a single deterministic order."""
        return sorted(tuple(sorted(e)) for e in self.edges)

    def vertex_degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def incident_edges(self, v: str) -> list[Edge]:
        return [e for e in self.edges if v in e]


@dataclass(frozen=True)
class ValidationReport:
    """Admissibility verdict plus one entry per violated rule."""

    valid: bool
    violations: tuple[tuple[str, tuple], ...]


def build_hypergraph(vertices, edges) -> Hypergraph:
    """Assemble a Hypergraph from raw vertex and edge collections.

    Raises HypergraphParseError for structural defects (non-string labels,
    duplicate vertex ids, an edge naming an unknown vertex or repeating one).
    Admissibility is not checked here; use validate for that.
    """
    vertex_list = list(vertices)
    for v in vertex_list:
        if not isinstance(v, str):
            raise HypergraphParseError(f"vertex id must be a string, got {v!r}")
    seen = set()
    for v in vertex_list:
        if v in seen:
            raise HypergraphParseError(f"duplicate vertex id {v!r}")
        seen.add(v)
    edge_set = set()
    for raw in edges:
        members = list(raw)
        for v in members:
            if not isinstance(v, str):
                raise HypergraphParseError(f"edge member must be a string, got {v!r}")
            if v not in seen:
                raise HypergraphParseError(f"edge {members!r} names unknown vertex {v!r}")
        if len(set(members)) != len(members):
            raise HypergraphParseError(f"edge {members!r} repeats a vertex")
        edge_set.add(frozenset(members))
    return Hypergraph(tuple(vertex_list), frozenset(edge_set))


def validate(h: Hypergraph) -> ValidationReport:
    """Check every admissibility rule and report all violations at once."""
    violations: list[tuple[str, tuple]] = []
    if not h.vertices or not h.edges:
        violations.append(("empty", ()))
    bad_size = sorted(tuple(sorted(e)) for e in h.edges if len(e) not in (2, 3))
    if bad_size:
        violations.append(("edge-cardinality", tuple(bad_size)))
    covered = set().union(*h.edges) if h.edges else set()
    isolated = tuple(v for v in h.vertices if v not in covered)
    if isolated:
        violations.append(("isolated-vertex", isolated))
    nonlinear = []
    for e, f in itertools.combinations(sorted(h.edges, key=lambda e: tuple(sorted(e))), 2):
        if len(e & f) >= 2:
            nonlinear.append((tuple(sorted(e)), tuple(sorted(f))))
    if nonlinear:
        violations.append(("linear", tuple(nonlinear)))
    adjacent_pair_edges = []
    for e in sorted(h.edges, key=lambda e: tuple(sorted(e))):
        if len(e) == 2 and any(e & f for f in h.edges if f != e):
            adjacent_pair_edges.append(tuple(sorted(e)))
    if adjacent_pair_edges:
        violations.append(("degree-2-adjacency", tuple(adjacent_pair_edges)))
    return ValidationReport(valid=not violations, violations=tuple(violations))


def is_linear(h: Hypergraph) -> bool:
    """True when every two distinct edges share at most one vertex."""
    return all(len(e & f) <= 1 for e, f in itertools.combinations(h.edges, 2))


def girth(h: Hypergraph) -> int | float:
    """Length of the shortest alternating cycle, or INFINITE when acyclic.

    A cycle of length n >= 2 alternates n distinct vertices and n distinct
    edges, consecutive vertices sharing the edge between them. Works on any
    loop-free hypergraph, admissible or not, so a pair of edges sharing two
    vertices is reported as a 2-cycle.
    """
    incident: dict[str, list[Edge]] = {v: [] for v in h.vertices}
    for e in h.edges:
        for v in e:
            incident.setdefault(v, []).append(e)
    rank = {v: i for i, v in enumerate(sorted(incident))}
    best = INFINITE

    def extend(start: str, current: str, used_v: set[str], used_e: set[Edge]) -> None:
        nonlocal best
        depth = len(used_e)
        if depth + 1 >= best:
            return
        for e in incident[current]:
            if e in used_e:
                continue
            if depth >= 1 and start in e:
                best = min(best, depth + 1)
                continue
            used_e.add(e)
            for nxt in e:
                if nxt in used_v or rank[nxt] < rank[start]:
                    continue
                used_v.add(nxt)
                extend(start, nxt, used_v, used_e)
                used_v.discard(nxt)
            used_e.discard(e)

    for start in sorted(incident):
        extend(start, start, {start}, set())
        if best == 2:
            break
    return best


def linked_classes(h: Hypergraph) -> dict[Pair, frozenset[Pair]]:
    """Partition the 2-subsets of 3-vertex edges by the completion relation.

    Two distinct pairs are directly linked when a single extra vertex
    completes both to full edges. Classes are the reflexive-transitive
    closure of that relation, keyed by their lexicographically least member.
    Whenever the closure joins two pairs that are not directly linked, the
    enlargement is logged, since direct linkage alone is expected to already
    be transitive on admissible inputs.
    """
    pairs = {
        frozenset(p)
        for e in h.edges
        if len(e) == 3
        for p in itertools.combinations(e, 2)
    }
    completers: dict[Pair, set[str]] = {
        p: {w for e in h.edges if len(e) == 3 and p < e for w in e - p} for p in pairs
    }
    neighbours: dict[Pair, set[Pair]] = {p: set() for p in pairs}
    for p, q in itertools.combinations(pairs, 2):
        if completers[p] & completers[q]:
            neighbours[p].add(q)
            neighbours[q].add(p)
    classes: list[frozenset[Pair]] = []
    unvisited = set(pairs)
    while unvisited:
        seed = next(iter(unvisited))
        component = {seed}
        frontier = [seed]
        while frontier:
            p = frontier.pop()
            for q in neighbours[p]:
                if q not in component:
                    component.add(q)
                    frontier.append(q)
        unvisited -= component
        classes.append(frozenset(component))
        for p, q in itertools.combinations(component, 2):
            if q not in neighbours[p]:
                logger.warning(
                    "pair class closure joined %s and %s without a direct link",
                    sorted(p),
                    sorted(q),
                )
    keyed = {min(cls, key=lambda p: tuple(sorted(p))): cls for cls in classes}
    return dict(sorted(keyed.items(), key=lambda item: tuple(sorted(item[0]))))


def uniform_core(h: Hypergraph) -> Hypergraph:
    """Induced subhypergraph on the vertices covered by 3-vertex edges."""
    triple_cover = set().union(*(e for e in h.edges if len(e) == 3), frozenset())
    if not triple_cover:
        raise ValueError("no 3-uniform core: hypergraph has only 2-vertex edges")
    kept = frozenset(e for e in h.edges if e <= triple_cover)
    vertices = tuple(v for v in h.vertices if v in triple_cover)
    return Hypergraph(vertices, kept)


def _leaves(edges: frozenset[Edge]) -> list[Edge]:
    out = []
    for e in edges:
        rest = set().union(*(f for f in edges if f != e), frozenset())
        if len(e & rest) <= 1:
            out.append(e)
    return out


def leaf_core(h: Hypergraph) -> Hypergraph:
    """Iteratively delete leaf edges until none remain.

    A leaf is an edge meeting the union of all other edges in at most one
    vertex. The result is the partial subhypergraph on the surviving edges.
    Requires a 3-uniform hypergraph that contains a cycle; a hyperforest
    loses every edge eventually, so it has no core.
    """
    if any(len(e) != 3 for e in h.edges):
        raise ValueError("leaf core requires a 3-uniform hypergraph")
    if girth(h) == INFINITE:
        raise ValueError("leaf core undefined: hypergraph is a hyperforest")
    edges = h.edges
    while True:
        dropped = _leaves(edges)
        if not dropped:
            break
        edges = frozenset(e for e in edges if e not in set(dropped))
    covered = set().union(*edges)
    return Hypergraph(tuple(v for v in h.vertices if v in covered), edges)


def _beam_edges(index: int) -> list[tuple[str, ...]]:
    edges = [("u1", "u2", "u3"), ("u3", "u4", "u5"), ("u5", "u6", "u1")]
    peaks = {0: "u1", 1: "u3"}
    for m in range(2, index + 1):
        peaks[m] = f"u{3 * m + 2}"
    for j in range(2, index + 1):
        if j % 2 == 0:
            first, second = peaks[j - 2], peaks[j - 1]
        else:
            first, second = peaks[j - 1], peaks[j - 2]
        edges.append((first, f"u{3 * j + 1}", f"u{3 * j + 2}"))
        edges.append((f"u{3 * j + 2}", f"u{3 * j + 3}", second))
    return edges


def family(kind: str, index: int) -> Hypergraph:
    """Build a named family member on vertices u1, u2, ...

    Kinds: n_cycle (index >= 3), beam, fan, nested (index >= 1). The kind
    s7_marker is reserved for a semiring that has no underlying hypergraph,
    so requesting it always fails; use the builtin semiring "s7" instead.
    """
    if kind == "s7_marker":
        raise ValueError(
            "unsupported kind/index combination: s7_marker has no hypergraph; "
            "use the builtin semiring 's7'"
        )
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unsupported kind/index combination: {kind!r}, {index}")
    if kind == "n_cycle":
        if index < 3:
            raise ValueError(f"unsupported kind/index combination: n_cycle, {index}")
        n = index
        vertices = [f"u{k}" for k in range(1, 2 * n + 1)]
        edges = []
        for j in range(1, n + 1):
            a, b, c = 2 * j - 1, 2 * j, 2 * j + 1
            edges.append((f"u{a}", f"u{b}", f"u{(c - 1) % (2 * n) + 1}"))
        return build_hypergraph(vertices, edges)
    if index < 1:
        raise ValueError(f"unsupported kind/index combination: {kind}, {index}")
    if kind == "nested":
        vertices = [f"u{k}" for k in range(1, 3 * index + 4)]
        edges = []
        for j in range(1, index + 1):
            a, b, c = f"u{3 * j - 2}", f"u{3 * j - 1}", f"u{3 * j}"
            edges.append((b, f"u{3 * j + 3}", a))
            edges.append((a, f"u{3 * j + 2}", c))
            edges.append((c, f"u{3 * j + 1}", b))
        return build_hypergraph(vertices, edges)
    if kind == "beam":
        vertices = [f"u{k}" for k in range(1, 3 * index + 4)]
        return build_hypergraph(vertices, _beam_edges(index))
    vertices = [f"u{k}" for k in range(1, 3 * index + 4)]
    edges = [("u1", "u2", "u3"), ("u3", "u4", "u5"), ("u5", "u6", "u1")]
    for j in range(2, index + 1):
        edges.append((f"u{3 * (j - 1) + 2}", f"u{3 * j + 1}", f"u{3 * j + 2}"))
        edges.append((f"u{3 * j + 2}", f"u{3 * j + 3}", "u1"))
    return build_hypergraph(vertices, edges)


def _vertex_signature(h: Hypergraph, v: str) -> tuple:
    return (h.vertex_degree(v), tuple(sorted(len(e) for e in h.incident_edges(v))))


def find_hypergraph_isomorphism(h1: Hypergraph, h2: Hypergraph) -> dict[str, str] | None:
    """Search for a vertex bijection carrying edges of h1 exactly onto edges of h2.

    Returns the mapping found by a deterministic backtracking search, or None.
    Candidate vertices are filtered by degree and incident edge sizes, which
    keeps the search shallow on the small hypergraphs this library handles.
    """
    if len(h1.vertices) != len(h2.vertices) or len(h1.edges) != len(h2.edges):
        return None
    sig1 = {v: _vertex_signature(h1, v) for v in h1.vertices}
    sig2 = {v: _vertex_signature(h2, v) for v in h2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    if sorted(len(e) for e in h1.edges) != sorted(len(e) for e in h2.edges):
        return None

    order = sorted(h1.vertices, key=lambda v: (-sig1[v][0], v))
    edges2 = h2.edges
    edge_sizes2: dict[int, list[Edge]] = {}
    for e in edges2:
        edge_sizes2.setdefault(len(e), []).append(e)

    def feasible(mapping: dict[str, str]) -> bool:
        mapped = set(mapping)
        for e in h1.edges:
            image = {mapping[v] for v in e if v in mapped}
            if len(image) == len(e):
                if frozenset(image) not in edges2:
                    return False
            elif image:
                if not any(image <= f for f in edge_sizes2.get(len(e), ())):
                    return False
        return True

    used: set[str] = set()
    mapping: dict[str, str] = {}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in sorted(h2.vertices):
            if w in used or sig2[w] != sig1[v]:
                continue
            mapping[v] = w
            used.add(w)
            if feasible(mapping) and assign(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if assign(0):
        return {v: mapping[v] for v in h1.vertices}
    return None


def parse_hypergraph(text: str) -> Hypergraph:
    """Read a hypergraph from its JSON document form.

    The document is an object with a "vertices" list of strings and an
    "edges" list of lists of strings.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise HypergraphParseError("top level must be an object")
    missing = {"vertices", "edges"} - set(data)
    if missing:
        raise HypergraphParseError(f"missing fields: {', '.join(sorted(missing))}")
    if not isinstance(data["vertices"], list) or not isinstance(data["edges"], list):
        raise HypergraphParseError("'vertices' and 'edges' must be lists")
    return build_hypergraph(data["vertices"], data["edges"])


def format_hypergraph(h: Hypergraph) -> str:
    """Serialize to the JSON document form accepted by parse_hypergraph."""
    doc = {"vertices": list(h.vertices), "edges": [list(e) for e in h.edge_list()]}
    return json.dumps(doc, indent=2) + "\n"


def to_dot(h: Hypergraph, vertex_colors: dict[str, int] | None = None) -> str:
    """Render the bipartite incidence graph in DOT form.

    Vertices become circles and edges become boxes; an optional color map
    (vertex to 0/1/2) fills the vertex nodes.
    """
    lines = ["graph incidence {", "  node [fontsize=11];"]
    for v in h.vertices:
        attrs = ["shape=circle"]
        if vertex_colors is not None and v in vertex_colors:
            attrs.append(f'fillcolor="{_DOT_FILL[vertex_colors[v]]}"')
            attrs.append("style=filled")
        lines.append(f'  "{v}" [{", ".join(attrs)}];')
    for i, members in enumerate(h.edge_list(), start=1):
        name = f"e{i}"
        lines.append(f'  "{name}" [shape=box];')
        for v in members:
            lines.append(f'  "{name}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
