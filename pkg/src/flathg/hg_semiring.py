"""Semirings presented by a 3-hypergraph, built directly on normal forms.

Every element of the carrier is zero, a vertex generator, a class of linked
vertex pairs, or the absorbing-by-squares top element. Products follow the
subhyperedge structure: a pair of generators survives only inside an edge,
a full edge's product is the top, and anything longer in total generator
length collapses to zero. Rather than trusting that recipe, the builder
re-verifies associativity and cancellation on the finished table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph, Pair, linked_classes, validate
from .semiring import FiniteSemiring, MulTable, flat_completion


@dataclass(frozen=True)
class HgElement:
    """Normal form: kind is one of "zero", "gen", "pair", "top".

    A "gen" carries its vertex; a "pair" carries the canonical representative
    of its linked class.
    """

    kind: str
    vertex: str | None = None
    pair: tuple[str, str] | None = None

    @property
    def label(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "gen":
            return f"a·{self.vertex}"
        if self.kind == "pair":
            return "PAIR{" + ",".join(self.pair) + "}"
        return "TOP"


ZERO = HgElement("zero")
TOP = HgElement("top")


@dataclass(frozen=True)
class HypergraphSemiring:
    """A hypergraph together with its element list and exported tables."""

    source: Hypergraph
    elements: tuple[HgElement, ...]
    exported: FiniteSemiring
    degenerate_no_top_triple: bool

    def element_index(self, e: HgElement) -> int:
        return self.elements.index(e)


def _require_valid(h: Hypergraph) -> None:
    report = validate(h)
    if not report.valid:
        broken = ", ".join(name for name, _ in report.violations)
        raise ValueError(f"hypergraph is not admissible: {broken}")


class _NormalForms:
    def __init__(self, h: Hypergraph):
        self.h = h
        self.classes = linked_classes(h)
        self.rep_of: dict[Pair, tuple[str, str]] = {}
        for rep, members in self.classes.items():
            canonical = tuple(sorted(rep))
            for pair in members:
                self.rep_of[pair] = canonical
        self.vertex_set = set(h.vertices)
        self.edges = h.edges

    def gen_product(self, u: str, v: str) -> HgElement:
        pair = frozenset((u, v))
        if u == v:
            return ZERO
        if pair in self.edges:
            return TOP
        if pair in self.rep_of:
            return HgElement("pair", pair=self.rep_of[pair])
        return ZERO

    def pair_times_gen(self, rep: tuple[str, str], w: str) -> HgElement:
        for pair in self.classes[frozenset(rep)]:
            if w not in pair and pair | {w} in self.edges:
                return TOP
        return ZERO


def _product(nf: _NormalForms, x: HgElement, y: HgElement) -> HgElement:
    if x.kind == "zero" or y.kind == "zero":
        return ZERO
    if x.kind == "top" or y.kind == "top":
        return ZERO
    if x.kind == "gen" and y.kind == "gen":
        return nf.gen_product(x.vertex, y.vertex)
    if x.kind == "gen":
        return nf.pair_times_gen(y.pair, x.vertex)
    if y.kind == "gen":
        return nf.pair_times_gen(x.pair, y.vertex)
    return ZERO


def normal_form_product(h: Hypergraph, x: HgElement, y: HgElement) -> HgElement:
    """Multiply two normal forms of the semiring presented by h.

    Rejects elements that do not belong to h (a foreign vertex, or a pair
    that is not the canonical representative of one of h's linked classes).
    """
    nf = _NormalForms(h)
    for e in (x, y):
        if e.kind == "gen" and e.vertex not in nf.vertex_set:
            raise ValueError(f"element {e.label} does not belong to this hypergraph")
        if e.kind == "pair" and (
            frozenset(e.pair) not in nf.rep_of
            or nf.rep_of[frozenset(e.pair)] != tuple(e.pair)
        ):
            raise ValueError(f"element {e.label} does not belong to this hypergraph")
    return _product(nf, x, y)


def _carrier(h: Hypergraph) -> tuple[tuple[HgElement, ...], MulTable]:
    _require_valid(h)
    nf = _NormalForms(h)
    elements: list[HgElement] = [ZERO]
    elements.extend(HgElement("gen", vertex=v) for v in h.vertices)
    elements.extend(HgElement("pair", pair=tuple(sorted(rep))) for rep in nf.classes)
    elements.append(TOP)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = [[0] * n for _ in range(n)]
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            mul[i][j] = index[_product(nf, x, y)]
    labels = tuple(e.label for e in elements)
    return tuple(elements), MulTable(labels, tuple(tuple(row) for row in mul), zero=0)


def build_semigroup(h: Hypergraph) -> MulTable:
    """Multiplication table of the hypergraph semiring's carrier.

    Elements are ordered zero first, then generators in vertex order, then
    pair classes by representative, then top. The table is derived from the
    normal forms; callers downstream re-check associativity exhaustively.
    """
    return _carrier(h)[1]


def build_semiring(h: Hypergraph) -> HypergraphSemiring:
    """Flat completion of the hypergraph semigroup.

    The completion re-verifies associativity, absorption and 0-cancellation,
    so a wrong pair-class partition cannot silently produce a non-semiring.
    A hypergraph consisting only of 2-vertex edges is accepted, but then no
    product of three generators reaches the top; the result flags that
    degenerate shape.
    """
    elements, table = _carrier(h)
    exported = flat_completion(table)
    degenerate = all(len(e) != 3 for e in h.edges)
    return HypergraphSemiring(
        source=h,
        elements=elements,
        exported=exported,
        degenerate_no_top_triple=degenerate,
    )
