"""Closures, ideal quotients, isomorphism search, and witness pipelines.

Each witness re-runs one containment argument end to end on concrete
tables: build the base semiring, take a direct power, close the prescribed
generator tuples under both operations, collapse the prescribed ideal, and
search for an isomorphism onto the claimed target. Nothing is taken on
trust; a stage that cannot be completed shows up as a failed stage in the
report rather than an exception, so the report always tells the full story.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import enumerate_strong_colorings
from .hg_semiring import build_semiring
from .hypergraph import Hypergraph, family, validate
from .semiring import FiniteSemiring, is_flat, multiplicative_zero
from .terms import check_identity_flat, nested_identity
from .words import build_sc

CLOSURE_CAP_DEFAULT = 100_000
COLORINGS_CAP_DEFAULT = 10_000

WITNESS_KINDS = (
    "uniform_reduction",
    "strongcolor_equiv",
    "triangle_in_abcd",
    "leaf_removal",
    "beam_step",
    "nested_chain",
)


@dataclass(frozen=True)
class DirectPower:
    """Componentwise k-th power of a finite semiring, never materialized.

    Elements are k-tuples of base element indices; only the closures below
    ever instantiate any of them.
    """

    base: FiniteSemiring
    arity: int

    @property
    def size(self) -> int:
        return self.base.size**self.arity

    @property
    def zero(self) -> tuple[int, ...]:
        z = self.base.zero
        if z is None:
            z = multiplicative_zero(self.base)
        if z is None:
            raise ValueError("base semiring has no zero element")
        return (z,) * self.arity

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.base.add[a][b] for a, b in zip(x, y))

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.base.mul[a][b] for a, b in zip(x, y))

    def label(self, x: tuple[int, ...]) -> str:
        if self.arity == 1:
            return self.base.elements[x[0]]
        return "(" + ",".join(self.base.elements[i] for i in x) + ")"

    def element_from_labels(self, labels) -> tuple[int, ...]:
        entries = tuple(labels)
        if len(entries) != self.arity:
            raise ValueError(f"expected {self.arity} coordinates, got {len(entries)}")
        return tuple(self.base.index(lbl) for lbl in entries)


def direct_power(s: FiniteSemiring, k: int) -> DirectPower:
    """Lazy k-fold power with componentwise operations."""
    if k < 1:
        raise ValueError("power arity must be at least 1")
    return DirectPower(s, k)


@dataclass(frozen=True)
class GeneratedSubsemiring:
    """The least subset containing the generators and closed under both
    operations of the ambient power, in discovery order."""

    ambient: DirectPower
    generators: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]

    def label(self, x: tuple[int, ...]) -> str:
        return self.ambient.label(x)

    def as_semiring(self) -> FiniteSemiring:
        """Materialize the closure as explicit tables."""
        pos = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                add[i][j] = pos[self.ambient.add(x, y)]
                mul[i][j] = pos[self.ambient.mul(x, y)]
        zero = pos.get(self.ambient.zero)
        return FiniteSemiring(
            tuple(self.label(x) for x in self.elements),
            tuple(tuple(row) for row in add),
            tuple(tuple(row) for row in mul),
            zero,
        )


def generated_subsemiring(
    ambient: DirectPower, generators, cap: int = CLOSURE_CAP_DEFAULT
) -> GeneratedSubsemiring:
    """Close the generators under add and mul by worklist fixpoint.

    Generators may be tuples of base labels or of base indices. The closure
    refuses to grow past the cap, since a runaway closure means the
    construction is being fed something it was never meant for.
    """
    gens: list[tuple[int, ...]] = []
    for g in generators:
        entries = tuple(g)
        if any(isinstance(e, str) for e in entries):
            gens.append(ambient.element_from_labels(entries))
        else:
            gens.append(tuple(int(e) for e in entries))
    if not gens:
        raise ValueError("at least one generator is required")
    elements: list[tuple[int, ...]] = []
    position: dict[tuple[int, ...], int] = {}

    def intern(x: tuple[int, ...]) -> None:
        if x not in position:
            if len(elements) >= cap:
                raise ValueError(f"closure exceeded {cap} elements; refusing to continue")
            position[x] = len(elements)
            elements.append(x)

    for g in gens:
        intern(g)
    cursor = 0
    while cursor < len(elements):
        x = elements[cursor]
        for i in range(cursor + 1):
            y = elements[i]
            intern(ambient.add(y, x))
            intern(ambient.add(x, y))
            intern(ambient.mul(y, x))
            intern(ambient.mul(x, y))
        cursor += 1
    return GeneratedSubsemiring(ambient, tuple(gens), tuple(elements))


@dataclass(frozen=True)
class IdealQuotient:
    carrier: GeneratedSubsemiring
    ideal: tuple[tuple[int, ...], ...]
    quotient: FiniteSemiring


def quotient_by_ideal(a: GeneratedSubsemiring, ideal) -> IdealQuotient:
    """Collapse the ideal to a single class and verify that this is lawful.

    The collapse relation (J x J plus the identity) must be a congruence of
    both operations: combining any element with the members of J must land
    either always inside J or always on one single element. A violation is
    reported with the operation and the offending pair.
    """
    j_list = []
    for x in ideal:
        entries = tuple(x)
        if any(isinstance(e, str) for e in entries):
            entries = a.ambient.element_from_labels(entries)
        j_list.append(entries)
    j_set = set(j_list)
    member = set(a.elements)
    for x in j_set:
        if x not in member:
            raise ValueError(f"ideal member {a.label(x)} is not in the closure")
    zero = a.ambient.zero
    if zero not in j_set:
        raise ValueError("the ideal must contain the zero tuple")
    for op_name, op in (("add", a.ambient.add), ("mul", a.ambient.mul)):
        for x in a.elements:
            for flip in (False, True):
                results = {}
                for j in j_list:
                    r = op(j, x) if flip else op(x, j)
                    results.setdefault(r, j)
                if len(results) > 1 and any(r not in j_set for r in results):
                    distinct = sorted(results, key=a.elements.index)
                    r1, r2 = distinct[0], distinct[1]
                    raise ValueError(
                        "ideal does not induce a congruence: "
                        f"{op_name}({a.label(x)}, .) sends {a.label(results[r1])} "
                        f"to {a.label(r1)} but {a.label(results[r2])} to {a.label(r2)}"
                    )
    reps = [zero] + [x for x in a.elements if x not in j_set]
    labels = ["J"] + [a.label(x) for x in reps[1:]]
    class_of = {x: 0 for x in j_set}
    for i, x in enumerate(reps[1:], start=1):
        class_of[x] = i
    n = len(reps)
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            add[i][j] = class_of[a.ambient.add(x, y)]
            mul[i][j] = class_of[a.ambient.mul(x, y)]
    quotient = FiniteSemiring(
        tuple(labels),
        tuple(tuple(row) for row in add),
        tuple(tuple(row) for row in mul),
        zero=0,
    )
    return IdealQuotient(a, tuple(j_list), quotient)


def _element_signatures(s: FiniteSemiring) -> list[tuple]:
    n = s.size
    z = multiplicative_zero(s)
    add_fact = [0] * n
    mul_fact = [0] * n
    for a in range(n):
        for b in range(n):
            add_fact[s.add[a][b]] += 1
            mul_fact[s.mul[a][b]] += 1
    out = []
    for x in range(n):
        seen: list[int] = []
        y = x
        while y not in seen:
            seen.append(y)
            y = s.add[y][x]
        ann = 0
        if z is not None:
            ann = sum(1 for w in range(n) if s.mul[x][w] == z and s.mul[w][x] == z)
        out.append(
            (
                len(seen),
                ann,
                mul_fact[x],
                add_fact[x],
                z is not None and s.mul[x][x] == z,
                s.mul[x][x] == x,
                s.add[x][x] == x,
                x == z,
            )
        )
    return out


def find_semiring_isomorphism(s1: FiniteSemiring, s2: FiniteSemiring) -> dict[str, str] | None:
    """Backtracking search for a bijection preserving both tables.

    Elements are first profiled (additive orbit length, annihilation counts,
    factorization counts); only profile-equal images are tried, in element
    order, so the result is deterministic. Absence of an isomorphism is a
    normal answer, not an error.
    """
    if s1.size != s2.size:
        return None
    sig1 = _element_signatures(s1)
    sig2 = _element_signatures(s2)
    if sorted(sig1) != sorted(sig2):
        return None
    n = s1.size
    candidates = [[y for y in range(n) if sig2[y] == sig1[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        for a in range(n):
            if mapping[a] < 0:
                continue
            for b in (x,):
                for ta, tb in ((a, b), (b, a)):
                    for table1, table2 in ((s1.add, s2.add), (s1.mul, s2.mul)):
                        r1 = table1[ta][tb]
                        r2 = table2[mapping[ta]][mapping[tb]]
                        if mapping[r1] >= 0:
                            if mapping[r1] != r2:
                                return False
                        elif used[r2]:
                            return False
        return True

    def assign(x: int) -> bool:
        if x == n:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            if consistent(x) and assign(x + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if assign(0):
        return {s1.elements[x]: s2.elements[mapping[x]] for x in range(n)}
    return None


@dataclass(frozen=True)
class WitnessStage:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class WitnessReport:
    """Every stage of one executed containment proof, plus the verdict."""

    claim: str
    kind: str
    ok: bool
    stages: tuple[WitnessStage, ...]
    generators: tuple[str, ...]
    power_arity: int
    closure_size: int
    ideal_size: int
    quotient_size: int
    isomorphism: tuple[tuple[str, str], ...] | None
    failure_stage: str | None
    notes: tuple[str, ...] = ()


def format_witness_report(r: WitnessReport) -> str:
    """Line-delimited rendering with stable field order, fit for diffing."""
    lines = [
        f"claim: {r.claim}",
        f"kind: {r.kind}",
        f"ok: {'yes' if r.ok else 'no'}",
        f"power-arity: {r.power_arity}",
        f"closure-size: {r.closure_size}",
        f"ideal-size: {r.ideal_size}",
        f"quotient-size: {r.quotient_size}",
    ]
    for i, g in enumerate(r.generators, start=1):
        lines.append(f"generator: g{i} = {g}")
    for st in r.stages:
        lines.append(f"stage: {st.name} {'ok' if st.ok else 'FAILED'} {st.detail}")
    if r.failure_stage is not None:
        lines.append(f"failure-stage: {r.failure_stage}")
    if r.isomorphism is not None:
        for src, dst in r.isomorphism:
            lines.append(f"isomorphism: {src} -> {dst}")
    for note in r.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _run_quotient_pipeline(
    claim: str,
    kind: str,
    base: FiniteSemiring,
    arity: int,
    generator_labels,
    ideal_predicate,
    target: FiniteSemiring,
    closure_cap: int,
    notes: tuple[str, ...] = (),
) -> WitnessReport:
    power = direct_power(base, arity)
    closure = generated_subsemiring(power, generator_labels, cap=closure_cap)
    gen_strings = tuple(power.label(g) for g in closure.generators)
    stages = [WitnessStage("closure", True, f"{len(closure.elements)} elements")]
    ideal = tuple(x for x in closure.elements if ideal_predicate(x))
    stages.append(WitnessStage("ideal", True, f"{len(ideal)} elements"))

    def failed(stage_name: str, detail: str, done_stages) -> WitnessReport:
        done_stages.append(WitnessStage(stage_name, False, detail))
        return WitnessReport(
            claim=claim,
            kind=kind,
            ok=False,
            stages=tuple(done_stages),
            generators=gen_strings,
            power_arity=arity,
            closure_size=len(closure.elements),
            ideal_size=len(ideal),
            quotient_size=0,
            isomorphism=None,
            failure_stage=stage_name,
            notes=notes,
        )

    try:
        quot = quotient_by_ideal(closure, ideal)
    except ValueError as exc:
        return failed("quotient", str(exc), stages)
    stages.append(WitnessStage("quotient", True, f"{quot.quotient.size} classes"))
    if not is_flat(quot.quotient):
        return failed("flatness", "quotient is not flat", stages)
    stages.append(WitnessStage("flatness", True, "quotient is flat"))
    iso = find_semiring_isomorphism(quot.quotient, target)
    if iso is None:
        return failed(
            "isomorphism",
            f"no isomorphism onto the {target.size}-element target",
            stages,
        )
    stages.append(WitnessStage("isomorphism", True, f"matched all {target.size} elements"))
    pairs = tuple((src, iso[src]) for src in quot.quotient.elements)
    return WitnessReport(
        claim=claim,
        kind=kind,
        ok=True,
        stages=tuple(stages),
        generators=gen_strings,
        power_arity=arity,
        closure_size=len(closure.elements),
        ideal_size=len(ideal),
        quotient_size=quot.quotient.size,
        isomorphism=pairs,
        failure_stage=None,
        notes=notes,
    )


def _zero_coordinate_predicate(base: FiniteSemiring):
    z = base.zero if base.zero is not None else multiplicative_zero(base)

    def pred(x: tuple[int, ...]) -> bool:
        return any(c == z for c in x)

    return pred


def _witness_triangle_in_abcd(closure_cap: int) -> WitnessReport:
    base = build_sc(["abcd"])
    target = build_semiring(family("beam", 1)).exported
    gens = [
        ("a", "bc"),
        ("bc", "d"),
        ("d", "a"),
        ("ab", "bc"),
        ("c", "d"),
        ("bd", "a"),
    ]
    z = base.zero
    full = base.index("abcd")

    def pred(x: tuple[int, ...]) -> bool:
        if any(c == z for c in x):
            return True
        return (full in x) and x[0] != x[1]

    return _run_quotient_pipeline(
        claim="triangle_in_abcd: pair closure over the abcd subword semiring "
        "collapses onto the triangle semiring (14 elements)",
        kind="triangle_in_abcd",
        base=base,
        arity=2,
        generator_labels=gens,
        ideal_predicate=pred,
        target=target,
        closure_cap=closure_cap,
    )


def _witness_uniform_reduction(h: Hypergraph, closure_cap: int) -> WitnessReport:
    report = validate(h)
    if not report.valid:
        raise ValueError("uniform_reduction requires an admissible hypergraph")
    two_edges = sorted((e for e in h.edges if len(e) == 2), key=lambda e: tuple(sorted(e)))
    if not two_edges:
        raise ValueError("uniform_reduction requires a hypergraph with a 2-vertex edge")
    removed = two_edges[0]
    kept_vertices = [v for v in h.vertices if v not in removed]
    kept_edges = frozenset(e for e in h.edges if e != removed)
    if not kept_edges:
        raise ValueError("removing the 2-vertex edge leaves an empty hypergraph")
    h1 = Hypergraph(tuple(kept_vertices), kept_edges)
    triples = sorted((e for e in h1.edges if len(e) == 3), key=lambda e: tuple(sorted(e)))
    if not triples:
        raise ValueError("uniform_reduction needs a 3-vertex edge to anchor the new pair")
    base = build_semiring(h1).exported
    target = build_semiring(h).exported
    u1, u2, u3 = sorted(triples[0])
    pair_label = base.mul_label(f"a·{u1}", f"a·{u2}")
    gens = [(f"a·{v}", f"a·{v}") for v in h1.vertices]
    gens.append((pair_label, f"a·{u3}"))
    gens.append((f"a·{u3}", pair_label))
    v1, v2 = sorted(removed)
    notes = (
        f"removed 2-vertex edge {{{v1},{v2}}}; anchor edge {{{u1},{u2},{u3}}}",
    )
    return _run_quotient_pipeline(
        claim=f"uniform_reduction: the {target.size}-element semiring of the "
        f"non-uniform hypergraph arises from the {base.size}-element uniform one",
        kind="uniform_reduction",
        base=base,
        arity=2,
        generator_labels=gens,
        ideal_predicate=_zero_coordinate_predicate(base),
        target=target,
        closure_cap=closure_cap,
        notes=notes,
    )


def _leaf_edges(h: Hypergraph) -> list[tuple]:
    out = []
    for e in h.edges:
        rest = set().union(*(f for f in h.edges if f != e), frozenset())
        shared = e & rest
        if len(shared) <= 1:
            out.append((e, shared))
    return sorted(out, key=lambda pair: tuple(sorted(pair[0])))


def _witness_leaf_removal(h: Hypergraph, leaf_case: str, closure_cap: int) -> WitnessReport:
    if leaf_case not in ("disjoint", "shared"):
        raise ValueError("leaf_case must be 'disjoint' or 'shared'")
    report = validate(h)
    if not report.valid:
        raise ValueError("leaf_removal requires an admissible hypergraph")
    if any(len(e) != 3 for e in h.edges):
        raise ValueError("leaf_removal requires a 3-uniform hypergraph")
    wanted = 0 if leaf_case == "disjoint" else 1
    matching = [(e, shared) for e, shared in _leaf_edges(h) if len(shared) == wanted]
    if not matching:
        raise ValueError(f"no {leaf_case} leaf edge found")
    leaf, shared = matching[0]
    remaining = frozenset(e for e in h.edges if e != leaf)
    if not remaining:
        raise ValueError("removing the leaf leaves an empty hypergraph")
    covered = set().union(*remaining)
    h1 = Hypergraph(tuple(v for v in h.vertices if v in covered), remaining)
    base = build_semiring(h1).exported
    target = build_semiring(h).exported
    gens = [(f"a·{v}", f"a·{v}", f"a·{v}") for v in h1.vertices]
    if leaf_case == "disjoint":
        anchor = sorted(min(remaining, key=lambda e: tuple(sorted(e))))
        u1, u2, u3 = anchor
        leaf_vertices = sorted(leaf)
        gens.append((f"a·{u1}", f"a·{u2}", f"a·{u3}"))
        gens.append((f"a·{u2}", f"a·{u3}", f"a·{u1}"))
        gens.append((f"a·{u3}", f"a·{u1}", f"a·{u2}"))
        note = (
            f"leaf {{{','.join(leaf_vertices)}}} disjoint; "
            f"anchor edge {{{u1},{u2},{u3}}}"
        )
    else:
        (w,) = shared
        through = sorted(
            (e for e in remaining if w in e), key=lambda e: tuple(sorted(e))
        )
        anchor = through[0]
        u2, u3 = sorted(anchor - {w})
        leaf_vertices = sorted(leaf - {w})
        gens.append((f"a·{u2}", f"a·{u3}", f"a·{u2}"))
        gens.append((f"a·{u3}", f"a·{u2}", f"a·{u3}"))
        note = (
            f"leaf {{{','.join(sorted(leaf))}}} shares {w}; "
            f"anchor edge {{{','.join(sorted(anchor))}}}"
        )
    return _run_quotient_pipeline(
        claim=f"leaf_removal({leaf_case}): the {target.size}-element semiring "
        f"with the leaf arises from the {base.size}-element one without it",
        kind="leaf_removal",
        base=base,
        arity=3,
        generator_labels=gens,
        ideal_predicate=_zero_coordinate_predicate(base),
        target=target,
        closure_cap=closure_cap,
        notes=(note,),
    )


def _witness_strongcolor_equiv(
    h: Hypergraph, colorings_cap: int, closure_cap: int
) -> WitnessReport:
    report = validate(h)
    if not report.valid:
        raise ValueError("strongcolor_equiv requires an admissible hypergraph")
    colorings = enumerate_strong_colorings(h, cap=colorings_cap)
    if not colorings:
        raise ValueError("hypergraph has no strong 3-coloring; nothing to build on")
    base = build_sc(["abc"])
    target = build_semiring(h).exported
    letter = {0: "a", 1: "b", 2: "c"}
    gens = [
        tuple(letter[phi[v]] for phi in colorings)
        for v in h.vertices
    ]
    return _run_quotient_pipeline(
        claim=f"strongcolor_equiv: the coloring-power closure collapses onto "
        f"the {target.size}-element hypergraph semiring",
        kind="strongcolor_equiv",
        base=base,
        arity=len(colorings),
        generator_labels=gens,
        ideal_predicate=_zero_coordinate_predicate(base),
        target=target,
        closure_cap=closure_cap,
        notes=(f"{len(colorings)} strong 3-colorings",),
    )


_BEAM_MATRIX = (
    ("u3", "u2", "u2", "u1", "u1", "u3"),
    ("u2", "u3", "u1", "u2", "u3", "u1"),
    ("u1", "u1", "u3", "u3", "u2", "u2"),
)


def _witness_beam_step(i: int, closure_cap: int) -> WitnessReport:
    if i < 1:
        raise ValueError("beam_step index must be at least 1")
    base = build_semiring(family("beam", i)).exported
    target = build_semiring(family("beam", i + 1)).exported

    def g(k: int) -> str:
        return f"a·u{k}"

    gens: list[tuple[str, str, str]] = [
        (g(1), g(1), g(1)),
        (g(2), g(2), g(3)),
        (g(3), g(3), g(2)),
        (g(4), g(4), g(1)),
        (g(5), g(5), g(3)),
        (g(6), g(6), g(2)),
        (g(4), g(1), g(4)),
        (g(3), g(6), g(5)),
        (g(2), g(5), g(6)),
    ]
    notes = []
    for j in range(2, i + 1):
        column = j % 6
        if column == 0:
            column = 6
            notes.append(f"arch {j}: index is 0 mod 6, using matrix column 6")
        col = column - 1
        gens.append((g(3 * j + 1), g(3 * j + 1), f"a·{_BEAM_MATRIX[0][col]}"))
        gens.append((g(3 * j + 2), g(3 * j + 2), f"a·{_BEAM_MATRIX[1][col]}"))
        gens.append((g(3 * j + 3), g(3 * j + 3), f"a·{_BEAM_MATRIX[2][col]}"))
    return _run_quotient_pipeline(
        claim=f"beam_step({i}): cubed-power closure over the beam({i}) semiring "
        f"collapses onto the beam({i + 1}) semiring ({target.size} elements)",
        kind="beam_step",
        base=base,
        arity=3,
        generator_labels=gens,
        ideal_predicate=_zero_coordinate_predicate(base),
        target=target,
        closure_cap=closure_cap,
        notes=tuple(notes),
    )


def _witness_nested_chain(i: int) -> WitnessReport:
    if i < 1:
        raise ValueError("nested_chain index must be at least 1")
    lower = build_semiring(family("nested", i)).exported
    upper = build_semiring(family("nested", i + 1)).exported
    ident = nested_identity(i + 1)
    low = check_identity_flat(lower, ident)
    high = check_identity_flat(upper, ident)
    stages = (
        WitnessStage(
            "lower-satisfies",
            low.holds,
            f"nested({i}) semiring: identity {i + 1} {low.verdict}",
        ),
        WitnessStage(
            "upper-fails",
            not high.holds,
            f"nested({i + 1}) semiring: identity {i + 1} {high.verdict}",
        ),
    )
    notes = []
    if high.counterexample is not None:
        pins = ", ".join(f"{k}={v}" for k, v in sorted(high.counterexample.items()))
        notes.append(f"separating assignment: {pins}")
    ok = low.holds and not high.holds
    return WitnessReport(
        claim=f"nested_chain({i}): identity {i + 1} separates the nested({i}) "
        f"semiring from the nested({i + 1}) one",
        kind="nested_chain",
        ok=ok,
        stages=stages,
        generators=(),
        power_arity=0,
        closure_size=0,
        ideal_size=0,
        quotient_size=0,
        isomorphism=None,
        failure_stage=None if ok else next(st.name for st in stages if not st.ok),
        notes=tuple(notes),
    )


def verify_witness(
    kind: str,
    hypergraph: Hypergraph | None = None,
    index: int | None = None,
    leaf_case: str | None = None,
    colorings_cap: int = COLORINGS_CAP_DEFAULT,
    closure_cap: int = CLOSURE_CAP_DEFAULT,
) -> WitnessReport:
    """Run one witness pipeline by name.

    uniform_reduction and strongcolor_equiv take a hypergraph; leaf_removal
    takes a hypergraph and leaf_case ("disjoint" or "shared"); beam_step and
    nested_chain take an index. triangle_in_abcd takes nothing. Parameter
    errors and exceeded caps raise; a claim that fails to verify comes back
    as a report with ok False.
    """
    if kind == "triangle_in_abcd":
        return _witness_triangle_in_abcd(closure_cap)
    if kind == "uniform_reduction":
        if hypergraph is None:
            raise ValueError("uniform_reduction requires a hypergraph")
        return _witness_uniform_reduction(hypergraph, closure_cap)
    if kind == "leaf_removal":
        if hypergraph is None or leaf_case is None:
            raise ValueError("leaf_removal requires a hypergraph and a leaf_case")
        return _witness_leaf_removal(hypergraph, leaf_case, closure_cap)
    if kind == "strongcolor_equiv":
        if hypergraph is None:
            raise ValueError("strongcolor_equiv requires a hypergraph")
        return _witness_strongcolor_equiv(hypergraph, colorings_cap, closure_cap)
    if kind == "beam_step":
        if index is None:
            raise ValueError("beam_step requires an index")
        return _witness_beam_step(index, closure_cap)
    if kind == "nested_chain":
        if index is None:
            raise ValueError("nested_chain requires an index")
        return _witness_nested_chain(index)
    raise ValueError(f"unknown witness kind {kind!r}")


def find_subword_embedding(target: FiniteSemiring) -> dict[str, str] | None:
    """Embed the 8-element abc subword semiring into a hypergraph semiring.

    Tries each generator triple whose pairwise and triple products are all
    non-zero (that is, each hyperedge), mapping letters to the edge's
    vertex generators, and verifies the induced map preserves both tables
    injectively. Returns the first verified embedding.
    """
    sc = build_sc(["abc"])
    z_t = target.zero if target.zero is not None else multiplicative_zero(target)
    gen_indices = [
        i
        for i, lbl in enumerate(target.elements)
        if lbl.startswith("a·")
    ]
    for i in gen_indices:
        for j in gen_indices:
            if j == i:
                continue
            for k in gen_indices:
                if k in (i, j):
                    continue
                if target.mul[target.mul[i][j]][k] == z_t:
                    continue
                images = {
                    "a": i,
                    "b": j,
                    "c": k,
                    "ab": target.mul[i][j],
                    "ac": target.mul[i][k],
                    "bc": target.mul[j][k],
                    "abc": target.mul[target.mul[i][j]][k],
                    "0": z_t,
                }
                if len(set(images.values())) != len(images):
                    continue
                good = True
                for x_lbl, x_img in images.items():
                    for y_lbl, y_img in images.items():
                        sx, sy = sc.index(x_lbl), sc.index(y_lbl)
                        if images[sc.elements[sc.mul[sx][sy]]] != target.mul[x_img][y_img]:
                            good = False
                            break
                        if images[sc.elements[sc.add[sx][sy]]] != target.add[x_img][y_img]:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    return {lbl: target.elements[img] for lbl, img in images.items()}
    return None
