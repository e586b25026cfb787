"""Finite semirings as explicit operation tables.

The FiniteSemiring value is the exchange format every other module builds or
consumes: an ordered tuple of element labels plus index-valued addition and
multiplication tables. Checks are exhaustive table scans, which is the point,
since every carrier in this library is small.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass


class SemiringParseError(ValueError):
    """Malformed exchange document, as opposed to a semiring failing a law."""


@dataclass(frozen=True)
class FiniteSemiring:
    """Element labels with row-major add and mul tables over element indices."""

    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int | None = None

    def __post_init__(self):
        _check_shape(self.elements, self.add, "add")
        _check_shape(self.elements, self.mul, "mul")
        if self.zero is not None and not 0 <= self.zero < len(self.elements):
            raise ValueError(f"zero index {self.zero} out of range")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def add_label(self, a: str, b: str) -> str:
        return self.elements[self.add[self.index(a)][self.index(b)]]

    def mul_label(self, a: str, b: str) -> str:
        return self.elements[self.mul[self.index(a)][self.index(b)]]


@dataclass(frozen=True)
class MulTable:
    """A finite multiplication table with a designated zero, no addition yet."""

    elements: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int

    def __post_init__(self):
        _check_shape(self.elements, self.mul, "mul")
        if not 0 <= self.zero < len(self.elements):
            raise ValueError(f"zero index {self.zero} out of range")


@dataclass(frozen=True)
class AxiomReport:
    """One verdict per axiom; a failed axiom carries its first counterexample."""

    verdicts: tuple[tuple[str, bool, tuple[str, ...] | None], ...]

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok, _ in self.verdicts)

    def failing(self) -> list[str]:
        return [name for name, ok, _ in self.verdicts if not ok]


def _check_shape(elements: tuple[str, ...], table, name: str) -> None:
    n = len(elements)
    if len(table) != n or any(len(row) != n for row in table):
        raise ValueError(f"ragged {name} table: expected {n}x{n}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValueError(f"{name} table entry {v!r} is not an element index")


def verify_axioms(s: FiniteSemiring) -> AxiomReport:
    """Exhaustively test the additively idempotent semiring axioms.

    Checks associativity of both operations, commutativity and idempotency
    of addition, and two-sided distributivity. The first counterexample per
    axiom is reported as element labels.
    """
    _check_shape(s.elements, s.add, "add")
    _check_shape(s.elements, s.mul, "mul")
    n = s.size
    rng = range(n)
    add, mul, lab = s.add, s.mul, s.elements
    verdicts: list[tuple[str, bool, tuple[str, ...] | None]] = []

    def first_assoc(table) -> tuple[str, ...] | None:
        for a, b, c in itertools.product(rng, rng, rng):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                return (lab[a], lab[b], lab[c])
        return None

    bad = first_assoc(add)
    verdicts.append(("add-associative", bad is None, bad))
    bad = next(((lab[a], lab[b]) for a in rng for b in rng if add[a][b] != add[b][a]), None)
    verdicts.append(("add-commutative", bad is None, bad))
    bad = next(((lab[a],) for a in rng if add[a][a] != a), None)
    verdicts.append(("add-idempotent", bad is None, bad))
    bad = first_assoc(mul)
    verdicts.append(("mul-associative", bad is None, bad))
    bad = next(
        (
            (lab[a], lab[b], lab[c])
            for a, b, c in itertools.product(rng, rng, rng)
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]
        ),
        None,
    )
    verdicts.append(("left-distributive", bad is None, bad))
    bad = next(
        (
            (lab[a], lab[b], lab[c])
            for a, b, c in itertools.product(rng, rng, rng)
            if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]
        ),
        None,
    )
    verdicts.append(("right-distributive", bad is None, bad))
    return AxiomReport(tuple(verdicts))


def multiplicative_zero(s: FiniteSemiring) -> int | None:
    """Index of the two-sided multiplicative zero, if one exists."""
    n = s.size
    for z in range(n):
        if all(s.mul[z][x] == z and s.mul[x][z] == z for x in range(n)):
            return z
    return None


def is_flat(s: FiniteSemiring) -> bool:
    """True when a multiplicative zero exists that is the additive top and
    every sum of two distinct elements collapses to it.

    A one-element carrier is not flat: the defining addition needs at least
    one distinct pair to collapse.
    """
    if s.size < 2:
        return False
    z = multiplicative_zero(s)
    if z is None:
        return False
    n = s.size
    for a in range(n):
        if s.add[a][z] != z or s.add[z][a] != z:
            return False
        for b in range(n):
            if a != b and s.add[a][b] != z:
                return False
    return True


def _cancellation_failure(elements, mul, z) -> tuple[str, str, str] | None:
    n = len(elements)
    for a in range(n):
        row = mul[a]
        for b in range(n):
            ab = row[b]
            if ab == z:
                continue
            for c in range(b + 1, n):
                if row[c] == ab:
                    return (elements[a], elements[b], elements[c])
    for a in range(n):
        for b in range(n):
            ba = mul[b][a]
            if ba == z:
                continue
            for c in range(b + 1, n):
                if mul[c][a] == ba:
                    return (elements[a], elements[b], elements[c])
    return None


def is_zero_cancellative(s: FiniteSemiring) -> bool | tuple[str, str, str]:
    """Check both cancellation laws: a·b = a·c != 0 forces b = c, on either side.

    Returns True, or the first violating triple (a, b, c) as labels. Note the
    returned tuple is truthy; compare against True rather than relying on
    truthiness.
    """
    if s.zero is None:
        raise ValueError("no zero designated")
    bad = _cancellation_failure(s.elements, s.mul, s.zero)
    return True if bad is None else bad


def _mul_assoc_failure(sg: MulTable) -> tuple[str, str, str] | None:
    n = len(sg.elements)
    for a, b, c in itertools.product(range(n), repeat=3):
        if sg.mul[sg.mul[a][b]][c] != sg.mul[a][sg.mul[b][c]]:
            return (sg.elements[a], sg.elements[b], sg.elements[c])
    return None


def flat_completion(sg: MulTable) -> FiniteSemiring:
    """Extend a semigroup-with-zero to a flat semiring.

    The addition is forced: x + x = x and x + y = 0 for x != y. This yields
    a genuine semiring exactly when the input is associative, zero-absorbing
    and 0-cancellative, so those three laws are checked up front and a
    violation is refused by name.
    """
    _check_shape(sg.elements, sg.mul, "mul")
    n = len(sg.elements)
    if not 0 <= sg.zero < n:
        raise ValueError(f"zero index {sg.zero} out of range")
    bad = _mul_assoc_failure(sg)
    if bad is not None:
        raise ValueError(f"not associative: counterexample {bad}")
    z = sg.zero
    for x in range(n):
        if sg.mul[z][x] != z or sg.mul[x][z] != z:
            raise ValueError(f"zero is not absorbing: fails at {sg.elements[x]!r}")
    cancel = _cancellation_failure(sg.elements, sg.mul, z)
    if cancel is not None:
        raise ValueError(f"not 0-cancellative: counterexample {cancel}")
    add = tuple(tuple(i if i == j else z for j in range(n)) for i in range(n))
    return FiniteSemiring(sg.elements, add, sg.mul, z)


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """The checkable certificate: flat, square-vanishing, and the non-zero
    annihilator set, granted only when that set is a singleton."""

    flat: bool
    two_nil: bool
    annihilators: tuple[str, ...]

    @property
    def granted(self) -> bool:
        return self.flat and self.two_nil and len(self.annihilators) == 1


def subdirect_irreducibility_certificate(s: FiniteSemiring) -> IrreducibilityCertificate:
    """Compute the three certificate ingredients from the tables.

    two_nil means x·x = 0 for every x; an annihilator is a non-zero element
    whose product with anything, on either side, is zero. Without a
    multiplicative zero both predicates are vacuously false.
    """
    flat = is_flat(s)
    z = multiplicative_zero(s)
    if z is None:
        return IrreducibilityCertificate(flat=flat, two_nil=False, annihilators=())
    n = s.size
    two_nil = all(s.mul[x][x] == z for x in range(n))
    ann = tuple(
        s.elements[a]
        for a in range(n)
        if a != z and all(s.mul[a][x] == z and s.mul[x][a] == z for x in range(n))
    )
    return IrreducibilityCertificate(flat=flat, two_nil=two_nil, annihilators=ann)


def format_semiring(s: FiniteSemiring) -> str:
    """Serialize to the exchange document: elements, add, mul, zero."""
    doc = {
        "elements": list(s.elements),
        "add": [list(row) for row in s.add],
        "mul": [list(row) for row in s.mul],
        "zero": s.zero,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_semiring(text: str) -> FiniteSemiring:
    """Read a semiring from the exchange document produced by format_semiring.

    Tables may be given either as nested rows or as one flat row-major list.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SemiringParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SemiringParseError("top level must be an object")
    missing = {"elements", "add", "mul"} - set(data)
    if missing:
        raise SemiringParseError(f"missing fields: {', '.join(sorted(missing))}")
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise SemiringParseError("'elements' must be a list of strings")
    if len(set(elements)) != len(elements):
        raise SemiringParseError("duplicate element labels")
    n = len(elements)

    def table(field: str) -> tuple[tuple[int, ...], ...]:
        raw = data[field]
        if not isinstance(raw, list):
            raise SemiringParseError(f"'{field}' must be a list")
        if raw and all(isinstance(v, int) for v in raw):
            if len(raw) != n * n:
                raise SemiringParseError(f"'{field}' flat table must have {n * n} entries")
            rows = [raw[i * n : (i + 1) * n] for i in range(n)]
        else:
            rows = raw
        if len(rows) != n:
            raise SemiringParseError(f"'{field}' must have {n} rows")
        out = []
        for row in rows:
            if not isinstance(row, list) or len(row) != n:
                raise SemiringParseError(f"'{field}' rows must each have {n} entries")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise SemiringParseError(f"'{field}' entry {v!r} is not an element index")
            out.append(tuple(row))
        return tuple(out)

    zero = data.get("zero")
    if zero is not None and (not isinstance(zero, int) or not 0 <= zero < n):
        raise SemiringParseError(f"zero index {zero!r} out of range")
    return FiniteSemiring(tuple(elements), table("add"), table("mul"), zero)
