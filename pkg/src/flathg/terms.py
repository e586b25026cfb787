"""Semiring identities: parsing, evaluation, and two decision procedures.

An identity is a pair of terms over named variables, each term a sum of
products. The brute-force checker enumerates every assignment up to a
budget. The flat checker exploits the collapsing addition of flat semirings:
a sum is non-zero only when all its summands agree on one non-zero value,
so it suffices to search for assignments pinning one side to such a value
and compare the other side there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .semiring import FiniteSemiring, is_flat, multiplicative_zero


class IdentitySyntaxError(ValueError):
    """Raised on malformed identity text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Product:
    factors: tuple["Term", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple["Term", ...]


Term = Variable | Product | Sum


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]


@dataclass(frozen=True)
class CheckResult:
    verdict: str
    counterexample: dict[str, str] | None
    explored: int

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


def _flatten(node: Term) -> Term:
    if isinstance(node, Sum):
        parts: list[Term] = []
        for t in node.terms:
            t = _flatten(t)
            parts.extend(t.terms if isinstance(t, Sum) else [t])
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))
    if isinstance(node, Product):
        parts = []
        for t in node.factors:
            t = _flatten(t)
            parts.extend(t.factors if isinstance(t, Product) else [t])
        return parts[0] if len(parts) == 1 else Product(tuple(parts))
    return node


def _walk_variables(node: Term, seen: list[str]) -> None:
    if isinstance(node, Variable):
        if node.name not in seen:
            seen.append(node.name)
    elif isinstance(node, Product):
        for t in node.factors:
            _walk_variables(t, seen)
    else:
        for t in node.terms:
            _walk_variables(t, seen)


def make_identity(lhs: Term, rhs: Term) -> Identity:
    """Normalize both sides and collect variables in first-occurrence order."""
    lhs, rhs = _flatten(lhs), _flatten(rhs)
    names: list[str] = []
    _walk_variables(lhs, names)
    _walk_variables(rhs, names)
    return Identity(lhs, rhs, tuple(names))


_TOKEN_CHARS = set("abcdefghijklmnopqrstuvwxyz0123456789")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch in "+*()=":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.islower() and ch.isalpha():
            j = i + 1
            while j < len(text) and text[j] in _TOKEN_CHARS:
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        raise IdentitySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            raise IdentitySyntaxError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.pos += 1
        return tok

    def expr(self) -> Term:
        terms = [self.product()]
        while self.peek()[0] == "+":
            self.take("+")
            terms.append(self.product())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def product(self) -> Term:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take("*")
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Term:
        kind, value, pos = self.peek()
        if kind == "ident":
            self.take("ident")
            return Variable(value)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        raise IdentitySyntaxError(f"expected a variable or '(', found {value or 'end of input'!r}", pos)


def parse_identity(text: str) -> Identity:
    """Parse "lhs = rhs" where each side is a sum of '*'-separated products.

    Variables match [a-z][a-z0-9]*; juxtaposition is not multiplication.
    """
    parser = _Parser(_tokenize(text))
    lhs = parser.expr()
    parser.take("=")
    rhs = parser.expr()
    parser.take("end")
    return make_identity(lhs, rhs)


def parse_identity_file(text: str) -> list[Identity]:
    """One identity per line; blank lines and '#' comment lines are skipped."""
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append(parse_identity(stripped))
    return out


def nested_identity(i: int) -> Identity:
    """The i-th member of the ascending chain, on variables x1 .. x(3i+3).

    Each level j contributes three triple products on one side and a product
    of three binomials on the other.
    """
    if i < 1:
        raise ValueError("index must be a positive integer")

    def x(k: int) -> Variable:
        return Variable(f"x{k}")

    monomials: list[Term] = []
    binomial_products: list[Term] = []
    for j in range(1, i + 1):
        a, b, c = 3 * j - 2, 3 * j - 1, 3 * j
        monomials.append(Product((x(b), x(c + 3), x(a))))
        monomials.append(Product((x(a), x(c + 2), x(c))))
        monomials.append(Product((x(c), x(c + 1), x(b))))
        binomial_products.append(
            Product((Sum((x(b), x(c + 2))), Sum((x(a), x(c + 1))), Sum((x(c), x(c + 3)))))
        )
    return make_identity(Sum(tuple(monomials)), Sum(tuple(binomial_products)))


def builtin_identity(key: str) -> Identity:
    """Resolve a registry key: eq3.1, eq4.1 .. eq4.4, or nested:i."""
    fixed = {
        "eq3.1": "x1*x2*x3 + x3*x4*x5 + x5*x6*x1 = (x1+x4)*(x2+x5)*(x3+x6)",
        "eq4.4": "x1*x2*x3*x4 = y1*y2*y3*y4",
    }
    if key in fixed:
        return parse_identity(fixed[key])
    if key in ("eq4.1", "eq4.2", "eq4.3"):
        return nested_identity(int(key[-1]))
    if key.startswith("nested:"):
        suffix = key.split(":", 1)[1]
        if not suffix.isdigit() or int(suffix) < 1:
            raise KeyError(f"unknown identity {key!r}")
        return nested_identity(int(suffix))
    raise KeyError(f"unknown identity {key!r}")


def _compile(node: Term, var_slot: dict[str, int]) -> list[tuple[str, int]]:
    """Postfix program: ("var", slot) pushes, ("mul"/"add", k) folds k values."""
    program: list[tuple[str, int]] = []

    def emit(t: Term) -> None:
        if isinstance(t, Variable):
            program.append(("var", var_slot[t.name]))
        elif isinstance(t, Product):
            for f in t.factors:
                emit(f)
            if len(t.factors) > 1:
                program.append(("mul", len(t.factors)))
        else:
            for s in t.terms:
                emit(s)
            if len(t.terms) > 1:
                program.append(("add", len(t.terms)))

    emit(node)
    return program


def _run(program: list[tuple[str, int]], assignment: tuple[int, ...], s: FiniteSemiring) -> int:
    stack: list[int] = []
    mul, add = s.mul, s.add
    for op, arg in program:
        if op == "var":
            stack.append(assignment[arg])
        elif op == "mul":
            acc = stack[-arg]
            for v in stack[-arg + 1 :]:
                acc = mul[acc][v]
            del stack[-arg:]
            stack.append(acc)
        else:
            acc = stack[-arg]
            for v in stack[-arg + 1 :]:
                acc = add[acc][v]
            del stack[-arg:]
            stack.append(acc)
    return stack[0]


def eval_term(t: Term, assignment: dict[str, str], s: FiniteSemiring) -> str:
    """Evaluate a term under a label-valued assignment, returning a label."""
    t = _flatten(t)
    names: list[str] = []
    _walk_variables(t, names)
    missing = [v for v in names if v not in assignment]
    if missing:
        raise ValueError(f"unbound variable {missing[0]!r}")
    slots = {v: i for i, v in enumerate(names)}
    packed = tuple(s.index(assignment[v]) for v in names)
    return s.elements[_run(_compile(t, slots), packed, s)]


def check_identity_bruteforce(
    s: FiniteSemiring, ident: Identity, budget: int = 10_000_000
) -> CheckResult:
    """Exhaust every assignment; first counterexample in lexicographic order.

    Refuses outright when |S|^variables exceeds the budget, naming the flat
    checker as the alternative.
    """
    ident = make_identity(ident.lhs, ident.rhs)
    nvars = len(ident.variables)
    total = s.size**nvars
    if total > budget:
        raise ValueError(
            f"budget exceeded: {s.size}^{nvars} = {total} evaluations > {budget}; "
            "use the flat checker"
        )
    slots = {v: i for i, v in enumerate(ident.variables)}
    left = _compile(ident.lhs, slots)
    right = _compile(ident.rhs, slots)
    explored = 0
    for assignment in itertools.product(range(s.size), repeat=nvars):
        explored += 1
        if _run(left, assignment, s) != _run(right, assignment, s):
            witness = {v: s.elements[assignment[i]] for i, v in enumerate(ident.variables)}
            return CheckResult("fails", witness, explored)
    return CheckResult("holds", None, explored)


def _monomials(node: Term) -> list[tuple[str, ...]]:
    """Expand a normalized term into its sum-of-products monomial list."""
    if isinstance(node, Variable):
        return [(node.name,)]
    if isinstance(node, Sum):
        out: list[tuple[str, ...]] = []
        for t in node.terms:
            out.extend(_monomials(t))
        return out
    parts = [_monomials(f) for f in node.factors]
    return [
        tuple(v for mono in chunk for v in mono)
        for chunk in itertools.product(*parts)
    ]


class _SideSearch:
    """Backtracking enumeration of assignments that pin one side to a value.

    Every monomial of the side must evaluate to the target; remaining
    variables of the identity range free. On commutative carriers (all the
    builtin ones) a running partial product per monomial prunes any branch
    that already hit zero; otherwise completed monomials are re-evaluated in
    their written order, which is slower but order-faithful.
    """

    def __init__(self, s: FiniteSemiring, side_monomials, all_variables):
        self.s = s
        self.zero = multiplicative_zero(s)
        self.commutative = all(
            s.mul[i][j] == s.mul[j][i] for i in range(s.size) for j in range(i)
        )
        self.monomials = side_monomials
        counts: dict[str, int] = {}
        for mono in side_monomials:
            for v in mono:
                counts[v] = counts.get(v, 0) + 1
        side_vars = sorted(counts, key=lambda v: (-counts[v], all_variables.index(v)))
        free_vars = [v for v in all_variables if v not in counts]
        self.order = side_vars + free_vars
        self.n_side = len(side_vars)
        self.slot = {v: i for i, v in enumerate(self.order)}
        self.var_monos = {
            self.slot[v]: [
                (m, mono.count(v)) for m, mono in enumerate(side_monomials) if v in mono
            ]
            for v in counts
        }
        self.mono_size = [len(m) for m in side_monomials]
        self.all_variables = all_variables
        self.explored = 0

    def search(self, target: int):
        assignment = [0] * len(self.order)
        partial: list[int | None] = [None] * len(self.monomials)
        filled = [0] * len(self.monomials)
        yield from self._assign(0, target, assignment, partial, filled)

    def _eval_monomial(self, mono: tuple[str, ...], assignment: list[int]) -> int:
        acc: int | None = None
        for v in mono:
            value = assignment[self.slot[v]]
            acc = value if acc is None else self.s.mul[acc][value]
        return acc

    def _assign(self, depth, target, assignment, partial, filled):
        if depth == len(self.order):
            yield tuple(assignment)
            return
        slot = depth
        constrained = slot < self.n_side
        touches = self.var_monos.get(slot, ())
        mul = self.s.mul
        for value in range(self.s.size):
            if constrained and value == self.zero:
                continue
            assignment[slot] = value
            saved = [(m, partial[m], filled[m]) for m, _ in touches]
            ok = True
            for m, mult in touches:
                filled[m] += mult
                if self.commutative:
                    prod = partial[m]
                    for _ in range(mult):
                        prod = value if prod is None else mul[prod][value]
                    partial[m] = prod
                    if filled[m] == self.mono_size[m]:
                        if prod != target:
                            ok = False
                            break
                    elif prod == self.zero:
                        ok = False
                        break
                elif filled[m] == self.mono_size[m]:
                    if self._eval_monomial(self.monomials[m], assignment) != target:
                        ok = False
                        break
            if ok:
                self.explored += 1
                yield from self._assign(depth + 1, target, assignment, partial, filled)
            for m, p, f in saved:
                partial[m] = p
                filled[m] = f
        return

    def full_assignment(self, packed: tuple[int, ...]) -> tuple[int, ...]:
        """Reorder from search order back to identity variable order."""
        by_name = {v: packed[self.slot[v]] for v in self.order}
        return tuple(by_name[v] for v in self.all_variables)


def check_identity_flat(s: FiniteSemiring, ident: Identity) -> CheckResult:
    """Decide an identity on a flat semiring without full enumeration.

    For each side and each non-zero target value, enumerate the assignments
    making every monomial of that side equal the target (the side then sums
    to the target), and evaluate the opposite side at each hit. The identity
    fails precisely when some hit disagrees.
    """
    if not is_flat(s):
        raise ValueError("flat checker requires a flat semiring; use brute force")
    ident = make_identity(ident.lhs, ident.rhs)
    slots = {v: i for i, v in enumerate(ident.variables)}
    programs = {
        "lhs": _compile(ident.lhs, slots),
        "rhs": _compile(ident.rhs, slots),
    }
    monomials = {"lhs": _monomials(ident.lhs), "rhs": _monomials(ident.rhs)}
    zero = multiplicative_zero(s)
    explored = 0
    for side, other in (("lhs", "rhs"), ("rhs", "lhs")):
        search = _SideSearch(s, monomials[side], list(ident.variables))
        for target in range(s.size):
            if target == zero:
                continue
            for packed in search.search(target):
                full = search.full_assignment(packed)
                if _run(programs[other], full, s) != target:
                    witness = {
                        v: s.elements[full[i]] for i, v in enumerate(ident.variables)
                    }
                    return CheckResult("fails", witness, explored + search.explored)
        explored += search.explored
    return CheckResult("holds", None, explored)
