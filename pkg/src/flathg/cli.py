"""Batch front door: validate inputs, run checks and witnesses, emit reports.

Exit codes: 0 when every claim checked out, 1 when some claim failed
(an identity fails, a coloring is stuck, a witness does not verify),
2 on usage or input problems (unknown subcommand, unreadable file,
exceeded budget). Output is plain text by default; `--format structured`
switches to line-delimited JSON records with stable field order.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .coloring import enumerate_strong_colorings, extends, is_2_robust
from .constructions import (
    CLOSURE_CAP_DEFAULT,
    COLORINGS_CAP_DEFAULT,
    WITNESS_KINDS,
    format_witness_report,
    verify_witness,
)
from .hg_semiring import build_semiring
from .hypergraph import (
    Hypergraph,
    HypergraphParseError,
    family,
    format_hypergraph,
    parse_hypergraph,
    validate,
)
from .semiring import (
    FiniteSemiring,
    SemiringParseError,
    format_semiring,
    is_flat,
    parse_semiring,
    subdirect_irreducibility_certificate,
)
from .terms import (
    IdentitySyntaxError,
    builtin_identity,
    check_identity_bruteforce,
    check_identity_flat,
    parse_identity,
)
from .words import build_sc, builtin_s7

BUDGET_EVALS_DEFAULT = 10_000_000


class CliInputError(Exception):
    """Anything that should stop the run with exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    budget_evals: int
    closure_cap: int
    colorings_cap: int
    workers: int
    format: str
    export: str | None


class Reporter:
    def __init__(self, fmt: str):
        self.structured = fmt == "structured"
        self.exported: list[str] = []

    def record(self, fields: dict, text: str) -> None:
        if self.structured:
            line = json.dumps(fields)
            print(line)
            self.exported.append(line)
        else:
            print(text)
            self.exported.append(text)

    def document(self, text: str) -> None:
        """A preformatted block that is its own output in both formats."""
        print(text, end="" if text.endswith("\n") else "\n")
        self.exported.append(text)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _add_common_flags(parser: argparse.ArgumentParser, with_defaults: bool) -> None:
    def default(value):
        return value if with_defaults else argparse.SUPPRESS

    parser.add_argument("--budget-evals", type=_positive, default=default(BUDGET_EVALS_DEFAULT),
                        help="cap on brute-force identity evaluations")
    parser.add_argument("--closure-cap", type=_positive, default=default(CLOSURE_CAP_DEFAULT),
                        help="cap on generated subsemiring size")
    parser.add_argument("--colorings-cap", type=_positive, default=default(COLORINGS_CAP_DEFAULT),
                        help="cap on enumerated strong colorings")
    parser.add_argument("--workers", type=_positive, default=default(1),
                        help="reserved; execution is sequential and deterministic")
    parser.add_argument("--format", choices=("text", "structured"), default=default("text"),
                        help="text lines or line-delimited JSON records")
    parser.add_argument("--export", metavar="PATH", default=default(None),
                        help="also write the command's primary artifact to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flathg",
        description="Flat semirings from 3-hypergraphs: identities, colorings, witnesses.",
    )
    _add_common_flags(parser, with_defaults=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def subparser(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common_flags(p, with_defaults=False)
        return p

    p = subparser("validate", "check a hypergraph against the admissibility rules")
    p.add_argument("source", help="hypergraph file, or family:<kind>:<i>")

    p = subparser("semiring", "build the semiring of a hypergraph")
    p.add_argument("source", help="hypergraph file, or family:<kind>:<i>")

    p = subparser("check", "check an identity in a semiring")
    p.add_argument("subject", help="semiring/hypergraph file, builtin:<name>, or family:<kind>:<i>")
    p.add_argument("identity", help="registry key, literal 'lhs = rhs', or identity file")

    p = subparser("color", "strong 3-coloring questions")
    p.add_argument("source", help="hypergraph file, or family:<kind>:<i>")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true", help="list all strong colorings")
    mode.add_argument("--robust", action="store_true", help="decide 2-robustness")
    mode.add_argument("--extend", metavar="PARTIAL",
                      help="partial assignment like u1=0,u4=1")

    p = subparser("witness", "run a witness pipeline")
    p.add_argument("kind", help="one of: " + ", ".join(WITNESS_KINDS))
    p.add_argument("params", nargs="*",
                   help="hypergraph source, index, or leaf case, depending on kind")

    p = subparser("family", "print a family hypergraph")
    p.add_argument("kind")
    p.add_argument("index", type=int)

    subparser("suite", "run the full acceptance battery")
    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read file: {path} ({exc.strerror})") from exc


def _family_from_token(token: str) -> Hypergraph:
    parts = token.split(":")
    if len(parts) != 3 or parts[0] != "family":
        raise CliInputError(f"unknown builtin: {token}")
    try:
        index = int(parts[2])
    except ValueError:
        raise CliInputError(f"family index must be an integer: {parts[2]!r}")
    try:
        return family(parts[1], index)
    except ValueError as exc:
        raise CliInputError(str(exc))


def _load_hypergraph(source: str) -> Hypergraph:
    token = source[len("builtin:"):] if source.startswith("builtin:") else source
    if token.startswith("family:"):
        return _family_from_token(token)
    if source.startswith("builtin:"):
        raise CliInputError(f"unknown builtin: {source} (this command needs a hypergraph)")
    text = _read_file(source)
    try:
        return parse_hypergraph(text)
    except HypergraphParseError as exc:
        raise CliInputError(f"bad hypergraph file {source}: {exc}")


_BUILTIN_SEMIRINGS = {
    "sc_abc": lambda: build_sc(["abc"]),
    "sc_abcd": lambda: build_sc(["abcd"]),
    "s7": builtin_s7,
}


def _load_subject(source: str) -> tuple[str, FiniteSemiring]:
    """Resolve the `check` subject to a semiring, building one if needed."""
    token = source[len("builtin:"):] if source.startswith("builtin:") else source
    if token in _BUILTIN_SEMIRINGS:
        return token, _BUILTIN_SEMIRINGS[token]()
    if token.startswith("family:"):
        h = _family_from_token(token)
        return token, build_semiring(h).exported
    if source.startswith("builtin:"):
        raise CliInputError(f"unknown builtin: {source}")
    text = _read_file(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"bad input file {source}: {exc}")
    if isinstance(doc, dict) and "vertices" in doc:
        try:
            h = parse_hypergraph(text)
        except HypergraphParseError as exc:
            raise CliInputError(f"bad hypergraph file {source}: {exc}")
        try:
            return source, build_semiring(h).exported
        except ValueError as exc:
            raise CliInputError(str(exc))
    try:
        return source, parse_semiring(text)
    except SemiringParseError as exc:
        raise CliInputError(f"bad semiring file {source}: {exc}")


def _load_identities(token: str) -> list[tuple[str, object]]:
    try:
        return [(token, builtin_identity(token))]
    except KeyError:
        pass
    if "=" in token:
        try:
            return [(token, parse_identity(token))]
        except IdentitySyntaxError as exc:
            raise CliInputError(f"bad identity {token!r}: {exc}")
    text = _read_file(token)
    try:
        idents = [parse_identity(line) for line in text.splitlines()
                  if line.strip() and not line.lstrip().startswith("#")]
    except IdentitySyntaxError as exc:
        raise CliInputError(f"bad identity file {token}: {exc}")
    if not idents:
        raise CliInputError(f"no identities found in {token}")
    return [(f"{token}:{i + 1}", ident) for i, ident in enumerate(idents)]


def _fmt_offender(item) -> str:
    if isinstance(item, str):
        return item
    parts = [_fmt_offender(p) for p in item]
    if all(isinstance(p, str) for p in item):
        return "{" + ",".join(parts) + "}"
    return " and ".join(parts)


def _cmd_validate(args, config: RunConfig, out: Reporter) -> int:
    h = _load_hypergraph(args.source)
    report = validate(h)
    fields = {
        "command": "validate",
        "source": args.source,
        "valid": report.valid,
        "violations": [
            {"rule": rule, "offenders": list(offenders)}
            for rule, offenders in report.violations
        ],
    }
    if report.valid:
        out.record(fields, f"valid: {len(h.vertices)} vertices, {len(h.edges)} edges")
        return 0
    lines = ["invalid:"]
    for rule, offenders in report.violations:
        rendered = ", ".join(_fmt_offender(o) for o in offenders)
        lines.append(f"  {rule}: {rendered}" if rendered else f"  {rule}")
    out.record(fields, "\n".join(lines))
    return 1


def _cmd_semiring(args, config: RunConfig, out: Reporter) -> int:
    h = _load_hypergraph(args.source)
    try:
        s = build_semiring(h)
    except ValueError as exc:
        raise CliInputError(str(exc))
    exported = s.exported
    cert = subdirect_irreducibility_certificate(exported)
    generators = sum(1 for e in s.elements if e.kind == "gen")
    pairs = sum(1 for e in s.elements if e.kind == "pair")
    fields = {
        "command": "semiring",
        "source": args.source,
        "size": exported.size,
        "generators": generators,
        "pair_classes": pairs,
        "flat": is_flat(exported),
        "certificate_granted": cert.granted,
        "annihilators": list(cert.annihilators),
        "degenerate": s.degenerate_no_top_triple,
    }
    text = (
        f"{exported.size} elements: {generators} generators, {pairs} pair classes, "
        f"zero and top\ncertificate: {'granted' if cert.granted else 'not granted'}"
        f" (annihilators: {', '.join(cert.annihilators) or 'none'})"
    )
    if s.degenerate_no_top_triple:
        text += "\nnote: no 3-edge, top is never a product"
    out.record(fields, text)
    if config.export:
        with open(config.export, "w", encoding="utf-8") as fh:
            fh.write(format_semiring(exported))
    return 0


def _cmd_check(args, config: RunConfig, out: Reporter) -> int:
    name, s = _load_subject(args.subject)
    idents = _load_identities(args.identity)
    worst = 0
    for label, ident in idents:
        if is_flat(s):
            result = check_identity_flat(s, ident)
            method = "flat"
        else:
            try:
                result = check_identity_bruteforce(s, ident, budget=config.budget_evals)
            except ValueError as exc:
                raise CliInputError(str(exc))
            method = "brute-force"
        fields = {
            "command": "check",
            "subject": name,
            "identity": label,
            "verdict": result.verdict,
            "method": method,
            "explored": result.explored,
            "counterexample": result.counterexample,
        }
        if result.holds:
            out.record(fields, "holds")
        else:
            cex = " ".join(
                f"{k}={result.counterexample[k]}" for k in sorted(result.counterexample)
            )
            out.record(fields, f"fails: {cex}")
            worst = 1
    return worst


def _parse_partial(text: str) -> dict[str, int]:
    partial: dict[str, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CliInputError(f"bad partial assignment entry: {chunk!r}")
        vertex, _, color = chunk.partition("=")
        try:
            partial[vertex.strip()] = int(color)
        except ValueError:
            raise CliInputError(f"bad color in partial assignment: {chunk!r}")
    if not partial:
        raise CliInputError("empty partial assignment")
    return partial


def _cmd_color(args, config: RunConfig, out: Reporter) -> int:
    h = _load_hypergraph(args.source)
    if args.robust:
        report = is_2_robust(h)
        fields = {
            "command": "color",
            "source": args.source,
            "mode": "robust",
            "robust": report.robust,
        }
        if report.robust:
            out.record(fields, "2-robust")
            return 0
        u, v = report.failure.pair
        cu, cv = report.failure.assignment
        fields["pair"] = [u, v]
        fields["assignment"] = [cu, cv]
        out.record(fields, f"not 2-robust: pair {u},{v} with colors {cu},{cv} does not extend")
        return 1
    if args.extend is not None:
        partial = _parse_partial(args.extend)
        try:
            okay = extends(h, partial)
        except ValueError as exc:
            raise CliInputError(str(exc))
        fields = {
            "command": "color",
            "source": args.source,
            "mode": "extend",
            "partial": partial,
            "extends": okay,
        }
        out.record(fields, "extends" if okay else "does not extend")
        return 0 if okay else 1
    try:
        colorings = enumerate_strong_colorings(h, cap=config.colorings_cap)
    except ValueError as exc:
        raise CliInputError(str(exc))
    if args.enumerate:
        for phi in colorings:
            fields = {
                "command": "color",
                "source": args.source,
                "mode": "enumerate",
                "coloring": phi,
            }
            out.record(fields, " ".join(f"{v}={phi[v]}" for v in h.vertices))
        summary = {
            "command": "color",
            "source": args.source,
            "mode": "enumerate",
            "count": len(colorings),
        }
        out.record(summary, f"{len(colorings)} strong colorings")
    else:
        fields = {
            "command": "color",
            "source": args.source,
            "mode": "count",
            "count": len(colorings),
            "colorable": bool(colorings),
        }
        verdict = "strongly 3-colorable" if colorings else "not strongly 3-colorable"
        out.record(fields, f"{verdict}: {len(colorings)} colorings")
    return 0 if colorings else 1


def _cmd_witness(args, config: RunConfig, out: Reporter) -> int:
    kind = args.kind
    if kind not in WITNESS_KINDS:
        raise CliInputError(f"unknown witness kind: {kind}")
    params = list(args.params)
    kwargs = {"colorings_cap": config.colorings_cap, "closure_cap": config.closure_cap}
    if kind in ("beam_step", "nested_chain"):
        if len(params) != 1:
            raise CliInputError(f"{kind} takes exactly one index argument")
        try:
            kwargs["index"] = int(params[0])
        except ValueError:
            raise CliInputError(f"{kind} index must be an integer: {params[0]!r}")
    elif kind in ("uniform_reduction", "strongcolor_equiv"):
        if len(params) != 1:
            raise CliInputError(f"{kind} takes exactly one hypergraph argument")
        kwargs["hypergraph"] = _load_hypergraph(params[0])
    elif kind == "leaf_removal":
        if len(params) != 2:
            raise CliInputError("leaf_removal takes a hypergraph and a leaf case")
        kwargs["hypergraph"] = _load_hypergraph(params[0])
        kwargs["leaf_case"] = params[1]
    elif params:
        raise CliInputError(f"{kind} takes no arguments")
    try:
        report = verify_witness(kind, **kwargs)
    except ValueError as exc:
        raise CliInputError(str(exc))
    rendered = format_witness_report(report)
    if out.structured:
        fields = {
            "command": "witness",
            "kind": report.kind,
            "claim": report.claim,
            "ok": report.ok,
            "power_arity": report.power_arity,
            "closure_size": report.closure_size,
            "ideal_size": report.ideal_size,
            "quotient_size": report.quotient_size,
            "generators": list(report.generators),
            "stages": [
                {"name": st.name, "ok": st.ok, "detail": st.detail} for st in report.stages
            ],
            "failure_stage": report.failure_stage,
            "isomorphism": None
            if report.isomorphism is None
            else {src: dst for src, dst in report.isomorphism},
            "notes": list(report.notes),
        }
        out.record(fields, rendered)
    else:
        out.document(rendered)
    if config.export:
        with open(config.export, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return 0 if report.ok else 1


def _cmd_family(args, config: RunConfig, out: Reporter) -> int:
    try:
        h = family(args.kind, args.index)
    except ValueError as exc:
        raise CliInputError(str(exc))
    rendered = format_hypergraph(h)
    if out.structured:
        out.record(
            {
                "command": "family",
                "kind": args.kind,
                "index": args.index,
                "vertices": list(h.vertices),
                "edges": [list(e) for e in h.edge_list()],
            },
            rendered,
        )
    else:
        out.document(rendered)
    if config.export:
        with open(config.export, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return 0


def _cmd_suite(args, config: RunConfig, out: Reporter) -> int:
    from .suite import run_suite

    records = run_suite()
    failures = 0
    for r in records:
        fields = {"section": r.section, "label": r.label, "ok": r.ok, "detail": r.detail}
        mark = "PASS" if r.ok else "FAIL"
        out.record(fields, f"{mark} [{r.section}] {r.label}: {r.detail}")
        if not r.ok:
            failures += 1
    summary = {
        "section": "summary",
        "label": "acceptance battery",
        "ok": failures == 0,
        "detail": f"passed={len(records) - failures} failed={failures}",
    }
    out.record(
        summary,
        f"{len(records) - failures} passed, {failures} failed",
    )
    if config.export:
        with open(config.export, "w", encoding="utf-8") as fh:
            fh.write("\n".join(out.exported) + "\n")
    return 0 if failures == 0 else 1


_HANDLERS = {
    "validate": _cmd_validate,
    "semiring": _cmd_semiring,
    "check": _cmd_check,
    "color": _cmd_color,
    "witness": _cmd_witness,
    "family": _cmd_family,
    "suite": _cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("flathg: error: a subcommand is required", file=sys.stderr)
        return 2
    config = RunConfig(
        command=args.command,
        budget_evals=args.budget_evals,
        closure_cap=args.closure_cap,
        colorings_cap=args.colorings_cap,
        workers=args.workers,
        format=args.format,
        export=args.export,
    )
    out = Reporter(config.format)
    try:
        return _HANDLERS[args.command](args, config, out)
    except CliInputError as exc:
        print(f"flathg: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"flathg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
