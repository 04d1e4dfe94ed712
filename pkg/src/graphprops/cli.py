"""Command-line entry point: enumerate, member, partition, forbidden, verify."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .decomp import DecompError, check_gen0, check_max_char, factorise_hereditary, m_star
from .factorlab import (
    FactorlabError,
    intersection_graph,
    intersection_representation,
    primitive_factorisation_geq,
    theorem2_oo_suite,
    theorem2_witness_suite,
)
from .forbidden import (
    ForbiddenError,
    ForbiddenSet,
    check_prop8,
    check_prop9,
    check_prop10,
    minimal_forbidden_induced,
    minimal_forbidden_subgraph,
)
from .graphcore import (
    GraphError,
    canonical_form,
    complete_graph,
    contains_subgraph,
    from_graph6,
    is_isomorphic,
    path_graph,
    to_graph6,
)
from .partition import PartitionError, find_partition
from .properties import (
    O,
    PlusG,
    Product,
    Property,
    PropertyError,
    UnionOf,
    dump_properties,
    load_properties,
    materialize,
    member,
    parse_property,
)
from .universe import MAX_UNIVERSE, enumerate_universe

REPORT_SCHEMA = "graphprops.report/1"
SUITES = ("theorem2", "prop1", "lemma5", "lemma6", "theorem7", "prop8", "prop9", "prop10", "roundtrips")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- report assembly -----------------------------------------------------------------


class Report:
    def __init__(self, suite: str, params: dict) -> None:
        self.suite = suite
        self.params = params
        self.checks: list[dict] = []

    def add(self, name: str, passed: bool, detail: object = None) -> None:
        self.checks.append({"name": name, "verdict": "pass" if passed else "fail", "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["verdict"] == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "params": self.params,
            "checks": self.checks,
            "pass": self.passed,
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite} {json.dumps(self.params, sort_keys=True)}"]
        for c in self.checks:
            lines.append(f"  {c['verdict'].upper():4} {c['name']}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} ({sum(c['verdict'] == 'pass' for c in self.checks)}/{len(self.checks)})")
        return "\n".join(lines) + "\n"


def _render(report: Report, fmt: str) -> str:
    if fmt == "text":
        return report.to_text()
    return json.dumps(report.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- argument helpers -------------------------------------------------------------------


def _universe(n: int):
    if not 1 <= n <= MAX_UNIVERSE:
        raise UsageError(f"--n must be between 1 and {MAX_UNIVERSE}")
    return enumerate_universe(n)


def _defs(path: str | None) -> dict[str, Property]:
    if path is None:
        return {}
    try:
        return load_properties(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read property definitions: {exc}") from exc


def _property(text: str | None, defs: dict[str, Property], default: str | None = None) -> tuple[str, Property]:
    text = text if text is not None else default
    if text is None:
        raise UsageError("--property is required")
    return text, parse_property(text, defs)


def _graph(text: str):
    return from_graph6(text.strip())


def _read_forbidden(path: str, default_relation: str) -> ForbiddenSet:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read forbidden set: {exc}") from exc
    return ForbiddenSet.from_text(text, default_relation=default_relation)


# -- verify suites ------------------------------------------------------------------------


def _suite_theorem2(args, defs) -> Report:
    r, s, n = args.r or 2, args.s or 2, args.n or 7
    u = _universe(n)
    rep = Report("theorem2", {"r": r, "s": s, "n": n})
    wit = theorem2_witness_suite(r, s, u)
    for c in wit.checks:
        rep.add(f"witness:{c.name}", c.passed, c.to_json())
    if r <= s:
        oo = theorem2_oo_suite(r, s, u)
        for c in oo.checks:
            rep.add(f"oo:{c.name}", c.passed, c.to_json())
    return rep


def _default_geq_cases() -> list[tuple[str, Property]]:
    p3, k3, k2 = path_graph(3), complete_graph(3), complete_graph(2)
    return [
        ("plus(P3)|plus(K3)", UnionOf((PlusG(p3), PlusG(k3)))),
        ("plus(K2)", PlusG(k2)),
    ]


def _suite_prop1(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    cases = [_property(args.property, defs)] if args.property else _default_geq_cases()
    rep = Report("prop1", {"n": n, "properties": [name for name, _ in cases]})
    for name, p in cases:
        f = primitive_factorisation_geq(p, u)
        rep.add(f"{name}:product_equal", f.product_equal.holds, f.to_json())
        rep.add(f"{name}:primitive", all(f.primitive), f.primitive)
        rep.add(f"{name}:minimal", f.minimal, f.to_json()["drop_witnesses"])
    return rep


def _factors(p: Property) -> list[Property]:
    return list(p.factors) if isinstance(p, Product) else [p]


def _suite_lemma5(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    name, p = _property(args.property, defs, default="O*O")
    props = _factors(p)
    rep = Report("lemma5", {"n": n, "property": name})
    graphs = m_star(p, u)
    rep.add("m_star_nonempty", bool(graphs), len(graphs))
    for g in graphs:
        res = check_max_char(g, props, u)
        rep.add(f"max_char:{to_graph6(g)}", res.holds, res.to_json())
    return rep


def _suite_lemma6(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    name, p = _property(args.property, defs, default="bipartite")
    small = [g for g in m_star(p, u) if g.n < n]
    view = materialize(p, u)
    rep = Report("lemma6", {"n": n, "property": name})
    pairs = 0
    failures = []
    for g in small:
        for h in view.members():
            if h.n < g.n or not contains_subgraph(h, g):
                continue
            pairs += 1
            res = check_gen0(g, h, p, u)
            if not res.holds:
                failures.append(res.to_json())
    rep.add("pairs_checked", pairs > 0, pairs)
    rep.add("gen0_holds", not failures, failures[:5])
    return rep


def _suite_theorem7(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    name, p = _property(args.property, defs, default="bipartite")
    f = factorise_hereditary(p, u, property_id=name)
    rep = Report("theorem7", {"n": n, "property": name})
    rep.add("factor_count", len(f.factors) == f.dc, {"dc": f.dc, "factors": len(f.factors)})
    rep.add("product_equal", f.product_equal.holds, f.product_equal.to_json())
    rep.add("factors_indecomposable", all(f.indecomposable), f.indecomposable)
    if f.additive is not None:
        rep.add("factors_additive", all(v.holds for v in f.additive), [v.to_json() for v in f.additive])
    rep.add("report", f.ok, f.to_json())
    return rep


def _suite_prop8(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    name, p = _property(args.property, defs, default="forests")
    res = check_prop8(p, u)
    rep = Report("prop8", {"n": n, "property": name})
    rep.add("consistent", res.consistent, res.to_json())
    return rep


def _suite_prop9(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    if args.forbidden:
        fsub = _read_forbidden(args.forbidden, "subgraph")
        label = args.forbidden
    else:
        label, p = _property(args.property, defs, default="forests")
        fsub = minimal_forbidden_subgraph(p, u)
    rep = Report("prop9", {"n": n, "source": label})
    res = check_prop9(fsub, u)
    rep.add("criterion_matches_direct", res.agree, res.to_json())
    return rep


def _suite_prop10(args, defs) -> Report:
    n = args.n or 6
    u = _universe(n)
    if args.forbidden:
        fle = _read_forbidden(args.forbidden, "induced")
        label = args.forbidden
    else:
        label, p = _property(args.property, defs, default="forests")
        fle = minimal_forbidden_induced(p, u)
    rep = Report("prop10", {"n": n, "source": label})
    res = check_prop10(fle, u)
    detail = res.to_json()
    detail["hereditary"] = res.direct
    rep.add("criterion_matches_direct", res.agree, detail)
    if "subgraph_description_matches" in res.extra:
        rep.add("subgraph_description_matches", res.extra["subgraph_description_matches"], None)
    return rep


def _suite_roundtrips(args, defs) -> Report:
    n = args.n or 5
    u = _universe(n)
    rep = Report("roundtrips", {"n": n})
    g6_bad, canon_bad, inter_bad = [], [], []
    for g in u.graphs:
        code = to_graph6(g)
        if canonical_form(from_graph6(code)) != g:
            g6_bad.append(code)
        relabelled = g.relabel(list(reversed(range(g.n))))
        if canonical_form(relabelled) != g:
            canon_bad.append(code)
        if not is_isomorphic(intersection_graph(intersection_representation(g)), g):
            inter_bad.append(code)
    rep.add("graph6", not g6_bad, {"graphs": len(u.graphs), "failures": g6_bad})
    rep.add("canonical_form", not canon_bad, {"graphs": len(u.graphs), "failures": canon_bad})
    rep.add("intersection", not inter_bad, {"graphs": len(u.graphs), "failures": inter_bad})
    defs_all = dict(defs) or {"O": O}
    back = load_properties(dump_properties(defs_all))
    rep.add("property_definitions", back == defs_all, sorted(defs_all))
    return rep


SUITE_RUNNERS: dict[str, Callable] = {
    "theorem2": _suite_theorem2,
    "prop1": _suite_prop1,
    "lemma5": _suite_lemma5,
    "lemma6": _suite_lemma6,
    "theorem7": _suite_theorem7,
    "prop8": _suite_prop8,
    "prop9": _suite_prop9,
    "prop10": _suite_prop10,
    "roundtrips": _suite_roundtrips,
}


# -- commands ---------------------------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    u = _universe(args.n)
    _emit(u.to_graph6_lines(), args.out)
    return EXIT_OK


def cmd_member(args) -> int:
    defs = _defs(args.defs)
    p = parse_property(args.property_id, defs)
    g = _graph(args.graph6)
    verdict = member(p, g)
    _emit(f"{'true' if verdict else 'false'}\n", args.out)
    return EXIT_OK


def cmd_partition(args) -> int:
    defs = _defs(args.defs)
    p = parse_property(args.property_id, defs)
    g = _graph(args.graph6)
    cert = find_partition(g, _factors(p))
    payload = {"member": cert is not None, "certificate": cert.to_json() if cert else None}
    _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_forbidden(args) -> int:
    defs = _defs(args.defs)
    _, p = _property(args.property, defs)
    u = _universe(args.n)
    fs = minimal_forbidden_induced(p, u) if args.relation == "induced" else minimal_forbidden_subgraph(p, u)
    _emit(fs.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    defs = _defs(args.defs)
    report = SUITE_RUNNERS[args.suite](args, defs)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphprops", description="Executable algebra of graph properties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--defs", help="property definitions file (JSON)")

    p = sub.add_parser("enumerate", help="list all graphs of order <= n as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("member", help="decide membership of one graph")
    p.add_argument("property_id")
    p.add_argument("graph6")
    common(p)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("partition", help="find a partition certificate for a product")
    p.add_argument("property_id")
    p.add_argument("graph6")
    common(p)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("forbidden", help="minimal forbidden graphs within a universe")
    p.add_argument("--property", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--relation", choices=("induced", "subgraph"), default="induced")
    common(p)
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("verify", help="run a verification suite and emit a report")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--property")
    p.add_argument("--forbidden", help="graph6 file with an optional '# relation:' header; '-' reads stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (
        UsageError,
        PropertyError,
        GraphError,
        PartitionError,
        ForbiddenError,
        DecompError,
        FactorlabError,
    ) as exc:
        print(f"graphprops: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
