"""Command-line interface.

Subcommands: kappa, cutsets, maximal-cyclics, verify, survey, export-dot.
Group specs: ``cyclic:N``, ``abelian:p^e,p^e,...``, ``quaternion:N``,
``dihedral:N``. Exit codes: 0 ok, 1 mismatch or suite failure, 2 invalid
input, 3 resource limit in strict mode.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connectivity import (
    ResourceLimitError,
    all_minimum_cutsets,
    minimum_cutset,
    vertex_connectivity,
)
from .cyclic import external_overlap, maximal_cyclic_subgroups, nongenerators
from .groups import (
    Group,
    UnsupportedStructureError,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
)
from .harness import ResourceCaps, survey, verify_theorem
from .powergraph import build_power_graph

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3


def parse_group_spec(text: str) -> Group:
    """Build a group from a spec like cyclic:12 or abelian:2^2,3."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"group spec {text!r} needs the form kind:args")
    if kind == "cyclic":
        return make_cyclic(_parse_int(rest, text))
    if kind == "quaternion":
        return make_generalized_quaternion(_parse_int(rest, text))
    if kind == "dihedral":
        return make_dihedral(_parse_int(rest, text))
    if kind == "abelian":
        factors = []
        for chunk in rest.split(","):
            base, caret, exp = chunk.strip().partition("^")
            p = _parse_int(base, text)
            e = _parse_int(exp, text) if caret else 1
            factors.append((p, e))
        return make_abelian(factors)
    raise ValueError(f"unknown group kind {kind!r} in spec {text!r}")


def _parse_int(chunk: str, spec: str) -> int:
    try:
        return int(chunk)
    except ValueError:
        raise ValueError(f"bad integer {chunk!r} in group spec {spec!r}") from None


def _caps(args: argparse.Namespace) -> ResourceCaps:
    return ResourceCaps(
        max_brute_vertices=args.max_brute_vertices,
        max_combinations=args.max_combinations,
    )


def _check_brute_cap(group: Group, args: argparse.Namespace) -> None:
    if group.size > args.max_brute_vertices:
        raise ResourceLimitError(
            f"{group.name}: {group.size} vertices exceed --max-brute-vertices "
            f"{args.max_brute_vertices}"
        )


def _cmd_kappa(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    if group.size < 2:
        raise ValueError("connectivity needs a group of order >= 2")
    _check_brute_cap(group, args)
    graph = build_power_graph(group)
    kappa = vertex_connectivity(graph)
    if graph.is_complete:
        cutset = None
    else:
        cutset = sorted(minimum_cutset(graph).cut)
    if args.json:
        print(json.dumps({"group": group.name, "kappa": kappa, "cutset": cutset}))
    else:
        print(f"group {group.name}  order {group.size}")
        print(f"kappa {kappa}")
        if cutset is None:
            print("minimum cut-set: none (complete graph)")
        else:
            print(f"minimum cut-set {cutset}")
    return EXIT_OK


def _cmd_cutsets(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    if group.size < 2:
        raise ValueError("cut-sets need a group of order >= 2")
    _check_brute_cap(group, args)
    graph = build_power_graph(group)
    kappa = vertex_connectivity(graph)
    if graph.is_complete:
        sets: list[list[int]] = []
    elif args.all:
        found = all_minimum_cutsets(
            graph, group.generator_classes, kappa, max_combinations=args.max_combinations
        )
        sets = [sorted(s) for s in found]
    else:
        sets = [sorted(minimum_cutset(graph).cut)]
    if args.json:
        print(json.dumps({"group": group.name, "kappa": kappa, "cutsets": sets}))
    else:
        print(f"group {group.name}  kappa {kappa}  cut-sets {len(sets)}")
        for s in sets:
            print(f"  {s}")
    return EXIT_OK


def _cmd_maximal_cyclics(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    rows = []
    for m in maximal_cyclic_subgroups(group):
        overlap = None if group.is_cyclic else len(external_overlap(group, m))
        rows.append(
            {
                "generator": m.generator,
                "order": m.order,
                "nongenerators": len(nongenerators(group, m)),
                "external_overlap": overlap,
                "elements": sorted(m.elements),
            }
        )
    if args.json:
        print(json.dumps({"group": group.name, "maximal_cyclic_subgroups": rows}))
    else:
        print(f"group {group.name}  maximal cyclic subgroups {len(rows)}")
        for row in rows:
            overlap = "-" if row["external_overlap"] is None else row["external_overlap"]
            print(
                f"  generator {row['generator']:>4}  order {row['order']:>4}  "
                f"nongenerators {row['nongenerators']:>4}  overlap {overlap}"
            )
    return EXIT_OK


def _report_lines(report) -> list[str]:
    pred = report.prediction
    lines = [
        f"group {report.group_label}  theorem {report.theorem_id}  verdict {report.verdict}"
    ]
    for cond, holds in pred.hypothesis_trace:
        lines.append(f"  [{'x' if holds else ' '}] {cond}")
    lines.append(f"  predicted kappa {pred.kappa}  observed kappa {report.observed_kappa}")
    if report.predicted_cutsets is not None:
        lines.append(f"  predicted cut-sets {[list(s) for s in report.predicted_cutsets]}")
    if report.observed_cutsets is not None:
        lines.append(f"  observed cut-sets {[list(s) for s in report.observed_cutsets]}")
    if report.detail:
        lines.append(f"  note: {report.detail}")
    return lines


def _verdict_exit(reports, strict: bool) -> int:
    if any(r.verdict == "mismatch" for r in reports):
        return EXIT_MISMATCH
    if strict and any(r.verdict == "skipped-resource" for r in reports):
        return EXIT_RESOURCE
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    report = verify_theorem(args.theorem, group, _caps(args))
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print("\n".join(_report_lines(report)))
    return _verdict_exit([report], args.strict)


def _cmd_survey(args: argparse.Namespace) -> int:
    reports = survey(args.theorem, args.max_order, _caps(args))
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports]))
    else:
        counts: dict[str, int] = {}
        for report in reports:
            counts[report.verdict] = counts.get(report.verdict, 0) + 1
            pred = report.prediction
            print(
                f"{report.group_label:<24} {report.verdict:<20} "
                f"predicted={pred.kappa} observed={report.observed_kappa}"
            )
        summary = "  ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"survey {args.theorem} max-order {args.max_order}: {summary}")
    return _verdict_exit(reports, args.strict)


def _cmd_export_dot(args: argparse.Namespace) -> int:
    group = parse_group_spec(args.group)
    removed: set[int] = set()
    if args.remove:
        removed = {_parse_int(chunk, args.remove) for chunk in args.remove.split(",")}
        bad = [v for v in removed if not 0 <= v < group.size]
        if bad:
            raise ValueError(f"removed vertices {sorted(bad)} out of range")
    graph = build_power_graph(group)
    lines = [f'graph "{group.name}" {{']
    for v in range(group.size):
        if v not in removed:
            lines.append(f'  {v} [label="{v}:{group.element_order(v)}"];')
    for v in range(group.size):
        if v in removed:
            continue
        for u in range(v + 1, group.size):
            if u not in removed and graph.adjacent(v, u):
                lines.append(f"  {v} -- {u};")
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powergraphs",
        description="Power graphs of finite groups: connectivity, cut-sets, "
        "and closed-form predictions checked against brute force.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, group_required: bool = True) -> None:
        if group_required:
            p.add_argument("--group", required=True, help="cyclic:N | abelian:p^e,... | quaternion:N | dihedral:N")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--max-brute-vertices", type=int, default=600)
        p.add_argument("--max-combinations", type=int, default=10_000_000)

    p = sub.add_parser("kappa", help="connectivity and one minimum cut-set")
    add_common(p)
    p.set_defaults(fn=_cmd_kappa)

    p = sub.add_parser("cutsets", help="minimum cut-sets")
    add_common(p)
    p.add_argument("--all", action="store_true", help="enumerate every minimum cut-set")
    p.set_defaults(fn=_cmd_cutsets)

    p = sub.add_parser("maximal-cyclics", help="maximal cyclic subgroups with cut sizes")
    add_common(p)
    p.set_defaults(fn=_cmd_maximal_cyclics)

    p = sub.add_parser("verify", help="check one prediction against brute force")
    add_common(p)
    p.add_argument("--theorem", required=True, choices=["thm11", "thm12", "thm13", "thm14", "props"])
    p.add_argument("--strict", action="store_true", help="resource skips fail the run")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("survey", help="verify a prediction across the corpus")
    add_common(p, group_required=False)
    p.add_argument("--theorem", required=True, choices=["thm11", "thm12", "thm13", "thm14", "props"])
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="resource skips fail the run")
    p.set_defaults(fn=_cmd_survey)

    p = sub.add_parser("export-dot", help="DOT text of the power graph on stdout")
    add_common(p)
    p.add_argument("--remove", default="", help="comma-separated vertex indices to drop")
    p.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, UnsupportedStructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
