"""Command-line front end: rule auditing, canonicalization, simulation and
golden verification.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 missing rule in strict simulation.
"""

from __future__ import annotations

import argparse
import sys

from . import engine, geometry, rules, scenarios


def _rules_table(path):
    if path is None:
        return rules.builtin_archive()
    with open(path) as f:
        return rules.parse_rule_file(f.read(), name=path)


def cmd_rules(args):
    if args.action == "dump":
        table = _rules_table(args.rules)
        for rule in table.rules:
            print(rule)
        return 0
    if args.action == "check":
        try:
            table = _rules_table(args.rules)
        except (rules.ParseError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        rep = table.report
        print(f"{len(table)} rules, {len(rep.violations)} coherence "
              f"violations, {len(rep.conflicts)} determinism conflicts")
        if rep.relistings:
            print(f"verbatim re-listings: {rep.relistings}")
        if rep.aliases:
            print(f"declared aliases: {rep.aliases}")
        for a, b in rep.violations:
            print(f"VIOLATION: rules {a} and {b} share a minimal form")
        for a, b in rep.conflicts:
            print(f"conflict: rules {a} and {b} share a key "
                  f"with different next states")
        if args.rules is None:
            # builtin archive: coherent with the one documented conflict
            ok = not rep.violations and rep.conflicts == [(4, 118)]
        else:
            ok = not rep.violations and not rep.conflicts
        return 0 if ok else 1
    if args.action == "canon":
        try:
            rule = rules.parse_rule(args.rule)
        except rules.ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(rules.minimal_form(rule))
        return 0
    return 2


def cmd_sim(args):
    try:
        sc = scenarios.scenario(args.scenario)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = scenarios.run_table() if args.rules is None else \
        _rules_table(args.rules)
    steps = sc.steps if args.steps is None else args.steps
    on_missing = "error" if args.strict else "keep"
    try:
        _, rows = engine.run(sc.initial, table, steps, sc.probes,
                             on_missing=on_missing)
    except engine.EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    text = _render(rows, sc.probes)
    if args.trace:
        with open(args.trace, "w") as f:
            f.write(text)
    else:
        print(text, end="")
    return 0


def _render(rows, probes):
    lines = []
    for t, row in enumerate(rows):
        lines.append(f"# t={t}")
        for name in probes:
            lines.append(f"{name} {row[name]}")
        lines.append("")
    return "\n".join(lines)


def cmd_verify(args):
    names = list(scenarios.BUILDERS) if args.scenario == "all" \
        else [args.scenario]
    table = None if args.rules is None else _rules_table(args.rules)
    frames = None if args.seed is None else \
        engine.random_proper_frames(args.seed)
    bad = False
    for name in names:
        try:
            ok, diffs = scenarios.verify(name, table=table, frames=frames)
        except KeyError:
            print(f"error: unknown scenario {args.scenario!r}",
                  file=sys.stderr)
            return 2
        if ok:
            print(f"{name}: ok")
        else:
            bad = True
            print(f"{name}: MISMATCH")
            for t, rowname, got, want in diffs[:5]:
                print(f"  t={t} {rowname}\n    got  {got}\n    want {want}")
    return 1 if bad else 0


def cmd_rotations(args):
    if args.list:
        for rec in geometry.rotation_group():
            print(f"{rec.axis_kind:8s} axis {rec.axis_id:2d} turn "
                  f"{rec.turn}  {rec.map}")
        return 0
    img0, img1 = args.classify
    try:
        rec = geometry.rotation_from_image(img0, img1)
    except geometry.NotAdjacent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if rec.axis_kind == "identity":
        print("identity")
    else:
        print(f"{rec.axis_kind} axis {rec.axis_id}, turn {rec.turn}")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="dodecagrid",
        description="five-state rotation-invariant automaton on the "
                    "{5,3,4} dodecagrid")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rules", help="audit or canonicalize rules")
    psub = p.add_subparsers(dest="action", required=True)
    pc = psub.add_parser("check", help="coherence and determinism report")
    pc.add_argument("--rules", metavar="FILE", default=None)
    pd = psub.add_parser("dump", help="print the rule table")
    pd.add_argument("--rules", metavar="FILE", default=None)
    pn = psub.add_parser("canon", help="minimal form of one rule")
    pn.add_argument("rule")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("sim", help="run a scenario and print its trace")
    p.add_argument("scenario")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--trace", metavar="FILE", default=None)
    p.add_argument("--rules", metavar="FILE", default=None)
    p.add_argument("--strict", action="store_true",
                   help="fail on neighborhoods without a rule")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("verify", help="compare scenarios to golden traces")
    p.add_argument("scenario", help="scenario name or 'all'")
    p.add_argument("--rules", metavar="FILE", default=None)
    p.add_argument("--seed", type=int, default=None,
                   help="re-read neighborhoods in per-tile random frames")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rotations", help="inspect the rotation group")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--classify", nargs=2, type=int, metavar=("IMG0", "IMG1"))
    p.set_defaults(func=cmd_rotations)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
