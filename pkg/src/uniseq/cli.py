"""Command line front door emitting deterministic text or JSON reports.

Exit codes: 0 when a verdict holds or a solution exists, 1 when a verdict
fails or the system is unsatisfiable, 2 on usage or input errors.
"""

import argparse
import json
import sys
from pathlib import Path

from .actions import blocks, partial_perm
from .conditions import analyze_family, check_corollary
from .equations import solve
from .errors import (
    HypothesisNotVerified,
    ParseError,
    UniseqError,
    VerificationFailure,
)
from .families import BUILTIN_FAMILIES, instantiate_many, load_family
from .submonoid import closure
from .witness import sample_states, seeded_targets, verify_witness


def _resolve_family(text):
    if text in BUILTIN_FAMILIES:
        return BUILTIN_FAMILIES[text]
    path = Path(text)
    if not path.exists():
        names = ", ".join(sorted(BUILTIN_FAMILIES))
        raise ParseError(f"no family file {text!r} and not one of the builtins ({names})")
    return load_family(path)


def _show(word):
    return word if word else "''"


def _emit(report, fmt, lines):
    if fmt == "json":
        print(json.dumps(report))
    else:
        print("\n".join(lines(report)))


def _violation_lines(report):
    for v in report.get("violations", ()):
        indices = ",".join(str(i) for i in v["indices"])
        witness = " ".join(_show(w) for w in v["witness"])
        yield f"violation {v['condition']} at {indices}: {witness}"
    for v in report.get("warnings", ()):
        indices = ",".join(str(i) for i in v["indices"])
        witness = " ".join(_show(w) for w in v["witness"])
        yield f"warning {v['condition']} at {indices}: {witness}"


def cmd_closure(args):
    family = _resolve_family(args.family)
    words = instantiate_many(family, args.bound)
    result = closure(words)
    report = {
        "command": "closure",
        "family": args.family,
        "bound": args.bound,
        "generators": list(result.generators),
        "iterations": result.iterations,
        "pool": list(result.pool),
        "rounds": [
            {"repeated": list(r.repeated), "cross": list(r.cross)}
            for r in result.rounds
        ],
    }

    def lines(rep):
        out = [
            "command: closure",
            f"family: {rep['family']}",
            f"bound: {rep['bound']}",
            "generators: " + (", ".join(_show(g) for g in rep["generators"]) or "(none)"),
            f"iterations: {rep['iterations']}",
            "pool: " + ", ".join(_show(w) for w in rep["pool"]),
        ]
        for k, rnd in enumerate(rep["rounds"], 1):
            out.append(f"round {k} repeated: " + ", ".join(_show(w) for w in rnd["repeated"]))
            out.append(f"round {k} cross: " + ", ".join(_show(w) for w in rnd["cross"]))
        return out

    _emit(report, args.format, lines)
    return 0


def _check_report(command, args, verdict, extra=None):
    report = {
        "command": command,
        "family": args.family,
        "bound": args.bound,
        "verdict": "holds" if verdict.holds else "fails",
        "violations": [v.to_json() for v in verdict.violations],
        "warnings": [v.to_json() for v in verdict.warnings],
    }
    if extra:
        report.update(extra)

    def lines(rep):
        out = [
            f"command: {rep['command']}",
            f"family: {rep['family']}",
            f"bound: {rep['bound']}",
            f"verdict: {rep['verdict']}",
        ]
        if "generators" in rep:
            out.append(
                "generators: " + (", ".join(_show(g) for g in rep["generators"]) or "(none)")
            )
        for d in rep.get("decompositions", ()):
            out.append(
                f"decomposition {d['n']}: prefix={_show(d['prefix'])} "
                f"middle={_show(d['middle'])} suffix={_show(d['suffix'])}"
            )
        out.extend(_violation_lines(rep))
        return out

    _emit(report, args.format, lines)
    return 0 if verdict.holds else 1


def _decomposition_json(analysis):
    if analysis.decompositions is None:
        return []
    return [
        {"n": d.index, "prefix": d.prefix, "middle": d.middle, "suffix": d.suffix}
        for d in analysis.decompositions
    ]


def cmd_check_thm(args):
    family = _resolve_family(args.family)
    analysis = analyze_family(family, args.bound)
    extra = {
        "generators": list(analysis.closure.generators),
        "decompositions": _decomposition_json(analysis),
    }
    return _check_report("check-thm", args, analysis.verdict, extra)


def cmd_check_cor(args):
    family = _resolve_family(args.family)
    verdict = check_corollary(family, args.bound)
    return _check_report("check-cor", args, verdict)


def cmd_decompose(args):
    family = _resolve_family(args.family)
    analysis = analyze_family(family, args.bound)
    split_failures = [v for v in analysis.verdict.violations if v.condition == "split"]
    report = {
        "command": "decompose",
        "family": args.family,
        "bound": args.bound,
        "generators": list(analysis.closure.generators),
        "decompositions": _decomposition_json(analysis),
        "violations": [v.to_json() for v in split_failures],
    }

    def lines(rep):
        out = [
            "command: decompose",
            f"family: {rep['family']}",
            f"bound: {rep['bound']}",
            "generators: " + (", ".join(_show(g) for g in rep["generators"]) or "(none)"),
        ]
        for d in rep["decompositions"]:
            out.append(
                f"decomposition {d['n']}: prefix={_show(d['prefix'])} "
                f"middle={_show(d['middle'])} suffix={_show(d['suffix'])}"
            )
        out.extend(_violation_lines(rep))
        return out

    _emit(report, args.format, lines)
    return 0 if not split_failures else 1


def cmd_witness(args):
    family = _resolve_family(args.family)
    targets = seeded_targets(args.seed, args.bound)
    samples = sample_states(args.samples, args.seed)
    base = {
        "command": "witness",
        "family": args.family,
        "bound": args.bound,
        "samples": args.samples,
        "seed": args.seed,
    }

    def lines(rep):
        out = [
            "command: witness",
            f"family: {rep['family']}",
            f"bound: {rep['bound']}",
            f"samples: {rep['samples']}",
            f"seed: {rep['seed']}",
            f"verdict: {rep['verdict']}",
        ]
        for name, count in rep.get("checks", {}).items():
            out.append(f"check {name}: {count}")
        if rep.get("failure"):
            out.append(f"failure: {json.dumps(rep['failure'])}")
        if rep.get("reason"):
            out.append(f"reason: {rep['reason']}")
        return out

    try:
        result = verify_witness(family, args.bound, targets, samples)
    except HypothesisNotVerified as exc:
        report = dict(base, verdict="not-verified", reason=str(exc))
        if exc.verdict is not None:
            report["violations"] = [v.to_json() for v in exc.verdict.violations]
        _emit(report, args.format, lines)
        return 1
    except VerificationFailure as exc:
        report = dict(base, verdict="fail")
        if exc.report is not None:
            report["checks"] = dict(exc.report.checks)
            report["failure"] = exc.report.failure
        _emit(report, args.format, lines)
        return 1
    report = dict(base, verdict="pass", checks=dict(result.checks), failure=None)
    _emit(report, args.format, lines)
    return 0


def _parse_target(text):
    try:
        images = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"target {text!r} must be comma-separated integers")
    return images


def cmd_solve(args):
    if not args.word:
        raise ParseError("give at least one equation with -w WORD -t TARGET")
    if len(args.word) != len(args.target):
        raise ParseError("need exactly one -t TARGET per -w WORD")
    targets = [_parse_target(t) for t in args.target]
    sizes = {len(t) for t in targets}
    if len(sizes) != 1:
        raise ParseError("all targets must have the same length")
    size = sizes.pop()
    assignment = solve(args.word, targets, size, cap=args.max_set_size)
    report = {
        "command": "solve",
        "ground_size": size,
        "result": "sat" if assignment else "unsat",
        "witness": (
            {"a": list(assignment["a"]), "b": list(assignment["b"])}
            if assignment
            else None
        ),
    }

    def lines(rep):
        out = [
            "command: solve",
            f"ground size: {rep['ground_size']}",
            f"result: {rep['result']}",
        ]
        if rep["witness"]:
            out.append("a: " + ",".join(str(v) for v in rep["witness"]["a"]))
            out.append("b: " + ",".join(str(v) for v in rep["witness"]["b"]))
        return out

    _emit(report, args.format, lines)
    return 0 if assignment else 1


def cmd_blocks(args):
    try:
        ground = [int(part) for part in args.ground.split(",")]
    except ValueError:
        raise ParseError(f"ground {args.ground!r} must be comma-separated integers")
    perms = []
    for text in args.perm or ():
        try:
            pairs = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"perm {text!r} is not valid JSON: {exc.msg}")
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in pairs
        ):
            raise ParseError(f"perm {text!r} must be a list of [from, to] pairs")
        try:
            perms.append(partial_perm({p[0]: p[1] for p in pairs}, ground))
        except ValueError as exc:
            raise ParseError(f"perm {text!r}: {exc}")
    partition = blocks(perms, ground)
    report = {
        "command": "blocks",
        "ground": sorted(ground),
        "blocks": [sorted(b) for b in partition],
    }

    def lines(rep):
        out = [
            "command: blocks",
            "ground: " + ", ".join(str(p) for p in rep["ground"]),
        ]
        for b in rep["blocks"]:
            out.append("block: " + ", ".join(str(p) for p in b))
        return out

    _emit(report, args.format, lines)
    return 0


def _add_common(sub, family=True, min_bound=2):
    if family:
        sub.add_argument("family", help="builtin family name or path to a family JSON file")
        sub.add_argument(
            "--bound",
            type=int,
            default=8,
            help=f"number of family words to check (default 8, minimum {min_bound})",
        )
    sub.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format (default text)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="uniseq",
        description="Condition checks, closures and witness verification for "
        "word families over the alphabet {a, b}.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("closure", help="compute the closed submonoid of the first N words")
    _add_common(sub, min_bound=1)
    sub.set_defaults(func=cmd_closure, min_bound=1)

    sub = subparsers.add_parser("check-thm", help="check the main sufficient condition")
    _add_common(sub)
    sub.set_defaults(func=cmd_check_thm, min_bound=2)

    sub = subparsers.add_parser("check-cor", help="check the overlap-free condition")
    _add_common(sub)
    sub.set_defaults(func=cmd_check_cor, min_bound=2)

    sub = subparsers.add_parser("decompose", help="prefix/middle/suffix split of each word")
    _add_common(sub)
    sub.set_defaults(func=cmd_decompose, min_bound=2)

    sub = subparsers.add_parser("witness", help="verify the constructed letter assignment")
    _add_common(sub)
    sub.add_argument("--seed", type=int, default=0, help="seed for targets and samples")
    sub.add_argument("--samples", type=int, default=50, help="sampled states per word")
    sub.set_defaults(func=cmd_witness, min_bound=2)

    sub = subparsers.add_parser("solve", help="solve word equations over a small map monoid")
    sub.add_argument("-w", "--word", action="append", default=[], help="equation word")
    sub.add_argument(
        "-t",
        "--target",
        action="append",
        default=[],
        help="target map as comma-separated images, e.g. 1,0",
    )
    sub.add_argument(
        "--max-set-size",
        type=int,
        default=4,
        help="cap on the ground set size (default 4)",
    )
    _add_common(sub, family=False)
    sub.set_defaults(func=cmd_solve, min_bound=None)

    sub = subparsers.add_parser("blocks", help="orbit partition of partial permutations")
    sub.add_argument("--ground", required=True, help="comma-separated points, e.g. 1,2,3,4")
    sub.add_argument(
        "--perm",
        action="append",
        default=[],
        help='partial permutation as JSON pairs, e.g. "[[1,2],[2,1]]"',
    )
    _add_common(sub, family=False)
    sub.set_defaults(func=cmd_blocks, min_bound=None)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.min_bound is not None and args.bound < args.min_bound:
        print(f"error: --bound must be at least {args.min_bound}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UniseqError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
