"""Command-line front end.

Directions and jump numbers are 1-based on the command line and in exported
files. Exit status is 0 on success, 1 when a verification fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from vietacluster.audit import AuditConfig, render_report, run_audit
from vietacluster.cubic import NotASolution, Triple
from vietacluster.gcp import NonIntegerSpecialization, PatternWalk
from vietacluster.laurent import NotDivisible
from vietacluster.registry import RegistryError, get_entry, registry
from vietacluster.tree import EnumBound, FamilySpec, TreeNode, brute_force, generate, membership_path, triples

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated decimal integers, got {text!r}") from None


def family_from_args(family: str, k: Optional[str]) -> FamilySpec:
    values = _ints(k, "--k") if k else []
    try:
        if family == "cubic":
            if len(values) not in (0, 3):
                raise UsageError("cubic takes --k k1,k2,k3")
            return FamilySpec.cubic(*values)
        if len(values) > 1:
            raise UsageError("quartic takes --k k")
        return FamilySpec.quartic(*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _bound(args: argparse.Namespace) -> EnumBound:
    if (args.max_depth is None) == (args.max_entry is None):
        raise UsageError("give exactly one of --max-depth and --max-entry")
    try:
        return EnumBound(args.max_depth, args.max_entry)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _triple(text: str) -> Triple:
    values = _ints(text, "--triple")
    if len(values) != 3:
        raise UsageError("--triple takes three values a,b,c")
    return Triple(*values)


def _params(items: Optional[Sequence[str]]) -> dict[str, int]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param takes name=value, got {item!r}")
        out[name.strip()] = _ints(value, "--param")[0]
    return out


# -- rendering ----------------------------------------------------------------


def nodes_to_json(nodes: Sequence[TreeNode]) -> str:
    rows = [
        {
            "triple": list(n.triple),
            "depth": n.depth,
            "parent": n.parent,
            "dir": None if n.direction is None else n.direction + 1,
        }
        for n in nodes
    ]
    return json.dumps(rows, indent=1) + "\n"


def nodes_from_json(text: str) -> list[TreeNode]:
    return [
        TreeNode(Triple(*row["triple"]), row["depth"], row["parent"], None if row["dir"] is None else row["dir"] - 1)
        for row in json.loads(text)
    ]


def nodes_to_dot(nodes: Sequence[TreeNode], name: str = "tree") -> str:
    lines = [f"digraph {name} {{"]
    for i, n in enumerate(nodes):
        lines.append(f'  n{i} [label="{n.triple}"];')
    for i, n in enumerate(nodes):
        if n.parent is not None:
            lines.append(f'  n{n.parent} -> n{i} [label="{n.direction + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tree(nodes: Sequence[TreeNode], fmt: str) -> bytes:
    if fmt == "json":
        return nodes_to_json(nodes).encode()
    if fmt == "dot":
        return nodes_to_dot(nodes).encode()
    raise ValueError(f"unknown export format {fmt!r}")


def nodes_to_text(nodes: Sequence[TreeNode]) -> str:
    return "".join(f"{n.depth} {n.triple}\n" for n in nodes)


# -- commands -----------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    nodes = generate(family_from_args(args.family, args.k), _bound(args))
    if args.format == "text":
        out.write(nodes_to_text(nodes))
    else:
        out.write(export_tree(nodes, args.format).decode())
    return EXIT_OK


def cmd_export(args: argparse.Namespace, out: TextIO) -> int:
    nodes = generate(family_from_args(args.family, args.k), _bound(args))
    data = export_tree(nodes, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        out.write(data.decode())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    spec = family_from_args(args.family, args.k)
    t = _triple(args.triple)
    if spec.is_solution(t):
        out.write("solution\n")
        return EXIT_OK
    out.write(f"not a solution (residual {spec.residual(t)})\n")
    return EXIT_FAIL


def cmd_path(args: argparse.Namespace, out: TextIO) -> int:
    spec = family_from_args(args.family, args.k)
    t = _triple(args.triple)
    if min(t) < 1:
        out.write("not a solution\n")
        return EXIT_FAIL
    try:
        steps = membership_path(spec, t)
    except NotASolution:
        out.write("not a solution\n")
        return EXIT_FAIL
    for triple, direction in steps:
        out.write(f"{triple} jump {direction + 1}\n")
    out.write(f"{Triple(1, 1, 1)} root, depth {len(steps)}\n")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> int:
    spec = family_from_args(args.family, args.k)
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    listed = triples(generate(spec, EnumBound.entry(args.bound)))
    found = brute_force(spec, args.bound, reference=args.reference)
    ok = len(listed) == len(set(listed)) and set(listed) == found
    out.write(f"tree {len(listed)} brute force {len(found)} {'equal' if ok else 'DIFFERENT'}\n")
    for t in sorted(found ^ set(listed)):
        out.write(f"  {'missing' if t in found else 'extra'} {t}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_mutate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        entry = get_entry(args.seed)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    walk = [] if not args.walk else [k - 1 for k in _ints(args.walk, "--walk")]
    try:
        seed = entry.seed(_params(args.param))
        seeds = PatternWalk(seed, tuple(walk)).seeds()
    except (ValueError, RegistryError) as exc:
        raise UsageError(str(exc)) from None
    except (NotDivisible, NonIntegerSpecialization) as exc:
        out.write(f"mutation failed: {exc}\n")
        return EXIT_FAIL
    steps = []
    for i, s in enumerate(seeds):
        values = s.specialize()
        steps.append(
            {
                "step": i,
                "direction": None if i == 0 else walk[i - 1] + 1,
                "cluster": [str(x) for x in s.cluster],
                "B": [list(r) for r in s.B],
                "Z": [str(z) for z in s.Z],
                "values": [str(v) for v in values],
            }
        )
    if args.format == "json":
        out.write(json.dumps(steps, indent=1) + "\n")
        return EXIT_OK
    for st in steps:
        head = "initial" if st["direction"] is None else f"mu_{st['direction']}"
        out.write(f"{st['step']} {head}\n")
        for i, (x, v) in enumerate(zip(st["cluster"], st["values"]), start=1):
            out.write(f"  x{i} = {x}  [{v}]\n")
        out.write(f"  B = {st['B']}\n")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace, out: TextIO) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    seeds = tuple(args.seed) if args.seed else None
    if seeds:
        known = {e.name for e in registry()}
        unknown = [s for s in seeds if s not in known]
        if unknown:
            raise UsageError(f"unknown seeds {unknown}")
    config = AuditConfig(
        depth=args.depth,
        rank2_depth=max(args.depth, 12),
        tree_bound=args.tree_bound,
        seeds=seeds,
        trees=seeds is None and not args.no_trees,
    )
    results = run_audit(config, threads=args.threads)
    out.write(render_report(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_seeds(args: argparse.Namespace, out: TextIO) -> int:
    for e in registry():
        eq = e.equation()
        out.write(f"{e.name} rank {e.rank} D {list(e.d_column)} {eq if eq is not None else 'no equation'}\n")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("cubic", "quartic"), required=True)
    p.add_argument("--k", help="k1,k2,k3 for cubic, k for quartic (default all zero)")


def _bound_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-depth", type=int)
    p.add_argument("--max-entry", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vietacluster", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a solution tree")
    _family_flags(p)
    _bound_flags(p)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="write a solution tree as JSON or DOT")
    _family_flags(p)
    _bound_flags(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="check that a triple solves the equation")
    _family_flags(p)
    p.add_argument("--triple", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("path", help="descent from a solution to the root")
    _family_flags(p)
    p.add_argument("--triple", required=True)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("oracle", help="compare the tree with brute force")
    _family_flags(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--reference", action="store_true", help="use the plain triple loop")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mutate", help="trace mutations of a registry seed")
    p.add_argument("--seed", required=True)
    p.add_argument("--walk", default="", help="directions, e.g. 1,2,3")
    p.add_argument("--param", action="append", help="name=value, repeatable")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("audit", help="run the invariant checks")
    p.add_argument("--seed", action="append", help="restrict to these registry seeds (skips tree checks)")
    p.add_argument("--depth", type=int, default=8, help="walk depth for rank-3 seeds")
    p.add_argument("--tree-bound", type=int, default=1000)
    p.add_argument("--no-trees", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("seeds", help="list registry seeds")
    p.set_defaults(func=cmd_seeds)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"vietacluster: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
