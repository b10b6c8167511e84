"""``morse-config`` command line.

Exit codes: 0 success, 1 a closed-form prediction failed to match,
2 usage or input error, 3 refused because the cell budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import factorial

from .cells import enumerate_cells
from .counting import census
from .gradient import classification_report, count_critical
from .homology import DEFAULT_BUDGET, BudgetExceeded, homology
from .invariants import tc_table
from .morse_graph import build_morse_graph, verify_structure
from .tree import PlaneTree, TreeParseError, is_sufficiently_subdivided, parse_plane_tree, subdivide_for

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    tree_path: str
    n: int
    s_max: int = 4
    output_format: str = "text"
    budget: int = DEFAULT_BUDGET
    subdivide: bool = True
    torsion: bool = False


def _load_tree(cfg: RunConfig) -> PlaneTree:
    try:
        if cfg.tree_path == "-":
            text = sys.stdin.read()
        else:
            with open(cfg.tree_path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read tree file: {exc}") from exc
    try:
        tree = parse_plane_tree(text)
    except TreeParseError as exc:
        raise UsageError(f"bad tree: {exc}") from exc
    if cfg.subdivide and cfg.n >= 2 and not is_sufficiently_subdivided(tree, cfg.n):
        tree = subdivide_for(tree, cfg.n)
    return tree


def _check_budget(tree: PlaneTree, n: int, dims, budget: int):
    for d in dims:
        count = 0
        for _ in enumerate_cells(tree, n, d, check_subdivision=False):
            count += 1
            if count > budget:
                raise BudgetExceeded(d, count, budget)


def _emit(obj, text: str, cfg: RunConfig):
    if cfg.output_format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _graph_summary(g) -> str:
    kind = ""
    if len(g.vertices) == 2:
        kind = f", banana B_{len(g.edges)}"
    return (f"G({g.n},T): {len(g.vertices)} vertices, {len(g.edges)} edges, "
            f"{g.n_components()} component(s), b1={g.betti1()}{kind}")


# -- subcommands ----------------------------------------------------------------

def cmd_subdivide(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    _emit({"tree": tree.to_parens(), "vertices": tree.n_vertices},
          tree.to_parens(), cfg)
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    _check_budget(tree, cfg.n, range(cfg.n + 1), cfg.budget)
    rows = classification_report(tree, cfg.n)
    lines = [f"{'dim':>3} {'critical':>9} {'redundant':>10} {'collapsible':>12}"]
    lines += [f"{r['dim']:>3} {r['critical']:>9} {r['redundant']:>10} {r['collapsible']:>12}"
              for r in rows]
    _emit(rows, "\n".join(lines), cfg)
    return EXIT_OK


def cmd_graph(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    _check_budget(tree, cfg.n, (1,), cfg.budget)
    g = build_morse_graph(tree, cfg.n)
    if cfg.output_format == "dot":
        sys.stdout.write(g.to_dot())
    elif cfg.output_format == "json":
        print(json.dumps(g.to_json(), indent=2))
    else:
        print(_graph_summary(g))
    return EXIT_OK


def _verify(tree: PlaneTree, cfg: RunConfig):
    g = build_morse_graph(tree, cfg.n)
    rep = verify_structure(g, tree, cfg.n)
    table = census(tree, cfg.n)
    counts = count_critical(tree, cfg.n)
    nf = factorial(cfg.n)
    rep.add("ordered critical = n! * unordered critical",
            all(counts.ordered[d] == nf * counts.unordered[d] for d in counts.ordered),
            json.dumps(counts.to_json()))
    rep.add("critical 1-cells = Morse edges", counts.ordered.get(1, 0) == len(g.edges))
    return g, rep, table


def cmd_verify(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    _check_budget(tree, cfg.n, range(cfg.n + 1), cfg.budget)
    g, rep, table = _verify(tree, cfg)
    lines = [f"tree {tree.to_parens()}  ({tree.n_vertices} vertices, n={cfg.n})",
             _graph_summary(g),
             f"census match {len(g.edges)}/{table.total_edges}"]
    for c in rep.checks:
        lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}"
                     + (f": {c.detail}" if not c.ok and c.detail else ""))
    lines.append("verification: " + ("ok" if rep.ok else "MISMATCH"))
    out = rep.to_json()
    out["census_total"] = table.total_edges
    out["observed_total"] = len(g.edges)
    _emit(out, "\n".join(lines), cfg)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_homology(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    h = homology(tree, cfg.n, torsion=cfg.torsion, budget=cfg.budget)
    lines = ["cells: " + ", ".join(f"C_{p}={c}" for p, c in h.cell_counts.items()),
             "betti: " + ", ".join(f"b{p}={b}" for p, b in h.betti.items()),
             f"euler: {h.euler}"]
    if cfg.torsion:
        lines.append("torsion: " + ("none" if h.torsion_free else
                                    json.dumps({p: t for p, t in h.torsion.items() if t})))
    _emit(h.to_json(), "\n".join(lines), cfg)
    return EXIT_OK


def cmd_invariants(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    try:
        rep = tc_table(tree, cfg.n, cfg.s_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = [f"m_r: {rep.m_r}", f"essential vertices: {rep.essential_count}",
             f"k(n,G) = {rep.k_n_G}, ell = {rep.ell}, hdim = {rep.hdim}, cat = {rep.cat}"]
    lines += [f"TC_{s} = {v}" for s, v in rep.tc.items() if s >= 2]
    if rep.betti1_predicted is not None:
        lines.append(f"wedge of {rep.betti1_predicted} circles")
    lines.append(f"basis: {rep.basis['tc']}")
    _emit(rep.to_json(), "\n".join(lines), cfg)
    return EXIT_OK


def cmd_census(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    table = census(tree, cfg.n)
    lines = [f"{'i':>2} {'j':>2} {'mult':>6} {'cycles/orbit':>13} {'edges':>8}"]
    lines += [f"{r.i:>2} {r.j:>2} {r.multiplicity:>6} {r.cycles_per_orbit:>13} {r.edges:>8}"
              for r in table.rows]
    lines.append(f"total edges: {table.total_edges}")
    _emit(table.to_json(), "\n".join(lines), cfg)
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    tree = _load_tree(cfg)
    _check_budget(tree, cfg.n, range(cfg.n + 1), cfg.budget)
    g, rep, table = _verify(tree, cfg)
    h = homology(tree, cfg.n, budget=cfg.budget)
    inv = tc_table(tree, cfg.n, cfg.s_max) if tree.essential_vertices else None
    counts = count_critical(tree, cfg.n)
    crit_euler = sum((-1) ** p * c for p, c in counts.ordered.items())
    rep.add("euler from critical cells = oracle euler", crit_euler == h.euler,
            f"{crit_euler} vs {h.euler}")
    if cfg.n <= 3:
        rep.add("Morse graph b1 = oracle b1", g.betti1() == h.betti.get(1, 0),
                f"{g.betti1()} vs {h.betti.get(1, 0)}")
    if inv is not None and inv.betti1_predicted is not None:
        rep.add("wedge count = oracle b1", inv.betti1_predicted == h.betti.get(1, 0))
    lines = [f"tree {tree.to_parens()}  ({tree.n_vertices} vertices, n={cfg.n})",
             _graph_summary(g),
             "oracle betti: " + ", ".join(f"b{p}={b}" for p, b in h.betti.items() if b or p < 2)]
    if inv is not None:
        lines.append(f"cat = {inv.cat}, " + ", ".join(f"TC_{s}={v}" for s, v in inv.tc.items() if s >= 2))
    lines.append("verification: " + ("ok" if rep.ok else "MISMATCH"))
    lines += [f"  [FAIL] {c.name}: {c.detail}" for c in rep.failures()]
    out = {"tree": tree.to_parens(), "n": cfg.n,
           "graph": {"vertices": len(g.vertices), "edges": len(g.edges),
                     "components": g.n_components(), "betti1": g.betti1()},
           "homology": h.to_json(),
           "invariants": inv.to_json() if inv else None,
           "verification": rep.to_json()}
    _emit(out, "\n".join(lines), cfg)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


COMMANDS = {
    "analyze": cmd_analyze, "graph": cmd_graph, "verify": cmd_verify,
    "homology": cmd_homology, "invariants": cmd_invariants, "census": cmd_census,
    "classify": cmd_classify, "subdivide": cmd_subdivide,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morse-config",
        description="Discrete Morse models of ordered configuration spaces of trees.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--tree", required=True,
                       help="plane-tree file in parenthesis format ('-' for stdin)")
        p.add_argument("--n", type=int, required=True, help="number of particles")
        formats = ["text", "json", "dot"] if name == "graph" else ["text", "json"]
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum cells enumerated per dimension")
        p.add_argument("--no-subdivide", action="store_true",
                       help="use the tree as given instead of subdividing it for n")
        if name in ("invariants", "analyze"):
            p.add_argument("--s-max", type=int, default=4)
        if name == "homology":
            p.add_argument("--torsion", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be positive")
    cfg = RunConfig(args.tree, args.n, getattr(args, "s_max", 4), args.format,
                    args.budget, not args.no_subdivide, getattr(args, "torsion", False))
    try:
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"morse-config: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"morse-config: refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"morse-config: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
