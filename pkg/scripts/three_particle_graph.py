"""The three-particle Morse graph on a subdivided tree, arrows grouped by
sublevel (i, j), plus an optional DOT file."""

import argparse
from collections import Counter
from dataclasses import dataclass

from morseconfig import build_morse_graph, homology, parse_plane_tree, subdivide_for
from morseconfig.perms import one_line


@dataclass
class Config:
    tree: str = "((()()))"
    n: int = 3
    dot: str | None = None


def main(cfg: Config) -> int:
    t = subdivide_for(parse_plane_tree(cfg.tree), cfg.n)
    g = build_morse_graph(t, cfg.n)
    print(f"tree {t.to_parens()}  ({t.n_vertices} vertices), n={cfg.n}")
    groups: dict = {}
    for e in g.edges:
        groups.setdefault(e.sublevel, Counter())[(one_line(e.source), one_line(e.target))] += 1
    for (i, j), arrows in sorted(groups.items()):
        print(f"E_{i},{j}: {sum(arrows.values())} edges")
        for (s, tg), c in sorted(arrows.items()):
            print(f"   {s} -> {tg}" + (f"  x{c}" if c > 1 else ""))
    h = homology(t, cfg.n)
    print(f"graph b1 = {g.betti1()}, oracle b1 = {h.betti[1]}")
    if cfg.dot:
        with open(cfg.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot())
        print(f"wrote {cfg.dot}")
    return 0 if g.betti1() == h.betti[1] else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--tree", default=Config.tree)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--dot")
    a = p.parse_args()
    raise SystemExit(main(Config(a.tree, a.n, a.dot)))
