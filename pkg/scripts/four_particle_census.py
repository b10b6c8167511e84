"""Orbit census of the four-particle Morse graph: every S_4-orbit of critical
edges is classified by its sublevel and cycle structure, and the number of
orbits per sublevel is compared with the predicted multiplicity."""

import argparse
from collections import defaultdict
from dataclasses import dataclass
from math import factorial

from morseconfig import build_morse_graph, parse_plane_tree, subdivide_for
from morseconfig.counting import census
from morseconfig.morse_graph import canonical_representative


@dataclass
class Config:
    trees: tuple = ("((()()))", "((()()()))", "((()(()())))")
    n: int = 4


def main(cfg: Config) -> int:
    bad = 0
    for text in cfg.trees:
        t = subdivide_for(parse_plane_tree(text), cfg.n)
        g = build_morse_graph(t, cfg.n)
        orbits = defaultdict(list)
        for e in g.edges:
            orbits[canonical_representative(e.critical_cell)].append(e)
        per_level = defaultdict(int)
        for edges in orbits.values():
            per_level[edges[0].sublevel] += 1
        table = census(t, cfg.n)
        print(f"\ntree {text} (subdivided to {t.n_vertices} vertices), n={cfg.n}, "
              f"m={table.m}")
        print(f"{'(i,j)':>6} {'cycles/orbit':>13} {'orbits':>7} {'predicted':>10}")
        for row in table.rows:
            got = per_level[(row.i, row.j)]
            bad += got != row.multiplicity
            print(f"{str((row.i, row.j)):>6} {factorial(cfg.n) // row.j:>6} x {row.j}-cycle"
                  f" {got:>7} {row.multiplicity:>10}")
        print(f"total edges {len(g.edges)} (predicted {table.total_edges})")
        bad += len(g.edges) != table.total_edges
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("trees", nargs="*")
    a = p.parse_args()
    raise SystemExit(main(Config(tuple(a.trees) or Config.trees, a.n)))
