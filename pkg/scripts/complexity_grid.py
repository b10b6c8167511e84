"""cat, hdim and TC_s over a grid of trees (m essential vertices) and particle
counts, with the top critical dimension found by an unordered sweep."""

import argparse
from dataclasses import dataclass

from morseconfig import parse_plane_tree, subdivide_for, tc_table
from morseconfig.gradient import Kind, classification_counts

CHAINS = {1: "((()()))", 2: "((()(()())))", 3: "((()(()(()()))))"}


@dataclass
class Config:
    ms: tuple = (1, 2, 3)
    ns: tuple = (2, 3, 4, 5)
    s_max: int = 5


def main(cfg: Config) -> int:
    print(f"{'m':>2} {'n':>2} {'ell':>4} {'top crit':>9}  TC_2..TC_{cfg.s_max}")
    bad = 0
    for m in cfg.ms:
        for n in cfg.ns:
            t = subdivide_for(parse_plane_tree(CHAINS[m]), n)
            rep = tc_table(t, n, cfg.s_max)
            top = max(d for d in range(n + 1)
                      if classification_counts(t, n, d, ordered=False)[Kind.CRITICAL])
            bad += top != rep.ell
            tcs = " ".join(str(rep.tc[s]) for s in range(2, cfg.s_max + 1))
            print(f"{m:>2} {n:>2} {rep.ell:>4} {top:>9}  {tcs}   ({rep.basis['tc']})")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="*", default=list(Config.ns))
    a = p.parse_args()
    raise SystemExit(main(Config(ns=tuple(a.n))))
