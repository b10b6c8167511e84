"""Brute-force integer homology against the Morse-theoretic predictions:
Euler characteristic from critical cells, b1 of the Morse graph (n <= 3),
and the wedge-of-circles counts."""

import argparse
import time
from dataclasses import dataclass

from morseconfig import (build_morse_graph, euler_from_critical, homology, parse_plane_tree,
                         subdivide_for, wedge_circle_count)


@dataclass
class Config:
    trees: tuple = ("((()()))", "((()()()))", "((()(()())))", "(((()())(()())))")
    ns: tuple = (2, 3, 4)
    budget: int = 200_000  # per dimension; larger instances are skipped


def main(cfg: Config) -> int:
    print(f"{'tree':<20} {'n':>2} {'betti':<28} {'euler':>7} {'crit':>7} {'wedge':>6} "
          f"{'G b1':>6} {'sec':>6}")
    bad = 0
    for text in cfg.trees:
        for n in cfg.ns:
            t = subdivide_for(parse_plane_tree(text), n)
            t0 = time.perf_counter()
            try:
                h = homology(t, n, torsion=n <= 3, budget=cfg.budget)
            except RuntimeError as exc:
                print(f"{text:<20} {n:>2} skipped: {exc}")
                continue
            crit = euler_from_critical(t, n)
            wedge = wedge_circle_count(t, n)
            gb1 = build_morse_graph(t, n).betti1() if n <= 3 else None
            ok = crit == h.euler and h.torsion_free
            ok &= wedge is None or wedge == h.betti[1]
            ok &= gb1 is None or gb1 == h.betti[1]
            bad += not ok
            betti = ",".join(str(h.betti[p]) for p in sorted(h.betti))
            print(f"{text:<20} {n:>2} {betti:<28} {h.euler:>7} {crit:>7} "
                  f"{'-' if wedge is None else wedge:>6} {'-' if gb1 is None else gb1:>6} "
                  f"{time.perf_counter() - t0:>6.1f}" + ("" if ok else "  MISMATCH"))
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="*", default=list(Config.ns))
    p.add_argument("--budget", type=int, default=Config.budget)
    a = p.parse_args()
    raise SystemExit(main(Config(ns=tuple(a.n), budget=a.budget)))
