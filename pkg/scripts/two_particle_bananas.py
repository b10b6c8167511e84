"""Two particles on random trees: the Morse graph is a banana graph B_{2 m_2}
and the integer homology is that of a wedge of 2 m_2 - 1 circles."""

import argparse
import random
from dataclasses import dataclass

from morseconfig import build_morse_graph, homology, random_plane_tree, subdivide_for
from morseconfig.counting import m_r


@dataclass
class Config:
    seed: int = 20241015
    trees: int = 10
    max_essential: int = 3
    max_degree: int = 5


def main(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    print(f"{'tree':<40} {'m2':>4} {'edges':>6} {'b0':>3} {'b1':>4}  ok")
    bad = 0
    for _ in range(cfg.trees):
        t = subdivide_for(random_plane_tree(rng, rng.randint(1, cfg.max_essential),
                                            cfg.max_degree), 2)
        g = build_morse_graph(t, 2)
        h = homology(t, 2)
        m2 = m_r(t, 2)
        ok = (len(g.edges) == 2 * m2 and not g.has_loops() and g.n_components() == 1
              and h.betti[0] == 1 and h.betti[1] == 2 * m2 - 1)
        bad += not ok
        print(f"{t.to_parens():<40} {m2:>4} {len(g.edges):>6} {h.betti[0]:>3} "
              f"{h.betti[1]:>4}  {'yes' if ok else 'NO'}")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--trees", type=int, default=Config.trees)
    a = p.parse_args()
    raise SystemExit(main(Config(seed=a.seed, trees=a.trees)))
