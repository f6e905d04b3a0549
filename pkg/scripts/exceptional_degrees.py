"""Largest degree of the exceptional-set polynomials h_(m,i) versus the
bound m d^2 + 2d, over random bivariate polynomials."""

import argparse
import random
import time
from dataclasses import dataclass

from polydec.errors import InputDecomposableAsMultivariate
from polydec.polycore import QQ, MultiPoly
from polydec.special import exceptional_set


@dataclass
class Config:
    samples: int = 20
    degrees: tuple = (4, 6)
    density: float = 0.4
    height: int = 5
    seed: int = 0


def random_poly(rnd, d, cfg):
    terms = {(0, d): QQ.one}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            if (i, j) != (0, d) and rnd.random() < cfg.density:
                c = rnd.randint(-cfg.height, cfg.height)
                if c:
                    terms[(i, j)] = QQ(c)
    return MultiPoly(terms, ("t", "x"), QQ)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--degrees", type=int, nargs="+", default=list(Config.degrees))
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    cfg = Config(samples=a.samples, degrees=tuple(a.degrees), seed=a.seed)
    rnd = random.Random(cfg.seed)
    cols = ("d", "m", "max deg h", "max deg_a h'", "max deg_t h'", "bound", "sec/poly")
    widths = (3, 3, 10, 13, 13, 6, 9)
    print(" ".join(c.rjust(w) for c, w in zip(cols, widths)))
    for d in cfg.degrees:
        stats = {}
        t0, n = time.perf_counter(), 0
        while n < cfg.samples:
            f = random_poly(rnd, d, cfg)
            try:
                E = exceptional_set(f)
            except InputDecomposableAsMultivariate:
                continue
            n += 1
            for m, es in E.per_divisor.items():
                s = stats.setdefault(m, [0, 0, 0])
                for e in es:
                    s[0] = max(s[0], e.h.degree())
                    s[1] = max(s[1], e.h_prime.degree("a"))
                    s[2] = max(s[2], e.h_prime.degree("t"))
        per = (time.perf_counter() - t0) / max(n, 1)
        for m, (dh, da, dt) in sorted(stats.items()):
            print(f"{d:>3} {m:>3} {dh:>10} {da:>13} {dt:>13} {m * d * d + 2 * d:>6} {per:>9.3f}")


if __name__ == "__main__":
    main()
