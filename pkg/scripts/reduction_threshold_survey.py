"""Bad primes, thresholds and actual decomposable reductions for random
integral polynomials that are indecomposable over Q."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from polydec.decomp import decompose
from polydec.modp import obstruction_certificate, reduce_and_test
from polydec.ntheory import is_prime
from polydec.polycore import UniPoly
from polydec.polycore.univariate import inf_norm


@dataclass
class Config:
    count: int = 40
    degrees: tuple = (4, 6, 8)
    height: int = 9
    max_prime: int = 50
    seed: int = 1


def corpus(cfg):
    rnd = random.Random(cfg.seed)
    while True:
        d = rnd.choice(cfg.degrees)
        f = UniPoly([rnd.randint(-cfg.height, cfg.height) for _ in range(d)] + [1])
        if decompose(f).is_indecomposable:
            yield f


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--max-prime", type=int, default=Config.max_prime)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    cfg = Config(count=a.count, max_prime=a.max_prime, seed=a.seed)

    primes = [p for p in range(2, cfg.max_prime + 1) if is_prime(p)]
    statuses = Counter()
    bad_but_fine = surprising = 0
    worst = Fraction(0)
    gen = corpus(cfg)
    for _ in range(cfg.count):
        f = next(gen)
        cert = obstruction_certificate(f)
        for v in cert.per_divisor.values():
            worst = max(worst, Fraction(max(map(abs, v.hA)), inf_norm(f) ** f.degree))
        line = []
        for p in primes:
            r = reduce_and_test(f, p, cert)
            statuses[r.status] += 1
            if r.status == "reduced_decomposable":
                line.append(str(p))
            elif p in cert.bad_primes and r.status == "reduced_indecomposable":
                bad_but_fine += 1
            if r.status == "reduced_decomposable" and p > cert.threshold():
                surprising += 1
        print(f"{str(f):<48} If={cert.If:<14} threshold={cert.threshold():<6} decomposes mod: {' '.join(line) or '-'}")
    print()
    print("status counts:", dict(statuses))
    print(f"bad primes whose reduction stayed indecomposable: {bad_but_fine}")
    print(f"decomposable reductions above the threshold: {surprising} (should be 0)")
    print(f"max ||hA|| / ||f||^d over the corpus: {float(worst):.4g}")


if __name__ == "__main__":
    main()
