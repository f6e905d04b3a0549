"""Observed failure rate of shifted specializations against D/|S|.

Example:
    python scripts/montecarlo_experiment.py --poly "x^4+t" --primes 101 1009 10007
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

from polydec.polycore import PrimeField, parse_poly
from polydec.polycore.parser import detect_vars
from polydec.special import SampleSet, monte_carlo_test


@dataclass
class Config:
    poly: str = "x^4+t"
    primes: list = field(default_factory=lambda: [101, 1009, 10007])
    trials: int = 2000
    seed: int = 0


def run(cfg: Config):
    rows = []
    for p in cfg.primes:
        F = PrimeField(p)
        f = parse_poly(cfg.poly, detect_vars(cfg.poly), F)
        rep = monte_carlo_test(f, SampleSet(F), cfg.trials, cfg.seed)
        rows.append(
            {
                "p": p,
                "D": rep.plan.D,
                "bound": float(rep.plan.failure_bound),
                "failures": rep.failures,
                "frequency": float(rep.frequency),
            }
        )
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--poly", default=Config.poly)
    ap.add_argument("--primes", type=int, nargs="+", default=Config().primes)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--json", action="store_true")
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items() if k != "json"})
    rows = run(cfg)
    if ap.parse_args().json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"f = {cfg.poly}, {cfg.trials} trials per field, seed {cfg.seed}")
    print(f"{'p':>7} {'D':>5} {'bound':>10} {'failures':>9} {'frequency':>10}")
    for r in rows:
        print(f"{r['p']:>7} {r['D']:>5} {r['bound']:>10.4g} {r['failures']:>9} {r['frequency']:>10.4g}")


if __name__ == "__main__":
    main()
