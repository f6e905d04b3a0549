"""Command-line interface.

Exit codes: 0 success, 1 internal invariant failure, 2 parse error,
3 precondition violation.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .decomp import decompose, m_decompose
from .errors import InvariantError, PolySyntaxError, PreconditionError
from .modp import obstruction_certificate, reduce_and_test
from .oracle import find_decomposition
from .polycore.fields import QQ, field_from_spec
from .polycore.parser import detect_vars, parse_poly
from .special import (
    SampleSet,
    certify_specialization,
    exceptional_set,
    monte_carlo_test,
    multivar_specialize_and_test,
)

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    field: object = QQ
    seed: int = 0
    format: str = "text"
    sample_size: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise PreconditionError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise PreconditionError("seed must be an unsigned 64-bit integer")


def _read_poly(text):
    return sys.stdin.read().strip() if text == "-" else text


def _scalar(text, field):
    if "/" in text:
        num, den = text.split("/", 1)
        return field(int(num)) / field(int(den))
    return field(int(text))


def _scalars(text, field):
    vals = [_scalar(part.strip(), field) for part in text.split(",")]
    return vals[0] if len(vals) == 1 else vals


def _emit(cfg, payload, text_lines):
    if cfg.format == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(text_lines))


def _univariate(text, field):
    return parse_poly(_read_poly(text), ("x",), field).to_unipoly("x")


def cmd_parse(args, cfg):
    text = _read_poly(args.poly)
    f = parse_poly(text, detect_vars(text), cfg.field)
    _emit(cfg, {"poly": str(f), "vars": list(f.vars), "field": cfg.field.spec}, [str(f)])
    return EXIT_OK


def cmd_decompose(args, cfg):
    f = _univariate(args.poly, cfg.field)
    if args.m is not None:
        dec = m_decompose(f, args.m)
        payload = {
            "m": args.m,
            "u": str(dec.u),
            "g": str(dec.g),
            "h": str(dec.h),
            "normalizer": str(dec.normalizer),
            "mDecomposable": not dec.h,
        }
        lines = [
            f"m = {args.m}",
            f"u = {dec.u}",
            f"g = {dec.g}",
            f"h = {dec.h}",
            f"normalizer = {dec.normalizer}",
            "m-decomposable" if not dec.h else "not m-decomposable",
        ]
        _emit(cfg, payload, lines)
        return EXIT_OK
    res = decompose(f)
    payload = {"poly": str(f), "field": cfg.field.spec, "verdict": res.status}
    lines = []
    if res.status == "not_applicable":
        hit = find_decomposition(f)
        payload["reason"] = res.reason
        payload["verdict"] = "decomposable" if hit else "indecomposable"
        payload["method"] = "oracle"
        if hit:
            payload.update(u=str(hit[0]), g=str(hit[1]))
        lines.append(f"({res.reason})")
        res_u, res_g = hit if hit else (None, None)
    else:
        payload["method"] = "m-decomposition"
        res_u, res_g = res.u, res.g
    if res_u is not None:
        payload.update(u=str(res_u), g=str(res_g))
        lines.insert(0, f"Decomposable u={res_u} g={res_g}")
    else:
        lines.insert(0, "Indecomposable")
    witnesses = {
        str(m): {"h": str(w.h), "firstNonzeroIndex": w.first_nonzero_index}
        for m, w in sorted(res.witnesses.items())
    }
    payload["witnesses"] = witnesses
    for m, w in sorted(res.witnesses.items()):
        lines.append(f"  witness h_{m} = {w.h}")
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_modp(args, cfg):
    if cfg.field != QQ:
        raise PreconditionError("modp works with integral polynomials over Q")
    f = _univariate(args.poly, QQ)
    cert = obstruction_certificate(f)
    if args.p is not None:
        res = reduce_and_test(f, args.p, cert)
        payload = {"p": args.p, "status": res.status, "method": res.method}
        if res.u is not None:
            payload.update(u=str(res.u), g=str(res.g))
        names = {
            "guaranteed_indecomposable": "GuaranteedIndecomposable",
            "reduced_decomposable": "ReducedDecomposable",
            "reduced_indecomposable": "ReducedIndecomposable",
            "degenerate": "Degenerate",
        }
        line = names[res.status]
        if res.u is not None:
            line += f" u={res.u} g={res.g}"
        _emit(cfg, payload, [line])
        return EXIT_OK
    payload = cert.to_json()
    payload["threshold"] = cert.threshold()
    lines = [
        f"degree {cert.d}, gamma = {cert.gamma}",
        *(f"  m = {m}: nu = {v.nu}, hA = {list(v.hA)}, hm0 = {v.hm0}" for m, v in sorted(cert.per_divisor.items())),
        f"If = {cert.If}",
        f"badPrimes = {sorted(cert.bad_primes)}",
        f"residualCofactor = {cert.residual_cofactor}",
        f"threshold = {cert.threshold()} (every larger prime is certified)",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_specialize(args, cfg):
    text = _read_poly(args.poly)
    f = parse_poly(text, detect_vars(text), cfg.field)
    if args.exceptional:
        E = exceptional_set(f)
        payload = E.to_json()
        lines = [f"d = {E.d}, a0(a) = {E.a0}"]
        for m, entries in sorted(E.per_divisor.items()):
            hs = ", ".join(str(e.h) for e in entries)
            lines.append(f"m={m}: [{hs}] (degree bound {E.degree_bound(m)})")
        if not E.per_divisor:
            lines.append("no nontrivial divisor: every a* with a0(a*) != 0 is certified")
        if args.alpha is not None and args.t is not None:
            c = certify_specialization(E, _scalar(args.alpha, cfg.field), _scalar(args.t, cfg.field))
            payload["certification"] = {"certified": c.certified, "failing": list(c.failing), "reason": c.reason}
            lines.append("Certified" if c.certified else f"NotCertified {list(c.failing)} {c.reason}")
        _emit(cfg, payload, lines)
        return EXIT_OK
    if args.montecarlo:
        if cfg.field == QQ:
            S = SampleSet(QQ, cfg.sample_size or 1000)
        else:
            S = SampleSet(cfg.field, cfg.sample_size or None)
        rep = monte_carlo_test(f, S, cfg.trials, cfg.seed)
        payload = rep.to_json()
        p = rep.plan
        lines = [
            f"d = {p.d}, sigma0 = {p.sigma0}, sigma1 = {p.sigma1}, D = {p.D}",
            f"S: {S.describe()} (|S| = {p.sample_size}), seed = {p.seed}",
            f"bound D/|S| = {p.failure_bound} ~ {float(p.failure_bound):.6g}",
            f"failures {rep.failures}/{len(rep.trials)}, frequency {float(rep.frequency):.6g}",
            "within bound" if rep.frequency <= p.failure_bound else "ABOVE bound",
        ]
        _emit(cfg, payload, lines)
        return EXIT_OK
    if args.alpha is None or args.t is None:
        raise PreconditionError("specialize needs --alpha and --t, --exceptional or --montecarlo")
    v = multivar_specialize_and_test(f, _scalars(args.alpha, cfg.field), _scalars(args.t, cfg.field))
    payload = {"poly": str(v.poly), "verdict": v.status, "degreeDropped": v.degree_dropped}
    if v.u is not None:
        payload.update(u=str(v.u), g=str(v.g), field=repr(v.field))
    if v.note:
        payload["note"] = v.note
    word = {"indecomposable": "Indecomposable", "decomposable": "Decomposable", "degree_dropped": "DegreeDropped"}[v.status]
    line = f"{word} ({v.poly})"
    if v.u is not None:
        line += f" u={v.u} g={v.g}"
        if v.note:
            line += f" [{v.note}]"
    if v.degree_dropped and v.status != "degree_dropped":
        line += " [degree dropped]"
    _emit(cfg, payload, [line])
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="polydec", description="Polynomial decomposition toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q | fp:<p> | fq:<p>^<k> (k <= 3)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="random seed (fallback: $POLYDEC_SEED)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="print the canonical form")
    p.add_argument("poly")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("decompose", parents=[common], help="decide decomposability")
    p.add_argument("poly")
    p.add_argument("--m", type=int, default=None, help="only compute the m-decomposition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("modp", parents=[common], help="reduction modulo primes")
    p.add_argument("poly")
    p.add_argument("--p", type=int, default=None, help="test a single prime")
    p.set_defaults(func=cmd_modp)

    p = sub.add_parser("specialize", parents=[common], help="specializations t -> t* + a* x")
    p.add_argument("poly")
    p.add_argument("--alpha", default=None)
    p.add_argument("--t", default=None)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exceptional", action="store_true")
    mode.add_argument("--montecarlo", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--sample-size", type=int, default=0)
    p.set_defaults(func=cmd_specialize)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        seed = args.seed
        if seed is None:
            seed = int(os.environ.get("POLYDEC_SEED", "0"))
        cfg = CliConfig(
            field=field_from_spec(args.field),
            seed=seed,
            format=args.format,
            sample_size=getattr(args, "sample_size", 0),
            trials=getattr(args, "trials", 1),
        )
        return args.func(args, cfg)
    except PolySyntaxError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantError as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PreconditionError, ZeroDivisionError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
