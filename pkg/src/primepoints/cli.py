"""Command line entry point: each module behind a subcommand, JSON results
on stdout with a reproducible run manifest, integers as decimal strings."""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, is_dataclass

from . import __version__
from .congruence import obstruction_admits_primes, odd_residue_reachability
from .construct import (
    TwoCoprimeSpec,
    two_coprime_tuples,
    validate_two_coprime_tuple,
)
from .errors import DomainError
from .intertwined import (
    b_pair_witness,
    det_pair_witness,
    haf_pair_witness,
    perm_pair_witness,
    pf_pair_witness,
    validate_witness,
)
from .invariants import (
    IntMatrix,
    VarietyFamily,
    VarietyPoint,
    big_p,
    det,
    hf,
    perm,
    pf,
    quad_form,
)
from .search import SearchConfig, find_prime_points
from .vaughan import (
    LinearEquation,
    check_conditions,
    count_prime_solutions,
    growth_report,
)

CI_ENV = "PRIMEPOINTS_CI"


def _encode(obj):
    """JSON-safe view with every integer rendered as a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return _encode(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_encode(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _digest(encoded) -> str:
    blob = json.dumps(encoded, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _emit(subcommand: str, argv: list[str], seed: int | None, result,
          started: float) -> int:
    encoded = _encode(result)
    envelope = {
        "result": encoded,
        "manifest": {
            "subcommand": subcommand,
            "argv": argv,
            "seed": seed,
            "version": __version__,
            "wall_time_ms": round((time.perf_counter() - started) * 1000, 3),
            "result_digest": _digest(encoded),
        },
    }
    print(json.dumps(envelope, indent=2))
    return 0


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _family_from_args(args) -> VarietyFamily:
    kind = args.family
    if kind == "quad":
        return VarietyFamily("quad", args.n, k=args.k if args.k is not None else 0)
    if kind == "rect":
        if args.ell is None:
            raise DomainError("rect requires --ell")
        return VarietyFamily("rect", args.n, ell=args.ell)
    return VarietyFamily(kind, args.n)


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True,
                   choices=["det", "quad", "pf", "rect", "perm", "haf"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="quad only")
    p.add_argument("--ell", type=int, default=None, help="rect only")


def _load_matrix(path: str) -> IntMatrix:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return IntMatrix.from_rows([[int(e) for e in row] for row in data])
    return IntMatrix.from_json_dict(data)


def _resolve_seed(args, parser: argparse.ArgumentParser) -> int:
    if getattr(args, "seed", None) is None:
        if os.environ.get(CI_ENV):
            parser.error(f"--seed is required when {CI_ENV} is set")
        return 1
    return args.seed


def _cmd_invariant(args, argv, parser, started):
    if args.kind == "quad":
        with open(args.input) as fh:
            data = json.load(fh)
        try:
            n, k = int(data["n"]), int(data["k"])
            coords = tuple(int(c) for c in data["coordinates"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed quad input: {exc}")
        value = quad_form(VarietyPoint(VarietyFamily("quad", n, k=k), coords))
    else:
        mat = _load_matrix(args.input)
        if args.kind == "bigp":
            if args.ell is None:
                raise DomainError("--kind bigp requires --ell")
            value = big_p(mat, args.ell)
        else:
            value = {"det": det, "perm": perm, "pf": pf, "hf": hf}[args.kind](mat)
    return _emit("invariant", argv, None, {"value": value}, started)


def _cmd_obstruction(args, argv, parser, started):
    report = obstruction_admits_primes(_family_from_args(args), args.m)
    return _emit("obstruction", argv, None, report, started)


def _cmd_reachability(args, argv, parser, started):
    result = odd_residue_reachability(_family_from_args(args), args.e)
    return _emit("reachability", argv, None, result, started)


def _cmd_vaughan(args, argv, parser, started):
    eq = LinearEquation(args.alpha, args.m)
    mode = "positive" if args.positive else "signed"
    if args.vaughan_cmd == "check":
        return _emit("vaughan", argv, None, check_conditions(eq), started)
    if args.vaughan_cmd == "count":
        report = count_prime_solutions(eq, args.T, mode, not args.no_two)
        return _emit("vaughan", argv, None, report, started)
    points = growth_report(eq, args.Ts, mode, not args.no_two)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("T,count,normalized\n")
            for gp in points:
                fh.write(f"{gp.T},{gp.count},{gp.normalized}\n")
    return _emit("vaughan", argv, None, {"points": points}, started)


def _cmd_intertwined(args, argv, parser, started):
    seed = _resolve_seed(args, parser)
    if args.family == "bigp":
        dims = args.size
        if len(dims) != 3:
            raise DomainError("bigp expects --size ell,n,i")
        F, Ft, witness = b_pair_witness(*dims)
    else:
        if len(args.size) != 1:
            raise DomainError(f"{args.family} expects a single --size value")
        maker = {"det": det_pair_witness, "perm": perm_pair_witness,
                 "pf": pf_pair_witness, "haf": haf_pair_witness}[args.family]
        F, Ft, witness = maker(args.size[0])
    verdict = validate_witness(F, Ft, witness, seed=seed)
    result = {"F": F, "F_tilde": Ft, "witness": witness,
              "validation": {"ok": verdict.ok, "failure": verdict.failure}}
    return _emit("intertwined", argv, seed, result, started)


def _cmd_construct(args, argv, parser, started):
    seed = _resolve_seed(args, parser)
    if len(args.q) != len(args.alpha) or len(args.s) != len(args.alpha):
        raise DomainError("--q and --s must match --alpha in length")
    spec = TwoCoprimeSpec(args.alpha, args.beta, args.gamma,
                          tuple(zip(args.q, args.s)))
    tuples = two_coprime_tuples(spec, args.count, seed)
    transcript = [{"tuple": y, "valid": validate_two_coprime_tuple(spec, y)}
                  for y in tuples]
    return _emit("construct", argv, seed,
                 {"tuples": tuples, "validation": transcript}, started)


def _cmd_search(args, argv, parser, started):
    seed = _resolve_seed(args, parser)
    config = SearchConfig(family=_family_from_args(args), m=args.m,
                          coordinate_bound=args.T, budget=args.budget,
                          limit=args.limit, seed=seed)
    report = find_prime_points(config, force=args.force)
    return _emit("search", argv, seed, report, started)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primepoints",
        description="Exact invariants, congruence obstructions, and prime-point "
                    "searches on six families of integer varieties.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="evaluate one invariant on a JSON matrix")
    p.add_argument("--kind", required=True,
                   choices=["det", "perm", "pf", "hf", "bigp", "quad"])
    p.add_argument("--input", required=True, help="path to matrix JSON")
    p.add_argument("--ell", type=int, default=None, help="bigp only")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("obstruction", help="congruence obstruction report")
    _add_family_flags(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_obstruction)

    p = sub.add_parser("reachability", help="odd residues reached mod 2^e")
    _add_family_flags(p)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=_cmd_reachability)

    p = sub.add_parser("vaughan", help="prime solutions of linear equations")
    vsub = p.add_subparsers(dest="vaughan_cmd", required=True)
    for name in ("check", "count", "growth"):
        vp = vsub.add_parser(name)
        vp.add_argument("--alpha", type=_int_list, required=True)
        vp.add_argument("--m", type=int, required=True)
        vp.add_argument("--positive", action="store_true")
        vp.add_argument("--no-two", action="store_true",
                        help="exclude the prime 2 from solutions")
        if name == "count":
            vp.add_argument("--T", type=int, required=True)
        if name == "growth":
            vp.add_argument("--Ts", type=_int_list, required=True)
            vp.add_argument("--csv", default=None, help="also write a CSV table")
        vp.set_defaults(func=_cmd_vaughan)

    p = sub.add_parser("intertwined", help="pair witnesses and validation")
    isub = p.add_subparsers(dest="intertwined_cmd", required=True)
    ip = isub.add_parser("demo")
    ip.add_argument("--family", required=True,
                    choices=["det", "perm", "pf", "haf", "bigp"])
    ip.add_argument("--size", type=_int_list, required=True,
                    help="order (det/perm/pf/haf) or ell,n,i (bigp)")
    ip.add_argument("--seed", type=int, default=None)
    ip.set_defaults(func=_cmd_intertwined)

    p = sub.add_parser("construct", help="prime tuples with 2-coprime forms")
    csub = p.add_subparsers(dest="construct_cmd", required=True)
    cp = csub.add_parser("two-coprime")
    cp.add_argument("--alpha", type=_int_list, required=True)
    cp.add_argument("--beta", type=int, required=True)
    cp.add_argument("--gamma", type=int, required=True)
    cp.add_argument("--q", type=_int_list, required=True)
    cp.add_argument("--s", type=_int_list, required=True)
    cp.add_argument("--count", type=int, default=3)
    cp.add_argument("--seed", type=int, default=None)
    cp.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search", help="find prime points with form value m")
    _add_family_flags(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--T", type=int, required=True, help="coordinate bound")
    p.add_argument("--limit", type=int, default=3)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--force", action="store_true",
                   help="search even when the obstruction precheck fails")
    p.set_defaults(func=_cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, argv, parser, started)
    except DomainError as exc:
        print(json.dumps({"error": {"kind": exc.kind, "message": str(exc)}},
                         indent=2))
        return 1


if __name__ == "__main__":
    sys.exit(main())
