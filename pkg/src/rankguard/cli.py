"""Command-line front end.

Subcommands: build-scheme, rgrw, rdip, equivocation, strength, simulate,
verify-capability, acceptance.  Tables go to CSV, structured reports to
JSON; identical config and seed give byte-identical output.  Exit codes:
0 success, 2 precondition violation, 3 enumeration overflow.
RANKGUARD_THREADS caps parallel fan-out of the enumeration reductions.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .acceptance import run_suite
from .codes import LinearCode
from .coset_scheme import NestedScheme, build_proposed, lift
from .decoder import capability_report, decode_coherent, decode_noncoherent
from .errors import EnumerationTooLarge, PreconditionError, RankguardError
from .gf import ctx_new
from .network import ChannelRealization, sample_error_pair, sample_matrix, sample_transfer, transmit
from .rank_metrics import rdip, rgrw
from .security import JointDistribution, leakage_report, omega_bounds, omega_exact

CONFIG_VERSION = 1


def _split_rng(seed, *tags) -> random.Random:
    return random.Random(":".join([str(seed), *map(str, tags)]))


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_json(path: str) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version", CONFIG_VERSION) != CONFIG_VERSION:
        raise PreconditionError(f"{path}: unsupported config version {data.get('version')}")
    return data


def _modulus_arg(text: str | None):
    if text is None:
        return None
    return [int(c) for c in text.split(",")]


def cmd_build_scheme(args) -> int:
    ctx = ctx_new(args.q, args.m, _modulus_arg(args.modulus))
    scheme = build_proposed(ctx, args.l, args.n, args.k)
    data = scheme.to_json()
    if args.seed is not None:
        data["seed"] = args.seed
    _write_text(args.out, json.dumps(data, indent=2, sort_keys=True) + "\n")
    return 0


def _load_pair(code_path: str, subcode_path: str) -> tuple[LinearCode, LinearCode]:
    c1 = LinearCode.from_json(_load_json(code_path))
    c2 = LinearCode.from_json(_load_json(subcode_path), c1.ctx)
    return c1, c2


def _tables_csv(c1: LinearCode, c2: LinearCode) -> str:
    profile = rdip(c1, c2)
    weights = rgrw(c1, c2)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["parameter", "i", "value"])
    for i, v in enumerate(profile.values):
        writer.writerow(["rdip", i, v])
    for i, v in enumerate(weights.values, start=1):
        writer.writerow(["rgrw", i, v])
    return buf.getvalue()


def cmd_rgrw(args) -> int:
    c1, c2 = _load_pair(args.code, args.subcode)
    _write_text(args.out, _tables_csv(c1, c2))
    return 0


def cmd_rdip(args) -> int:
    return cmd_rgrw(args)


def _distribution(scheme: NestedScheme, name: str, seed) -> JointDistribution:
    if name == "uniform":
        return JointDistribution.uniform(scheme)
    if name == "seeded":
        return JointDistribution.seeded(scheme, _split_rng(seed, "dist"))
    raise PreconditionError(f"--dist must be 'uniform' or 'seeded', got {name!r}")


def cmd_equivocation(args) -> int:
    scheme = NestedScheme.from_json(_load_json(args.scheme))
    dist = _distribution(scheme, args.dist, args.seed)
    report = leakage_report(scheme, args.mu, dist)
    _write_text(args.out, json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_strength(args) -> int:
    scheme = NestedScheme.from_json(_load_json(args.scheme))
    omega = omega_exact(scheme)
    low, high = omega_bounds(scheme)
    data = {"omega": omega, "lower_bound": low, "upper_bound": high}
    _write_text(args.out, json.dumps(data, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify_capability(args) -> int:
    scheme = NestedScheme.from_json(_load_json(args.scheme))
    report = capability_report(scheme, args.t, args.rho, mode=args.mode,
                               trials=args.trials, budget=args.budget, seed=args.seed)
    _write_text(args.out, json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    return 0


def _simulate_rows(config: dict):
    required = ["q", "m", "l", "n", "k", "N", "t", "rho_max", "trials", "seed"]
    missing = [key for key in required if key not in config]
    if missing:
        raise PreconditionError(f"scenario config missing fields {missing}")
    ctx = ctx_new(config["q"], config["m"], config.get("modulus"))
    mode = config.get("mode", "coherent")
    n, N, t = config["n"], config["N"], config["t"]
    if mode == "coherent":
        scheme = build_proposed(ctx, config["l"], n, config["k"])
        lifted = None
    elif mode == "noncoherent":
        inner_ctx = ctx_new(config["q"], config["m"] - n)
        scheme = build_proposed(inner_ctx, config["l"], n, config["k"])
        lifted = lift(scheme, ctx)
    else:
        raise PreconditionError(f"mode must be coherent or noncoherent, got {mode!r}")
    rng = _split_rng(config["seed"], "simulate")
    rows = []
    for trial in range(config["trials"]):
        A = sample_transfer(rng, ctx.q, N, n, config["rho_max"])
        D, Z = sample_error_pair(rng, ctx, N, t)
        real = ChannelRealization(A, sample_matrix(rng, ctx.q, 0, n), D,
                                  sample_matrix(rng, ctx.q, 0, t), Z)
        if lifted is None:
            S = tuple(rng.randrange(ctx.order) for _ in range(scheme.l))
            X = scheme.encode(S, rng)
            Y, _ = transmit(ctx, X, real)
            result = decode_coherent(scheme, A, Y)
        else:
            S = tuple(rng.randrange(scheme.ctx.order) for _ in range(scheme.l))
            X = lifted.lift_encode(S, rng)
            Y, _ = transmit(ctx, X, real)
            result = decode_noncoherent(lifted, Y, config["rho_max"])
        rows.append([trial, A.rank(), result.status,
                     int(result.ok and result.message == S), result.discrepancy])
    return rows


def cmd_simulate(args) -> int:
    config = _load_json(args.config)
    rows = _simulate_rows(config)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["trial", "rank_A", "status", "success", "discrepancy"])
    writer.writerows(rows)
    _write_text(args.out, buf.getvalue())
    return 0


def cmd_acceptance(args) -> int:
    results = run_suite(args.suite)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankguard",
        description="Rank-metric code parameters and secure network coding checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-scheme", help="build the explicit systematic-MRD scheme")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus", help="little-endian coefficients, e.g. 1,1,0,0,1")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build_scheme)

    for name in ("rgrw", "rdip"):
        p = sub.add_parser(name, help="profile/weight tables of a code pair")
        p.add_argument("--code", required=True)
        p.add_argument("--subcode", required=True)
        p.add_argument("--out", default="-")
        p.set_defaults(func=cmd_rgrw)

    p = sub.add_parser("equivocation", help="worst-case leakage at mu tapped links")
    p.add_argument("--scheme", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--dist", default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_equivocation)

    p = sub.add_parser("strength", help="universal maximum strength and its bounds")
    p.add_argument("--scheme", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_strength)

    p = sub.add_parser("simulate", help="seeded end-to-end trials to CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify-capability", help="error-correction verification")
    p.add_argument("--scheme", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--mode", default="exhaustive",
                   choices=["exhaustive", "exhaustive-full", "sampled"])
    p.add_argument("--trials", type=int)
    p.add_argument("--budget", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_verify_capability)

    p = sub.add_parser("acceptance", help="run a registered verification suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.set_defaults(func=cmd_acceptance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationTooLarge as exc:
        print(f"error: enumeration too large: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RankguardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
