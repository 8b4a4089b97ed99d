"""Command-line entry points.

Exit codes: 0 when every selected check passes, 1 when a check fails or a
stage aborts, 2 for configuration or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .pipeline import ALL_STAGES, ConfigError, RunConfig, config_from_file, emit_report, run

COMMAND_STAGES = {
    "run": None,  # all configured stages
    "mckay": ("group", "chartab", "mckay"),
    "tor-check": ("group", "chartab", "tor"),
    "serre-check": ("group", "hall"),
    "dims-compare": ("group", "dims"),
}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="adehall",
        description="Exact verification suite for McKay correspondence data, "
        "cluster-ideal Tor modules, and the Hall-algebra Serre relations.",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMAND_STAGES:
        q = sub.add_parser(name)
        q.add_argument("--family", nargs="+", required=True,
                       metavar=("FAMILY", "N"),
                       help="A n | D n | E6 | E7 | E8")
        q.add_argument("--modulus", type=int, default=None)
        q.add_argument("--hall-primes", default=None,
                       help="comma-separated sample primes, e.g. 2,3,5")
        q.add_argument("--held-out", type=int, default=None)
        q.add_argument("--caps", default=None,
                       help="DEGREE,HALL,AFFINE total-degree caps")
        q.add_argument("--tor-samples", type=int, default=None)
        q.add_argument("--seed", type=int, default=None)
        q.add_argument("--out", default=None, metavar="DIR")
        q.add_argument("--checks", default=None,
                       help=f"comma-separated subset of {','.join(ALL_STAGES)}, or 'all'")
        q.add_argument("--config", default=None, help="JSON config file; flags override")
    return p


def _build_config(args) -> RunConfig:
    values = {}
    if args.config:
        values.update(config_from_file(args.config))
    fam = args.family
    values["family"] = fam[0]
    if len(fam) > 1:
        values["n"] = int(fam[1])
    elif fam[0] in ("A", "D") and "n" not in values:
        raise ConfigError(f"family {fam[0]} needs a parameter, e.g. --family {fam[0]} 3")
    if args.modulus is not None:
        values["modulus"] = args.modulus
    if args.hall_primes is not None:
        values["hall_primes"] = tuple(int(x) for x in args.hall_primes.split(","))
    if args.held_out is not None:
        values["held_out"] = args.held_out
    if args.caps is not None:
        parts = [int(x) for x in args.caps.split(",")]
        for key, val in zip(("degree_cap", "hall_cap", "affine_cap"), parts):
            values[key] = val
    if args.tor_samples is not None:
        values["tor_samples"] = args.tor_samples
    if args.seed is not None:
        values["seed"] = args.seed
    if args.out is not None:
        values["out_dir"] = args.out
    if args.checks is not None and args.checks != "all":
        values["checks"] = tuple(args.checks.split(","))
    known = set(RunConfig.__dataclass_fields__)
    unknown = set(values) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "hall_primes" in values:
        values["hall_primes"] = tuple(values["hall_primes"])
    if "checks" in values:
        values["checks"] = tuple(values["checks"])
    return RunConfig(**values)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = _build_config(args)
        stages = COMMAND_STAGES[args.command]
        report = run(config, stages)
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # stage abort: failing stage and datum in the message
        print(f"stage aborted: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if config.out_dir:
        for path in emit_report(report, config.out_dir):
            print(f"wrote {path}")
    else:
        print(json.dumps(report, indent=2))
    failed = [c for c in report["checks"] if not c["pass"]]
    for c in failed:
        print(f"FAIL {c['name']}: {c['detail']}", file=sys.stderr)
    return 0 if not failed else 1


if __name__ == "__main__":
    sys.exit(main())
