"""The `derivring` command: seeded verification campaigns with
deterministic JSON or text reports.

Exit codes: 0 when every checked property held, 1 when a property was
violated (the report lists where), 2 on configuration or contract
errors. Wall time goes to stderr; the report itself is byte-stable for a
fixed configuration.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .campaign import SUITES, CampaignConfig, run_campaign
from .errors import DerivringError, DomainError
from .rings import PolyRing, Zmod
from .twolocal import NoiseSpec


def parse_ring(text):
    """zmod:M or poly:zmod:M."""
    parts = text.split(":")
    try:
        if len(parts) == 2 and parts[0] == "zmod":
            return Zmod(int(parts[1]))
        if len(parts) == 3 and parts[0] == "poly" and parts[1] == "zmod":
            return PolyRing(Zmod(int(parts[2])))
    except ValueError:
        pass
    raise DomainError(f"unrecognized ring {text!r}; use zmod:M or poly:zmod:M")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="derivring",
        description="Exact verification campaigns for derivations on matrix rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--ring", default="zmod:5", help="zmod:M or poly:zmod:M")
    verify.add_argument("--n", type=int, default=2, help="matrix dimension")
    verify.add_argument("--trials", type=int, default=100, help="instances to run")
    verify.add_argument(
        "--seed",
        type=int,
        default=None,
        help="campaign seed; falls back to $DERIVRING_SEED, then 0",
    )
    verify.add_argument(
        "--noise",
        choices=[spec.value for spec in NoiseSpec],
        default="none",
        help="witness ambiguity for the generated instances",
    )
    verify.add_argument(
        "--max-degree", type=int, default=3, help="degree cap for sampled polynomials"
    )
    verify.add_argument(
        "--delta",
        default="zero",
        help="base derivation for the extend suite: zero, d/dt, or t*d/dt",
    )
    verify.add_argument(
        "--max-len", type=int, default=6, help="word length for the two-generator suite"
    )
    verify.add_argument(
        "--samples", type=int, default=20, help="per-instance samples (theorem suites)"
    )
    verify.add_argument("--format", choices=["json", "text"], default="json")
    verify.add_argument("--out", default=None, help="write the report to a file")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        seed = args.seed
        if seed is None:
            raw = os.environ.get("DERIVRING_SEED", "0")
            try:
                seed = int(raw)
            except ValueError:
                raise DomainError(f"DERIVRING_SEED must be an integer, got {raw!r}")
        config = CampaignConfig(
            suite=args.suite,
            ring=parse_ring(args.ring),
            n=args.n,
            trials=args.trials,
            seed=seed,
            noise=NoiseSpec(args.noise),
            max_degree=args.max_degree,
            delta=args.delta,
            max_len=args.max_len,
            samples=args.samples,
        )
        report = run_campaign(config)
    except DerivringError as exc:
        print(f"derivring: error: {exc}", file=sys.stderr)
        return 2
    payload = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(payload + "\n")
    else:
        print(payload)
    print(f"# wall time: {report.wall_ms:.1f} ms", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
