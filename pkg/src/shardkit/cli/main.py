"""`shardkit` command line: deal, reconstruct, verify, perfect, compile, count.

Command output goes to stdout as `key=value` lines; logs and the
one-line `error: ...` message go to stderr. The exit status of a failed
command is the `exit_code` of the error that stopped it.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from shardkit.access.compiler import compile_formula
from shardkit.access.counting import naive_share_counts
from shardkit.access.equivalence import verify_equivalence
from shardkit.access.formula import literals, minimal_clauses
from shardkit.access.perfectness import PerfectnessEnumerator
from shardkit.cli.dsl import format_scheme, parse_formula, parse_scheme
from shardkit.cli.records import Metadata, bundle_records, format_records, parse_records, records_to_bundle
from shardkit.errors import ParameterError, SchemeParseError, ShardkitError
from shardkit.sharing.compartments import deal_tree, reconstruct_tree
from shardkit.sharing.field import PrimeModulus, make_rng
from shardkit.sharing.scheme import holders, is_flat, randomness_dimension
from shardkit.utils import LogConfig, LoggingPolicy, log_time
from shardkit.utils.settings import Settings, parse_level

logger = logging.getLogger("shardkit.cli")

METADATA_FILE = "metadata.txt"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemeParseError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: Path, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _secret(raw: str, modulus: PrimeModulus) -> int:
    try:
        value = int(raw, 10)
    except ValueError:
        raise ParameterError(f"secret must be a decimal integer, got {raw!r}")
    if not 0 <= value < modulus.p:
        raise ParameterError(f"secret {value} is not an element of GF({modulus.p})")
    return value


def cmd_deal(args, settings: Settings) -> int:
    root = parse_scheme(_read(args.spec))
    modulus = PrimeModulus(args.prime if args.prime is not None else settings.prime)
    secret = modulus.element(_secret(args.secret, modulus))
    seed = args.seed if args.seed is not None else settings.seed
    bundle = deal_tree(secret, root, make_rng(seed))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    per_holder = bundle_records(bundle)
    for holder, records in sorted(per_holder.items()):
        _write(out / f"{holder}.share", format_records(records))
    _write(out / METADATA_FILE, Metadata.for_scheme(root, bundle).format())

    shares = sum(len(r) for r in per_holder.values())
    print(f"scheme={bundle.scheme_id} holders={len(per_holder)} shares={shares}")
    return 0


def cmd_reconstruct(args, settings: Settings) -> int:
    root = parse_scheme(_read(args.spec))
    records = [record for path in args.shares for record in parse_records(_read(path))]
    bundle = records_to_bundle(records, root)
    print(reconstruct_tree(bundle, root).value)
    return 0


def cmd_verify(args, settings: Settings) -> int:
    scheme = parse_scheme(_read(args.spec))
    report = verify_equivalence(scheme, parse_formula(_read(args.formula)))
    print(f"equivalent={_flag(report.equivalent)} flattened={_flag(is_flat(scheme))} subsets={report.subsets_checked}")
    if not report.equivalent:
        print(f"counterexample={','.join(sorted(report.counterexample)) or '-'}")
        return 1
    return 0


def cmd_perfect(args, settings: Settings) -> int:
    scheme = parse_scheme(_read(args.spec))
    enumerator = PerfectnessEnumerator(scheme, args.prime if args.prime is not None else settings.prime)
    subset = [h for h in args.subset.split(",") if h]
    unknown = sorted(set(subset) - set(holders(scheme)))
    if unknown:
        raise ParameterError(f"not shareholders of this scheme: {','.join(unknown)}")

    p = enumerator.modulus.p
    seed = args.seed if args.seed is not None else settings.seed
    randomness = None
    if seed is not None:
        rng = make_rng(seed)
        randomness = [rng.randrange(p) for _ in range(randomness_dimension(scheme))]
    dist = enumerator.distribution(subset, _secret(args.secret, enumerator.modulus), randomness)

    for value, count in enumerate(dist.counts):
        print(f"secret={value} count={count}")
    print(f"uniform={_flag(dist.uniform)} point_mass={_flag(dist.point_mass)}")
    return 0 if dist.uniform or dist.point_mass else 1


def cmd_compile(args, settings: Settings) -> int:
    report = compile_formula(parse_formula(_read(args.formula)))
    text = format_scheme(report.scheme) + "\n"
    if args.out:
        _write(Path(args.out), text)
    sys.stdout.write(text)
    print(
        f"flattened={_flag(report.flattened)} ideal={_flag(report.ideal)}"
        f" total_shares={report.total_shares} max_shares_per_holder={report.max_shares_per_holder}"
        f" distinct_points={report.distinct_points}"
    )
    return 0


def cmd_count(args, settings: Settings) -> int:
    f = parse_formula(_read(args.formula))
    clauses = minimal_clauses(f, literals(f))
    counts = naive_share_counts(clauses)
    compiled = compile_formula(f)
    print(f"clauses={len(clauses)}")
    print(f"naive={counts.per_clause_total} factored={counts.factored_total} compiled={compiled.total_shares}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shardkit", description="Threshold secret sharing toolkit")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR (default from SHARDKIT_LOG_LEVEL)")
    parser.add_argument("--log-file", help="also log to this rotating file")
    commands = parser.add_subparsers(dest="command", required=True)

    deal = commands.add_parser("deal", help="deal a secret according to a scheme file")
    deal.add_argument("spec")
    deal.add_argument("secret", help="decimal field element")
    deal.add_argument("--prime", type=int)
    deal.add_argument("--seed", type=int)
    deal.add_argument("--out", required=True, help="directory for share files and metadata")
    deal.set_defaults(handler=cmd_deal)

    reconstruct = commands.add_parser("reconstruct", help="recover the secret from share files")
    reconstruct.add_argument("spec")
    reconstruct.add_argument("shares", nargs="+")
    reconstruct.set_defaults(handler=cmd_reconstruct)

    verify = commands.add_parser("verify", help="compare a scheme with an access formula")
    verify.add_argument("spec")
    verify.add_argument("formula")
    verify.set_defaults(handler=cmd_verify)

    perfect = commands.add_parser("perfect", help="what a coalition learns about the secret")
    perfect.add_argument("spec")
    perfect.add_argument("--prime", type=int)
    perfect.add_argument("--subset", required=True, help="comma-separated holder ids")
    perfect.add_argument("--secret", default="0")
    perfect.add_argument("--seed", type=int)
    perfect.set_defaults(handler=cmd_perfect)

    compile_ = commands.add_parser("compile", help="build a scheme from an access formula")
    compile_.add_argument("formula")
    compile_.add_argument("--out")
    compile_.set_defaults(handler=cmd_compile)

    count = commands.add_parser("count", help="share counts of the naive and compiled schemes")
    count.add_argument("formula")
    count.set_defaults(handler=cmd_count)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
        if args.log_level:
            settings.log_level = parse_level(args.log_level)
        if args.log_file:
            settings.log_file = args.log_file
        LoggingPolicy(LogConfig.from_settings(settings))

        with log_time(f"shardkit {args.command}", logger):
            return args.handler(args, settings)
    except ShardkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
