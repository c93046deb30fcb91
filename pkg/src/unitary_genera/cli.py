# -*- coding: utf-8 -*-
"""
Created on Wed Oct 14 10:12:44 2026

Command line front end: print characteristic series and sequences, evaluate genera on
manifold descriptors, run the identity checks and the vanishing engine, and write
manifold descriptors.
"""

import argparse
import concurrent.futures
import json
import logging
import sys
import typing

from tqdm import tqdm

from . import __version__
from .errors import GeneraError
from .genera import (
    GENERA,
    Verification,
    genus_spec,
    verify_a1_is_todd,
    verify_a2_is_ahat,
    verify_a_sequence_scaling,
    verify_ak_scaling,
    verify_exp_identity,
    verify_recip_factorization,
    verify_todd_decomposition,
)
from .manifolds import (
    cp_table,
    evaluate_genus,
    hypersurface_table,
    load_table,
    product_table,
    save_table,
    table_to_dict,
)
from .series import format_rational
from .symmetric import CHERN, PONTRJAGIN
from .vanishing import (
    DEFAULT_MAX_K,
    check_theorem,
    solve_vanishing,
    synthesize_consistent_table,
    torsion_table,
)

DEFAULT_ORDER = 8
DEFAULT_VERIFY_N = 4
DEFAULT_VERIFY_ORDER = 12
DEFAULT_WORKERS = 4

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _hypersurface(value: str) -> typing.Tuple[int, int]:
    try:
        n, d = (int(part) for part in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N,D such as 2,4, got {value!r}")
    return n, d


def cmd_series(args) -> int:
    spec = genus_spec(args.name, args.k)
    series = spec.series(args.order)
    coefficients = [format_rational(value) for value in series]
    text = "\n".join(f"x^{m}: {value}" for m, value in enumerate(coefficients))
    _emit(args, text, {"genus": spec.label, "order": args.order, "coefficients": coefficients})
    return EXIT_OK


def cmd_sequence(args) -> int:
    spec = genus_spec(args.name, args.k)
    grading = spec.GRADING if args.grading is None else args.grading
    polynomials = spec.sequence(args.n, grading)
    lines = [f"{spec.SYMBOL}_{m} = {poly}" for m, poly in enumerate(polynomials, start=1)]
    payload = {
        "genus": spec.label,
        "grading": grading,
        "polynomials": [str(poly) for poly in polynomials],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _table_from_args(args):
    if args.manifest is not None:
        return load_table(args.manifest)
    if args.cp is not None:
        return cp_table(args.cp)
    return hypersurface_table(*args.hypersurface)


def cmd_genus(args) -> int:
    spec = genus_spec(args.name, args.k)
    table = _table_from_args(args)
    value = format_rational(evaluate_genus(table, spec))
    _emit(args, value, {"genus": spec.label, "half_dim": table.half_dim, "value": value})
    return EXIT_OK


IDENTITIES = (
    "todd-decomposition",
    "exp-identity",
    "ak-scaling",
    "a2-is-ahat",
    "recip-factorization",
    "a-sequence",
    "a1-is-todd",
)


def _verification_jobs(
    identity: str, n: int, ks: typing.Sequence[int], order: int, every_n: bool
) -> typing.List[typing.Tuple[typing.Callable, tuple]]:
    """(function, arguments) of every check an identity expands to. With every_n the
    dimension dependent checks run for 1..n, otherwise for n only."""

    dimensions = range(1, n + 1) if every_n else [n]
    if identity == "todd-decomposition":
        return [(verify_todd_decomposition, (k, m)) for m in dimensions for k in range(1, m + 1)]
    if identity == "exp-identity":
        return [(verify_exp_identity, (k, order)) for k in ks]
    if identity == "ak-scaling":
        return [(verify_ak_scaling, (k, m)) for k in ks for m in dimensions]
    if identity == "a2-is-ahat":
        return [(verify_a2_is_ahat, (m,)) for m in dimensions]
    if identity == "recip-factorization":
        return [(verify_recip_factorization, (k, m)) for k in ks for m in dimensions]
    if identity == "a-sequence":
        return [(verify_a_sequence_scaling, (s,)) for s in range(1, (n + 1) // 2 + 1)]
    return [(verify_a1_is_todd, (order,))]


def cmd_verify(args) -> int:
    if args.all == (args.identity is not None):
        args.parser.error("give exactly one identity or --all")
    if args.n < 1 or args.kmax < 2 or args.order < 0 or args.workers < 1:
        args.parser.error("need --n >= 1, --kmax >= 2, --order >= 0 and --workers >= 1")
    ks = [args.k] if args.k is not None else list(range(2, args.kmax + 1))
    identities = IDENTITIES if args.all else (args.identity,)
    jobs = []
    for identity in identities:
        jobs.extend(_verification_jobs(identity, args.n, ks, args.order, args.all))

    results: typing.List[Verification] = [None] * len(jobs)
    with concurrent.futures.ThreadPoolExecutor(max_workers=args.workers) as executor:
        futures = {
            executor.submit(function, *arguments): index
            for index, (function, arguments) in enumerate(jobs)
        }
        # Progress bar only displayed if verbose
        with tqdm(disable=not args.verbose, total=len(jobs), ncols=100) as progress_bar:
            for future in concurrent.futures.as_completed(futures):
                results[futures[future]] = future.result()
                if not results[futures[future]].passed:
                    progress_bar.write(f"Failed: {results[futures[future]].name}")
                progress_bar.update(1)

    passed = all(result.passed for result in results)
    lines = [result.describe() for result in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    payload = {
        "checks": [
            {"name": r.name, "passed": r.passed, "witness": str(r.witness)} for r in results
        ],
        "passed": passed,
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_hattori(args) -> int:
    if args.manifest is not None:
        if args.n is not None or args.k0 is not None:
            args.parser.error("--manifest cannot be combined with --n or --k0")
        report = check_theorem(load_table(args.manifest), args.max_k, args.verbose)
    else:
        if args.n is None or args.k0 is None:
            args.parser.error("give --n and --k0, or --manifest")
        report = solve_vanishing(args.n, args.k0, args.max_k)
    _emit(args, report.render_text(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_mk_manifold(args) -> int:
    if args.kind == "cp":
        table = cp_table(args.n)
    elif args.kind == "hypersurface":
        table = hypersurface_table(args.n, args.d)
    elif args.kind == "product":
        table = product_table(load_table(args.first), load_table(args.second))
    elif args.kind == "synthetic":
        table = synthesize_consistent_table(args.n, args.k0, args.seed)
    else:
        table = torsion_table(args.n, args.k0, args.seed)
    if args.out is not None:
        save_table(table, args.out)
        logging.info(f"Wrote the {args.kind} descriptor to {args.out}")
    else:
        print(json.dumps(table_to_dict(table), indent=2))
    return EXIT_OK


def _genus_arguments(parser):
    parser.add_argument("name", choices=sorted(GENERA), help="registry name of the genus")
    parser.add_argument("--k", type=int, help="the k of the a_k and a_recip_k families")


def build_parser() -> argparse.ArgumentParser:
    logged = argparse.ArgumentParser(add_help=False)
    logged.add_argument("--verbose", action="store_true", help="log progress messages")
    common = argparse.ArgumentParser(add_help=False, parents=[logged])
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="unitary-genera",
        description="Exact multiplicative sequences, genera and the Hattori vanishing engine.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    series = commands.add_parser("series", parents=[common], help="characteristic series")
    _genus_arguments(series)
    series.add_argument("--order", type=int, default=DEFAULT_ORDER)
    series.set_defaults(handler=cmd_series)

    sequence = commands.add_parser("sequence", parents=[common], help="multiplicative sequence")
    _genus_arguments(sequence)
    sequence.add_argument("--n", type=int, required=True)
    sequence.add_argument("--grading", choices=[CHERN, PONTRJAGIN])
    sequence.set_defaults(handler=cmd_sequence)

    genus = commands.add_parser("genus", parents=[common], help="evaluate a genus")
    _genus_arguments(genus)
    manifold = genus.add_mutually_exclusive_group(required=True)
    manifold.add_argument("--manifest", help="JSON manifold descriptor")
    manifold.add_argument("--cp", type=int, help="complex projective space CP^n")
    manifold.add_argument(
        "--hypersurface", type=_hypersurface, help="degree D hypersurface of dimension N as N,D"
    )
    genus.set_defaults(handler=cmd_genus)

    verify = commands.add_parser("verify", parents=[common], help="check identities")
    verify.add_argument("identity", nargs="?", choices=IDENTITIES)
    verify.add_argument("--all", action="store_true", help="run every identity")
    verify.add_argument("--n", type=int, default=DEFAULT_VERIFY_N)
    verify.add_argument("--k", type=int)
    verify.add_argument("--kmax", type=int, default=DEFAULT_MAX_K)
    verify.add_argument("--order", type=int, default=DEFAULT_VERIFY_ORDER)
    verify.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    verify.set_defaults(handler=cmd_verify, parser=verify)

    hattori = commands.add_parser("hattori", parents=[common], help="vanishing engine")
    hattori.add_argument("--n", type=int)
    hattori.add_argument("--k0", type=int)
    hattori.add_argument("--manifest", help="check the conclusions on a descriptor")
    hattori.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    hattori.set_defaults(handler=cmd_hattori, parser=hattori)

    mk_manifold = commands.add_parser("mk-manifold", help="write a manifold descriptor")
    kinds = mk_manifold.add_subparsers(dest="kind", required=True)
    cp = kinds.add_parser("cp", parents=[logged])
    cp.add_argument("n", type=int)
    hypersurface = kinds.add_parser("hypersurface", parents=[logged])
    hypersurface.add_argument("n", type=int)
    hypersurface.add_argument("d", type=int)
    product = kinds.add_parser("product", parents=[logged])
    product.add_argument("first")
    product.add_argument("second")
    for kind in ("synthetic", "torsion"):
        random_table = kinds.add_parser(kind, parents=[logged])
        random_table.add_argument("--n", type=int, required=True)
        random_table.add_argument("--k0", type=int, required=True)
        random_table.add_argument("--seed", type=int, default=0)
    for kind_parser in kinds.choices.values():
        kind_parser.add_argument("--out", help="file to write, stdout when omitted")
    mk_manifold.set_defaults(handler=cmd_mk_manifold)
    return parser


def main(argv: typing.Sequence[str] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.handler(args)
    except GeneraError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE
