"""Command-line interface: one executable, one subcommand per operation.

Exit codes: 0 on success (and for valid inputs), 2 when a well-formed input
fails the property being checked (invalid signature, non-realizable
matrix, non-shellable order), 1 for usage or input errors.  Machine-read
output lines use key=value pairs with a stable key set.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import construct, search, shellab, stats, transform
from .classify import check_pseudolinear, check_semisimple, check_simple, is_two_page
from .sigcore import (
    PreconditionError,
    SigFormatError,
    SignatureFunction,
    emit_signature,
    parse_signature,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2

_CHECKS = {
    "semisimple": check_semisimple,
    "simple": check_simple,
    "pseudolinear": check_pseudolinear,
}


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _load_signature(path: str) -> SignatureFunction:
    return parse_signature(_read_bytes(path))


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _cmd_validate(args) -> int:
    sigma = _load_signature(args.file)
    verdict = _CHECKS[args.level](sigma)
    if verdict.valid:
        print(f"valid=true level={args.level} n={sigma.n}")
        return EXIT_OK
    idx = ",".join(str(v) for v in verdict.witness)
    print(f"valid=false level={args.level} n={sigma.n} witness=({idx}) form={verdict.signs}")
    return EXIT_INVALID


def _cmd_stats(args) -> int:
    sigma = _load_signature(args.file)
    st = stats.k_edge_vector(sigma)
    report = stats.verify_identities(sigma) if sigma.n >= 3 else None
    print(f"edge statistics for n={st.n}")
    print(f"{'k':>4} {'E_k':>6} {'E_<=k':>7} {'E_<<k':>7} {'E_<<<k':>7}")
    for k in range(len(st.e_k)):
        print(
            f"{k:>4} {st.e_k[k]:>6} {st.le[k]:>7} {st.lele[k]:>7} {st.lelele[k]:>7}"
        )
    print(f"n={st.n}")
    print(f"convex_quads={st.convex_quads}")
    if report is not None:
        print(f"cr_from_quads={report.cr_from_quads}")
        print(f"cr_from_ek={report.cr_from_ek}")
        print(f"cr_from_lele={report.cr_from_lele}")
        print(f"lelele_compact={report.lelele_compact}")
        print(f"identity={'ok' if report.all_equal else 'FAIL'}")
        if not report.all_equal:
            return EXIT_INVALID
    print(f"two_page={'true' if is_two_page(sigma) else 'false'}")
    return EXIT_OK


def _cmd_realize(args) -> int:
    sigma = _load_signature(args.file)
    drawing = construct.realize(sigma)
    fmt = args.format
    if fmt is None and args.output:
        fmt = "svg" if args.output.lower().endswith(".svg") else "json"
    if fmt is None:
        fmt = "json"
    if fmt == "svg":
        options = construct.SvgOptions(mark_crossings=not args.no_marks)
        _write_output(construct.to_svg(drawing, options), args.output)
    else:
        _write_output(construct.drawing_to_json(drawing) + "\n", args.output)
    report = construct.drawing_crossings(drawing)
    print(f"crossings={report.total_crossings}", file=sys.stderr)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    config = search.SearchConfig(n=args.n, level=args.level)
    if args.print_signatures:
        result = search.enumerate_valid(config, lambda s: print(s.signs))
    else:
        result = search.enumerate_valid(config)
    print(f"n={args.n} level={args.level} count={result.count} "
          f"nodes={result.nodes_visited} complete={str(result.complete).lower()}")
    return EXIT_OK


def _long_gate(n: int, long_flag: bool) -> None:
    if n >= 9 and not long_flag:
        raise SystemExit(
            f"minimize with n={n} is not desk-scale; pass --long to run it anyway"
        )


def _cmd_minimize(args) -> int:
    _long_gate(args.n, args.long)
    config = search.SearchConfig(
        n=args.n, level=args.level, mode="minimize", best_bound=args.bound
    )
    if args.engine == "numba":
        if args.threads > 1 or args.shard_m or args.checkpoint or args.resume:
            raise SigFormatError(
                "--engine numba supports neither sharding nor checkpoints"
            )
        from . import fastsearch

        result = fastsearch.min_crossing_search_fast(config)
    else:
        result = search.min_crossing_search(
            config,
            threads=args.threads,
            shard_m=args.shard_m,
            checkpoint_path=args.checkpoint,
            resume=args.resume,
        )
    z = stats.zeta(args.n)
    minimum = result.minimum if result.minimum is not None else "none"
    print(
        f"n={args.n} level={args.level} minimum={minimum} Z={z} "
        f"minimal={len(result.minimal_signatures)} classes={result.class_count} "
        f"nodes={result.nodes_visited} complete={str(result.complete).lower()}"
    )
    return EXIT_OK


def _cmd_canonical(args) -> int:
    sigma = _load_signature(args.file)
    rep = transform.canonical(sigma)
    sys.stdout.write(emit_signature(rep))
    return EXIT_OK


def _cmd_classes(args) -> int:
    _long_gate(args.n, args.long)
    config = search.SearchConfig(n=args.n, level=args.level, mode="minimize")
    if args.engine == "numba":
        from . import fastsearch

        result = fastsearch.min_crossing_search_fast(config)
    else:
        result = search.min_crossing_search(config, threads=args.threads)
    groups = search.minimal_classes(result)
    print(
        f"n={args.n} minimum={result.minimum} classes={len(groups)} "
        f"complete={str(result.complete).lower()}"
    )
    for idx, group in enumerate(groups, start=1):
        two_page = any(is_two_page(s) for s in group)
        print(
            f"class={idx} size={len(group)} two_page={str(two_page).lower()} "
            f"representative={group[0].signs}"
        )
    return EXIT_OK


def _cmd_shelling(args) -> int:
    sigma = _load_signature(args.file)
    if args.order:
        try:
            perm = tuple(int(v) for v in args.order.split(","))
        except ValueError:
            raise SigFormatError(f"bad order {args.order!r}; expected e.g. 1,3,2")
        ok = shellab.is_shellable_order(sigma, perm)
        print(f"order={args.order} shellable={str(ok).lower()}")
        return EXIT_OK if ok else EXIT_INVALID
    order = shellab.find_shelling_order(sigma)
    if order is None:
        print("shelling=none")
        return EXIT_INVALID
    print("shelling=" + ",".join(str(v) for v in order))
    return EXIT_OK


def _cmd_lambda(args) -> int:
    sigma = _load_signature(args.file)
    lam = shellab.lambda_matrix(sigma)
    _write_output(shellab.emit_lambda(lam), args.output)
    return EXIT_OK


def _cmd_unlambda(args) -> int:
    lam = shellab.parse_lambda(_read_bytes(args.file))
    sigma = shellab.signature_from_lambda(lam)
    _write_output(emit_signature(sigma), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monosig",
        description=(
            "Signature functions of x-monotone drawings of complete graphs: "
            "validation, edge statistics, drawing synthesis, switching "
            "classes, and exact crossing minimization."
        ),
        epilog=(
            "File formats: SIG ('sig v1' / 'n N' / C(N,3) signs in "
            "lexicographic triple order), lambda ('lam v1' / 'n N' / N rows "
            "of N integers), drawing JSON and SVG as documented in the "
            "repository."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a signature against a drawing class")
    p.add_argument("file", help="SIG file")
    p.add_argument("--level", choices=sorted(_CHECKS), default="semisimple")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("stats", help="k-edge vectors and crossing identities")
    p.add_argument("file", help="SIG file")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("realize", help="draw a signature (JSON or SVG)")
    p.add_argument("file", help="SIG file")
    p.add_argument("-o", "--output", help="output path (.svg or .json)")
    p.add_argument("--format", choices=("svg", "json"))
    p.add_argument("--no-marks", action="store_true", help="omit crossing markers")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("enumerate", help="count or list all valid signatures")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--level", choices=sorted(_CHECKS), default="simple")
    p.add_argument("--count", action="store_true", help="print the count (default)")
    p.add_argument("--print", dest="print_signatures", action="store_true",
                   help="also print every signature sign string")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("minimize", help="exact minimum crossing search")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--level", choices=sorted(_CHECKS), default="simple")
    p.add_argument("--long", action="store_true",
                   help="allow runs beyond desk scale (n >= 9)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--bound", type=int, help="seed incumbent (must be attainable)")
    p.add_argument("--shard-m", type=int, help="shard the search by prefixes on [m]")
    p.add_argument("--checkpoint", help="write a resumable checkpoint here")
    p.add_argument("--resume", action="store_true",
                   help="resume from --checkpoint instead of starting fresh")
    p.add_argument("--engine", choices=("python", "numba"), default="python",
                   help="numba runs the same search JIT-compiled (for --long)")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("canonical", help="canonical representative of the orbit")
    p.add_argument("file", help="SIG file")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("classes", help="switching classes among the minima")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--level", choices=sorted(_CHECKS), default="simple")
    p.add_argument("--long", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--engine", choices=("python", "numba"), default="python")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("shelling", help="check or find a shelling order")
    p.add_argument("file", help="SIG file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--order", help="comma-separated vertex sequence, e.g. 1,3,2")
    g.add_argument("--find", action="store_true", help="search for one (default)")
    p.set_defaults(func=_cmd_shelling)

    p = sub.add_parser("lambda", help="lambda matrix of a signature")
    p.add_argument("file", help="SIG file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("unlambda", help="signature back from a lambda matrix")
    p.add_argument("file", help="lambda file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_unlambda)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (SigFormatError, FileNotFoundError, IsADirectoryError, ValueError) as exc:
        if isinstance(exc, (PreconditionError, shellab.NotRealizableError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
