"""Command-line front end.

Exit codes: 0 success, 1 NOT_FOUND (embed) or bound violated
(extend-check), 2 usage or malformed input, 3 I/O error, 4 corrupt
checkpoint.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .checkpoint import CheckpointIntegrityError, SearchCheckpoint, run_chunked
from .cocycle import CocycleSpec, assemble
from .pivots import extension_maxdet_check, ge_complete_pivoting
from .restriction import restrict_spec
from .search import (
    check_t,
    default_chunk_size,
    embed_search,
    enumerate_hadamard,
    format_records,
    records_from_hits,
)
from .signmatrix import SignMatrix, determinant, row_excess

EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTEGRITY = 4


class UsageError(Exception):
    pass


def parse_kappa(text: str) -> Fraction:
    try:
        k = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"kappa must be num/den or a decimal, got {text!r}")
    if not 0 <= k <= 1:
        raise argparse.ArgumentTypeError(f"kappa must lie in [0, 1], got {text}")
    return k


def odd_t(text: str) -> int:
    try:
        t = int(text)
        check_t(t)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return t


def _read_spec(path: str) -> CocycleSpec:
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise UsageError(f"{path}: expected exactly one spec line")
    try:
        return CocycleSpec.from_text(lines[0])
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _read_matrix(path: str) -> SignMatrix:
    try:
        return SignMatrix.from_text(Path(path).read_text())
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    lines = [spec.to_text() for spec in enumerate_hadamard(args.t)]
    lines.append(f"count={len(lines)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _table(records) -> str:
    out = [f"{'det/2^(2t-1)':>14} {'count(distinct)':>16} {'RE':>4} {'R':>14}"]
    for r in records:
        cd = f"{r.hadamard_count}({r.distinct_embedded})"
        eff = f"{r.efficiency} ~{float(r.efficiency):.4f}" if r.efficiency != 1 else "1"
        out.append(f"{r.det_over_pow2:>14} {cd:>16} {r.re_tilde:>4} {eff:>14}")
    return "\n".join(out) + "\n"


def cmd_spectrum(args) -> int:
    chunk = args.chunk_size or default_chunk_size(args.t)
    ckpath = args.checkpoint or (args.out + ".ckpt" if args.out else None)
    ck = None
    if args.resume:
        if not ckpath:
            raise UsageError("--resume needs --out or --checkpoint")
        if Path(ckpath).exists():
            ck = SearchCheckpoint.load(ckpath)
            if (ck.t, ck.chunk_size) != (args.t, chunk):
                raise UsageError(
                    f"checkpoint is for t={ck.t}, chunk size {ck.chunk_size}"
                )
    try:
        ck = run_chunked(
            args.t, chunk, ck, workers=args.workers, path=ckpath, max_chunks=args.max_chunks
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not ck.complete:
        print(
            f"incomplete: {len(ck.chunks)}/{ck.n_chunks} chunks done; rerun with --resume",
            file=sys.stderr,
        )
        return 0
    records = records_from_hits(args.t, ck.hits(), args.kappa)
    _emit(format_records(records), args.out)
    if args.out:
        sys.stdout.write(f"t={args.t} hadamard={len(ck.hits())}\n" + _table(records))
    return 0


def cmd_embed(args) -> int:
    seed = _read_spec(args.input)
    try:
        phi = embed_search(seed, with_beta1=args.with_beta1)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if phi is None:
        print("NOT_FOUND")
        return EXIT_NOT_FOUND
    print(phi.to_text())
    return 0


def cmd_restrict(args) -> int:
    spec = _read_spec(args.input)
    try:
        tilde = restrict_spec(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    M = assemble(tilde)
    print(tilde.to_text())
    sys.stdout.write(M.to_text())
    print(f"det={determinant(M)}")
    print(f"re={row_excess(M)}")
    return 0


def cmd_pivots(args) -> int:
    M = _read_matrix(args.input)
    rep = ge_complete_pivoting(M)
    if args.format == "line":
        print(rep.to_line())
    else:
        print(rep.format_pivots())
        print(f"growth={rep.growth}")
        print(f"cp={str(rep.was_cp).lower()}")
        if rep.singular:
            print(f"singular rank={rep.rank}")
    return 0


def cmd_extend_check(args) -> int:
    D = _read_matrix(args.input) if args.input else fixtures.d10()
    if D.n < 8:
        raise UsageError("need a matrix of order >= 8")
    core = D.submatrix(range(7))
    bound = determinant(D.submatrix(range(8)))
    best, count = extension_maxdet_check(core)
    ok = best <= bound
    print(f"max={best} count={count} completions={2 ** 13} bound={bound} ok={str(ok).lower()}")
    return 0 if ok else EXIT_NOT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cocyclic",
        description="Cocyclic Hadamard matrices over dihedral groups and their embedded designs.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list D_4t-Hadamard specs with beta_2 gamma")
    s.add_argument("--t", type=odd_t, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("spectrum", help="determinant spectrum of embedded D_2t-matrices")
    s.add_argument("--t", type=odd_t, required=True)
    s.add_argument("--kappa", type=parse_kappa, default=Fraction(0))
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--chunk-size", type=int)
    s.add_argument("--out")
    s.add_argument("--checkpoint", help="checkpoint path (default: OUT.ckpt)")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--max-chunks", type=int, help="stop after this many new chunks")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("embed", help="find a D_4t-Hadamard matrix containing a D_2t-matrix")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--with-beta1", action="store_true", help="also search beta_1 extensions")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("restrict", help="restrict a D_4t spec to D_2t")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("pivots", help="complete-pivoting report for a +-1 matrix")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--format", choices=("text", "line"), default="text")
    s.set_defaults(func=cmd_pivots)

    s = sub.add_parser("extend-check", help="bordered 8x8 completions of the leading 7x7 block")
    s.add_argument("--in", dest="input", help="matrix file (default: bundled D_10)")
    s.set_defaults(func=cmd_extend_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
