"""Command-line front end: ``skeinlab <subcommand> ...``.

Output is deterministic.  Domain errors exit with status 1 and a one-line
diagnostic on stderr; ``verify`` exits 1 iff some check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from skeinlab import checks, fdr, fermions, quadring, skein
from skeinlab.extalg import format_fermion
from skeinlab.repsym import SymFunc
from skeinlab.setpart import enumerate_partitions, format_partition, parse_partition, parse_permutation

FORMATS = ("human", "tsv", "json-lines")
MAX_REP_N = 9
MAX_VERIFY_N = 7


class DomainError(ValueError):
    pass


def _emit(lines: Iterable[str]) -> None:
    out = sys.stdout
    for line in lines:
        out.write(line + "\n")


def _vector_lines(v: skein.NCVector, fmt: str) -> list[str]:
    if fmt == "human":
        return [skein.format_ncvector(v)]
    if fmt == "tsv":
        return [f"{c}\t{format_partition(pi)}" for pi, c in v.items()]
    return [json.dumps({"coeff": c, "partition": format_partition(pi)}) for pi, c in v.items()]


def _symfunc_lines(s: SymFunc, fmt: str) -> list[str]:
    if fmt == "human":
        return [str(s)]
    rows = [(c, " ".join(map(str, lam.parts))) for lam, c in s.items()]
    if fmt == "tsv":
        return [f"{c}\t{p}" for c, p in rows]
    return [json.dumps({"coeff": c, "partition": p}) for c, p in rows]


def _table_lines(table: Sequence[Sequence[int]], fmt: str, row: str, col: str) -> list[str]:
    if fmt == "json-lines":
        return [json.dumps({row: i, col: j, "dim": v}) for i, r in enumerate(table) for j, v in enumerate(r)]
    header = f"{row}\\{col}\t" + "\t".join(str(j) for j in range(len(table[0]) if table else 0))
    body = [f"{i}\t" + "\t".join(map(str, r)) for i, r in enumerate(table)]
    if fmt == "tsv":
        return [header] + body
    width = max((len(str(v)) for r in table for v in r), default=1)
    return [" ".join(str(v).rjust(width) for v in r) for r in table]


def _check_n(n: int, cap: int, what: str) -> None:
    if not 0 <= n <= cap:
        raise DomainError(f"{what}: n must be in 0..{cap}, got {n}")


# -- subcommands ------------------------------------------------------------------------

def cmd_resolve(args) -> int:
    pi = parse_partition(args.partition)
    v = skein.resolve_greedy(pi, args.policy) if args.method == "greedy" else skein.resolve_algebraic(pi)
    _emit(_vector_lines(v, args.format))
    return 0


def cmd_act(args) -> int:
    w = parse_permutation(args.permutation)
    pi = parse_partition(args.partition, n=len(w))
    if len(w) != pi.n:
        raise DomainError(f"permutation has size {len(w)} but the partition lives on 1..{pi.n}")
    # crossing inputs are resolved first so the action is always defined
    v = skein.resolve(pi)
    _emit(_vector_lines(skein.skein_act(w, v), args.format))
    return 0


def cmd_sigma(args) -> int:
    pi = parse_partition(args.partition)
    if not skein.valid_sigma_indices(pi):
        raise DomainError(f"{format_partition(pi)} is not almost noncrossing")
    _emit(_vector_lines(skein.sigma(pi, args.i), args.format))
    return 0


_FERMION_KINDS = {"F": fermions.F, "f": fermions.f, "tildeF": fermions.tildeF, "tildef": fermions.tildef}


def cmd_fermion(args) -> int:
    pi = parse_partition(args.partition)
    text = format_fermion(_FERMION_KINDS[args.which](pi))
    _emit([json.dumps({"fermion": text}) if args.format == "json-lines" else text])
    return 0


def cmd_enumerate(args) -> int:
    parts = enumerate_partitions(args.n, args.k, args.m, noncrossing_only=args.noncrossing)
    if args.count:
        _emit([json.dumps({"count": len(parts)}) if args.format == "json-lines" else str(len(parts))])
    elif args.format == "json-lines":
        _emit(json.dumps({"partition": format_partition(pi)}) for pi in parts)
    else:
        _emit(format_partition(pi) for pi in parts)
    return 0


def cmd_frobenius(args) -> int:
    _check_n(args.n, MAX_REP_N, "frobenius")
    if not 1 <= args.k <= max(args.n, 1):
        raise DomainError(f"need 1 <= k <= n, got k={args.k}")
    if args.m is not None and not 0 <= args.m <= args.k:
        raise DomainError(f"need 0 <= m <= k, got m={args.m}")
    if not enumerate_partitions(args.n, args.k, args.m, noncrossing_only=True):
        s = SymFunc(args.n)
    else:
        s = checks.skein_frobenius(args.n, args.k, args.m)
    _emit(_symfunc_lines(s, args.format))
    return 0


def cmd_fdr_dims(args) -> int:
    _check_n(args.n, MAX_REP_N, "fdr-dims")
    _emit(_table_lines(fdr.dimension_table(args.n), args.format, "i", "j"))
    return 0


def cmd_hilbert(args) -> int:
    _check_n(args.n, 16, "hilbert")
    _emit(_table_lines(quadring.hilbert_series(args.n, args.ring), args.format, "m", "k"))
    return 0


def cmd_verify(args) -> int:
    _check_n(args.nmax, MAX_VERIFY_N, "verify")
    results = checks.run_all(args.nmax, args.threads)
    if args.format == "json-lines":
        _emit(json.dumps({"module": c.module, "check": c.name, "pass": ok}) for c, ok in results)
    else:
        _emit(f"{'PASS' if ok else 'FAIL'}  {c.module}: {c.name}" for c, ok in results)
    return 0 if all(ok for _, ok in results) else 1


# -- parser -----------------------------------------------------------------------------

def _default_threads() -> int:
    raw = os.environ.get("SKEINLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="default: tsv (human for verify)")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default $SKEINLAB_THREADS or 1)")

    p = argparse.ArgumentParser(prog="skeinlab", description="Exact fermionic skein calculus of set partitions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("resolve", parents=[common], help="expand a partition in the noncrossing basis")
    s.add_argument("partition")
    s.add_argument("--method", choices=("greedy", "algebraic"), default="greedy")
    s.add_argument("--policy", choices=sorted(skein.POLICIES), default="lex")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("act", parents=[common], help="apply a permutation by the skein action")
    s.add_argument("permutation")
    s.add_argument("partition")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("sigma", parents=[common], help="local resolution of an almost noncrossing partition")
    s.add_argument("partition")
    s.add_argument("--i", type=int, default=None)
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("fermion", parents=[common], help="print F, f or their antisymmetrizations")
    s.add_argument("partition")
    s.add_argument("--which", choices=sorted(_FERMION_KINDS), default="F")
    s.set_defaults(func=cmd_fermion)

    s = sub.add_parser("enumerate", parents=[common], help="list set partitions")
    s.add_argument("n", type=int)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--m", type=int, default=None, help="number of singleton blocks")
    s.add_argument("--noncrossing", action="store_true")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("frobenius", parents=[common], help="Schur expansion of a skein module")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.add_argument("m", type=int, nargs="?", default=None)
    s.set_defaults(func=cmd_frobenius)

    s = sub.add_parser("fdr-dims", parents=[common], help="bigraded dimensions of the coinvariant ring")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_fdr_dims)

    s = sub.add_parser("hilbert", parents=[common], help="bigraded Hilbert table of the quadratic ring")
    s.add_argument("n", type=int)
    s.add_argument("--ring", choices=(quadring.RIJ, quadring.RJ), default=quadring.RIJ)
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("verify", parents=[common], help="run every invariant check")
    s.add_argument("--nmax", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "human" if args.command == "verify" else "tsv"
    if args.threads is None:
        args.threads = _default_threads()
    if args.threads < 1:
        print("skeinlab: error: --threads must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"skeinlab {args.command}: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
