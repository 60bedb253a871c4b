"""Command-line entry point.

Exit codes: 0 all requested verifications pass, 1 a verification failed,
2 bad input (arguments or files), 3 budget exhausted with a partial report.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Sequence, TextIO

from ._bits import fmt_set, from_mask, full_mask, to_mask
from .bruhat import (
    DominanceCache,
    DominanceUndecided,
    build_hall_matching,
    count_orderings_before,
    dominates,
    verify_conjecture,
)
from .bruhat.dominance import CACHE_ENV, MAX_MATCHING_N
from .cdindex import compare_coefficientwise, zonotope_c2d
from .checks import run_all
from .corpus import corpus_text, generate_corpus
from .eardecomp import verify_ears
from .lattice import ab_index, build_lattice, flag_f_vector, flag_h_vector
from .matroid import MAX_ATOMS, MatroidError, load_matroid, make_boolean, make_near_pencil, make_uniform

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(out: TextIO, rows: Sequence[Sequence[object]], fmt: str, header: Sequence[str] | None = None) -> None:
    if fmt == "compact-text":
        table = [list(map(str, header))] if header else []
        table += [[str(x) for x in row] for row in rows]
        if not table:
            return
        widths = [max(len(r[i]) for r in table if i < len(r)) for i in range(max(map(len, table)))]
        for row in table:
            out.write("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() + "\n")
    else:
        for row in rows:
            out.write("\t".join(str(x) for x in row) + "\n")


def _matroid_from(args):
    if getattr(args, "matroid", None):
        paths = args.matroid if isinstance(args.matroid, list) else [args.matroid]
        if len(paths) != 1:
            raise UsageError("expected exactly one --matroid")
        return load_matroid(paths[0])
    if getattr(args, "family", None):
        if args.rank is None:
            raise UsageError("--family needs --rank")
        if args.family == "boolean":
            return make_boolean(args.rank)
        if args.atoms is None:
            raise UsageError("--family needs --atoms")
        if args.family == "uniform":
            return make_uniform(args.rank, args.atoms)
        return make_near_pencil(args.rank, args.atoms)
    raise UsageError("give --matroid FILE or --family with --rank/--atoms")


def _lattice_from(args):
    m = _matroid_from(args)
    return build_lattice(m, args.order)


def _add_source(p: argparse.ArgumentParser, multiple: bool = False) -> None:
    if multiple:
        p.add_argument("--matroid", action="append", required=True, help="matroid JSON file (give twice)")
    else:
        p.add_argument("--matroid", help="matroid JSON file")
        p.add_argument("--family", choices=("uniform", "near-pencil", "boolean"))
        p.add_argument("--rank", type=int)
        p.add_argument("--atoms", type=int)
    p.add_argument("--order", type=_int_list, help="atom order, least first, e.g. 2,1,3")


def _cache_from(args) -> DominanceCache:
    path = args.cache or os.environ.get(CACHE_ENV)
    return DominanceCache(path)


def cmd_matroid_info(args, out) -> int:
    m = _matroid_from(args)
    L = build_lattice(m, args.order)
    rows = [
        ("n", m.n),
        ("rank", m.rank),
        ("bases", len(m.bases)),
        ("circuits", " ".join(fmt_set(c) for c in m.circuits)),
        ("nbc_bases", " ".join(fmt_set(b) for b in m.nbc_bases(args.order))),
        ("flats_by_rank", ",".join(map(str, L.flat_counts()))),
        ("maximal_chains", len(L.maximal_chains)),
    ]
    _emit(out, rows, args.format)
    return EXIT_OK


def cmd_lattice_flags(args, out) -> int:
    L = _lattice_from(args)
    f = flag_f_vector(L)
    h = flag_h_vector(L)
    rows = [(fmt_set(s), f.values[s], h.values[s]) for s, _ in f.items()]
    _emit(out, rows, args.format, ("S", "f_S", "h_S"))
    return EXIT_OK


def cmd_lattice_abindex(args, out) -> int:
    p = ab_index(_lattice_from(args))
    _emit(out, [(c, w) for w, c in p.terms.items()], args.format, ("coeff", "word"))
    return EXIT_OK


def cmd_ears_verify(args, out) -> int:
    L = _lattice_from(args)
    rep = verify_ears(L)
    rows = []
    for j, basis, count, shell, bnd in rep.rows:
        rows.append((j, basis, count, "ok" if shell else "FAIL", "-" if bnd is None else "ok" if bnd else "FAIL"))
    _emit(out, rows, args.format, ("j", "basis", "facets", "shelling", "boundary"))
    out.write(f"partition {'ok' if rep.partition_ok else 'FAIL'}\n")
    out.write(f"sphere {'ok' if rep.sphere_ok else 'FAIL'}\n")
    out.write(f"theorem1.1 {'ok' if rep.inequalities_ok else 'FAIL'}\n")
    out.write(f"g_M_vector {'ok' if rep.m_vector_ok else 'FAIL'}\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _check_r(r: int) -> None:
    if not 1 <= r <= MAX_MATCHING_N - 1:
        raise UsageError(f"--r must be in 1..{MAX_MATCHING_N - 1} for matching")


def _check_subset(r: int, xs: list[int], name: str) -> int:
    mask = to_mask(xs)
    if mask & ~full_mask(r):
        raise UsageError(f"--{name} must be a subset of 1..{r}")
    return mask


def cmd_bruhat_dominates(args, out) -> int:
    s = _check_subset(args.r, args.S, "S")
    t = _check_subset(args.r, args.T, "T")
    cache = _cache_from(args)
    try:
        res = dominates(args.r + 1, s, t, witness=bool(args.witness), cache=None if args.witness else cache)
    except DominanceUndecided as exc:
        raise UsageError(str(exc))
    out.write(f"{fmt_set(s)}\t{fmt_set(t)}\t{'dominates' if res.dominated else 'does-not-dominate'}\t{res.method}\n")
    if args.witness and res.witness is not None:
        with open(args.witness, "w", encoding="utf-8") as fh:
            fh.write(res.witness.to_tsv())
    cache.save()
    return EXIT_OK if res.dominated else EXIT_FAIL


def cmd_bruhat_conjecture(args, out) -> int:
    if args.r < 1 or args.r > MAX_MATCHING_N - 1:
        raise UsageError(f"--r must be in 1..{MAX_MATCHING_N - 1}")
    if args.budget_secs is not None and args.budget_secs <= 0:
        raise UsageError("--budget-secs must be positive")
    cache = _cache_from(args)
    rep = verify_conjecture(args.r, args.budget_secs, cache, workers=args.workers)
    cache.save()
    _emit(out, [row.line().split("\t") for row in rep.rows], args.format)
    out.write(f"# r={rep.r} complete={rep.complete} elapsed={rep.elapsed:.2f}s\n")
    if not rep.complete:
        return EXIT_BUDGET
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_bruhat_hall(args, out) -> int:
    _check_r(args.r)
    if not 1 <= args.i <= args.r:
        raise UsageError("--i must be in 1..r")
    cache = _cache_from(args)
    res = build_hall_matching(args.r, args.i, cache)
    cache.save()
    if res.saturating:
        _emit(out, [(fmt_set(t), fmt_set(s)) for t, s in res.matching.items()], args.format)
        out.write("# saturating matching found\n")
        return EXIT_OK
    out.write("# no saturating matching; Hall violator:\n")
    out.write("family\t" + " ".join(fmt_set(t) for t in res.violator) + "\n")
    out.write("neighbours\t" + " ".join(fmt_set(s) for s in res.neighbours) + "\n")
    return EXIT_FAIL


def cmd_bruhat_orderings(args, out) -> int:
    if not 1 <= args.r <= 8:
        raise UsageError("--r must be in 1..8")
    s = _check_subset(args.r, args.S, "S")
    counts = [count_orderings_before(args.r, i, s) for i in range(1, args.r + 1)]
    _emit(out, [(i, c) for i, c in enumerate(counts, 1)], args.format, ("i", "count"))
    return EXIT_OK if len(set(counts)) == 1 else EXIT_FAIL


def cmd_cdindex_zonotope(args, out) -> int:
    p = zonotope_c2d(_lattice_from(args))
    out.write("# c-2d-index with the factor 2 of each d folded into the coefficient\n")
    _emit(out, [(c, w) for w, c in p.terms.items()], args.format)
    return EXIT_OK


def cmd_cdindex_compare(args, out) -> int:
    if len(args.matroid) != 2:
        raise UsageError("compare needs exactly two --matroid arguments")
    a, b = (zonotope_c2d(build_lattice(load_matroid(p))) for p in args.matroid)
    try:
        verdict = compare_coefficientwise(a, b)
    except ValueError as exc:
        raise UsageError(str(exc))
    out.write(f"{verdict}\n")
    return EXIT_OK


def cmd_verify_all(args, out) -> int:
    try:
        entries = generate_corpus(args.max_rank, args.max_atoms, args.family_max_rank, args.family_max_atoms)
    except ValueError as exc:
        raise UsageError(str(exc))
    results, finished = run_all(entries, args.budget_secs)
    _emit(out, [r.line().split("\t") for r in results], args.format)
    conj_ok = True
    for r in range(1, args.conjecture_max_r + 1):
        rep = verify_conjecture(r)
        conj_ok &= rep.passed
        out.write(f"conjecture-r{r}\t{'ok' if rep.passed else 'FAIL'}\t{len(rep.rows)}\t{rep.elapsed:.2f}s\t\n")
    if not finished:
        out.write("# budget exhausted; report is partial\n")
        return EXIT_BUDGET
    return EXIT_OK if conj_ok and all(r.ok for r in results) else EXIT_FAIL


def cmd_corpus(args, out) -> int:
    try:
        entries = generate_corpus(args.max_rank, args.max_atoms, args.family_max_rank, args.family_max_atoms)
    except ValueError as exc:
        raise UsageError(str(exc))
    out.write(corpus_text(entries))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "compact-text"), default="tsv")
    common.add_argument("--cache", help=f"dominance cache TSV (default: ${CACHE_ENV})")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="latgeom", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    mat = sub.add_parser("matroid", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = mat.add_parser("info", parents=[common])
    _add_source(p)
    p.set_defaults(func=cmd_matroid_info)

    lat = sub.add_parser("lattice", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func in (("flags", cmd_lattice_flags), ("abindex", cmd_lattice_abindex)):
        p = lat.add_parser(name, parents=[common])
        _add_source(p)
        p.set_defaults(func=func)

    ears = sub.add_parser("ears", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = ears.add_parser("verify", parents=[common])
    _add_source(p)
    p.set_defaults(func=cmd_ears_verify)

    br = sub.add_parser("bruhat", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = br.add_parser("dominates", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--S", type=_int_list, required=True)
    p.add_argument("--T", type=_int_list, required=True)
    p.add_argument("--witness", help="write the injection as TSV")
    p.set_defaults(func=cmd_bruhat_dominates)
    p = br.add_parser("conjecture", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--budget-secs", type=float)
    p.set_defaults(func=cmd_bruhat_conjecture)
    p = br.add_parser("hall", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_bruhat_hall)
    p = br.add_parser("orderings", parents=[common])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--S", type=_int_list, required=True)
    p.set_defaults(func=cmd_bruhat_orderings)

    cd = sub.add_parser("cdindex", parents=[common]).add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = cd.add_parser("zonotope", parents=[common])
    _add_source(p)
    p.set_defaults(func=cmd_cdindex_zonotope)
    p = cd.add_parser("compare", parents=[common])
    _add_source(p, multiple=True)
    p.set_defaults(func=cmd_cdindex_compare)

    def corpus_bounds(p):
        p.add_argument("--corpus", choices=("default",), default="default")
        p.add_argument("--max-rank", type=int, default=4)
        p.add_argument("--max-atoms", type=int, default=6)
        p.add_argument("--family-max-rank", type=int, default=5)
        p.add_argument("--family-max-atoms", type=int, default=8)

    p = sub.add_parser("verify-all", parents=[common])
    corpus_bounds(p)
    p.add_argument("--budget-secs", type=float)
    p.add_argument("--conjecture-max-r", type=int, default=6)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("corpus", parents=[common])
    corpus_bounds(p)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        if getattr(args, "family_max_atoms", 0) > MAX_ATOMS:
            raise UsageError(f"at most {MAX_ATOMS} atoms supported")
        if getattr(args, "budget_secs", None) is not None and args.budget_secs <= 0:
            raise UsageError("--budget-secs must be positive")
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                return args.func(args, fh)
        return args.func(args, out)
    except (UsageError, MatroidError, OSError) as exc:
        print(f"latgeom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
