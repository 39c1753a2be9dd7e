"""Command-line entry point: ``thins {verify,poset,counts,abstract,construct,index}``.

Exit status is 0 when every check passes, 1 when a counterexample or failed
guarantee is found, and 2 for unusable input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .abstract import BUILTINS, builtin_model, check_axioms, check_choice, check_minimality_gap, \
    load_model, thins_in_model
from .enumeration import PER_SIZE_CAP, RELATION_CELL_CAP
from .formats import dumps_rel, load_rel, to_matrix_text
from .general import find_rel_index, is_core, is_rel_index
from .pers import find_per_index, is_per_index, maximal_completion
from .poset import COUNTS_SIZE_CAP, counts, export_thins_poset, pair_label, thins_hasse
from .rel import is_per
from .suite import (DEFAULT_SIGS, SuiteConfig, replay, report_json, report_text,
                    run_lemma_suite, suite_passed)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("thins")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thins", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the lemma suite over finite universes")
    v.add_argument("--size", type=_positive, default=3, help="largest per carrier size (default 3)")
    v.add_argument("--sig", action="append", metavar="AxB",
                   help=f"relation signature, repeatable (default {' '.join(DEFAULT_SIGS)})")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sample-budget", type=_positive, default=2000,
                   help="samples per lemma where a universe is too large to exhaust")
    v.add_argument("--exhaustive-limit", type=_positive, default=3,
                   help="largest size at which per pairs/triples are exhausted")
    v.add_argument("--per-cap", type=_positive, default=PER_SIZE_CAP)
    v.add_argument("--cell-cap", type=_positive, default=RELATION_CELL_CAP)
    v.add_argument("--only", nargs="+", metavar="ID", help="restrict to these lemma ids")
    v.add_argument("--json", action="store_true", help="print the JSON report instead of TSV")
    v.add_argument("--out", type=Path, metavar="DIR",
                   help="also write report.tsv, report.json and suite.png into DIR")
    v.add_argument("--replay", type=Path, metavar="FILE",
                   help="re-check the counterexamples recorded in a JSON report")

    po = sub.add_parser("poset", help="Hasse diagram of thins on the pers of one carrier")
    po.add_argument("--size", type=_nonneg, required=True)
    po.add_argument("--out", type=Path, metavar="FILE.dot", help="DOT output (default stdout)")
    po.add_argument("--figure", type=Path, metavar="FILE.png", help="also render a PNG")

    c = sub.add_parser("counts", help="pers, coreflexives, minimal, maximal, equivalences")
    c.add_argument("--size", type=_nonneg, required=True, help=f"up to {COUNTS_SIZE_CAP}")
    c.add_argument("--json", action="store_true")
    c.add_argument("--figure", type=Path, metavar="FILE.png")

    a = sub.add_parser("abstract", help="check the axioms of an operation-table model")
    a.add_argument("--model", required=True, metavar="{" + "|".join(BUILTINS) + "|PATH.json}")
    a.add_argument("--json", action="store_true")

    k = sub.add_parser("construct", help="complete a per to a maximal per it thins")
    k.add_argument("--per", type=Path, required=True, metavar="FILE.json")
    k.add_argument("--json", action="store_true")

    i = sub.add_parser("index", help="index of a relation (and of a per, if it is one)")
    i.add_argument("--rel", type=Path, required=True, metavar="FILE.json")
    i.add_argument("--json", action="store_true")
    return p


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _rel_lines(name: str, R) -> list[str]:
    return [f"{name}\t{pair_label(R)}\t{dumps_rel(R)}"]


def cmd_verify(args) -> int:
    if args.replay:
        try:
            data = json.loads(args.replay.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read report {args.replay}: {exc}") from exc
        try:
            results = replay(data)
        except KeyError as exc:
            raise UsageError(f"report names an unknown lemma: {exc}") from exc
        _emit("status\tlemma")
        for lid, still_fails in results:
            _emit(f"{'FAIL' if still_fails else 'PASS'}\t{lid}")
        _emit(f"# {len(results)} counterexample(s) replayed")
        return EXIT_FAIL if any(f for _, f in results) else EXIT_OK

    cfg = SuiteConfig(
        max_size=args.size,
        sigs=tuple(args.sig) if args.sig else DEFAULT_SIGS,
        sample_budget=args.sample_budget,
        seed=args.seed,
        exhaustive_limit=args.exhaustive_limit,
        per_cap=args.per_cap,
        cell_cap=args.cell_cap,
    )
    try:
        reports = run_lemma_suite(cfg, only=args.only)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    as_json, as_text = report_json(cfg, reports), report_text(cfg, reports)
    _emit(as_json if args.json else as_text)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "report.json").write_text(as_json + "\n")
        (args.out / "report.tsv").write_text(as_text + "\n")
        from .plotting import plot_suite
        plot_suite(reports, args.out / "suite.png")
        log.info("wrote report files to %s", args.out)
    return EXIT_OK if suite_passed(reports) else EXIT_FAIL


def cmd_poset(args) -> int:
    dot = export_thins_poset(args.size)
    if args.out:
        args.out.write_text(dot)
        h = thins_hasse(args.size)
        _emit(f"nodes\t{len(h.nodes)}\tcovers\t{len(h.covers)}\tminimal\t{len(h.minimal)}"
              f"\tmaximal\t{len(h.maximal)}\t{args.out}")
    else:
        _emit(dot)
    if args.figure:
        from .plotting import plot_hasse
        plot_hasse(thins_hasse(args.size), args.figure, title=f"thins on pers of size {args.size}")
    return EXIT_OK


def cmd_counts(args) -> int:
    if args.size > COUNTS_SIZE_CAP:
        counts(args.size)  # raises the cap error with its message
    table = [(n, counts(n)) for n in range(args.size + 1)]
    keys = list(table[0][1])
    if args.json:
        _emit(json.dumps({str(n): row for n, row in table}, indent=2))
    else:
        _emit("size\t" + "\t".join(keys))
        for n, row in table:
            _emit(f"{n}\t" + "\t".join(str(row[k]) for k in keys))
    if args.figure:
        from .plotting import plot_counts
        plot_counts(table[1:] or table, args.figure)
    ok = all(r["minimal"] == r["coreflexives"] and r["maximal"] == 1 + r["equivalences"]
             for n, r in table if n > 0)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_abstract(args) -> int:
    M = builtin_model(args.model) if args.model in BUILTINS else load_model(args.model)
    rep = check_axioms(M)
    choice_ok, lacking = check_choice(M)
    _, _, discrete = thins_in_model(M)
    flags = {
        "choice": choice_ok,
        "choice_witness": None if choice_ok else M.name(lacking),
        "unary": rep.unary,
        "thins_discrete": discrete,
        "minimality_gap": check_minimality_gap(M),
    }
    if args.json:
        _emit(json.dumps({"model": list(M.names), "axioms": rep.to_dict(), "flags": flags},
                         indent=2, ensure_ascii=False))
    else:
        _emit(f"# model {args.model}: {' '.join(M.names)}")
        _emit("axiom\tholds\twitness")
        for name, res in rep.results.items():
            _emit(f"{name}\t{str(res.holds).lower()}\t{','.join(res.witness or ()) or '-'}")
        _emit("flag\tvalue")
        for name, value in flags.items():
            _emit(f"{name}\t{'-' if value is None else str(value).lower()}")
    return EXIT_OK if rep.core_ok else EXIT_FAIL


def cmd_construct(args) -> int:
    P = load_rel(args.per)
    if not is_per(P):
        raise UsageError(f"{args.per} does not hold a per")
    trace = maximal_completion(P)
    g = trace.guarantees()
    if args.json:
        _emit(json.dumps({
            "trace": {k: json.loads(dumps_rel(getattr(trace, k))) for k in "PqJRQ"},
            "guarantees": g}, indent=2, ensure_ascii=False))
    else:
        lines = []
        for k in "PqJRQ":
            lines += _rel_lines(k, getattr(trace, k))
        lines.append("# Q as a matrix")
        lines += to_matrix_text(trace.Q).splitlines()
        lines.append("guarantee\tholds")
        lines += [f"{name}\t{str(ok).lower()}" for name, ok in g.items()]
        _emit("\n".join(lines))
    return EXIT_OK if all(g.values()) else EXIT_FAIL


def cmd_index(args) -> int:
    R = load_rel(args.rel)
    J = find_rel_index(R)
    checks = {"is_rel_index": is_rel_index(J, R), "is_core": is_core(J)}
    out = {"rel_index": J}
    if is_per(R):
        JP = find_per_index(R)
        out["per_index"] = JP
        checks["is_per_index"] = is_per_index(JP, R)
    if args.json:
        _emit(json.dumps({"indexes": {k: json.loads(dumps_rel(v)) for k, v in out.items()},
                          "checks": checks}, indent=2))
    else:
        lines = []
        for k, v in out.items():
            lines += _rel_lines(k, v)
        lines.append("check\tholds")
        lines += [f"{k}\t{str(v).lower()}" for k, v in checks.items()]
        _emit("\n".join(lines))
    return EXIT_OK if all(checks.values()) else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify,
    "poset": cmd_poset,
    "counts": cmd_counts,
    "abstract": cmd_abstract,
    "construct": cmd_construct,
    "index": cmd_index,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, OSError) as exc:
        # FormatError, ModelError, EnumerationCapError and NotAPerError are ValueErrors
        print(f"thins {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
