"""Command-line front end: tables, single checks, the corpus sweep, ingestion.

Exit codes: 0 all pass (or inapplicable), 1 at least one check failed,
2 operational error (bad arguments, unparsable spec, budget exceeded).
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import re
import sys
from dataclasses import asdict, dataclass

from . import __version__
from .chartab import CharacterTable, character_table, read_table, verify_table, write_table
from .conjectures import (
    Session,
    builtin_corpus,
    check_A,
    check_B,
    check_C,
    check_composite,
    check_D,
    check_exponent,
    corpus_primes,
    dade_bijection_verify,
    mk_vector,
    run_battery,
    symmetric_divisibility,
)
from .errors import BudgetExceededError, CharlabError, SchemaError
from .groupspec import parse_group_spec

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


@dataclass
class Config:
    cache_dir: str | None = None
    budget_order: int = 10**6
    output: str = "text"  # "text" | "json"
    seed: int = 0

    def hash(self) -> str:
        payload = json.dumps(asdict(self), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "", name.replace(" ", ""))


def _cache_path(cfg: Config, name: str, order: int) -> str | None:
    if not cfg.cache_dir:
        return None
    return os.path.join(cfg.cache_dir, f"{_slug(name)}-{order}.ct.json")


def _cached_table(cfg: Config, G, name: str) -> CharacterTable:
    path = _cache_path(cfg, name, G.order)
    if path and os.path.exists(path):
        return read_table(path)
    t = character_table(G, name=name, budget=cfg.budget_order)
    if path:
        write_table(t, path)
    return t


def _emit(cfg: Config, payload: dict, text_lines: list[str]) -> None:
    if cfg.output == "json":
        payload = {"version": __version__, "config_hash": cfg.hash(), **payload}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _report_line(rep) -> str:
    mark = {"pass": "PASS", "fail": "FAIL", "inapplicable": "n/a "}[rep.verdict]
    body = f"{rep.conjecture:<9} {rep.group:<18} p={rep.p}"
    if rep.verdict == "fail":
        return f"[{mark}] {body}  witnesses={rep.witnesses}"
    return f"[{mark}] {body}  lhs={rep.lhs} rhs={rep.rhs}"


def cmd_table(args, cfg: Config) -> int:
    G = parse_group_spec(args.spec)
    t = _cached_table(cfg, G, G.name or args.spec)
    report = verify_table(t)
    lines = [
        f"group {t.name}: order {t.order}, exponent {t.exponent}",
        f"classes: {t.num_classes}",
        f"degrees: {', '.join(str(d) for d in t.degrees)}",
        f"verification: {'ok' if report.ok else 'FAILED ' + '; '.join(report.failures)}",
    ]
    payload = {
        "group": {"name": t.name, "order": t.order, "exponent": t.exponent},
        "classes": t.num_classes,
        "degrees": t.degrees,
        "verified": report.ok,
    }
    _emit(cfg, payload, lines)
    return EXIT_PASS if report.ok else EXIT_FAIL


def _run_single_check(args, cfg: Config):
    ses = Session(budget=cfg.budget_order, seed=cfg.seed)
    which = args.which
    if which == "symdiv":
        return [symmetric_divisibility(args.nmax, args.p, ses)], ses
    if not args.spec:
        raise SystemExit2("this check needs a group spec")
    G = parse_group_spec(args.spec)
    if which == "A":
        reps = [check_A(G, args.p, ses)]
    elif which == "B":
        reps = [check_B(G, args.p, ses)]
    elif which == "C":
        reps = [check_C(G, args.p, n=args.n, session=ses)]
    elif which == "D":
        reps = [check_D(G, args.p, n=args.n, session=ses)]
    elif which == "composite":
        reps = [check_composite(G, args.p, n=args.n, session=ses)]
    elif which == "exponent":
        reps = [check_exponent(G, args.p, ses)]
    elif which == "dade":
        reps = dade_bijection_verify(G, args.p, session=ses)
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit2(f"unknown check {which}")
    return reps, ses


class SystemExit2(Exception):
    pass


def cmd_check(args, cfg: Config) -> int:
    reps, ses = _run_single_check(args, cfg)
    if cfg.cache_dir:
        _write_session_tables(ses, cfg)
    payload = {"reports": [r.to_dict() for r in reps]}
    _emit(cfg, payload, [_report_line(r) for r in reps])
    return EXIT_PASS if all(r.passed for r in reps) else EXIT_FAIL


def _write_session_tables(ses: Session, cfg: Config) -> None:
    for t in ses._tables.values():
        path = _cache_path(cfg, t.name, t.order)
        if path and not os.path.exists(path):
            write_table(t, path)


def _corpus_task(spec: str, p: int, budget: int, seed: int) -> list[dict]:
    ses = Session(budget=budget, seed=seed)
    battery = run_battery(spec, p, ses)
    out = []
    for key, value in battery.items():
        reps = value if isinstance(value, list) else [value]
        out.extend(r.to_dict() for r in reps)
    return out


def cmd_corpus(args, cfg: Config) -> int:
    specs = builtin_corpus()
    if args.filter:
        specs = [s for s in specs if args.filter in s]
    tasks: list[tuple[str, int]] = []
    for spec in specs:
        G = parse_group_spec(spec)
        for p in corpus_primes(G):
            if args.p and p != args.p:
                continue
            tasks.append((spec, p))
    results: dict[tuple[str, int], list[dict]] = {}
    errors: list[str] = []
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futs = {
                pool.submit(_corpus_task, spec, p, cfg.budget_order, cfg.seed): (spec, p)
                for spec, p in tasks
            }
            for fut in concurrent.futures.as_completed(futs):
                key = futs[fut]
                try:
                    results[key] = fut.result()
                except Exception as exc:  # isolate per-entry errors
                    errors.append(f"{key[0]} p={key[1]}: {exc}")
    else:
        for spec, p in tasks:
            try:
                results[(spec, p)] = _corpus_task(spec, p, cfg.budget_order, cfg.seed)
            except Exception as exc:
                errors.append(f"{spec} p={p}: {exc}")
    all_reports = []
    lines = []
    n_fail = 0
    for spec, p in tasks:
        for rep in results.get((spec, p), []):
            all_reports.append(rep)
            if rep["verdict"] == "fail":
                n_fail += 1
                lines.append(
                    f"[FAIL] {rep['conjecture']:<9} {rep['group']:<18} p={p} witnesses={rep['witnesses']}"
                )
    lines.append(
        f"corpus: {len(tasks)} (group, prime) pairs, {len(all_reports)} reports, "
        f"{n_fail} failures, {len(errors)} errors"
    )
    for err in errors:
        lines.append(f"[ERROR] {err}")
    payload = {
        "tasks": [{"spec": s, "p": p} for s, p in tasks],
        "reports": all_reports,
        "failures": n_fail,
        "errors": errors,
    }
    _emit(cfg, payload, lines)
    if errors:
        return EXIT_ERROR
    return EXIT_PASS if n_fail == 0 else EXIT_FAIL


def cmd_ingest(args, cfg: Config) -> int:
    t = read_table(args.file)
    lines = [
        f"ingested {t.name}: order {t.order}, mode {t.mode}, "
        f"{t.num_chars} degrees, verification ok"
    ]
    payload = {
        "group": {"name": t.name, "order": t.order},
        "mode": t.mode,
        "degrees": t.degrees,
    }
    if args.p:
        mk = mk_vector(t, args.p)
        payload["Mk"] = {str(k): v for k, v in mk.items()}
        lines.append(f"M_k at p={args.p}: {payload['Mk']}")
    if cfg.cache_dir:
        path = _cache_path(cfg, t.name, t.order)
        if path:
            write_table(t, path)
            lines.append(f"cached at {path}")
    _emit(cfg, payload, lines)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charlab",
        description="Exact character tables, p-blocks and local-global counting checks.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--cache-dir", default=None, help="directory for table caching")
    parser.add_argument("--budget-order", type=int, default=10**6, help="max group order")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized internals")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="compute (or load) a character table")
    p_table.add_argument("spec", help='group spec, e.g. "A(5)" or "S(4) x C(3)"')

    p_check = sub.add_parser("check", help="run one conjecture check")
    p_check.add_argument(
        "which",
        choices=["A", "B", "C", "D", "composite", "symdiv", "exponent", "dade"],
    )
    p_check.add_argument("spec", nargs="?", default=None, help="group spec")
    p_check.add_argument("--p", type=int, required=True, help="the prime p")
    p_check.add_argument("--n", type=int, default=None, help="Galois twist index n")
    p_check.add_argument("--k", type=int, default=None, help="restrict to one residue k")
    p_check.add_argument("--nmax", type=int, default=7, help="symdiv: largest n for S(n)")

    p_corpus = sub.add_parser("corpus", help="run the whole corpus suite")
    p_corpus.add_argument("--filter", default=None, help="substring filter on specs")
    p_corpus.add_argument("--p", type=int, default=None, help="restrict to one prime")
    p_corpus.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p_ingest = sub.add_parser("ingest", help="validate and summarize a table file")
    p_ingest.add_argument("file")
    p_ingest.add_argument("--p", type=int, default=None, help="also print M_k at p")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = Config(
        cache_dir=args.cache_dir,
        budget_order=args.budget_order,
        output="json" if args.json else "text",
        seed=args.seed,
    )
    try:
        if args.command == "table":
            return cmd_table(args, cfg)
        if args.command == "check":
            return cmd_check(args, cfg)
        if args.command == "corpus":
            return cmd_corpus(args, cfg)
        if args.command == "ingest":
            return cmd_ingest(args, cfg)
        parser.error(f"unknown command {args.command}")
    except (CharlabError, ValueError, OSError, SystemExit2) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
