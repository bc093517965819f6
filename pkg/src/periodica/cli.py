"""Command-line front end.

Exit codes: 0 ok, 1 property failure, 2 parse or file error, 3 budget
exceeded, 4 inconsistent data.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import replace
from importlib import resources
from typing import Callable, Dict, List, Optional, Tuple

from .budget import Budget, BudgetExceeded, default_budget
from .criteria import murasugi_verify, przytycki_check, strengthened_check
from .diagram import (
    DiagramError,
    PeriodicTangleCode,
    PlanarDiagram,
    braid_tangle,
    load_diagram,
    quotient,
)
from .equivariant import check_decomposition, check_skein, dj_state_sum, dj_vector, qdim_M
from .khovanov import DataInconsistency, RankTable, ingest_ranks, kh_ranks, max_rank
from .states import jones_kauffman

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_DATA = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def data_dir() -> str:
    return str(resources.files("periodica") / "data")


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _budget(args) -> Budget:
    budget = default_budget()
    if args.max_states is not None:
        budget = replace(budget, max_states=args.max_states)
    return budget


def _load(path: str):
    if not os.path.exists(path):
        raise CliError(f"{path}: no such file", EXIT_PARSE)
    return load_diagram(path)


def _load_code(path: str) -> PeriodicTangleCode:
    d = _load(path)
    if not isinstance(d, PeriodicTangleCode):
        raise CliError(f"{path}: expected a periodic tangle code (PTC JSON)", EXIT_PARSE)
    return d


def _planar(d) -> PlanarDiagram:
    if isinstance(d, PeriodicTangleCode):
        return quotient(d, 0).flatten()
    return d


def _ranks_text(t: RankTable) -> str:
    return t.to_csv().rstrip("\n")


# -- commands -------------------------------------------------------------

def cmd_jones(args) -> int:
    J = jones_kauffman(_planar(_load(args.path)), args.threads, _budget(args))
    _emit(args, str(J), {"jones": str(J)})
    return EXIT_OK


def cmd_kh(args) -> int:
    d = _planar(_load(args.path))
    t = kh_ranks(d, args.threads, _budget(args))
    J = jones_kauffman(d, args.threads, _budget(args))
    ok = t.euler_characteristic() == J
    text = _ranks_text(t) + f"\nmax rank: {max_rank(t)}\neuler characteristic: {'PASS' if ok else 'FAIL'}"
    _emit(args, text, {"ranks": [[i, j, r] for (i, j), r in sorted(t.entries.items())], "max_rank": max_rank(t), "euler_ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dj(args) -> int:
    code = _load_code(args.path)
    ok, report = check_decomposition(code, args.threads, _budget(args))
    lines = [f"DJ[{s}] = {poly}" for s, poly in enumerate(report["dj"])]
    lines += [f"J[{code.p}^{code.n},{code.p}^{s}] = {poly}" for s, poly in enumerate(report["equivariant"])]
    lines.append(f"J = {report['jones']}")
    lines.append(f"decomposition: {'PASS' if ok else 'FAIL'}")
    _emit(args, "\n".join(lines), report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_equivariant(args) -> int:
    code = _load_code(args.path)
    vec = dj_vector(code, args.threads, _budget(args))
    levels = [args.s] if args.s is not None else list(range(code.n + 1))
    for s in levels:
        if not 0 <= s <= code.n:
            raise CliError(f"--s {s} outside 0..{code.n}", EXIT_PARSE)
    polys = {s: str(vec.equivariant(s)) for s in levels}
    text = "\n".join(f"J[{code.p}^{code.n},{code.p}^{s}] = {poly}" for s, poly in polys.items())
    _emit(args, text, {"p": code.p, "n": code.n, "equivariant": {str(s): v for s, v in polys.items()}})
    return EXIT_OK


def cmd_check(args) -> int:
    d = _load(args.path)
    p, n = args.p, args.n
    if isinstance(d, PeriodicTangleCode):
        p = p if p is not None else d.p
        n = n if n is not None else d.n
    if p is None:
        raise CliError("check needs --p", EXIT_PARSE)
    n = 1 if n is None else n
    flat = _planar(d)
    J = jones_kauffman(flat, args.threads, _budget(args))
    if args.ranks:
        if not os.path.exists(args.ranks):
            raise CliError(f"{args.ranks}: no such file", EXIT_PARSE)
        with open(args.ranks, encoding="utf-8") as fh:
            ranks = ingest_ranks(fh, J)
    else:
        ranks = kh_ranks(flat, args.threads, _budget(args))
    try:
        verdicts = [
            przytycki_check(J, p, n, "theorem"),
            przytycki_check(J, p, n, "example"),
            strengthened_check(J, ranks, p, n),
        ]
    except ValueError as exc:
        if isinstance(exc, DataInconsistency):
            raise
        raise CliError(str(exc), EXIT_PARSE) from None
    obstructed = any(v.obstructed for v in verdicts)
    summary = f"not {p ** n}-periodic" if obstructed else f"no obstruction to period {p ** n}"
    text = [f"J = {J}", f"max Khovanov rank: {max_rank(ranks)} ({ranks.provenance})"]
    text += [str(v) for v in verdicts]
    text.append(f"verdict: {summary}")
    obj = {"jones": str(J), "max_rank": max_rank(ranks), "verdicts": [v.to_json() for v in verdicts], "summary": summary}
    _emit(args, "\n".join(text), obj)
    return EXIT_OK


def cmd_murasugi(args) -> int:
    code = _load_code(args.path)
    v = murasugi_verify(code, args.threads, _budget(args))
    holds = not v.obstructed
    _emit(args, f"{v}\ncongruence {'holds' if holds else 'FAILS'}", v.to_json())
    return EXIT_OK if holds else EXIT_FAIL


# -- self test ----------------------------------------------------------------

def _suite_decomposition(corpus: str, budget: Budget) -> List[Tuple[str, bool, str]]:
    out = []
    for name in sorted(os.listdir(corpus)):
        if name.endswith(".ptc"):
            code = load_diagram(os.path.join(corpus, name))
            ok, _ = check_decomposition(code, budget=budget)
            out.append((name, ok, ""))
    return out


def _suite_trivial(corpus: str, budget: Budget):
    out = []
    for name in sorted(os.listdir(corpus)):
        if not name.startswith("unlink_") or not name.endswith(".ptc"):
            continue
        code = load_diagram(os.path.join(corpus, name))
        k, f = code.tangle.loops, code.tangle.width
        ok = all(
            dj_state_sum(code, m, budget=budget) == qdim_M(code.p, code.n, code.n - m, k, f) for m in range(code.n + 1)
        )
        out.append((name, ok, ""))
    return out


def _skein_codes() -> List[Tuple[str, PeriodicTangleCode]]:
    codes = [("trefoil", PeriodicTangleCode(3, 1, braid_tangle(2, [1])))]
    rng = random.Random(7)
    for i in range(4):
        width = rng.choice([2, 3])
        word = [rng.choice([-1, 1]) * rng.randint(1, width - 1) for _ in range(rng.randint(1, 2))]
        codes.append((f"random{i}:{word}", PeriodicTangleCode(3, rng.choice([1, 2]), braid_tangle(width, word))))
    return codes


def _suite_skein(corpus: str, budget: Budget):
    out = []
    for name, code in _skein_codes():
        for c in code.tangle.crossings:
            rep = check_skein(code, c.id, budget=budget)
            out.append((f"{name} crossing {c.id}", rep.ok, ""))
    return out


def _suite_murasugi(corpus: str, budget: Budget):
    out = []
    for name in sorted(os.listdir(corpus)):
        if name.endswith(".ptc"):
            v = murasugi_verify(load_diagram(os.path.join(corpus, name)), budget=budget)
            out.append((name, not v.obstructed, ""))
    return out


def _suite_euler(corpus: str, budget: Budget):
    out = []
    for name in sorted(os.listdir(corpus)):
        if name.endswith(".pd"):
            d = load_diagram(os.path.join(corpus, name))
            if d.n_crossings > budget.kh_crossings:
                continue
            ok = kh_ranks(d, budget=budget).euler_characteristic() == jones_kauffman(d, budget=budget)
            out.append((name, ok, ""))
    return out


def _suite_ranks(corpus: str, budget: Budget):
    out = []
    for name in sorted(os.listdir(corpus)):
        if not name.endswith("_ranks.csv"):
            continue
        pd_path = os.path.join(corpus, name[: -len("_ranks.csv")] + ".pd")
        J = jones_kauffman(load_diagram(pd_path), budget=budget) if os.path.exists(pd_path) else None
        try:
            with open(os.path.join(corpus, name), encoding="utf-8") as fh:
                ingest_ranks(fh, J)
            out.append((name, True, ""))
        except DataInconsistency as exc:
            out.append((name, False, str(exc)))
    return out


SUITES: Dict[str, Callable] = {
    "decomposition": _suite_decomposition,
    "trivial": _suite_trivial,
    "skein": _suite_skein,
    "murasugi": _suite_murasugi,
    "euler": _suite_euler,
    "ranks": _suite_ranks,
}


def cmd_selftest(args) -> int:
    corpus = args.corpus or data_dir()
    if not os.path.isdir(corpus):
        raise CliError(f"{corpus}: not a directory", EXIT_PARSE)
    names = [args.only] if args.only else list(SUITES)
    budget = _budget(args)
    results = []
    start = time.perf_counter()
    for suite in names:
        for name, ok, note in SUITES[suite](corpus, budget):
            results.append({"suite": suite, "test": name, "ok": ok, "note": note})
    failed = [r for r in results if not r["ok"]]
    lines = [f"{'PASS' if r['ok'] else 'FAIL'} {r['suite']}: {r['test']}" + (f" ({r['note']})" if r["note"] else "") for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} passed in {time.perf_counter() - start:.1f}s: {'FAIL' if failed else 'PASS'}")
    _emit(args, "\n".join(lines), {"results": results, "ok": not failed})
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing -------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text} is not positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--max-states", type=_positive, default=None, dest="max_states")

    parser = argparse.ArgumentParser(prog="periodica", description="Jones-type periodicity tests for links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jones", parents=[common], help="unreduced Jones polynomial")
    p.add_argument("path")
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("kh", parents=[common], help="rational Khovanov ranks")
    p.add_argument("path")
    p.set_defaults(func=cmd_kh)

    p = sub.add_parser("dj", parents=[common], help="difference Jones polynomials of a PTC")
    p.add_argument("path")
    p.set_defaults(func=cmd_dj)

    p = sub.add_parser("equivariant", parents=[common], help="equivariant Jones polynomials of a PTC")
    p.add_argument("path")
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_equivariant)

    p = sub.add_parser("check", parents=[common], help="periodicity criteria for a link")
    p.add_argument("path")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=int, default=None, help="ignored; s is derived from the ranks")
    p.add_argument("--ranks", default=None, help="CSV with header i,j,rank")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("murasugi", parents=[common], help="Murasugi congruence for a PTC")
    p.add_argument("path")
    p.set_defaults(func=cmd_murasugi)

    p = sub.add_parser("selftest", parents=[common], help="run the property suites over the corpus")
    p.add_argument("--only", choices=sorted(SUITES), default=None)
    p.add_argument("--corpus", default=None, help="directory replacing the bundled corpus")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DataInconsistency as exc:
        print(f"inconsistent data: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (DiagramError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
