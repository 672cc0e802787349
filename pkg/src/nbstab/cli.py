"""Command-line workbench.

Exit codes: 0 pass/feasible, 1 fail/infeasible, 2 error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from typing import Callable, Iterator

from . import bounds, derive, families, puncture, regression
from . import stabilizer as st
from .errors import BadParameters, StabError
from .gf import field_create, prime_power

OK, FAIL, ERROR = 0, 1, 2


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------
def _emit(obj, out=None) -> None:
    (out or sys.stdout).write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load(path: str) -> st.StabilizerCode:
    with open(path) as fh:
        return st.StabilizerCode.from_json(json.load(fh))


def _save_or_print(code: st.StabilizerCode, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            _emit(code.to_json(), fh)
        print(code.params())
    else:
        _emit(code.to_json())


def _need(args, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise BadParameters("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))
    return [getattr(args, n) for n in names]


def _build(family: str, args, mode: str) -> st.StabilizerCode:
    if family == "hamming-h":
        return families.hamming_hermitian(*_need(args, "q", "m"), mode=mode)
    if family == "hamming-e":
        return families.hamming_euclidean(*_need(args, "q", "m"), mode=mode)
    if family == "qr":
        return families.qr(*_need(args, "q", "n"), mode=mode)
    if family == "melas":
        return families.melas(*_need(args, "q", "m"), mode=mode)
    if family == "bch-e":
        return families.bch_euclidean(*_need(args, "q", "m", "delta"), mode=mode)
    if family == "bch-h":
        return families.bch_hermitian(*_need(args, "q", "m", "delta"), mode=mode)
    if family == "bch-ext":
        base = families.bch_hermitian(*_need(args, "q", "m", "delta"), mode="bound")
        return families.extend_bch(base, mode=mode)
    if family == "character":
        return families.quantum_character(*_need(args, "q", "m", "r1", "r2"), mode=mode)
    if family == "hexacode":
        return families.hexacode(mode=mode)
    raise BadParameters(f"unknown family {family!r}")


FAMILY_NAMES = ["hamming-h", "hamming-e", "qr", "melas", "bch-e", "bch-h", "bch-ext", "character", "hexacode"]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def cmd_construct(args) -> int:
    code = _build(args.family, args, args.distance)
    _save_or_print(code, args.out)
    return OK


def cmd_verify(args) -> int:
    code = _load(args.file)
    report = st.verify(code, args.distance)
    if args.json:
        _emit(report.to_json())
    else:
        print(f"{report.params}  self-orthogonal={report.self_orthogonal}  "
              f"distance={report.d if report.d is not None else code.distance} ({report.distance_mode})  "
              f"pure-to={report.purity}  {'OK' if report.ok else 'FAIL'}")
        for note in report.notes:
            print("  note:", note)
    return OK if report.ok else FAIL


def _bound_K(args) -> int:
    if args.K is not None:
        return args.K
    if args.k is None:
        raise BadParameters("give --k (qudits) or --K (dimension)")
    return args.q**args.k


def cmd_bound(args) -> int:
    check = args.check
    if check == "carlitz":
        p, m, delta = _need(args, "q", "m", "delta")
        res = bounds.carlitz_uchiyama(p, m, delta)
        holds, payload = res.holds, res.to_json()
    elif check == "mds-length":
        n, d, q = _need(args, "n", "d", "q")
        res = bounds.mds_length_allowed(n, d, q, args.conjecture)
        holds, payload = res.holds, res.to_json()
    elif check == "mds-gv":
        n, d, q = _need(args, "n", "d", "q")
        res = bounds.mds_gv_exists(n, d, q)
        holds, payload = res.holds, res.to_json()
    elif check == "gv-linear":
        n, k, d, q = _need(args, "n", "k", "d", "q")
        res = bounds.gv_linear_exists(n, k, d, q)
        holds, payload = res.holds, res.to_json()
    else:
        n, d, q = _need(args, "n", "d", "q")
        K = _bound_K(args)
        if check == "lp":
            res = bounds.lp_feasible(n, K, d, q)
            holds, payload = res.feasible, {"bound": "lp"} | res.to_json()
        else:
            fn = {"singleton": bounds.singleton, "gv": bounds.gv_exists}.get(check)
            if check == "hamming":
                res = bounds.hamming_d3(n, K, q) if d == 3 else bounds.hamming(n, K, d, q)
            else:
                res = fn(n, K, d, q)
            holds, payload = res.holds, res.to_json()
    if args.json:
        _emit(payload)
    else:
        verdict = {"lp": ("feasible", "infeasible")}.get(check, ("holds", "fails"))
        extra = payload.get("detail") or ""
        print(f"{check}: {verdict[0] if holds else verdict[1]}" + (f" ({extra})" if extra else ""))
    return OK if holds else FAIL


def _parse_triple(text: str) -> tuple[int, int, int]:
    try:
        q, m, delta = (int(x) for x in text.split(","))
    except ValueError:
        raise BadParameters("expected q,m,delta") from None
    return q, m, delta


def cmd_puncture(args) -> int:
    if args.bch:
        q, m, delta = _parse_triple(args.bch)
        if args.menu:
            menu = puncture.bch_puncture_menu(q, m, delta)
            if args.json:
                _emit([{"order": e.order, "length": e.length, "k_bound": e.k_bound, "d_bound": e.d_bound}
                       for e in menu])
            else:
                for e in menu:
                    print(f"mu={e.order:<3d} {e.params(q)}")
            return OK
        code = families.bch_euclidean(q, m, delta, mode="bound")
        pc = puncture.bch_puncture_code(q, m, delta)
    elif args.code:
        code = _load(args.code)
        pc = puncture.puncture_code_symplectic(code.carrier)
    else:
        raise BadParameters("give --code FILE or --bch q,m,delta")
    if args.target_length is None:
        raise BadParameters("missing --target-length")
    word = puncture.find_weight_word(pc, args.target_length)
    if word is None:
        print(f"no word of weight {args.target_length} found", file=sys.stderr)
        return FAIL
    out = puncture.puncture_to(code, word, args.distance)
    _save_or_print(out, args.out)
    return OK


def cmd_derive(args) -> int:
    a = _load(args.input)
    rule = args.rule
    if rule in ("sum", "combine", "difference"):
        if not args.in2:
            raise BadParameters(f"rule {rule} needs --in2")
        b = _load(args.in2)
        fn = {"sum": derive.direct_sum, "combine": derive.nested_combine,
              "difference": derive.difference_combine}[rule]
        out = fn(a, b, mode=args.distance)
    elif rule == "expand":
        out = derive.expand_field(a, sub_degree=args.sub_degree, mode=args.distance)
    elif rule == "contract":
        if args.target_q is None:
            raise BadParameters("contract needs --target-q")
        p, m = prime_power(args.target_q)
        out = derive.contract_field(a, field_create(p, m))
    else:
        fn = {"lengthen": derive.lengthen, "shorten": derive.shorten_pure, "reduce": derive.reduce_dim}[rule]
        out = fn(a, mode=args.distance)
    _save_or_print(out, args.out)
    return OK


# ---------------------------------------------------------------------------
# family table
# ---------------------------------------------------------------------------
def _grid(q: int, max_n: int) -> Iterator[tuple[str, str, Callable[[], st.StabilizerCode]]]:
    """(family, argument text, builder) for every instance with length <= max_n."""
    m = 2
    while (q ** (2 * m) - 1) // (q * q - 1) <= max_n:
        yield "hamming-h", f"m={m}", lambda m=m: families.hamming_hermitian(q, m)
        m += 1
    m = 2
    while q**m - 1 <= max_n:
        yield "hamming-e", f"m={m}", lambda m=m: families.hamming_euclidean(q, m)
        m += 1
    for n in range(3, max_n + 1):
        if all(n % r for r in range(2, math.isqrt(n) + 1)) and q % n:
            yield "qr", f"n={n}", lambda n=n: families.qr(q, n)
    m = 1
    while q ** (2 * m) - 1 <= max_n:
        yield "melas", f"m={m}", lambda m=m: families.melas(q, m)
        m += 1
    m = 2
    while q**m - 1 <= max_n:
        for delta in range(2, families.bch_euclidean_max_delta(q, m) + 1):
            yield "bch-e", f"m={m},delta={delta}", lambda m=m, d=delta: families.bch_euclidean(q, m, d)
        m += 1
    m = 1
    while q ** (2 * m) - 1 <= max_n:
        n = q ** (2 * m) - 1
        for delta in range(2, n):
            yield "bch-h", f"m={m},delta={delta}", lambda m=m, d=delta: families.bch_hermitian(q, m, d)
        m += 1
    m = 1
    while q ** (2 * m) <= max_n:
        n = q ** (2 * m) - 1
        for delta in range(2, n):
            yield ("bch-ext", f"m={m},delta={delta}",
                   lambda m=m, d=delta: families.extend_bch(families.bch_hermitian(q, m, d, mode="bound")))
        m += 1
    m = 1
    while q % 2 and 2**m <= max_n:
        for r2 in range(1, m):
            for r1 in range(r2):
                yield ("character", f"m={m},r1={r1},r2={r2}",
                       lambda m=m, a=r1, b=r2: families.quantum_character(q, m, a, b))
        m += 1


def table_rows(qs: list[int], max_n: int, timing: bool = False) -> list[dict]:
    rows = []
    for q in qs:
        seen: set[tuple[str, str]] = set()
        for family, text, build in _grid(q, max_n):
            t0 = time.perf_counter()
            try:
                code = build()
            except BadParameters:
                continue
            except StabError as exc:
                rows.append({"family": family, "args": f"q={q},{text}", "params": "",
                             "purity": "", "method": f"error: {type(exc).__name__}"})
                continue
            if (family, code.params()) in seen:
                continue
            seen.add((family, code.params()))
            row = {
                "family": family,
                "args": f"q={q},{text}",
                "params": code.params(),
                "purity": "" if code.pure_to is None else ("pure" if code.is_pure else f"pure-to {code.pure_to}"),
                "method": "exhaustive" if code.status == st.EXACT else "designed bound",
            }
            if timing:
                row["seconds"] = f"{time.perf_counter() - t0:.3f}"
            rows.append(row)
    return rows


TABLE_COLUMNS = ["family", "args", "params", "purity", "method"]


def format_table(rows: list[dict], fmt: str, timing: bool = False) -> str:
    cols = TABLE_COLUMNS + (["seconds"] if timing else [])
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows]) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols).rstrip()]
    for r in rows:
        lines.append("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in cols).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    qs = [int(x) for x in args.q.split(",") if x.strip()] if args.q else []
    rows = table_rows(qs, args.max_n, args.timing)
    fmt = "json" if args.json else ("csv" if args.csv else "text")
    sys.stdout.write(format_table(rows, fmt, args.timing))
    return OK


def cmd_corpus(args) -> int:
    if args.action == "build":
        entries = regression.build(args.dir)
        print(f"wrote {len(entries)} codes")
        return OK
    results = regression.check(args.dir)
    bad = [r for r in results if not r["ok"]]
    if args.json:
        _emit(results)
    else:
        for r in results:
            print(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']:<24s} {r['params']}")
    return OK if not bad else FAIL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nbstab", description="Nonbinary stabilizer code workbench")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, distance=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if distance:
            p.add_argument("--distance", choices=["exact", "bound"], default="exact")

    p = sub.add_parser("construct", help="build a code from a family")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    for name in ("q", "m", "n", "delta", "r1", "r2"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", "-o")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify a code JSON file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="evaluate a bound")
    p.add_argument("--check", required=True,
                   choices=["singleton", "hamming", "gv", "gv-linear", "mds-gv", "lp", "carlitz", "mds-length"])
    for name in ("n", "k", "K", "d", "q", "m", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--conjecture", action="store_true", help="apply the MDS conjecture length cap")
    common(p, distance=False)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("puncture", help="shorten a code via its puncture code")
    p.add_argument("--code")
    p.add_argument("--bch", help="q,m,delta of a euclidean BCH code")
    p.add_argument("--menu", action="store_true")
    p.add_argument("--target-length", type=int)
    p.add_argument("--out", "-o")
    common(p)
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("derive", help="apply a derivation rule")
    p.add_argument("--rule", required=True,
                   choices=["lengthen", "shorten", "reduce", "sum", "combine", "difference", "expand", "contract"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--in2")
    p.add_argument("--sub-degree", type=int, default=1, help="degree of the target field over F_p (expand)")
    p.add_argument("--target-q", type=int, help="alphabet size after contraction")
    p.add_argument("--out", "-o")
    common(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("table", help="tabulate code families over a grid")
    p.add_argument("--q", default="2", help="comma-separated alphabet sizes")
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--timing", action="store_true", help="add a wall-time column")
    common(p, distance=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("corpus", help="build or re-check the regression corpus")
    p.add_argument("action", choices=["build", "check"])
    p.add_argument("--dir", default=None)
    common(p, distance=False)
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StabError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if getattr(exc, "witness", None) is not None:
            payload["witness"] = exc.witness
        print(json.dumps(payload, sort_keys=True, default=str), file=sys.stderr)
        return ERROR
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
