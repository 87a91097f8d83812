"""Command line entry point: ``hwcc`` or ``python -m hwcc``.

Exit status is 0 when every check passes, 1 when a check or table diff
fails and 2 on a usage error.  Output on stdout depends only on the
command line; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb

from . import CONVENTION_VERSION, fixtures

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _report(argv, result, *, ok: bool, notes=()) -> dict:
    return {
        "command": list(argv),
        "convention_version": CONVENTION_VERSION,
        "fixture_version": fixtures.FIXTURE_VERSION,
        "ok": ok,
        "notes": list(notes),
        "result": result,
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


# tables


def cmd_tables(args, argv) -> tuple[str, int]:
    from . import tables

    label = args.group.upper()
    hd = tables.group(label)
    rows = tables.data_rows(hd) if args.which in ("data", "all") else []
    cols = tables.t_columns(hd) if args.which in ("t", "all") else []
    diffs = []
    if rows:
        diffs += tables.diff_data(label, rows)
    if cols:
        diffs += tables.diff_t(label, cols)
    ok = not diffs
    notes = [f"{k}: {v}" for k, v in fixtures.PROVENANCE.items() if label in k]
    if args.fmt == "json":
        result = {
            "group": label,
            "data": [r.as_dict() for r in rows],
            "t": {name: [list(p) for p in col] for name, col in cols},
            "diffs": [d.as_dict() for d in diffs],
        }
        return _dump(_report(argv, result, ok=ok, notes=notes)), EXIT_OK if ok else EXIT_FAIL
    parts = []
    if rows:
        parts.append(tables.emit_data(rows, args.fmt, label=label))
    if cols:
        parts.append(tables.emit_t(cols, args.fmt, label=label))
    out = "\n".join(parts)
    if args.fmt == "text":
        out += f"\n{len(diffs)} diffs against the embedded tables\n"
        out += "".join(f"  {d}\n" for d in diffs)
    elif diffs:
        sys.stderr.write("".join(f"diff: {d}\n" for d in diffs))
    return out, EXIT_OK if ok else EXIT_FAIL


# cc


def _term_name(hd, y) -> str:
    t = hd.rs.type_label
    if t == "C":
        return y.entries
    if t == "B":
        from .hermitian import typeb_param

        k, s = typeb_param(hd, y)
        return f"w_{k}^{s}"
    return f"w_{hd.index[y]}"


def cmd_cc(args, argv) -> tuple[str, int]:
    from .ccengine import characteristic_cycle, leading_term_cycle
    from .hermitian import build_hermitian

    g = args.group
    if g == "sp":
        from .clans import Clan

        if not args.param:
            raise UsageError("cc sp needs a clan, e.g. cc sp '1+23+4++5'")
        try:
            c = Clan.parse(args.param)
        except ValueError as e:
            raise UsageError(str(e)) from None
        hd = build_hermitian("C", len(c))
        w = c
        what = c.entries
    elif g == "so":
        from .typeb import build_wk

        if args.n is None or args.k is None or args.sign is None:
            raise UsageError("cc so needs --n, --k and --sign")
        try:
            w = build_wk(args.n, args.k, args.sign)
        except ValueError as e:
            raise UsageError(str(e)) from None
        hd = build_hermitian("B", args.n)
        what = f"w_{args.k}^{args.sign}"
    else:
        if args.index is None:
            raise UsageError(f"cc {g} needs --index")
        try:
            if g in ("e6", "e7"):
                hd = build_hermitian(g.upper())
            elif g == "su":
                if args.n is None:
                    raise UsageError("cc su needs --n (the rank) and optionally --p")
                hd = build_hermitian("A", args.n, p=args.p)
            else:
                if args.n is None:
                    raise UsageError(f"cc {g} needs --n")
                hd = build_hermitian("D", args.n, real_form="so2" if g == "so2" else "sostar")
        except ValueError as e:
            raise UsageError(str(e)) from None
        if not 1 <= args.index <= len(hd.script_w):
            raise UsageError(f"--index must lie in 1..{len(hd.script_w)}")
        w = hd.script_w[args.index - 1]
        what = f"w_{args.index}"
    cc = characteristic_cycle(hd, w)
    ltc = leading_term_cycle(hd, w)
    result = {
        "group": hd.label,
        "parameter": what,
        "cc": [[_term_name(hd, y), m] for y, m in cc.terms],
        "ltc": [[_term_name(hd, y), m] for y, m in ltc.terms],
        "residual": [_term_name(hd, y) for y in cc.residual],
        "provenance": cc.provenance,
    }
    ok = not cc.residual
    if args.fmt == "json":
        return _dump(_report(argv, result, ok=ok)), EXIT_OK if ok else EXIT_FAIL
    if args.fmt != "text":
        raise UsageError("cc supports --fmt json or text")
    lines = [
        f"{hd.label} {what}",
        "CC  = " + " + ".join(f"{m}[{n}]" for n, m in result["cc"]),
        "LTC = " + " + ".join(f"{m}[{n}]" for n, m in result["ltc"]),
        f"({cc.provenance})",
    ]
    if cc.residual:
        lines.append("unresolved: " + ", ".join(result["residual"]))
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


# count


def cmd_count(args, argv) -> tuple[str, int]:
    from . import clans

    n = args.n
    if n < 1:
        raise UsageError("n must be at least 1")
    method = args.method
    if method == "auto":
        method = "enumeration" if n <= clans.ENUMERATION_CAP else "recurrence"
    if method == "enumeration" and n > clans.ENUMERATION_CAP:
        raise UsageError(
            f"enumeration is capped at n = {clans.ENUMERATION_CAP}; rerun with --method recurrence"
        )
    rec = clans.irreducible_count_recurrence(n)
    closed = comb(n + 1, n // 2) if n % 2 == 0 else 2 * comb(n, (n - 1) // 2)
    values = {"recurrence": rec, "closed_form": closed}
    by_cell = None
    if method == "enumeration":
        values["enumeration"] = clans.count_irreducible(n)
        if args.by_cell:
            by_cell = clans.count_irreducible_by_cell(n)
    elif args.by_cell:
        by_cell = {j: clans.path_count_oracle(n, j, restricted=True) for j in range(n + 1)}
    agree = len(set(values.values())) == 1
    result = {"n": n, "N": values[method], "method": method, "values": values, "agree": agree}
    if by_cell is not None:
        result["by_cell"] = [{"n": n, "j": j, "count": c} for j, c in sorted(by_cell.items())]
    code = EXIT_OK if agree else EXIT_FAIL
    if args.fmt == "json":
        return _dump(_report(argv, result, ok=agree)), code
    if args.fmt == "csv":
        rows = result.get("by_cell") or [{"n": n, "j": "all", "count": result["N"]}]
        return "n,j,count\n" + "".join(f"{r['n']},{r['j']},{r['count']}\n" for r in rows), code
    if args.fmt == "latex":
        rows = result.get("by_cell") or []
        body = "".join(f"{r['j']} & {r['count']} \\\\\n" for r in rows)
        return (
            "\\begin{tabular}{rr}\n$j$ & $N(n,j)$ \\\\\n\\hline\n" + body
            + f"\\hline\nall & {result['N']} \\\\\n\\end{{tabular}}\n"
        ), code
    lines = [f"N({n}) = {result['N']}  [{method}]"]
    lines += [f"  {k}: {v}" for k, v in values.items()]
    lines.append("methods agree" if agree else "METHODS DISAGREE")
    if by_cell is not None:
        lines += [f"  N({n},{j}) = {c}" for j, c in sorted(by_cell.items())]
    return "\n".join(lines) + "\n", code


# verify


def _verify_bruhat(n: int) -> dict:
    from .hermitian import build_hermitian
    from .weyl import bruhat_leq

    fails = []
    checks = 0
    groups = [build_hermitian("E6")] + [build_hermitian("B", m) for m in range(2, n + 1)]
    for hd in groups:
        W = hd.script_w
        leq = {(a, b): bruhat_leq(y, w) for a, y in enumerate(W) for b, w in enumerate(W)}
        for a, y in enumerate(W):
            checks += 1
            if not leq[a, a]:
                fails.append(f"{hd.label}: not reflexive at {a + 1}")
            for b, w in enumerate(W):
                checks += 2
                if a != b and leq[a, b] and leq[b, a]:
                    fails.append(f"{hd.label}: {a + 1} and {b + 1} compare both ways")
                # the order is invariant under inversion
                if leq[a, b] != bruhat_leq(y.inverse(), w.inverse()):
                    fails.append(f"{hd.label}: inversion changes {a + 1} <= {b + 1}")
        for a in range(len(W)):
            for b in range(len(W)):
                if not leq[a, b]:
                    continue
                for c in range(len(W)):
                    checks += 1
                    if leq[b, c] and not leq[a, c]:
                        fails.append(f"{hd.label}: not transitive at {a + 1},{b + 1},{c + 1}")
    return {"suite": "bruhat", "checks": checks, "ok": not fails, "failures": fails}


def _verify_clans(n: int) -> dict:
    from . import clans

    fails = []
    checks = 0
    for m in range(1, n + 1):
        cells = dict.fromkeys(range(m + 1), 0)
        for c in clans.all_clans(m):
            checks += 1
            d_rec, d_closed = clans.d_set_recursive(c), clans.d_set_closed(c)
            if d_rec != d_closed:
                fails.append(f"{c}: recursion and closed form differ")
            if len(d_closed) != 2 ** len(clans.j_set(c)):
                fails.append(f"{c}: |D(c)| != 2^|J(c)|")
            if c not in d_closed or clans.geometric_cell(c) != min(map(clans.geometric_cell, d_closed)):
                fails.append(f"{c}: c is not the smallest cell in D(c)")
            cells[clans.geometric_cell(c)] += 1
        for j, cnt in cells.items():
            checks += 1
            if clans.path_count_oracle(m, j) != cnt:
                fails.append(f"n={m} j={j}: path count differs from enumeration")
    return {"suite": "clans", "checks": checks, "ok": not fails, "failures": fails}


def _typeb_reports(n: int) -> dict:
    from .typeb import verify_lemma_b1, verify_t_lemma

    reps = [verify_lemma_b1(m).as_dict() for m in range(2, n + 1)]
    reps += [verify_t_lemma(m).as_dict() for m in range(3, n + 1)]
    return {"suite": "b-lemmas", "ok": all(r["ok"] for r in reps), "reports": reps}


def _slice_reports(n: int, samples: int, seed: int) -> dict:
    from .typeb import verify_slice

    ns = [n] if n is not None else [3, 4, 5]
    reps = [verify_slice(m, samples, seed).as_dict() for m in ns]
    return {"suite": "b-slice", "ok": all(r["ok"] for r in reps), "reports": reps}


def cmd_verify(args, argv) -> tuple[str, int]:
    suites = ["b-lemmas", "b-slice", "clans", "bruhat"] if args.suite == "all" else [args.suite]
    results = []
    for s in suites:
        if s == "b-lemmas":
            results.append(_typeb_reports(args.n or 8))
        elif s == "b-slice":
            if args.n is not None and args.n < 3:
                raise UsageError("the slice needs n >= 3")
            results.append(_slice_reports(args.n, args.samples, args.seed))
        elif s == "clans":
            results.append(_verify_clans(args.n or 10))
        elif s == "bruhat":
            results.append(_verify_bruhat(args.n or 6))
    ok = all(r["ok"] for r in results)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.fmt == "json":
        return _dump(_report(argv, results, ok=ok)), code
    lines = []
    for r in results:
        lines.append(f"{r['suite']}: {'pass' if r['ok'] else 'FAIL'}")
        for f in r.get("failures", [])[:20]:
            lines.append(f"  {f}")
        for rep in r.get("reports", []):
            if not rep["ok"]:
                lines.append(f"  {json.dumps(rep, sort_keys=True)}")
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hwcc",
        description="Characteristic cycles of highest weight Harish-Chandra modules.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="regenerate the E6/E7 tables and diff them")
    t.add_argument("group", choices=["e6", "e7"])
    t.add_argument("--which", choices=["data", "t", "all"], default="all")
    t.add_argument("--fmt", choices=["json", "csv", "latex", "text"], default="text")
    t.set_defaults(func=cmd_tables)

    c = sub.add_parser("cc", help="characteristic and leading term cycle of one module")
    c.add_argument("group", choices=["e6", "e7", "so", "sp", "su", "so2", "sostar"])
    c.add_argument("param", nargs="?", help="clan string for sp")
    c.add_argument("--n", type=int, help="rank")
    c.add_argument("--k", type=int)
    c.add_argument("--sign", choices=["+", "-"])
    c.add_argument("--p", type=int, help="p for SU(p,q)")
    c.add_argument("--index", type=int, help="1-based position in W_hw")
    c.add_argument("--fmt", choices=["json", "text"], default="text")
    c.set_defaults(func=cmd_cc)

    n = sub.add_parser("count", help="count Sp(2n,R) modules with irreducible cycle")
    n.add_argument("n", type=int)
    n.add_argument("--by-cell", action="store_true")
    n.add_argument("--method", choices=["auto", "enumeration", "recurrence"], default="auto")
    n.add_argument("--fmt", choices=["json", "csv", "latex", "text"], default="text")
    n.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["b-lemmas", "b-slice", "clans", "bruhat", "all"])
    v.add_argument("--n", type=int)
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--fmt", choices=["json", "text"], default="text")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    start = time.perf_counter()
    try:
        out, code = args.func(args, argv)
    except UsageError as e:
        sys.stderr.write(f"hwcc: error: {e}\n")
        return EXIT_USAGE
    sys.stdout.write(out)
    sys.stderr.write(f"[{args.command} finished in {time.perf_counter() - start:.2f}s]\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
