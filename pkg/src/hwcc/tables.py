"""Regenerate the E6/E7 data and T_ab tables, diff them against the
embedded fixtures, and emit them as JSON, CSV, LaTeX or text.

Emitters are deterministic: identical input gives identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import fixtures
from .ccengine import possible_cc, tab_table
from .hermitian import HermitianDatum, av_rank, build_hermitian

__all__ = [
    "DataRow",
    "data_rows",
    "fixture_rows",
    "t_columns",
    "Diff",
    "diff_data",
    "diff_t",
    "emit_data",
    "emit_t",
    "FORMATS",
]

FORMATS = ("json", "csv", "latex", "text")


@dataclass(frozen=True)
class DataRow:
    i: int
    tau: tuple[int, ...]
    dim: int
    av: int
    possible: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"i": self.i, "tau": list(self.tau), "dim": self.dim, "av": self.av,
                "possible": list(self.possible)}


def group(label: str) -> HermitianDatum:
    label = label.upper()
    if label not in fixtures.DATA:
        raise ValueError(f"tables exist for E6 and E7, not {label!r}")
    return build_hermitian(label)


def data_rows(hd: HermitianDatum) -> list[DataRow]:
    """Computed rows; only the AV column comes from the fixture."""
    return [
        DataRow(i, tuple(sorted(w.tau)), w.length, av_rank(hd, w), tuple(sorted(possible_cc(hd, w))))
        for i, w in enumerate(hd.script_w, start=1)
    ]


def fixture_rows(label: str) -> list[DataRow]:
    return [
        DataRow(i, tuple(sorted(t)), d, a, tuple(sorted(p)))
        for i, t, d, a, p in fixtures.DATA[label.upper()]
    ]


def t_columns(hd: HermitianDatum) -> list[tuple[str, list[tuple[int, int]]]]:
    return [(t.name, rows) for t, rows in tab_table(hd)]


def fixture_t_columns(label: str) -> list[tuple[str, list[tuple[int, int]]]]:
    return [
        (f"T{a}{b}", sorted(col.items()))
        for (a, b), col in fixtures.T_TABLES[label.upper()].items()
    ]


@dataclass(frozen=True)
class Diff:
    table: str
    row: object
    field: str
    computed: object
    expected: object

    def as_dict(self) -> dict:
        return {"table": self.table, "row": self.row, "field": self.field,
                "computed": self.computed, "expected": self.expected}

    def __str__(self) -> str:
        return f"{self.table} row {self.row} {self.field}: computed {self.computed}, table {self.expected}"


def diff_data(label: str, rows: list[DataRow]) -> list[Diff]:
    out = []
    for got, exp in zip(rows, fixture_rows(label), strict=True):
        for f in ("tau", "dim", "possible"):
            a, b = getattr(got, f), getattr(exp, f)
            if a != b:
                out.append(Diff(f"{label} data", got.i, f, _plain(a), _plain(b)))
    return out


def diff_t(label: str, cols) -> list[Diff]:
    out = []
    expected = dict(fixture_t_columns(label))
    if [n for n, _ in cols] != list(expected):
        out.append(Diff(f"{label} T", "-", "columns", [n for n, _ in cols], list(expected)))
    for name, rows in cols:
        got, exp = dict(rows), dict(expected.get(name, []))
        for w in sorted(set(got) | set(exp)):
            if got.get(w) != exp.get(w):
                out.append(Diff(f"{label} {name}", w, "image", got.get(w), exp.get(w)))
    return out


def _plain(v):
    return list(v) if isinstance(v, tuple) else v


def _set(v) -> str:
    return "{" + ", ".join(map(str, v)) + "}"


def emit_data(rows: list[DataRow], fmt: str, *, label: str = "") -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["i", "tau", "dim", "av", "possible_cc"])
        for r in rows:
            wr.writerow([r.i, " ".join(map(str, r.tau)), r.dim, r.av, " ".join(map(str, r.possible))])
        return buf.getvalue()
    if fmt == "latex":
        lines = [
            "\\begin{tabular}{rlccc}",
            "i & $\\tau(w_i)$ & $\\dim(Z_{w_i})$ & $AV(L_{w_i})$ & possible CC \\\\",
            "\\hline",
        ]
        for r in rows:
            lines.append(
                f"{r.i} & $\\{{{', '.join(map(str, r.tau))}\\}}$ & {r.dim} & "
                f"$\\mathcal{{O}}_{r.av}$ & $\\{{{', '.join(map(str, r.possible))}\\}}$ \\\\"
            )
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        head = f"{label} data\n" if label else ""
        body = "".join(
            f"{r.i:>3}  {_set(r.tau):<22} {r.dim:>3}  O_{r.av}  {_set(r.possible)}\n" for r in rows
        )
        return head + f"{'i':>3}  {'tau':<22} {'dim':>3}  AV   possible CC\n" + body
    raise ValueError(f"unknown format {fmt!r}")


def emit_t(cols, fmt: str, *, label: str = "") -> str:
    if fmt == "json":
        return json.dumps({name: [list(p) for p in rows] for name, rows in cols}, indent=1) + "\n"
    depth = max((len(rows) for _, rows in cols), default=0)

    def cell(rows, k):
        return rows[k] if k < len(rows) else ("", "")

    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow([h for name, _ in cols for h in ("w", f"{name}(w)")])
        for k in range(depth):
            wr.writerow([v for _, rows in cols for v in cell(rows, k)])
        return buf.getvalue()
    if fmt == "latex":
        spec = "|".join("cc" for _ in cols)
        lines = [
            f"\\begin{{tabular}}{{{spec}}}",
            " & ".join(f"$w$ & $\\mathbf{{T}}_{{{name[1:]}}}(w)$" for name, _ in cols) + " \\\\",
            "\\hline",
        ]
        for k in range(depth):
            lines.append(" & ".join(f"{a} & {b}" for _, rows in cols for a, b in [cell(rows, k)]) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        out = [f"{label} T operators" if label else "T operators"]
        out.append("  ".join(f"{'w':>3} {name + '(w)':>8}" for name, _ in cols))
        for k in range(depth):
            out.append("  ".join(f"{a!s:>3} {b!s:>8}" for _, rows in cols for a, b in [cell(rows, k)]))
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
