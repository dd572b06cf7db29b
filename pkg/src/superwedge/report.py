"""Family-grid reproduction runs and their rendered outputs.

A reproduction run sweeps a whole family table (the Heisenberg grid or the
classified dim<=4 families at admissible parameter samples), computes one
multiplier report per row and compares it against the expected triviality
claim.  Rows are ordered deterministically by id; output renders as a
markdown table on stdout, optionally as CSV and as a machine report, and
the report path can render a summary figure next to the delimited output.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .formats import dumps_canonical, report_to_json
from .scalars import format_scalar
from .superlie import SuperAlgebra
from .wedge import B0Report, SaturationConfig, bogomolov

TABLES = ("heisenberg", "backhouse-trivial", "backhouse-nontrivial")


@dataclass(frozen=True)
class ReproRow:
    key: str
    params_text: str
    algebra: SuperAlgebra
    report: B0Report
    expected_trivial: bool

    @property
    def ok(self) -> bool:
        if self.expected_trivial:
            return self.report.status == "CERTIFIED_ZERO" and self.report.b0_bound == 0
        return self.report.b0_bound >= 1


def _heisenberg_grid(max_m: int, max_n: int):
    for m in range(0, max_m + 1):
        for n in range(0, max_n + 1):
            if m + n < 1:
                continue
            yield f"heisenberg_special({m},{n})", catalog.heisenberg_special(m, n), ""
    for m in range(1, max_m + 1):
        yield f"heisenberg_odd({m})", catalog.heisenberg_odd(m), ""


def _backhouse_grid(kind: str):
    for ident in catalog.backhouse_ids(kind):
        fam = catalog.backhouse_family(ident)
        if fam.params:
            for sample in fam.samples:
                text = ",".join(
                    f"{k}={format_scalar(sample[k])}" for k in fam.params
                )
                yield f"backhouse({ident})", fam.build(sample), text
        else:
            yield f"backhouse({ident})", fam.build(), ""


def reproduce_table(
    table: str,
    cfg: SaturationConfig = SaturationConfig(),
    max_m: int = 2,
    max_n: int = 2,
) -> list[ReproRow]:
    """Run the multiplier computation across one family table."""
    if table == "heisenberg":
        grid = _heisenberg_grid(max_m, max_n)
    elif table == "backhouse-trivial":
        grid = _backhouse_grid("trivial")
    elif table == "backhouse-nontrivial":
        grid = _backhouse_grid("nontrivial")
    else:
        raise ValueError(f"unknown table {table!r}; pick one of {TABLES}")
    rows = []
    for key, algebra, params_text in grid:
        report = bogomolov(algebra, cfg)
        rows.append(
            ReproRow(
                key=key,
                params_text=params_text,
                algebra=algebra,
                report=report,
                expected_trivial=True,
            )
        )
    return rows


_COLUMNS = ("id", "params", "dim", "L2", "wedge", "schur", "m0", "B0", "status", "ok")


def _row_cells(row: ReproRow) -> tuple:
    d = row.report.dims
    return (
        row.key,
        row.params_text or "-",
        f"({row.algebra.even_dim}|{row.algebra.odd_dim})",
        str(d["derived"]),
        str(d["exterior_square"]),
        str(d["schur"]),
        str(d["m0_found"]),
        str(d["b0_bound"]),
        row.report.status_text(),
        "yes" if row.ok else "MISMATCH",
    )


def rows_markdown(rows) -> str:
    body = [_COLUMNS, tuple("---" for _ in _COLUMNS)]
    body += [_row_cells(r) for r in rows]
    return "\n".join("| " + " | ".join(cells) + " |" for cells in body)


def rows_csv(rows) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_COLUMNS)
    for r in rows:
        writer.writerow(_row_cells(r))
    return buf.getvalue()


def rows_json(rows, table: str) -> str:
    payload = {
        "table": table,
        "rows": [
            {
                "id": r.key,
                "params": r.params_text,
                "ok": r.ok,
                "report": report_to_json(r.report, r.algebra),
            }
            for r in rows
        ],
    }
    return dumps_canonical(payload)


def render_figure(rows, table: str, path: str) -> None:
    """Bar chart of multiplier vs certified commuting part per row."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [
        r.key.replace("backhouse(", "").rstrip(")") + (f"[{r.params_text}]" if r.params_text else "")
        for r in rows
    ]
    schur = [r.report.dims["schur"] for r in rows]
    m0 = [r.report.dims["m0_found"] for r in rows]
    xs = range(len(rows))
    width = 0.42
    fig, ax = plt.subplots(figsize=(max(6.0, 0.34 * len(rows) + 2.0), 4.2))
    ax.bar([x - width / 2 for x in xs], schur, width, label="dim multiplier", color="#4878CF")
    ax.bar([x + width / 2 for x in xs], m0, width, label="dim commuting part", color="#6ACC65")
    for x, r in zip(xs, rows):
        if not r.ok:
            ax.plot(x, max(r.report.dims["schur"], 1) + 0.3, "rv")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_ylabel("dimension")
    ax.set_title(f"reproduction grid: {table}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=160)
    plt.close(fig)
