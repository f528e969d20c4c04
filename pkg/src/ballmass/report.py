"""CSV and figure output for convergence sweeps.

The CSV schema is fixed (header below, '.' decimal separator, 17
significant digits) so rows plot directly without post-processing.  The
optional figure renders the ratio against its target and the relative
error on a log-log scale, next to the CSV.
"""

from __future__ import annotations

import io
from pathlib import Path

CSV_HEADER = "n,d,mu,lambda,r,ratio,target,abs_err,rel_err"

_COLUMNS = ("n", "d", "mu", "lam", "r", "ratio", "target", "abs_err", "rel_err")


def format_number(v) -> str:
    """Fixed 17-significant-digit rendering used for all numeric output."""
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    return f"{v:.17g}"


def record_row(record) -> list:
    return [format_number(getattr(record, name)) for name in _COLUMNS]


def write_records_csv(records, path) -> None:
    """Write sweep records to ``path``; byte-stable for identical inputs."""
    with open(path, "w", newline="\n") as fh:
        fh.write(records_csv_text(records))


def records_csv_text(records) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for rec in records:
        buf.write(",".join(record_row(rec)) + "\n")
    return buf.getvalue()


def records_table(records) -> str:
    """Aligned text table of sweep records for standard output."""
    header = CSV_HEADER.split(",")
    rows = [record_row(rec) for rec in records]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines)


def figure_path_for(csv_path) -> Path:
    return Path(csv_path).with_suffix(".png")


def render_convergence_figure(records, path, title: str = "") -> None:
    """Render ratio-vs-degree and relative-error panels to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [rec.n for rec in records]
    ratios = [rec.ratio for rec in records]
    rel_errs = [rec.rel_err for rec in records]
    target = records[0].target if records else None

    fig, (ax_ratio, ax_err) = plt.subplots(1, 2, figsize=(9.0, 3.4))
    ax_ratio.semilogx(ns, ratios, "o-", color="tab:blue", label="ratio")
    if target is not None:
        ax_ratio.axhline(target, color="tab:red", ls="--", lw=1, label="target")
    ax_ratio.set_xlabel("degree n")
    ax_ratio.set_ylabel("kernel ratio")
    ax_ratio.legend(frameon=False)
    ax_ratio.grid(True, which="both", alpha=0.3)

    ax_err.loglog(ns, rel_errs, "s-", color="tab:green")
    ax_err.set_xlabel("degree n")
    ax_err.set_ylabel("relative error")
    ax_err.grid(True, which="both", alpha=0.3)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
