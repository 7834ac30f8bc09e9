"""Figures for the numeric Szegő trend, rendered to files with the Agg backend."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib import pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "axes.labelsize": 11,
    "axes.titlesize": 12,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.fontsize": 9,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    # keep the PNG bytes independent of the build date
    "svg.hashsalt": "hyperjack",
}

TREND_COLUMNS = ("m", "n", "normalized", "prediction", "log_gap")


def trend_rows(trend) -> list[dict]:
    rows = []
    for r in trend.rows:
        rows.append(
            {
                "m": trend.m,
                "n": r.n,
                "normalized": _real(r.normalized),
                "prediction": _real(r.prediction),
                "log_gap": float(r.log_gap),
            }
        )
    return rows


def _real(x):
    x = complex(x)
    return x.real if x.imag == 0 else str(x)


def write_csv(rows: Iterable[dict], path, columns: Sequence[str] = TREND_COLUMNS) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _format(row[k]) for k in columns})
    return path


def _format(v):
    return repr(v) if isinstance(v, float) else v


def szego_gap_figure(trends, path, title: str | None = None) -> Path:
    """Semilog plot of ``|log D^_n - log prediction|`` against ``n``, one line per trend."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for trend in trends:
            ns = [r.n for r in trend.rows]
            # exact zeros cannot be drawn on a log axis
            gaps = [max(float(r.log_gap), 1e-17) for r in trend.rows]
            ax.semilogy(ns, gaps, marker="o", label=f"order {2 * trend.m}")
            if trend.atol > 0:
                ax.axhline(trend.atol, color="0.6", lw=0.8, ls=":")
        ax.set_xlabel("n")
        ax.set_ylabel(r"$|\log \widehat{D}_n - \log \mathrm{prediction}|$")
        if title:
            ax.set_title(title)
        ax.legend()
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None})
        plt.close(fig)
    return path
