import csv

from hyperjack.plotting import TREND_COLUMNS, szego_gap_figure, trend_rows, write_csv
from hyperjack.toeplitz import szego_trend


def _trends():
    return [szego_trend({1: 0.5, -1: 0.5}, 1, [2, 4, 6]), szego_trend({1: 0.5, -1: 0.5}, 2, [2, 3])]


def test_trend_rows_and_csv(tmp_path):
    rows = [r for t in _trends() for r in trend_rows(t)]
    assert [(r["m"], r["n"]) for r in rows] == [(1, 2), (1, 4), (1, 6), (2, 2), (2, 3)]
    path = write_csv(rows, tmp_path / "sub" / "gaps.csv")
    read = list(csv.DictReader(path.open()))
    assert tuple(read[0]) == TREND_COLUMNS
    assert float(read[0]["log_gap"]) == rows[0]["log_gap"]


def test_figure_is_deterministic(tmp_path):
    a = szego_gap_figure(_trends(), tmp_path / "a.png", title="gaps")
    b = szego_gap_figure(_trends(), tmp_path / "b.png", title="gaps")
    assert a.read_bytes()[:4] == b"\x89PNG"
    assert a.read_bytes() == b.read_bytes()
