"""Writers for consensus rankings, RCA traces, percentile tables, time series and slope graphs.

Every writer sorts its rows and formats floats with ``repr`` so reruns on the
same input are byte-identical.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import re
from collections.abc import Iterable, Sequence
from os import PathLike
from pathlib import Path

from mockdraft.aggregation import BordaResult, Method, RcaTrace
from mockdraft.evaluation import PercentileRow, SlopeGraph, TimeSeriesRow


def fmt(value: float) -> str:
    return repr(float(value))


def _write(path: str | PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="")
    return path


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def consensus_csv(result: BordaResult | RcaTrace, season: int, as_of: dt.date) -> str:
    """Columns: rank, player, method, season, as_of_date, score, round_count.

    ``score`` is filled for Borda, ``round_count`` (ballot counts spent on that
    pick) for RCA.
    """
    method = Method.BORDA if isinstance(result, BordaResult) else Method.RCA
    rows = []
    for rank, player in enumerate(result.ordering, start=1):
        if method is Method.BORDA:
            score, rounds = result.scores[player], ""
        else:
            score, rounds = "", len(result.rounds_for(rank))
        rows.append([rank, player, method.value, season, as_of.isoformat(), score, rounds])
    return _csv(["rank", "player", "method", "season", "as_of_date", "score", "round_count"], rows)


def rca_trace_log(trace: RcaTrace) -> str:
    """One line per ballot count: pick, ballots cast, vote counts, action."""
    lines = []
    for r in trace.rounds:
        counts = ";".join(f"{player}={votes}" for player, votes in r.votes)
        action = f"win {r.winner}" if r.winner is not None else f"eliminate {r.eliminated}"
        lines.append(f"pick={r.pick}\tballots={r.ballots}\tcounts={counts}\taction={action}")
    return "\n".join(lines) + "\n" if lines else ""


def percentile_csv(rows: Sequence[PercentileRow]) -> str:
    seasons = sorted({s for row in rows for s in row.per_season_percentile})
    body = []
    for row in rows:
        cells = [fmt(row.per_season_percentile[s]) if s in row.per_season_percentile else "" for s in seasons]
        body.append([row.label, *cells, fmt(row.avg_percentile)])
    return _csv(["author", *map(str, seasons), "avg"], body)


def timeseries_csv(rows: Iterable[TimeSeriesRow]) -> str:
    ordered = sorted(rows, key=lambda r: (r.date, r.series_key))
    return _csv(["date", "series_key", "rbd"], [[r.date.isoformat(), r.series_key, fmt(r.rbd)] for r in ordered])


def slopegraph_csv(graph: SlopeGraph) -> str:
    """One record per segment or terminal node: kind, player, mock_rank, actual_rank."""
    rows = [["segment", item, m, a] for item, m, a in graph.segments]
    rows += [["mock_terminal", item, "", ""] for item in sorted(graph.mock_terminal)]
    rows += [["actual_terminal", item, "", ""] for item in sorted(graph.actual_terminal)]
    return _csv(["kind", "player", "mock_rank", "actual_rank"], rows)


def slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", text.casefold()).strip("-") or "unnamed"


write_text = _write
