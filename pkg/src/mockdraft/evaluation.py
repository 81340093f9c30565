"""Season-level evaluation: final-mock selection, percentile tables, error time series, slope graphs."""

from __future__ import annotations

import datetime as dt
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from statistics import fmean
from typing import NamedTuple

from mockdraft.aggregation import Method, combine, consensus_length, window_mocks
from mockdraft.errors import DegenerateSeason, UnknownSeason
from mockdraft.metrics import MetricParams, rbd
from mockdraft.model import DraftDataset, ForecastType, MockDraftRecord, RankedList

DEFAULT_HORIZON_DAYS = 30
DEFAULT_WINDOW_DAYS = 10
DEFAULT_MIN_SEASONS = 3

CONSENSUS = "consensus"


class AuthorKey(NamedTuple):
    author: str
    forecast_type: str

    @property
    def label(self) -> str:
        if self.forecast_type == ForecastType.RANKING.value:
            return f"{self.author} (R)"
        return self.author

    @property
    def is_consensus(self) -> bool:
        return self.forecast_type == CONSENSUS


BORDA_KEY = AuthorKey("BORDA", CONSENSUS)
RCA_KEY = AuthorKey("RCA", CONSENSUS)
CONSENSUS_KEYS = {Method.BORDA: BORDA_KEY, Method.RCA: RCA_KEY}
ALL_METHODS = (Method.BORDA, Method.RCA)


def _methods(methods: Iterable[Method | str]) -> list[Method]:
    return sorted({Method(m) for m in methods}, key=ALL_METHODS.index)


def author_key(record: MockDraftRecord) -> AuthorKey:
    return AuthorKey(record.author, record.forecast_type.value)


@dataclass(frozen=True)
class FinalMockSelection:
    season: int
    author_key: AuthorKey
    record: MockDraftRecord
    days_before_draft: int


@dataclass(frozen=True)
class PercentileRow:
    author_key: AuthorKey
    per_season_percentile: dict[int, float]
    avg_percentile: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "avg_percentile", fmean(self.per_season_percentile.values()))

    @property
    def label(self) -> str:
        return self.author_key.label


class TimeSeriesRow(NamedTuple):
    date: dt.date
    series_key: str
    rbd: float


@dataclass(frozen=True)
class SlopeGraph:
    """Plot-ready geometry linking mocked ranks to actual ranks.

    ``segments`` holds ``(item, mock_rank, actual_rank)`` for items in both
    lists.  Items in only one list go to the matching terminal set.
    """

    segments: tuple[tuple[str, int, int], ...]
    mock_terminal: frozenset[str]
    actual_terminal: frozenset[str]


def _require_actual(dataset: DraftDataset, season: int):
    actual = dataset.actuals.get(season)
    if actual is None:
        raise UnknownSeason(f"season {season} has no actual draft")
    return actual


def select_final_mocks(
    dataset: DraftDataset, season: int, horizon_days: int = DEFAULT_HORIZON_DAYS
) -> list[FinalMockSelection]:
    """Latest mock per (author, forecast type) dated within ``horizon_days`` of the draft.

    The window includes draft day itself.  Same-day ties go to the longer
    list, then to the lexicographically smaller entry sequence.
    """
    actual = _require_actual(dataset, season)
    start = actual.draft_date - dt.timedelta(days=horizon_days)
    best: dict[AuthorKey, MockDraftRecord] = {}
    for record in dataset.mocks_for(season):
        if not start <= record.publish_date <= actual.draft_date:
            continue
        key = author_key(record)
        if _supersedes(record, best.get(key)):
            best[key] = record
    return [
        FinalMockSelection(season, key, rec, (actual.draft_date - rec.publish_date).days)
        for key, rec in sorted(best.items())
    ]


def _supersedes(candidate: MockDraftRecord, current: MockDraftRecord | None) -> bool:
    if current is None:
        return True
    a = (candidate.publish_date, len(candidate.ranking))
    b = (current.publish_date, len(current.ranking))
    if a != b:
        return a > b
    return candidate.ranking.entries < current.ranking.entries


def percentiles(errors: dict, *, season: int | None = None) -> dict:
    """Map keys to ``(n - rank) / (n - 1)`` with rank 1 for the smallest error.

    Tied errors share the mean of their rank positions.
    """
    n = len(errors)
    if n < 2:
        raise DegenerateSeason(f"season {season}: need at least 2 scored entries, got {n}")
    ordered = sorted(errors, key=lambda k: (errors[k], k))
    out = {}
    i = 0
    while i < n:
        j = i
        while j + 1 < n and errors[ordered[j + 1]] == errors[ordered[i]]:
            j += 1
        if i == j:
            out[ordered[i]] = (n - (i + 1)) / (n - 1)
        else:
            # ranks i+1..j+1 share their mean rank
            shared = (2 * n - (i + 1) - (j + 1)) / (2 * (n - 1))
            for key in ordered[i : j + 1]:
                out[key] = shared
        i = j + 1
    return out


def season_errors(
    dataset: DraftDataset,
    season: int,
    params: MetricParams | None = None,
    horizon_days: int = DEFAULT_HORIZON_DAYS,
    consensus_methods: Iterable[Method | str] = ALL_METHODS,
) -> dict[AuthorKey, float]:
    """Rank-biased distance to the actual draft for every final mock of a season.

    Each method in ``consensus_methods`` adds one entry: the consensus of those
    same final mocks.
    """
    actual = _require_actual(dataset, season).ranking
    finals = select_final_mocks(dataset, season, horizon_days)
    errors = {sel.author_key: rbd(sel.record.ranking.untiered(), actual, params) for sel in finals}
    if finals:
        records = [sel.record for sel in finals]
        for method in _methods(consensus_methods):
            ordering = combine(records, method, len(actual)).ordering
            errors[CONSENSUS_KEYS[method]] = rbd(ordering, actual, params)
    return errors


def percentile_table(
    dataset: DraftDataset,
    params: MetricParams | None = None,
    horizon_days: int = DEFAULT_HORIZON_DAYS,
    min_seasons: int = DEFAULT_MIN_SEASONS,
    consensus_methods: Iterable[Method | str] = ALL_METHODS,
) -> list[PercentileRow]:
    """Per-season percentile of each final mock, filtered to regular authors.

    Every season with an actual draft and at least one final mock is scored.
    Authors need ``min_seasons`` scored seasons to appear; consensus rows
    always appear.  Rows are sorted by average percentile, best first.

    Raises:
        DegenerateSeason: a scored season has fewer than two final mocks.
    """
    by_author: dict[AuthorKey, dict[int, float]] = defaultdict(dict)
    for season in dataset.actuals:
        n_finals = len(select_final_mocks(dataset, season, horizon_days))
        if n_finals == 0:
            continue
        if n_finals < 2:
            raise DegenerateSeason(f"season {season}: need at least 2 final mocks, got {n_finals}")
        errors = season_errors(dataset, season, params, horizon_days, consensus_methods)
        for key, pct in percentiles(errors, season=season).items():
            by_author[key][season] = pct

    rows = [
        PercentileRow(key, dict(sorted(cells.items())))
        for key, cells in by_author.items()
        if key.is_consensus or len(cells) >= min_seasons
    ]
    rows.sort(key=lambda r: (-r.avg_percentile, r.author_key))
    return rows


def _series_key(key: AuthorKey) -> str:
    return key.label


def error_timeseries(
    dataset: DraftDataset,
    season: int,
    params: MetricParams | None = None,
    window_days: int = DEFAULT_WINDOW_DAYS,
    consensus_methods: Iterable[Method | str] = ALL_METHODS,
) -> list[TimeSeriesRow]:
    """Daily rank-biased distance of each author's latest in-window mock and of both consensus methods.

    Days run from the season's first mock to draft day.  An author with no
    mock inside ``(day - window_days, day]`` gets no row that day.
    """
    actual_draft = _require_actual(dataset, season)
    actual = actual_draft.ranking
    mocks = [m for m in dataset.mocks_for(season) if m.publish_date <= actual_draft.draft_date]
    if not mocks:
        return []
    length = consensus_length(dataset, season)
    methods = _methods(consensus_methods)
    cache: dict[MockDraftRecord, float] = {}

    def score(record: MockDraftRecord) -> float:
        if record not in cache:
            cache[record] = rbd(record.ranking.untiered(), actual, params)
        return cache[record]

    rows: list[TimeSeriesRow] = []
    day = min(m.publish_date for m in mocks)
    while day <= actual_draft.draft_date:
        start = day - dt.timedelta(days=window_days)
        latest: dict[AuthorKey, MockDraftRecord] = {}
        for record in mocks:
            if start < record.publish_date <= day:
                key = author_key(record)
                if _supersedes(record, latest.get(key)):
                    latest[key] = record
        for key, record in latest.items():
            rows.append(TimeSeriesRow(day, _series_key(key), score(record)))
        pool = window_mocks(dataset, season, day, window_days)
        if pool:
            for method in methods:
                ordering = combine(pool, method, length).ordering
                rows.append(TimeSeriesRow(day, _series_key(CONSENSUS_KEYS[method]), rbd(ordering, actual, params)))
        day += dt.timedelta(days=1)
    rows.sort(key=lambda r: (r.date, r.series_key))
    return rows


def slopegraph(mock: RankedList, actual: RankedList) -> SlopeGraph:
    segments = tuple((item, rank, actual.position(item)) for rank, item in enumerate(mock, start=1) if item in actual)
    return SlopeGraph(
        segments,
        frozenset(item for item in mock if item not in actual),
        frozenset(item for item in actual if item not in mock),
    )


def final_slopegraphs(
    dataset: DraftDataset, season: int, horizon_days: int = DEFAULT_HORIZON_DAYS
) -> list[tuple[FinalMockSelection, SlopeGraph]]:
    actual = _require_actual(dataset, season).ranking
    return [(sel, slopegraph(sel.record.ranking, actual)) for sel in select_final_mocks(dataset, season, horizon_days)]


__all__ = [
    "AuthorKey",
    "BORDA_KEY",
    "RCA_KEY",
    "FinalMockSelection",
    "PercentileRow",
    "SlopeGraph",
    "TimeSeriesRow",
    "error_timeseries",
    "final_slopegraphs",
    "percentile_table",
    "percentiles",
    "season_errors",
    "select_final_mocks",
    "slopegraph",
]
