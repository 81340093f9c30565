"""Flat-file ingestion and serialization for mock drafts and actual drafts.

Mock-draft file columns::

    season,author,forecast_type,publish_date,rank,player[,tier]

Actual-draft file columns::

    season,draft_date,rank,player

Alias file columns::

    variant,canonical

Player names are matched on a whitespace-collapsed, case-folded key.  The
display spelling of a player is the alias canonical name when one exists,
otherwise the first spelling met (actual drafts are read before mocks).
"""

from __future__ import annotations

import csv
import datetime as dt
import re
from collections import defaultdict
from collections.abc import Mapping
from os import PathLike
from pathlib import Path

from mockdraft.errors import DuplicateRank, ParseError
from mockdraft.model import (
    DEFAULT_COLLECTION_DAYS,
    DEFAULT_MAX_ACTUAL_LENGTH,
    ActualDraft,
    DraftDataset,
    ForecastType,
    MockDraftRecord,
    RankedList,
    clean_id,
    normalize_key,
)

MOCK_COLUMNS = ("season", "author", "forecast_type", "publish_date", "rank", "player", "tier")
ACTUAL_COLUMNS = ("season", "draft_date", "rank", "player")
ALIAS_COLUMNS = ("variant", "canonical")

_ISO_DATE = re.compile(r"^\d{4}-\d{2}-\d{2}$")

StrPath = str | PathLike


class NameResolver:
    """Maps raw player spellings to one display name per player."""

    def __init__(self, aliases: Mapping[str, str] | None = None):
        self._aliases = {normalize_key(k): clean_id(v) for k, v in (aliases or {}).items()}
        self._seen: dict[str, str] = {}

    def __call__(self, raw: str) -> str:
        key = normalize_key(raw)
        if key in self._aliases:
            canonical = self._aliases[key]
            key = normalize_key(canonical)
            self._seen.setdefault(key, canonical)
        return self._seen.setdefault(key, clean_id(raw))


def _open(path: StrPath, mode: str = "r"):
    return open(path, mode, encoding="utf-8", newline="")


def _reader(handle, path: StrPath, required: tuple[str, ...]) -> csv.DictReader:
    reader = csv.DictReader(handle)
    header = [h.strip() for h in (reader.fieldnames or [])]
    missing = [c for c in required if c not in header]
    if missing:
        raise ParseError(f"missing column(s) {missing}", line=1, path=str(path))
    reader.fieldnames = header
    return reader


def _int(value: str | None, name: str, line: int, path: StrPath, minimum: int | None = None) -> int:
    text = (value or "").strip()
    try:
        number = int(text)
    except ValueError:
        raise ParseError(f"{name} {text!r} is not an integer", line=line, path=str(path)) from None
    if minimum is not None and number < minimum:
        raise ParseError(f"{name} must be >= {minimum}, got {number}", line=line, path=str(path))
    return number


def _date(value: str | None, name: str, line: int, path: StrPath) -> dt.date:
    text = (value or "").strip()
    if not _ISO_DATE.match(text):
        raise ParseError(f"{name} {text!r} is not a YYYY-MM-DD date", line=line, path=str(path))
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise ParseError(f"{name} {text!r} is not a valid date", line=line, path=str(path)) from None


def _text(value: str | None, name: str, line: int, path: StrPath) -> str:
    text = clean_id(value or "")
    if not text:
        raise ParseError(f"{name} is empty", line=line, path=str(path))
    return text


def _assemble(rows: list[tuple[int, int, str, int | None]], label: str, path: StrPath) -> RankedList:
    """Turn ``(line, rank, player, tier)`` rows of one list into a RankedList."""
    by_rank: dict[int, tuple[int, str, int | None]] = {}
    by_player: dict[str, int] = {}
    for line, rank, player, tier in rows:
        if rank in by_rank:
            raise DuplicateRank(
                f"{label}: rank {rank} repeated (first on line {by_rank[rank][0]})", line=line, path=str(path)
            )
        key = normalize_key(player)
        if key in by_player:
            raise ParseError(
                f"{label}: player {player!r} repeated (first on line {by_player[key]})", line=line, path=str(path)
            )
        by_rank[rank] = (line, player, tier)
        by_player[key] = line
    ranks = sorted(by_rank)
    if ranks != list(range(1, len(ranks) + 1)):
        gap = next(r for r, expected in zip(ranks, range(1, len(ranks) + 1)) if r != expected)
        raise ParseError(
            f"{label}: ranks must be dense 1..{len(ranks)}, found rank {gap}", line=by_rank[gap][0], path=str(path)
        )
    entries = [by_rank[r][1] for r in ranks]
    tiers = [by_rank[r][2] for r in ranks]
    try:
        return RankedList(tuple(entries), tuple(tiers))
    except ValueError as exc:
        raise ParseError(f"{label}: {exc}", line=rows[0][0], path=str(path)) from None


def load_aliases(path: StrPath) -> dict[str, str]:
    aliases: dict[str, str] = {}
    with _open(path) as handle:
        reader = _reader(handle, path, ALIAS_COLUMNS)
        for row in reader:
            line = reader.line_num
            variant = _text(row["variant"], "variant", line, path)
            aliases[variant] = _text(row["canonical"], "canonical", line, path)
    return aliases


def load_actuals(path: StrPath, resolve: NameResolver | None = None) -> dict[int, ActualDraft]:
    resolve = resolve or NameResolver()
    rows: dict[int, list] = defaultdict(list)
    dates: dict[int, tuple[dt.date, int]] = {}
    with _open(path) as handle:
        reader = _reader(handle, path, ACTUAL_COLUMNS)
        for row in reader:
            line = reader.line_num
            season = _int(row["season"], "season", line, path)
            draft_date = _date(row["draft_date"], "draft_date", line, path)
            rank = _int(row["rank"], "rank", line, path, minimum=1)
            player = resolve(_text(row["player"], "player", line, path))
            if season in dates and dates[season][0] != draft_date:
                raise ParseError(
                    f"season {season}: draft_date {draft_date} disagrees with line {dates[season][1]}",
                    line=line,
                    path=str(path),
                )
            dates.setdefault(season, (draft_date, line))
            rows[season].append((line, rank, player, None))
    return {
        season: ActualDraft(_assemble(group, f"actual {season}", path), dates[season][0])
        for season, group in sorted(rows.items())
    }


def load_mocks(path: StrPath, resolve: NameResolver | None = None) -> list[MockDraftRecord]:
    resolve = resolve or NameResolver()
    groups: dict[tuple, list] = defaultdict(list)
    with _open(path) as handle:
        reader = _reader(handle, path, MOCK_COLUMNS[:-1])
        has_tier = "tier" in reader.fieldnames
        for row in reader:
            line = reader.line_num
            season = _int(row["season"], "season", line, path)
            author = _text(row["author"], "author", line, path)
            kind = (row["forecast_type"] or "").strip().lower()
            try:
                forecast_type = ForecastType(kind)
            except ValueError:
                raise ParseError(f"forecast_type {kind!r} must be 'mock' or 'ranking'", line=line, path=str(path)) from None
            published = _date(row["publish_date"], "publish_date", line, path)
            rank = _int(row["rank"], "rank", line, path, minimum=1)
            player = resolve(_text(row["player"], "player", line, path))
            tier = None
            if has_tier and (row.get("tier") or "").strip():
                tier = _int(row["tier"], "tier", line, path, minimum=1)
            groups[(season, author, forecast_type, published)].append((line, rank, player, tier))

    records = []
    for (season, author, forecast_type, published), group in groups.items():
        label = f"{author} ({forecast_type.value}, {published}, season {season})"
        records.append(MockDraftRecord(_assemble(group, label, path), author, forecast_type, published, season))
    return records


def load_dataset(
    path: StrPath,
    actuals_path: StrPath | None = None,
    alias_path: StrPath | None = None,
    *,
    collection_days: int = DEFAULT_COLLECTION_DAYS,
    max_actual_length: int = DEFAULT_MAX_ACTUAL_LENGTH,
) -> DraftDataset:
    """Load a mock-draft file (and optionally actual drafts and aliases).

    Raises :class:`ParseError` (with the offending line number) for malformed
    rows and :class:`DuplicateRank` when one list repeats a rank.  Whether every
    season has an actual draft is checked later, by the evaluation functions
    or :meth:`DraftDataset.check_actuals`.
    """
    resolve = NameResolver(load_aliases(alias_path) if alias_path else None)
    actuals = load_actuals(actuals_path, resolve) if actuals_path else {}
    mocks = load_mocks(path, resolve)
    try:
        return DraftDataset(
            tuple(mocks), actuals, collection_days=collection_days, max_actual_length=max_actual_length
        )
    except ValueError as exc:
        raise ParseError(str(exc), path=str(actuals_path)) from None


def write_dataset(dataset: DraftDataset, path: StrPath, actuals_path: StrPath | None = None) -> None:
    """Write ``dataset`` in the same formats :func:`load_dataset` reads."""
    with _open(path, "w") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(MOCK_COLUMNS)
        for record in dataset.mocks:
            tiers = record.ranking.tiers or (None,) * len(record.ranking)
            for rank, (player, tier) in enumerate(zip(record.ranking, tiers), start=1):
                writer.writerow(
                    [
                        record.season,
                        record.author,
                        record.forecast_type.value,
                        record.publish_date.isoformat(),
                        rank,
                        player,
                        "" if tier is None else tier,
                    ]
                )
    if actuals_path is not None:
        write_actuals(dataset.actuals, actuals_path)


def write_actuals(actuals: Mapping[int, ActualDraft], path: StrPath) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with _open(path, "w") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(ACTUAL_COLUMNS)
        for season, actual in sorted(actuals.items()):
            for rank, player in enumerate(actual.ranking, start=1):
                writer.writerow([season, actual.draft_date.isoformat(), rank, player])
