"""Ranked lists, mock-draft records and the dataset container."""

from __future__ import annotations

import datetime as dt
import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Union

from mockdraft.errors import DuplicateItem, EmptyId, MissingActual, TiedInput

DEFAULT_MAX_ACTUAL_LENGTH = 60
DEFAULT_COLLECTION_DAYS = 365


class _Unranked(enum.Enum):
    UNRANKED = "unranked"

    def __repr__(self) -> str:
        return "UNRANKED"


#: Position of an item that a list does not contain (undrafted / unmocked).
UNRANKED = _Unranked.UNRANKED

Position = Union[int, _Unranked]


class ForecastType(str, enum.Enum):
    MOCK = "mock"
    RANKING = "ranking"


def normalize_key(item: str) -> str:
    """Comparison key for an item id: whitespace-collapsed and case-folded."""
    return " ".join(item.split()).casefold()


def clean_id(item: str) -> str:
    """Display form of an item id: trimmed with inner whitespace collapsed."""
    return " ".join(item.split())


@dataclass(frozen=True)
class RankedList:
    """An injective assignment of items to the dense ranks ``1..len``.

    ``tiers`` optionally tags entries that their author declared tied.  Entries
    sharing a tag must be contiguous.  Similarity metrics refuse tied lists;
    ranked-choice aggregation gives every member of a tier a vote.
    """

    entries: tuple[str, ...]
    tiers: tuple[int | None, ...] | None = None
    _positions: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        positions: dict[str, int] = {}
        keys: set[str] = set()
        for rank, item in enumerate(entries, start=1):
            if not isinstance(item, str) or not item.strip():
                raise EmptyId(f"empty item id at rank {rank}")
            key = normalize_key(item)
            if key in keys:
                raise DuplicateItem(f"{item!r} appears more than once")
            keys.add(key)
            positions[item] = rank
        object.__setattr__(self, "_positions", positions)

        if self.tiers is not None:
            tiers = tuple(self.tiers)
            if len(tiers) != len(entries):
                raise ValueError("tiers must align with entries")
            if all(t is None for t in tiers):
                tiers = None
            else:
                _check_contiguous_tiers(tiers)
            object.__setattr__(self, "tiers", tiers)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, item: object) -> bool:
        return item in self._positions

    def __getitem__(self, index):
        return self.entries[index]

    def position(self, item: str) -> Position:
        return self._positions.get(item, UNRANKED)

    def prefix(self, depth: int) -> frozenset[str]:
        return frozenset(self.entries[:depth])

    @property
    def is_tied(self) -> bool:
        return self.tiers is not None

    def tier_of(self, item: str) -> int | None:
        if self.tiers is None:
            return None
        return self.tiers[self._positions[item] - 1]

    def untiered(self) -> RankedList:
        """Same order with tier tags dropped; rank values become the strict order."""
        if self.tiers is None:
            return self
        return RankedList(self.entries)

    def require_untied(self) -> None:
        if self.tiers is not None:
            raise TiedInput("operation requires a strict (untied) ranking")

    def truncate(self, length: int) -> RankedList:
        tiers = None if self.tiers is None else self.tiers[:length]
        return RankedList(self.entries[:length], tiers)


def _check_contiguous_tiers(tiers: Sequence[int | None]) -> None:
    closed: set[int] = set()
    previous = None
    for tag in tiers:
        if tag != previous and previous is not None:
            closed.add(previous)
        if tag is not None and tag in closed:
            raise ValueError(f"tier {tag} is not contiguous")
        previous = tag


def build_ranking(entries: Iterable[str], tiers: Iterable[int | None] | None = None) -> RankedList:
    """Build a validated ranking where ``entries[k]`` holds rank ``k + 1``.

    Ids are trimmed of surrounding whitespace. Two ids that differ only in case
    or spacing count as the same item and raise :class:`DuplicateItem`.
    """
    cleaned = []
    for item in entries:
        if item is None or not str(item).strip():
            raise EmptyId("item ids must be non-empty")
        cleaned.append(clean_id(str(item)))
    return RankedList(tuple(cleaned), None if tiers is None else tuple(tiers))


def position_of(ranking: RankedList, item: str) -> Position:
    return ranking.position(item)


def overlap_at_depth(a: RankedList, b: RankedList, d: int) -> int:
    """Size of the intersection of the depth-``d`` prefixes of ``a`` and ``b``.

    A list shorter than ``d`` contributes all of its items.
    """
    if d < 1:
        raise ValueError("depth must be >= 1")
    return len(a.prefix(d) & b.prefix(d))


@dataclass(frozen=True)
class MockDraftRecord:
    ranking: RankedList
    author: str
    forecast_type: ForecastType
    publish_date: dt.date
    season: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "forecast_type", ForecastType(self.forecast_type))
        if not self.author.strip():
            raise EmptyId("author must be non-empty")

    @property
    def author_key(self) -> tuple[str, ForecastType]:
        return (self.author, self.forecast_type)

    def sort_key(self):
        return (self.season, self.author, self.forecast_type.value, self.publish_date, self.ranking.entries)


@dataclass(frozen=True)
class ActualDraft:
    ranking: RankedList
    draft_date: dt.date


@dataclass(frozen=True)
class DraftDataset:
    """All mock drafts plus the realized draft of each season.

    Records dated outside a season's collection window are kept; use
    :meth:`outside_window` to inspect them.
    """

    mocks: tuple[MockDraftRecord, ...]
    actuals: Mapping[int, ActualDraft]
    collection_days: int = DEFAULT_COLLECTION_DAYS
    max_actual_length: int = DEFAULT_MAX_ACTUAL_LENGTH

    def __post_init__(self) -> None:
        object.__setattr__(self, "mocks", tuple(sorted(self.mocks, key=MockDraftRecord.sort_key)))
        object.__setattr__(self, "actuals", dict(sorted(self.actuals.items())))
        for season, actual in self.actuals.items():
            if len(actual.ranking) > self.max_actual_length:
                raise ValueError(
                    f"season {season}: actual draft has {len(actual.ranking)} picks, "
                    f"limit is {self.max_actual_length}"
                )
            actual.ranking.require_untied()

    @property
    def seasons(self) -> list[int]:
        return sorted({m.season for m in self.mocks} | set(self.actuals))

    def actual(self, season: int) -> ActualDraft:
        try:
            return self.actuals[season]
        except KeyError:
            raise MissingActual(f"no actual draft for season {season}") from None

    def mocks_for(self, season: int) -> list[MockDraftRecord]:
        return [m for m in self.mocks if m.season == season]

    def check_actuals(self) -> None:
        """Raise :class:`MissingActual` if any mock's season lacks an actual draft."""
        missing = sorted({m.season for m in self.mocks} - set(self.actuals))
        if missing:
            raise MissingActual(f"no actual draft for season(s) {missing}")

    def outside_window(self) -> list[MockDraftRecord]:
        flagged = []
        for record in self.mocks:
            actual = self.actuals.get(record.season)
            if actual is None:
                continue
            start = actual.draft_date - dt.timedelta(days=self.collection_days)
            if not start < record.publish_date <= actual.draft_date:
                flagged.append(record)
        return flagged
