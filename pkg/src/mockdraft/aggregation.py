"""Consensus rankings from many mock drafts: Borda count and ranked-choice aggregation."""

from __future__ import annotations

import datetime as dt
import enum
from collections import Counter, defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from statistics import fmean

from mockdraft.errors import NoMocks, NoMocksInWindow
from mockdraft.model import (
    DEFAULT_MAX_ACTUAL_LENGTH,
    DraftDataset,
    ForecastType,
    MockDraftRecord,
    RankedList,
)

Mocks = Iterable[MockDraftRecord | RankedList]


class Method(str, enum.Enum):
    BORDA = "borda"
    RCA = "rca"


def _lists(mocks: Mocks) -> list[RankedList]:
    lists = [m.ranking if isinstance(m, MockDraftRecord) else m for m in mocks]
    if not lists:
        raise NoMocks("at least one mock draft is required")
    return lists


def average_positions(lists: Iterable[RankedList]) -> dict[str, float]:
    """Mean listed rank of every item, over only the lists that contain it."""
    positions: dict[str, list[int]] = defaultdict(list)
    for lst in lists:
        for rank, item in enumerate(lst, start=1):
            positions[item].append(rank)
    return {item: fmean(ranks) for item, ranks in positions.items()}


@dataclass(frozen=True)
class BordaResult:
    """Borda consensus.

    ``ordering`` holds every item with a positive score, best first, with
    equal scores ordered by average listed position and then by id.
    ``tie_groups`` reports the items whose scores are genuinely equal.
    """

    ordering: RankedList
    scores: Mapping[str, int]
    tie_groups: tuple[frozenset[str], ...]

    def rank_of(self, item: str) -> int:
        """Standard competition rank: tied items share the best rank of their group."""
        score = self.scores[item]
        return 1 + sum(1 for other in self.ordering if self.scores[other] > score)


def borda(mocks: Mocks, draft_length: int = DEFAULT_MAX_ACTUAL_LENGTH) -> BordaResult:
    """Sum ``draft_length - rank + 1`` points per list; ranks past ``draft_length`` score 0.

    >>> r = borda([RankedList(("a", "b")), RankedList(("b", "a"))], draft_length=2)
    >>> dict(r.scores)
    {'a': 3, 'b': 3}
    """
    if draft_length < 1:
        raise ValueError("draft_length must be >= 1")
    lists = _lists(mocks)
    scores: Counter[str] = Counter()
    for lst in lists:
        for rank, item in enumerate(lst, start=1):
            scores[item] += max(draft_length - rank + 1, 0)
    avg = average_positions(lists)

    ranked = sorted((item for item in scores if scores[item] > 0), key=lambda p: (-scores[p], avg[p], p))
    by_score: dict[int, list[str]] = defaultdict(list)
    for item in ranked:
        by_score[scores[item]].append(item)
    ties = tuple(frozenset(group) for score, group in by_score.items() if len(group) > 1)
    ordered_scores = {item: scores[item] for item in sorted(scores, key=lambda p: (-scores[p], avg[p], p))}
    return BordaResult(RankedList(tuple(ranked)), ordered_scores, ties)


@dataclass(frozen=True)
class RcaRound:
    """One count of ballots while filling ``pick``.

    Exactly one of ``winner`` / ``eliminated`` is set.
    """

    pick: int
    ballots: int
    votes: tuple[tuple[str, int], ...]
    winner: str | None = None
    eliminated: str | None = None

    @property
    def counts(self) -> dict[str, int]:
        return dict(self.votes)


@dataclass(frozen=True)
class RcaTrace:
    ordering: RankedList
    rounds: tuple[RcaRound, ...]

    def rounds_for(self, pick: int) -> list[RcaRound]:
        return [r for r in self.rounds if r.pick == pick]

    def eliminated_at(self, pick: int) -> list[str]:
        return [r.eliminated for r in self.rounds_for(pick) if r.eliminated is not None]


def _ballot(lst: RankedList, start: int, eligible: set[str]) -> tuple[int, list[str]]:
    """First index at or after ``start`` holding an eligible item, and the items voted for.

    A tiered entry votes for every eligible member of its tier.
    """
    entries = lst.entries
    for idx in range(start, len(entries)):
        item = entries[idx]
        if item not in eligible:
            continue
        tier = lst.tiers[idx] if lst.tiers is not None else None
        if tier is None:
            return idx, [item]
        votes = [item]
        for other in range(idx + 1, len(entries)):
            if lst.tiers[other] != tier:
                break
            if entries[other] in eligible:
                votes.append(entries[other])
        return idx, votes
    return len(entries), []


def rca(mocks: Mocks, num_picks: int | None = None) -> RcaTrace:
    """Ranked-choice aggregation: an instant-runoff vote for each pick in turn.

    For every pick, each author whose list still holds an eligible item votes
    for their best-ranked one.  An item with more than half of the ballots cast
    in that count wins the pick and leaves the pool.  Otherwise the item with
    the fewest (positive) votes becomes ineligible for this pick only and the
    ballots are recounted.  Ties for fewest votes drop the item with the worst
    average listed position, then the id that sorts last.

    ``num_picks`` defaults to every item listed by any author; it may not
    exceed that number.  If every ballot is exhausted early the ordering is
    returned short.
    """
    lists = _lists(mocks)
    avg = average_positions(lists)
    pool = set(avg)
    if num_picks is None:
        num_picks = len(pool)
    if num_picks < 1:
        raise ValueError("num_picks must be >= 1")
    if num_picks > len(pool):
        raise ValueError(f"num_picks ({num_picks}) exceeds the {len(pool)} items listed")

    available = set(pool)
    # index of each list's first still-available entry; only ever moves forward
    cursor = [0] * len(lists)
    ordering: list[str] = []
    rounds: list[RcaRound] = []

    for pick in range(1, num_picks + 1):
        eligible = set(available)
        while True:
            votes: Counter[str] = Counter()
            ballots = 0
            for i, lst in enumerate(lists):
                cursor[i] = _ballot(lst, cursor[i], available)[0]
                choice = _ballot(lst, cursor[i], eligible)[1]
                if choice:
                    ballots += 1
                    votes.update(choice)
            if ballots == 0:
                return RcaTrace(RankedList(tuple(ordering)), tuple(rounds))

            tally = tuple(sorted(votes.items(), key=lambda kv: (-kv[1], avg[kv[0]], kv[0])))
            leader, top = tally[0]
            if 2 * top > ballots:
                rounds.append(RcaRound(pick, ballots, tally, winner=leader))
                ordering.append(leader)
                available.discard(leader)
                break
            fewest = min(votes.values())
            loser = max((p for p, v in votes.items() if v == fewest), key=lambda p: (avg[p], p))
            rounds.append(RcaRound(pick, ballots, tally, eliminated=loser))
            eligible.discard(loser)

    return RcaTrace(RankedList(tuple(ordering)), tuple(rounds))


def window_mocks(dataset: DraftDataset, season: int, as_of: dt.date, window_days: int) -> list[MockDraftRecord]:
    """Each author's most recent mock published in ``(as_of - window_days, as_of]``.

    Recency is keyed by author alone.  On a same-day clash a ``mock`` beats a
    ``ranking``, then the longer list wins.
    """
    if window_days < 1:
        raise ValueError("window_days must be >= 1")
    start = as_of - dt.timedelta(days=window_days)
    latest: dict[str, MockDraftRecord] = {}
    for record in dataset.mocks_for(season):
        if not start < record.publish_date <= as_of:
            continue
        current = latest.get(record.author)
        if current is None or _recency_key(record) > _recency_key(current):
            latest[record.author] = record
    return [latest[a] for a in sorted(latest)]


def _recency_key(record: MockDraftRecord):
    return (
        record.publish_date,
        record.forecast_type is ForecastType.MOCK,
        len(record.ranking),
    )


def consensus_length(dataset: DraftDataset, season: int) -> int:
    actual = dataset.actuals.get(season)
    return len(actual.ranking) if actual is not None else DEFAULT_MAX_ACTUAL_LENGTH


def combine(records: Mocks, method: Method | str, length: int) -> BordaResult | RcaTrace:
    """Run ``method`` with ``length`` picks; RCA is capped at the number of listed items."""
    method = Method(method)
    lists = _lists(records)
    if method is Method.BORDA:
        return borda(lists, draft_length=length)
    pool = len({item for lst in lists for item in lst})
    return rca(lists, num_picks=min(length, pool))


def rolling_consensus(
    dataset: DraftDataset,
    season: int,
    as_of: dt.date,
    window_days: int = 10,
    method: Method | str = Method.RCA,
    num_picks: int | None = None,
) -> RankedList:
    """Consensus of each author's latest mock from the last ``window_days`` days.

    The pick count is ``num_picks`` if given, else the season's actual draft
    length, else 60.

    Raises:
        NoMocksInWindow: no author published inside the window.
    """
    records = window_mocks(dataset, season, as_of, window_days)
    if not records:
        raise NoMocksInWindow(f"no mocks for season {season} in the {window_days} days up to {as_of}")
    length = num_picks if num_picks is not None else consensus_length(dataset, season)
    return combine(records, method, length).ordering
