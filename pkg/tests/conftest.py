import sys
import datetime as dt

import pytest

from goat_fixture import GOAT_DRAFT_DATE, GOAT_MOCKS, GOAT_SEASON, goat_dataset, write_csv
from mockdraft.model import build_ranking


@pytest.fixture
def goat_lists():
    return [build_ranking(entries) for entries in GOAT_MOCKS.values()]


@pytest.fixture
def goat_data():
    return goat_dataset()


@pytest.fixture
def goat_files(tmp_path):
    """GOAT mocks and a 5-pick actual draft (Mock A) on disk."""
    published = (GOAT_DRAFT_DATE - dt.timedelta(days=2)).isoformat()
    rows = [
        [GOAT_SEASON, author, "mock", published, rank, player, ""]
        for author, entries in GOAT_MOCKS.items()
        for rank, player in enumerate(entries, start=1)
    ]
    data = write_csv(
        tmp_path / "mocks.csv",
        ["season", "author", "forecast_type", "publish_date", "rank", "player", "tier"],
        rows,
    )
    actuals = write_csv(
        tmp_path / "actuals.csv",
        ["season", "draft_date", "rank", "player"],
        [[GOAT_SEASON, GOAT_DRAFT_DATE.isoformat(), r, p] for r, p in enumerate(GOAT_MOCKS["Mock A"], start=1)],
    )
    return data, actuals


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda line: int(line.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
