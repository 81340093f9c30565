"""A made-up three-season history, scored end to end, with the CSV reports written to a temp dir."""

import datetime as dt
import random
import tempfile
from pathlib import Path

from mockdraft import (
    ActualDraft,
    DraftDataset,
    MockDraftRecord,
    build_ranking,
    error_timeseries,
    percentile_table,
    rolling_consensus,
    write_dataset,
)
from mockdraft.cli import RunConfig, cmd_report

rng = random.Random(3)
authors = {"Sharp": 1, "Solid": 4, "Noisy": 10, "Wild": 25}  # how far each one scrambles picks


def noisy_copy(players, spread):
    # jitter each player's slot and re-sort
    keyed = sorted(players, key=lambda p: players.index(p) + rng.uniform(-spread, spread))
    return keyed[:30]


mocks, actuals = [], {}
for season in (2021, 2022, 2023):
    draft = dt.date(season, 6, 22)
    prospects = [f"{season}-prospect-{i:02d}" for i in range(1, 41)]
    truth = noisy_copy(prospects, 3)
    actuals[season] = ActualDraft(build_ranking(truth), draft)
    for name, spread in authors.items():
        # three mocks a season, the last one sharper
        for days_out, extra in ((45, 4), (20, 2), (2, 0)):
            guess = noisy_copy(truth, spread + extra)
            mocks.append(MockDraftRecord(build_ranking(guess), name, "mock", draft - dt.timedelta(days=days_out), season))

dataset = DraftDataset(tuple(mocks), actuals)

for row in percentile_table(dataset):
    print(f"{row.label:8s}", {s: round(p, 2) for s, p in row.per_season_percentile.items()}, round(row.avg_percentile, 3))

# the consensus on draft morning
print(list(rolling_consensus(dataset, 2023, dt.date(2023, 6, 22), method="rca"))[:5])

# error curve: how each author's distance shrinks toward the draft
series = error_timeseries(dataset, 2023)
for row in series[-6:]:
    print(row.date, row.series_key, round(row.rbd, 4))

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    write_dataset(dataset, tmp / "mocks.csv", tmp / "actuals.csv")
    written = cmd_report(RunConfig(tmp / "mocks.csv", tmp / "actuals.csv", out=tmp / "report"))
    print(len(written), "files, e.g.", sorted(p.relative_to(tmp) for p in written)[:3])
    print((tmp / "report" / "percentiles.csv").read_text())
