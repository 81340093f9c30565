"""Acceptance criteria, one test each.

Every criterion is timed against its budget and reported as a single
``PASS``/``FAIL`` line, printed in the pytest terminal summary or, when the
file is run directly, on stdout.  Sub-millisecond budgets are checked against
the best of several warm repetitions so import and first-call costs are not
counted.
"""

from __future__ import annotations

import datetime as dt
import math
import random
import sys
import tempfile
import time
from pathlib import Path

import pytest

from goat_fixture import (
    BRYANT,
    GOAT_BORDA_SCORES,
    GOAT_MOCKS,
    GOAT_RCA_ORDER,
    HORRY,
    JAMES,
    JOHNSON,
    JORDAN,
    KAREEM,
    PIPPEN,
    RUSSELL,
)
from mockdraft.aggregation import borda, rca
from mockdraft.cli import RunConfig, cmd_report
from mockdraft.evaluation import AuthorKey, percentile_table
from mockdraft.io import write_dataset
from mockdraft.metrics import MetricParams, mae, prefix_weight, rbo_ext, rbd
from mockdraft.model import DraftDataset, MockDraftRecord, build_ranking
from oracles import rbo_ext_brute
from synthetic import actual_for, draft_day, graded_dataset, graded_season

RESULTS: list[str] = []


def _criterion(number: int, title: str, budget_s: float, body, repeats: int = 1):
    elapsed = math.inf
    try:
        for _ in range(repeats):
            start = time.perf_counter()
            detail = body()
            elapsed = min(elapsed, time.perf_counter() - start)
        assert elapsed < budget_s, f"took {elapsed:.4g}s, budget {budget_s:g}s"
    except Exception as exc:
        shown = "n/a" if elapsed == math.inf else f"{elapsed * 1e3:.3f} ms"
        RESULTS.append(f"FAIL criterion {number}: {title} [{shown}] {type(exc).__name__}: {exc}")
        raise
    RESULTS.append(
        f"PASS criterion {number}: {title} [{elapsed * 1e3:.3f} ms / {budget_s * 1e3:g} ms]"
        + (f" {detail}" if detail else "")
    )


def goat_lists():
    return [build_ranking(m) for m in GOAT_MOCKS.values()]


def test_criterion_1_goat_borda():
    lists = goat_lists()

    def body():
        result = borda(lists, draft_length=5)
        assert [result.scores[p] for p in result.ordering] == [23, 16, 13, 10, 5, 4, 2, 2]
        assert dict(result.scores) == GOAT_BORDA_SCORES
        assert list(result.ordering)[:6] == [JORDAN, JAMES, KAREEM, RUSSELL, HORRY, BRYANT]
        assert result.tie_groups == (frozenset({JOHNSON, PIPPEN}),)
        assert result.rank_of(JOHNSON) == result.rank_of(PIPPEN) == 7

    _criterion(1, "Borda panel on the five GOAT lists", 1e-3, body, repeats=5)


def test_criterion_2_goat_rca():
    lists = goat_lists()

    def body():
        trace = rca(lists, num_picks=8)
        assert list(trace.ordering) == GOAT_RCA_ORDER
        assert trace.eliminated_at(3) == [HORRY]
        assert trace.eliminated_at(5) == [HORRY, PIPPEN]
        (six,) = trace.rounds_for(6)
        assert six.winner == JOHNSON and six.ballots == 3
        assert six.counts == {JOHNSON: 2, HORRY: 1}

    _criterion(2, "RCA ordering and round trace on the five GOAT lists", 1e-3, body, repeats=5)


def test_criterion_3_weight_mass():
    def body():
        w60, w14 = prefix_weight(0.98, 60), prefix_weight(0.98, 14)
        assert 0.885 <= w60 <= 0.895, w60
        assert 0.505 <= w14 <= 0.515, w14
        return f"w60={w60:.5f} w14={w14:.5f}"

    _criterion(3, "weight mass on the first 60 and 14 ranks at q=0.98", 1e-3, body, repeats=5)


def test_criterion_4_oracle_equivalence():
    universe = [f"p{i}" for i in range(20)]
    rng = random.Random(20240501)

    def body():
        worst = 0.0
        pairs = 0
        for q in (0.5, 0.9, 0.98):
            params = MetricParams(q=q)
            for _ in range(3400):
                a = rng.sample(universe, rng.randint(1, 12))
                b = rng.sample(universe, rng.randint(1, 12))
                got = rbo_ext(build_ranking(a), build_ranking(b), params).total
                worst = max(worst, abs(got - rbo_ext_brute(a, b, q)))
                pairs += 1
            for n in range(1, 13):
                same = rng.sample(universe, n)
                assert rbo_ext(build_ranking(same), build_ranking(same), params).total == 1.0
                left = rng.sample(universe, 20)
                disjoint = (left[: rng.randint(1, 10)], left[10 : 10 + rng.randint(1, 10)])
                assert rbo_ext(*map(build_ranking, disjoint), params).total == 0.0
        assert pairs >= 10_000
        assert worst <= 1e-12, worst
        return f"pairs={pairs} max_abs_diff={worst:.3g}"

    _criterion(4, "extrapolated RBO matches the brute-force oracle", 10.0, body)


def _front_weight_case(rng):
    n = rng.randint(4, 80)
    actual = [f"d{i}" for i in range(n)]
    a = rng.randint(1, n - 3)
    b = rng.randint(a + 2, n - 1)
    base = actual[: rng.randint(b + 1, n)]
    for i in range(b + 1, len(base)):
        if rng.random() < 0.3:
            base[i] = f"x{i}"

    def swapped(pos):
        m = list(base)
        m[pos - 1], m[pos] = m[pos], m[pos - 1]
        return m

    return actual, base, swapped(a), swapped(b)


def test_criterion_5_front_weighting():
    rng = random.Random(7)

    def body():
        violations = 0
        cases = 0
        for q in (0.9, 0.95, 0.98):
            params = MetricParams(q=q)
            for _ in range(400):
                actual, mj, mk, ml = _front_weight_case(rng)
                d = build_ranking(actual)
                e_j, e_k, e_l = (rbd(d, build_ranking(m), params) for m in (mj, mk, ml))
                violations += not (e_j < e_l < e_k)
                cases += 1
        assert cases >= 1000
        assert violations == 0, f"{violations} violations"
        return f"cases={cases} violations=0"

    _criterion(5, "early errors cost more than late ones", 5.0, body)


def test_criterion_6_log_mae_ratio():
    actual = build_ranking([f"p{i}" for i in range(1, 31)])
    early = build_ranking(["p2", "p3", "p1"] + [f"p{i}" for i in range(4, 31)])
    late = build_ranking([f"p{i}" for i in range(1, 10)] + ["p11", "p12"] + [f"p{i}" for i in range(13, 31)] + ["p10"])
    params = MetricParams(impute_rank=61)

    def body():
        assert early.position("p1") == 3 and late.position("p10") == 30
        one = mae(early, actual, params, log_scale=True, items=["p1"])
        ten = mae(late, actual, params, log_scale=True, items=["p10"])
        assert abs(one - ten) <= 1e-12, (one, ten)
        assert abs(one - math.log(3)) <= 1e-12

    _criterion(6, "log-MAE weighs 1->3 and 10->30 equally", 1e-3, body, repeats=5)


def test_criterion_7_percentile_grid():
    datasets = {n: graded_dataset({2018: n, 2019: n, 2020: n}) for n in (2, 5, 26)}

    def body():
        for n, dataset in datasets.items():
            rows = percentile_table(dataset, min_seasons=3, consensus_methods=())
            grid = [k / (n - 1) for k in range(n)]
            for season in (2018, 2019, 2020):
                assert sorted(r.per_season_percentile[season] for r in rows) == grid
            best = {r.author_key: r for r in rows}[AuthorKey("author00", "mock")]
            assert best.avg_percentile == 1.0
            assert rows[0] is best

    _criterion(7, "per-season percentiles form the k/(n-1) grid", 1.0, body)


def test_criterion_8_unanimity_and_determinism():
    lists = goat_lists()

    def body():
        for entries in GOAT_MOCKS.values():
            same = [build_ranking(entries)] * 4
            assert list(borda(same, draft_length=5).ordering) == entries
            assert list(rca(same, num_picks=5).ordering) == entries
        for length in (3, 5, 8):
            assert borda(lists, length).ordering == borda(lists * 2, length).ordering
        with tempfile.TemporaryDirectory() as tmp:
            tmp = Path(tmp)
            mocks, actuals = [], {}
            for season in (2018, 2019, 2020):
                records, actual = graded_season(season, 6)
                mocks += records
                actuals[season] = actual
            mocks.append(
                MockDraftRecord(
                    build_ranking(actual_for(2020)[5:]), "Late", "ranking", draft_day(2020) - dt.timedelta(days=12), 2020
                )
            )
            write_dataset(DraftDataset(tuple(mocks), actuals), tmp / "mocks.csv", tmp / "actuals.csv")
            snapshots = []
            for run in ("first", "second"):
                config = RunConfig(tmp / "mocks.csv", tmp / "actuals.csv", min_seasons=1, out=tmp / run)
                paths = cmd_report(config)
                snapshots.append({p.relative_to(tmp / run): p.read_bytes() for p in paths})
            assert snapshots[0] == snapshots[1]
            return f"report_files={len(snapshots[0])}"

    _criterion(8, "unanimity, duplicated-set Borda invariance, byte-identical reports", 5.0, body)


def test_criterion_9_outlier_contrast():
    lists = goat_lists()

    def body():
        b = borda(lists, draft_length=5)
        r = rca(lists, num_picks=8)
        assert b.ordering.position(HORRY) == 5 and b.rank_of(HORRY) == 5
        assert r.ordering.position(HORRY) == 7

    _criterion(9, "Horry 5th under Borda, 7th under RCA", 1e-3, body, repeats=5)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    print("\n".join(sorted(RESULTS, key=lambda line: int(line.split()[2].rstrip(":")))))
    sys.exit(1 if failed else 0)
