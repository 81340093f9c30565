"""Command-line front end: ``mockdraft score | consensus | report``."""

from __future__ import annotations

import argparse
import datetime as dt
import sys
from dataclasses import dataclass
from pathlib import Path

from mockdraft.aggregation import Method, combine, consensus_length, window_mocks
from mockdraft.errors import MockDraftError, NoMocksInWindow, UnknownSeason
from mockdraft.evaluation import (
    ALL_METHODS,
    AuthorKey,
    DEFAULT_HORIZON_DAYS,
    DEFAULT_MIN_SEASONS,
    DEFAULT_WINDOW_DAYS,
    error_timeseries,
    final_slopegraphs,
    percentile_table,
    select_final_mocks,
)
from mockdraft.export import (
    consensus_csv,
    fmt,
    percentile_csv,
    rca_trace_log,
    slopegraph_csv,
    slug,
    timeseries_csv,
    write_text,
)
from mockdraft.io import load_dataset
from mockdraft.metrics import DEFAULT_Q, MetricParams, mae, rbd
from mockdraft.model import DraftDataset, ForecastType


@dataclass(frozen=True)
class RunConfig:
    dataset_path: Path
    actuals_path: Path
    alias_path: Path | None = None
    q: float = DEFAULT_Q
    window_days: int = DEFAULT_WINDOW_DAYS
    horizon_days: int = DEFAULT_HORIZON_DAYS
    min_seasons: int = DEFAULT_MIN_SEASONS
    methods: tuple[Method, ...] = ALL_METHODS
    out: Path = Path(".")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        method = getattr(args, "method", None)
        methods = ALL_METHODS if method in (None, "both") else (Method(method),)
        return cls(
            dataset_path=Path(args.data),
            actuals_path=Path(args.actuals),
            alias_path=Path(args.alias) if args.alias else None,
            q=args.q,
            window_days=args.window_days,
            horizon_days=args.horizon_days,
            min_seasons=args.min_seasons,
            methods=methods,
            out=Path(args.out),
        )

    def params(self) -> MetricParams:
        return MetricParams(q=self.q)

    def load(self) -> DraftDataset:
        return load_dataset(self.dataset_path, self.actuals_path, self.alias_path)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _date(text: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM-DD, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--data", required=True, help="mock-draft CSV")
    common.add_argument("--actuals", required=True, help="actual-draft CSV")
    common.add_argument("--alias", help="optional player alias CSV (variant,canonical)")
    common.add_argument("--q", type=float, default=DEFAULT_Q, help="RBO persistence parameter (default 0.98)")
    common.add_argument("--window-days", type=_positive_int, default=DEFAULT_WINDOW_DAYS)
    common.add_argument("--horizon-days", type=_positive_int, default=DEFAULT_HORIZON_DAYS)
    common.add_argument("--min-seasons", type=_positive_int, default=DEFAULT_MIN_SEASONS)
    common.add_argument("--out", default=".", help="output directory")

    parser = argparse.ArgumentParser(prog="mockdraft", description=__doc__, allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    score = sub.add_parser("score", parents=[common], allow_abbrev=False, help="score one author's final mock")
    score.add_argument("--season", type=int, required=True)
    score.add_argument("--author", required=True)
    score.add_argument("--forecast-type", choices=[t.value for t in ForecastType], default="mock")
    score.add_argument("--mae", action="store_true", help="also print MAE and log-MAE")

    cons = sub.add_parser("consensus", parents=[common], allow_abbrev=False, help="write a rolling consensus")
    cons.add_argument("--season", type=int, required=True)
    cons.add_argument("--as-of", type=_date, help="default: the season's draft date")
    cons.add_argument("--method", choices=["borda", "rca"], default="rca")
    cons.add_argument("--picks", type=_positive_int, help="consensus length (default: actual draft length)")

    report = sub.add_parser("report", parents=[common], allow_abbrev=False, help="percentiles, time series, slope graphs")
    report.add_argument("--method", choices=["borda", "rca", "both"], default="both")
    return parser


def cmd_score(config: RunConfig, season: int, key: AuthorKey, with_mae: bool = False) -> dict[str, float]:
    dataset = config.load()
    finals = {sel.author_key: sel for sel in select_final_mocks(dataset, season, config.horizon_days)}
    if key not in finals:
        raise MockDraftError(
            f"no final mock for author {key.label!r} ({key.forecast_type}) in season {season} "
            f"within {config.horizon_days} days of the draft"
        )
    mock = finals[key].record.ranking.untiered()
    actual = dataset.actual(season).ranking
    params = config.params()
    result = {"rbd": rbd(mock, actual, params)}
    if with_mae:
        result["mae"] = mae(mock, actual, params)
        result["log_mae"] = mae(mock, actual, params, log_scale=True)
    return result


def cmd_consensus(
    config: RunConfig, season: int, as_of: dt.date | None, method: Method, picks: int | None = None
) -> list[Path]:
    dataset = config.load()
    if as_of is None:
        if season not in dataset.actuals:
            raise UnknownSeason(f"season {season} has no actual draft; pass --as-of")
        as_of = dataset.actual(season).draft_date
    records = window_mocks(dataset, season, as_of, config.window_days)
    if not records:
        raise NoMocksInWindow(f"no mocks for season {season} in the {config.window_days} days up to {as_of}")
    length = picks if picks is not None else consensus_length(dataset, season)
    result = combine(records, method, length)

    stem = f"consensus_{season}_{as_of.isoformat()}_{method.value}"
    written = [write_text(config.out / f"{stem}.csv", consensus_csv(result, season, as_of))]
    if method is Method.RCA:
        written.append(write_text(config.out / f"{stem}_trace.log", rca_trace_log(result)))
    return written


def cmd_report(config: RunConfig) -> list[Path]:
    dataset = config.load()
    params = config.params()
    written = []
    rows = percentile_table(dataset, params, config.horizon_days, config.min_seasons, config.methods)
    written.append(write_text(config.out / "percentiles.csv", percentile_csv(rows)))
    for season in dataset.actuals:
        series = error_timeseries(dataset, season, params, config.window_days, config.methods)
        written.append(write_text(config.out / f"timeseries_{season}.csv", timeseries_csv(series)))
        for sel, graph in final_slopegraphs(dataset, season, config.horizon_days):
            name = slug(sel.author_key.label)
            path = config.out / "slopegraphs" / str(season) / f"{name}.csv"
            written.append(write_text(path, slopegraph_csv(graph)))
    return written


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        if args.command == "score":
            key = AuthorKey(" ".join(args.author.split()), args.forecast_type)
            for name, value in cmd_score(config, args.season, key, args.mae).items():
                print(f"{name} {fmt(value)}")
        elif args.command == "consensus":
            for path in cmd_consensus(config, args.season, args.as_of, Method(args.method), args.picks):
                print(path)
        else:
            for path in cmd_report(config):
                print(path)
    except (MockDraftError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
