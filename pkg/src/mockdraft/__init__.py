"""Accuracy metrics and consensus methods for ranked forecasts such as sports mock drafts."""

from mockdraft.aggregation import (
    BordaResult,
    Method,
    RcaRound,
    RcaTrace,
    borda,
    rca,
    rolling_consensus,
    window_mocks,
)
from mockdraft.errors import (
    DegenerateSeason,
    DomainError,
    DuplicateItem,
    DuplicateRank,
    EmptyId,
    EmptyList,
    EmptyUniverse,
    MissingActual,
    MockDraftError,
    NoMocks,
    NoMocksInWindow,
    ParseError,
    TiedInput,
    UnknownSeason,
)
from mockdraft.evaluation import (
    AuthorKey,
    FinalMockSelection,
    PercentileRow,
    SlopeGraph,
    TimeSeriesRow,
    error_timeseries,
    percentile_table,
    select_final_mocks,
    slopegraph,
)
from mockdraft.io import load_dataset, write_dataset
from mockdraft.metrics import MetricParams, RboBreakdown, Universe, mae, prefix_weight, rbd, rbo_ext
from mockdraft.model import (
    UNRANKED,
    ActualDraft,
    DraftDataset,
    ForecastType,
    MockDraftRecord,
    RankedList,
    build_ranking,
    overlap_at_depth,
    position_of,
)

__version__ = "0.1.0"
