"""Rank-biased overlap / distance and the absolute-error baselines.

All functions are pure and operate on :class:`~mockdraft.model.RankedList`.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable
from dataclasses import dataclass

from mockdraft.errors import DomainError, EmptyList, EmptyUniverse
from mockdraft.model import UNRANKED, RankedList

DEFAULT_Q = 0.98
DEFAULT_IMPUTE_RANK = 61


class Universe(str, enum.Enum):
    """Which items the baseline error metrics average over."""

    DRAFTED_ONLY = "drafted_only"
    MOCKED_ONLY = "mocked_only"
    UNION = "union"


@dataclass(frozen=True)
class MetricParams:
    """Settings shared by the metric functions.

    Attributes:
        q: persistence parameter in (0, 1); larger values spread weight deeper.
        impute_rank: rank substituted for unranked items by :func:`mae`. Must
            exceed the length of the actual draft it is used with.
        eval_universe: item set averaged over by :func:`mae`.
    """

    q: float = DEFAULT_Q
    impute_rank: int = DEFAULT_IMPUTE_RANK
    eval_universe: Universe = Universe.UNION

    def __post_init__(self) -> None:
        _check_q(self.q)
        if self.impute_rank < 1:
            raise DomainError("impute_rank must be a positive integer")
        object.__setattr__(self, "eval_universe", Universe(self.eval_universe))


@dataclass(frozen=True)
class RboBreakdown:
    """Extrapolated RBO split into its three additive parts."""

    observed_term: float
    extrapolated_overlap_term: float
    residual_term: float
    total: float


def _check_q(q: float) -> None:
    if not (isinstance(q, (int, float)) and 0.0 < q < 1.0):
        raise DomainError(f"q must lie strictly between 0 and 1, got {q!r}")


def overlaps(a: RankedList, b: RankedList) -> list[int]:
    """Prefix overlaps ``[X_1, ..., X_l]`` up to the longer list's length ``l``.

    Past the shorter list's end its prefix stays saturated at its full item set.
    """
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    short_seen: set[str] = set()
    long_seen: set[str] = set()
    x = 0
    out = []
    for depth in range(len(long_)):
        item_l = long_[depth]
        if depth < len(short):
            item_s = short[depth]
            if item_l == item_s:
                x += 1
            else:
                x += (item_l in short_seen) + (item_s in long_seen)
            short_seen.add(item_s)
        else:
            x += item_l in short_seen
        long_seen.add(item_l)
        out.append(x)
    return out


def rbo_ext(a: RankedList, b: RankedList, params: MetricParams | None = None) -> RboBreakdown:
    """Extrapolated rank-biased overlap of two finite, possibly unequal lists.

    With ``s``/``l`` the shorter/longer length and ``X_d`` the prefix overlap:

    * observed: ``(1-q)/q * sum_{d<=s} q^d X_d/d``
    * extrapolated: ``(1-q)/q * sum_{s<d<=l} q^d [X_d/d + (X_s/s)(1 - s/d)]``
    * residual: ``q^l [X_l/l + (X_s/s)(1 - s/l)]``

    Symmetric in ``a`` and ``b``.  Identical lists score exactly 1 and lists
    with no common item exactly 0.

    Raises:
        TiedInput: either list carries tier tags.
        EmptyList: either list is empty.
    """
    params = params or MetricParams()
    q = params.q
    a.require_untied()
    b.require_untied()
    if not len(a) or not len(b):
        raise EmptyList("rank-biased overlap needs two non-empty lists")

    s = min(len(a), len(b))
    l = max(len(a), len(b))
    x = overlaps(a, b)
    scale = (1.0 - q) / q
    short_agreement = x[s - 1] / s

    observed = scale * math.fsum(q**d * x[d - 1] / d for d in range(1, s + 1))
    extrapolated = scale * math.fsum(
        q**d * (x[d - 1] / d + short_agreement * (1.0 - s / d)) for d in range(s + 1, l + 1)
    )
    residual = q**l * (x[l - 1] / l + short_agreement * (1.0 - s / l))

    if all(x[d - 1] == d for d in range(1, s + 1)):
        # every agreement fraction is 1, so the weights sum to exactly 1
        total = 1.0
    else:
        total = min(1.0, max(0.0, math.fsum((observed, extrapolated, residual))))
    return RboBreakdown(observed, extrapolated, residual, total)


def rbd(a: RankedList, b: RankedList, params: MetricParams | None = None) -> float:
    """Rank-biased distance, ``1 - rbo_ext(a, b).total``, in [0, 1]."""
    return 1.0 - rbo_ext(a, b, params).total


def prefix_weight(q: float, d: int) -> float:
    """Share of the total RBO weight carried by ranks ``1..d``.

    Rank ``i`` is weighted ``(1-q)/q * sum_{k>=i} q^k / k``; summing ranks
    ``1..d`` gives the closed form

        1 - q^(d-1) + (1-q)/q * d * (ln(1/(1-q)) - sum_{i<d} q^i / i)

    Once most of the weight is covered the closed form cancels badly, so the
    remaining mass ``(1-q) q^(d-1) sum_{k>=1} q^k k / (d+k)`` is summed instead.

    >>> round(prefix_weight(0.98, 60), 4)
    0.8897
    """
    _check_q(q)
    if d < 1:
        raise DomainError("depth must be >= 1")
    if q ** (d - 1) > 1e-3:
        head = math.fsum(q**i / i for i in range(1, d))
        tail = -math.log1p(-q) - head
        return 1.0 - q ** (d - 1) + (1.0 - q) / q * d * tail
    return 1.0 - (1.0 - q) * q ** (d - 1) * _remainder_series(q, d)


def _remainder_series(q: float, d: int) -> float:
    terms = []
    k = 1
    qk = q
    while True:
        term = qk * k / (d + k)
        terms.append(term)
        if term < 1e-18 * terms[0] and k > 1:
            break
        k += 1
        qk *= q
    return math.fsum(terms)


def _universe(mock: RankedList, actual: RankedList, universe: Universe) -> list[str]:
    if universe is Universe.DRAFTED_ONLY:
        return list(actual)
    if universe is Universe.MOCKED_ONLY:
        return list(mock)
    return list(dict.fromkeys([*actual, *mock]))


def mae(
    mock: RankedList,
    actual: RankedList,
    params: MetricParams | None = None,
    log_scale: bool = False,
    items: Iterable[str] | None = None,
) -> float:
    """Mean absolute rank error over the configured item universe.

    Unranked items on either side take ``params.impute_rank``.  With
    ``log_scale`` the error is ``|ln(mock rank) - ln(actual rank)|``.
    ``items`` overrides ``params.eval_universe`` with an explicit item set.
    """
    params = params or MetricParams()
    if params.impute_rank <= len(actual):
        raise DomainError(
            f"impute_rank ({params.impute_rank}) must exceed the actual draft length ({len(actual)})"
        )
    items = list(dict.fromkeys(items)) if items is not None else _universe(mock, actual, params.eval_universe)
    if not items:
        raise EmptyUniverse("no items to average over")

    def rank(lst: RankedList, item: str) -> int:
        pos = lst.position(item)
        return params.impute_rank if pos is UNRANKED else pos

    if log_scale:
        errors = [abs(math.log(rank(mock, p)) - math.log(rank(actual, p))) for p in items]
    else:
        errors = [abs(rank(mock, p) - rank(actual, p)) for p in items]
    return math.fsum(errors) / len(items)
