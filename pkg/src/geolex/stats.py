"""Rank statistics over state vectors.

Spearman's rho is the Pearson correlation of tie-averaged ranks; the
two-sided p-value comes from the t-approximation with n-2 degrees of
freedom (and is reported only for n >= 4). States where either vector is
null are dropped pairwise before ranking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from scipy.special import stdtr

from .analytics import ProportionVector, category_map
from .errors import (
    ExternalVectorError,
    InsufficientDataError,
    UndefinedCorrelationError,
)
from .index import CorpusIndex
from .lexicon import Matcher
from .states import N_STATES, by_usps


@dataclass(frozen=True)
class CorrelationResult:
    rho: float
    p_value: float | None
    n: int


@dataclass(frozen=True)
class CategoryPairReport:
    pair: tuple[str, str]  # category names, lexicographic order
    result: CorrelationResult


@dataclass(frozen=True)
class ExtremesReport:
    top: tuple[CategoryPairReport, ...]
    bottom: tuple[CategoryPairReport, ...]
    skipped_undefined: int


def rank_with_ties(values: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the average of the ranks they span."""
    if not values:
        raise InsufficientDataError("cannot rank an empty list")
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # Positions i..j hold equal values; their natural ranks are i+1..j+1.
        avg = (i + j + 2) / 2
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _pearson(x: list[float], y: list[float]) -> float:
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelationError("zero rank variance")
    return sxy / math.sqrt(sxx * syy)


def spearman(
    x: Sequence[float | None],
    y: Sequence[float | None],
) -> CorrelationResult:
    """Spearman correlation of two vectors with pairwise null deletion."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    pairs = [(a, b) for a, b in zip(x, y) if a is not None and b is not None]
    n = len(pairs)
    if n < 2:
        raise InsufficientDataError(f"only {n} paired observations")
    rx = rank_with_ties([p[0] for p in pairs])
    ry = rank_with_ties([p[1] for p in pairs])
    rho = _pearson(rx, ry)
    # Float noise can push |rho| a hair past 1; clamp.
    rho = max(-1.0, min(1.0, rho))

    p_value: float | None
    if n < 4:
        p_value = None
    elif abs(rho) == 1.0:
        p_value = 0.0
    else:
        t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
        p_value = 2.0 * float(stdtr(n - 2, -abs(t)))
    return CorrelationResult(rho=rho, p_value=p_value, n=n)


def compare_categories(
    index: CorpusIndex,
    matcher_a: Matcher,
    a_id: int,
    matcher_b: Matcher | None = None,
    b_id: int | None = None,
) -> tuple[ProportionVector, ProportionVector, CorrelationResult]:
    """Map two categories and correlate them over mutually non-null states."""
    if matcher_b is None:
        matcher_b = matcher_a
    if b_id is None:
        b_id = a_id
    va = category_map(index, matcher_a, a_id)
    vb = category_map(index, matcher_b, b_id)
    return va, vb, spearman(va.values, vb.values)


def correlation_extremes(
    index: CorpusIndex,
    matcher: Matcher,
    k: int = 3,
) -> ExtremesReport:
    """The k most and least correlated category pairs of one lexicon.

    Pairs whose correlation is undefined (zero rank variance) or lacks
    enough paired states are excluded and counted. Ties on rho break by
    pair name.
    """
    categories = sorted(matcher.lexicon.categories, key=lambda c: c.name)
    if len(categories) < 2:
        raise InsufficientDataError("need at least 2 categories")
    maps = {c.id: category_map(index, matcher, c.id) for c in categories}

    reports: list[CategoryPairReport] = []
    skipped = 0
    for ca, cb in combinations(categories, 2):
        try:
            result = spearman(maps[ca.id].values, maps[cb.id].values)
        except (UndefinedCorrelationError, InsufficientDataError):
            skipped += 1
            continue
        pair = tuple(sorted((ca.name, cb.name)))
        reports.append(CategoryPairReport(pair=pair, result=result))
    if not reports:
        raise InsufficientDataError("no category pair has a defined correlation")

    top = sorted(reports, key=lambda r: (-r.result.rho, r.pair))[:k]
    bottom = sorted(reports, key=lambda r: (r.result.rho, r.pair))[:k]
    return ExtremesReport(top=tuple(top), bottom=tuple(bottom), skipped_undefined=skipped)


def read_state_vector_csv(text: str) -> list[float | None]:
    """Parse a ``usps,value`` CSV into a 50-slot vector (None = missing).

    An optional ``usps,value`` header line is tolerated. Unknown codes,
    duplicate rows, and unparseable values are format errors.
    """
    values: list[float | None] = [None] * N_STATES
    seen: set[int] = set()
    rows = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if lineno == 1 and parts[0].lower() == "usps":
            continue
        if len(parts) != 2:
            raise ExternalVectorError(f"line {lineno}: expected 'usps,value'")
        state = by_usps(parts[0])
        if state is None:
            raise ExternalVectorError(f"line {lineno}: unknown state {parts[0]!r}")
        if state.index in seen:
            raise ExternalVectorError(f"line {lineno}: duplicate state {state.usps}")
        seen.add(state.index)
        if parts[1] == "":
            values[state.index] = None
        else:
            try:
                values[state.index] = float(parts[1])
            except ValueError:
                raise ExternalVectorError(
                    f"line {lineno}: bad value {parts[1]!r}"
                ) from None
        rows += 1
    if rows == 0:
        raise ExternalVectorError("no data rows")
    return values
