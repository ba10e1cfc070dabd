"""Turn a CorpusIndex into per-state map vectors.

Map values are proportions: instance = token for word/category maps,
instance = user for facet maps. A state with a zero denominator gets
``None`` ("no data"), never 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import NotFoundError
from .index import CorpusIndex
from .lexicon import Matcher
from .states import N_STATES, StateId, by_index

GENDERS = ("male", "female")


@dataclass(frozen=True)
class ProportionVector:
    """50 per-state proportions (None where the denominator is zero)."""

    values: tuple[float | None, ...]
    denominator: tuple[int, ...]


@dataclass(frozen=True)
class CityDot:
    city: str
    state: StateId
    count: int


def _proportions(numerator: list[int], denominator: list[int]) -> ProportionVector:
    values = tuple(
        (n / d) if d else None for n, d in zip(numerator, denominator)
    )
    return ProportionVector(values=values, denominator=tuple(denominator))


def word_map(index: CorpusIndex, word: str) -> ProportionVector:
    """Relative frequency of one word per state.

    Unknown words produce an all-zero map (zero count over each state's
    token total), not an error.
    """
    folded = word.casefold()
    return _proportions(index.word_vector(folded), index.token_totals)


# Resolved category -> vocabulary words, keyed by (lexicon, vocabulary)
# content hashes so lexicons can be swapped without rebuilding the index.
# Concurrent fills recompute identical values; last writer wins.
_resolution_cache: dict[tuple[str, str], dict[int, tuple[str, ...]]] = {}
_cache_lock = threading.Lock()


def resolve_categories(index: CorpusIndex, matcher: Matcher) -> dict[int, tuple[str, ...]]:
    """Map each category id to the indexed words it matches (cached)."""
    key = (matcher.lexicon.content_hash(), index.vocabulary_hash())
    cached = _resolution_cache.get(key)
    if cached is not None:
        return cached
    resolved: dict[int, list[str]] = {c.id: [] for c in matcher.lexicon.categories}
    for word in index.vocabulary():
        for cat_id in matcher.match(word):
            resolved[cat_id].append(word)
    frozen = {cid: tuple(sorted(words)) for cid, words in resolved.items()}
    with _cache_lock:
        _resolution_cache[key] = frozen
    return frozen


def category_map(index: CorpusIndex, matcher: Matcher, category_id: int) -> ProportionVector:
    """Relative frequency of a whole category per state.

    The numerator sums the counts of every indexed word the category's
    patterns (exact or prefix) match; the denominator is the state token
    total.
    """
    if matcher.lexicon.category_by_id(category_id) is None:
        raise NotFoundError(
            f"no category {category_id} in lexicon {matcher.lexicon.name!r}"
        )
    words = resolve_categories(index, matcher)[category_id]
    numerator = [0] * N_STATES
    for word in words:
        for s, n in enumerate(index.word_vector(word)):
            numerator[s] += n
    return _proportions(numerator, index.token_totals)


def facet_map(index: CorpusIndex, kind: str, value: str) -> ProportionVector:
    """Per-state share of users matching a profile facet.

    Gender shares divide by users who reported a gender; industry shares
    divide by all users in the state.
    """
    if kind == "gender":
        if value not in GENDERS:
            raise NotFoundError(f"unknown gender {value!r}")
        counts = index.gender_male if value == "male" else index.gender_female
        reported = [index.gender_reported(s) for s in range(N_STATES)]
        return _proportions(list(counts), reported)
    if kind == "industry":
        vec = index.industry_counts.get(value)
        if vec is None:
            raise NotFoundError(f"unknown industry {value!r}")
        return _proportions(list(vec), list(index.user_counts))
    raise ValueError(f"facet kind must be 'gender' or 'industry', got {kind!r}")


def density_map(index: CorpusIndex) -> list[int]:
    """User counts per state, verbatim."""
    return list(index.user_counts)


def city_density(index: CorpusIndex, min_count: int = 100) -> list[CityDot]:
    """Cities with at least ``min_count`` users, largest first.

    Ties break by city name (then state code); (city, state) pairs are
    distinct keys, so Portland OR and Portland ME never pool.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    dots = [
        CityDot(city=city, state=by_index(s), count=n)
        for (city, s), n in index.city_counts.items()
        if n >= min_count
    ]
    dots.sort(key=lambda d: (-d.count, d.city, d.state.usps))
    return dots
