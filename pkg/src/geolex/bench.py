"""Throughput benchmark: tokenize + match + count over generated text.

Measures the single-worker hot path on an already HTML-stripped corpus.
Run as ``python -m geolex.bench --size-mb 100``; the acceptance suite calls
the same functions and gates at 10 MB/s (target 50 MB/s).
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from .ingest import tokenize
from .lexicon import Category, Lexicon, Matcher, Pattern

_FILLER = (
    "the a of to and in that it is was for on are with as his they at be this "
    "have from or had by word but not what all were when your can said there "
    "use each which she how their if will other about out many then them these "
    "so some would make like him into time has look two more write go see no "
    "way could people my than first water been call who oil its now find long "
    "down day did get come made may part over new sound take only little work "
    "know place year live me back give most very after thing our just name good "
    "sentence man think say great where help through much before line right too "
    "mean old any same tell boy follow came want show also around form three "
    "small set put end does another well large must big even such because turn "
    "here why ask went men read need land different home us move try kind hand "
    "picture again change off play spell air away animal house point page letter "
    "mother answer found study still learn should america world lake maui happy "
    "dollar payment church work job money celebrate cheerful god bible hard"
).split()


def benchmark_lexicon(n_categories: int = 12, seed: int = 7) -> Lexicon:
    """A synthetic lexicon drawing stems from the generator vocabulary."""
    rng = random.Random(seed)
    cats = []
    for cid in range(1, n_categories + 1):
        stems = rng.sample(_FILLER, 18)
        patterns = set()
        for i, stem in enumerate(stems):
            kind = "prefix" if i % 3 == 0 and len(stem) > 3 else "exact"
            patterns.add(Pattern(kind, stem if kind == "exact" else stem[:3]))
        cats.append(Category(cid, f"cat{cid:02d}", frozenset(patterns)))
    return Lexicon(name="bench", categories=tuple(cats))


def generate_chunks(size_mb: float = 100.0, seed: int = 1234,
                    chunk_words: int = 200_000) -> list[str]:
    """Plain-text corpus chunks totaling roughly size_mb megabytes."""
    rng = random.Random(seed)
    target = int(size_mb * 1_000_000)
    chunks: list[str] = []
    produced = 0
    while produced < target:
        words = rng.choices(_FILLER, k=chunk_words)
        # Sprinkle sentence punctuation so tokenization has work to do.
        for i in range(0, len(words), 13):
            words[i] = words[i].capitalize()
        text = " ".join(words) + ".\n"
        chunks.append(text)
        produced += len(text)
    return chunks


@dataclass(frozen=True)
class BenchResult:
    bytes_processed: int
    seconds: float
    tokens: int
    category_hits: int

    @property
    def mb_per_s(self) -> float:
        return self.bytes_processed / 1_000_000 / self.seconds


def run_benchmark(chunks: list[str], matcher: Matcher) -> BenchResult:
    """Tokenize, lexicon-match, and count every chunk; return throughput."""
    word_counts: Counter[str] = Counter()
    cat_counts: Counter[int] = Counter()
    match_memo: dict[str, frozenset[int]] = {}
    match = matcher.match
    n_tokens = 0
    n_bytes = sum(len(c.encode("utf-8")) for c in chunks)

    start = time.perf_counter()
    for chunk in chunks:
        tokens = tokenize(chunk)
        n_tokens += len(tokens)
        tc = Counter(tokens)
        word_counts.update(tc)
        for word, n in tc.items():
            cats = match_memo.get(word)
            if cats is None:
                cats = match_memo[word] = match(word)
            for cid in cats:
                cat_counts[cid] += n
    elapsed = time.perf_counter() - start

    return BenchResult(
        bytes_processed=n_bytes,
        seconds=elapsed,
        tokens=n_tokens,
        category_hits=sum(cat_counts.values()),
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="geolex-bench", description=__doc__)
    parser.add_argument("--size-mb", type=float, default=100.0)
    parser.add_argument("--seed", type=int, default=1234)
    args = parser.parse_args(argv)

    matcher = Matcher(benchmark_lexicon())
    chunks = generate_chunks(args.size_mb, args.seed)
    result = run_benchmark(chunks, matcher)
    print(
        f"tokenize+match+count: {result.bytes_processed / 1_000_000:.1f} MB in "
        f"{result.seconds:.2f} s = {result.mb_per_s:.1f} MB/s "
        f"({result.tokens} tokens, {result.category_hits} category hits)"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
