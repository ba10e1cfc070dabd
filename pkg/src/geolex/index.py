"""The CorpusIndex: every per-state count structure, built once, read often.

Internally word counts are stored transposed — one Counter per state —
because that makes the build loop a single C-level ``Counter.update`` per
post. The logical view (word -> 50-vector) is exposed through
``word_vector``/``iter_word_counts``.

Persistence is a versioned, checksummed binary container; the byte-level
layout lives in docs/index-format.md.
"""

from __future__ import annotations

import hashlib
import struct
from array import array
from collections import Counter
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorruptIndexError, IndexBuildError, UnsupportedVersionError
from .ingest import Profile, TokenizedPost
from .states import N_STATES

MAX_TOKEN_LEN = 64

MAGIC = b"GLXI"
FORMAT_VERSION = 1

WARN_UNKNOWN_BLOG = "posts_unknown_blog"
WARN_DUPLICATE_POST = "duplicate_posts"
WARN_TRUNCATED = "truncated_tokens"


class CorpusIndex:
    """Immutable-after-build aggregate of all per-state counts."""

    def __init__(self):
        self.token_totals: list[int] = [0] * N_STATES
        self.user_counts: list[int] = [0] * N_STATES
        self.gender_male: list[int] = [0] * N_STATES
        self.gender_female: list[int] = [0] * N_STATES
        self.industry_counts: dict[str, list[int]] = {}
        self.city_counts: dict[tuple[str, int], int] = {}
        self.user_ids: set[str] = set()
        self.doc_count: int = 0
        self.warnings: dict[str, int] = {}
        self._state_words: list[Counter[str]] = [Counter() for _ in range(N_STATES)]
        self._vocab_hash: str | None = None

    # -- logical word_counts view ------------------------------------------

    def word_vector(self, word: str) -> list[int]:
        """Counts of one word across the 50 states (zeros where absent)."""
        return [self._state_words[s].get(word, 0) for s in range(N_STATES)]

    def vocabulary(self) -> set[str]:
        vocab: set[str] = set()
        for counter in self._state_words:
            vocab.update(counter.keys())
        return vocab

    def iter_word_counts(self) -> Iterator[tuple[str, list[int]]]:
        for word in sorted(self.vocabulary()):
            yield word, self.word_vector(word)

    def gender_reported(self, state_index: int) -> int:
        return self.gender_male[state_index] + self.gender_female[state_index]

    def vocabulary_hash(self) -> str:
        """Digest of the sorted vocabulary, cached (the index is immutable)."""
        if self._vocab_hash is None:
            h = hashlib.sha256()
            for word in sorted(self.vocabulary()):
                h.update(word.encode("utf-8"))
                h.update(b"\x00")
            self._vocab_hash = h.hexdigest()
        return self._vocab_hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorpusIndex):
            return NotImplemented
        return (
            self.token_totals == other.token_totals
            and self.user_counts == other.user_counts
            and self.gender_male == other.gender_male
            and self.gender_female == other.gender_female
            and self.industry_counts == other.industry_counts
            and self.city_counts == other.city_counts
            and self.user_ids == other.user_ids
            and self.doc_count == other.doc_count
            and self.warnings == other.warnings
            and self._state_words == other._state_words
        )

    def _warn(self, key: str, n: int = 1) -> None:
        self.warnings[key] = self.warnings.get(key, 0) + n


def build_index(
    profiles: Iterable[Profile],
    posts: Iterable[TokenizedPost],
    max_token_len: int = MAX_TOKEN_LEN,
) -> CorpusIndex:
    """Aggregate normalized profiles and tokenized posts into a CorpusIndex.

    Each profile counts once (users, gender, industry, city) no matter how
    many blogs it owns; each post's tokens count toward the owning
    profile's state. Posts with unknown blog ids and duplicate
    (blog_id, post_id) pairs are skipped under a warning counter; a
    duplicate user_id or a blog claimed by two profiles is a hard error.
    Tokens longer than ``max_token_len`` are truncated and counted.
    """
    idx = CorpusIndex()
    blog_state: dict[str, int] = {}

    for p in profiles:
        if p.user_id in idx.user_ids:
            raise IndexBuildError(f"duplicate user id {p.user_id!r}")
        idx.user_ids.add(p.user_id)
        s = p.state.index
        idx.user_counts[s] += 1
        if p.gender == "male":
            idx.gender_male[s] += 1
        elif p.gender == "female":
            idx.gender_female[s] += 1
        if p.industry:
            vec = idx.industry_counts.get(p.industry)
            if vec is None:
                vec = idx.industry_counts[p.industry] = [0] * N_STATES
            vec[s] += 1
        if p.city:
            key = (p.city, s)
            idx.city_counts[key] = idx.city_counts.get(key, 0) + 1
        for blog_id in p.blog_ids:
            if blog_id in blog_state:
                raise IndexBuildError(f"blog {blog_id!r} claimed by two profiles")
            blog_state[blog_id] = s

    seen_posts: set[tuple[str, str]] = set()
    for post in posts:
        s = blog_state.get(post.blog_id)
        if s is None:
            idx._warn(WARN_UNKNOWN_BLOG)
            continue
        key = (post.blog_id, post.post_id)
        if key in seen_posts:
            idx._warn(WARN_DUPLICATE_POST)
            continue
        seen_posts.add(key)
        tokens = post.tokens
        long_tokens = sum(1 for t in tokens if len(t) > max_token_len)
        if long_tokens:
            idx._warn(WARN_TRUNCATED, long_tokens)
            tokens = [t[:max_token_len] for t in tokens]
        idx._state_words[s].update(tokens)
        idx.token_totals[s] += len(tokens)
        idx.doc_count += 1

    return idx


def merge(a: CorpusIndex, b: CorpusIndex) -> CorpusIndex:
    """Elementwise sum of two indexes built from disjoint profile sets."""
    overlap = a.user_ids & b.user_ids
    if overlap:
        sample = sorted(overlap)[:3]
        raise IndexBuildError(f"indexes share user ids (e.g. {sample})")
    out = CorpusIndex()
    out.token_totals = [x + y for x, y in zip(a.token_totals, b.token_totals)]
    out.user_counts = [x + y for x, y in zip(a.user_counts, b.user_counts)]
    out.gender_male = [x + y for x, y in zip(a.gender_male, b.gender_male)]
    out.gender_female = [x + y for x, y in zip(a.gender_female, b.gender_female)]
    for src in (a, b):
        for label, vec in src.industry_counts.items():
            dst = out.industry_counts.get(label)
            if dst is None:
                out.industry_counts[label] = list(vec)
            else:
                for i, v in enumerate(vec):
                    dst[i] += v
        for key, n in src.city_counts.items():
            out.city_counts[key] = out.city_counts.get(key, 0) + n
        for key, n in src.warnings.items():
            out.warnings[key] = out.warnings.get(key, 0) + n
        for s in range(N_STATES):
            out._state_words[s].update(src._state_words[s])
    out.user_ids = a.user_ids | b.user_ids
    out.doc_count = a.doc_count + b.doc_count
    return out


# ----------------------------------------------------------------------------
# Persistence (format details in docs/index-format.md)

_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")


class _Writer:
    def __init__(self):
        self.parts: list[bytes] = []

    def u8(self, v: int) -> None:
        self.parts.append(bytes([v]))

    def u32(self, v: int) -> None:
        self.parts.append(_U32.pack(v))

    def u64(self, v: int) -> None:
        self.parts.append(_U64.pack(v))

    def u64s(self, values: list[int]) -> None:
        self.parts.append(array("Q", values).tobytes())

    def u32s(self, values: list[int]) -> None:
        self.parts.append(array("I", values).tobytes())

    def string(self, s: str) -> None:
        raw = s.encode("utf-8")
        self.u32(len(raw))
        self.parts.append(raw)


class _Reader:
    def __init__(self, buf: bytes):
        self.buf = buf
        self.pos = 0

    def _take(self, n: int) -> bytes:
        end = self.pos + n
        if end > len(self.buf):
            raise CorruptIndexError("index payload truncated")
        chunk = self.buf[self.pos:end]
        self.pos = end
        return chunk

    def u8(self) -> int:
        return self._take(1)[0]

    def u32(self) -> int:
        return _U32.unpack(self._take(4))[0]

    def u64(self) -> int:
        return _U64.unpack(self._take(8))[0]

    def u64s(self, n: int) -> array:
        out = array("Q")
        out.frombytes(self._take(8 * n))
        return out

    def u32s(self, n: int) -> array:
        out = array("I")
        out.frombytes(self._take(4 * n))
        return out

    def string(self) -> str:
        n = self.u32()
        return self._take(n).decode("utf-8")


def _payload(index: CorpusIndex) -> bytes:
    w = _Writer()
    w.u64(index.doc_count)
    w.u64s(index.token_totals)
    w.u64s(index.user_counts)
    w.u64s(index.gender_male)
    w.u64s(index.gender_female)

    vocab = sorted(index.vocabulary())
    word_id = {word: i for i, word in enumerate(vocab)}
    w.u32(len(vocab))
    for word in vocab:
        w.string(word)
    for s in range(N_STATES):
        counter = index._state_words[s]
        ids = sorted(word_id[word] for word in counter)
        w.u32(len(ids))
        w.u32s(ids)
        w.u64s([counter[vocab[i]] for i in ids])

    w.u32(len(index.industry_counts))
    for label in sorted(index.industry_counts):
        w.string(label)
        w.u64s(index.industry_counts[label])

    w.u32(len(index.city_counts))
    for (city, s), n in sorted(index.city_counts.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        w.string(city)
        w.u8(s)
        w.u64(n)

    w.u32(len(index.user_ids))
    for uid in sorted(index.user_ids):
        w.string(uid)

    w.u32(len(index.warnings))
    for key in sorted(index.warnings):
        w.string(key)
        w.u64(index.warnings[key])

    return b"".join(w.parts)


def save_index(index: CorpusIndex, path: str | Path) -> None:
    """Write the index to disk; load_index(save_index(x)) == x bit-exactly."""
    payload = _payload(index)
    digest = hashlib.sha256(payload).digest()
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(_U32.pack(FORMAT_VERSION))
        fh.write(_U64.pack(len(payload)))
        fh.write(payload)
        fh.write(digest)


def load_index(path: str | Path) -> CorpusIndex:
    """Read an index file, verifying its version tag and checksum."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < 16 or blob[:4] != MAGIC:
        raise CorruptIndexError(f"{path}: not a geolex index file")
    version = _U32.unpack_from(blob, 4)[0]
    if version != FORMAT_VERSION:
        raise UnsupportedVersionError(
            f"{path}: format version {version}, this build reads {FORMAT_VERSION}"
        )
    size = _U64.unpack_from(blob, 8)[0]
    if len(blob) != 16 + size + 32:
        raise CorruptIndexError(f"{path}: truncated or oversized index file")
    payload = blob[16:16 + size]
    digest = blob[16 + size:]
    if hashlib.sha256(payload).digest() != digest:
        raise CorruptIndexError(f"{path}: checksum mismatch")

    r = _Reader(payload)
    idx = CorpusIndex()
    idx.doc_count = r.u64()
    idx.token_totals = list(r.u64s(N_STATES))
    idx.user_counts = list(r.u64s(N_STATES))
    idx.gender_male = list(r.u64s(N_STATES))
    idx.gender_female = list(r.u64s(N_STATES))

    n_vocab = r.u32()
    vocab = [r.string() for _ in range(n_vocab)]
    for s in range(N_STATES):
        m = r.u32()
        ids = r.u32s(m)
        counts = r.u64s(m)
        counter = idx._state_words[s]
        for i in range(m):
            counter[vocab[ids[i]]] = counts[i]

    for _ in range(r.u32()):
        label = r.string()
        idx.industry_counts[label] = list(r.u64s(N_STATES))

    for _ in range(r.u32()):
        city = r.string()
        s = r.u8()
        idx.city_counts[(city, s)] = r.u64()

    idx.user_ids = {r.string() for _ in range(r.u32())}

    for _ in range(r.u32()):
        key = r.string()
        idx.warnings[key] = r.u64()

    if r.pos != len(payload):
        raise CorruptIndexError(f"{path}: trailing bytes in payload")
    return idx
