"""Category lexicons and the compiled token matcher.

Two on-disk formats are understood: the LIWC-style ``.dic`` container
(header block of ``id name`` lines delimited by ``%`` lines, then
``stem<TAB>id[<TAB>id...]`` word lines) and plain theme lists (one word per
line, ``#`` comments). A trailing ``*`` on a stem makes it a prefix pattern;
wildcards anywhere else are rejected.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field

from .errors import LexiconFormatError

EXACT = "exact"
PREFIX = "prefix"


@dataclass(frozen=True, order=True)
class Pattern:
    kind: str  # EXACT or PREFIX
    stem: str

    def source_form(self) -> str:
        return self.stem + "*" if self.kind == PREFIX else self.stem


@dataclass(frozen=True)
class Category:
    id: int
    name: str
    patterns: frozenset[Pattern]


@dataclass(frozen=True)
class Lexicon:
    name: str
    categories: tuple[Category, ...] = field(default_factory=tuple)

    def category_by_id(self, category_id: int) -> Category | None:
        for c in self.categories:
            if c.id == category_id:
                return c
        return None

    def category_by_name(self, name: str) -> Category | None:
        for c in self.categories:
            if c.name == name:
                return c
        return None

    def content_hash(self) -> str:
        """Stable digest of the lexicon contents (used as a cache key)."""
        h = hashlib.sha256()
        h.update(self.name.encode("utf-8"))
        for c in sorted(self.categories, key=lambda c: c.id):
            h.update(f"\x1f{c.id}\x1e{c.name}".encode("utf-8"))
            for p in sorted(c.patterns):
                h.update(f"\x1d{p.kind}\x1c{p.stem}".encode("utf-8"))
        return h.hexdigest()


def _parse_stem(token: str, lineno: int) -> Pattern:
    stem = token.casefold()
    kind = EXACT
    if stem.endswith("*"):
        kind = PREFIX
        stem = stem[:-1]
    if not stem:
        raise LexiconFormatError("empty word stem", lineno)
    if "*" in stem:
        raise LexiconFormatError(f"non-suffix wildcard in {token!r}", lineno)
    if any(ch.isspace() for ch in stem):
        raise LexiconFormatError(f"multi-word entry {token!r}", lineno)
    return Pattern(kind, stem)


# Word lines separate fields with tabs or runs of 2+ spaces; a single space
# inside a field therefore means a (rejected) multi-word entry.
_FIELD_SEP = re.compile(r"\t+|  +")


def parse_dic(text: str, name: str = "liwc") -> Lexicon:
    """Parse a LIWC-style .dic lexicon.

    Raises LexiconFormatError (with a line number) on duplicate category
    ids or names, word lines referencing unknown ids, wildcard misuse,
    multi-word entries, categories left without patterns, or an empty
    lexicon.
    """
    lines = text.lstrip("﻿").split("\n")
    names_by_id: dict[int, str] = {}
    patterns_by_id: dict[int, set[Pattern]] = {}

    i = 0
    n = len(lines)
    while i < n and not lines[i].strip():
        i += 1
    if i >= n or lines[i].strip() != "%":
        raise LexiconFormatError("missing '%' header delimiter", i + 1)
    i += 1

    # Header block: "id name" until the closing '%'.
    closed = False
    while i < n:
        line = lines[i].strip()
        i += 1
        if not line:
            continue
        if line == "%":
            closed = True
            break
        fields = line.split(None, 1)
        if len(fields) != 2 or not fields[0].isdigit():
            raise LexiconFormatError(f"bad header line {line!r}", i)
        cat_id = int(fields[0])
        cat_name = " ".join(fields[1].split())
        if cat_id in names_by_id:
            raise LexiconFormatError(f"duplicate category id {cat_id}", i)
        if cat_name in names_by_id.values():
            raise LexiconFormatError(f"duplicate category name {cat_name!r}", i)
        names_by_id[cat_id] = cat_name
        patterns_by_id[cat_id] = set()
    if not closed:
        raise LexiconFormatError("header block never closed with '%'", n)

    # Word lines.
    while i < n:
        line = lines[i].rstrip()
        i += 1
        if not line.strip():
            continue
        fields = [f.strip() for f in _FIELD_SEP.split(line.strip()) if f.strip()]
        if len(fields) < 2:
            raise LexiconFormatError(f"word line without category ids: {line!r}", i)
        pattern = _parse_stem(fields[0], i)
        for f in fields[1:]:
            if not f.isdigit():
                raise LexiconFormatError(f"bad category id {f!r}", i)
            cat_id = int(f)
            if cat_id not in names_by_id:
                raise LexiconFormatError(f"unknown category id {cat_id}", i)
            # Duplicate ids on one line collapse silently: set semantics.
            patterns_by_id[cat_id].add(pattern)

    if not names_by_id:
        raise LexiconFormatError("empty lexicon: no categories")
    empty = [cid for cid, pats in patterns_by_id.items() if not pats]
    if empty:
        raise LexiconFormatError(
            "categories without any word: "
            + ", ".join(f"{cid} ({names_by_id[cid]})" for cid in sorted(empty))
        )

    categories = tuple(
        Category(cid, names_by_id[cid], frozenset(patterns_by_id[cid]))
        for cid in sorted(names_by_id)
    )
    return Lexicon(name=name, categories=categories)


def parse_theme_list(text: str, name: str, category_id: int = 1) -> Category:
    """Parse a plain word list (one entry per line, '#' comments) into a category."""
    patterns: set[Pattern] = set()
    for lineno, line in enumerate(text.lstrip("﻿").split("\n"), 1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        patterns.add(_parse_stem(entry, lineno))
    if not patterns:
        raise LexiconFormatError(f"theme list {name!r} is empty")
    return Category(category_id, name, frozenset(patterns))


def serialize_dic(lexicon: Lexicon) -> str:
    """Write a lexicon back out in .dic form (parse_dic round-trips it)."""
    out = ["%"]
    for c in sorted(lexicon.categories, key=lambda c: c.id):
        out.append(f"{c.id}\t{c.name}")
    out.append("%")
    rows: dict[str, set[int]] = {}
    for c in lexicon.categories:
        for p in c.patterns:
            rows.setdefault(p.source_form(), set()).add(c.id)
    for form in sorted(rows):
        ids = "\t".join(str(i) for i in sorted(rows[form]))
        out.append(f"{form}\t{ids}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# Matcher

class _Node:
    __slots__ = ("children", "exact", "prefix")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.exact: frozenset[int] | None = None
        self.prefix: frozenset[int] | None = None


class Matcher:
    """Prefix tree over all pattern stems of one lexicon.

    Matching a token returns the set of category ids with at least one
    matching pattern; multiple hits within one category collapse. Immutable
    after compile, so concurrent matching is safe.
    """

    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon
        self._root = _Node()
        exact: dict[str, set[int]] = {}
        prefix: dict[str, set[int]] = {}
        for c in lexicon.categories:
            for p in c.patterns:
                table = exact if p.kind == EXACT else prefix
                table.setdefault(p.stem, set()).add(c.id)
        for stem, ids in exact.items():
            self._insert(stem).exact = frozenset(ids)
        for stem, ids in prefix.items():
            node = self._insert(stem)
            node.prefix = frozenset(ids)

    def _insert(self, stem: str) -> _Node:
        node = self._root
        for ch in stem:
            nxt = node.children.get(ch)
            if nxt is None:
                nxt = _Node()
                node.children[ch] = nxt
            node = nxt
        return node

    def match(self, token: str) -> frozenset[int]:
        """Category ids whose patterns match the (lowercase) token."""
        hits: set[int] | None = None
        node = self._root
        for i, ch in enumerate(token):
            node = node.children.get(ch)
            if node is None:
                break
            if node.prefix is not None:
                hits = set(node.prefix) if hits is None else hits | node.prefix
            if node.exact is not None and i == len(token) - 1:
                hits = set(node.exact) if hits is None else hits | node.exact
        return frozenset(hits) if hits else frozenset()


def compile_matcher(lexicon: Lexicon) -> Matcher:
    """Compile a lexicon into its token matcher."""
    return Matcher(lexicon)


def match_token(matcher: Matcher, token: str) -> frozenset[int]:
    """Functional form of Matcher.match."""
    return matcher.match(token)


def load_lexicon_dir(path) -> dict[str, Matcher]:
    """Load every lexicon under a directory and compile matchers.

    ``*.dic`` files each become a lexicon named after the file stem. All
    ``*.txt`` theme lists combine into one lexicon named "themes", one
    category per file (stem with underscores as spaces, title-cased), ids
    assigned in filename order.
    """
    from pathlib import Path

    root = Path(path)
    matchers: dict[str, Matcher] = {}
    for dic_path in sorted(root.glob("*.dic")):
        lex = parse_dic(dic_path.read_text(encoding="utf-8"), name=dic_path.stem)
        matchers[lex.name] = Matcher(lex)

    theme_files = sorted(root.glob("*.txt"))
    if theme_files:
        categories = []
        for i, theme_path in enumerate(theme_files, 1):
            title = theme_path.stem.replace("_", " ").strip().title()
            categories.append(
                parse_theme_list(theme_path.read_text(encoding="utf-8"), title, i)
            )
        themes = Lexicon(name="themes", categories=tuple(categories))
        matchers[themes.name] = Matcher(themes)
    return matchers
