"""Command-line front door: ingest, map, correlate, extremes, serve, states.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analytics, stats
from .choropleth import DEFAULT_BINS, bin_quantile, to_csv, to_svg
from .errors import GeolexError, NotFoundError
from .index import CorpusIndex, build_index, load_index, merge, save_index
from .ingest import iter_tokenized_posts, load_profiles
from .lexicon import Matcher, load_lexicon_dir
from .server import create_app
from .states import states_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # data errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _usage_error(parser: argparse.ArgumentParser, message: str):
    parser.print_usage(sys.stderr)
    print(f"{parser.prog}: error: {message}", file=sys.stderr)
    raise SystemExit(EXIT_USAGE)


def _write_output(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_matchers(parser, args) -> dict[str, Matcher]:
    if not getattr(args, "lexicons", None):
        _usage_error(parser, "this selection requires --lexicons DIR")
    return load_lexicon_dir(args.lexicons)


def _find_category(matchers: dict[str, Matcher], selector: str):
    if ":" not in selector:
        raise NotFoundError(f"selector {selector!r} must be 'lexicon:category'")
    lex_name, cat_name = selector.split(":", 1)
    m = matchers.get(lex_name)
    if m is None:
        raise NotFoundError(f"unknown lexicon {lex_name!r}")
    c = m.lexicon.category_by_name(cat_name)
    if c is None:
        raise NotFoundError(f"no category {cat_name!r} in lexicon {lex_name!r}")
    return m, c


def _corr_json(result: stats.CorrelationResult) -> str:
    return json.dumps(
        {"rho": result.rho, "p_value": result.p_value, "n": result.n}
    ) + "\n"


# ----------------------------------------------------------------------------
# Commands

def _cmd_ingest(parser, args) -> int:
    profiles, rejections = load_profiles(args.profiles)
    for r in rejections[:20]:
        print(f"rejected {r.user_id}: {r.reason}: {r.location_text!r}", file=sys.stderr)
    if len(rejections) > 20:
        print(f"... and {len(rejections) - 20} more rejections", file=sys.stderr)
    if args.rejects:
        with open(args.rejects, "w", encoding="utf-8") as fh:
            for r in rejections:
                fh.write(json.dumps({
                    "user_id": r.user_id,
                    "location": r.location_text,
                    "reason": r.reason,
                }) + "\n")

    shards = args.shards
    if shards <= 1:
        index = build_index(profiles, iter_tokenized_posts(args.posts))
    else:
        # Round-robin profiles over shards; each shard re-reads the posts
        # file and keeps only posts for blogs it owns. merge() restores the
        # single-pass result exactly.
        index = None
        for shard in range(shards):
            shard_profiles = profiles[shard::shards]
            blog_ids = {b for p in shard_profiles for b in p.blog_ids}
            posts = (
                p for p in iter_tokenized_posts(args.posts) if p.blog_id in blog_ids
            )
            part = build_index(shard_profiles, posts)
            index = part if index is None else merge(index, part)
        if index is None:
            index = CorpusIndex()

    save_index(index, args.out)
    print(json.dumps({
        "users": len(index.user_ids),
        "rejected": len(rejections),
        "posts": index.doc_count,
        "tokens": sum(index.token_totals),
        "warnings": index.warnings,
        "out": args.out,
    }) + "\n", end="")
    return EXIT_OK


def _cmd_map(parser, args) -> int:
    index = load_index(args.index)
    if args.word is not None:
        vector = analytics.word_map(index, args.word)
        title = f"word: {args.word.casefold()}"
    elif args.category is not None:
        matchers = _load_matchers(parser, args)
        m, c = _find_category(matchers, args.category)
        vector = analytics.category_map(index, m, c.id)
        title = f"category: {c.name}"
    else:
        if "=" not in args.facet:
            _usage_error(parser, "--facet expects kind=value, e.g. gender=female")
        kind, value = args.facet.split("=", 1)
        if kind not in ("gender", "industry"):
            _usage_error(parser, "facet kind must be 'gender' or 'industry'")
        vector = analytics.facet_map(index, kind, value)
        title = f"{kind}: {value}"

    spec = bin_quantile(vector, args.bins)
    if args.format == "csv":
        _write_output(to_csv(spec), args.out)
    elif args.format == "svg":
        _write_output(to_svg(spec, title=title), args.out)
    else:
        payload = {
            "values": list(spec.values),
            "denominator": None if spec.denominator is None else list(spec.denominator),
            "bins": list(spec.bins),
            "bin_edges": list(spec.bin_edges),
            "legend": {"min": spec.legend.min, "max": spec.legend.max,
                       "bins": spec.legend.bins},
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_correlate(parser, args) -> int:
    index = load_index(args.index)
    if args.external:
        text = Path(args.external).read_text(encoding="utf-8")
        external = stats.read_state_vector_csv(text)
        result = stats.spearman(external, analytics.density_map(index))
    else:
        matchers = _load_matchers(parser, args)
        ma, ca = _find_category(matchers, args.a)
        mb, cb = _find_category(matchers, args.b)
        _, _, result = stats.compare_categories(index, ma, ca.id, mb, cb.id)
    sys.stdout.write(_corr_json(result))
    return EXIT_OK


def _cmd_extremes(parser, args) -> int:
    index = load_index(args.index)
    matchers = _load_matchers(parser, args)
    m = matchers.get(args.lexicon)
    if m is None:
        raise NotFoundError(f"unknown lexicon {args.lexicon!r}")
    report = stats.correlation_extremes(index, m, args.k)
    def rows(items):
        return [
            {"pair": list(r.pair), "rho": r.result.rho,
             "p_value": r.result.p_value, "n": r.result.n}
            for r in items
        ]
    sys.stdout.write(json.dumps({
        "lexicon": args.lexicon,
        "k": args.k,
        "top": rows(report.top),
        "bottom": rows(report.bottom),
        "skipped_undefined": report.skipped_undefined,
    }, indent=2) + "\n")
    return EXIT_OK


def _cmd_serve(parser, args) -> int:
    import uvicorn

    index = load_index(args.index)
    matchers = load_lexicon_dir(args.lexicons)
    port = args.port
    if port is None:
        port = int(os.environ.get("GEOLEX_PORT", "8000"))
    app = create_app(index, matchers, default_bins=args.bins, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return EXIT_OK


def _cmd_states(parser, args) -> int:
    _write_output(states_csv(), args.out)
    return EXIT_OK


# ----------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="geolex", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("ingest", help="build an index from profiles.jsonl + posts.jsonl")
    p.add_argument("--profiles", required=True)
    p.add_argument("--posts", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--rejects", help="write rejected profile records to this jsonl file")
    p.set_defaults(fn=_cmd_ingest)

    p = sub.add_parser("map", help="export one map as json, csv, or svg")
    p.add_argument("--index", required=True)
    sel = p.add_mutually_exclusive_group(required=True)
    sel.add_argument("--word")
    sel.add_argument("--category", metavar="LEXICON:CATEGORY")
    sel.add_argument("--facet", metavar="KIND=VALUE")
    p.add_argument("--lexicons", help="lexicon directory (required with --category)")
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("correlate", help="correlate two categories, or density vs an external vector")
    p.add_argument("--index", required=True)
    p.add_argument("--a", metavar="LEXICON:CATEGORY")
    p.add_argument("--b", metavar="LEXICON:CATEGORY")
    p.add_argument("--external", metavar="CSV", help="usps,value vector to correlate with user density")
    p.add_argument("--lexicons")
    p.set_defaults(fn=_cmd_correlate)

    p = sub.add_parser("extremes", help="most and least correlated category pairs")
    p.add_argument("--index", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--lexicons", required=True)
    p.set_defaults(fn=_cmd_extremes)

    p = sub.add_parser("serve", help="serve the HTTP API (and optionally the web UI)")
    p.add_argument("--index", required=True)
    p.add_argument("--lexicons", required=True)
    p.add_argument("--port", type=int, default=None,
                   help="default: $GEOLEX_PORT or 8000")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--ui-dir")
    p.set_defaults(fn=_cmd_serve)

    p = sub.add_parser("states", help="export the embedded state table as CSV")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_states)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "fn", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.fn is _cmd_correlate:
        if bool(args.external) == bool(args.a or args.b):
            _usage_error(parser, "use either --a/--b or --external")
        if not args.external and not (args.a and args.b):
            _usage_error(parser, "--a and --b must be given together")
    try:
        return args.fn(parser, args)
    except GeolexError as exc:
        print(f"geolex: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"geolex: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    raise SystemExit(main())
